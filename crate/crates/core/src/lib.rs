//! Exact Kauffman brackets of framed links in `#_g(S^1 x S^2)` drawn as
//! diagrams in a disk with `g` holes.
//!
//! The disk with `g` holes is modelled as a sphere carrying `g + 1` marked
//! punctures; puncture 0 plays the role of the outer boundary. A diagram is a
//! set of connected 4-valent planar maps ("pieces") and crossingless loops,
//! each placed inside a face of another piece or at top level.
//!
//! * [`laurent`]: exact Laurent polynomials and rational functions in `A`.
//! * [`diagram`]: the diagram model, its text format, faces, homology class,
//!   simplicity and Reidemeister moves.
//! * [`resolution`]: Kauffman states, smoothing, and the region complex of
//!   the essential circles.
//! * [`shadow`]: admissible colorings and the crossingless shadow sum.
//! * [`bracket`]: the full state sum.
//! * [`tait`]: breadth identities, lemma checks and non-alternating
//!   certificates.
//! * [`gen`]: exhaustive and random diagram generation.
//! * [`cli`]: the `kbracket` command-line front end.

pub mod bracket;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod gen;
pub mod laurent;
pub mod resolution;
pub mod shadow;
pub mod tait;

pub use bracket::{kauffman_bracket, BracketConfig, BracketReport};
pub use diagram::Diagram;
pub use error::{DiagramError, Error, LaurentError, MoveError};
pub use laurent::{circ, LaurentPoly, Order, RationalFn};
pub use resolution::{KauffmanState, RegionComplex, ResolvedDiagram};
