use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("negative color {0}")]
    NegativeColor(i64),
    #[error("cannot parse polynomial `{0}`")]
    Parse(String),
}

/// Structural problems found while reading or validating a diagram.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("slot conflict: slot `{0}` is used more than once")]
    SlotConflict(String),
    #[error("dangling arc: slot `{0}` is not joined to any arc")]
    DanglingSlot(String),
    #[error("unknown slot `{0}`")]
    UnknownSlot(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("unknown piece `{0}`")]
    UnknownPiece(String),
    #[error("unknown face `{face}` in piece `{piece}`")]
    UnknownFace { piece: String, face: String },
    #[error("expected {expected} punctures, found {found}")]
    PunctureCount { expected: usize, found: usize },
    #[error("puncture {0} is placed more than once")]
    DuplicatePuncture(usize),
    #[error("piece `{0}` has no placement")]
    MissingPlacement(String),
    #[error("piece `{0}` is placed more than once")]
    DuplicatePlacement(String),
    #[error("nesting cycle through piece `{0}`")]
    NestingCycle(String),
    #[error("piece `{piece}` is not a sphere embedding: {faces} faces for {crossings} crossings")]
    NotPlanar { piece: String, faces: usize, crossings: usize },
    #[error("unsupported format version {0}")]
    Version(u32),
    #[error("genus {0} is too large (at most 63)")]
    GenusTooLarge(usize),
}

/// Reasons a Reidemeister move cannot be applied at the requested site.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("no such crossing, arc or face at the requested site: {0}")]
    NoSuchSite(String),
    #[error("R1 removal needs an empty monogon face at the crossing")]
    NotAKink,
    #[error("the move would touch a face holding punctures or nested pieces")]
    OccupiedFace,
    #[error("R2 needs two edge sides on one face of one piece")]
    NotCoFacial,
    #[error("R2 removal needs an empty bigon whose strand passes over both crossings")]
    NotABigon,
    #[error("R2 removal would disconnect the piece")]
    WouldDisconnect,
    #[error("R3 needs an empty triangle face with one strand over or under both others")]
    NotATriangle,
}

/// Errors surfaced by the bracket engine and the front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error("state does not assign crossing {0}")]
    IncompleteState(u32),
    #[error("psi routes disagree: {0}")]
    PsiMismatch(String),
    #[error("{crossings} crossings exceed the cap of {cap}")]
    CrossingCap { crossings: usize, cap: usize },
    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}
