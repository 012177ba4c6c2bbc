//! Parse a diagram file and print its bracket.
//!
//! ```text
//! cargo run --example bracket_from_file -- fixtures/E6.diag
//! ```

use std::path::PathBuf;

use kbracket::cli::load;
use kbracket::{kauffman_bracket, BracketConfig};

fn main() {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/E6.diag"));
    let d = match load(&path) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let r = kauffman_bracket(&d, &BracketConfig::default()).expect("within cap");
    println!("{}", path.display());
    println!("  crossings {}, genus {}, g(D) = {}", r.crossings, r.genus, r.diagram_genus);
    println!("  <D> = {}", r.bracket);
    println!("  breadth {}  ({} distinct region complexes)", r.breadth, r.complexes);
}
