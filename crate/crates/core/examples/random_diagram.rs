//! Reproducible random diagrams.
//!
//! ```text
//! cargo run --example random_diagram -- [crossings] [genus] [seed] [pieces]
//! ```
//! Prints the diagram in the text format followed by its bracket.

use kbracket::diagram::format::serialize;
use kbracket::gen::{random_diagram, RandomSpec};
use kbracket::{kauffman_bracket, BracketConfig};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let arg = |i: usize, default: u64| args.get(i).copied().unwrap_or(default);
    let mut spec = RandomSpec::new(arg(0, 4) as usize, arg(1, 1) as usize, arg(2, 1));
    spec.pieces = arg(3, 1) as usize;
    let d = random_diagram(&spec);
    print!("{}", serialize(&d));
    let r = kauffman_bracket(&d, &BracketConfig::default()).expect("within cap");
    eprintln!("<D> = {}  breadth {}  Z/2 class {}", r.bracket, r.breadth, d.z2_class());
}
