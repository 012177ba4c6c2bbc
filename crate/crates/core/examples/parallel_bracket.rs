//! The same bracket with one and with several workers.
//!
//! ```text
//! cargo run --release --example parallel_bracket -- [crossings] [workers]
//! ```

use std::time::Instant;

use kbracket::gen::{random_diagram, RandomSpec};
use kbracket::{kauffman_bracket, BracketConfig};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("number")).collect();
    let n = args.first().copied().unwrap_or(14);
    let jobs = args.get(1).copied().unwrap_or(8);
    let d = random_diagram(&RandomSpec::new(n, 2, 42));
    let mut results = Vec::new();
    for j in [1, jobs] {
        let cfg = BracketConfig { jobs: j, ..BracketConfig::default() };
        let t = Instant::now();
        let r = kauffman_bracket(&d, &cfg).expect("within cap");
        println!("{j} worker(s): {:.2?}, {} complexes", t.elapsed(), r.complexes);
        results.push(r.bracket.to_string());
    }
    println!("identical: {}", results[0] == results[1]);
    println!("<D> = {}", results[0]);
}
