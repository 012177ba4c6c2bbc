//! Per-state quantities: sign sum, trivial and essential circle counts, ψ
//! and the degree range of each state term.

use kbracket::bracket::{kauffman_bracket, BracketConfig};
use kbracket::cli::load;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| format!("{}/fixtures/E6.diag", env!("CARGO_MANIFEST_DIR")));
    let d = load(path.as_ref()).expect("readable diagram");
    let cfg = BracketConfig { keep_states: true, ..BracketConfig::default() };
    let r = kauffman_bracket(&d, &cfg).expect("within cap");
    println!("{:>6} {:>5} {:>3} {:>3} {:>10} {:>6} {:>6}", "state", "sum", "sD", "p", "psi", "max", "min");
    for s in &r.states {
        let signs: String = (0..d.crossing_count()).map(|i| if s.index >> i & 1 == 1 { '-' } else { '+' }).collect();
        println!(
            "{:>6} {:>5} {:>3} {:>3} {:>10} {:>6} {:>6}",
            signs,
            s.sum,
            s.trivial,
            s.essential,
            s.psi.to_string(),
            s.max_degree.to_string(),
            s.min_degree.to_string()
        );
    }
    println!("<D> = {}", r.bracket);
}
