//! Enumerate diagrams and tally the breadth theorem verdicts.
//!
//! ```text
//! cargo run --release --example census -- [max crossings] [genus]
//! ```

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use kbracket::bracket::{kauffman_bracket_cached, BracketCache, BracketConfig};
use kbracket::gen::{for_each_diagram, GenSpec, OverUnder, Predicate, PunctureMode};
use kbracket::tait::jones_tait_verdict;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("number")).collect();
    let mut spec = GenSpec::new(args.first().copied().unwrap_or(4), args.get(1).copied().unwrap_or(1));
    spec.over_under = OverUnder::Alternating;
    spec.punctures = PunctureMode::Distinct;
    spec.symmetric = true;
    spec.predicates = vec![Predicate::Connected, Predicate::Z2Trivial];
    let cache = BracketCache::new();
    let mut tally: BTreeMap<(usize, String), usize> = BTreeMap::new();
    for_each_diagram(&spec, |d| {
        let r = kauffman_bracket_cached(&d, &BracketConfig::default(), &cache).expect("within cap");
        let v = jones_tait_verdict(&d, &r);
        *tally.entry((d.crossing_count(), v.verdict.to_string())).or_default() += 1;
        ControlFlow::Continue(())
    })
    .expect("within cap");
    for ((n, verdict), count) in tally {
        println!("n = {n}: {count} {verdict}");
    }
    println!("{} shadow sums cached", cache.len());
}
