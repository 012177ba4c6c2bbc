//! The state-sum engine against the independent evaluators.

mod common;

use common::oracle::{classical_bracket, oracle_bracket};
use kbracket::gen::{enumerate_diagrams, random_diagram, GenSpec, RandomSpec};
use kbracket::laurent::RationalFn;
use kbracket::{kauffman_bracket, BracketConfig, Diagram};
use proptest::prelude::*;

fn engine(d: &Diagram) -> RationalFn {
    kauffman_bracket(d, &BracketConfig::default()).unwrap().bracket
}

#[test]
fn census_matches_oracle() {
    for (g, n_max) in [(0, 4), (1, 3), (2, 3), (3, 2)] {
        let diagrams = enumerate_diagrams(&GenSpec::new(n_max, g)).unwrap();
        assert!(!diagrams.is_empty());
        for d in &diagrams {
            assert_eq!(engine(d), oracle_bracket(d), "g = {g}\n{}", kbracket::diagram::format::serialize(d));
        }
    }
}

#[test]
fn planar_diagrams_match_classical_sum() {
    for d in enumerate_diagrams(&GenSpec::new(4, 0)).unwrap() {
        assert_eq!(engine(&d), RationalFn::from_poly(classical_bracket(&d)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_diagrams_match_oracle(n in 0usize..=7, g in 0usize..=3, pieces in 1usize..=3, seed in any::<u64>()) {
        let d = random_diagram(&RandomSpec { crossings: n, genus: g, pieces, alternating: false, seed });
        prop_assert_eq!(engine(&d), oracle_bracket(&d));
    }
}
