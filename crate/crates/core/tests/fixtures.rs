mod common;

use common::{fixture, fixture_path};
use kbracket::bracket::{kauffman_bracket, state_term, BracketConfig};
use kbracket::diagram::format::{parse, serialize};
use kbracket::gen::{random_diagram, RandomSpec};
use kbracket::laurent::{LaurentPoly, RationalFn};
use kbracket::resolution::{resolve, KauffmanState};
use kbracket::shadow::{admissible_colorings, binary_coloring, psi, resolution_bracket, Psi};
use kbracket::tait::{check_jones_tait, check_lemma_bounds, Verdict};

fn bracket(name: &str) -> RationalFn {
    kauffman_bracket(&fixture(name), &BracketConfig::default()).unwrap().bracket
}

const ALL: [&str; 8] = ["E1", "E2", "E5", "E6", "unknot", "trefoil", "limacon", "random_seed1"];

#[test]
fn fixtures_round_trip_byte_stable() {
    for name in ALL {
        let d = fixture(name);
        let text = serialize(&d);
        let again = parse(&text).unwrap();
        assert_eq!(d, again, "{name}");
        assert_eq!(serialize(&again), text, "{name}");
    }
}

#[test]
fn bracket_values() {
    assert!(bracket("E1").is_zero());
    assert!(bracket("E2").is_one());
    let delta = RationalFn::from_poly(LaurentPoly::delta());
    assert_eq!(bracket("E5"), delta.inv().unwrap());
    assert_eq!(bracket("E6").to_string(), "A^-6");
    assert_eq!(bracket("unknot"), delta);
    assert_eq!(bracket("trefoil").to_string(), "A^-7 + A^-3 + A - A^9");
}

#[test]
fn breadths() {
    let b = |n: &str| kauffman_bracket(&fixture(n), &BracketConfig::default()).unwrap().breadth;
    assert_eq!(b("unknot"), 4);
    assert_eq!(b("E6"), 0);
    assert_eq!(b("E5"), -4);
    assert_eq!(b("trefoil"), 16);
}

#[test]
fn faces_and_classes() {
    let e6 = fixture("E6");
    let faces = e6.faces();
    assert_eq!(faces.faces.len(), 4);
    assert_eq!(faces.external_count(), 2);
    assert_eq!(fixture("E1").faces().faces.len(), 2);
    assert!(e6.is_alternating());
    assert!(!e6.with_overs(&[0, 1]).is_alternating());
    assert!(e6.is_connected());
    assert!(!fixture("E5").is_connected());

    assert!(!fixture("E1").z2_class().is_zero());
    assert!(fixture("E5").z2_class().is_zero());
    assert_eq!(fixture("E5").diagram_genus(), 2);
    assert_eq!(fixture("E1").diagram_genus(), 1);
}

#[test]
fn simplicity_and_adequacy() {
    let e6 = fixture("E6").simplicity();
    assert_eq!(e6.k(), 2);
    assert!(!e6.is_simple());
    let trefoil = fixture("trefoil");
    assert!(trefoil.simplicity().is_simple());
    assert_eq!(trefoil.adequacy(), (true, true));
    // s- of the clasp caps both strands off; every flip merges the two caps
    assert_eq!(fixture("E6").adequacy(), (false, true));
    assert_eq!(fixture("unknot").adequacy(), (true, true));
}

#[test]
fn clasp_resolutions() {
    let d = fixture("E6");
    let plus = resolve(&d, &KauffmanState::plus(2)).unwrap();
    assert_eq!((plus.trivial_count, plus.essential_count), (0, 2));
    let mixed = resolve(&d, &KauffmanState::from_signs(vec![1, -1])).unwrap();
    assert_eq!((mixed.trivial_count, mixed.essential_count), (1, 0));
    assert_eq!(state_term(&d, &KauffmanState::plus(2)).unwrap().to_string(), "A^2");
}

#[test]
fn region_complexes_of_loop_fixtures() {
    let e5 = resolve(&fixture("E5"), &KauffmanState::plus(0)).unwrap().region_complex();
    assert_eq!(e5.regions.len(), 4);
    assert_eq!(e5.edges.len(), 3);
    assert!(e5.regions.iter().any(|r| !r.external && r.chi == -1));
    assert_eq!(e5.phi_counts().into_iter().collect::<Vec<_>>(), vec![(2, 1)]);
    assert_eq!(psi(&e5).unwrap(), Psi::Defined(-1));
    assert!(binary_coloring(&e5).is_some());

    let e2 = resolve(&fixture("E2"), &KauffmanState::plus(0)).unwrap().region_complex();
    assert_eq!(e2.phi_counts().into_iter().collect::<Vec<_>>(), vec![(1, 1)]);
    assert_eq!(admissible_colorings(&e2).len(), 1);
    assert_eq!(psi(&e2).unwrap(), Psi::Defined(0));

    let e1 = resolve(&fixture("E1"), &KauffmanState::plus(0)).unwrap().region_complex();
    assert!(admissible_colorings(&e1).is_empty());
    assert!(binary_coloring(&e1).is_none());
    assert!(resolution_bracket(&e1).is_zero());
    assert_eq!(psi(&e1).unwrap(), Psi::Undefined);
}

#[test]
fn theorem_verdicts() {
    let t = check_jones_tait(&fixture("trefoil")).unwrap();
    assert_eq!((t.verdict, t.expected, t.actual), (Verdict::Pass, 16, 16));
    let t = check_jones_tait(&fixture("E6")).unwrap();
    assert_eq!((t.verdict, t.expected, t.actual, t.hypotheses.k), (Verdict::Pass, 0, 0, 2));
    assert_eq!(check_jones_tait(&fixture("E5")).unwrap().verdict, Verdict::Inapplicable);

    let l = check_lemma_bounds(&fixture("E6")).unwrap();
    assert_eq!((l.ineq1.breadth, l.ineq1.bound), (0, Some(8)));
    assert!(l.consistent());
}

#[test]
fn seeded_random_fixture_is_reproducible() {
    let d = random_diagram(&RandomSpec::new(4, 1, 1));
    let text = std::fs::read_to_string(fixture_path("random_seed1")).unwrap();
    assert_eq!(serialize(&d), text);
}
