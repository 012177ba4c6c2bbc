use kbracket::diagram::format::{parse, serialize};
use kbracket::diagram::moves::{apply_move, legal_moves};
use kbracket::gen::{random_diagram, RandomSpec};
use kbracket::laurent::{LaurentPoly, RationalFn};
use kbracket::{kauffman_bracket, BracketConfig, Diagram};
use proptest::prelude::*;

fn diagram() -> impl Strategy<Value = Diagram> {
    (0usize..=6, 0usize..=3, 1usize..=3, any::<bool>(), any::<u64>()).prop_map(|(n, g, pieces, alternating, seed)| {
        random_diagram(&RandomSpec { crossings: n, genus: g, pieces, alternating, seed })
    })
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-8i64..=8, -5i64..=5), 0..5).prop_map(LaurentPoly::from_terms)
}

fn bracket(d: &Diagram) -> RationalFn {
    kauffman_bracket(d, &BracketConfig::default()).unwrap().bracket
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn serialization_round_trips(d in diagram()) {
        let text = serialize(&d);
        let back = parse(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert_eq!(back, d);
    }

    #[test]
    fn mirror_inverts_the_variable(d in diagram()) {
        prop_assert_eq!(bracket(&d.mirror()), bracket(&d).mirror());
    }

    #[test]
    fn homology_class_survives_moves(d in diagram(), pick in any::<prop::sample::Index>()) {
        let moves = legal_moves(&d);
        prop_assume!(!moves.is_empty());
        let after = apply_move(&d, pick.get(&moves)).unwrap();
        prop_assert_eq!(after.z2_class(), d.z2_class());
        prop_assert!(after.diagram_genus() <= d.genus());
    }

    #[test]
    fn worker_count_does_not_change_output(d in diagram(), jobs in 2usize..=4) {
        let one = kauffman_bracket(&d, &BracketConfig::default()).unwrap();
        let many = kauffman_bracket(&d, &BracketConfig { jobs, ..BracketConfig::default() }).unwrap();
        prop_assert_eq!(one.bracket.to_string(), many.bracket.to_string());
    }

    #[test]
    fn rational_field_laws(p in poly(), q in poly(), r in poly()) {
        prop_assume!(!q.is_zero());
        let a = RationalFn::from_poly(p.clone());
        let b = RationalFn::new(r.clone(), q.clone()).unwrap();
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) * &b.inv().unwrap(), a.clone());
        }
        let text = b.to_string();
        prop_assert_eq!(text.parse::<RationalFn>().unwrap(), b);
    }

    #[test]
    fn polynomial_display_parses_back(p in poly()) {
        prop_assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
    }
}
