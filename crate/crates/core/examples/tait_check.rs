//! Breadth theorem verdict, lemma bounds and non-alternating certificates
//! for the shipped fixtures.

use kbracket::bracket::{kauffman_bracket, BracketConfig};
use kbracket::cli::load;
use kbracket::tait::{crossing_lower_bound, jones_tait_verdict, lemma_bounds, non_alternating_certificate, LinkFlags};

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    for name in ["trefoil", "E6", "limacon", "E5", "random_seed1"] {
        let d = load(format!("{dir}/{name}.diag").as_ref()).expect("fixture");
        let r = kauffman_bracket(&d, &BracketConfig::default()).expect("within cap");
        let t = jones_tait_verdict(&d, &r);
        let l = lemma_bounds(&d, &r);
        println!("{name}: <D> = {}", r.bracket);
        println!("  theorem {}: breadth {} vs {} (k = {})", t.verdict, t.actual, t.expected, t.hypotheses.k);
        println!(
            "  ineq1 {} <= {:?} holds {}, ineq2 {} <= {} holds {}, lemma consistent {}",
            l.ineq1.breadth,
            l.ineq1.bound,
            l.ineq1.holds,
            l.ineq2.lhs,
            l.ineq2.rhs,
            l.ineq2.holds,
            l.consistent()
        );
        let cert = non_alternating_certificate(&r.bracket, &LinkFlags::default(), None);
        println!(
            "  certificate {:?}, crossing lower bound {}",
            cert.map(|c| c.kind()),
            crossing_lower_bound(&r.bracket, d.genus())
        );
    }
}
