//! Random Reidemeister moves and the framing factor they pick up.

use kbracket::diagram::moves::{apply_move_framed, legal_moves};
use kbracket::gen::{random_diagram, RandomSpec};
use kbracket::laurent::{LaurentPoly, RationalFn};
use kbracket::{kauffman_bracket, BracketConfig};
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    let mut d = random_diagram(&RandomSpec::new(3, 1, 3));
    let before = kauffman_bracket(&d, &BracketConfig::default()).unwrap().bracket;
    println!("start: n = {}, <D> = {}", d.crossing_count(), before);
    let mut framing = 0i32;
    for _ in 0..6 {
        let moves = legal_moves(&d);
        let Some(m) = moves.choose(&mut rng) else { break };
        let a = apply_move_framed(&d, m).unwrap();
        framing += a.framing;
        d = a.diagram;
        let b = kauffman_bracket(&d, &BracketConfig::default()).unwrap().bracket;
        println!("{m:?}\n  n = {}, framing {framing}, <D> = {b}", d.crossing_count());
    }
    let after = kauffman_bracket(&d, &BracketConfig::default()).unwrap().bracket;
    let unit = LaurentPoly::monomial(-1, 3);
    let factor = RationalFn::from_poly(unit).pow(framing).unwrap();
    println!("(-A^3)^{framing} <start> == <end>: {}", &before * &factor == after);
}
