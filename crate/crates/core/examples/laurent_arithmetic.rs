//! Exact arithmetic in Z[A, A^-1] and its fraction field.

use kbracket::laurent::{circ, LaurentPoly, RationalFn};

fn main() {
    let delta = LaurentPoly::delta();
    println!("delta = {delta}");
    for n in 0..4 {
        println!("circ({n}) = {}", circ(n));
    }
    let p: LaurentPoly = "A^-7 + A^-3 + A - A^9".parse().unwrap();
    println!("p = {p}, breadth {}, mirror {}", p.breadth(), p.mirror());
    let f = RationalFn::new(LaurentPoly::one(), delta.clone()).unwrap();
    println!("1/delta = {f}, breadth {}", f.breadth());
    let g = &f * &RationalFn::from_poly(delta.pow(3));
    println!("delta^3 / delta = {g}, Laurent: {}", g.is_laurent());
    println!("value at A = 1.1: {:.6}", f.eval_f64(1.1));
}
