//! The region complex of a crossingless resolution, its admissible
//! colorings and the three routes to ψ.

use kbracket::cli::load;
use kbracket::resolution::{resolve, KauffmanState};
use kbracket::shadow::{admissible_colorings, psi_routes, resolution_bracket};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| format!("{}/fixtures/E5.diag", env!("CARGO_MANIFEST_DIR")));
    let d = load(path.as_ref()).expect("readable diagram");
    let n = d.crossing_count();
    let r = resolve(&d, &KauffmanState::plus(n)).expect("state fits");
    let rc = r.region_complex();
    println!("s+ : {} trivial, {} essential circles", r.trivial_count, r.essential_count);
    for (i, reg) in rc.regions.iter().enumerate() {
        println!(
            "  region {i}: chi {}, {}, degree {}",
            reg.chi,
            if reg.external { "external" } else { "internal" },
            reg.degree
        );
    }
    for e in &rc.edges {
        println!("  circle {} joins regions {} and {}", e.circle, e.a, e.b);
    }
    println!("  tree: {}, leaves external: {}, sum chi: {}", rc.is_tree(), rc.leaves_external(), rc.chi_sum());
    for c in admissible_colorings(&rc) {
        println!("  coloring {c:?}");
    }
    let routes = psi_routes(&rc);
    println!("  psi: top degree {}, max weight {}, binary {}", routes.top_degree, routes.max_weight, routes.binary);
    println!("  <D_s> = {}", resolution_bracket(&rc));
}
