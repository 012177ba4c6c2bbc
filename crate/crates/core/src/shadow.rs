//! Crossingless diagrams: admissible colorings and the shadow sum.
//!
//! A coloring gives every region of the region complex a color `ξ ≥ 0`,
//! external regions get 0, and colors across every essential circle differ
//! by exactly one. The bracket of the crossingless diagram is
//! `Σ_ξ Π_R ⟨ξ(R)⟩^χ(R)` with `⟨n⟩ = circ(n)`.

use crate::error::Error;
use crate::laurent::{circ, Order, RationalFn};
use crate::resolution::RegionComplex;

/// `ψ(s) = ½ ord_∞ ⟨D_s⟩`, undefined when `⟨D_s⟩ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Psi {
    Defined(i64),
    Undefined,
}

impl Psi {
    pub fn value(self) -> Option<i64> {
        match self {
            Psi::Defined(v) => Some(v),
            Psi::Undefined => None,
        }
    }
}

impl std::fmt::Display for Psi {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Psi::Defined(v) => write!(f, "{v}"),
            Psi::Undefined => write!(f, "undefined"),
        }
    }
}

/// The three independent ways of computing `ψ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PsiRoutes {
    /// Top degree of the shadow sum.
    pub top_degree: Order,
    /// Maximum of `Σ χ(R) ξ(R)` over admissible colorings.
    pub max_weight: Psi,
    /// `Σ χ(R) ξ₀(R)` for the 0/1 coloring.
    pub binary: Psi,
}

/// Color bound for every region: distance to the nearest external region.
fn distance_bounds(rc: &RegionComplex, adj: &[Vec<usize>]) -> Vec<usize> {
    let n = rc.regions.len();
    let mut dist = vec![usize::MAX; n];
    let mut queue: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
    for (i, r) in rc.regions.iter().enumerate() {
        if r.external {
            dist[i] = 0;
            queue.push_back(i);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Rooted traversal order from the first external region.
fn rooted(rc: &RegionComplex, adj: &[Vec<usize>]) -> (usize, Vec<usize>, Vec<usize>) {
    let n = rc.regions.len();
    let root = rc.regions.iter().position(|r| r.external).unwrap_or(0);
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
    }
    (root, parent, order)
}

/// All admissible colorings, as color vectors indexed by region.
pub fn admissible_colorings(rc: &RegionComplex) -> Vec<Vec<u32>> {
    let adj = rc.neighbors();
    let bound = distance_bounds(rc, &adj);
    let (root, parent, order) = rooted(rc, &adj);
    let mut out = Vec::new();
    let mut colors = vec![0u32; rc.regions.len()];
    fn go(
        k: usize,
        order: &[usize],
        parent: &[usize],
        bound: &[usize],
        rc: &RegionComplex,
        colors: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if k == order.len() {
            out.push(colors.clone());
            return;
        }
        let v = order[k];
        let pc = colors[parent[v]] as i64;
        for c in [pc - 1, pc + 1] {
            if c < 0 || c as usize > bound[v] || (rc.regions[v].external && c != 0) {
                continue;
            }
            colors[v] = c as u32;
            go(k + 1, order, parent, bound, rc, colors, out);
        }
    }
    if rc.regions[root].external {
        go(1, &order, &parent, &bound, rc, &mut colors, &mut out);
    }
    out
}

/// The 0/1 coloring by tree distance parity from an external region, if
/// every external region gets 0.
pub fn binary_coloring(rc: &RegionComplex) -> Option<Vec<u32>> {
    let adj = rc.neighbors();
    let (_, parent, order) = rooted(rc, &adj);
    let mut colors = vec![0u32; rc.regions.len()];
    for &v in &order[1..] {
        colors[v] = 1 - colors[parent[v]];
    }
    rc.regions.iter().zip(&colors).all(|(r, c)| !r.external || *c == 0).then_some(colors)
}

/// `Σ_ξ Π_R ⟨ξ(R)⟩^χ(R)` computed by dynamic programming over the tree.
pub fn resolution_bracket(rc: &RegionComplex) -> RationalFn {
    let adj = rc.neighbors();
    let bound = distance_bounds(rc, &adj);
    let (root, parent, order) = rooted(rc, &adj);
    let n = rc.regions.len();
    // table[v][c]: sum over colorings of the subtree at v with ξ(v) = c
    let mut table: Vec<Vec<RationalFn>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let r = &rc.regions[v];
        let top = if r.external { 0 } else { bound[v] };
        let mut row = Vec::with_capacity(top + 1);
        for c in 0..=top {
            if r.external && c != 0 {
                row.push(RationalFn::zero());
                continue;
            }
            let base = if r.chi == 0 || c == 0 {
                RationalFn::one()
            } else {
                RationalFn::from_poly(circ(c as u32)).pow(r.chi as i32).expect("circ(n) is nonzero")
            };
            let mut acc = base;
            for &w in adj[v].iter().filter(|&&w| parent[w] == v && w != root) {
                let child = &table[w];
                let mut s = RationalFn::zero();
                if c > 0 && c - 1 < child.len() {
                    s = &s + &child[c - 1];
                }
                if c + 1 < child.len() {
                    s = &s + &child[c + 1];
                }
                if s.is_zero() {
                    acc = RationalFn::zero();
                    break;
                }
                acc = &acc * &s;
            }
            row.push(acc);
        }
        table[v] = row;
    }
    table[root].first().cloned().unwrap_or_else(RationalFn::zero)
}

/// Reference evaluation of the shadow sum by listing colorings.
pub fn resolution_bracket_by_colorings(rc: &RegionComplex) -> RationalFn {
    let mut total = RationalFn::zero();
    for col in admissible_colorings(rc) {
        let mut term = RationalFn::one();
        for (r, c) in rc.regions.iter().zip(&col) {
            if *c > 0 && r.chi != 0 {
                term = &term * &RationalFn::from_poly(circ(*c)).pow(r.chi as i32).expect("circ(n) is nonzero");
            }
        }
        total = &total + &term;
    }
    total
}

/// Maximum of `Σ χ(R) ξ(R)` over admissible colorings.
fn max_weight(rc: &RegionComplex) -> Option<i64> {
    let adj = rc.neighbors();
    let bound = distance_bounds(rc, &adj);
    let (root, parent, order) = rooted(rc, &adj);
    let n = rc.regions.len();
    let mut table: Vec<Vec<Option<i64>>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let r = &rc.regions[v];
        let top = if r.external { 0 } else { bound[v] };
        let mut row = Vec::with_capacity(top + 1);
        for c in 0..=top {
            let mut acc = Some(r.chi * c as i64);
            for &w in adj[v].iter().filter(|&&w| parent[w] == v && w != root) {
                let child = &table[w];
                let lo = if c > 0 { child.get(c - 1).copied().flatten() } else { None };
                let hi = child.get(c + 1).copied().flatten();
                let best = match (lo, hi) {
                    (Some(a), Some(b)) => Some(a.max(b)),
                    (a, b) => a.or(b),
                };
                acc = match (acc, best) {
                    (Some(a), Some(b)) => Some(a + b),
                    _ => None,
                };
            }
            row.push(acc);
        }
        table[v] = row;
    }
    table[root].first().copied().flatten()
}

pub fn psi_routes(rc: &RegionComplex) -> PsiRoutes {
    let top_degree = resolution_bracket(rc).ord_inf();
    let max_weight = max_weight(rc).map_or(Psi::Undefined, Psi::Defined);
    let binary = binary_coloring(rc)
        .map_or(Psi::Undefined, |col| Psi::Defined(rc.regions.iter().zip(&col).map(|(r, c)| r.chi * *c as i64).sum()));
    PsiRoutes { top_degree, max_weight, binary }
}

/// `ψ` after checking that all three routes agree.
pub fn psi(rc: &RegionComplex) -> Result<Psi, Error> {
    let r = psi_routes(rc);
    let half = match r.top_degree {
        Order::Finite(k) if k % 2 == 0 => Some(Psi::Defined(k / 2)),
        Order::Finite(_) => None,
        _ => Some(Psi::Undefined),
    };
    match half {
        Some(h) if h == r.max_weight && h == r.binary => Ok(h),
        _ => Err(Error::PsiMismatch(format!(
            "top degree {}, max weight {}, binary {}",
            r.top_degree, r.max_weight, r.binary
        ))),
    }
}
