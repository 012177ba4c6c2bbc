//! Reference evaluators that share no code with the state-sum engine.
//!
//! [`oracle_bracket`] expands crossings recursively, finds circles as graph
//! components, computes the two sides of each circle by deleting it from
//! the region graph, and sums over colorings found by plain backtracking.
//! [`classical_bracket`] ignores the punctures altogether.

use std::collections::VecDeque;

use kbracket::diagram::{Dart, Diagram, FaceRef};
use kbracket::laurent::{circ, LaurentPoly, RationalFn};

/// The two slot pairs joined by the smoothing of sign `sign` at a crossing
/// whose over-strand starts at slot `over`.
fn joined_pairs(over: u8, sign: i8) -> [(u8, u8); 2] {
    let o = over;
    if sign > 0 {
        [(o, (o + 1) % 4), ((o + 2) % 4, (o + 3) % 4)]
    } else {
        [((o + 1) % 4, (o + 2) % 4), ((o + 3) % 4, o)]
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Number of closed curves after smoothing, punctures ignored.
fn circle_count(d: &Diagram, signs: &[i8]) -> usize {
    let n = d.crossing_count();
    let mut dsu = Dsu::new(4 * n);
    for (i, p) in d.darts().iter().enumerate() {
        dsu.union(i, p.index());
    }
    for (c, x) in d.crossings().iter().enumerate() {
        for (a, b) in joined_pairs(x.over, signs[c]) {
            dsu.union(4 * c + a as usize, 4 * c + b as usize);
        }
    }
    let roots: std::collections::BTreeSet<usize> = (0..4 * n).map(|i| dsu.find(i)).collect();
    roots.len() + d.loops().len()
}

/// `Σ_s A^{Σs} δ^{#circles}`: the bracket of the diagram drawn in the plane.
pub fn classical_bracket(d: &Diagram) -> LaurentPoly {
    let n = d.crossing_count();
    let delta = LaurentPoly::delta();
    let mut total = LaurentPoly::zero();
    for idx in 0u64..(1u64 << n) {
        let signs: Vec<i8> = (0..n).map(|i| if idx >> i & 1 == 1 { -1 } else { 1 }).collect();
        let sum: i64 = signs.iter().map(|&s| s as i64).sum();
        total = &total + &delta.pow(circle_count(d, &signs) as u32).shift(sum);
    }
    total
}

/// Bracket by recursive skein expansion and brute-force colorings.
pub fn oracle_bracket(d: &Diagram) -> RationalFn {
    let mut signs = Vec::with_capacity(d.crossing_count());
    expand(d, &mut signs, &LaurentPoly::one())
}

fn expand(d: &Diagram, signs: &mut Vec<i8>, coeff: &LaurentPoly) -> RationalFn {
    if signs.len() == d.crossing_count() {
        let (trivial, value) = leaf(d, signs);
        let w = coeff * &LaurentPoly::delta().pow(trivial as u32);
        return value.mul_poly(&w);
    }
    let mut out = RationalFn::zero();
    for (s, a) in [(1i8, 1i64), (-1, -1)] {
        signs.push(s);
        let v = expand(d, signs, &coeff.shift(a));
        signs.pop();
        out = &out + &v;
    }
    out
}

/// Number of trivial circles and the shadow sum of the essential ones.
fn leaf(d: &Diagram, signs: &[i8]) -> (usize, RationalFn) {
    let n = d.crossing_count();
    let nl = d.loops().len();

    // circles as components of darts joined by arcs and smoothings
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 4 * n];
    for (i, p) in d.darts().iter().enumerate() {
        adj[i].push(p.index());
    }
    for (c, x) in d.crossings().iter().enumerate() {
        for (a, b) in joined_pairs(x.over, signs[c]) {
            adj[4 * c + a as usize].push(4 * c + b as usize);
            adj[4 * c + b as usize].push(4 * c + a as usize);
        }
    }
    let mut comp = vec![usize::MAX; 4 * n];
    let mut circles: Vec<usize> = Vec::new(); // one dart per circle
    for s in 0..4 * n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = circles.len();
        circles.push(s);
        let mut q = VecDeque::from([s]);
        comp[s] = id;
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    q.push_back(w);
                }
            }
        }
    }

    // regions: corners, two sides per loop, the outside
    let loop_node = |l: usize, inside: bool| 4 * n + 2 * l + usize::from(inside);
    let outside = 4 * n + 2 * nl;
    let node = |r: FaceRef| match r {
        FaceRef::Corner { crossing, corner } => 4 * crossing + corner as usize,
        FaceRef::Loop { index, inside } => loop_node(index, inside),
    };
    let mut dsu = Dsu::new(outside + 1);
    for (i, p) in d.darts().iter().enumerate() {
        // the arc from dart i to p keeps corner i with the corner before p
        let before_p = 4 * p.crossing() + (p.slot() as usize + 3) % 4;
        dsu.union(i, before_p);
    }
    for (c, x) in d.crossings().iter().enumerate() {
        let pairs = joined_pairs(x.over, signs[c]);
        // corners not enclosed by a turn are opened into one region
        let enclosed: Vec<u8> = pairs.iter().map(|&(a, b)| if (a + 1) % 4 == b { a } else { b }).collect();
        let open: Vec<usize> = (0..4u8).filter(|k| !enclosed.contains(k)).map(|k| 4 * c + k as usize).collect();
        dsu.union(open[0], open[1]);
    }
    for pl in d.placements() {
        let host = pl.host.map_or(outside, node);
        dsu.union(node(pl.side), host);
    }
    let mut region_id = vec![usize::MAX; outside + 1];
    let mut regions = 0;
    for v in 0..=outside {
        let r = dsu.find(v);
        if region_id[r] == usize::MAX {
            region_id[r] = regions;
            regions += 1;
        }
        region_id[v] = region_id[r];
    }
    let mut punct = vec![0u64; regions];
    for (k, p) in d.punctures().iter().enumerate() {
        let v = p.map_or(outside, node);
        punct[region_id[v]] |= 1 << k;
    }

    // each circle joins the regions on its two sides
    let mut sides: Vec<(usize, usize)> = circles
        .iter()
        .map(|&s| {
            let dart = Dart(s as u32);
            (region_id[dart.index()], region_id[4 * dart.crossing() + (dart.slot() as usize + 3) % 4])
        })
        .collect();
    for l in 0..nl {
        sides.push((region_id[loop_node(l, true)], region_id[loop_node(l, false)]));
    }
    let all: u64 = punct.iter().fold(0, |a, b| a | b);
    let mut trivial = vec![false; sides.len()];
    for (k, &(a, _)) in sides.iter().enumerate() {
        // punctures reachable from one side without crossing circle k
        let mut seen = vec![false; regions];
        seen[a] = true;
        let mut q = VecDeque::from([a]);
        let mut mask = 0u64;
        while let Some(v) = q.pop_front() {
            mask |= punct[v];
            for (j, &(x, y)) in sides.iter().enumerate() {
                if j == k {
                    continue;
                }
                for (u, w) in [(x, y), (y, x)] {
                    if u == v && !seen[w] {
                        seen[w] = true;
                        q.push_back(w);
                    }
                }
            }
        }
        trivial[k] = mask == 0 || mask == all;
    }
    let trivial_count = trivial.iter().filter(|t| **t).count();

    // contract trivial circles
    let mut cd = Dsu::new(regions);
    for (k, &(a, b)) in sides.iter().enumerate() {
        if trivial[k] {
            cd.union(a, b);
        }
    }
    let mut cls = vec![usize::MAX; regions];
    let mut count = 0;
    for r in 0..regions {
        let root = cd.find(r);
        if cls[root] == usize::MAX {
            cls[root] = count;
            count += 1;
        }
        cls[r] = cls[root];
    }
    let mut cpunct = vec![0u64; count];
    let mut degree = vec![0i64; count];
    let mut edges = Vec::new();
    for r in 0..regions {
        cpunct[cls[r]] |= punct[r];
    }
    for (k, &(a, b)) in sides.iter().enumerate() {
        if !trivial[k] {
            edges.push((cls[a], cls[b]));
            degree[cls[a]] += 1;
            degree[cls[b]] += 1;
        }
    }
    let chi: Vec<i64> = (0..count).map(|r| 2 - degree[r] - cpunct[r].count_ones() as i64).collect();

    // backtracking over colors 0..=count
    let mut total = RationalFn::zero();
    let mut colors = vec![0i64; count];
    search(0, count, &cpunct, &edges, &chi, &mut colors, &mut total);
    (trivial_count, total)
}

fn search(
    r: usize,
    count: usize,
    punct: &[u64],
    edges: &[(usize, usize)],
    chi: &[i64],
    colors: &mut Vec<i64>,
    total: &mut RationalFn,
) {
    if r == count {
        let mut term = RationalFn::one();
        for (k, &c) in colors.iter().enumerate() {
            if c > 0 {
                term = &term * &RationalFn::from_poly(circ(c as u32)).pow(chi[k] as i32).expect("nonzero");
            }
        }
        *total = &*total + &term;
        return;
    }
    let range = if punct[r] != 0 { 0..=0 } else { 0..=count as i64 };
    for c in range {
        colors[r] = c;
        let ok = edges.iter().all(|&(a, b)| {
            let (lo, hi) = (a.min(b), a.max(b));
            hi != r || lo > r || (colors[lo] - colors[hi]).abs() == 1
        });
        if ok {
            search(r + 1, count, punct, edges, chi, colors, total);
        }
    }
}
