//! Kauffman states, smoothing, and the region complex of a resolution.
//!
//! Smoothing convention: at a crossing whose over-strand runs from slot `a`
//! to slot `c` (slots `a, b, c, d` counterclockwise), the `+1` smoothing joins
//! `(a, b)` and `(c, d)`; the `-1` smoothing joins `(b, c)` and `(d, a)`.

use std::collections::BTreeMap;

use crate::diagram::{left_corner, right_corner, union_arc_corners, Dart, Diagram, UnionFind};
use crate::error::Error;

/// A `±1` sign for every crossing, indexed by crossing position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KauffmanState {
    signs: Vec<i8>,
}

impl KauffmanState {
    /// The all-`+1` state `s₊`.
    pub fn plus(n: usize) -> Self {
        KauffmanState { signs: vec![1; n] }
    }

    /// The all-`-1` state `s₋`.
    pub fn minus(n: usize) -> Self {
        KauffmanState { signs: vec![-1; n] }
    }

    /// State number `index` in the canonical enumeration: bit `i` set means
    /// crossing `i` gets `-1`. Index 0 is `s₊`.
    pub fn from_index(n: usize, index: u64) -> Self {
        KauffmanState { signs: (0..n).map(|i| if index >> i & 1 == 1 { -1 } else { 1 }).collect() }
    }

    /// Panics if a sign is not `±1`.
    pub fn from_signs(signs: Vec<i8>) -> Self {
        assert!(signs.iter().all(|s| *s == 1 || *s == -1), "state signs must be ±1");
        KauffmanState { signs }
    }

    /// A state given by crossing id; every crossing of `d` must be present.
    pub fn from_map(d: &Diagram, map: &BTreeMap<u32, i8>) -> Result<Self, Error> {
        let signs = d
            .crossings()
            .iter()
            .map(|c| match map.get(&c.id) {
                Some(s) if *s >= 0 => Ok(1),
                Some(_) => Ok(-1),
                None => Err(Error::IncompleteState(c.id)),
            })
            .collect::<Result<_, _>>()?;
        Ok(KauffmanState { signs })
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `Σ s(i)`.
    pub fn sum(&self) -> i64 {
        self.signs.iter().map(|s| *s as i64).sum()
    }

    pub fn flipped(&self, i: usize) -> Self {
        let mut out = self.clone();
        out.signs[i] = -out.signs[i];
        out
    }
}

/// The slot joined to `slot` by the smoothing of sign `sign`.
pub fn smoothing_partner(over: u8, sign: i8, slot: u8) -> u8 {
    let rel = (slot + 4 - over) % 4;
    let rel = if sign > 0 { rel ^ 1 } else { 3 - rel };
    (rel + over) % 4
}

/// The two opposite corners that the smoothing of sign `sign` connects.
pub fn merged_corners(over: u8, sign: i8) -> (u8, u8) {
    if sign > 0 {
        ((over + 1) % 4, (over + 3) % 4)
    } else {
        (over, (over + 2) % 4)
    }
}

/// One circle of a resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    /// Region on the left of the circle's traversal.
    pub left: usize,
    pub right: usize,
    /// Punctures on the left side of the circle.
    pub left_side: u64,
    /// One side holds no puncture.
    pub trivial: bool,
    /// Free loop index, when the circle is an untouched free loop.
    pub free_loop: Option<usize>,
    /// Darts traversed (arc starts), empty for free loops.
    pub darts: Vec<Dart>,
}

/// The collection of circles obtained by smoothing every crossing.
#[derive(Clone, Debug)]
pub struct ResolvedDiagram {
    pub genus: usize,
    pub circles: Vec<Circle>,
    /// Puncture mask of each region of the sphere cut along all circles.
    pub region_punctures: Vec<u64>,
    /// `sD`: number of homotopically trivial circles.
    pub trivial_count: usize,
    /// `p(s)`: number of essential circles.
    pub essential_count: usize,
    /// `p_i(s)`: essential circles with one side holding exactly puncture `i`.
    pub parallel: Vec<usize>,
    /// Essential circles with at least two punctures on each side.
    pub residual: usize,
}

/// Smooths every crossing of `d` according to `s`.
pub fn resolve(d: &Diagram, s: &KauffmanState) -> Result<ResolvedDiagram, Error> {
    let n = d.crossing_count();
    if s.len() != n {
        let missing = d.crossings().get(s.len().min(n)).map_or(0, |c| c.id);
        return Err(Error::IncompleteState(missing));
    }
    Ok(resolve_unchecked(d, s.signs()))
}

pub(crate) fn resolve_unchecked(d: &Diagram, signs: &[i8]) -> ResolvedDiagram {
    let n = d.crossing_count();
    let nloops = d.loops().len();
    // nodes: corners, then two per free loop, then the top-level ambient
    let loop_base = 4 * n;
    let ambient = loop_base + 2 * nloops;
    let mut uf = UnionFind::new(ambient + 1);
    let darts = d.darts();
    for (i, p) in darts.iter().enumerate() {
        if i < p.index() {
            union_arc_corners(&mut uf, Dart(i as u32), *p);
        }
    }
    for (c, x) in d.crossings().iter().enumerate() {
        let (a, b) = merged_corners(x.over, signs[c]);
        uf.union(4 * c + a as usize, 4 * c + b as usize);
    }
    let node_of = |r: crate::diagram::FaceRef| match r {
        crate::diagram::FaceRef::Corner { crossing, corner } => 4 * crossing + corner as usize,
        crate::diagram::FaceRef::Loop { index, inside } => loop_base + 2 * index + usize::from(inside),
    };
    for pl in d.placements() {
        let host = pl.host.map_or(ambient, node_of);
        uf.union(node_of(pl.side), host);
    }
    let (label, region_count) = uf.labels();
    let mut region_punctures = vec![0u64; region_count];
    for (i, p) in d.punctures().iter().enumerate() {
        let node = p.map_or(ambient, node_of);
        region_punctures[label[node]] |= 1 << i;
    }

    // trace circles
    let mut circles = Vec::new();
    let mut visited = vec![false; 4 * n];
    for start in 0..4 * n {
        if visited[start] {
            continue;
        }
        let first = Dart(start as u32);
        let mut cur = first;
        let mut ds = Vec::new();
        loop {
            visited[cur.index()] = true;
            let e = darts[cur.index()];
            visited[e.index()] = true;
            ds.push(cur);
            let c = e.crossing();
            let next = Dart::new(c, smoothing_partner(d.crossings()[c].over, signs[c], e.slot()));
            if next == first {
                break;
            }
            cur = next;
        }
        circles.push(Circle {
            left: label[left_corner(first)],
            right: label[right_corner(first)],
            left_side: 0,
            trivial: false,
            free_loop: None,
            darts: ds,
        });
    }
    for li in 0..nloops {
        circles.push(Circle {
            left: label[loop_base + 2 * li + 1],
            right: label[loop_base + 2 * li],
            left_side: 0,
            trivial: false,
            free_loop: Some(li),
            darts: Vec::new(),
        });
    }
    debug_assert_eq!(region_count, circles.len() + 1, "circle complement is not a tree");

    // sides of every circle via subtree masks of the region tree
    let all = d.all_punctures();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); region_count];
    for (k, c) in circles.iter().enumerate() {
        adj[c.left].push((c.right, k));
        adj[c.right].push((c.left, k));
    }
    let mut parent_edge = vec![usize::MAX; region_count];
    let mut order = Vec::with_capacity(region_count);
    let mut seen = vec![false; region_count];
    seen[0] = true;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &(w, k) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent_edge[w] = k;
                order.push(w);
            }
        }
    }
    let mut subtree = region_punctures.clone();
    for &v in order.iter().rev() {
        let k = parent_edge[v];
        if k != usize::MAX {
            let c = &circles[k];
            let up = if c.left == v { c.right } else { c.left };
            subtree[up] |= subtree[v];
        }
    }
    let mut parallel = vec![0usize; d.genus() + 1];
    let (mut trivial_count, mut essential_count, mut residual) = (0, 0, 0);
    for v in 0..region_count {
        let k = parent_edge[v];
        if k == usize::MAX {
            continue;
        }
        let below = subtree[v];
        let c = &mut circles[k];
        c.left_side = if c.left == v { below } else { all & !below };
        let other = all & !c.left_side;
        c.trivial = c.left_side == 0 || other == 0;
        if c.trivial {
            trivial_count += 1;
        } else {
            essential_count += 1;
            let mut counted = false;
            for side in [c.left_side, other] {
                if side.count_ones() == 1 {
                    parallel[side.trailing_zeros() as usize] += 1;
                    counted = true;
                }
            }
            if !counted {
                residual += 1;
            }
        }
    }
    ResolvedDiagram { genus: d.genus(), circles, region_punctures, trivial_count, essential_count, parallel, residual }
}

impl ResolvedDiagram {
    /// Parity vector of punctures enclosed by all circles, modulo the
    /// all-ones vector.
    pub fn z2_mask(&self) -> u64 {
        let raw = self.circles.iter().fold(0u64, |acc, c| acc ^ c.left_side);
        canonical_z2(raw, self.genus)
    }

    /// Regions of the sphere cut along the essential circles only.
    pub fn region_complex(&self) -> RegionComplex {
        let r = self.region_punctures.len();
        let mut uf = UnionFind::new(r);
        for c in self.circles.iter().filter(|c| c.trivial) {
            uf.union(c.left, c.right);
        }
        let (label, k) = uf.labels();
        let mut regions = vec![Region { chi: 2, external: false, punctures: 0, degree: 0 }; k];
        for (i, m) in self.region_punctures.iter().enumerate() {
            regions[label[i]].punctures |= m;
        }
        let mut edges = Vec::new();
        for (ci, c) in self.circles.iter().enumerate().filter(|(_, c)| !c.trivial) {
            let (a, b) = (label[c.left], label[c.right]);
            regions[a].degree += 1;
            regions[b].degree += 1;
            edges.push(RegionEdge { a, b, circle: ci });
        }
        for reg in &mut regions {
            reg.external = reg.punctures != 0;
            reg.chi = 2 - reg.degree as i64 - reg.punctures.count_ones() as i64;
        }
        RegionComplex { genus: self.genus, regions, edges }
    }
}

pub(crate) fn canonical_z2(raw: u64, genus: usize) -> u64 {
    let all = if genus + 1 == 64 { u64::MAX } else { (1u64 << (genus + 1)) - 1 };
    if raw & 1 == 1 {
        raw ^ all
    } else {
        raw
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    /// Euler characteristic, punctures counted as boundary circles.
    pub chi: i64,
    /// Holds at least one puncture.
    pub external: bool,
    pub punctures: u64,
    /// Number of essential circles bounding the region.
    pub degree: usize,
}

/// Two regions separated by the essential circle `circle`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionEdge {
    pub a: usize,
    pub b: usize,
    pub circle: usize,
}

/// The regions of `S_(g)` cut along the essential part `D_s`, with their
/// adjacency across circles. Gleams are all zero and are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionComplex {
    pub genus: usize,
    pub regions: Vec<Region>,
    pub edges: Vec<RegionEdge>,
}

impl RegionComplex {
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.regions.len()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        adj
    }

    /// Connected with one edge fewer than regions.
    pub fn is_tree(&self) -> bool {
        if self.edges.len() + 1 != self.regions.len() {
            return false;
        }
        let mut uf = UnionFind::new(self.regions.len());
        self.edges.iter().all(|e| uf.union(e.a, e.b))
    }

    pub fn leaves_external(&self) -> bool {
        self.regions.iter().all(|r| r.degree != 1 || r.external)
    }

    pub fn chi_sum(&self) -> i64 {
        self.regions.iter().map(|r| r.chi).sum()
    }

    /// `φ_h`: internal regions that are disks with `h ≥ 1` holes.
    pub fn phi_counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for r in self.regions.iter().filter(|r| !r.external && r.degree >= 2) {
            *out.entry(r.degree - 1).or_insert(0) += 1;
        }
        out
    }

    /// Number of distinct puncture classes minus one, i.e. the least genus
    /// of a punctured disk holding the essential circles.
    pub fn essential_genus(&self) -> usize {
        self.regions.iter().filter(|r| r.external).count().saturating_sub(1)
    }

    /// Canonical encoding of the labelled tree, invariant under relabelling
    /// regions. Regions are labelled only by the external flag, which with
    /// the tree shape determines the shadow sum.
    pub fn canonical_key(&self) -> String {
        let adj = self.neighbors();
        let mut best: Option<String> = None;
        for root in 0..self.regions.len() {
            let code = self.rooted_code(&adj, root, usize::MAX);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        best.unwrap_or_default()
    }

    fn rooted_code(&self, adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> =
            adj[v].iter().filter(|&&w| w != parent).map(|&w| self.rooted_code(adj, w, v)).collect();
        kids.sort();
        let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        s.push(if self.regions[v].external { '[' } else { '(' });
        for k in kids {
            s.push_str(&k);
        }
        s.push(if self.regions[v].external { ']' } else { ')' });
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoothing_pairs_are_involutions() {
        for over in 0..2 {
            for sign in [1i8, -1] {
                for slot in 0..4 {
                    let p = smoothing_partner(over, sign, slot);
                    assert_ne!(p, slot);
                    assert_eq!(smoothing_partner(over, sign, p), slot);
                    // joined slots are adjacent in rotation order
                    assert_eq!((p as i32 - slot as i32).rem_euclid(2), 1);
                }
            }
        }
    }

    #[test]
    fn plus_smoothing_joins_over_start_with_next_slot() {
        assert_eq!(smoothing_partner(0, 1, 0), 1);
        assert_eq!(smoothing_partner(0, 1, 2), 3);
        assert_eq!(smoothing_partner(1, 1, 1), 2);
        assert_eq!(smoothing_partner(1, 1, 3), 0);
        assert_eq!(smoothing_partner(0, -1, 1), 2);
        assert_eq!(smoothing_partner(0, -1, 3), 0);
    }

    #[test]
    fn merged_corners_are_the_open_ones() {
        // +1 with over = 0 joins (0,1) and (2,3): corners 1 and 3 open up
        assert_eq!(merged_corners(0, 1), (1, 3));
        assert_eq!(merged_corners(0, -1), (0, 2));
        assert_eq!(merged_corners(1, 1), (2, 0));
        assert_eq!(merged_corners(1, -1), (1, 3));
    }

    #[test]
    fn state_indexing() {
        let s = KauffmanState::from_index(3, 0b101);
        assert_eq!(s.signs(), &[-1, 1, -1]);
        assert_eq!(s.sum(), -1);
        assert_eq!(KauffmanState::from_index(3, 0), KauffmanState::plus(3));
        assert_eq!(KauffmanState::from_index(3, 7), KauffmanState::minus(3));
    }
}
