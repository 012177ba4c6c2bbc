//! Exhaustive and random diagram generation.

pub mod maps;

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Crossing, Dart, Diagram, FaceRef, Placement, MAX_GENUS};
use crate::error::Error;
use maps::{unrooted_maps, Relabel};

/// Largest crossing count accepted by the enumerator by default.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Predicate {
    Connected,
    Alternating,
    Z2Trivial,
    Z2Nontrivial,
    /// `g(D) = g`.
    FullGenus,
    /// No nugatory crossing.
    NoNugatory,
    /// No nugatory crossing and no crossing touching external faces.
    Simple,
}

impl Predicate {
    pub fn holds(self, d: &Diagram) -> bool {
        match self {
            Predicate::Connected => d.is_connected(),
            Predicate::Alternating => d.is_alternating(),
            Predicate::Z2Trivial => d.z2_class().is_zero(),
            Predicate::Z2Nontrivial => !d.z2_class().is_zero(),
            Predicate::FullGenus => d.diagram_genus() == d.genus(),
            Predicate::NoNugatory => d.simplicity().nugatory.is_empty(),
            Predicate::Simple => d.simplicity().is_simple(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Connected => "connected",
            Predicate::Alternating => "alternating",
            Predicate::Z2Trivial => "z2trivial",
            Predicate::Z2Nontrivial => "z2nontrivial",
            Predicate::FullGenus => "fullgenus",
            Predicate::NoNugatory => "nonugatory",
            Predicate::Simple => "simple",
        }
    }
}

impl FromStr for Predicate {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s.trim() {
            "connected" => Predicate::Connected,
            "alternating" => Predicate::Alternating,
            "z2trivial" => Predicate::Z2Trivial,
            "z2nontrivial" => Predicate::Z2Nontrivial,
            "fullgenus" => Predicate::FullGenus,
            "nonugatory" => Predicate::NoNugatory,
            "simple" => Predicate::Simple,
            other => return Err(format!("unknown predicate `{other}`")),
        })
    }
}

/// Which over/under assignments to generate for each map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OverUnder {
    All,
    Alternating,
}

/// Which puncture placements to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PunctureMode {
    /// Every assignment of punctures to faces.
    All,
    /// Punctures in pairwise distinct faces (so `g(D) = g`).
    Distinct,
}

#[derive(Clone, Debug)]
pub struct GenSpec {
    pub min_crossings: usize,
    pub max_crossings: usize,
    pub genus: usize,
    pub predicates: Vec<Predicate>,
    pub over_under: OverUnder,
    pub punctures: PunctureMode,
    /// Quotient by puncture permutations and reflections as well.
    pub symmetric: bool,
    /// Free loops at `n = 0`.
    pub max_loops: usize,
    pub cap: usize,
}

impl GenSpec {
    pub fn new(max_crossings: usize, genus: usize) -> Self {
        GenSpec {
            min_crossings: 0,
            max_crossings,
            genus,
            predicates: Vec::new(),
            over_under: OverUnder::All,
            punctures: PunctureMode::All,
            symmetric: false,
            max_loops: 2,
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }

    fn accepts(&self, d: &Diagram) -> bool {
        self.predicates.iter().all(|p| p.holds(d))
    }
}

/// Calls `f` on every generated diagram matching the spec. Crossing
/// diagrams are connected; `n = 0` yields free-loop configurations.
pub fn for_each_diagram(spec: &GenSpec, mut f: impl FnMut(Diagram) -> ControlFlow<()>) -> Result<(), Error> {
    if spec.max_crossings > spec.cap {
        return Err(Error::CrossingCap { crossings: spec.max_crossings, cap: spec.cap });
    }
    if spec.genus > MAX_GENUS {
        return Err(crate::error::DiagramError::GenusTooLarge(spec.genus).into());
    }
    if spec.min_crossings == 0 {
        for d in loop_configurations(spec.genus, spec.max_loops, spec.punctures, spec.symmetric) {
            if spec.accepts(&d) && f(d).is_break() {
                return Ok(());
            }
        }
    }
    for n in spec.min_crossings.max(1)..=spec.max_crossings {
        for m in unrooted_maps(n, spec.symmetric) {
            if for_each_decoration(spec, &m, &mut f).is_break() {
                return Ok(());
            }
        }
    }
    Ok(())
}

pub fn enumerate_diagrams(spec: &GenSpec) -> Result<Vec<Diagram>, Error> {
    let mut out = Vec::new();
    for_each_diagram(spec, |d| {
        out.push(d);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Faces of a closed map as sorted corner lists, ordered by least corner.
pub fn map_faces(partner: &[Dart]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; partner.len()];
    let mut out = Vec::new();
    for s in 0..partner.len() {
        if seen[s] {
            continue;
        }
        let mut face = Vec::new();
        let mut cur = Dart(s as u32);
        while !seen[cur.index()] {
            seen[cur.index()] = true;
            face.push(cur.index());
            cur = partner[cur.index()].rotate(-1);
        }
        face.sort_unstable();
        out.push(face);
    }
    out
}

/// The two alternating over/under assignments of a connected map.
pub fn alternating_overs(partner: &[Dart]) -> Vec<Vec<u8>> {
    let n = partner.len() / 4;
    let mut out = Vec::new();
    for first in 0..2u8 {
        let mut over = vec![u8::MAX; n];
        over[0] = first;
        let mut stack = vec![0usize];
        let mut ok = true;
        while let Some(c) = stack.pop() {
            for s in 0..4u8 {
                let is_over = s % 2 == over[c];
                let e = partner[4 * c + s as usize];
                // the far end of this arc must be the opposite
                let need = if is_over { (e.slot() + 1) % 2 } else { e.slot() % 2 };
                match over[e.crossing()] {
                    u8::MAX => {
                        over[e.crossing()] = need;
                        stack.push(e.crossing());
                    }
                    o if o != need => ok = false,
                    _ => {}
                }
            }
        }
        if ok {
            out.push(over);
        }
    }
    out
}

fn automorphisms(m: &[Dart], reflections: bool) -> Vec<Relabel> {
    let mut out = Vec::new();
    for r in 0..m.len() {
        for mirror in [false, true] {
            if mirror && !reflections {
                continue;
            }
            let rl = Relabel::new(m, Dart(r as u32), mirror);
            if (0..m.len()).all(|i| rl.dart(m[i]) == m[rl.dart(Dart(i as u32))].index()) {
                out.push(rl);
            }
        }
    }
    out
}

fn for_each_decoration(spec: &GenSpec, m: &[Dart], f: &mut impl FnMut(Diagram) -> ControlFlow<()>) -> ControlFlow<()> {
    let n = m.len() / 4;
    let faces = map_faces(m);
    let mut face_of_corner = vec![0usize; m.len()];
    for (k, fc) in faces.iter().enumerate() {
        for &c in fc {
            face_of_corner[c] = k;
        }
    }
    let auts = automorphisms(m, spec.symmetric);
    let overs: Vec<Vec<u8>> = match spec.over_under {
        OverUnder::All => (0..1u32 << n).map(|b| (0..n).map(|i| (b >> i & 1) as u8).collect()).collect(),
        OverUnder::Alternating => alternating_overs(m),
    };
    let placements = puncture_assignments(faces.len(), spec.genus + 1, spec.punctures, spec.symmetric);
    let crossings = |ov: &[u8]| -> Vec<Crossing> {
        ov.iter().enumerate().map(|(i, o)| Crossing { id: i as u32, over: *o }).collect()
    };
    let decoration = |ov: &[u8], pl: &[usize], rl: &Relabel| -> (Vec<u8>, Vec<usize>) {
        let mut o2 = vec![0u8; n];
        for c in 0..n {
            o2[rl.new_index[c]] = rl.over(c, ov[c]);
        }
        let mut p2: Vec<usize> = pl.iter().map(|&fi| face_of_corner[rl.corner(faces[fi][0])]).collect();
        if spec.symmetric {
            p2.sort_unstable();
        }
        (o2, p2)
    };
    for ov in &overs {
        for pl in &placements {
            let own = (ov.clone(), pl.clone());
            if auts.iter().any(|rl| decoration(ov, pl, rl) < own) {
                continue;
            }
            let punctures: Vec<Option<FaceRef>> =
                pl.iter().map(|&fi| Some(FaceRef::corner(faces[fi][0] / 4, (faces[fi][0] % 4) as u8))).collect();
            let d = Diagram::connected(spec.genus, crossings(ov), m.to_vec(), punctures, FaceRef::corner(0, 0))
                .expect("generated map is a valid diagram");
            if spec.accepts(&d) && f(d).is_break() {
                return ControlFlow::Break(());
            }
        }
    }
    ControlFlow::Continue(())
}

/// Face index for every puncture. Symmetric mode lists multisets (or
/// sets) in increasing order only.
fn puncture_assignments(faces: usize, k: usize, mode: PunctureMode, symmetric: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(
        faces: usize,
        k: usize,
        mode: PunctureMode,
        symmetric: bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let start =
            if symmetric { cur.last().map_or(0, |&l| l + usize::from(mode == PunctureMode::Distinct)) } else { 0 };
        for fi in start..faces {
            if mode == PunctureMode::Distinct && cur.contains(&fi) {
                continue;
            }
            cur.push(fi);
            go(faces, k, mode, symmetric, cur, out);
            cur.pop();
        }
    }
    go(faces, k, mode, symmetric, &mut cur, &mut out);
    out
}

/// Free-loop configurations: `k ≤ max_loops` disjoint circles with the
/// punctures in the complementary regions, up to isotopy.
pub fn loop_configurations(genus: usize, max_loops: usize, mode: PunctureMode, symmetric: bool) -> Vec<Diagram> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for k in 0..=max_loops {
        let v = k + 1;
        for tree in labelled_trees(v) {
            for pl in puncture_assignments(v, genus + 1, mode, symmetric) {
                let code = tree_code(v, &tree, &pl, symmetric);
                if !seen.insert(code) {
                    continue;
                }
                out.push(tree_diagram(genus, v, &tree, &pl));
            }
        }
    }
    out
}

/// All labelled trees on `v` vertices as edge lists (Prüfer decoding).
fn labelled_trees(v: usize) -> Vec<Vec<(usize, usize)>> {
    if v == 1 {
        return vec![Vec::new()];
    }
    if v == 2 {
        return vec![vec![(0, 1)]];
    }
    let len = v - 2;
    let total = v.pow(len as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut seq = Vec::with_capacity(len);
        for _ in 0..len {
            seq.push(code % v);
            code /= v;
        }
        let mut degree = vec![1usize; v];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::new();
        for &s in &seq {
            let leaf = (0..v).find(|&u| degree[u] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..v).filter(|&u| degree[u] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(edges);
    }
    out
}

fn tree_code(v: usize, edges: &[(usize, usize)], pl: &[usize], symmetric: bool) -> String {
    let mut adj = vec![Vec::new(); v];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let label = |u: usize| -> String {
        let mut ps: Vec<usize> = (0..pl.len()).filter(|&i| pl[i] == u).collect();
        if symmetric {
            return ps.len().to_string();
        }
        ps.sort_unstable();
        ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    };
    fn rooted(u: usize, parent: usize, adj: &[Vec<usize>], label: &dyn Fn(usize) -> String) -> String {
        let mut kids: Vec<String> =
            adj[u].iter().filter(|&&w| w != parent).map(|&w| rooted(w, u, adj, label)).collect();
        kids.sort();
        format!("({}{})", label(u), kids.concat())
    }
    (0..v).map(|r| rooted(r, usize::MAX, &adj, &label)).min().unwrap_or_default()
}

fn tree_diagram(genus: usize, v: usize, edges: &[(usize, usize)], pl: &[usize]) -> Diagram {
    let mut adj = vec![Vec::new(); v];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // the region of puncture 0 is the top level; loop j separates vertex
    // order[j + 1] from its parent
    let root = pl[0];
    let mut parent = vec![usize::MAX; v];
    let mut order = vec![root];
    let mut k = 0;
    while k < order.len() {
        let u = order[k];
        for &w in &adj[u] {
            if w != root && parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        k += 1;
    }
    let loop_of = |u: usize| order.iter().position(|&x| x == u).unwrap() - 1;
    let region_ref = |u: usize| if u == root { None } else { Some(FaceRef::Loop { index: loop_of(u), inside: true }) };
    let loops: Vec<u32> = (0..v as u32 - 1).collect();
    let placements = order[1..]
        .iter()
        .map(|&u| Placement { side: FaceRef::Loop { index: loop_of(u), inside: false }, host: region_ref(parent[u]) })
        .collect();
    let punctures = pl.iter().map(|&u| region_ref(u)).collect();
    Diagram::new(genus, Vec::new(), Vec::new(), loops, punctures, placements).expect("loop configuration is valid")
}

/// Parameters for [`random_diagram`].
#[derive(Clone, Debug)]
pub struct RandomSpec {
    pub crossings: usize,
    pub genus: usize,
    /// Number of pieces; crossings are split among them at random.
    pub pieces: usize,
    pub alternating: bool,
    pub seed: u64,
}

impl RandomSpec {
    pub fn new(crossings: usize, genus: usize, seed: u64) -> Self {
        RandomSpec { crossings, genus, pieces: 1, alternating: false, seed }
    }
}

/// A reproducible pseudo-random diagram.
pub fn random_diagram(spec: &RandomSpec) -> Diagram {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    random_diagram_with(&mut rng, spec)
}

pub fn random_diagram_with(rng: &mut impl Rng, spec: &RandomSpec) -> Diagram {
    let pieces = spec.pieces.max(1);
    let mut sizes = vec![0usize; pieces];
    for _ in 0..spec.crossings {
        let k = rng.gen_range(0..pieces);
        sizes[k] += 1;
    }
    let mut crossings = Vec::new();
    let mut partner: Vec<Dart> = Vec::new();
    let mut loops = Vec::new();
    // faces of each piece as references
    let mut piece_faces: Vec<Vec<FaceRef>> = Vec::new();
    for &size in &sizes {
        if size == 0 {
            let index = loops.len();
            loops.push(index as u32);
            piece_faces.push(vec![FaceRef::Loop { index, inside: false }, FaceRef::Loop { index, inside: true }]);
            continue;
        }
        let m = random_map(rng, size);
        let base = crossings.len();
        let overs = if spec.alternating {
            alternating_overs(&m).choose(rng).cloned().unwrap_or_else(|| vec![0; size])
        } else {
            (0..size).map(|_| rng.gen_range(0..2u8)).collect()
        };
        for o in overs {
            crossings.push(Crossing { id: crossings.len() as u32, over: o });
        }
        for p in &m {
            partner.push(Dart::new(p.crossing() + base, p.slot()));
        }
        piece_faces.push(map_faces(&m).iter().map(|f| FaceRef::corner(f[0] / 4 + base, (f[0] % 4) as u8)).collect());
    }
    // pieces in random order; each nests in an earlier one or at top level
    let mut order: Vec<usize> = (0..pieces).collect();
    order.shuffle(rng);
    let mut placements = Vec::new();
    for (k, &pi) in order.iter().enumerate() {
        let side = *piece_faces[pi].choose(rng).unwrap();
        let host = if k == 0 || rng.gen_bool(0.3) {
            None
        } else {
            let host_piece = order[rng.gen_range(0..k)];
            Some(*piece_faces[host_piece].choose(rng).unwrap())
        };
        placements.push(Placement { side, host });
    }
    let all_faces: Vec<FaceRef> = piece_faces.iter().flatten().copied().collect();
    let punctures = (0..=spec.genus)
        .map(|_| {
            let k = rng.gen_range(0..=all_faces.len());
            all_faces.get(k).copied()
        })
        .collect();
    let ids: Vec<u32> = (0..loops.len() as u32).collect();
    Diagram::new(spec.genus, crossings, partner, ids, punctures, placements).expect("random diagram is valid")
}

/// A random connected planar 4-regular map with `n ≥ 1` vertices, grown by
/// inserting crossings into faces.
pub fn random_map(rng: &mut impl Rng, n: usize) -> Vec<Dart> {
    // figure eight: slots 1-2 and 3-0 joined
    let mut p = vec![Dart::new(0, 3), Dart::new(0, 2), Dart::new(0, 1), Dart::new(0, 0)];
    while p.len() / 4 < n {
        let faces = map_faces(&p);
        let face = faces.choose(rng).unwrap();
        let a = Dart(*face.choose(rng).unwrap() as u32);
        let b = Dart(*face.choose(rng).unwrap() as u32);
        let x = p.len() / 4;
        p.extend((0..4).map(|_| Dart(0)));
        let join = |p: &mut Vec<Dart>, u: Dart, v: Dart| {
            p[u.index()] = v;
            p[v.index()] = u;
        };
        let a2 = p[a.index()];
        if a == b {
            // kink bulging into the face on the left of a
            join(&mut p, a, Dart::new(x, 0));
            join(&mut p, Dart::new(x, 2), Dart::new(x, 3));
            join(&mut p, Dart::new(x, 1), a2);
        } else if a2 == b {
            p.truncate(4 * x);
            continue;
        } else {
            // pinch the two edges together inside the face
            let b2 = p[b.index()];
            join(&mut p, a, Dart::new(x, 0));
            join(&mut p, Dart::new(x, 1), a2);
            join(&mut p, b, Dart::new(x, 2));
            join(&mut p, Dart::new(x, 3), b2);
        }
    }
    p.truncate(4 * n);
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_is_reproducible() {
        let s = RandomSpec::new(4, 1, 1);
        assert_eq!(random_diagram(&s), random_diagram(&s));
        let t = RandomSpec::new(4, 1, 2);
        assert_ne!(random_diagram(&s), random_diagram(&t));
    }

    #[test]
    fn random_maps_are_planar() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..10 {
            let m = random_map(&mut rng, n);
            assert_eq!(map_faces(&m).len(), n + 2);
        }
    }

    #[test]
    fn alternating_assignments_exist() {
        for m in unrooted_maps(4, false) {
            let a = alternating_overs(&m);
            assert_eq!(a.len(), 2);
        }
    }

    #[test]
    fn prufer_counts() {
        assert_eq!(labelled_trees(3).len(), 3);
        assert_eq!(labelled_trees(4).len(), 16);
    }
}
