//! Link diagrams in a disk with `g` holes.
//!
//! A diagram lives on a sphere with `g + 1` punctures. It is a disjoint union
//! of *pieces*: connected 4-valent planar maps, each given by a rotation
//! system, and crossingless free loops. The relative position of the pieces
//! is recorded by a nesting forest: every piece names one of its own faces
//! (its outer *side*) and the face of a host piece it sits in, or sits at top
//! level. Punctures are placed the same way.
//!
//! Slots of a crossing are numbered `0..4` counterclockwise; corner `i` is the
//! angle between slot `i` and slot `i + 1`.

mod analysis;
pub mod format;
pub mod moves;

use std::collections::BTreeMap;

use crate::error::DiagramError;

pub use analysis::{Face, FaceStructure, SimplicityReport, Z2Class};
pub use moves::Move;

/// Largest supported genus; puncture sets are stored as 64-bit masks.
pub const MAX_GENUS: usize = 63;

/// A crossing with its over-strand. `over == 0` means the strand through
/// slots 0 and 2 passes over; `over == 1` means the strand through 1 and 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub id: u32,
    pub over: u8,
}

/// One end of an arc: slot `slot` of the crossing with index `crossing`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(pub u32);

impl Dart {
    pub fn new(crossing: usize, slot: u8) -> Dart {
        Dart((crossing * 4 + (slot as usize & 3)) as u32)
    }
    pub fn crossing(self) -> usize {
        (self.0 / 4) as usize
    }
    pub fn slot(self) -> u8 {
        (self.0 % 4) as u8
    }
    pub fn index(self) -> usize {
        self.0 as usize
    }
    /// The slot `k` steps counterclockwise at the same crossing.
    pub fn rotate(self, k: i32) -> Dart {
        Dart::new(self.crossing(), (self.slot() as i32 + k).rem_euclid(4) as u8)
    }
}

/// A face of a single piece: a corner of one of its crossings, or one side
/// of a free loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceRef {
    Corner { crossing: usize, corner: u8 },
    Loop { index: usize, inside: bool },
}

impl FaceRef {
    pub fn corner(crossing: usize, corner: u8) -> FaceRef {
        FaceRef::Corner { crossing, corner: corner & 3 }
    }
}

/// Where a piece sits: `side` is the face of the piece itself that faces
/// outward, `host` the face it lies in (`None` for top level).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Placement {
    pub side: FaceRef,
    pub host: Option<FaceRef>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieceKind {
    Crossings,
    Loop(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub kind: PieceKind,
    /// Crossing indices, increasing.
    pub crossings: Vec<usize>,
    /// Piece-face node ids, increasing.
    pub faces: Vec<usize>,
}

#[derive(Clone, Debug)]
struct Topology {
    pieces: Vec<Piece>,
    piece_of_crossing: Vec<usize>,
    /// corner index `4c + i` -> face node
    corner_node: Vec<usize>,
    /// face node -> owning piece
    node_piece: Vec<usize>,
    /// face node -> least face reference
    node_ref: Vec<FaceRef>,
    /// piece -> placement index
    placement_of_piece: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    genus: usize,
    crossings: Vec<Crossing>,
    partner: Vec<Dart>,
    loops: Vec<u32>,
    punctures: Vec<Option<FaceRef>>,
    placements: Vec<Placement>,
    topo: Topology,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.genus == other.genus
            && self.crossings == other.crossings
            && self.partner == other.partner
            && self.loops == other.loops
            && self.punctures == other.punctures
            && self.placements == other.placements
    }
}

impl Eq for Diagram {}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller root so representatives are deterministic
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }
    pub(crate) fn len(&self) -> usize {
        self.parent.len()
    }
    /// Dense labels `0..k` in order of first appearance.
    pub(crate) fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.len();
        let mut map = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut k = 0;
        for (i, o) in out.iter_mut().enumerate() {
            let r = self.find(i);
            if map[r] == usize::MAX {
                map[r] = k;
                k += 1;
            }
            *o = map[r];
        }
        (out, k)
    }
}

/// Corner index of the face on the left of the arc leaving `d`.
pub(crate) fn left_corner(d: Dart) -> usize {
    d.index()
}

/// Corner index of the face on the right of the arc leaving `d`.
pub(crate) fn right_corner(d: Dart) -> usize {
    d.rotate(-1).index()
}

/// Joins the corners that an arc between `d` and `e` separates from nothing:
/// left of `d -> e` is corner `d` and corner `e - 1`.
pub(crate) fn union_arc_corners(uf: &mut UnionFind, d: Dart, e: Dart) {
    uf.union(left_corner(d), right_corner(e));
    uf.union(right_corner(d), left_corner(e));
}

impl Diagram {
    /// Builds and validates a diagram.
    ///
    /// `crossings` must have strictly increasing ids; `partner` is the arc
    /// involution on darts (`4 * crossings.len()` entries); `punctures` has
    /// `genus + 1` entries; `placements` has one entry per piece.
    pub fn new(
        genus: usize,
        crossings: Vec<Crossing>,
        partner: Vec<Dart>,
        loops: Vec<u32>,
        punctures: Vec<Option<FaceRef>>,
        placements: Vec<Placement>,
    ) -> Result<Diagram, DiagramError> {
        if genus > MAX_GENUS {
            return Err(DiagramError::GenusTooLarge(genus));
        }
        if punctures.len() != genus + 1 {
            return Err(DiagramError::PunctureCount { expected: genus + 1, found: punctures.len() });
        }
        for w in crossings.windows(2) {
            if w[0].id >= w[1].id {
                return Err(DiagramError::DuplicateId(format!("X{}", w[1].id)));
            }
        }
        for w in loops.windows(2) {
            if w[0] >= w[1] {
                return Err(DiagramError::DuplicateId(format!("O{}", w[1])));
            }
        }
        if crossings.iter().any(|c| c.over > 1) {
            return Err(DiagramError::Syntax { line: 0, msg: "over must be 0 or 1".into() });
        }
        let n = crossings.len();
        if partner.len() != 4 * n {
            return Err(DiagramError::DanglingSlot(format!("{} darts for {} crossings", partner.len(), n)));
        }
        for (i, p) in partner.iter().enumerate() {
            let name = || format!("{}.{}", crossings[i / 4].id, i % 4);
            if p.index() >= 4 * n {
                return Err(DiagramError::UnknownSlot(name()));
            }
            if p.index() == i || partner[p.index()].index() != i {
                return Err(DiagramError::SlotConflict(name()));
            }
        }
        let mut d = Diagram {
            genus,
            crossings,
            partner,
            loops,
            punctures,
            placements,
            topo: Topology {
                pieces: Vec::new(),
                piece_of_crossing: Vec::new(),
                corner_node: Vec::new(),
                node_piece: Vec::new(),
                node_ref: Vec::new(),
                placement_of_piece: Vec::new(),
            },
        };
        d.build_topology()?;
        Ok(d)
    }

    fn build_topology(&mut self) -> Result<(), DiagramError> {
        let n = self.crossings.len();
        // connected components of the 4-valent graph
        let mut cuf = UnionFind::new(n);
        for (i, p) in self.partner.iter().enumerate() {
            cuf.union(i / 4, p.crossing());
        }
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in 0..n {
            by_root.entry(cuf.find(c)).or_default().push(c);
        }
        let mut pieces: Vec<Piece> = by_root
            .into_values()
            .map(|cs| Piece { kind: PieceKind::Crossings, crossings: cs, faces: Vec::new() })
            .collect();
        pieces.sort_by_key(|p| p.crossings[0]);
        let mut piece_of_crossing = vec![0; n];
        for (pi, p) in pieces.iter().enumerate() {
            for &c in &p.crossings {
                piece_of_crossing[c] = pi;
            }
        }
        // faces of every crossing piece
        let mut fuf = UnionFind::new(4 * n);
        for (i, p) in self.partner.iter().enumerate() {
            if i < p.index() {
                union_arc_corners(&mut fuf, Dart(i as u32), *p);
            }
        }
        let (corner_label, face_count) = fuf.labels();
        let mut node_piece = vec![0; face_count];
        let mut node_ref = vec![FaceRef::corner(0, 0); face_count];
        let mut seen = vec![false; face_count];
        for (corner, &node) in corner_label.iter().enumerate() {
            if !seen[node] {
                seen[node] = true;
                node_ref[node] = FaceRef::corner(corner / 4, (corner % 4) as u8);
                node_piece[node] = piece_of_crossing[corner / 4];
                pieces[piece_of_crossing[corner / 4]].faces.push(node);
            }
        }
        for (pi, p) in pieces.iter().enumerate() {
            if p.faces.len() != p.crossings.len() + 2 {
                return Err(DiagramError::NotPlanar {
                    piece: self.piece_name(pi, &pieces),
                    faces: p.faces.len(),
                    crossings: p.crossings.len(),
                });
            }
        }
        for li in 0..self.loops.len() {
            let pi = pieces.len();
            let base = node_piece.len();
            node_piece.extend([pi, pi]);
            node_ref.push(FaceRef::Loop { index: li, inside: false });
            node_ref.push(FaceRef::Loop { index: li, inside: true });
            pieces.push(Piece { kind: PieceKind::Loop(li), crossings: Vec::new(), faces: vec![base, base + 1] });
        }
        self.topo = Topology {
            pieces,
            piece_of_crossing,
            corner_node: corner_label,
            node_piece,
            node_ref,
            placement_of_piece: Vec::new(),
        };
        self.validate_placements()
    }

    fn check_face(&self, r: FaceRef) -> Result<FaceRef, DiagramError> {
        match r {
            FaceRef::Corner { crossing, corner } if crossing < self.crossings.len() && corner < 4 => {
                Ok(self.topo.node_ref[self.face_node(r)])
            }
            FaceRef::Loop { index, .. } if index < self.loops.len() => Ok(r),
            _ => Err(DiagramError::UnknownFace { piece: "?".into(), face: format!("{r:?}") }),
        }
    }

    fn validate_placements(&mut self) -> Result<(), DiagramError> {
        for i in 0..self.punctures.len() {
            if let Some(r) = self.punctures[i] {
                self.punctures[i] = Some(self.check_face(r)?);
            }
        }
        let np = self.topo.pieces.len();
        let mut of_piece = vec![usize::MAX; np];
        for i in 0..self.placements.len() {
            let Placement { side, host } = self.placements[i];
            let side = self.check_face(side)?;
            let host = host.map(|h| self.check_face(h)).transpose()?;
            let pi = self.piece_of_face(side);
            if of_piece[pi] != usize::MAX {
                return Err(DiagramError::DuplicatePlacement(self.piece_name(pi, &self.topo.pieces)));
            }
            if let Some(h) = host {
                if self.piece_of_face(h) == pi {
                    return Err(DiagramError::NestingCycle(self.piece_name(pi, &self.topo.pieces)));
                }
            }
            of_piece[pi] = i;
            self.placements[i] = Placement { side, host };
        }
        if let Some(pi) = of_piece.iter().position(|&x| x == usize::MAX) {
            return Err(DiagramError::MissingPlacement(self.piece_name(pi, &self.topo.pieces)));
        }
        // canonical order: placements follow piece order
        let placements: Vec<Placement> = of_piece.iter().map(|&i| self.placements[i]).collect();
        self.placements = placements;
        self.topo.placement_of_piece = (0..np).collect();
        // acyclicity of the nesting forest
        for start in 0..np {
            let mut cur = start;
            for _ in 0..=np {
                match self.placements[cur].host {
                    None => break,
                    Some(h) => cur = self.piece_of_face(h),
                }
                if cur == start {
                    return Err(DiagramError::NestingCycle(self.piece_name(start, &self.topo.pieces)));
                }
            }
        }
        Ok(())
    }

    fn piece_name(&self, pi: usize, pieces: &[Piece]) -> String {
        match pieces[pi].kind {
            PieceKind::Crossings => format!("X{}", self.crossings[pieces[pi].crossings[0]].id),
            PieceKind::Loop(l) => format!("O{}", self.loops[l]),
        }
    }

    // ---- accessors ----

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Number of crossings `n`.
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn partner(&self, d: Dart) -> Dart {
        self.partner[d.index()]
    }

    pub fn darts(&self) -> &[Dart] {
        &self.partner
    }

    pub fn loops(&self) -> &[u32] {
        &self.loops
    }

    pub fn punctures(&self) -> &[Option<FaceRef>] {
        &self.punctures
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.topo.pieces
    }

    pub fn piece_of_crossing(&self, c: usize) -> usize {
        self.topo.piece_of_crossing[c]
    }

    /// Number of piece-face nodes over all pieces.
    pub fn face_node_count(&self) -> usize {
        self.topo.node_piece.len()
    }

    /// Piece-face node of a face reference.
    pub fn face_node(&self, r: FaceRef) -> usize {
        match r {
            FaceRef::Corner { crossing, corner } => self.topo.corner_node[crossing * 4 + corner as usize],
            FaceRef::Loop { index, inside } => self.first_loop_node() + 2 * index + usize::from(inside),
        }
    }

    fn first_loop_node(&self) -> usize {
        self.topo.node_piece.len() - 2 * self.loops.len()
    }

    pub fn node_piece(&self, node: usize) -> usize {
        self.topo.node_piece[node]
    }

    /// Canonical (least) face reference of a piece-face node.
    pub fn node_ref(&self, node: usize) -> FaceRef {
        self.topo.node_ref[node]
    }

    pub fn piece_of_face(&self, r: FaceRef) -> usize {
        self.topo.node_piece[self.face_node(r)]
    }

    pub fn placement_of_piece(&self, pi: usize) -> Placement {
        self.placements[self.topo.placement_of_piece[pi]]
    }

    /// Face node of a corner index `4c + i`.
    pub fn corner_node(&self, corner: usize) -> usize {
        self.topo.corner_node[corner]
    }

    /// Display name of a piece: `X<least crossing id>` or `O<loop id>`.
    pub fn piece_label(&self, pi: usize) -> String {
        self.piece_name(pi, &self.topo.pieces)
    }

    /// Display name of a face of a piece: `<crossing id>.<corner>`, `in`
    /// or `out`.
    pub fn face_label(&self, r: FaceRef) -> String {
        match self.node_ref(self.face_node(r)) {
            FaceRef::Corner { crossing, corner } => format!("{}.{}", self.crossings[crossing].id, corner),
            FaceRef::Loop { inside, .. } => (if inside { "in" } else { "out" }).to_string(),
        }
    }

    /// All punctures as a bit mask.
    pub fn all_punctures(&self) -> u64 {
        if self.genus + 1 == 64 {
            u64::MAX
        } else {
            (1u64 << (self.genus + 1)) - 1
        }
    }

    /// The crossing a strand enters after leaving through `d`, and the slot
    /// it enters by.
    pub fn next_dart(&self, d: Dart) -> Dart {
        self.partner[d.index()]
    }

    /// Index of the crossing with the given id.
    pub fn crossing_index(&self, id: u32) -> Option<usize> {
        self.crossings.binary_search_by_key(&id, |c| c.id).ok()
    }

    /// The same diagram with every crossing switched.
    pub fn mirror(&self) -> Diagram {
        let mut out = self.clone();
        for c in &mut out.crossings {
            c.over ^= 1;
        }
        out
    }

    /// The same diagram with one crossing switched.
    pub fn with_crossing_switched(&self, c: usize) -> Diagram {
        let mut out = self.clone();
        out.crossings[c].over ^= 1;
        out
    }

    /// The same underlying curves with new over/under data, one bit per
    /// crossing index.
    pub fn with_overs(&self, overs: &[u8]) -> Diagram {
        let mut out = self.clone();
        for (c, o) in out.crossings.iter_mut().zip(overs) {
            c.over = *o & 1;
        }
        out
    }

    /// Builds a diagram from a planar diagram code: each crossing lists the
    /// labels of its four arcs counterclockwise, and every label appears
    /// exactly twice. Crossing ids are assigned `0..n`.
    pub fn from_pd(
        genus: usize,
        code: &[([u32; 4], u8)],
        punctures: Vec<Option<FaceRef>>,
        placements: Vec<Placement>,
    ) -> Result<Diagram, DiagramError> {
        let partner = pd_partner(code)?;
        let crossings = code.iter().enumerate().map(|(i, (_, o))| Crossing { id: i as u32, over: *o }).collect();
        Diagram::new(genus, crossings, partner, Vec::new(), punctures, placements)
    }

    /// A connected crossing diagram with every puncture in the given face,
    /// placed at top level with `side` facing outward.
    pub fn connected(
        genus: usize,
        crossings: Vec<Crossing>,
        partner: Vec<Dart>,
        punctures: Vec<Option<FaceRef>>,
        side: FaceRef,
    ) -> Result<Diagram, DiagramError> {
        Diagram::new(genus, crossings, partner, Vec::new(), punctures, vec![Placement { side, host: None }])
    }
}

/// Arc involution from a planar diagram code.
pub fn pd_partner(code: &[([u32; 4], u8)]) -> Result<Vec<Dart>, DiagramError> {
    let mut seen: BTreeMap<u32, Vec<Dart>> = BTreeMap::new();
    for (c, (labels, _)) in code.iter().enumerate() {
        for (s, l) in labels.iter().enumerate() {
            seen.entry(*l).or_default().push(Dart::new(c, s as u8));
        }
    }
    let mut partner = vec![Dart(0); code.len() * 4];
    for (l, ds) in seen {
        match ds.as_slice() {
            [a, b] => {
                partner[a.index()] = *b;
                partner[b.index()] = *a;
            }
            [_] => return Err(DiagramError::DanglingSlot(l.to_string())),
            _ => return Err(DiagramError::SlotConflict(l.to_string())),
        }
    }
    Ok(partner)
}
