//! Global faces, alternation, homology class, simplicity and adequacy.

use std::collections::BTreeSet;

use super::{Dart, Diagram, FaceRef, UnionFind};
use crate::resolution::{canonical_z2, resolve_unchecked, KauffmanState};

/// A face of the whole diagram: piece faces glued across the nesting forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Stable name: the least piece face it contains (`3.1`, `O2.in`), or
    /// `root` for the top-level face when no piece face names it first.
    pub id: String,
    /// Piece-face nodes in this face.
    pub nodes: Vec<usize>,
    /// Corner indices `4c + i` in this face.
    pub corners: Vec<usize>,
    pub punctures: Vec<usize>,
}

impl Face {
    pub fn external(&self) -> bool {
        !self.punctures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceStructure {
    pub faces: Vec<Face>,
    /// Piece-face node -> face index.
    pub face_of_node: Vec<usize>,
    /// Face index of the top level.
    pub root: usize,
    /// Puncture -> face index.
    pub face_of_puncture: Vec<usize>,
}

impl FaceStructure {
    pub fn face_of_corner(&self, d: &Diagram, corner: usize) -> usize {
        self.face_of_node[d.corner_node(corner)]
    }

    pub fn external_count(&self) -> usize {
        self.faces.iter().filter(|f| f.external()).count()
    }
}

/// Homology class in `H_1(S_(g); Z/2)`: the puncture parity vector modulo
/// the all-ones vector, normalised so that puncture 0 is clear.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Z2Class {
    pub genus: usize,
    pub bits: u64,
}

impl Z2Class {
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }
}

impl std::fmt::Display for Z2Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..=self.genus {
            write!(f, "{}", self.bits >> i & 1)?;
        }
        Ok(())
    }
}

/// Crossings that obstruct the simple-diagram hypothesis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicityReport {
    /// Crossings whose removal splits off a part of the piece with no
    /// puncture on its side (nugatory in the punctured sphere).
    pub nugatory: Vec<u32>,
    /// Crossings whose corners meet two distinct external faces.
    pub k_crossings: Vec<u32>,
    /// Crossings meeting one external face at two or more corners.
    pub twice_external: Vec<u32>,
}

impl SimplicityReport {
    pub fn is_simple(&self) -> bool {
        self.nugatory.is_empty() && self.k_crossings.is_empty() && self.twice_external.is_empty()
    }

    /// `k(D)`.
    pub fn k(&self) -> usize {
        self.k_crossings.len()
    }
}

impl Diagram {
    /// Glues piece faces through the nesting forest.
    pub fn faces(&self) -> FaceStructure {
        let m = self.face_node_count();
        let ambient = m;
        let mut uf = UnionFind::new(m + 1);
        for pl in self.placements() {
            let host = pl.host.map_or(ambient, |h| self.face_node(h));
            uf.union(self.face_node(pl.side), host);
        }
        let (label, count) = uf.labels();
        let mut faces: Vec<Face> = (0..count)
            .map(|_| Face { id: String::new(), nodes: Vec::new(), corners: Vec::new(), punctures: Vec::new() })
            .collect();
        for node in 0..m {
            faces[label[node]].nodes.push(node);
        }
        for c in 0..4 * self.crossing_count() {
            faces[label[self.corner_node(c)]].corners.push(c);
        }
        let node_of = |p: &Option<FaceRef>| p.map_or(ambient, |r| self.face_node(r));
        let face_of_puncture: Vec<usize> = self.punctures().iter().map(|p| label[node_of(p)]).collect();
        for (i, f) in face_of_puncture.iter().enumerate() {
            faces[*f].punctures.push(i);
        }
        for f in &mut faces {
            f.id = match f.nodes.first() {
                Some(&n) => self.node_label(n),
                None => "root".to_string(),
            };
        }
        FaceStructure { faces, face_of_node: label[..m].to_vec(), root: label[ambient], face_of_puncture }
    }

    /// Qualified face name: `3.1` for crossing faces, `O2.in` for loops.
    pub fn node_label(&self, node: usize) -> String {
        match self.node_ref(node) {
            FaceRef::Corner { crossing, corner } => format!("{}.{}", self.crossings()[crossing].id, corner),
            FaceRef::Loop { index, inside } => {
                format!("O{}.{}", self.loops()[index], if inside { "in" } else { "out" })
            }
        }
    }

    /// Over/under alternate along every strand. Free loops impose nothing.
    pub fn is_alternating(&self) -> bool {
        let n = self.crossing_count();
        let mut seen = vec![false; 4 * n];
        for start in 0..4 * n {
            if seen[start] {
                continue;
            }
            // walk the component through `start` recording over/under at
            // each crossing entered
            let first = Dart(start as u32);
            let mut d = first;
            let mut pattern = Vec::new();
            loop {
                let e = self.partner(d);
                seen[d.index()] = true;
                seen[e.index()] = true;
                let over = self.crossings()[e.crossing()].over;
                pattern.push(e.slot() % 2 == over);
                d = e.rotate(2);
                if d == first {
                    break;
                }
            }
            let len = pattern.len();
            if (0..len).any(|i| pattern[i] == pattern[(i + 1) % len]) {
                return false;
            }
        }
        true
    }

    /// A single piece (one connected crossing graph, or one free loop).
    pub fn is_connected(&self) -> bool {
        self.pieces().len() <= 1
    }

    /// `g(D)`: number of faces holding punctures, minus one.
    pub fn diagram_genus(&self) -> usize {
        self.faces().external_count() - 1
    }

    /// Homology class of the link in `H_1(S_(g); Z/2)`.
    pub fn z2_class(&self) -> Z2Class {
        let r = resolve_unchecked(self, KauffmanState::plus(self.crossing_count()).signs());
        let raw = r.circles.iter().fold(0u64, |acc, c| acc ^ c.left_side);
        Z2Class { genus: self.genus(), bits: canonical_z2(raw, self.genus()) }
    }

    /// `(plus-adequate, minus-adequate)`: flipping any single crossing of
    /// `s₊` (resp. `s₋`) lowers the number of trivial circles.
    pub fn adequacy(&self) -> (bool, bool) {
        let n = self.crossing_count();
        let check = |base: KauffmanState| {
            let t0 = resolve_unchecked(self, base.signs()).trivial_count;
            (0..n).all(|i| resolve_unchecked(self, base.flipped(i).signs()).trivial_count < t0)
        };
        (check(KauffmanState::plus(n)), check(KauffmanState::minus(n)))
    }

    /// Nugatory crossings and crossings touching external faces.
    pub fn simplicity(&self) -> SimplicityReport {
        let fs = self.faces();
        let mut rep = SimplicityReport::default();
        for c in 0..self.crossing_count() {
            let id = self.crossings()[c].id;
            if self.is_nugatory(c) {
                rep.nugatory.push(id);
            }
            let ext: Vec<usize> =
                (0..4).map(|i| fs.face_of_corner(self, 4 * c + i)).filter(|f| fs.faces[*f].external()).collect();
            let distinct: BTreeSet<usize> = ext.iter().copied().collect();
            if distinct.len() < ext.len() {
                rep.twice_external.push(id);
            } else if distinct.len() >= 2 {
                rep.k_crossings.push(id);
            }
        }
        rep
    }

    /// A crossing is nugatory when two opposite corners lie in one piece
    /// face and one of the two halves it separates holds no puncture (once
    /// nested pieces and placements are followed).
    pub fn is_nugatory(&self, c: usize) -> bool {
        (0..2u8).any(|i| self.nugatory_at(c, i))
    }

    fn nugatory_at(&self, c: usize, i: u8) -> bool {
        let f = self.corner_node(4 * c + i as usize);
        if f != self.corner_node(4 * c + (i as usize + 2) % 4) {
            return false;
        }
        let half = |slots: [u8; 2], corner: u8| {
            let mut crossings = BTreeSet::new();
            let mut stack: Vec<Dart> = slots.iter().map(|s| self.partner(Dart::new(c, *s))).collect();
            while let Some(d) = stack.pop() {
                let x = d.crossing();
                if x == c || !crossings.insert(x) {
                    continue;
                }
                for s in 0..4 {
                    stack.push(self.partner(Dart::new(x, s)));
                }
            }
            let mut nodes: BTreeSet<usize> = crossings
                .iter()
                .flat_map(|x| (0..4).map(move |k| 4 * x + k))
                .map(|corner| self.corner_node(corner))
                .collect();
            nodes.insert(self.corner_node(4 * c + corner as usize % 4));
            nodes.remove(&f);
            nodes
        };
        let h1 = half([(i + 1) % 4, (i + 2) % 4], (i + 1) % 4);
        let h2 = half([(i + 3) % 4, i], (i + 3) % 4);
        let piece = self.piece_of_crossing(c);
        let m = self.face_node_count();
        let ambient = m;
        let mut uf = UnionFind::new(m + 1);
        let join = |uf: &mut UnionFind, a: usize, b: usize| {
            if a != f && b != f {
                uf.union(a, b);
            }
        };
        for pl in self.placements() {
            let host = pl.host.map_or(ambient, |h| self.face_node(h));
            join(&mut uf, self.face_node(pl.side), host);
        }
        for (pi, p) in self.pieces().iter().enumerate() {
            if pi == piece {
                continue;
            }
            for w in p.faces.windows(2) {
                join(&mut uf, w[0], w[1]);
            }
        }
        for h in [&h1, &h2] {
            let v: Vec<usize> = h.iter().copied().collect();
            for w in v.windows(2) {
                join(&mut uf, w[0], w[1]);
            }
        }
        let punct_nodes: Vec<usize> =
            self.punctures().iter().map(|p| p.map_or(ambient, |r| self.face_node(r))).collect();
        [&h1, &h2].iter().any(|h| {
            let Some(&rep) = h.iter().next() else { return true };
            let root = uf.find(rep);
            !punct_nodes.iter().any(|&p| p != f && uf.find(p) == root)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::format::parse;

    #[test]
    fn z2_display_lists_every_puncture() {
        let z = Z2Class { genus: 2, bits: 0b110 };
        assert_eq!(z.to_string(), "011");
    }

    #[test]
    fn loop_around_one_puncture() {
        let d = parse(
            "kbracket-diagram 1\ngenus 1\nO(0)\nP(O0, root, side: out)\nP(puncture 0, root)\nP(puncture 1, O0, in)\n",
        )
        .unwrap();
        assert_eq!(d.z2_class().bits, 0b10);
        assert_eq!(d.diagram_genus(), 1);
        assert!(d.is_alternating());
        assert!(d.is_connected());
    }
}
