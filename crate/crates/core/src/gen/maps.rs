//! Connected 4-regular planar maps and canonical codes.
//!
//! Maps are grown dart by dart: the lowest unmatched dart is joined either
//! to slot 0 of a fresh vertex or to another unmatched dart on the same
//! face of the partial map (unmatched darts act as dangling half-edges).
//! Joining two dangling darts on different faces would raise the genus,
//! so this produces exactly the rooted planar maps, each once.

use crate::diagram::Dart;

const FREE: u32 = u32::MAX;

/// The face of the partial map through corner `start`, as corner indices.
fn partial_face_contains(partner: &[u32], start: usize, target: usize) -> bool {
    let mut cur = start;
    loop {
        if cur == target {
            return true;
        }
        let p = partner[cur];
        let e = if p == FREE { cur } else { p as usize };
        // next corner along the face: one slot clockwise at the far end
        cur = (e & !3) | ((e + 3) & 3);
        if cur == start {
            return false;
        }
    }
}

/// All rooted connected planar 4-regular maps with `n ≥ 1` vertices; the
/// root is slot 0 of vertex 0.
pub fn rooted_maps(n: usize) -> Vec<Vec<Dart>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut partner = vec![FREE; 4 * n];
    grow(&mut partner, 1, n, &mut out);
    out
}

fn grow(partner: &mut Vec<u32>, vertices: usize, n: usize, out: &mut Vec<Vec<Dart>>) {
    let Some(d) = (0..4 * vertices).find(|&i| partner[i] == FREE) else {
        if vertices == n {
            out.push(partner.iter().map(|&p| Dart(p)).collect());
        }
        return;
    };
    if vertices < n {
        let fresh = 4 * vertices;
        partner[d] = fresh as u32;
        partner[fresh] = d as u32;
        grow(partner, vertices + 1, n, out);
        partner[d] = FREE;
        partner[fresh] = FREE;
    }
    for e in d + 1..4 * vertices {
        if partner[e] != FREE || !partial_face_contains(partner, d, e) {
            continue;
        }
        partner[d] = e as u32;
        partner[e] = d as u32;
        // a closed component before all vertices exist can never grow
        let stuck = (0..4 * vertices).all(|i| partner[i] != FREE) && vertices < n;
        if !stuck {
            grow(partner, vertices, n, out);
        }
        partner[d] = FREE;
        partner[e] = FREE;
    }
}

/// Relabelling of a connected map from a root dart: new index and entry
/// slot of every old vertex.
pub(crate) struct Relabel {
    pub new_index: Vec<usize>,
    pub entry: Vec<u8>,
    pub mirror: bool,
}

impl Relabel {
    pub fn new(partner: &[Dart], root: Dart, mirror: bool) -> Relabel {
        let n = partner.len() / 4;
        let mut new_index = vec![usize::MAX; n];
        let mut entry = vec![0u8; n];
        let mut order = vec![root.crossing()];
        new_index[root.crossing()] = 0;
        entry[root.crossing()] = root.slot();
        let mut k = 0;
        while k < order.len() {
            let c = order[k];
            for j in 0..4u8 {
                let old = Self::old_slot(entry[c], j, mirror);
                let p = partner[4 * c + old as usize];
                if new_index[p.crossing()] == usize::MAX {
                    new_index[p.crossing()] = order.len();
                    entry[p.crossing()] = p.slot();
                    order.push(p.crossing());
                }
            }
            k += 1;
        }
        Relabel { new_index, entry, mirror }
    }

    fn old_slot(entry: u8, j: u8, mirror: bool) -> u8 {
        if mirror {
            (entry + 4 - j) % 4
        } else {
            (entry + j) % 4
        }
    }

    pub fn dart(&self, d: Dart) -> usize {
        let e = self.entry[d.crossing()];
        let s = if self.mirror { (e + 4 - d.slot()) % 4 } else { (d.slot() + 4 - e) % 4 };
        4 * self.new_index[d.crossing()] + s as usize
    }

    /// New corner index of old corner `4c + i`.
    pub fn corner(&self, corner: usize) -> usize {
        let (c, i) = (corner / 4, (corner % 4) as u8);
        let e = self.entry[c];
        let j = if self.mirror { (e + 3 + 4 - i) % 4 } else { (i + 4 - e) % 4 };
        4 * self.new_index[c] + j as usize
    }

    /// Over bit in the new slot numbering.
    pub fn over(&self, c: usize, over: u8) -> u8 {
        (over + self.entry[c]) % 2
    }
}

/// Canonical code of an unrooted map: least partner sequence over all
/// roots (and mirror images when `reflections`).
pub fn map_code(partner: &[Dart], reflections: bool) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for r in 0..partner.len() {
        for mirror in [false, true] {
            if mirror && !reflections {
                continue;
            }
            let rl = Relabel::new(partner, Dart(r as u32), mirror);
            let mut code = vec![0u32; partner.len()];
            for (i, p) in partner.iter().enumerate() {
                code[rl.dart(Dart(i as u32))] = rl.dart(*p) as u32;
            }
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

/// Connected planar 4-regular maps with `n` vertices up to orientation
/// preserving homeomorphism (or any homeomorphism with `reflections`),
/// each in its canonical labelling.
pub fn unrooted_maps(n: usize, reflections: bool) -> Vec<Vec<Dart>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for m in rooted_maps(n) {
        let code = map_code(&m, reflections);
        if seen.insert(code.clone()) {
            out.push(code.into_iter().map(Dart).collect());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_counts_match_known_sequence() {
        // rooted planar maps with n edges, via the medial construction
        let expected = [2, 9, 54, 378];
        for (n, e) in (1..=4).zip(expected) {
            assert_eq!(rooted_maps(n).len(), e, "n = {n}");
        }
    }

    #[test]
    fn unrooted_counts() {
        // one-vertex: the figure eight; two vertices: three maps
        assert_eq!(unrooted_maps(1, false).len(), 1);
        assert_eq!(unrooted_maps(2, false).len(), 3);
    }
}
