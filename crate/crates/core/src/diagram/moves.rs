//! Reidemeister moves away from the punctures.
//!
//! Sites are named by crossing id and slot, so they stay meaningful for the
//! caller. New crossings get fresh ids above the current maximum.

use super::{Crossing, Dart, Diagram, FaceRef, Placement};
use crate::error::MoveError;
use crate::resolution::smoothing_partner;

/// Which side of a directed edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A directed edge: the arc leaving `slot` of crossing `crossing`, or a free
/// loop oriented so that its inside is on the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeSite {
    Arc { crossing: u32, slot: u8 },
    Loop { id: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// Adds a kink on `edge` bulging into the face on `side`. With
    /// `positive` the bracket gets multiplied by `-A^3`, otherwise `-A^-3`.
    R1Add { edge: EdgeSite, side: Side, positive: bool },
    /// Removes the kink whose empty monogon is `corner` of `crossing`.
    R1Remove { crossing: u32, corner: u8 },
    /// Pushes a finger of `first` across `second`; both edge sides must
    /// border one face of one piece, on `side` of each edge. The finger runs
    /// over when `first_over`. Contents of the split face go to the part
    /// next to the start of `first` when `contents_at_start`. A loop may be
    /// pushed across itself by naming it twice.
    R2Add { first: EdgeSite, second: EdgeSite, side: Side, first_over: bool, contents_at_start: bool },
    /// Removes the two crossings around the empty bigon at `corner` of
    /// `crossing`.
    R2Remove { crossing: u32, corner: u8 },
    /// Slides a strand across the empty triangle at `corner` of `crossing`.
    R3 { crossing: u32, corner: u8 },
}

/// Result of a move: `⟨after⟩ = (-A^3)^framing ⟨before⟩`.
#[derive(Clone, Debug)]
pub struct Applied {
    pub diagram: Diagram,
    pub framing: i32,
}

impl Move {
    pub fn crossing_delta(&self) -> i32 {
        match self {
            Move::R1Add { .. } => 1,
            Move::R1Remove { .. } => -1,
            Move::R2Add { .. } => 2,
            Move::R2Remove { .. } => -2,
            Move::R3 { .. } => 0,
        }
    }
}

struct Parts {
    genus: usize,
    crossings: Vec<Crossing>,
    partner: Vec<Dart>,
    loops: Vec<u32>,
}

impl Parts {
    fn of(d: &Diagram) -> Parts {
        Parts {
            genus: d.genus(),
            crossings: d.crossings().to_vec(),
            partner: d.darts().to_vec(),
            loops: d.loops().to_vec(),
        }
    }

    fn next_id(&self) -> u32 {
        self.crossings.iter().map(|c| c.id + 1).max().unwrap_or(0)
    }

    fn next_loop_id(&self) -> u32 {
        self.loops.iter().map(|l| l + 1).max().unwrap_or(0)
    }

    fn push_crossing(&mut self, over: u8) -> usize {
        let id = self.next_id();
        self.crossings.push(Crossing { id, over });
        self.partner.extend((0..4).map(|_| Dart(u32::MAX)));
        self.crossings.len() - 1
    }

    fn join(&mut self, a: Dart, b: Dart) {
        self.partner[a.index()] = b;
        self.partner[b.index()] = a;
    }

    /// Drops the given crossings; partners of the remaining darts must not
    /// point at them.
    fn remove_crossings(&mut self, removed: &[usize]) {
        let shift = |c: usize| c - removed.iter().filter(|&&r| r < c).count();
        let mut crossings = Vec::new();
        let mut partner = Vec::new();
        for (c, x) in self.crossings.iter().enumerate() {
            if removed.contains(&c) {
                continue;
            }
            crossings.push(*x);
            for s in 0..4 {
                let p = self.partner[4 * c + s];
                partner.push(Dart::new(shift(p.crossing()), p.slot()));
            }
        }
        self.crossings = crossings;
        self.partner = partner;
    }

    fn build(self, d: &Diagram, remap: impl Fn(FaceRef) -> FaceRef) -> Result<Diagram, crate::error::DiagramError> {
        let punctures = d.punctures().iter().map(|p| p.map(&remap)).collect();
        let placements =
            d.placements().iter().map(|pl| Placement { side: remap(pl.side), host: pl.host.map(&remap) }).collect();
        Diagram::new(self.genus, self.crossings, self.partner, self.loops, punctures, placements)
    }
}

fn site_dart(d: &Diagram, crossing: u32, slot: u8) -> Result<Dart, MoveError> {
    let c = d.crossing_index(crossing).ok_or_else(|| MoveError::NoSuchSite(format!("crossing {crossing}")))?;
    if slot > 3 {
        return Err(MoveError::NoSuchSite(format!("slot {crossing}.{slot}")));
    }
    Ok(Dart::new(c, slot))
}

fn loop_index(d: &Diagram, id: u32) -> Result<usize, MoveError> {
    d.loops().binary_search(&id).map_err(|_| MoveError::NoSuchSite(format!("loop {id}")))
}

/// The face node must hold nothing: no punctures, no nested pieces, and not
/// be the outward side of its own piece.
fn check_empty(d: &Diagram, node: usize) -> Result<(), MoveError> {
    let fs = d.faces();
    let f = &fs.faces[fs.face_of_node[node]];
    if f.nodes.len() != 1 || f.external() || fs.face_of_node[node] == fs.root {
        return Err(MoveError::OccupiedFace);
    }
    let pl = d.placement_of_piece(d.node_piece(node));
    if d.face_node(pl.side) == node {
        return Err(MoveError::OccupiedFace);
    }
    Ok(())
}

/// Remaps a face reference after deleting crossings: a corner on a deleted
/// crossing moves to another corner of the same face.
fn remap_after_removal(d: &Diagram, removed: &[usize], r: FaceRef) -> Option<FaceRef> {
    let shift = |c: usize| c - removed.iter().filter(|&&x| x < c).count();
    match r {
        FaceRef::Corner { crossing, corner } if !removed.contains(&crossing) => {
            Some(FaceRef::corner(shift(crossing), corner))
        }
        FaceRef::Corner { .. } => {
            let node = d.face_node(r);
            (0..4 * d.crossing_count())
                .find(|&k| !removed.contains(&(k / 4)) && d.corner_node(k) == node)
                .map(|k| FaceRef::corner(shift(k / 4), (k % 4) as u8))
        }
        other => Some(other),
    }
}

fn loop_removed(r: FaceRef, li: usize) -> FaceRef {
    match r {
        FaceRef::Loop { index, inside } if index > li => FaceRef::Loop { index: index - 1, inside },
        other => other,
    }
}

fn over_for_sign(positive: bool, m1: u8, m2: u8) -> u8 {
    // the positive kink closes its monogon under the +1 smoothing
    (0..2).find(|&o| (smoothing_partner(o, 1, m1) == m2) == positive).unwrap()
}

/// `(-A^3)` exponent contributed by the kink with monogon `corner` at `c`.
pub fn kink_framing(d: &Diagram, c: usize, corner: u8) -> i32 {
    let over = d.crossings()[c].over;
    if smoothing_partner(over, 1, corner) == (corner + 1) % 4 {
        1
    } else {
        -1
    }
}

pub fn apply_move(d: &Diagram, mv: &Move) -> Result<Diagram, MoveError> {
    apply_move_framed(d, mv).map(|a| a.diagram)
}

pub fn apply_move_framed(d: &Diagram, mv: &Move) -> Result<Applied, MoveError> {
    match *mv {
        Move::R1Add { edge, side, positive } => r1_add(d, edge, side, positive),
        Move::R1Remove { crossing, corner } => r1_remove(d, crossing, corner),
        Move::R2Add { first, second, side, first_over, contents_at_start } => {
            r2_add(d, first, second, side, first_over, contents_at_start)
        }
        Move::R2Remove { crossing, corner } => r2_remove(d, crossing, corner),
        Move::R3 { crossing, corner } => r3(d, crossing, corner),
    }
    .map(|(diagram, framing)| Applied { diagram, framing })
}

fn r1_add(d: &Diagram, edge: EdgeSite, side: Side, positive: bool) -> Result<(Diagram, i32), MoveError> {
    let framing = if positive { 1 } else { -1 };
    let mut p = Parts::of(d);
    match edge {
        EdgeSite::Arc { crossing, slot } => {
            let a = site_dart(d, crossing, slot)?;
            let e = d.partner(a);
            // monogon on the right uses slots (1, 2), on the left (2, 3)
            let (m1, m2, exit) = match side {
                Side::Right => (1, 2, 3),
                Side::Left => (2, 3, 1),
            };
            let x = p.push_crossing(over_for_sign(positive, m1, m2));
            p.join(a, Dart::new(x, 0));
            p.join(Dart::new(x, m1), Dart::new(x, m2));
            p.join(Dart::new(x, exit), e);
            Ok((p.build(d, |r| r).expect("kink keeps the diagram valid"), framing))
        }
        EdgeSite::Loop { id } => {
            let li = loop_index(d, id)?;
            let x = p.push_crossing(over_for_sign(positive, 1, 2));
            p.join(Dart::new(x, 2), Dart::new(x, 1));
            p.join(Dart::new(x, 3), Dart::new(x, 0));
            p.loops.remove(li);
            // the new monogon is corner 1; the bulged-into side meets corners 0 and 2
            let kink_inside = side == Side::Left;
            let remap = |r: FaceRef| match r {
                FaceRef::Loop { index, inside } if index == li => {
                    FaceRef::corner(x, if inside == kink_inside { 0 } else { 3 })
                }
                other => loop_removed(other, li),
            };
            Ok((p.build(d, remap).expect("kinked loop is valid"), framing))
        }
    }
}

fn r1_remove(d: &Diagram, crossing: u32, corner: u8) -> Result<(Diagram, i32), MoveError> {
    let m = site_dart(d, crossing, corner)?;
    let c = m.crossing();
    let i = m.slot();
    if d.partner(m) != m.rotate(1) {
        return Err(MoveError::NotAKink);
    }
    check_empty(d, d.corner_node(m.index()))?;
    let framing = -kink_framing(d, c, i);
    let a = d.partner(m.rotate(2));
    let b = d.partner(m.rotate(3));
    let mut p = Parts::of(d);
    if a.crossing() == c {
        // a one-crossing piece unwinds into a free loop
        let li = p.loops.len();
        let id = p.next_loop_id();
        p.loops.push(id);
        p.remove_crossings(&[c]);
        let inner = d.corner_node(m.rotate(2).index());
        let remap = |r: FaceRef| match r {
            FaceRef::Corner { crossing: x, .. } if x == c => {
                FaceRef::Loop { index: li, inside: d.face_node(r) == inner }
            }
            FaceRef::Corner { crossing: x, corner } => FaceRef::corner(x - usize::from(x > c), corner),
            other => other,
        };
        return Ok((p.build(d, remap).expect("unkinked loop is valid"), framing));
    }
    p.join(a, b);
    p.remove_crossings(&[c]);
    let remap = |r: FaceRef| remap_after_removal(d, &[c], r).expect("faces next to a kink survive");
    Ok((p.build(d, remap).expect("kink removal keeps the diagram valid"), framing))
}

fn r2_add(
    d: &Diagram,
    first: EdgeSite,
    second: EdgeSite,
    side: Side,
    first_over: bool,
    contents_at_start: bool,
) -> Result<(Diagram, i32), MoveError> {
    let over = if first_over { 0 } else { 1 };
    let mut p = Parts::of(d);
    match (first, second) {
        (EdgeSite::Loop { id: l1 }, EdgeSite::Loop { id: l2 }) if l1 == l2 => {
            let li = loop_index(d, l1)?;
            let x = p.push_crossing(over);
            let y = p.push_crossing(over);
            p.join(Dart::new(x, 3), Dart::new(x, 0));
            p.join(Dart::new(x, 2), Dart::new(y, 0));
            p.join(Dart::new(y, 2), Dart::new(y, 3));
            p.join(Dart::new(y, 1), Dart::new(x, 1));
            p.loops.remove(li);
            let split = side == Side::Left;
            let remap = |r: FaceRef| match r {
                FaceRef::Loop { index, inside } if index == li => {
                    if inside == split {
                        if contents_at_start {
                            FaceRef::corner(x, 3)
                        } else {
                            FaceRef::corner(y, 2)
                        }
                    } else {
                        FaceRef::corner(x, 0)
                    }
                }
                other => loop_removed(other, li),
            };
            Ok((p.build(d, remap).expect("finger on a loop is valid"), 0))
        }
        (EdgeSite::Arc { crossing: c1, slot: s1 }, EdgeSite::Arc { crossing: c2, slot: s2 }) => {
            let mut a = site_dart(d, c1, s1)?;
            let mut b = site_dart(d, c2, s2)?;
            if side == Side::Right {
                a = d.partner(a);
                b = d.partner(b);
            }
            if a == b || d.partner(a) == b {
                return Err(MoveError::NotCoFacial);
            }
            let face = d.corner_node(a.index());
            if face != d.corner_node(b.index()) {
                return Err(MoveError::NotCoFacial);
            }
            let (a2, b2) = (d.partner(a), d.partner(b));
            let x = p.push_crossing(over);
            let y = p.push_crossing(over);
            p.join(a, Dart::new(x, 0));
            p.join(Dart::new(x, 2), Dart::new(y, 0));
            p.join(Dart::new(y, 2), a2);
            p.join(b, Dart::new(y, 3));
            p.join(Dart::new(y, 1), Dart::new(x, 1));
            p.join(Dart::new(x, 3), b2);
            let target = if contents_at_start { FaceRef::corner(x, 3) } else { FaceRef::corner(y, 2) };
            let remap = |r: FaceRef| match r {
                FaceRef::Corner { .. } if d.face_node(r) == face => target,
                other => other,
            };
            Ok((p.build(d, remap).expect("finger move keeps the diagram valid"), 0))
        }
        _ => Err(MoveError::NotCoFacial),
    }
}

/// The two corners of a piece face with exactly `k` corners on distinct
/// crossings, listed along the face boundary starting at `start`.
fn face_cycle(d: &Diagram, start: Dart) -> Vec<Dart> {
    // corner (c, i) -> next corner along the face: follow the arc leaving
    // slot i; the face continues at corner (c', j - 1)
    let mut out = vec![start];
    let mut cur = start;
    loop {
        let e = d.partner(cur);
        let next = e.rotate(-1);
        if next == start {
            break;
        }
        out.push(next);
        cur = next;
        if out.len() > 4 * d.crossing_count() {
            break;
        }
    }
    out
}

fn over_at(d: &Diagram, dart: Dart) -> bool {
    dart.slot() % 2 == d.crossings()[dart.crossing()].over
}

fn r2_remove(d: &Diagram, crossing: u32, corner: u8) -> Result<(Diagram, i32), MoveError> {
    let m = site_dart(d, crossing, corner)?;
    let cyc = face_cycle(d, m);
    if cyc.len() != 2 || cyc[0].crossing() == cyc[1].crossing() {
        return Err(MoveError::NotABigon);
    }
    let (x, y) = (cyc[0].crossing(), cyc[1].crossing());
    // bigon edges: x.i -> y.(j+1) and y.j -> x.(i+1)
    let e1 = (cyc[0], d.partner(cyc[0]));
    let e2 = (cyc[1], d.partner(cyc[1]));
    let o1 = (over_at(d, e1.0), over_at(d, e1.1));
    let o2 = (over_at(d, e2.0), over_at(d, e2.1));
    if !(o1.0 == o1.1 && o2.0 == o2.1 && o1.0 != o2.0) {
        return Err(MoveError::NotABigon);
    }
    check_empty(d, d.corner_node(m.index()))?;
    // each strand through the bigon: far ends beyond x and beyond y
    let strands = [(e1.0.rotate(2), e1.1.rotate(2)), (e2.1.rotate(2), e2.0.rotate(2))];
    let ends: Vec<(Dart, Dart)> = strands.iter().map(|(u, v)| (d.partner(*u), d.partner(*v))).collect();
    let touches = ends.iter().any(|(u, v)| [u, v].iter().any(|w| w.crossing() == x || w.crossing() == y));
    let mut removed = [x, y];
    removed.sort_unstable();
    let piece = d.piece_of_crossing(x);
    let mut p = Parts::of(d);
    if touches {
        if d.pieces()[piece].crossings.len() != 2 || !single_curve(d, &strands) {
            return Err(MoveError::WouldDisconnect);
        }
        let li = p.loops.len();
        let id = p.next_loop_id();
        p.loops.push(id);
        p.remove_crossings(&removed);
        let merged = [d.corner_node(cyc[0].rotate(2).index()), d.corner_node(cyc[1].rotate(2).index())];
        let remap = |r: FaceRef| match r {
            FaceRef::Corner { crossing: c, .. } if removed.contains(&c) => {
                FaceRef::Loop { index: li, inside: merged.contains(&d.face_node(r)) }
            }
            FaceRef::Corner { crossing: c, corner } => {
                FaceRef::corner(c - removed.iter().filter(|&&k| k < c).count(), corner)
            }
            other => other,
        };
        return Ok((p.build(d, remap).map_err(|_| MoveError::WouldDisconnect)?, 0));
    }
    for (u, v) in &ends {
        p.join(*u, *v);
    }
    p.remove_crossings(&removed);
    let mut refs = Vec::new();
    for r in d.punctures().iter().flatten().chain(d.placements().iter().flat_map(|pl| pl.host.iter().chain([&pl.side])))
    {
        refs.push((*r, remap_after_removal(d, &removed, *r).ok_or(MoveError::WouldDisconnect)?));
    }
    let remap = |r: FaceRef| refs.iter().find(|(a, _)| *a == r).map(|(_, b)| *b).unwrap_or(r);
    let out = p.build(d, remap).map_err(|_| MoveError::WouldDisconnect)?;
    if out.pieces().len() != d.pieces().len() {
        return Err(MoveError::WouldDisconnect);
    }
    Ok((out, 0))
}

/// Whether a two-crossing piece becomes one closed curve after the bigon's
/// strands are pulled apart.
fn single_curve(d: &Diagram, strands: &[(Dart, Dart); 2]) -> bool {
    let through = |w: Dart| {
        strands.iter().find_map(|(u, v)| {
            if *u == w {
                Some(*v)
            } else if *v == w {
                Some(*u)
            } else {
                None
            }
        })
    };
    let start = strands[0].0;
    let mut cur = start;
    let mut visited = 0;
    loop {
        let Some(t) = through(cur) else { return false };
        visited += 2;
        cur = d.partner(t);
        if cur == start {
            break;
        }
        if visited > 4 {
            return false;
        }
    }
    visited == 4
}

fn r3(d: &Diagram, crossing: u32, corner: u8) -> Result<(Diagram, i32), MoveError> {
    let m = site_dart(d, crossing, corner)?;
    let cyc = face_cycle(d, m);
    if cyc.len() != 3 {
        return Err(MoveError::NotATriangle);
    }
    let cs: Vec<usize> = cyc.iter().map(|t| t.crossing()).collect();
    if cs[0] == cs[1] || cs[1] == cs[2] || cs[0] == cs[2] {
        return Err(MoveError::NotATriangle);
    }
    // the edge leaving T_k at slot t_k lands at T_{k+1} slot t_{k+1} + 1
    let edge_overs: Vec<(bool, bool)> = (0..3).map(|k| (over_at(d, cyc[k]), over_at(d, d.partner(cyc[k])))).collect();
    let both_over = edge_overs.iter().filter(|(a, b)| *a && *b).count();
    let both_under = edge_overs.iter().filter(|(a, b)| !*a && !*b).count();
    if both_over != 1 || both_under != 1 {
        return Err(MoveError::NotATriangle);
    }
    check_empty(d, d.corner_node(m.index()))?;
    let t = |k: usize, s: u8| cyc[k % 3].rotate(s as i32);
    // external darts move: old slot -> new slot
    let moved: [(Dart, Dart); 6] = [
        (t(1, 3), t(0, 0)),
        (t(2, 2), t(0, 1)),
        (t(0, 2), t(1, 1)),
        (t(2, 3), t(1, 0)),
        (t(0, 3), t(2, 0)),
        (t(1, 2), t(2, 1)),
    ];
    let to_new = |w: Dart| moved.iter().find(|(o, _)| *o == w).map_or(w, |(_, n)| *n);
    let mut p = Parts::of(d);
    for (old, new) in &moved {
        let outside = d.partner(*old);
        p.join(*new, to_new(outside));
    }
    p.join(t(0, 2), t(1, 3));
    p.join(t(1, 2), t(2, 3));
    p.join(t(2, 2), t(0, 3));
    // faces around the triangle: old vertex face at T_k -> T_{k+1} corner
    // t+1; old edge face across T_k T_{k+1} -> T_{k+2} corner t
    let mut face_map = Vec::new();
    for k in 0..3 {
        face_map.push((d.corner_node(t(k, 2).index()), FaceRef::corner(cs[(k + 1) % 3], t(k + 1, 1).slot())));
        face_map.push((d.corner_node(t(k, 3).index()), FaceRef::corner(cs[(k + 2) % 3], t(k + 2, 0).slot())));
    }
    let touched = |c: usize| cs.contains(&c);
    let remap = |r: FaceRef| match r {
        FaceRef::Corner { crossing: c, .. } if touched(c) => {
            let node = d.face_node(r);
            face_map.iter().find(|(n, _)| *n == node).map(|(_, f)| *f).unwrap_or(r)
        }
        other => other,
    };
    Ok((p.build(d, remap).expect("R3 keeps the diagram valid"), 0))
}

/// Every move that applies to `d`, in a fixed order.
pub fn legal_moves(d: &Diagram) -> Vec<Move> {
    let mut out = Vec::new();
    let mut candidates = Vec::new();
    let edges: Vec<EdgeSite> = d
        .darts()
        .iter()
        .enumerate()
        .filter(|(i, p)| *i < p.index())
        .map(|(i, _)| {
            let dart = Dart(i as u32);
            EdgeSite::Arc { crossing: d.crossings()[dart.crossing()].id, slot: dart.slot() }
        })
        .chain(d.loops().iter().map(|&id| EdgeSite::Loop { id }))
        .collect();
    for &edge in &edges {
        for side in [Side::Left, Side::Right] {
            for positive in [true, false] {
                candidates.push(Move::R1Add { edge, side, positive });
            }
        }
    }
    for x in d.crossings() {
        for corner in 0..4 {
            candidates.push(Move::R1Remove { crossing: x.id, corner });
            candidates.push(Move::R2Remove { crossing: x.id, corner });
            candidates.push(Move::R3 { crossing: x.id, corner });
        }
    }
    for &id in d.loops() {
        for side in [Side::Left, Side::Right] {
            for first_over in [true, false] {
                let e = EdgeSite::Loop { id };
                candidates.push(Move::R2Add { first: e, second: e, side, first_over, contents_at_start: true });
            }
        }
    }
    // both directions of every arc: the face on the left
    let darts: Vec<(Dart, EdgeSite)> = (0..d.darts().len())
        .map(|i| {
            let dart = Dart(i as u32);
            (dart, EdgeSite::Arc { crossing: d.crossings()[dart.crossing()].id, slot: dart.slot() })
        })
        .collect();
    for (i, (a, ea)) in darts.iter().enumerate() {
        for (b, eb) in &darts[i + 1..] {
            if d.corner_node(a.index()) == d.corner_node(b.index()) && d.partner(*a) != *b {
                for first_over in [true, false] {
                    candidates.push(Move::R2Add {
                        first: *ea,
                        second: *eb,
                        side: Side::Left,
                        first_over,
                        contents_at_start: true,
                    });
                }
            }
        }
    }
    for mv in candidates {
        if apply_move(d, &mv).is_ok() {
            out.push(mv);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::format::parse;

    fn unknot() -> Diagram {
        parse("kbracket-diagram 1\ngenus 0\nO(0)\nP(O0, root, side: out)\nP(puncture 0, root)\n").unwrap()
    }

    #[test]
    fn kink_round_trip() {
        let d = unknot();
        let a =
            apply_move_framed(&d, &Move::R1Add { edge: EdgeSite::Loop { id: 0 }, side: Side::Left, positive: true })
                .unwrap();
        assert_eq!(a.diagram.crossing_count(), 1);
        assert_eq!(a.framing, 1);
        let back = apply_move_framed(&a.diagram, &Move::R1Remove { crossing: 0, corner: 1 }).unwrap();
        assert_eq!(back.diagram.crossing_count(), 0);
        assert_eq!(back.framing, -1);
    }

    #[test]
    fn r3_on_non_triangle_is_rejected() {
        let d = unknot();
        let k =
            apply_move(&d, &Move::R1Add { edge: EdgeSite::Loop { id: 0 }, side: Side::Left, positive: true }).unwrap();
        assert_eq!(apply_move(&k, &Move::R3 { crossing: 0, corner: 1 }).unwrap_err(), MoveError::NotATriangle);
    }

    #[test]
    fn finger_on_loop_and_back() {
        let d = unknot();
        let e = EdgeSite::Loop { id: 0 };
        let two = apply_move(
            &d,
            &Move::R2Add { first: e, second: e, side: Side::Left, first_over: true, contents_at_start: true },
        )
        .unwrap();
        assert_eq!(two.crossing_count(), 2);
        let back = apply_move(&two, &Move::R2Remove { crossing: 0, corner: 1 }).unwrap();
        assert_eq!(back.crossing_count(), 0);
        assert_eq!(back.loops().len(), 1);
    }
}
