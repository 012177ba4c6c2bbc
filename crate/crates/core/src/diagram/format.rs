//! Plain-text diagram format.
//!
//! ```text
//! kbracket-diagram 1
//! genus 1
//! # crossings: id, the four slot labels counterclockwise, over-strand
//! X(0, [a, b, c, d], over: 0)
//! # arcs join two slots
//! E(0, a, c)
//! E(1, b, d)
//! # free loops
//! O(7)
//! # placements of pieces: outward side, then host face or root
//! P(X0, root, side: 0.3)
//! P(O7, X0, 0.1, side: out)
//! # punctures
//! P(puncture 0, root)
//! P(puncture 1, O7, in)
//! ```
//!
//! Pieces are named `X<crossing id>` (any crossing of the piece) or
//! `O<loop id>`. Faces of a crossing piece are named `<crossing id>.<corner>`,
//! faces of a loop `in` and `out`. Lines starting with `#` are comments.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::{Crossing, Dart, Diagram, FaceRef, Placement};
use crate::error::DiagramError;

pub const FORMAT_VERSION: u32 = 1;

fn syntax(line: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::Syntax { line, msg: msg.into() }
}

/// Splits `NAME(a, b, [c, d], e)` into the name and top-level arguments.
fn statement(line: usize, text: &str) -> Result<(String, Vec<String>), DiagramError> {
    let open = text.find('(').ok_or_else(|| syntax(line, "expected `(`"))?;
    if !text.ends_with(')') {
        return Err(syntax(line, "expected `)` at end of line"));
    }
    let name = text[..open].trim().to_string();
    let body = &text[open + 1..text.len() - 1];
    let mut args = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in body.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(syntax(line, "unbalanced `]`"));
                }
                cur.push(ch);
            }
            ',' if depth == 0 => args.push(std::mem::take(&mut cur).trim().to_string()),
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(syntax(line, "unbalanced `[`"));
    }
    args.push(cur.trim().to_string());
    if args.len() == 1 && args[0].is_empty() {
        args.clear();
    }
    Ok((name, args))
}

fn ident(line: usize, s: &str) -> Result<String, DiagramError> {
    if !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.' || c == '-') {
        Ok(s.to_string())
    } else {
        Err(syntax(line, format!("bad identifier `{s}`")))
    }
}

fn number<T: std::str::FromStr>(line: usize, s: &str) -> Result<T, DiagramError> {
    s.trim().parse().map_err(|_| syntax(line, format!("expected a number, found `{s}`")))
}

fn keyed<'a>(line: usize, s: &'a str, key: &str) -> Result<&'a str, DiagramError> {
    let rest = s
        .strip_prefix(key)
        .and_then(|r| r.trim_start().strip_prefix(':'))
        .ok_or_else(|| syntax(line, format!("expected `{key}: ...`, found `{s}`")))?;
    Ok(rest.trim())
}

enum PieceName {
    Crossing(u32),
    Loop(u32),
}

fn piece_name(line: usize, s: &str) -> Result<PieceName, DiagramError> {
    if let Some(r) = s.strip_prefix('X') {
        Ok(PieceName::Crossing(number(line, r)?))
    } else if let Some(r) = s.strip_prefix('O') {
        Ok(PieceName::Loop(number(line, r)?))
    } else {
        Err(syntax(line, format!("expected a piece name `X<id>` or `O<id>`, found `{s}`")))
    }
}

/// Line of a puncture statement and its host `(piece, face)`, if any.
type PunctureLine = (usize, Option<(String, String)>);

struct RawPlacement {
    line: usize,
    piece: String,
    host: Option<(String, String)>,
    side: String,
}

/// Reads a diagram from text.
pub fn parse(text: &str) -> Result<Diagram, DiagramError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    let version =
        header.strip_prefix("kbracket-diagram").ok_or_else(|| syntax(hl, "expected header `kbracket-diagram 1`"))?;
    let version: u32 = number(hl, version)?;
    if version != FORMAT_VERSION {
        return Err(DiagramError::Version(version));
    }
    let (gl, gline) = lines.next().ok_or_else(|| syntax(hl, "expected `genus <g>`"))?;
    let genus: usize = number(gl, gline.strip_prefix("genus").ok_or_else(|| syntax(gl, "expected `genus <g>`"))?)?;
    if genus > super::MAX_GENUS {
        return Err(DiagramError::GenusTooLarge(genus));
    }

    let mut crossings: BTreeMap<u32, (u8, [String; 4])> = BTreeMap::new();
    let mut slot_owner: HashMap<String, (u32, u8)> = HashMap::new();
    let mut arcs: Vec<(usize, String, String)> = Vec::new();
    let mut arc_ids: HashSet<String> = HashSet::new();
    let mut loops: Vec<u32> = Vec::new();
    let mut punctures: Vec<Option<PunctureLine>> = vec![None; genus + 1];
    let mut raw_placements: Vec<RawPlacement> = Vec::new();

    for (ln, l) in lines {
        let (name, args) = statement(ln, l)?;
        match name.as_str() {
            "X" => {
                if args.len() != 3 {
                    return Err(syntax(ln, "X takes (id, [slots], over: 0|1)"));
                }
                let id: u32 = number(ln, &args[0])?;
                let slots = args[1]
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| syntax(ln, "expected a slot list `[a, b, c, d]`"))?;
                let slots: Vec<String> = slots.split(',').map(|s| ident(ln, s.trim())).collect::<Result<_, _>>()?;
                let slots: [String; 4] =
                    slots.try_into().map_err(|_| syntax(ln, "a crossing has exactly four slots"))?;
                let over: u8 = number(ln, keyed(ln, &args[2], "over")?)?;
                if over > 1 {
                    return Err(syntax(ln, "over must be 0 or 1"));
                }
                for (k, s) in slots.iter().enumerate() {
                    if slot_owner.insert(s.clone(), (id, k as u8)).is_some() {
                        return Err(DiagramError::SlotConflict(s.clone()));
                    }
                }
                if crossings.insert(id, (over, slots)).is_some() {
                    return Err(DiagramError::DuplicateId(format!("X{id}")));
                }
            }
            "E" => {
                if args.len() != 3 {
                    return Err(syntax(ln, "E takes (id, slot, slot)"));
                }
                let id = ident(ln, &args[0])?;
                if !arc_ids.insert(id.clone()) {
                    return Err(DiagramError::DuplicateId(format!("E{id}")));
                }
                arcs.push((ln, ident(ln, &args[1])?, ident(ln, &args[2])?));
            }
            "O" => {
                if args.len() != 1 {
                    return Err(syntax(ln, "O takes (id)"));
                }
                let id: u32 = number(ln, &args[0])?;
                if loops.contains(&id) {
                    return Err(DiagramError::DuplicateId(format!("O{id}")));
                }
                loops.push(id);
            }
            "P" => {
                if args.is_empty() {
                    return Err(syntax(ln, "empty placement"));
                }
                if let Some(k) = args[0].strip_prefix("puncture") {
                    let k: usize = number(ln, k)?;
                    let host = match args.len() {
                        2 if args[1] == "root" => None,
                        3 => Some((args[1].clone(), args[2].clone())),
                        _ => return Err(syntax(ln, "expected `P(puncture k, root)` or `P(puncture k, piece, face)`")),
                    };
                    if k > genus {
                        return Err(DiagramError::PunctureCount { expected: genus + 1, found: k + 1 });
                    }
                    if punctures[k].is_some() {
                        return Err(DiagramError::DuplicatePuncture(k));
                    }
                    punctures[k] = Some((ln, host));
                } else {
                    let side = keyed(ln, args.last().unwrap(), "side")?.to_string();
                    let host = match args.len() {
                        3 if args[1] == "root" => None,
                        4 => Some((args[1].clone(), args[2].clone())),
                        _ => {
                            return Err(syntax(
                                ln,
                                "expected `P(piece, root, side: f)` or `P(piece, host, face, side: f)`",
                            ))
                        }
                    };
                    raw_placements.push(RawPlacement { line: ln, piece: args[0].clone(), host, side });
                }
            }
            other => return Err(syntax(ln, format!("unknown statement `{other}`"))),
        }
    }

    // crossings by increasing id
    let index: BTreeMap<u32, usize> = crossings.keys().enumerate().map(|(i, id)| (*id, i)).collect();
    let n = crossings.len();
    let mut partner: Vec<Option<Dart>> = vec![None; 4 * n];
    let dart_of = |s: &str| -> Result<Dart, DiagramError> {
        let (id, k) = slot_owner.get(s).ok_or_else(|| DiagramError::UnknownSlot(s.to_string()))?;
        Ok(Dart::new(index[id], *k))
    };
    for (_, a, b) in &arcs {
        let (da, db) = (dart_of(a)?, dart_of(b)?);
        if da == db {
            return Err(DiagramError::SlotConflict(a.clone()));
        }
        for (d, name) in [(da, a), (db, b)] {
            if partner[d.index()].is_some() {
                return Err(DiagramError::SlotConflict(name.clone()));
            }
        }
        partner[da.index()] = Some(db);
        partner[db.index()] = Some(da);
    }
    let slot_names: Vec<&String> = crossings.values().flat_map(|(_, s)| s.iter()).collect();
    let partner: Vec<Dart> = partner
        .iter()
        .enumerate()
        .map(|(i, p)| p.ok_or_else(|| DiagramError::DanglingSlot(slot_names[i].clone())))
        .collect::<Result<_, _>>()?;
    let crossing_list: Vec<Crossing> =
        crossings.iter().map(|(id, (over, _))| Crossing { id: *id, over: *over }).collect();
    loops.sort_unstable();

    // piece and face names need the crossing-piece decomposition
    let mut cuf = super::UnionFind::new(n);
    for (i, p) in partner.iter().enumerate() {
        cuf.union(i / 4, p.crossing());
    }
    let face_ref = |ln: usize, piece: &str, face: &str, cuf: &mut super::UnionFind| -> Result<FaceRef, DiagramError> {
        let unknown = || DiagramError::UnknownFace { piece: piece.to_string(), face: face.to_string() };
        match piece_name(ln, piece)? {
            PieceName::Crossing(id) => {
                let pc = *index.get(&id).ok_or_else(|| DiagramError::UnknownPiece(piece.to_string()))?;
                let (cid, corner) = face.split_once('.').ok_or_else(unknown)?;
                let cid: u32 = cid.parse().map_err(|_| unknown())?;
                let corner: u8 = corner.parse().map_err(|_| unknown())?;
                let c = *index.get(&cid).ok_or_else(unknown)?;
                if corner > 3 || cuf.find(c) != cuf.find(pc) {
                    return Err(unknown());
                }
                Ok(FaceRef::corner(c, corner))
            }
            PieceName::Loop(id) => {
                let li = loops.binary_search(&id).map_err(|_| DiagramError::UnknownPiece(piece.to_string()))?;
                match face {
                    "in" => Ok(FaceRef::Loop { index: li, inside: true }),
                    "out" => Ok(FaceRef::Loop { index: li, inside: false }),
                    _ => Err(unknown()),
                }
            }
        }
    };
    let mut puncture_refs = Vec::with_capacity(genus + 1);
    for (k, p) in punctures.iter().enumerate() {
        let (ln, host) = p.as_ref().ok_or(DiagramError::PunctureCount { expected: genus + 1, found: k })?;
        puncture_refs.push(match host {
            None => None,
            Some((piece, face)) => Some(face_ref(*ln, piece, face, &mut cuf)?),
        });
    }
    let mut placements = Vec::with_capacity(raw_placements.len());
    for rp in &raw_placements {
        let side = face_ref(rp.line, &rp.piece, &rp.side, &mut cuf)?;
        let host = match &rp.host {
            None => None,
            Some((piece, face)) => Some(face_ref(rp.line, piece, face, &mut cuf)?),
        };
        placements.push(Placement { side, host });
    }
    Diagram::new(genus, crossing_list, partner, loops, puncture_refs, placements)
}

/// Writes a diagram in canonical form; `parse(serialize(d)) == d` and the
/// output is byte-stable.
pub fn serialize(d: &Diagram) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "kbracket-diagram {FORMAT_VERSION}");
    let _ = writeln!(out, "genus {}", d.genus());
    let slot = |dart: Dart| format!("{}.{}", d.crossings()[dart.crossing()].id, dart.slot());
    for (c, x) in d.crossings().iter().enumerate() {
        let s: Vec<String> = (0..4).map(|k| slot(Dart::new(c, k))).collect();
        let _ = writeln!(out, "X({}, [{}], over: {})", x.id, s.join(", "), x.over);
    }
    let mut k = 0;
    for (i, p) in d.darts().iter().enumerate() {
        if i < p.index() {
            let _ = writeln!(out, "E({}, {}, {})", k, slot(Dart(i as u32)), slot(*p));
            k += 1;
        }
    }
    for id in d.loops() {
        let _ = writeln!(out, "O({id})");
    }
    let host = |h: Option<FaceRef>| match h {
        None => "root".to_string(),
        Some(r) => format!("{}, {}", d.piece_label(d.piece_of_face(r)), d.face_label(r)),
    };
    for (pi, _) in d.pieces().iter().enumerate() {
        let pl = d.placement_of_piece(pi);
        let _ = writeln!(out, "P({}, {}, side: {})", d.piece_label(pi), host(pl.host), d.face_label(pl.side));
    }
    for (i, p) in d.punctures().iter().enumerate() {
        let _ = writeln!(out, "P(puncture {}, {})", i, host(*p));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const HOPF_LIKE: &str = "kbracket-diagram 1
genus 1
X(0, [a, b, c, d], over: 0)
X(1, [e, f, g, h], over: 0)
E(0, a, h)
E(1, b, g)
E(2, c, f)
E(3, d, e)
P(X0, root, side: 0.2)
P(puncture 0, root)
P(puncture 1, X0, 0.0)
";

    #[test]
    fn round_trip_is_stable() {
        let d = parse(HOPF_LIKE).unwrap();
        let s = serialize(&d);
        let d2 = parse(&s).unwrap();
        assert_eq!(d, d2);
        assert_eq!(serialize(&d2), s);
    }

    #[test]
    fn slot_used_twice() {
        let bad = HOPF_LIKE.replace("E(3, d, e)", "E(3, d, a)");
        let err = parse(&bad).unwrap_err();
        assert!(matches!(err, DiagramError::SlotConflict(_)));
        assert!(err.to_string().contains("slot conflict"));
    }

    #[test]
    fn unknown_face() {
        let bad = HOPF_LIKE.replace("P(puncture 1, X0, 0.0)", "P(puncture 1, X0, 7.2)");
        let err = parse(&bad).unwrap_err();
        assert!(matches!(err, DiagramError::UnknownFace { .. }));
        assert!(err.to_string().contains("unknown face"));
    }

    #[test]
    fn missing_puncture() {
        let bad = HOPF_LIKE.replace("P(puncture 1, X0, 0.0)\n", "");
        assert!(matches!(parse(&bad).unwrap_err(), DiagramError::PunctureCount { .. }));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = format!("# leading comment\n\n{}", HOPF_LIKE.replace("E(0, a, h)", "E(0, a, h) # arc"));
        assert!(parse(&text).is_ok());
    }
}
