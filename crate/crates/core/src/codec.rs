//! Path codes: letters, words, CODE-form and the zeroing rules.

use crate::complex::{Complex, PlaneId, VertexId};
use crate::error::{Error, Result};
use crate::labels::{Alphabet, Labeling, VType};
use crate::names::EdgeLetter;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::fmt;

/// Letter family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Incoming edge.
    X,
    /// Vertex.
    Y,
    /// Outgoing edge.
    Z,
}

/// A letter: family tag plus an interned payload id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter(pub u32);

const TAG_SHIFT: u32 = 30;
const PAYLOAD: u32 = (1 << TAG_SHIFT) - 1;

impl Letter {
    pub fn new(family: Family, payload: u32) -> Letter {
        assert!(payload <= PAYLOAD, "payload overflow");
        let tag = match family {
            Family::X => 0,
            Family::Y => 1,
            Family::Z => 2,
        };
        Letter((tag << TAG_SHIFT) | payload)
    }

    pub fn x(edge: u32) -> Letter {
        Letter::new(Family::X, edge)
    }

    pub fn y(vertex: u32) -> Letter {
        Letter::new(Family::Y, vertex)
    }

    pub fn z(edge: u32) -> Letter {
        Letter::new(Family::Z, edge)
    }

    pub fn family(self) -> Family {
        match self.0 >> TAG_SHIFT {
            0 => Family::X,
            1 => Family::Y,
            _ => Family::Z,
        }
    }

    pub fn payload(self) -> u32 {
        self.0 & PAYLOAD
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.family() {
            Family::X => 'X',
            Family::Y => 'Y',
            Family::Z => 'Z',
        };
        write!(f, "{tag}{}", self.payload())
    }
}

impl std::str::FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Letter> {
        let bad = || Error::Parse(format!("bad letter `{s}`"));
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(bad)? {
            'X' => Family::X,
            'Y' => Family::Y,
            'Z' => Family::Z,
            _ => return Err(bad()),
        };
        let payload: u32 = chars.as_str().parse().map_err(|_| bad())?;
        if payload > PAYLOAD {
            return Err(bad());
        }
        Ok(Letter::new(family, payload))
    }
}

pub type Word = Vec<Letter>;

/// Parse the whitespace-separated text form of a word.
pub fn parse_word(text: &str) -> Result<Word> {
    text.split_whitespace().map(str::parse).collect()
}

/// Text form of a word.
pub fn word_text(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// Human-readable form of a word.
pub fn word_pretty(w: &[Letter], alpha: &Alphabet) -> String {
    w.iter()
        .map(|l| match l.family() {
            Family::Y => format!("Y:{}", alpha.vertex_text(l.payload())),
            Family::Z => format!("Z:{}", alpha.edges.resolve(l.payload())),
            Family::X => format!("X:{}", alpha.edges.resolve(l.payload())),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn follows(a: Family, b: Family) -> bool {
    matches!((a, b), (Family::Y, Family::Z) | (Family::Z, Family::X) | (Family::X, Family::Y))
}

/// True iff the families alternate Y → Z → X → Y throughout.
pub fn is_code_form(w: &[Letter]) -> bool {
    w.windows(2).all(|p| follows(p[0].family(), p[1].family()))
}

/// Planes of the edges of a vertex path, one per step.
fn edge_planes(c: &Complex, path: &[VertexId]) -> Result<Vec<PlaneId>> {
    path.windows(2)
        .map(|p| {
            c.edge_between(p[0], p[1]).map(|e| c.edge(e).plane).ok_or(Error::NotAdjacent(p[0], p[1]))
        })
        .collect()
}

/// Code of a vertex path with explicit planes of the outside edges at its ends.
pub fn encode_path_in_context(
    c: &Complex,
    lab: &Labeling,
    alpha: &mut Alphabet,
    path: &[VertexId],
    in_context: Option<PlaneId>,
    out_context: Option<PlaneId>,
) -> Result<Word> {
    if path.is_empty() {
        return Ok(Vec::new());
    }
    for &v in path {
        c.vertex(v)?;
    }
    let planes = edge_planes(c, path)?;
    let mut w = Vec::with_capacity(path.len() * 3);
    for (i, &v) in path.iter().enumerate() {
        let pin = if i == 0 { in_context } else { Some(planes[i - 1]) };
        let pout = if i + 1 == path.len() { out_context } else { Some(planes[i]) };
        let letter = lab.vertex_letter(v, pin, pout)?;
        w.push(Letter::y(alpha.vertices.intern(&letter)));
        if i + 1 < path.len() {
            let next = path[i + 1];
            let out = lab.edge_letter(c, v, next)?;
            let inn = lab.edge_letter(c, next, v)?;
            w.push(Letter::z(alpha.edges.intern(&out)));
            w.push(Letter::x(alpha.edges.intern(&inn)));
        }
    }
    Ok(w)
}

/// Code of a vertex path: vertex letters interleaved with out/in edge letters.
pub fn encode_path(
    c: &Complex,
    lab: &Labeling,
    alpha: &mut Alphabet,
    path: &[VertexId],
) -> Result<Word> {
    encode_path_in_context(c, lab, alpha, path, None, None)
}

/// Code of the reversed path: letters in reverse order, edge families
/// swapped and each vertex letter's incoming and outgoing parts exchanged.
pub fn reverse_word(w: &[Letter], alpha: &mut Alphabet) -> Word {
    w.iter()
        .rev()
        .map(|&l| match l.family() {
            Family::X => Letter::z(l.payload()),
            Family::Z => Letter::x(l.payload()),
            Family::Y => {
                let v = alpha.vertices.resolve(l.payload()).clone();
                let b = v.base_at as usize;
                let mut comps: Vec<_> = v.comps[b + 1..].to_vec();
                let base_at = comps.len() as u8;
                comps.push(v.comps[b]);
                comps.extend_from_slice(&v.comps[..b]);
                let r = crate::labels::VertexLetter { comps, base_at, ..v };
                Letter::y(alpha.vertices.intern(&r))
            }
        })
        .collect()
}

/// Type-level shape of a three-vertex window: base types and edge letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Skeleton {
    pub types: [VType; 3],
    pub edges: [EdgeLetter; 4],
}

/// Skeleton of a 7-letter window.
pub fn skeleton(w: &[Letter], alpha: &Alphabet) -> Option<Skeleton> {
    if w.len() != 7 || w[0].family() != Family::Y || !is_code_form(w) {
        return None;
    }
    let base_type = |l: Letter| {
        let vl = alpha.vertices.resolve(l.payload());
        vl.comps[vl.base_at as usize].vtype
    };
    let e = |l: Letter| *alpha.edges.resolve(l.payload());
    Some(Skeleton {
        types: [base_type(w[0]), base_type(w[3]), base_type(w[6])],
        edges: [e(w[1]), e(w[2]), e(w[4]), e(w[5])],
    })
}

/// Why a word is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZeroKind {
    /// Two adjacent letters of incompatible families.
    Family,
    /// A window of at most four vertex letters realized by no path.
    Forbidden,
    /// A dead three-vertex pattern.
    Dead,
    /// An edge traversed forth and back.
    UTurn,
}

/// First violating window of a word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hit {
    pub kind: ZeroKind,
    /// Start index and length of the window.
    pub start: usize,
    pub len: usize,
}

/// Zeroing rules of the path semigroup.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ZeroRuleSet {
    /// Realized Y-to-Y windows with one to four vertex letters.
    pub realized: HashSet<Vec<Letter>>,
    /// Skeletons of dead windows, both directions.
    pub dead: HashSet<Skeleton>,
    /// Whether forbidden-window checks apply (off for rule sets built without enumeration).
    pub check_forbidden: bool,
}

impl ZeroRuleSet {
    /// Rules with only the family and u-turn checks.
    pub fn structural() -> Self {
        ZeroRuleSet::default()
    }

    pub fn forbidden_count_hint(&self) -> usize {
        self.realized.len()
    }
}

/// First zero hit in `w`, or `None` when clean.
pub fn scan_forbidden(w: &[Letter], rules: &ZeroRuleSet, alpha: &Alphabet) -> Option<Hit> {
    for (i, p) in w.windows(2).enumerate() {
        if !follows(p[0].family(), p[1].family()) {
            return Some(Hit { kind: ZeroKind::Family, start: i, len: 2 });
        }
    }
    for (i, t) in w.windows(3).enumerate() {
        if t[0].family() == Family::X && t[2].family() == Family::Z && t[0].payload() == t[2].payload()
        {
            return Some(Hit { kind: ZeroKind::UTurn, start: i, len: 3 });
        }
    }
    let ys: Vec<usize> =
        w.iter().enumerate().filter(|(_, l)| l.family() == Family::Y).map(|(i, _)| i).collect();
    if !rules.dead.is_empty() {
        for k in ys.windows(3) {
            let win = &w[k[0]..=k[2]];
            if let Some(s) = skeleton(win, alpha) {
                if rules.dead.contains(&s) {
                    return Some(Hit { kind: ZeroKind::Dead, start: k[0], len: 7 });
                }
            }
        }
    }
    if rules.check_forbidden {
        for n in 1..=4usize {
            for k in ys.windows(n) {
                let win = &w[k[0]..=k[n - 1]];
                if !rules.realized.contains(win) {
                    return Some(Hit { kind: ZeroKind::Forbidden, start: k[0], len: win.len() });
                }
            }
        }
    }
    None
}

/// Non-backtracking vertex paths with `n` vertices starting at `v`.
pub fn paths_from(c: &Complex, v: VertexId, n: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![v]];
    while let Some(p) = stack.pop() {
        if p.len() == n {
            out.push(p);
            continue;
        }
        let last = *p.last().unwrap();
        let prev = if p.len() >= 2 { Some(p[p.len() - 2]) } else { None };
        for &e in c.incident(last) {
            let w = c.edge(e).other(last);
            if Some(w) != prev {
                let mut q = p.clone();
                q.push(w);
                stack.push(q);
            }
        }
    }
    out
}

/// Planes a path may arrive from or leave into at `v`: its base plus pasted roles.
pub fn context_planes(c: &Complex, v: VertexId) -> Vec<PlaneId> {
    c.vertices[v as usize].roles.iter().map(|(p, _)| *p).collect()
}

/// Planes of the edges at `v` other than the one toward `except`.
fn context_planes_excluding(c: &Complex, v: VertexId, except: Option<VertexId>) -> Vec<PlaneId> {
    let mut planes: Vec<PlaneId> = c
        .incident(v)
        .iter()
        .filter(|&&e| Some(c.edge(e).other(v)) != except)
        .map(|&e| c.edge(e).plane)
        .collect();
    planes.sort_unstable();
    planes.dedup();
    planes
}

/// Record every realized window of at most four vertex letters of `c`.
pub fn collect_realized(
    c: &Complex,
    lab: &Labeling,
    alpha: &mut Alphabet,
    realized: &mut HashSet<Vec<Letter>>,
) -> Result<()> {
    for v in 0..c.vertices.len() as VertexId {
        for n in 1..=4 {
            for p in paths_from(c, v, n) {
                let first_next = p.get(1).copied();
                let last_prev = if n >= 2 { Some(p[n - 2]) } else { None };
                let mut ins = context_planes_excluding(c, p[0], first_next);
                let mut outs = context_planes_excluding(c, p[n - 1], last_prev);
                ins.push(lab.base_plane(p[0]));
                outs.push(lab.base_plane(p[n - 1]));
                ins.dedup();
                outs.dedup();
                for &ci in &ins {
                    for &co in &outs {
                        let w = encode_path_in_context(c, lab, alpha, &p, Some(ci), Some(co))?;
                        realized.insert(w);
                    }
                }
            }
        }
    }
    Ok(())
}

/// Dead three-vertex paths of `c`: both A–B diagonals of middle faces and both
/// C–D diagonals of bottom faces.
pub fn dead_paths(c: &Complex) -> Vec<[VertexId; 3]> {
    use crate::geometry::Position;
    let mut out = Vec::new();
    for f in c.minimal_squares() {
        let [p0, p1, p2, p3] = f.corners;
        match f.position {
            Position::Middle => {
                out.push([p0, p1, p2]);
                out.push([p0, p3, p2]);
            }
            Position::Bottom => {
                out.push([p3, p2, p1]);
                out.push([p3, p0, p1]);
            }
            _ => {}
        }
    }
    let rev: Vec<[VertexId; 3]> = out.iter().map(|p| [p[2], p[1], p[0]]).collect();
    out.extend(rev);
    out
}

/// Build the zeroing rules from complexes up to the cap.
pub fn build_zero_rules(
    complexes: &[(&Complex, &Labeling)],
    alpha: &mut Alphabet,
) -> Result<ZeroRuleSet> {
    let mut rules = ZeroRuleSet { check_forbidden: true, ..Default::default() };
    for &(c, lab) in complexes {
        collect_realized(c, lab, alpha, &mut rules.realized)?;
        for p in dead_paths(c) {
            for ci in context_planes(c, p[0]) {
                for co in context_planes(c, p[2]) {
                    let w = encode_path_in_context(c, lab, alpha, &p, Some(ci), Some(co))?;
                    if let Some(s) = skeleton(&w, alpha) {
                        rules.dead.insert(s);
                    }
                }
            }
        }
    }
    Ok(rules)
}

/// All paths of `c` whose code equals `w`.
pub fn realize_word(
    c: &Complex,
    lab: &Labeling,
    alpha: &mut Alphabet,
    w: &[Letter],
) -> Result<Vec<Vec<VertexId>>> {
    if w.is_empty() {
        return Ok(Vec::new());
    }
    if !is_code_form(w) || w[0].family() != Family::Y || w.last().unwrap().family() != Family::Y {
        return Err(Error::MalformedWord("not a complete CODE-form path code".into()));
    }
    let n = w.len().div_ceil(3);
    let mut found = Vec::new();
    let mut memo: HashMap<(VertexId, Option<PlaneId>, Option<PlaneId>), u32> = HashMap::new();
    let mut vletter = |v: VertexId, pin: Option<PlaneId>, pout: Option<PlaneId>, alpha: &mut Alphabet| {
        *memo.entry((v, pin, pout)).or_insert_with(|| {
            let l = lab.vertex_letter(v, pin, pout).expect("incident planes");
            alpha.vertices.intern(&l)
        })
    };
    let mut stack: Vec<Vec<VertexId>> = (0..c.vertices.len() as VertexId).map(|v| vec![v]).collect();
    while let Some(p) = stack.pop() {
        let i = p.len() - 1;
        let v = p[i];
        let pin = if i == 0 { None } else { Some(c.edge(c.edge_between(p[i - 1], v).unwrap()).plane) };
        if i + 1 == n {
            if vletter(v, pin, None, alpha) == w[3 * i].payload() {
                found.push(p);
            }
            continue;
        }
        for &e in c.incident(v) {
            let edge = c.edge(e);
            let x = edge.other(v);
            if vletter(v, pin, Some(edge.plane), alpha) != w[3 * i].payload() {
                continue;
            }
            let out = lab.edge_letter(c, v, x)?;
            let inn = lab.edge_letter(c, x, v)?;
            if alpha.edges.get(&out) == Some(w[3 * i + 1].payload())
                && alpha.edges.get(&inn) == Some(w[3 * i + 2].payload())
            {
                let mut q = p.clone();
                q.push(x);
                stack.push(q);
            }
        }
    }
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{BuildConfig, PASTING_RULE};

    fn labeled(n: u32) -> (Complex, Labeling, Alphabet) {
        let c = Complex::grow(n, BuildConfig::default(), &PASTING_RULE).unwrap();
        let mut alpha = Alphabet::new();
        let lab = Labeling::new(&c, &mut alpha);
        (c, lab, alpha)
    }

    #[test]
    fn letter_tags_round_trip() {
        for (f, l) in [(Family::X, Letter::x(7)), (Family::Y, Letter::y(7)), (Family::Z, Letter::z(7))] {
            assert_eq!(l.family(), f);
            assert_eq!(l.payload(), 7);
            assert_eq!(l.to_string().parse::<Letter>().unwrap(), l);
        }
        assert!("Q1".parse::<Letter>().is_err());
        assert!("Y".parse::<Letter>().is_err());
    }

    #[test]
    fn word_text_round_trips() {
        let w = vec![Letter::y(1), Letter::z(2), Letter::x(3), Letter::y(4)];
        assert_eq!(parse_word(&word_text(&w)).unwrap(), w);
        assert!(is_code_form(&w));
        assert!(!is_code_form(&[Letter::y(1), Letter::x(2)]));
    }

    #[test]
    fn face_paths_encode_to_code_form() {
        let (c, lab, mut alpha) = labeled(3);
        for f in c.minimal_squares() {
            let p = [f.corners[0], f.corners[1], f.corners[2]];
            let w = encode_path(&c, &lab, &mut alpha, &p).unwrap();
            assert_eq!(w.len(), 7);
            assert!(is_code_form(&w));
            assert!(skeleton(&w, &alpha).is_some());
        }
    }

    #[test]
    fn encoding_rejects_non_adjacent_steps() {
        let (c, lab, mut alpha) = labeled(2);
        let f = c.minimal_squares()[0];
        let diag = [f.corners[0], f.corners[2]];
        assert!(matches!(encode_path(&c, &lab, &mut alpha, &diag), Err(Error::NotAdjacent(..))));
    }

    #[test]
    fn reversal_is_an_involution_matching_the_reversed_path() {
        let (c, lab, mut alpha) = labeled(3);
        for f in c.minimal_squares().into_iter().take(12) {
            let p = [f.corners[0], f.corners[1], f.corners[2]];
            let w = encode_path(&c, &lab, &mut alpha, &p).unwrap();
            let r = reverse_word(&w, &mut alpha);
            assert_eq!(reverse_word(&r, &mut alpha), w);
            let back = [p[2], p[1], p[0]];
            assert_eq!(encode_path(&c, &lab, &mut alpha, &back).unwrap(), r);
        }
    }

    #[test]
    fn structural_rules_catch_family_breaks_and_u_turns() {
        let rules = ZeroRuleSet::structural();
        let alpha = Alphabet::new();
        let bad = [Letter::y(0), Letter::x(1)];
        assert_eq!(scan_forbidden(&bad, &rules, &alpha).unwrap().kind, ZeroKind::Family);
        let uturn = [Letter::y(0), Letter::z(1), Letter::x(2), Letter::y(1), Letter::z(2), Letter::x(1)];
        assert_eq!(scan_forbidden(&uturn, &rules, &alpha).unwrap().kind, ZeroKind::UTurn);
    }

    #[test]
    fn realized_paths_are_not_forbidden() {
        let (c, lab, mut alpha) = labeled(3);
        let rules = build_zero_rules(&[(&c, &lab)], &mut alpha).unwrap();
        assert!(rules.check_forbidden);
        for f in c.minimal_squares() {
            let p = [f.corners[3], f.corners[0], f.corners[1]];
            let w = encode_path(&c, &lab, &mut alpha, &p).unwrap();
            if let Some(hit) = scan_forbidden(&w, &rules, &alpha) {
                assert_eq!(hit.kind, ZeroKind::Dead, "face {}", f.tile);
            }
        }
    }
}
