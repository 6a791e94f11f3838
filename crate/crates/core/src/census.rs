//! Counting distinct environments and letters, compared with the reference
//! tables, and the arithmetic of the letter-count bounds.

use crate::chains::LocalGeometry;
use crate::complex::{Complex, Line, Role};
use crate::geometry::{child_envs, Env};
use crate::labels::{Alphabet, Labeling, VEnv, VType};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, Mul};

/// Reference chain counts: center group, per-level counts for levels 0..=3, total.
pub const TABLE1: [(&str, [Option<u32>; 4], u32); 15] = [
    ("UL/LU", [None, Some(7), Some(9), Some(9)], 50),
    ("UR/RU", [None, Some(7), Some(9), Some(9)], 50),
    ("DL/LD", [None, Some(4), Some(5), Some(5)], 28),
    ("DR/RD", [None, Some(4), Some(5), Some(5)], 28),
    ("A", [Some(420), Some(5), Some(5), None], 430),
    ("B", [None, Some(6), Some(6), None], 12),
    ("C", [None, Some(7), Some(10), Some(10)], 27),
    ("D", [None, Some(2), Some(2), None], 4),
    ("L", [None, Some(4), Some(5), Some(5)], 14),
    ("R", [None, Some(4), Some(5), Some(5)], 14),
    ("U", [None, Some(5), Some(6), Some(6)], 17),
    ("CUL", [None, Some(2), Some(2), None], 4),
    ("CUR", [None, Some(2), Some(2), None], 4),
    ("CDL", [None, Some(2), Some(4), Some(4)], 10),
    ("CDR", [None, Some(3), Some(3), None], 6),
];

/// Reference non-chain counts: type group, environments, levels, total.
pub const TABLE2: [(&str, u32, Option<u32>, u32); 10] = [
    ("DR/RD", 4, Some(3), 12),
    ("A", 210, None, 210),
    ("B", 210, None, 210),
    ("C", 210, None, 210),
    ("D", 1, Some(3), 3),
    ("R", 2, Some(3), 6),
    ("CUL", 1, None, 1),
    ("CUR", 1, None, 1),
    ("CDL", 1, None, 1),
    ("CDR", 1, None, 1),
];

/// Which vertices a census looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scope {
    /// Every role of every vertex.
    All,
    /// Skip roles on the boundary of the base plane, which has no counterpart
    /// in an unbounded host.
    Unbounded,
}

/// One row of the chain census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRow {
    pub group: String,
    pub level: u32,
    /// Distinct member environments (chain environment plus pointer).
    pub envs: usize,
    /// Distinct chain environments.
    pub chain_envs: usize,
    /// Distinct pointers.
    pub pointers: usize,
    /// Reference per-level count, if any.
    pub expected: Option<u32>,
}

/// One row of the non-chain census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonChainRow {
    pub group: String,
    pub envs: usize,
    pub levels: usize,
    pub expected_envs: Option<u32>,
}

/// True when two group names denote the same types, ignoring order around `/`.
pub fn same_group(a: &str, b: &str) -> bool {
    fn key(s: &str) -> Vec<&str> {
        let mut v: Vec<&str> = s.split('/').collect();
        v.sort_unstable();
        v
    }
    key(a) == key(b)
}

fn on_base_boundary(c: &Complex, v: u32) -> bool {
    matches!(
        c.vertices[v as usize].role_in(0),
        Some(Role::Corner { .. } | Role::EdgeMid { .. } | Role::SideMid { line: Line::Boundary { .. }, .. })
    )
}

fn skip(c: &Complex, scope: Scope, plane: u32, v: u32) -> bool {
    scope == Scope::Unbounded && plane == 0 && on_base_boundary(c, v)
}

/// Distinct member environments per (center group, chain level).
pub fn census_chains(inputs: &[(&Complex, &Labeling)], scope: Scope) -> Vec<ChainRow> {
    type Key = (String, u32);
    let mut envs: BTreeMap<Key, BTreeSet<u32>> = BTreeMap::new();
    for &(c, lab) in inputs {
        let geo = LocalGeometry::new(c);
        for v in &c.vertices {
            for &(p, _) in &v.roles {
                let Some(m) = geo.membership(v.id, p) else { continue };
                if skip(c, scope, p, m.center) {
                    continue;
                }
                let Some(center) = c.vertices[m.center as usize].role_in(p) else { continue };
                let Some(d) = lab.desc_in(v.id, p) else { continue };
                envs.entry((VType::of_role(center).group(), m.level)).or_default().insert(d.env);
            }
        }
    }
    envs.into_iter()
        .map(|((group, level), set)| {
            let expected = TABLE1
                .iter()
                .find(|r| same_group(r.0, &group))
                .and_then(|r| r.1.get(level as usize).copied().flatten());
            ChainRow { group, level, envs: set.len(), chain_envs: 0, pointers: 0, expected }
        })
        .collect()
}

/// Fill the chain-environment and pointer columns of `rows` from the alphabet.
pub fn split_chain_envs(rows: &mut [ChainRow], inputs: &[(&Complex, &Labeling)], alpha: &Alphabet, scope: Scope) {
    type Key = (String, u32);
    let mut chains: BTreeMap<Key, BTreeSet<u32>> = BTreeMap::new();
    let mut pointers: BTreeMap<Key, BTreeSet<String>> = BTreeMap::new();
    for &(c, lab) in inputs {
        let geo = LocalGeometry::new(c);
        for v in &c.vertices {
            for &(p, _) in &v.roles {
                let Some(m) = geo.membership(v.id, p) else { continue };
                if skip(c, scope, p, m.center) {
                    continue;
                }
                let Some(center) = c.vertices[m.center as usize].role_in(p) else { continue };
                let key = (VType::of_role(center).group(), m.level);
                let Some(d) = lab.desc_in(v.id, p) else { continue };
                if let VEnv::Chain { chain, pointer } = alpha.envs.resolve(d.env) {
                    chains.entry(key.clone()).or_default().insert(*chain);
                    pointers.entry(key).or_default().insert(pointer.to_string());
                }
            }
        }
    }
    for r in rows {
        let key = (r.group.clone(), r.level);
        r.chain_envs = chains.get(&key).map_or(0, |s| s.len());
        r.pointers = pointers.get(&key).map_or(0, |s| s.len());
    }
}

/// Distinct environments and levels per type among vertices outside chains.
pub fn census_nonchain(inputs: &[(&Complex, &Labeling)], scope: Scope) -> Vec<NonChainRow> {
    let mut envs: BTreeMap<String, BTreeSet<u32>> = BTreeMap::new();
    let mut levels: BTreeMap<String, BTreeSet<Option<u8>>> = BTreeMap::new();
    for &(c, lab) in inputs {
        let geo = LocalGeometry::new(c);
        for v in &c.vertices {
            for &(p, _) in &v.roles {
                if geo.membership(v.id, p).is_some() || skip(c, scope, p, v.id) {
                    continue;
                }
                let Some(d) = lab.desc_in(v.id, p) else { continue };
                let g = d.vtype.group();
                envs.entry(g.clone()).or_default().insert(d.env);
                levels.entry(g).or_default().insert(d.level);
            }
        }
    }
    envs.into_iter()
        .map(|(group, set)| {
            let expected_envs = TABLE2.iter().find(|r| same_group(r.0, &group)).map(|r| r.1);
            let levels = levels[&group].iter().filter(|l| l.is_some()).count();
            NonChainRow { group, envs: set.len(), levels, expected_envs }
        })
        .collect()
}

/// Macrotile environments reached by repeated flat subdivision of the root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeTupleReport {
    /// Number of environments present at levels 1, 2, ...
    pub per_level: Vec<usize>,
    /// Cumulative distinct environments after each level.
    pub cumulative: Vec<usize>,
    /// First level whose cumulative set equals the previous one.
    pub stabilized_at: Option<usize>,
    /// Cardinality of the stabilized set (or of the last set computed).
    pub count: usize,
    /// Internal environments only (no boundary side).
    pub internal: usize,
    /// True when every child of a member is a member.
    pub closed: bool,
}

/// Close the set of environments under subdivision, starting at the root.
pub fn count_edge_tuples(max_levels: usize) -> EdgeTupleReport {
    let mut frontier: BTreeSet<Env> = BTreeSet::from([Env::ROOT]);
    let mut all: BTreeSet<Env> = frontier.clone();
    let mut per_level = vec![1];
    let mut cumulative = vec![1];
    let mut stabilized_at = None;
    for level in 2..=max_levels {
        frontier = frontier.iter().flat_map(|&e| child_envs(e)).collect();
        per_level.push(frontier.len());
        let before = all.len();
        all.extend(frontier.iter().copied());
        cumulative.push(all.len());
        if all.len() == before && stabilized_at.is_none() {
            stabilized_at = Some(level - 1);
            break;
        }
    }
    let internal = all
        .iter()
        .filter(|e| e.0.iter().all(|t| matches!(t, crate::geometry::EdgeType::Internal(..))))
        .count();
    let closed = all.iter().all(|&e| child_envs(e).iter().all(|c| all.contains(c)));
    EdgeTupleReport { per_level, cumulative, stabilized_at, count: all.len(), internal, closed }
}

/// Set of all environments appearing as tile environments in `c`.
pub fn tile_envs(c: &Complex) -> HashSet<Env> {
    c.tiles.iter().map(|t| t.env).collect()
}

/// A nonnegative number `m · 10^e`, exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sci {
    pub m: u128,
    pub e: u32,
}

impl Sci {
    pub const fn new(m: u128, e: u32) -> Sci {
        Sci { m, e }
    }

    pub fn int(m: u128) -> Sci {
        Sci { m, e: 0 }
    }

    fn norm(mut self) -> Sci {
        while self.m != 0 && self.m.is_multiple_of(10) {
            self.m /= 10;
            self.e += 1;
        }
        self
    }

    /// Strict comparison `self < o`.
    pub fn lt(self, o: Sci) -> bool {
        let (a, b) = (self.norm(), o.norm());
        if a.m == 0 || b.m == 0 {
            return a.m == 0 && b.m != 0;
        }
        let da = a.m.to_string().len() as i64 + a.e as i64;
        let db = b.m.to_string().len() as i64 + b.e as i64;
        if da != db {
            return da < db;
        }
        let e = a.e.min(b.e);
        a.m * 10u128.pow(a.e - e) < b.m * 10u128.pow(b.e - e)
    }

    /// Value as an integer when it fits.
    pub fn to_u128(self) -> Option<u128> {
        10u128.checked_pow(self.e).and_then(|p| self.m.checked_mul(p))
    }
}

impl Mul for Sci {
    type Output = Sci;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, o: Sci) -> Sci {
        let (a, b) = (self.norm(), o.norm());
        Sci { m: a.m.checked_mul(b.m).expect("mantissa overflow"), e: a.e + b.e }.norm()
    }
}

impl Add for Sci {
    type Output = Sci;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, o: Sci) -> Sci {
        let e = self.e.min(o.e);
        let scale = |s: Sci| s.m * 10u128.pow(s.e - e);
        Sci { m: scale(self) + scale(o), e }.norm()
    }
}

impl fmt::Display for Sci {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.norm();
        match n.to_u128() {
            Some(v) if v < 10u128.pow(12) => write!(f, "{v}"),
            _ => {
                let digits = n.m.to_string();
                let exp = digits.len() as u32 - 1 + n.e;
                let (head, tail) = digits.split_at(1);
                let tail = tail.trim_end_matches('0');
                if tail.is_empty() {
                    write!(f, "{head}e{exp}")
                } else {
                    write!(f, "{head}.{tail}e{exp}")
                }
            }
        }
    }
}

/// One line of the bound arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundLine {
    pub label: String,
    pub expression: String,
    pub value: Sci,
    /// Reference value or upper bound.
    pub stated: Sci,
    /// True when the reference figure is an upper bound rather than an equality.
    pub strict_bound: bool,
    pub holds: bool,
}

fn line(label: &str, expression: &str, value: Sci, stated: Sci, strict_bound: bool) -> BoundLine {
    let holds = if strict_bound { value.lt(stated) } else { value == stated || value.norm() == stated.norm() };
    BoundLine {
        label: label.into(),
        expression: expression.into(),
        value: value.norm(),
        stated: stated.norm(),
        strict_bound,
        holds,
    }
}

/// Recompute the letter-count and relation-count arithmetic.
pub fn bound_report() -> Vec<BoundLine> {
    let i = Sci::int;
    let chain_env = i(698);
    let non_chain = i(655);
    let base = chain_env.mul(i(3)).add(non_chain);
    let pasted_base = chain_env.mul(i(3)).add(i(12)).add(i(3)).add(i(6));
    let extended = pasted_base.mul(i(39));
    let info = extended.mul(pasted_base).add(pasted_base.mul(base)).add(extended);
    let combos = Sci::new(181, 6).mul(extended.add(base));
    let flags = base.mul(i(11)).mul(i(10)).mul(Sci::new(16, 12));
    let letters = extended.mul(Sci::new(16, 12)).mul(Sci::new(5, 18));
    let local16 = i(72).mul(Sci::new(181, 6)).mul(Sci::new(5, 18)).mul(i(39)).mul(Sci::new(16, 12));
    let n = base.mul(Sci::new(181, 6));
    let local7 = i(8).mul(Sci::new(16, 18)).mul(i(39 * 39)).mul(n);
    let pasting = i(16).mul(i(82485).mul(i(82485)).mul(i(82485)).mul(i(82485))).mul(Sci::new(5, 18));
    vec![
        line("base combinations", "698*3 + 655", base, i(2749), false),
        line("pasted-capable base environments", "698*3 + 12 + 3 + 6", pasted_base, i(2115), false),
        line("extended environments", "2115*39", extended, i(82485), false),
        line("information values", "82485*2115 + 2115*2749 + 82485", info, i(180352395), false),
        line("vertex combinations", "181e6 * (82485 + 2749)", combos, Sci::new(16, 12), true),
        line("pasting flags", "2749*11*10*16e12", flags, Sci::new(5, 18), true),
        line("letters", "82485 * 16e12 * 5e18", letters, Sci::new(7, 36), true),
        line("relations, transformations 1-6", "72*181e6*5e18*39*16e12", local16, Sci::new(41, 42), true),
        line("relations, transformations 7-10", "8*16e18*39^2*(2749*181e6)", local7, Sci::new(13, 33), true),
        line("relations, pasting cases", "16*82485^4*5e18", pasting, Sci::new(4, 39), true),
    ]
}

/// Outcome of comparing one census row with the reference tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowStatus {
    Match,
    /// Fewer values seen than the reference; deeper complexes may reach it.
    Below,
    /// More values seen than the reference.
    Above,
    /// Row or level absent from the reference table.
    Unlisted,
    /// Reference row with no observation.
    Missing,
}

/// One line of the structured diff against the reference tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCheck {
    pub table: u8,
    pub group: String,
    /// Chain level for the chain table.
    pub level: Option<u32>,
    pub observed: Option<usize>,
    pub expected: Option<u32>,
    pub status: RowStatus,
}

fn status(observed: Option<usize>, expected: Option<u32>) -> RowStatus {
    match (observed, expected) {
        (Some(o), Some(e)) if o == e as usize => RowStatus::Match,
        (Some(o), Some(e)) if o < e as usize => RowStatus::Below,
        (Some(_), Some(_)) => RowStatus::Above,
        (Some(_), None) => RowStatus::Unlisted,
        (None, _) => RowStatus::Missing,
    }
}

/// Compare a census with the reference tables.
///
/// A chain row is compared by its number of distinct pointers, which is the
/// number of member environments of one chain of that center type; the 0-chain
/// of A is compared by all member environments.
pub fn compare_tables(report: &CensusReport) -> Vec<TableCheck> {
    let mut out = Vec::new();
    for (group, levels, _) in TABLE1 {
        for (level, expected) in levels.iter().enumerate() {
            let row = report.chains.iter().find(|r| same_group(&r.group, group) && r.level == level as u32);
            if expected.is_none() && row.is_none() {
                continue;
            }
            let observed = row.map(|r| if r.level == 0 { r.envs } else { r.pointers });
            out.push(TableCheck {
                table: 1,
                group: group.to_string(),
                level: Some(level as u32),
                observed,
                expected: *expected,
                status: status(observed, *expected),
            });
        }
    }
    for r in &report.chains {
        if !TABLE1.iter().any(|t| same_group(t.0, &r.group)) {
            let observed = Some(if r.level == 0 { r.envs } else { r.pointers });
            out.push(TableCheck {
                table: 1,
                group: r.group.clone(),
                level: Some(r.level),
                observed,
                expected: None,
                status: RowStatus::Unlisted,
            });
        }
    }
    for (group, envs, _, _) in TABLE2 {
        let observed = report.nonchain.iter().find(|r| same_group(&r.group, group)).map(|r| r.envs);
        out.push(TableCheck {
            table: 2,
            group: group.to_string(),
            level: None,
            observed,
            expected: Some(envs),
            status: status(observed, Some(envs)),
        });
    }
    out
}

/// Full census of a family of labeled complexes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusReport {
    pub levels: Vec<u32>,
    pub scope: Scope,
    pub chains: Vec<ChainRow>,
    pub nonchain: Vec<NonChainRow>,
    pub edge_tuples: EdgeTupleReport,
    pub bounds: Vec<BoundLine>,
}

/// Run every census over `inputs`.
pub fn census(inputs: &[(&Complex, &Labeling)], alpha: &Alphabet, scope: Scope) -> CensusReport {
    let mut chains = census_chains(inputs, scope);
    split_chain_envs(&mut chains, inputs, alpha, scope);
    CensusReport {
        levels: inputs.iter().map(|(c, _)| c.level).collect(),
        scope,
        chains,
        nonchain: census_nonchain(inputs, scope),
        edge_tuples: count_edge_tuples(16),
        bounds: bound_report(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::PASTING_RULE;
    use crate::BuildConfig;

    #[test]
    fn sci_arithmetic_is_exact() {
        let a = Sci::new(16, 12);
        assert_eq!(a.to_u128(), Some(16_000_000_000_000));
        assert_eq!(Sci::int(698).mul(Sci::int(3)).add(Sci::int(655)), Sci::int(2749));
        assert!(Sci::new(15, 12).lt(a));
        assert!(!a.lt(a));
        assert_eq!(Sci::new(7, 36).to_string(), "7e36");
        assert_eq!(Sci::int(82485).to_string(), "82485");
    }

    #[test]
    fn bound_trace_reproduces_reference_numbers() {
        let b = bound_report();
        let value = |label: &str| b.iter().find(|l| l.label == label).unwrap().value;
        assert_eq!(value("base combinations").to_u128(), Some(2749));
        assert_eq!(value("extended environments").to_u128(), Some(82485));
        assert_eq!(value("information values").to_u128(), Some(180_352_395));
        assert!(b.iter().find(|l| l.label == "letters").unwrap().holds);
    }

    #[test]
    fn flat_level_two_has_one_environment_per_position() {
        let r = count_edge_tuples(2);
        assert_eq!(r.per_level, vec![1, 6]);
    }

    #[test]
    fn edge_tuple_closure_is_a_fixpoint() {
        let r = count_edge_tuples(32);
        assert!(r.stabilized_at.is_some());
        assert!(r.closed);
        assert!(r.cumulative.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn group_names_compare_unordered() {
        assert!(same_group("DR/RD", "RD/DR"));
        assert!(!same_group("DR/RD", "DL/LD"));
    }

    #[test]
    fn level_four_census_stays_within_table_two() {
        let c = Complex::grow(4, BuildConfig::default(), &PASTING_RULE).unwrap();
        let mut alpha = Alphabet::new();
        let lab = Labeling::new(&c, &mut alpha);
        let report = census(&[(&c, &lab)], &alpha, Scope::Unbounded);
        for check in compare_tables(&report).iter().filter(|c| c.table == 2) {
            assert_ne!(check.status, RowStatus::Above, "{check:?}");
        }
    }
}
