//! Square relations: for every minimal square and every pair of opposite
//! two-edge paths, the code of one path rewrites to the code of the other.

use crate::codec::{context_planes, encode_path_in_context, scan_forbidden, Word, ZeroRuleSet};
use crate::complex::{Complex, PlaneId, TileId, VertexId};
use crate::error::Result;
use crate::geometry::Position;
use crate::labels::{Alphabet, Labeling};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// Where a relation was observed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Index of the complex in the input list.
    pub complex: usize,
    pub face: TileId,
    /// Left path A-B-C and right path A-D-C.
    pub lhs_path: [VertexId; 3],
    pub rhs_path: [VertexId; 3],
    pub in_context: PlaneId,
    pub out_context: PlaneId,
}

/// One rewriting rule `lhs -> rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
    pub witness: Witness,
}

/// A left side observed with two different right sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conflict {
    pub lhs: Word,
    pub first: Relation,
    pub second: Relation,
}

/// The relation system of a family of complexes.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct RelationSet {
    /// Relations keyed by left side.
    pub rules: BTreeMap<Word, Relation>,
    pub conflicts: Vec<Conflict>,
    /// Square paths skipped because one side is dead or zero.
    pub skipped: usize,
    /// Square paths examined, counting contexts.
    pub examined: usize,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn get(&self, lhs: &[crate::codec::Letter]) -> Option<&Relation> {
        self.rules.get(lhs)
    }

    pub fn is_deterministic(&self) -> bool {
        self.conflicts.is_empty()
    }

    /// Relations from bare (lhs, rhs) pairs, as read back from a dump.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Word, Word)>) -> RelationSet {
        let mut set = RelationSet::default();
        for (lhs, rhs) in pairs {
            let rel = Relation { lhs: lhs.clone(), rhs, witness: Witness::default() };
            set.rules.entry(lhs).or_insert(rel);
        }
        set
    }
}

/// True when the path `p` of face `f` is a dead diagonal.
fn is_dead(f: &crate::complex::Face, p: [VertexId; 3]) -> bool {
    let [c0, _, c2, c3] = f.corners;
    let ends = |a, b| (p[0] == a && p[2] == b) || (p[0] == b && p[2] == a);
    match f.position {
        Position::Middle => ends(c0, c2),
        Position::Bottom => ends(c3, f.corners[1]),
        _ => false,
    }
}

/// Record the relations of one complex into `set`.
pub fn add_relations(
    set: &mut RelationSet,
    index: usize,
    c: &Complex,
    lab: &Labeling,
    alpha: &mut Alphabet,
    rules: &ZeroRuleSet,
) -> Result<()> {
    let mut conflict_keys: HashMap<(Word, Word), ()> = HashMap::new();
    for k in &set.conflicts {
        conflict_keys.insert((k.lhs.clone(), k.second.rhs.clone()), ());
    }
    for f in c.minimal_squares() {
        let cs = f.corners;
        for start in 0..4 {
            for dir in [1usize, 3] {
                let a = cs[start];
                let b = cs[(start + dir) % 4];
                let cc = cs[(start + 2 * dir) % 4];
                let d = cs[(start + 3 * dir) % 4];
                let lhs_path = [a, b, cc];
                let rhs_path = [a, d, cc];
                for ci in context_planes(c, a) {
                    for co in context_planes(c, cc) {
                        set.examined += 1;
                        if is_dead(&f, lhs_path) {
                            set.skipped += 1;
                            continue;
                        }
                        let lhs = encode_path_in_context(c, lab, alpha, &lhs_path, Some(ci), Some(co))?;
                        let rhs = encode_path_in_context(c, lab, alpha, &rhs_path, Some(ci), Some(co))?;
                        if scan_forbidden(&lhs, rules, alpha).is_some()
                            || scan_forbidden(&rhs, rules, alpha).is_some()
                        {
                            set.skipped += 1;
                            continue;
                        }
                        let rel = Relation {
                            lhs: lhs.clone(),
                            rhs,
                            witness: Witness {
                                complex: index,
                                face: f.tile,
                                lhs_path,
                                rhs_path,
                                in_context: ci,
                                out_context: co,
                            },
                        };
                        match set.rules.get(&lhs) {
                            None => {
                                set.rules.insert(lhs, rel);
                            }
                            Some(old) if old.rhs == rel.rhs => {}
                            Some(old) => {
                                let key = (lhs.clone(), rel.rhs.clone());
                                if conflict_keys.insert(key, ()).is_none() {
                                    set.conflicts.push(Conflict {
                                        lhs,
                                        first: old.clone(),
                                        second: rel,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Relations of every complex in `complexes`.
pub fn generate_relations(
    complexes: &[(&Complex, &Labeling)],
    alpha: &mut Alphabet,
    rules: &ZeroRuleSet,
) -> Result<RelationSet> {
    let mut set = RelationSet::default();
    for (i, &(c, lab)) in complexes.iter().enumerate() {
        add_relations(&mut set, i, c, lab, alpha, rules)?;
    }
    Ok(set)
}

/// Summary of a determinism check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterminismReport {
    pub relations: usize,
    pub conflicts: usize,
    pub examined: usize,
    pub skipped: usize,
}

pub fn check_determinism(set: &RelationSet) -> DeterminismReport {
    DeterminismReport {
        relations: set.rules.len(),
        conflicts: set.conflicts.len(),
        examined: set.examined,
        skipped: set.skipped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::{build_zero_rules, reverse_word};
    use crate::complex::{BuildConfig, NoPasting, PASTING_RULE};

    fn family(levels: &[u32]) -> (Vec<Complex>, Vec<Labeling>, Alphabet) {
        let cs: Vec<Complex> =
            levels.iter().map(|&n| Complex::grow(n, BuildConfig::default(), &PASTING_RULE).unwrap()).collect();
        let mut alpha = Alphabet::new();
        let labs = cs.iter().map(|c| Labeling::new(c, &mut alpha)).collect();
        (cs, labs, alpha)
    }

    fn relations(cs: &[Complex], labs: &[Labeling], alpha: &mut Alphabet) -> RelationSet {
        let pairs: Vec<(&Complex, &Labeling)> = cs.iter().zip(labs).collect();
        let rules = build_zero_rules(&pairs, alpha).unwrap();
        generate_relations(&pairs, alpha, &rules).unwrap()
    }

    #[test]
    fn single_square_gives_its_eight_paths() {
        let c = Complex::grow(1, BuildConfig::default(), &NoPasting).unwrap();
        let mut alpha = Alphabet::new();
        let lab = Labeling::new(&c, &mut alpha);
        let set = generate_relations(&[(&c, &lab)], &mut alpha, &ZeroRuleSet::structural()).unwrap();
        assert_eq!(set.examined, 8);
        assert_eq!(set.len(), 8);
        assert!(set.is_deterministic());
    }

    #[test]
    fn low_levels_are_deterministic() {
        let (cs, labs, mut alpha) = family(&[2, 3]);
        let set = relations(&cs, &labs, &mut alpha);
        assert!(!set.is_empty());
        assert!(set.is_deterministic(), "{} conflicts", set.conflicts.len());
    }

    #[test]
    fn relations_preserve_endpoints_and_pair_up() {
        let (cs, labs, mut alpha) = family(&[2, 3]);
        let set = relations(&cs, &labs, &mut alpha);
        for r in set.rules.values() {
            let w = &r.witness;
            assert_eq!(w.lhs_path[0], w.rhs_path[0]);
            assert_eq!(w.lhs_path[2], w.rhs_path[2]);
            assert_eq!(r.lhs[0], r.rhs[0]);
            assert_eq!(r.lhs[6], r.rhs[6]);
            let back = set.get(&r.rhs).expect("opposite path rewrites back");
            assert_eq!(back.rhs, r.lhs);
        }
    }

    #[test]
    fn relations_are_closed_under_reversal() {
        let (cs, labs, mut alpha) = family(&[2, 3]);
        let set = relations(&cs, &labs, &mut alpha);
        for r in set.rules.values() {
            let l = reverse_word(&r.lhs, &mut alpha);
            let rr = reverse_word(&r.rhs, &mut alpha);
            assert_eq!(set.get(&l).map(|x| &x.rhs), Some(&rr));
        }
    }

    #[test]
    fn adding_levels_only_adds_relations() {
        let (cs, labs, mut alpha) = family(&[2, 3]);
        let small = relations(&cs[..1], &labs[..1], &mut alpha);
        let big = relations(&cs, &labs, &mut alpha);
        assert!(big.len() > small.len());
        for (lhs, r) in &small.rules {
            assert_eq!(big.get(lhs).map(|x| &x.rhs), Some(&r.rhs));
        }
    }

    #[test]
    fn collapsed_labels_produce_conflicts() {
        let (cs, mut labs, mut alpha) = family(&[3]);
        let lab = &mut labs[0];
        let first = lab.base(0);
        for descs in &mut lab.roles {
            for d in descs.iter_mut() {
                d.1 = first;
            }
        }
        lab.info.iter_mut().for_each(|i| *i = 0);
        let set = generate_relations(&[(&cs[0], &labs[0])], &mut alpha, &ZeroRuleSet::structural()).unwrap();
        assert!(!set.is_deterministic());
        assert!(check_determinism(&set).conflicts > 0);
    }

    #[test]
    fn from_pairs_keeps_first_rhs() {
        use crate::codec::Letter;
        let a = vec![Letter::y(1)];
        let set = RelationSet::from_pairs([(a.clone(), vec![Letter::y(2)]), (a.clone(), vec![Letter::y(3)])]);
        assert_eq!(set.len(), 1);
        assert_eq!(set.get(&a).unwrap().rhs, vec![Letter::y(2)]);
    }
}
