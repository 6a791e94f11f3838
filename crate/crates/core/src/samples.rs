//! Reference sample rows of the relation and characterization tables,
//! matched against generated relations by edge-name skeleton.

use crate::codec::{skeleton, Skeleton};
use crate::error::{Error, Result};
use crate::labels::{Alphabet, VType};
use crate::names::EdgeLetter;
use crate::relations::{Relation, RelationSet};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// One slot of a path pattern; `None` matches anything.
pub type Slot<T> = Option<T>;

/// Pattern over a three-vertex path code: vertex types and edge letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathPattern {
    pub types: [Slot<String>; 3],
    pub edges: [Slot<EdgeLetter>; 4],
}

fn type_matches(pattern: &str, t: VType) -> bool {
    t.to_string() == pattern || t.group().split('/').any(|g| g == pattern)
}

impl PathPattern {
    pub fn matches(&self, s: &Skeleton) -> bool {
        self.types
            .iter()
            .zip(s.types)
            .all(|(p, t)| p.as_deref().is_none_or(|p| type_matches(p, t)))
            && self.edges.iter().zip(s.edges).all(|(p, e)| p.is_none_or(|p| p == e))
    }
}

/// Parses `T e e T e e T`, with `*` as a wildcard and `^` marking a pasted edge.
impl FromStr for PathPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tok: Vec<&str> = s.split_whitespace().collect();
        if tok.len() != 7 {
            return Err(Error::Parse(format!("pattern `{s}` needs 7 tokens")));
        }
        let ty = |t: &str| (t != "*").then(|| t.to_string());
        let ed = |t: &str| -> Result<Slot<EdgeLetter>> {
            if t == "*" {
                Ok(None)
            } else {
                t.parse().map(Some).map_err(Error::Parse)
            }
        };
        Ok(PathPattern {
            types: [ty(tok[0]), ty(tok[3]), ty(tok[6])],
            edges: [ed(tok[1])?, ed(tok[2])?, ed(tok[4])?, ed(tok[5])?],
        })
    }
}

impl fmt::Display for PathPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = |x: &Slot<String>| x.clone().unwrap_or_else(|| "*".into());
        let e = |x: &Slot<EdgeLetter>| x.map_or("*".into(), |e| e.to_string());
        write!(
            f,
            "{} {} {} {} {} {} {}",
            t(&self.types[0]),
            e(&self.edges[0]),
            e(&self.edges[1]),
            t(&self.types[1]),
            e(&self.edges[2]),
            e(&self.edges[3]),
            t(&self.types[2])
        )
    }
}

/// A reference row: the source path and, when the row gives it, the paired path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSample {
    pub id: String,
    pub lhs: PathPattern,
    pub rhs: Option<PathPattern>,
}

impl CaseSample {
    pub fn new(id: &str, lhs: &str, rhs: Option<&str>) -> Result<CaseSample> {
        Ok(CaseSample {
            id: id.into(),
            lhs: lhs.parse()?,
            rhs: rhs.map(str::parse).transpose()?,
        })
    }
}

/// The reference corpus.
pub fn default_samples() -> Vec<CaseSample> {
    let rows: &[(&str, &str, Option<&str>)] = &[
        ("flip1.forward", "C 1 2 * 1 u2 *", Some("C 2 3 * 1 u1 *")),
        ("flip1.reverse", "* u2 1 * 2 1 C", Some("* u1 1 * 3 2 C")),
        ("C1.t8.case1.left", "* u1 1 * 2 r *", None),
        ("C1.t8.case2.right", "* 1 2 * r 2 *", None),
        ("C1.t9.case1.left", "B 1 u1 * 2 1 *", None),
        ("C1.t9.case2.right", "B 2 r * 2 r *", None),
        ("C1.t7.case1.left", "* u1 1 * 3 l *", None),
        ("C1.t7.case1.right", "* 1 1 * mid 1 *", None),
        ("C1.t7.case2.left", "* u2 1 * 3 l *", None),
        ("C1.t7.case4.right", "* 2 4 * 1 1 *", None),
        ("C1.t10.case1.right", "A 3 l * 1 mid *", None),
        ("C1.t10.case3.right", "A 3 l * 1 d *", None),
        ("P1.1", "* ^u1 1 B 3 2 *", Some("* ^u2 1 A 2 1 *")),
        ("P1.2", "* ^d l D r d *", Some("* ^d2 4 C 3 d2 *")),
        ("P1.9.xyz", "* ^r 2 R r 2 *", None),
        ("P2.1", "* ^u1 1 B 3 2 *", Some("* ^u2 1 A 2 1 *")),
        ("P2.2.xfz", "* ^l 1 DR 2 3 *", None),
        ("P2.2.xyz", "* ^d2 4 C 3 d2 *", None),
        ("P2.4.xyz", "* ^l 3 A 2 1 *", None),
        ("P2.7.xyz", "* ^u2 1 A 3 l *", None),
        ("P2.9.xyz", "* ^u2 2 RU r 2 *", None),
    ];
    rows.iter().map(|&(id, l, r)| CaseSample::new(id, l, r).expect("valid sample")).collect()
}

/// Result of matching one sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleMatch {
    pub id: String,
    /// Number of generated relations matching the sample.
    pub hits: usize,
    /// One matching relation, as a witness.
    pub example: Option<Relation>,
}

impl SampleMatch {
    pub fn matched(&self) -> bool {
        self.hits > 0
    }
}

fn relation_matches(sample: &CaseSample, r: &Relation, alpha: &Alphabet) -> bool {
    let (Some(l), Some(rh)) = (skeleton(&r.lhs, alpha), skeleton(&r.rhs, alpha)) else {
        return false;
    };
    sample.lhs.matches(&l) && sample.rhs.as_ref().is_none_or(|p| p.matches(&rh))
}

/// Match every sample against the generated relations.
pub fn validate_case_samples(set: &RelationSet, samples: &[CaseSample], alpha: &Alphabet) -> Vec<SampleMatch> {
    samples
        .iter()
        .map(|s| {
            let mut hits = 0;
            let mut example = None;
            for r in set.rules.values() {
                if relation_matches(s, r, alpha) {
                    hits += 1;
                    example.get_or_insert_with(|| r.clone());
                }
            }
            SampleMatch { id: s.id.clone(), hits, example }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_round_trips() {
        let p: PathPattern = "C 1 2 * ^u1 u2 *".parse().unwrap();
        assert_eq!(p.to_string(), "C 1 2 * ^u1 u2 *");
        assert!(p.edges[2].unwrap().hat);
    }

    #[test]
    fn pattern_rejects_short_input() {
        assert!("C 1 2".parse::<PathPattern>().is_err());
        assert!("C 1 2 * q u2 *".parse::<PathPattern>().is_err());
    }

    #[test]
    fn default_corpus_is_large_enough() {
        let s = default_samples();
        assert!(s.len() >= 10);
        for prefix in ["flip1", "C1", "P1", "P2"] {
            assert!(s.iter().any(|x| x.id.starts_with(prefix)));
        }
    }

    #[test]
    fn pair_types_match_either_order_name() {
        assert!(type_matches("RU", VType::Pair(crate::geometry::SideLetter::R, crate::geometry::SideLetter::U)));
        assert!(type_matches("C", VType::C));
        assert!(!type_matches("B", VType::C));
    }
}
