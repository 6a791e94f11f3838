//! Budgeted rewriting of words under the square relations and zero rules.

use crate::codec::{scan_forbidden, Family, Hit, Letter, Word, ZeroRuleSet};
use crate::error::{Error, Result};
use crate::labels::Alphabet;
use crate::relations::RelationSet;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

/// Default number of distinct words a search may visit.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// One rewrite: the window start and the resulting word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub pos: usize,
    pub word: Word,
}

/// Verdict of a reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RewriteOutcome {
    /// Some word of the orbit is zero; `trace` leads from the input to it.
    Zero { hit: Hit, word: Word, trace: Vec<Step> },
    /// The orbit was exhausted without a zero; `word` is its least member.
    Canonical { word: Word, orbit: usize },
    /// The budget ran out first.
    Unknown { visited: usize, frontier: usize },
}

impl RewriteOutcome {
    pub fn is_zero(&self) -> bool {
        matches!(self, RewriteOutcome::Zero { .. })
    }
}

/// Replace the 7-letter window starting at `pos` by its relation image.
pub fn apply_relation_at(w: &[Letter], pos: usize, rels: &RelationSet) -> Result<Option<Word>> {
    if pos + 7 > w.len() || w[pos].family() != Family::Y {
        return Err(Error::BadPosition(pos));
    }
    Ok(rels.get(&w[pos..pos + 7]).map(|r| {
        let mut out = w.to_vec();
        out[pos..pos + 7].copy_from_slice(&r.rhs);
        out
    }))
}

/// All single rewrites of `w`.
pub fn neighbors(w: &[Letter], rels: &RelationSet) -> Vec<(usize, Word)> {
    let mut out = Vec::new();
    if w.len() < 7 {
        return out;
    }
    for pos in 0..=w.len() - 7 {
        if w[pos].family() == Family::Y {
            if let Ok(Some(v)) = apply_relation_at(w, pos, rels) {
                if v != w {
                    out.push((pos, v));
                }
            }
        }
    }
    out
}

/// Summary of an orbit search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSummary {
    pub size: usize,
    pub zero_hits: usize,
    pub frontier: usize,
    pub exhausted: bool,
}

struct Search {
    words: Vec<Word>,
    parent: Vec<Option<(usize, usize)>>,
    index: HashMap<Word, usize>,
    queue: VecDeque<usize>,
}

impl Search {
    fn new(w: &[Letter]) -> Search {
        let mut s = Search {
            words: vec![w.to_vec()],
            parent: vec![None],
            index: HashMap::new(),
            queue: VecDeque::from([0]),
        };
        s.index.insert(w.to_vec(), 0);
        s
    }

    fn trace(&self, mut i: usize) -> Vec<Step> {
        let mut steps = Vec::new();
        while let Some((p, pos)) = self.parent[i] {
            steps.push(Step { pos, word: self.words[i].clone() });
            i = p;
        }
        steps.reverse();
        steps
    }

    /// Expand the next queued word; returns its index.
    fn expand(&mut self, rels: &RelationSet, budget: usize) -> Option<usize> {
        let i = self.queue.pop_front()?;
        for (pos, v) in neighbors(&self.words[i], rels) {
            if self.words.len() >= budget {
                break;
            }
            if !self.index.contains_key(&v) {
                let j = self.words.len();
                self.index.insert(v.clone(), j);
                self.words.push(v);
                self.parent.push(Some((i, pos)));
                self.queue.push_back(j);
            }
        }
        Some(i)
    }
}

/// Explore the rewrite orbit of `w` breadth-first, stopping at the first zero.
pub fn reduce(
    w: &[Letter],
    rels: &RelationSet,
    rules: &ZeroRuleSet,
    alpha: &Alphabet,
    budget: usize,
) -> RewriteOutcome {
    let mut s = Search::new(w);
    let mut checked = 0;
    loop {
        while checked < s.words.len() {
            if let Some(hit) = scan_forbidden(&s.words[checked], rules, alpha) {
                return RewriteOutcome::Zero {
                    hit,
                    word: s.words[checked].clone(),
                    trace: s.trace(checked),
                };
            }
            checked += 1;
        }
        if s.words.len() >= budget && !s.queue.is_empty() {
            return RewriteOutcome::Unknown { visited: s.words.len(), frontier: s.queue.len() };
        }
        if s.expand(rels, budget).is_none() {
            break;
        }
    }
    let word = s.words.iter().min().cloned().unwrap_or_default();
    RewriteOutcome::Canonical { word, orbit: s.words.len() }
}

/// Explore the whole orbit of `w` within budget, counting zero members.
pub fn orbit_explore(
    w: &[Letter],
    rels: &RelationSet,
    rules: &ZeroRuleSet,
    alpha: &Alphabet,
    budget: usize,
) -> OrbitSummary {
    if scan_forbidden(w, rules, alpha).is_some() {
        return OrbitSummary { size: 1, zero_hits: 1, frontier: 0, exhausted: true };
    }
    let mut s = Search::new(w);
    while s.words.len() < budget && s.expand(rels, budget).is_some() {}
    let zero_hits = s.words.iter().filter(|x| scan_forbidden(x, rules, alpha).is_some()).count();
    OrbitSummary {
        size: s.words.len(),
        zero_hits,
        frontier: s.queue.len(),
        exhausted: s.queue.is_empty(),
    }
}

/// Orbit of `w` as a list of words, for tests and diagnostics.
pub fn orbit_words(w: &[Letter], rels: &RelationSet, budget: usize) -> Vec<Word> {
    let mut s = Search::new(w);
    while s.words.len() < budget && s.expand(rels, budget).is_some() {}
    s.words
}

/// Reduce the `k`-fold concatenation of `w`.
pub fn nil_check(
    w: &[Letter],
    k: usize,
    rels: &RelationSet,
    rules: &ZeroRuleSet,
    alpha: &Alphabet,
    budget: usize,
) -> RewriteOutcome {
    let power: Word = std::iter::repeat_n(w, k).flatten().copied().collect();
    reduce(&power, rels, rules, alpha, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::BuildConfig;
    use crate::pipeline::Family as Fam;

    fn family() -> Fam {
        Fam::up_to(3, BuildConfig::default()).unwrap()
    }

    #[test]
    fn bad_positions_are_rejected() {
        let f = family();
        let w = vec![Letter::y(0); 3];
        assert!(matches!(apply_relation_at(&w, 0, &f.relations), Err(Error::BadPosition(0))));
        let r = f.relations.rules.values().next().unwrap();
        assert!(apply_relation_at(&r.lhs, 1, &f.relations).is_err());
    }

    #[test]
    fn a_relation_side_reaches_its_image() {
        let f = family();
        let r = f.relations.rules.values().next().unwrap();
        assert_eq!(apply_relation_at(&r.lhs, 0, &f.relations).unwrap(), Some(r.rhs.clone()));
        let orbit = orbit_words(&r.lhs, &f.relations, 1000);
        assert!(orbit.contains(&r.rhs));
    }

    #[test]
    fn single_window_orbits_are_canonical() {
        let f = family();
        for r in f.relations.rules.values().take(50) {
            match reduce(&r.lhs, &f.relations, &f.rules, &f.alphabet, 1000) {
                RewriteOutcome::Canonical { word, orbit } => {
                    assert!(orbit >= 2);
                    assert!(word <= r.lhs && word <= r.rhs);
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn forbidden_input_is_zero_without_steps() {
        let f = family();
        let w = vec![Letter::y(0), Letter::x(0)];
        match reduce(&w, &f.relations, &f.rules, &f.alphabet, 10) {
            RewriteOutcome::Zero { trace, .. } => assert!(trace.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(orbit_explore(&w, &f.relations, &f.rules, &f.alphabet, 10).zero_hits, 1);
    }

    #[test]
    fn tiny_budget_gives_unknown() {
        let f = family();
        let r = f.relations.rules.values().next().unwrap();
        assert!(matches!(reduce(&r.lhs, &f.relations, &f.rules, &f.alphabet, 1), RewriteOutcome::Unknown { .. }));
        let s = orbit_explore(&r.lhs, &f.relations, &f.rules, &f.alphabet, 1);
        assert!(!s.exhausted);
    }

    #[test]
    fn first_power_is_plain_reduction() {
        let f = family();
        let r = f.relations.rules.values().next().unwrap();
        let a = nil_check(&r.lhs, 1, &f.relations, &f.rules, &f.alphabet, 1000);
        assert_eq!(a, reduce(&r.lhs, &f.relations, &f.rules, &f.alphabet, 1000));
    }
}
