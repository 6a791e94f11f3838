//! Build, label and relate a family of complexes in one call.

use crate::codec::{build_zero_rules, ZeroRuleSet};
use crate::complex::{BuildConfig, Complex, PastingRule, PASTING_RULE};
use crate::error::Result;
use crate::labels::{Alphabet, Labeling};
use crate::relations::{generate_relations, RelationSet};
use rayon::prelude::*;

/// Complexes of levels `levels`, built in parallel, in input order.
pub fn build_family(levels: &[u32], config: BuildConfig, rule: &dyn PastingRule) -> Result<Vec<Complex>> {
    levels.par_iter().map(|&n| Complex::grow(n, config, rule)).collect()
}

/// A labeled family with its zero rules and relations.
pub struct Family {
    pub complexes: Vec<Complex>,
    pub labels: Vec<Labeling>,
    pub alphabet: Alphabet,
    pub rules: ZeroRuleSet,
    pub relations: RelationSet,
}

impl Family {
    /// Build levels `2..=level`, label them with one alphabet and derive relations.
    pub fn up_to(level: u32, config: BuildConfig) -> Result<Family> {
        let levels: Vec<u32> = (2..=level.max(2)).collect();
        Family::of_levels(&levels, config, &PASTING_RULE)
    }

    pub fn of_levels(levels: &[u32], config: BuildConfig, rule: &dyn PastingRule) -> Result<Family> {
        Family::from_complexes(build_family(levels, config, rule)?)
    }

    /// Label already built complexes with one alphabet and derive relations.
    pub fn from_complexes(complexes: Vec<Complex>) -> Result<Family> {
        let mut alphabet = Alphabet::new();
        let labels: Vec<Labeling> = complexes.iter().map(|c| Labeling::new(c, &mut alphabet)).collect();
        let pairs: Vec<(&Complex, &Labeling)> = complexes.iter().zip(&labels).collect();
        let rules = build_zero_rules(&pairs, &mut alphabet)?;
        let relations = generate_relations(&pairs, &mut alphabet, &rules)?;
        Ok(Family { complexes, labels, alphabet, rules, relations })
    }

    pub fn pairs(&self) -> Vec<(&Complex, &Labeling)> {
        self.complexes.iter().zip(&self.labels).collect()
    }

    /// Index of the complex of level `n`.
    pub fn index_of(&self, n: u32) -> Option<usize> {
        self.complexes.iter().position(|c| c.level == n)
    }
}
