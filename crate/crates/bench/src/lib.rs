//! Shared fixtures for the pipeline benchmarks.

use nilcomplex_core::pipeline::Family;
use nilcomplex_core::{BuildConfig, Complex, Word};
use nilcomplex_core::complex::PASTING_RULE;

/// A complex of level `n` with the default rule.
pub fn complex(n: u32) -> Complex {
    Complex::grow(n, BuildConfig::default(), &PASTING_RULE).expect("level within default cap")
}

/// The family of levels 2..=`n`.
pub fn family(n: u32) -> Family {
    Family::up_to(n, BuildConfig::default()).expect("level within default cap")
}

/// Left sides of the first `k` relations of `f`.
pub fn sample_words(f: &Family, k: usize) -> Vec<Word> {
    f.relations.rules.keys().take(k).cloned().collect()
}
