//! Whole-pipeline checks: repeatability, dumps and rewriting of real paths.

use nilcomplex_core::codec::{encode_path, is_code_form, paths_from, reverse_word, scan_forbidden, Letter};
use nilcomplex_core::export::{complex_dump, read_relation_lines, write_relations};
use nilcomplex_core::pipeline::Family;
use nilcomplex_core::rewrite::{orbit_words, reduce, RewriteOutcome};
use nilcomplex_core::{BuildConfig, Complex};
use proptest::prelude::*;
use std::sync::OnceLock;

fn family() -> &'static Family {
    static F: OnceLock<Family> = OnceLock::new();
    F.get_or_init(|| Family::up_to(4, BuildConfig::default()).unwrap())
}

fn dump(f: &Family) -> Vec<u8> {
    let refs: Vec<&Complex> = f.complexes.iter().collect();
    let mut buf = Vec::new();
    write_relations(&f.relations, &refs, &mut buf).unwrap();
    buf
}

#[test]
fn relation_dumps_are_byte_identical_across_runs() {
    let a = Family::up_to(3, BuildConfig::default()).unwrap();
    let b = Family::up_to(3, BuildConfig::default()).unwrap();
    assert_eq!(dump(&a), dump(&b));
    let ca = serde_json::to_vec(&complex_dump(&a.complexes[1])).unwrap();
    let cb = serde_json::to_vec(&complex_dump(&b.complexes[1])).unwrap();
    assert_eq!(ca, cb);
}

#[test]
fn relation_dump_reads_back() {
    let f = family();
    let lines = read_relation_lines(std::str::from_utf8(&dump(f)).unwrap()).unwrap();
    assert_eq!(lines.len(), f.relations.len());
    for (line, r) in lines.iter().zip(f.relations.rules.values()) {
        assert_eq!(line.lhs, r.lhs.iter().map(|l| l.0).collect::<Vec<_>>());
    }
}

#[test]
fn family_is_deterministic_through_level_four() {
    assert!(family().relations.is_deterministic());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reversal_commutes_with_encoding(ci in 0usize..3, seed in any::<u64>(), len in 2usize..6) {
        let f = family();
        let (c, lab) = (&f.complexes[ci], &f.labels[ci]);
        let v = (seed % c.vertices.len() as u64) as u32;
        let paths = paths_from(c, v, len);
        prop_assume!(!paths.is_empty());
        let p = &paths[(seed as usize / 7) % paths.len()];
        let mut alpha = f.alphabet.clone();
        let w = encode_path(c, lab, &mut alpha, p).unwrap();
        let back: Vec<u32> = p.iter().rev().copied().collect();
        prop_assert_eq!(encode_path(c, lab, &mut alpha, &back).unwrap(), reverse_word(&w, &mut alpha));
    }

    #[test]
    fn rewriting_stays_on_realized_codes(ci in 0usize..3, seed in any::<u64>()) {
        let f = family();
        let (c, lab) = (&f.complexes[ci], &f.labels[ci]);
        let v = (seed % c.vertices.len() as u64) as u32;
        let paths = paths_from(c, v, 4);
        prop_assume!(!paths.is_empty());
        let p = &paths[(seed as usize / 7) % paths.len()];
        let mut alpha = f.alphabet.clone();
        let w = encode_path(c, lab, &mut alpha, p).unwrap();
        prop_assume!(scan_forbidden(&w, &f.rules, &alpha).is_none());
        let base = |l: Letter| {
            let v = alpha.vertices.resolve(l.payload());
            v.comps[v.base_at as usize]
        };
        let orbit = orbit_words(&w, &f.relations, 10_000);
        for u in &orbit {
            prop_assert_eq!(u.len(), w.len());
            prop_assert!(is_code_form(u));
            prop_assert_eq!(base(u[0]), base(w[0]));
            prop_assert_eq!(base(u[u.len() - 1]), base(w[w.len() - 1]));
        }
        if let RewriteOutcome::Canonical { orbit: n, .. } = reduce(&w, &f.relations, &f.rules, &alpha, 10_000) {
            prop_assert_eq!(n, orbit.len());
        }
    }
}
