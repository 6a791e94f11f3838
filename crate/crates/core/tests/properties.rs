//! Randomized invariants of the arithmetic, codec and pattern layers.

use nilcomplex_core::census::Sci;
use nilcomplex_core::codec::{parse_word, word_text, Letter};
use nilcomplex_core::names::EdgeLetter;
use nilcomplex_core::samples::PathPattern;
use proptest::prelude::*;
use std::ops::{Add, Mul};

fn letter() -> impl Strategy<Value = Letter> {
    (0u8..3, 0u32..(1 << 30)).prop_map(|(f, p)| match f {
        0 => Letter::x(p),
        1 => Letter::y(p),
        _ => Letter::z(p),
    })
}

proptest! {
    #[test]
    fn sci_matches_integer_arithmetic(a in 0u64..1_000_000_000, b in 0u64..1_000_000_000) {
        let (x, y) = (Sci::int(a as u128), Sci::int(b as u128));
        prop_assert_eq!(x.mul(y).to_u128(), Some(a as u128 * b as u128));
        prop_assert_eq!(x.add(y).to_u128(), Some(a as u128 + b as u128));
        prop_assert_eq!(x.lt(y), a < b);
    }

    #[test]
    fn sci_scaling_preserves_order(a in 1u64..1_000_000, b in 1u64..1_000_000, e in 0u32..20) {
        let x = Sci::new(a as u128, e);
        let y = Sci::new(b as u128, e);
        prop_assert_eq!(x.lt(y), a < b);
        prop_assert!(Sci::int(a as u128).lt(Sci::new(a as u128, e + 1)));
    }

    #[test]
    fn word_text_round_trips(w in prop::collection::vec(letter(), 0..40)) {
        prop_assert_eq!(parse_word(&word_text(&w)).unwrap(), w);
    }

    #[test]
    fn letters_keep_family_and_payload(l in letter()) {
        let back = match l.family() {
            nilcomplex_core::codec::Family::X => Letter::x(l.payload()),
            nilcomplex_core::codec::Family::Y => Letter::y(l.payload()),
            nilcomplex_core::codec::Family::Z => Letter::z(l.payload()),
        };
        prop_assert_eq!(back, l);
    }

    #[test]
    fn path_patterns_round_trip(
        types in prop::collection::vec(prop::sample::select(vec!["*", "A", "B", "C", "UL", "RD", "CDR", "D"]), 3),
        edges in prop::collection::vec(prop::sample::select(vec!["*", "1", "2", "u1", "^u2", "l", "^d", "mid", "r2"]), 4),
    ) {
        let text = format!("{} {} {} {} {} {} {}", types[0], edges[0], edges[1], types[1], edges[2], edges[3], types[2]);
        let p: PathPattern = text.parse().unwrap();
        prop_assert_eq!(p.to_string(), text.clone());
        let again: PathPattern = p.to_string().parse().unwrap();
        prop_assert_eq!(again, p);
    }

    #[test]
    fn edge_letters_round_trip(s in prop::sample::select(vec!["1", "2", "3", "4", "u1", "u2", "l", "r", "d", "mid", "ld", "rd"]), hat in any::<bool>()) {
        let text = if hat { format!("^{s}") } else { s.to_string() };
        let e: EdgeLetter = text.parse().unwrap();
        prop_assert_eq!(e.hat, hat);
        prop_assert_eq!(e.to_string(), text);
    }
}
