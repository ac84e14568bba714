use std::collections::HashSet;

use gcd_words::billiard::{end_corner, fold_point, fold_trajectory, unfold_endpoint, Corner};
use gcd_words::enumeration::{count_words, words_of_length};
use gcd_words::word::Symbol;
use gcd_words::{apply_word, encode, euclid_trace, gcd, Slope, Word};
use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use proptest::prelude::*;

fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
    (1u64..1_000_000, 1u64..1_000_000).prop_map(|(a, b)| {
        let g = a.gcd(&b);
        (a / g, b / g)
    })
}

fn any_word() -> impl Strategy<Value = Word> {
    (any::<bool>(), prop::collection::vec(1u64..40, 0..12))
        .prop_map(|(lead, runs)| Word::new(lead && !runs.is_empty(), runs).unwrap())
}

proptest! {
    #[test]
    fn encode_then_apply_is_identity((q, p) in coprime_pair()) {
        let s = Slope::new(q, p).unwrap();
        let w = encode(&s).unwrap();
        prop_assert_eq!(w.apply(&Slope::one()), s);
    }

    #[test]
    fn apply_then_encode_is_identity(w in any_word()) {
        let s = apply_word(&w, &Slope::one());
        prop_assert_eq!(encode(&s).unwrap(), w);
    }

    #[test]
    fn word_text_roundtrips(w in any_word()) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn symbol_expansion_roundtrips(w in any_word()) {
        let symbols: Vec<Symbol> = w.symbols().collect();
        prop_assert_eq!(symbols.len() as u64, w.len());
        prop_assert_eq!(Word::from_symbols(symbols).unwrap(), w);
    }

    #[test]
    fn gcd_divides_and_is_greatest(a in 1u64.., b in 1u64..) {
        let g = gcd(&BigUint::from(a), &BigUint::from(b)).unwrap();
        prop_assert_eq!(g, BigUint::from(a.gcd(&b)));
        let t = euclid_trace(&BigUint::from(a), &BigUint::from(b)).unwrap();
        prop_assert_eq!(t.gcd(), &BigUint::from(a.gcd(&b)));
    }

    #[test]
    fn fold_point_has_period_two(n in 0u64..1_000_000, d in 1u64..1000, k in 0u64..100) {
        let u = Ratio::new(n, d);
        let f = fold_point(&u);
        prop_assert!(f <= Ratio::from_integer(1));
        prop_assert_eq!(fold_point(&(u + Ratio::from_integer(2 * k))), f);
    }

    #[test]
    fn fold_point_reflects_about_integers(n in 0u64..1_000_000, d in 1u64..1000, m in 1u64..1000) {
        let u = Ratio::new(n, d);
        prop_assume!(u <= Ratio::from_integer(m));
        let m = Ratio::from_integer(m);
        prop_assert_eq!(fold_point(&(m + (m - u))), fold_point(&u));
    }

    #[test]
    fn trajectory_ends_at_parity_corner(p in 1u64..400, q in 1u64..400) {
        prop_assume!(p.gcd(&q) == 1);
        let s = Slope::new(q, p).unwrap();
        let t = fold_trajectory(&s).unwrap();
        let expect = Corner::from_coords((p % 2) as u8, (q % 2) as u8).unwrap();
        prop_assert_eq!(t.end_corner(), expect);
        prop_assert_eq!(end_corner(&s), expect);
        prop_assert_eq!(unfold_endpoint(&s), (BigUint::from(p), BigUint::from(q)));
        prop_assert_eq!(t.segment_count() as u64, p + q - 1);
        prop_assert!(t.points().iter().all(|pt| pt.is_on_boundary()));
    }
}

#[test]
fn every_coprime_pair_has_exactly_one_word() {
    let mut seen = HashSet::new();
    for n in 0..=16 {
        for w in words_of_length(n).unwrap() {
            let s = w.apply(&Slope::one());
            assert!(seen.insert(s.clone()), "{s} reached twice");
        }
    }
    // every word for q/p has length at most q + p - 1
    for p in 1u64..=9 {
        for q in 1u64..=(17 - p) {
            if p.gcd(&q) == 1 {
                assert!(seen.contains(&Slope::new(q, p).unwrap()), "{q}/{p} missing");
            }
        }
    }
}

#[test]
fn word_counts_match_generated_lists() {
    for n in 0..=22 {
        assert_eq!(count_words(n), BigUint::from(words_of_length(n).unwrap().len()));
    }
}
