//! Randomized invariants over the exact-arithmetic core.

use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use proptest::collection::vec;
use proptest::prelude::*;
use repetend::expansion::{
    self, expand, minimal_word_period, repeating_value, string_value, DigitString,
};
use repetend::numtheory::{self, DEFAULT_FACTOR_BUDGET};
use repetend::reconstruction;
use repetend::symmetry::{cyclic_shift, run_length_encode};
use repetend::Natural;

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

fn digit_string_strategy() -> impl Strategy<Value = DigitString> {
    (2u64..=16).prop_flat_map(|base| {
        vec(0..base, 1..=24).prop_map(move |digits| DigitString::new(base, digits).unwrap())
    })
}

proptest! {
    #[test]
    fn rotations_compose(s in digit_string_strategy(), t1 in 0u64..64, t2 in 0u64..64) {
        let l = s.len() as u64;
        let twice = cyclic_shift(&cyclic_shift(&s, t1), t2);
        let once = cyclic_shift(&s, (t1 + t2) % l);
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn full_rotation_is_identity(s in digit_string_strategy()) {
        prop_assert_eq!(cyclic_shift(&s, s.len() as u64), s.clone());
        prop_assert_eq!(cyclic_shift(&s, 0), s);
    }

    #[test]
    fn padded_digits_round_trip(base in 2u64..=16, length in 1usize..=20, seed in any::<u64>()) {
        // A value below base^length reads back exactly.
        let bound = nat(base).pow(length as u32);
        let value = nat(seed) % &bound;
        let padded = DigitString::from_natural_padded(&value, base, length).unwrap();
        prop_assert_eq!(padded.len(), length);
        prop_assert_eq!(string_value(&padded), value);
    }

    #[test]
    fn word_period_divides_length(s in digit_string_strategy()) {
        let p = minimal_word_period(&s);
        prop_assert!(p >= 1 && p <= s.len());
        prop_assert_eq!(s.len() % p, 0);
        // The block of that length really does tile the string.
        let d = s.digits();
        for i in p..s.len() {
            prop_assert_eq!(d[i], d[i - p]);
        }
    }

    #[test]
    fn repeating_a_block_is_detected(block in vec(0u64..2, 1..=6), copies in 2usize..=4) {
        let mut digits = Vec::new();
        for _ in 0..copies {
            digits.extend_from_slice(&block);
        }
        let s = DigitString::new(2, digits).unwrap();
        let p = minimal_word_period(&s);
        prop_assert!(p <= block.len());
        prop_assert_eq!(block.len() % p, 0);
    }

    #[test]
    fn run_length_form_invariants(s in digit_string_strategy()) {
        let runs = run_length_encode(&s);
        prop_assert_eq!(runs.total_length(), s.len());
        for window in runs.runs().windows(2) {
            prop_assert_ne!(window[0].symbol, window[1].symbol);
        }
        let mut decoded = Vec::new();
        for run in runs.runs() {
            decoded.extend(std::iter::repeat(run.symbol).take(run.length));
        }
        prop_assert_eq!(decoded.as_slice(), s.digits());
    }

    #[test]
    fn fractions_come_out_reduced(s in digit_string_strategy()) {
        match repeating_value(&s) {
            Ok(f) => prop_assert!(f.numerator().gcd(f.denominator()).is_one()),
            Err(e) => prop_assert_eq!(e.name(), "zero-value"),
        }
    }

    #[test]
    fn periodicity_criteria_agree_base10(value in any::<u64>(), length in 1usize..=8) {
        let bound = nat(10).pow(length as u32);
        let a = nat(value) % &bound;
        // The call itself cross-checks the two criteria and errors on
        // disagreement.
        prop_assert!(expansion::is_periodic_padded(&a, length, 10).is_ok());
    }

    #[test]
    fn mod_pow_matches_iteration(b in 0u64..1000, e in 0u64..48, m in 2u64..1000) {
        let mut oracle = 1u64 % m;
        for _ in 0..e {
            oracle = ((oracle as u128 * b as u128) % m as u128) as u64;
        }
        let got = numtheory::mod_pow(&nat(b), &nat(e), &nat(m)).unwrap();
        prop_assert_eq!(got, nat(oracle));
    }

    #[test]
    fn factorize_random_recomposes(x in 2u64..1_000_000_000) {
        let f = numtheory::factorize(&nat(x), DEFAULT_FACTOR_BUDGET).unwrap();
        prop_assert_eq!(f.recompose(), nat(x));
        for (p, _) in f.pairs() {
            prop_assert!(numtheory::is_prime(p));
        }
    }

    #[test]
    fn expansion_round_trips_random_moduli(m in 2u64..5000, base_idx in 0usize..3) {
        let base = [2u64, 3, 10][base_idx];
        prop_assume!(nat(m).gcd(&nat(base)).is_one());
        let e = expand(&nat(m), base).unwrap();
        let r = reconstruction::reconstruct_from_string(e.repetend()).unwrap();
        prop_assert_eq!(r.modulus(), &nat(m));
        prop_assert_eq!(r.length(), e.period());
        // And the expansion period really is the multiplicative order.
        let order = numtheory::multiplicative_order(&nat(base), &nat(m)).unwrap();
        prop_assert_eq!(order.to_usize().unwrap(), e.period());
    }

    #[test]
    fn shifted_repetends_match_residues(m in 2u64..600, t in 0u64..64, base_idx in 0usize..2) {
        let base = [2u64, 10][base_idx];
        prop_assume!(nat(m).gcd(&nat(base)).is_one());
        let e = expand(&nat(m), base).unwrap();
        let rotated = cyclic_shift(e.repetend(), t);
        let fraction = repeating_value(&rotated).unwrap();
        let residue = numtheory::mod_pow(&nat(base), &nat(t), &nat(m)).unwrap();
        let expected = expansion::ExactFraction::new(residue, nat(m)).unwrap();
        prop_assert_eq!(fraction, expected);
    }
}
