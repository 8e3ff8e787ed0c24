//! The reverse direction: recover the modulus m whose expansion realizes a
//! given digit string or string value.
//!
//! Two modes are exposed because they genuinely differ on strings with
//! leading zeros. The integer mode pads a's digits out to the order of the
//! base modulo a, exactly as an integer input allows; the string mode keeps
//! the given length. For the value 9 in base 10 the integer mode collapses
//! to m = 1 while the string `(0,9)` reconstructs m = 11. The string mode is
//! the one that round-trips expansions.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::expansion::{minimal_word_period, string_value, DigitString, MAX_MATERIALIZED_DIGITS};
use crate::numtheory::{self, DEFAULT_FACTOR_BUDGET, DEFAULT_SEED};
use crate::Natural;

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

/// Outcome of a reconstruction: the padded string, its value, the length,
/// and the recovered modulus, plus the order of the base modulo that
/// modulus. `collapsed` flags the degenerate m <= 1 results, which are
/// expected on some inputs rather than exceptional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionResult {
    base: u64,
    value: Natural,
    padded: DigitString,
    length: usize,
    modulus: Natural,
    order_of_base_mod_m: Natural,
    collapsed: bool,
}

impl ReconstructionResult {
    pub fn base(&self) -> u64 {
        self.base
    }

    /// The string value a.
    pub fn value(&self) -> &Natural {
        &self.value
    }

    pub fn padded_string(&self) -> &DigitString {
        &self.padded
    }

    /// The padded length l; always a multiple of the order of the base
    /// modulo the recovered modulus.
    pub fn length(&self) -> usize {
        self.length
    }

    /// The recovered modulus m = (base^l - 1)/a.
    pub fn modulus(&self) -> &Natural {
        &self.modulus
    }

    pub fn order_of_base_mod_m(&self) -> &Natural {
        &self.order_of_base_mod_m
    }

    /// True iff the recovered modulus degenerated to m <= 1.
    pub fn collapsed(&self) -> bool {
        self.collapsed
    }

    /// True iff the expansion of 1/m reproduces the padded string verbatim.
    pub fn order_matches_length(&self) -> bool {
        self.order_of_base_mod_m == nat(self.length as u64)
    }
}

fn finish(
    base: u64,
    value: Natural,
    padded: DigitString,
    budget: u64,
    seed: u64,
) -> Result<ReconstructionResult> {
    let length = padded.len();
    let power = nat(base).pow(length as u32) - 1u32;
    let (modulus, rem) = power.div_rem(&value);
    if !rem.is_zero() {
        return Err(Error::NoModulus {
            value,
            base,
            length,
        });
    }
    let order_of_base_mod_m =
        numtheory::multiplicative_order_with(&nat(base), &modulus, budget, seed)?;
    let collapsed = modulus <= Natural::one();
    Ok(ReconstructionResult {
        base,
        value,
        padded,
        length,
        modulus,
        order_of_base_mod_m,
        collapsed,
    })
}

/// Recovers m from an integer a >= 1 coprime to the base: pads the digits
/// of a with zeros to l = order of base mod a, and returns
/// m = (base^l - 1)/a.
pub fn reconstruct_from_integer(a: &Natural, base: u64) -> Result<ReconstructionResult> {
    reconstruct_from_integer_with(a, base, DEFAULT_FACTOR_BUDGET, DEFAULT_SEED)
}

/// [`reconstruct_from_integer`] with an explicit factorization budget and
/// seed for the order computation.
pub fn reconstruct_from_integer_with(
    a: &Natural,
    base: u64,
    budget: u64,
    seed: u64,
) -> Result<ReconstructionResult> {
    if base < 2 {
        return Err(Error::InvalidInput(format!(
            "base must be at least 2, got {base}"
        )));
    }
    if a.is_zero() {
        return Err(Error::InvalidInput("value must be at least 1".into()));
    }
    let b = nat(base);
    if !a.gcd(&b).is_one() {
        return Err(Error::NotCoprime {
            left: a.clone(),
            right: b,
        });
    }
    let length = if a.bits() <= 64 {
        numtheory::multiplicative_order_with(&b, a, budget, seed)?
            .to_u64()
            .expect("order of a 64-bit modulus fits in 64 bits")
    } else {
        // Factoring a may be out of reach; only orders short enough to
        // materialize are usable anyway.
        numtheory::order_at_most(base, a, MAX_MATERIALIZED_DIGITS).ok_or_else(|| {
            Error::InvalidInput(format!(
                "order of {base} modulo {a} exceeds {MAX_MATERIALIZED_DIGITS} digits"
            ))
        })?
    };
    if length > MAX_MATERIALIZED_DIGITS {
        return Err(Error::InvalidInput(format!(
            "padded string of {length} digits is too long to materialize"
        )));
    }
    let padded = DigitString::from_natural_padded(a, base, length as usize)?;
    finish(base, a.clone(), padded, budget, seed)
}

/// Recovers m from a digit string taken at its own length: requires the
/// last digit coprime to the base and the string not to repeat a shorter
/// block, and returns m = (base^l - 1)/value when the division is exact.
pub fn reconstruct_from_string(s: &DigitString) -> Result<ReconstructionResult> {
    reconstruct_from_string_with(s, DEFAULT_FACTOR_BUDGET, DEFAULT_SEED)
}

/// [`reconstruct_from_string`] with an explicit factorization budget and
/// seed for the order computation.
pub fn reconstruct_from_string_with(
    s: &DigitString,
    budget: u64,
    seed: u64,
) -> Result<ReconstructionResult> {
    let base = s.base();
    let last = nat(s.last_digit());
    let b = nat(base);
    if !last.gcd(&b).is_one() {
        return Err(Error::NotCoprime {
            left: last,
            right: b,
        });
    }
    let word_period = minimal_word_period(s);
    if word_period < s.len() {
        return Err(Error::ReducibleString { word_period });
    }
    let value = string_value(s);
    finish(base, value, s.clone(), budget, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(base: u64, digits: &[u64]) -> DigitString {
        DigitString::new(base, digits.to_vec()).unwrap()
    }

    #[test]
    fn from_integer_examples() {
        let r = reconstruct_from_integer(&nat(142_857), 10).unwrap();
        assert_eq!(r.length(), 6);
        assert_eq!(r.padded_string().digits(), &[1, 4, 2, 8, 5, 7]);
        assert_eq!(r.modulus(), &nat(7));
        assert_eq!(r.order_of_base_mod_m(), &nat(6));
        assert!(r.order_matches_length());
        assert!(!r.collapsed());

        let r = reconstruct_from_integer(&nat(93), 2).unwrap();
        assert_eq!(r.length(), 10);
        assert_eq!(r.padded_string().digits(), &[0, 0, 0, 1, 0, 1, 1, 1, 0, 1]);
        assert_eq!(r.modulus(), &nat(11));
        assert_eq!(r.order_of_base_mod_m(), &nat(10));

        let r = reconstruct_from_integer(&nat(5), 2).unwrap();
        assert_eq!(r.length(), 4);
        assert_eq!(r.padded_string().digits(), &[0, 1, 0, 1]);
        assert_eq!(r.modulus(), &nat(3));
        assert_eq!(r.order_of_base_mod_m(), &nat(2));
        assert!(!r.order_matches_length());

        let r = reconstruct_from_integer(&nat(3), 10).unwrap();
        assert_eq!(r.length(), 1);
        assert_eq!(r.padded_string().digits(), &[3]);
        assert_eq!(r.modulus(), &nat(3));
    }

    #[test]
    fn from_integer_collapse() {
        let r = reconstruct_from_integer(&nat(9), 10).unwrap();
        assert_eq!(r.modulus(), &Natural::one());
        assert!(r.collapsed());
        assert_eq!(r.order_of_base_mod_m(), &nat(1));
    }

    #[test]
    fn from_integer_errors() {
        assert!(matches!(
            reconstruct_from_integer(&nat(4), 10),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            reconstruct_from_integer(&nat(0), 10),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn from_string_examples() {
        let r = reconstruct_from_string(&ds(10, &[0, 9])).unwrap();
        assert_eq!(r.modulus(), &nat(11));
        assert_eq!(r.length(), 2);

        let r = reconstruct_from_string(&ds(10, &[1, 4, 2, 8, 5, 7])).unwrap();
        assert_eq!(r.modulus(), &nat(7));

        assert!(matches!(
            reconstruct_from_string(&ds(2, &[0, 1, 0, 1])),
            Err(Error::ReducibleString { word_period: 2 })
        ));
    }

    #[test]
    fn from_string_no_modulus() {
        // 21 does not divide 99.
        assert!(matches!(
            reconstruct_from_string(&ds(10, &[2, 1])),
            Err(Error::NoModulus { .. })
        ));
    }

    #[test]
    fn from_string_rejects_noncoprime_last_digit() {
        assert!(matches!(
            reconstruct_from_string(&ds(10, &[1, 5])),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            reconstruct_from_string(&ds(10, &[1, 0])),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn leading_zero_disagreement_between_modes() {
        // Same integer value, different readings.
        let by_string = reconstruct_from_string(&ds(10, &[0, 9])).unwrap();
        assert_eq!(by_string.modulus(), &nat(11));
        let by_integer = reconstruct_from_integer(&nat(9), 10).unwrap();
        assert!(by_integer.collapsed());
    }

    #[test]
    fn single_all_nines_digit_collapses_in_string_mode() {
        let r = reconstruct_from_string(&ds(10, &[9])).unwrap();
        assert!(r.collapsed());
        assert_eq!(r.modulus(), &Natural::one());
    }
}
