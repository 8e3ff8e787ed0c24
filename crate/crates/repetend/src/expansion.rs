//! Digit strings and the repeating expansion of 1/m in base n.
//!
//! A [`DigitString`] is a finite ordered tuple of base-n digits in which
//! leading zeros are significant: `(0,9)` and `(9)` are different strings
//! with the same integer value. An [`Expansion`] packages the minimal
//! repeating block of 1/m together with its period, which always equals the
//! multiplicative order of the base modulo m.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numtheory;
use crate::Natural;

/// Hard cap on the number of digits any operation will materialize.
pub const MAX_MATERIALIZED_DIGITS: u64 = 1 << 21;

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

fn ensure_base(base: u64) -> Result<()> {
    if base < 2 {
        return Err(Error::InvalidInput(format!(
            "base must be at least 2, got {base}"
        )));
    }
    Ok(())
}

fn ensure_expandable(m: &Natural, base: u64) -> Result<()> {
    ensure_base(base)?;
    if *m < nat(2) {
        return Err(Error::InvalidInput(format!(
            "modulus must be at least 2, got {m}"
        )));
    }
    let b = nat(base);
    if !m.gcd(&b).is_one() {
        return Err(Error::NotCoprime {
            left: m.clone(),
            right: b,
        });
    }
    Ok(())
}

/// A finite sequence of base-n digits. Length is part of identity, so
/// leading zeros matter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitString {
    base: u64,
    digits: Vec<u64>,
}

impl DigitString {
    pub fn new(base: u64, digits: Vec<u64>) -> Result<Self> {
        ensure_base(base)?;
        if digits.is_empty() {
            return Err(Error::InvalidInput(
                "digit string must have length at least 1".into(),
            ));
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::InvalidInput(format!(
                "digit {d} out of range for base {base}"
            )));
        }
        Ok(DigitString { base, digits })
    }

    /// The natural (leading-zero-free) digits of `value`. Zero becomes the
    /// single digit 0.
    pub fn from_natural(value: &Natural, base: u64) -> Result<Self> {
        ensure_base(base)?;
        let b = nat(base);
        let mut digits = Vec::new();
        let mut rest = value.clone();
        while !rest.is_zero() {
            let (q, r) = rest.div_rem(&b);
            digits.push(r.to_u64().expect("remainder below a u64 base"));
            rest = q;
        }
        if digits.is_empty() {
            digits.push(0);
        }
        digits.reverse();
        DigitString::new(base, digits)
    }

    /// The digits of `value` left-padded with zeros to exactly `length`.
    pub fn from_natural_padded(value: &Natural, base: u64, length: usize) -> Result<Self> {
        let natural = DigitString::from_natural(value, base)?;
        if natural.len() > length {
            return Err(Error::LengthOverflow {
                value: value.clone(),
                length,
                base,
            });
        }
        let mut digits = vec![0u64; length - natural.len()];
        digits.extend_from_slice(natural.digits());
        DigitString::new(base, digits)
    }

    /// Parses the wire form: comma-separated decimal digit values,
    /// e.g. `"0,0,0,1,0,1,1,1,0,1"`.
    pub fn parse(base: u64, text: &str) -> Result<Self> {
        let digits = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidInput(format!("bad digit {part:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        DigitString::new(base, digits)
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 1-based digit access, mirroring the usual subscript convention.
    pub fn digit(&self, k: usize) -> u64 {
        self.digits[k - 1]
    }

    pub fn last_digit(&self) -> u64 {
        *self.digits.last().expect("digit strings are nonempty")
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for d in &self.digits {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// An exact nonnegative rational, kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactFraction {
    numerator: Natural,
    denominator: Natural,
}

impl ExactFraction {
    pub fn new(numerator: Natural, denominator: Natural) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidInput("denominator must be nonzero".into()));
        }
        let g = numerator.gcd(&denominator);
        if g.is_one() {
            return Ok(ExactFraction {
                numerator,
                denominator,
            });
        }
        Ok(ExactFraction {
            numerator: &numerator / &g,
            denominator: &denominator / &g,
        })
    }

    pub fn numerator(&self) -> &Natural {
        &self.numerator
    }

    pub fn denominator(&self) -> &Natural {
        &self.denominator
    }
}

impl fmt::Display for ExactFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// The periodic digit data of 1/m in a given base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    modulus: Natural,
    base: u64,
    period: usize,
    repetend: DigitString,
}

impl Expansion {
    pub fn modulus(&self) -> &Natural {
        &self.modulus
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// Length of the minimal repeating block; equals the multiplicative
    /// order of the base modulo m.
    pub fn period(&self) -> usize {
        self.period
    }

    pub fn repetend(&self) -> &DigitString {
        &self.repetend
    }

    /// The k-th digit of the expansion, 1-based; indices beyond the period
    /// wrap around.
    pub fn digit_at(&self, k: u64) -> u64 {
        let idx = ((k - 1) % self.period as u64) as usize;
        self.repetend.digits()[idx]
    }
}

/// Computes the minimal repeating block of 1/m in the given base by exact
/// long division.
pub fn expand(m: &Natural, base: u64) -> Result<Expansion> {
    ensure_expandable(m, base)?;
    let order = numtheory::multiplicative_order(&nat(base), m)?;
    let period = order
        .to_u64()
        .filter(|&p| p <= MAX_MATERIALIZED_DIGITS)
        .ok_or_else(|| {
            Error::InvalidInput(format!("repetend of 1/{m} is too long to materialize"))
        })? as usize;
    let b = nat(base);
    let mut digits = Vec::with_capacity(period);
    let mut remainder = Natural::one();
    for _ in 0..period {
        remainder *= &b;
        let (digit, next) = remainder.div_rem(m);
        digits.push(digit.to_u64().expect("digit below the base"));
        remainder = next;
    }
    if !remainder.is_one() {
        return Err(Error::Inconsistency(format!(
            "long division of 1/{m} did not return to remainder 1 after {period} digits"
        )));
    }
    Ok(Expansion {
        modulus: m.clone(),
        base,
        period,
        repetend: DigitString::new(base, digits)?,
    })
}

/// The k-th expansion digit straight from residues:
/// `(n*[n^(k-1)]_m - [n^k]_m) / m`, always an exact integer in `[0, base)`.
pub fn digit_via_residues(m: &Natural, base: u64, k: u64) -> Result<u64> {
    ensure_expandable(m, base)?;
    if k == 0 {
        return Err(Error::InvalidInput("digit index starts at 1".into()));
    }
    let b = nat(base);
    let prev = numtheory::mod_pow(&b, &nat(k - 1), m)?;
    let cur = &prev * &b % m;
    let numerator = &prev * &b - &cur;
    let (digit, rem) = numerator.div_rem(m);
    if !rem.is_zero() {
        return Err(Error::Inconsistency(format!(
            "residue digit formula produced a non-integer at k={k} for m={m}"
        )));
    }
    digit.to_u64().ok_or_else(|| {
        Error::Inconsistency(format!("residue digit out of range at k={k} for m={m}"))
    })
}

/// The integer whose base-n digits are exactly the string.
pub fn string_value(s: &DigitString) -> Natural {
    let b = nat(s.base());
    let mut acc = Natural::zero();
    for &d in s.digits() {
        acc = acc * &b + nat(d);
    }
    acc
}

/// The value of the purely repeating expansion obtained by repeating the
/// string forever: `value / (base^len - 1)`, in lowest terms.
pub fn repeating_value(s: &DigitString) -> Result<ExactFraction> {
    let value = string_value(s);
    if value.is_zero() {
        return Err(Error::ZeroValueString);
    }
    let denominator = nat(s.base()).pow(s.len() as u32) - 1u32;
    ExactFraction::new(value, denominator)
}

/// Index of the first nonzero expansion digit of 1/m. Computed by scanning
/// digits and cross-checked against the exact integer form of
/// ceil(log_base m); the two must agree.
pub fn first_nonzero_index(m: &Natural, base: u64) -> Result<u64> {
    ensure_expandable(m, base)?;
    let b = nat(base);
    let mut remainder = Natural::one();
    let mut by_digits = 1u64;
    loop {
        let shifted = &remainder * &b;
        if shifted >= *m {
            break;
        }
        remainder = shifted;
        by_digits += 1;
    }
    // Smallest k with base^k >= m; never equal because m is coprime to base.
    let mut power = b.clone();
    let mut by_log = 1u64;
    while power < *m {
        power *= &b;
        by_log += 1;
    }
    if by_digits != by_log {
        return Err(Error::Inconsistency(format!(
            "first nonzero digit of 1/{m} at index {by_digits}, but ceil(log_{base} {m}) = {by_log}"
        )));
    }
    Ok(by_digits)
}

/// `(base^period - 1)/m`, the integer whose digits are the repetend.
/// Both routes are computed and must agree.
pub fn quotient_value(m: &Natural, base: u64) -> Result<Natural> {
    let expansion = expand(m, base)?;
    let power = nat(base).pow(expansion.period() as u32) - 1u32;
    let (quotient, rem) = power.div_rem(m);
    if !rem.is_zero() {
        return Err(Error::Inconsistency(format!(
            "{m} does not divide {base}^{} - 1",
            expansion.period()
        )));
    }
    let direct = string_value(expansion.repetend());
    if direct != quotient {
        return Err(Error::Inconsistency(format!(
            "repetend value of 1/{m} disagrees with (base^period - 1)/m"
        )));
    }
    Ok(quotient)
}

/// Smallest divisor d of the length such that the string is d-periodic as a
/// word. Equals the length exactly when the string is not a repetition of a
/// shorter block.
pub fn minimal_word_period(s: &DigitString) -> usize {
    let l = s.len();
    let d = s.digits();
    for cand in 1..l {
        if l % cand == 0 && (cand..l).all(|i| d[i] == d[i - cand]) {
            return cand;
        }
    }
    l
}

/// Left-pads `a` to `length` digits, then decides whether the padded string
/// repeats a shorter block. Two criteria are evaluated, a digit-pattern scan
/// and the divisibility test `((base^length - 1)/(base^d - 1)) | a` over
/// proper divisors d, and they must agree.
///
/// Returns `(periodic, minimal period)`.
pub fn is_periodic_padded(a: &Natural, length: usize, base: u64) -> Result<(bool, usize)> {
    ensure_base(base)?;
    if length == 0 {
        return Err(Error::InvalidInput(
            "target length must be at least 1".into(),
        ));
    }
    let padded = DigitString::from_natural_padded(a, base, length)?;
    let by_pattern = minimal_word_period(&padded);

    let b = nat(base);
    let full = b.pow(length as u32) - 1u32;
    let mut by_divisibility = length;
    for d in 1..length {
        if length % d != 0 {
            continue;
        }
        let block = b.pow(d as u32) - 1u32;
        let repunit = &full / &block;
        if (a % &repunit).is_zero() {
            by_divisibility = d;
            break;
        }
    }

    if by_pattern != by_divisibility {
        return Err(Error::Inconsistency(format!(
            "pattern period {by_pattern} != divisibility period {by_divisibility} \
             for a={a}, length={length}, base={base}"
        )));
    }
    Ok((by_divisibility < length, by_divisibility))
}
