//! Cyclic-shift/residue correspondence, half-period digit complements, and
//! the run-length structure of binary repetends.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::expansion::{expand, repeating_value, DigitString, ExactFraction};
use crate::numtheory::{self, is_prime};
use crate::Natural;

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

/// Rotation by `t` positions: `(d_{t+1},...,d_l,d_1,...,d_t)`, with `t`
/// taken modulo the length.
pub fn cyclic_shift(s: &DigitString, t: u64) -> DigitString {
    let l = s.len();
    let t = (t % l as u64) as usize;
    let mut digits = Vec::with_capacity(l);
    digits.extend_from_slice(&s.digits()[t..]);
    digits.extend_from_slice(&s.digits()[..t]);
    DigitString::new(s.base(), digits).expect("rotation preserves validity")
}

/// The fraction whose expansion is the repetend of 1/m rotated by `t`:
/// `[base^t]_m / m` in lowest terms. The rotated-digit route is evaluated
/// too and the two must agree.
pub fn shift_fraction(m: &Natural, base: u64, t: u64) -> Result<ExactFraction> {
    let expansion = expand(m, base)?;
    let residue = numtheory::mod_pow(&nat(base), &nat(t), m)?;
    let direct = ExactFraction::new(residue, m.clone())?;
    let rotated = cyclic_shift(expansion.repetend(), t);
    let via_digits = repeating_value(&rotated)?;
    if direct != via_digits {
        return Err(Error::Inconsistency(format!(
            "shift by {t} of the repetend of 1/{m} does not match [base^{t}]_m/{m}"
        )));
    }
    Ok(direct)
}

/// The residues `[base^t]_m` for `0 <= t < order`: the cyclic subgroup
/// generated by the base in the units modulo m.
pub fn orbit_residues(m: &Natural, base: u64) -> Result<BTreeSet<Natural>> {
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
    let mut orbit = BTreeSet::new();
    let mut cur = Natural::one();
    loop {
        orbit.insert(cur.clone());
        cur = cur * &b % m;
        if cur.is_one() {
            break;
        }
    }
    Ok(orbit)
}

/// For prime m with even order: do digits half a period apart always sum to
/// base - 1?
pub fn complement_pairs_check(m: &Natural, base: u64) -> Result<bool> {
    if !is_prime(m) {
        return Err(Error::Precondition(format!(
            "complement pairing is stated for prime moduli; {m} is not prime"
        )));
    }
    let expansion = expand(m, base)?;
    let order = expansion.period();
    if order % 2 != 0 {
        return Err(Error::NotApplicable(format!(
            "order of {base} modulo {m} is {order}, which is odd"
        )));
    }
    let half = order / 2;
    let digits = expansion.repetend().digits();
    Ok((0..half).all(|i| digits[i] as u128 + digits[i + half] as u128 == base as u128 - 1))
}

/// One maximal run of a repeated symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub symbol: u64,
    pub length: usize,
}

/// Maximal-run decomposition of a digit string, in order. Adjacent runs
/// carry distinct symbols and the lengths sum to the string length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunLengthForm {
    runs: Vec<Run>,
}

impl RunLengthForm {
    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn run_count(&self) -> usize {
        self.runs.len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.runs.iter().map(|r| r.length).collect()
    }

    pub fn total_length(&self) -> usize {
        self.runs.iter().map(|r| r.length).sum()
    }
}

impl fmt::Display for RunLengthForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for run in &self.runs {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}^{}", run.symbol, run.length)?;
        }
        Ok(())
    }
}

/// Maximal-run decomposition. Base-agnostic; the structural checks below
/// only apply in base 2.
pub fn run_length_encode(s: &DigitString) -> RunLengthForm {
    let mut runs: Vec<Run> = Vec::new();
    for &d in s.digits() {
        match runs.last_mut() {
            Some(run) if run.symbol == d => run.length += 1,
            _ => runs.push(Run {
                symbol: d,
                length: 1,
            }),
        }
    }
    RunLengthForm { runs }
}

/// Structural facts about the binary repetend of 1/m when 2 generates the
/// units modulo the prime m. One boolean per claim, so a failure names
/// itself.
#[derive(Clone, Debug)]
pub struct Base2StructureReport {
    pub modulus: Natural,
    pub period: usize,
    pub runs: RunLengthForm,
    /// run count = 2 (mod 4)
    pub run_count_mod_four_ok: bool,
    /// lengths repeat half a turn later: t_i = t_{i + r/2}
    pub half_symmetry_ok: bool,
    /// every even-position run longer than 2 has an even-position run
    /// exactly 2 shorter
    pub decrement_pairing_ok: bool,
}

impl Base2StructureReport {
    pub fn all_checks_pass(&self) -> bool {
        self.run_count_mod_four_ok && self.half_symmetry_ok && self.decrement_pairing_ok
    }
}

/// Runs the three base-2 run-length checks for a prime m > 3 with 2 a
/// primitive root (checked internally).
pub fn base2_structure_report(m: &Natural) -> Result<Base2StructureReport> {
    if *m <= nat(3) {
        return Err(Error::Precondition(format!(
            "binary run structure is stated for primes above 3, got {m}"
        )));
    }
    if !is_prime(m) {
        return Err(Error::Precondition(format!("{m} is not prime")));
    }
    let order = numtheory::multiplicative_order(&nat(2), m)?;
    if order != m - 1u32 {
        return Err(Error::NotApplicable(format!(
            "2 is not a primitive root modulo {m} (order {order})"
        )));
    }
    let expansion = expand(m, 2)?;
    let runs = run_length_encode(expansion.repetend());
    let lengths = runs.lengths();
    let r = lengths.len();

    let run_count_mod_four_ok = r % 4 == 2;
    let half_symmetry_ok = r % 2 == 0 && (0..r / 2).all(|i| lengths[i] == lengths[i + r / 2]);
    // The repetend opens with a zero run, so 1-based even positions hold
    // the one-runs.
    let even_position_lengths: Vec<usize> = lengths
        .iter()
        .copied()
        .enumerate()
        .filter(|(i, _)| (i + 1) % 2 == 0)
        .map(|(_, len)| len)
        .collect();
    let decrement_pairing_ok = even_position_lengths
        .iter()
        .filter(|&&len| len > 2)
        .all(|&len| even_position_lengths.contains(&(len - 2)));

    Ok(Base2StructureReport {
        modulus: m.clone(),
        period: expansion.period(),
        runs,
        run_count_mod_four_ok,
        half_symmetry_ok,
        decrement_pairing_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(base: u64, digits: &[u64]) -> DigitString {
        DigitString::new(base, digits.to_vec()).unwrap()
    }

    #[test]
    fn cyclic_shift_examples() {
        let s = ds(10, &[1, 4, 2, 8, 5, 7]);
        assert_eq!(cyclic_shift(&s, 2).digits(), &[2, 8, 5, 7, 1, 4]);
        assert_eq!(cyclic_shift(&s, 0), s);
        assert_eq!(cyclic_shift(&s, 6), s);
        assert_eq!(cyclic_shift(&s, 8).digits(), &[2, 8, 5, 7, 1, 4]);
    }

    #[test]
    fn shift_fraction_examples() {
        let f = shift_fraction(&nat(7), 10, 2).unwrap();
        assert_eq!((f.numerator(), f.denominator()), (&nat(2), &nat(7)));

        let f = shift_fraction(&nat(7), 10, 0).unwrap();
        assert_eq!((f.numerator(), f.denominator()), (&nat(1), &nat(7)));

        let f = shift_fraction(&nat(11), 2, 5).unwrap();
        assert_eq!((f.numerator(), f.denominator()), (&nat(10), &nat(11)));
    }

    #[test]
    fn orbit_examples() {
        let orbit = orbit_residues(&nat(7), 10).unwrap();
        let expected: BTreeSet<Natural> = [1u64, 3, 2, 6, 4, 5].into_iter().map(nat).collect();
        assert_eq!(orbit, expected);

        let orbit = orbit_residues(&nat(11), 10).unwrap();
        let expected: BTreeSet<Natural> = [1u64, 10].into_iter().map(nat).collect();
        assert_eq!(orbit, expected);

        let orbit = orbit_residues(&nat(3), 10).unwrap();
        let expected: BTreeSet<Natural> = [1u64].into_iter().map(nat).collect();
        assert_eq!(orbit, expected);
    }

    #[test]
    fn complement_examples() {
        assert!(complement_pairs_check(&nat(7), 10).unwrap());
        assert!(complement_pairs_check(&nat(11), 10).unwrap());
        assert!(matches!(
            complement_pairs_check(&nat(13), 3),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            complement_pairs_check(&nat(9), 10),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn run_length_examples() {
        let runs = run_length_encode(&ds(2, &[0, 0, 0, 1, 0, 1, 1, 1, 0, 1]));
        let expected = [(0u64, 3usize), (1, 1), (0, 1), (1, 3), (0, 1), (1, 1)];
        assert_eq!(
            runs.runs()
                .iter()
                .map(|r| (r.symbol, r.length))
                .collect::<Vec<_>>(),
            expected
        );
        assert_eq!(runs.total_length(), 10);

        let runs = run_length_encode(&ds(2, &[1, 1]));
        assert_eq!(
            runs.runs(),
            &[Run {
                symbol: 1,
                length: 2
            }]
        );

        let runs = run_length_encode(&ds(2, &[0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1, 1]));
        let expected = [(0u64, 3usize), (1, 1), (0, 2), (1, 3), (0, 1), (1, 2)];
        assert_eq!(
            runs.runs()
                .iter()
                .map(|r| (r.symbol, r.length))
                .collect::<Vec<_>>(),
            expected
        );
    }

    #[test]
    fn structure_report_examples() {
        let report = base2_structure_report(&nat(11)).unwrap();
        assert_eq!(report.runs.lengths(), vec![3, 1, 1, 3, 1, 1]);
        assert!(report.run_count_mod_four_ok);
        assert!(report.half_symmetry_ok);
        assert!(report.decrement_pairing_ok);
        assert!(report.all_checks_pass());

        let report = base2_structure_report(&nat(13)).unwrap();
        assert_eq!(report.runs.lengths(), vec![3, 1, 2, 3, 1, 2]);
        assert!(report.all_checks_pass());

        assert!(matches!(
            base2_structure_report(&nat(7)),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            base2_structure_report(&nat(3)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            base2_structure_report(&nat(15)),
            Err(Error::Precondition(_))
        ));
    }
}
