//! Executable checks for every digit-symmetry statement the library rests
//! on, each swept over configurable ranges. A failing case is reported as a
//! named counterexample, never swallowed.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certify::{self, Scan, ScanConfig, ScanEvent};
use crate::error::Error;
use crate::expansion::{
    self, expand, is_periodic_padded, minimal_word_period, string_value, DigitString,
};
use crate::numtheory::{self, is_prime_u64};
use crate::reconstruction;
use crate::symmetry;
use crate::Natural;

const MAX_RECORDED_FAILURES: usize = 25;

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if a == 0 {
        b
    } else {
        gcd_u64(b % a, a)
    }
}

/// Outcome of one sweep: how many cases ran and which ones failed.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub key: String,
    pub label: String,
    pub cases: u64,
    pub failures: Vec<String>,
    suppressed: u64,
}

impl CheckReport {
    fn new(key: &str, label: &str) -> Self {
        CheckReport {
            key: key.into(),
            label: label.into(),
            cases: 0,
            failures: Vec::new(),
            suppressed: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.suppressed == 0
    }

    /// Failures beyond the recording cap are counted but not stored.
    pub fn suppressed_failures(&self) -> u64 {
        self.suppressed
    }

    fn fail(&mut self, message: String) {
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(message);
        } else {
            self.suppressed += 1;
        }
    }
}

fn coprime_moduli(max_m: u64, base: u64) -> impl Iterator<Item = u64> {
    (2..=max_m).filter(move |m| gcd_u64(*m, base) == 1)
}

/// The quotient identity: the repetend value of 1/m times m is exactly
/// base^period - 1, and repeating the repetend reproduces 1/m.
pub fn quotient_identity(max_m: u64, bases: &[u64]) -> CheckReport {
    let mut report = CheckReport::new(
        "quotient-identity",
        "value(repetend(1/m)) * m = base^period - 1, and the repetend repeats to 1/m",
    );
    for &base in bases {
        for m in coprime_moduli(max_m, base) {
            report.cases += 1;
            let m_nat = nat(m);
            let e = match expand(&m_nat, base) {
                Ok(e) => e,
                Err(err) => {
                    report.fail(format!("m={m} base={base}: expand failed: {err}"));
                    continue;
                }
            };
            let value = string_value(e.repetend());
            let power = nat(base).pow(e.period() as u32) - 1u32;
            if &value * &m_nat != power {
                report.fail(format!("m={m} base={base}: value*m != base^period - 1"));
            }
            match expansion::repeating_value(e.repetend()) {
                Ok(f) => {
                    if *f.numerator() != Natural::one() || *f.denominator() != m_nat {
                        report.fail(format!(
                            "m={m} base={base}: repeating value is {f}, not 1/{m}"
                        ));
                    }
                }
                Err(err) => report.fail(format!("m={m} base={base}: {err}")),
            }
        }
    }
    report
}

/// First nonzero digit index equals the exact integer form of
/// ceil(log_base m).
pub fn first_nonzero_index(max_m: u64, bases: &[u64]) -> CheckReport {
    let mut report = CheckReport::new(
        "first-nonzero-index",
        "index of the first nonzero digit of 1/m equals ceil(log_base m)",
    );
    // Full expansions get expensive; scan materialized digits only below
    // this bound and lean on the exact comparison alone above it.
    const DIGIT_SCAN_BOUND: u64 = 2000;
    for &base in bases {
        for m in coprime_moduli(max_m, base) {
            report.cases += 1;
            let got = match expansion::first_nonzero_index(&nat(m), base) {
                Ok(k) => k,
                Err(err) => {
                    report.fail(format!("m={m} base={base}: {err}"));
                    continue;
                }
            };
            // Independent route: smallest k with base^k >= m in plain u64
            // arithmetic.
            let mut k = 1u64;
            let mut power = base as u128;
            while power < m as u128 {
                power *= base as u128;
                k += 1;
            }
            if got != k {
                report.fail(format!("m={m} base={base}: got {got}, expected {k}"));
            }
            if m <= DIGIT_SCAN_BOUND {
                match expand(&nat(m), base) {
                    Ok(e) => {
                        let scanned = e
                            .repetend()
                            .digits()
                            .iter()
                            .position(|&d| d != 0)
                            .map(|i| i as u64 + 1);
                        if scanned != Some(got) {
                            report.fail(format!(
                                "m={m} base={base}: expansion digits put the first nonzero at {scanned:?}, not {got}"
                            ));
                        }
                    }
                    Err(err) => report.fail(format!("m={m} base={base}: {err}")),
                }
            }
        }
    }
    report
}

/// Rotating the repetend by t corresponds to the residue base^t mod m, and
/// the residues of one period are pairwise distinct.
pub fn shift_residue_correspondence(max_m: u64, bases: &[u64]) -> CheckReport {
    let mut report = CheckReport::new(
        "shift-residue-correspondence",
        "repeating value of the t-rotated repetend equals [base^t]_m / m for every t",
    );
    for &base in bases {
        for m in coprime_moduli(max_m, base) {
            let m_nat = nat(m);
            let e = match expand(&m_nat, base) {
                Ok(e) => e,
                Err(err) => {
                    report.cases += 1;
                    report.fail(format!("m={m} base={base}: expand failed: {err}"));
                    continue;
                }
            };
            let digits = e.repetend().digits();
            let l = e.period();
            let power = nat(base).pow(l as u32) - 1u32;
            let high_place = nat(base).pow(l as u32 - 1);
            let mut rotated_value = string_value(e.repetend());
            let mut residue = Natural::one();
            let mut seen = std::collections::BTreeSet::new();
            for t in 0..l {
                report.cases += 1;
                // value(sigma_t) / (base^l - 1) = residue_t / m, cross-multiplied.
                if &rotated_value * &m_nat != &residue * &power {
                    report.fail(format!(
                        "m={m} base={base} t={t}: rotated value does not match residue"
                    ));
                }
                seen.insert(residue.clone());
                let leading = nat(digits[t]);
                rotated_value = (rotated_value - &leading * &high_place) * nat(base) + leading;
                residue = residue * nat(base) % &m_nat;
            }
            report.cases += 1;
            if seen.len() != l {
                report.fail(format!(
                    "m={m} base={base}: only {} distinct residues over one period",
                    seen.len()
                ));
            }
            match symmetry::orbit_residues(&m_nat, base) {
                Ok(orbit) => {
                    if orbit != seen {
                        report.fail(format!(
                            "m={m} base={base}: orbit does not equal the period residues"
                        ));
                    }
                    if orbit.len() != l {
                        report.fail(format!(
                            "m={m} base={base}: orbit size {} != period {l}",
                            orbit.len()
                        ));
                    }
                }
                Err(err) => report.fail(format!("m={m} base={base}: {err}")),
            }
            // Exercise the public one-shot route on a few shifts.
            for t in [0u64, 1, (l / 2) as u64] {
                report.cases += 1;
                let direct = numtheory::mod_pow(&nat(base), &nat(t), &m_nat)
                    .and_then(|r| expansion::ExactFraction::new(r, m_nat.clone()));
                match (symmetry::shift_fraction(&m_nat, base, t), direct) {
                    (Ok(a), Ok(b)) => {
                        if a != b {
                            report
                                .fail(format!("m={m} base={base} t={t}: shift_fraction mismatch"));
                        }
                    }
                    (Err(err), _) | (_, Err(err)) => {
                        report.fail(format!("m={m} base={base} t={t}: {err}"))
                    }
                }
            }
        }
    }
    report
}

/// The residue formula reproduces every long-division digit, and the digit
/// congruence m*a_k = -[base^k]_m (mod base) holds.
pub fn digit_residue_formula(max_m: u64, bases: &[u64]) -> CheckReport {
    let mut report = CheckReport::new(
        "digit-residue-formula",
        "(base*[base^(k-1)]_m - [base^k]_m)/m reproduces digit k, with the matching congruence",
    );
    for &base in bases {
        for m in coprime_moduli(max_m, base) {
            let m_nat = nat(m);
            let e = match expand(&m_nat, base) {
                Ok(e) => e,
                Err(err) => {
                    report.cases += 1;
                    report.fail(format!("m={m} base={base}: expand failed: {err}"));
                    continue;
                }
            };
            let digits = e.repetend().digits();
            let l = e.period();
            let mut prev = 1u64; // [base^(k-1)]_m, m fits u64 here
            for k in 1..=l {
                report.cases += 1;
                let cur = ((prev as u128 * base as u128) % m as u128) as u64;
                let numerator = prev as u128 * base as u128 - cur as u128;
                if numerator % m as u128 != 0 {
                    report.fail(format!("m={m} base={base} k={k}: formula not integral"));
                    prev = cur;
                    continue;
                }
                let digit = (numerator / m as u128) as u64;
                if digit != digits[k - 1] {
                    report.fail(format!(
                        "m={m} base={base} k={k}: formula digit {digit} != division digit {}",
                        digits[k - 1]
                    ));
                }
                // m*a_k + [base^k]_m = 0 (mod base)
                if (m as u128 * digit as u128 + cur as u128) % base as u128 != 0 {
                    report.fail(format!("m={m} base={base} k={k}: digit congruence fails"));
                }
                prev = cur;
            }
            for k in [1u64, (l as u64 / 2).max(1), l as u64] {
                report.cases += 1;
                match expansion::digit_via_residues(&m_nat, base, k) {
                    Ok(d) => {
                        if d != digits[(k - 1) as usize] {
                            report.fail(format!(
                                "m={m} base={base} k={k}: digit_via_residues mismatch"
                            ));
                        }
                    }
                    Err(err) => report.fail(format!("m={m} base={base} k={k}: {err}")),
                }
            }
        }
    }
    report
}

/// For prime m with even order, digits half a period apart sum to base - 1.
pub fn complement_pairs(max_m: u64, bases: &[u64]) -> CheckReport {
    let mut report = CheckReport::new(
        "complement-pairs",
        "digits half a period apart sum to base - 1 for primes with even order",
    );
    for &base in bases {
        for m in coprime_moduli(max_m, base).filter(|&m| is_prime_u64(m)) {
            match symmetry::complement_pairs_check(&nat(m), base) {
                Ok(true) => report.cases += 1,
                Ok(false) => {
                    report.cases += 1;
                    report.fail(format!(
                        "m={m} base={base}: a complement pair misses base-1"
                    ));
                }
                Err(Error::NotApplicable(_)) => {}
                Err(err) => {
                    report.cases += 1;
                    report.fail(format!("m={m} base={base}: {err}"));
                }
            }
        }
    }
    report
}

/// The three run-length facts for binary repetends of primes with 2 a
/// primitive root.
pub fn binary_run_structure(max_m: u64) -> CheckReport {
    let mut report = CheckReport::new(
        "binary-run-structure",
        "run count = 2 (mod 4), half-symmetric run lengths, and decrement-by-2 partners",
    );
    for m in (5..=max_m).filter(|&m| is_prime_u64(m)) {
        match symmetry::base2_structure_report(&nat(m)) {
            Ok(r) => {
                report.cases += 1;
                if !r.run_count_mod_four_ok {
                    report.fail(format!(
                        "m={m}: run count {} is not 2 mod 4 (runs {})",
                        r.runs.run_count(),
                        r.runs
                    ));
                }
                if !r.half_symmetry_ok {
                    report.fail(format!(
                        "m={m}: run lengths are not half-symmetric ({})",
                        r.runs
                    ));
                }
                if !r.decrement_pairing_ok {
                    report.fail(format!(
                        "m={m}: an even-position run misses its length-2 decrement ({})",
                        r.runs
                    ));
                }
            }
            Err(Error::NotApplicable(_)) => {}
            Err(err) => {
                report.cases += 1;
                report.fail(format!("m={m}: {err}"));
            }
        }
    }
    report
}

/// The periodicity verdict on the padded Fermat quotient agrees with the
/// direct order test on every odd prime.
pub fn periodicity_order_agreement(max_m: u64, bases: &[u64]) -> CheckReport {
    let mut report = CheckReport::new(
        "periodicity-order-agreement",
        "Fermat-quotient periodicity matches the direct primitivity test on odd primes",
    );
    for &base in bases {
        for m in (3..=max_m).filter(|&m| m % 2 == 1 && is_prime_u64(m) && gcd_u64(m, base) == 1) {
            report.cases += 1;
            let m_nat = nat(m);
            match certify::is_primitive_root_by_expansion(&m_nat, base) {
                Ok(by_digits) => {
                    let by_order = numtheory::multiplicative_order(&nat(base), &m_nat)
                        .map(|o| o == &m_nat - 1u32);
                    match by_order {
                        Ok(by_order) => {
                            if by_digits != by_order {
                                report.fail(format!(
                                    "m={m} base={base}: verdicts disagree (digits {by_digits}, order {by_order})"
                                ));
                            }
                        }
                        Err(err) => report.fail(format!("m={m} base={base}: {err}")),
                    }
                }
                Err(err) => report.fail(format!("m={m} base={base}: {err}")),
            }
        }
    }
    report
}

/// String-mode reconstruction inverts expansion exactly, and integer-mode
/// reconstruction satisfies its defining identities.
pub fn reconstruction_round_trip(max_m: u64, bases: &[u64]) -> CheckReport {
    let mut report = CheckReport::new(
        "reconstruction-round-trip",
        "reconstruct(expand(1/m)) recovers m; integer mode satisfies a*m = base^l - 1",
    );
    for &base in bases {
        for m in coprime_moduli(max_m, base) {
            report.cases += 1;
            let m_nat = nat(m);
            let e = match expand(&m_nat, base) {
                Ok(e) => e,
                Err(err) => {
                    report.fail(format!("m={m} base={base}: expand failed: {err}"));
                    continue;
                }
            };
            match reconstruction::reconstruct_from_string(e.repetend()) {
                Ok(r) => {
                    if r.modulus() != &m_nat {
                        report.fail(format!(
                            "m={m} base={base}: string mode recovered {}",
                            r.modulus()
                        ));
                    }
                }
                Err(err) => report.fail(format!("m={m} base={base}: string mode: {err}")),
            }
            let a = string_value(e.repetend());
            match reconstruction::reconstruct_from_integer(&a, base) {
                Ok(r) => {
                    let l = r.length();
                    let power = nat(base).pow(l as u32) - 1u32;
                    if r.value() * r.modulus() != power {
                        report.fail(format!("m={m} base={base}: a*m != base^l - 1"));
                    }
                    let order = r.order_of_base_mod_m();
                    if !(nat(l as u64) % order).is_zero() {
                        report.fail(format!("m={m} base={base}: order does not divide l"));
                    }
                    let natural_len = DigitString::from_natural(&a, base)
                        .map(|s| s.len())
                        .unwrap_or(0);
                    if l < natural_len {
                        report.fail(format!("m={m} base={base}: padded below natural length"));
                    }
                    if minimal_word_period(r.padded_string()) == l && order != &nat(l as u64) {
                        report.fail(format!(
                            "m={m} base={base}: aperiodic padded string but order {order} != l {l}"
                        ));
                    }
                }
                Err(err) => report.fail(format!("m={m} base={base}: integer mode: {err}")),
            }
        }
    }
    report
}

/// The digit-pattern and divisibility periodicity criteria agree:
/// exhaustively in base 2 up to `base2_max_len`, and on seeded random
/// base-10 cases up to `base10_max_len` digits.
pub fn periodic_padded_dual(
    base2_max_len: usize,
    base10_cases: u64,
    base10_max_len: usize,
    seed: u64,
) -> CheckReport {
    let mut report = CheckReport::new(
        "periodic-padded-dual",
        "digit-pattern and divisibility periodicity criteria agree",
    );
    for length in 1..=base2_max_len {
        let limit = 1u64 << length;
        for a in 0..limit {
            report.cases += 1;
            if let Err(err) = is_periodic_padded(&nat(a), length, 2) {
                report.fail(format!("a={a} length={length} base=2: {err}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    use num_bigint::RandBigInt;
    for _ in 0..base10_cases {
        report.cases += 1;
        let length = rng.gen_range(1..=base10_max_len);
        let bound = nat(10).pow(length as u32);
        let a = rng.gen_biguint_below(&bound);
        if let Err(err) = is_periodic_padded(&a, length, 10) {
            report.fail(format!("a={a} length={length} base=10: {err}"));
        }
    }
    report
}

/// The two order strategies agree, and the order divides the Carmichael
/// exponent of the modulus.
pub fn order_strategy_agreement(max_m: u64, bases: &[u64]) -> CheckReport {
    let mut report = CheckReport::new(
        "order-strategy-agreement",
        "divisor-descent and incremental order computations agree and divide the group exponent",
    );
    for &base in bases {
        for m in coprime_moduli(max_m, base) {
            report.cases += 1;
            let m_nat = nat(m);
            let base_nat = nat(base);
            let fast = numtheory::multiplicative_order(&base_nat, &m_nat);
            let slow = numtheory::multiplicative_order_incremental(&base_nat, &m_nat);
            match (fast, slow) {
                (Ok(fast), Ok(slow)) => {
                    if fast != slow {
                        report.fail(format!(
                            "m={m} base={base}: strategies disagree ({fast} vs {slow})"
                        ));
                        continue;
                    }
                    match numtheory::carmichael_exponent(&m_nat) {
                        Ok(lambda) => {
                            if !(&lambda % &fast).is_zero() {
                                report.fail(format!(
                                    "m={m} base={base}: order {fast} does not divide lambda {lambda}"
                                ));
                            }
                        }
                        Err(err) => report.fail(format!("m={m} base={base}: {err}")),
                    }
                }
                (Err(err), _) | (_, Err(err)) => report.fail(format!("m={m} base={base}: {err}")),
            }
        }
    }
    report
}

/// Every certificate an exhaustive scan emits names a prime whose order is
/// independently re-derived by brute force.
pub fn scan_soundness(base: u64, max_length: u32, budget: Option<u64>) -> CheckReport {
    let mut report = CheckReport::new(
        &format!("scan-soundness-base-{base}"),
        "every emitted certificate passes an independent brute-force order check",
    );
    let mut config = ScanConfig::exhaustive(base, max_length);
    config.budget = budget;
    let mut scan = match Scan::new(config) {
        Ok(scan) => scan,
        Err(err) => {
            report.cases += 1;
            report.fail(format!("scan setup failed: {err}"));
            return report;
        }
    };
    for event in &mut scan {
        match event {
            Ok(ScanEvent::Certificate(cert)) => {
                if !cert.verified {
                    report.fail(format!(
                        "unverified certificate emitted for p={}",
                        cert.prime
                    ));
                    continue;
                }
                let brute = numtheory::multiplicative_order_incremental(&nat(base), &cert.prime);
                match brute {
                    Ok(order) => {
                        if order != &cert.prime - 1u32 {
                            report.fail(format!(
                                "certificate for p={} fails the brute-force order check",
                                cert.prime
                            ));
                        }
                    }
                    Err(err) => report.fail(format!("p={}: {err}", cert.prime)),
                }
            }
            Ok(ScanEvent::Truncated { .. }) => {}
            Err(err) => report.fail(format!("scan error: {err}")),
        }
    }
    report.cases = scan.examined();
    report
}

/// Largest length L with base^L not exceeding 2^14, clamped to [1, 14].
/// Keeps the default verification scans quick at any base.
fn default_scan_length(base: u64) -> u32 {
    let mut length = 0u32;
    let mut power = 1u128;
    while power * base as u128 <= (1 << 14) && length < 14 {
        power *= base as u128;
        length += 1;
    }
    length.max(1)
}

/// Runs the whole suite over `m <= max_m` and the given bases, with fixed
/// desk-scale settings for the sweeps that do not take a modulus range.
pub fn run_all(max_m: u64, bases: &[u64]) -> Vec<CheckReport> {
    let mut reports = vec![
        quotient_identity(max_m, bases),
        first_nonzero_index(max_m, bases),
        shift_residue_correspondence(max_m, bases),
        digit_residue_formula(max_m, bases),
        complement_pairs(max_m, bases),
        binary_run_structure(max_m),
        periodicity_order_agreement(max_m, bases),
        reconstruction_round_trip(max_m, bases),
        periodic_padded_dual(10, 2_000, 6, numtheory::DEFAULT_SEED),
        order_strategy_agreement(max_m, bases),
    ];
    for &base in bases {
        reports.push(scan_soundness(base, default_scan_length(base), None));
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_scan_lengths() {
        assert_eq!(default_scan_length(2), 14);
        assert_eq!(default_scan_length(3), 8);
        assert_eq!(default_scan_length(10), 4);
        assert_eq!(default_scan_length(20_000), 1);
    }

    #[test]
    fn quick_suite_passes() {
        for report in run_all(60, &[2, 10]) {
            assert!(
                report.passed(),
                "{} failed: {:?}",
                report.key,
                report.failures
            );
            assert!(report.cases > 0, "{} ran no cases", report.key);
        }
    }
}
