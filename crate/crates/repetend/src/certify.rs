//! Primitive-root certification.
//!
//! Two routes are provided. [`is_primitive_root_by_expansion`] decides
//! primitivity of a base modulo an odd prime from the periodicity of the
//! Fermat quotient's padded digits, cross-checked against the direct order
//! computation. [`certify_value`] runs the reconstruction of a candidate
//! string value and, for each prime p dividing the recovered modulus with
//! p - 1 dividing the padded length, emits a certificate recording the
//! divisor conditions in both their stated and reduced forms together with
//! a direct verification that the base has order p - 1 modulo p.
//!
//! [`Scan`] drives the certifier over a stream of candidate values and
//! yields the verified certificates, one per distinct prime.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::expansion::{is_periodic_padded, DigitString};
use crate::numtheory::{self, is_prime, Factorization, DEFAULT_FACTOR_BUDGET, DEFAULT_SEED};
use crate::reconstruction::{reconstruct_from_integer_with, ReconstructionResult};
use crate::Natural;

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

/// Knobs for the factorizations performed while certifying.
#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    pub factor_budget: u64,
    pub factor_seed: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            factor_budget: DEFAULT_FACTOR_BUDGET,
            factor_seed: DEFAULT_SEED,
        }
    }
}

/// `(base^(m-1) - 1)/m` for an odd prime m, an exact integer by Fermat's
/// little theorem.
pub fn fermat_quotient(m: &Natural, base: u64) -> Result<Natural> {
    if base < 2 {
        return Err(Error::InvalidInput(format!(
            "base must be at least 2, got {base}"
        )));
    }
    if m.is_even() || !is_prime(m) {
        return Err(Error::Precondition(format!("{m} is not an odd prime")));
    }
    let b = nat(base);
    if !m.gcd(&b).is_one() {
        return Err(Error::NotCoprime {
            left: m.clone(),
            right: b,
        });
    }
    let exponent = (m - 1u32)
        .to_u32()
        .ok_or_else(|| Error::InvalidInput(format!("{m} is too large for this computation")))?;
    let power = b.pow(exponent) - 1u32;
    let (quotient, rem) = power.div_rem(m);
    if !rem.is_zero() {
        return Err(Error::Inconsistency(format!(
            "{m} does not divide {base}^{exponent} - 1"
        )));
    }
    Ok(quotient)
}

/// Is `base` a primitive root modulo the odd prime m? Decided from the
/// digit string of the Fermat quotient padded to m - 1 digits: primitive
/// exactly when that string repeats no shorter block. The verdict is
/// cross-validated against the order computation; disagreement is an
/// internal error.
pub fn is_primitive_root_by_expansion(m: &Natural, base: u64) -> Result<bool> {
    let quotient = fermat_quotient(m, base)?;
    let length = (m - 1u32)
        .to_usize()
        .ok_or_else(|| Error::InvalidInput(format!("{m} is too large for this computation")))?;
    let (periodic, _) = is_periodic_padded(&quotient, length, base)?;
    let by_digits = !periodic;
    let by_order = numtheory::multiplicative_order(&nat(base), m)? == m - 1u32;
    if by_digits != by_order {
        return Err(Error::Inconsistency(format!(
            "periodicity verdict and order computation disagree for m={m}, base={base}"
        )));
    }
    Ok(by_digits)
}

/// A record tying a candidate string value to a prime it certifies.
///
/// `verified` is the ground truth, checked directly; the two
/// `order_condition_*` fields record the sufficient condition in its stated
/// form (every other prime q dividing m has order dividing the order of p)
/// and in its reduced form (the order modulo m equals the order modulo p^e
/// once prime powers the base is congruent to 1 against are dropped).
#[derive(Clone, Debug)]
pub struct PrimitivityCertificate {
    pub base: u64,
    /// The candidate string value a.
    pub value: Natural,
    /// The padded digit string of a.
    pub string: DigitString,
    /// The padded length l.
    pub length: usize,
    /// The recovered modulus m = (base^l - 1)/a.
    pub modulus: Natural,
    pub modulus_factorization: Factorization,
    /// Factorization of a itself, kept for auditing which primes enter via
    /// the a-side. Omitted when a is too wide to factor cheaply.
    pub value_factorization: Option<Factorization>,
    /// The certified prime p.
    pub prime: Natural,
    /// The exponent e with p^e exactly dividing m.
    pub prime_exponent: u32,
    /// (p - 1) divides l, with p dividing m.
    pub length_condition: bool,
    pub order_condition_stated: bool,
    pub order_condition_reduced: bool,
    /// Direct check: the order of the base modulo p equals p - 1.
    pub verified: bool,
}

/// Why a candidate produced no certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// Reconstruction collapsed to m <= 1.
    Collapsed { modulus: Natural },
    /// The padded string repeats a shorter block.
    WordPeriodic { word_period: usize },
    /// No prime p | m satisfies (p - 1) | l.
    NoQualifyingPrime { modulus: Natural },
}

impl Rejection {
    pub fn reason(&self) -> &'static str {
        match self {
            Rejection::Collapsed { .. } => "collapsed",
            Rejection::WordPeriodic { .. } => "word-periodic",
            Rejection::NoQualifyingPrime { .. } => "no-qualifying-prime",
        }
    }
}

/// Result of certifying one candidate value.
#[derive(Clone, Debug)]
pub enum CertifyOutcome {
    /// One certificate per qualifying prime, verified or not.
    Certified(Vec<PrimitivityCertificate>),
    Rejected(Rejection),
}

/// Runs the reconstruction of `a` and certifies every prime p dividing the
/// recovered modulus with (p - 1) dividing the padded length.
pub fn certify_value(a: &Natural, base: u64) -> Result<CertifyOutcome> {
    certify_value_with(a, base, &CertifyOptions::default())
}

/// [`certify_value`] with explicit factorization options.
pub fn certify_value_with(
    a: &Natural,
    base: u64,
    options: &CertifyOptions,
) -> Result<CertifyOutcome> {
    let reconstruction =
        reconstruct_from_integer_with(a, base, options.factor_budget, options.factor_seed)?;
    certify_reconstruction(&reconstruction, options)
}

fn certify_reconstruction(
    reconstruction: &ReconstructionResult,
    options: &CertifyOptions,
) -> Result<CertifyOutcome> {
    let base = reconstruction.base();
    let a = reconstruction.value();
    if reconstruction.collapsed() {
        return Ok(CertifyOutcome::Rejected(Rejection::Collapsed {
            modulus: reconstruction.modulus().clone(),
        }));
    }
    let padded = reconstruction.padded_string();
    let length = reconstruction.length();
    let word_period = crate::expansion::minimal_word_period(padded);
    if word_period < length {
        return Ok(CertifyOutcome::Rejected(Rejection::WordPeriodic {
            word_period,
        }));
    }
    let modulus = reconstruction.modulus();
    let modulus_factorization =
        numtheory::factorize_seeded(modulus, options.factor_budget, options.factor_seed)?;
    let length_nat = nat(length as u64);
    let qualifying: Vec<(Natural, u32)> = modulus_factorization
        .pairs()
        .iter()
        .filter(|(p, _)| (&length_nat % (p - 1u32)).is_zero())
        .cloned()
        .collect();
    if qualifying.is_empty() {
        return Ok(CertifyOutcome::Rejected(Rejection::NoQualifyingPrime {
            modulus: modulus.clone(),
        }));
    }
    let value_factorization = if a.bits() <= 64 {
        numtheory::factorize_seeded(a, options.factor_budget, options.factor_seed).ok()
    } else {
        None
    };
    let base_nat = nat(base);
    let mut certificates = Vec::with_capacity(qualifying.len());
    for (p, e) in qualifying {
        let order_mod_p = numtheory::multiplicative_order_with(
            &base_nat,
            &p,
            options.factor_budget,
            options.factor_seed,
        )?;
        let order_condition_stated = {
            let mut ok = true;
            for q in modulus_factorization.primes() {
                if *q == p {
                    continue;
                }
                let order_mod_q = numtheory::multiplicative_order_with(
                    &base_nat,
                    q,
                    options.factor_budget,
                    options.factor_seed,
                )?;
                if !(&order_mod_p % &order_mod_q).is_zero() {
                    ok = false;
                    break;
                }
            }
            ok
        };
        let order_condition_reduced = {
            let prime_power = p.pow(e);
            let mut reduced_modulus = prime_power.clone();
            for (q, qe) in modulus_factorization.pairs() {
                if *q == p {
                    continue;
                }
                let q_power = q.pow(*qe);
                // Drop components the base is congruent to 1 against.
                if (&base_nat % &q_power).is_one() {
                    continue;
                }
                reduced_modulus *= &q_power;
            }
            let order_reduced = numtheory::multiplicative_order_with(
                &base_nat,
                &reduced_modulus,
                options.factor_budget,
                options.factor_seed,
            )?;
            let order_prime_power = numtheory::multiplicative_order_with(
                &base_nat,
                &prime_power,
                options.factor_budget,
                options.factor_seed,
            )?;
            order_reduced == order_prime_power
        };
        let verified = order_mod_p == &p - 1u32;
        certificates.push(PrimitivityCertificate {
            base,
            value: a.clone(),
            string: padded.clone(),
            length,
            modulus: modulus.clone(),
            modulus_factorization: modulus_factorization.clone(),
            value_factorization: value_factorization.clone(),
            prime: p,
            prime_exponent: e,
            length_condition: true,
            order_condition_stated,
            order_condition_reduced,
            verified,
        });
    }
    Ok(CertifyOutcome::Certified(certificates))
}

/// How a scan enumerates candidate values.
#[derive(Clone, Debug)]
pub enum ScanMode {
    /// Every a < base^L with last digit coprime to the base, ascending.
    Exhaustive,
    /// Seeded uniform draws from the same domain.
    Random { seed: u64, draws: u64 },
}

/// Default number of draws for a random-mode scan.
pub const DEFAULT_RANDOM_DRAWS: u64 = 10_000;

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub base: u64,
    /// Maximum string length L; only candidates whose order is at most L
    /// are certified.
    pub max_length: u32,
    pub mode: ScanMode,
    /// Maximum number of candidates examined; `None` runs the enumeration
    /// to completion.
    pub budget: Option<u64>,
    /// Candidate evaluation fans out over this many threads. Output order
    /// does not depend on it.
    pub workers: usize,
    pub options: CertifyOptions,
}

impl ScanConfig {
    pub fn exhaustive(base: u64, max_length: u32) -> Self {
        ScanConfig {
            base,
            max_length,
            mode: ScanMode::Exhaustive,
            budget: None,
            workers: 1,
            options: CertifyOptions::default(),
        }
    }
}

/// One item of a scan's output stream.
#[derive(Clone, Debug)]
pub enum ScanEvent {
    Certificate(PrimitivityCertificate),
    /// The candidate budget ran out before the enumeration finished.
    Truncated {
        examined: u64,
    },
}

enum CandidateGen {
    Exhaustive {
        next: Natural,
        limit: Natural,
    },
    Random {
        rng: ChaCha8Rng,
        limit: Natural,
        remaining: u64,
    },
}

impl CandidateGen {
    fn next_candidate(&mut self, base: u64) -> Option<Natural> {
        let base_nat = nat(base);
        match self {
            CandidateGen::Exhaustive { next, limit } => loop {
                if *next >= *limit {
                    return None;
                }
                let candidate = next.clone();
                *next += 1u32;
                if candidate.gcd(&base_nat).is_one() {
                    return Some(candidate);
                }
            },
            CandidateGen::Random {
                rng,
                limit,
                remaining,
            } => {
                use num_bigint::RandBigInt;
                if *remaining == 0 {
                    return None;
                }
                *remaining -= 1;
                loop {
                    let candidate = rng.gen_biguint_below(limit);
                    if !candidate.is_zero() && candidate.gcd(&base_nat).is_one() {
                        return Some(candidate);
                    }
                }
            }
        }
    }
}

/// Streaming scan over candidate string values. Yields only verified
/// certificates, the first one per distinct prime, in the canonical
/// enumeration order of the candidates.
pub struct Scan {
    config: ScanConfig,
    generator: CandidateGen,
    seen_primes: BTreeSet<Natural>,
    queue: VecDeque<Result<ScanEvent>>,
    examined: u64,
    emitted: u64,
    truncated: bool,
    finished: bool,
    advisory: Option<String>,
}

impl Scan {
    pub fn new(config: ScanConfig) -> Result<Self> {
        if config.base < 2 {
            return Err(Error::InvalidInput(format!(
                "base must be at least 2, got {}",
                config.base
            )));
        }
        if config.max_length == 0 {
            return Err(Error::InvalidInput(
                "maximum string length must be at least 1".into(),
            ));
        }
        if config.workers == 0 {
            return Err(Error::InvalidInput(
                "worker count must be at least 1".into(),
            ));
        }
        let limit = nat(config.base).pow(config.max_length);
        let generator = match &config.mode {
            ScanMode::Exhaustive => CandidateGen::Exhaustive {
                next: Natural::one(),
                limit,
            },
            ScanMode::Random { seed, draws } => CandidateGen::Random {
                rng: ChaCha8Rng::seed_from_u64(*seed),
                limit,
                remaining: *draws,
            },
        };
        let advisory = perfect_square_root(config.base).map(|r| {
            format!(
                "base {} is a perfect square ({r}^2); no certificates are expected",
                config.base
            )
        });
        Ok(Scan {
            config,
            generator,
            seen_primes: BTreeSet::new(),
            queue: VecDeque::new(),
            examined: 0,
            emitted: 0,
            truncated: false,
            finished: false,
            advisory,
        })
    }

    /// Candidates examined so far.
    pub fn examined(&self) -> u64 {
        self.examined
    }

    /// Certificates emitted so far.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// True once the candidate budget stopped the enumeration early.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// A note set up front for degenerate configurations.
    pub fn advisory(&self) -> Option<&str> {
        self.advisory.as_deref()
    }

    fn refill(&mut self) {
        let batch_target = self.config.workers.max(1) * 32;
        let mut batch: Vec<Natural> = Vec::with_capacity(batch_target);
        let mut exhausted = false;
        while batch.len() < batch_target {
            if let Some(budget) = self.config.budget {
                if self.examined >= budget {
                    self.truncated = true;
                    break;
                }
            }
            match self.generator.next_candidate(self.config.base) {
                Some(candidate) => {
                    self.examined += 1;
                    batch.push(candidate);
                }
                None => {
                    exhausted = true;
                    break;
                }
            }
        }
        // A budget stop only counts as truncation if candidates remained.
        if self.truncated {
            match self.generator.next_candidate(self.config.base) {
                Some(_) => {}
                None => self.truncated = false,
            }
        }

        let results = evaluate_batch(&batch, &self.config);
        for outcome in results {
            match outcome {
                Ok(certs) => {
                    for cert in certs {
                        if self.seen_primes.insert(cert.prime.clone()) {
                            self.emitted += 1;
                            self.queue.push_back(Ok(ScanEvent::Certificate(cert)));
                        }
                    }
                }
                Err(e) => {
                    self.queue.push_back(Err(e));
                    self.finished = true;
                    return;
                }
            }
        }
        if self.truncated {
            self.queue.push_back(Ok(ScanEvent::Truncated {
                examined: self.examined,
            }));
            self.finished = true;
        } else if exhausted {
            self.finished = true;
        }
    }
}

impl Iterator for Scan {
    type Item = Result<ScanEvent>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(event) = self.queue.pop_front() {
                return Some(event);
            }
            if self.finished {
                return None;
            }
            self.refill();
        }
    }
}

fn evaluate_batch(
    batch: &[Natural],
    config: &ScanConfig,
) -> Vec<Result<Vec<PrimitivityCertificate>>> {
    if batch.is_empty() {
        return Vec::new();
    }
    if config.workers <= 1 || batch.len() == 1 {
        return batch
            .iter()
            .map(|a| evaluate_candidate(a, config))
            .collect();
    }
    let chunk = batch.len().div_ceil(config.workers);
    let mut results: Vec<Option<Result<Vec<PrimitivityCertificate>>>> = vec![None; batch.len()];
    std::thread::scope(|scope| {
        for (items, slots) in batch.chunks(chunk).zip(results.chunks_mut(chunk)) {
            scope.spawn(move || {
                for (a, slot) in items.iter().zip(slots.iter_mut()) {
                    *slot = Some(evaluate_candidate(a, config));
                }
            });
        }
    });
    results
        .into_iter()
        .map(|r| r.expect("every batch slot is filled"))
        .collect()
}

/// Full pipeline for one candidate: cheap bounded-order filter, then
/// certification; only verified certificates are kept.
fn evaluate_candidate(a: &Natural, config: &ScanConfig) -> Result<Vec<PrimitivityCertificate>> {
    let order = match numtheory::order_at_most(config.base, a, config.max_length as u64) {
        Some(order) => order,
        None => return Ok(Vec::new()),
    };
    match certify_value_with(a, config.base, &config.options)? {
        CertifyOutcome::Certified(certs) => {
            debug_assert!(certs.iter().all(|c| c.length as u64 == order));
            Ok(certs.into_iter().filter(|c| c.verified).collect())
        }
        CertifyOutcome::Rejected(_) => Ok(Vec::new()),
    }
}

fn perfect_square_root(base: u64) -> Option<u64> {
    let r = (base as f64).sqrt().round() as u64;
    for candidate in r.saturating_sub(1)..=r.saturating_add(1) {
        if candidate as u128 * candidate as u128 == base as u128 {
            return Some(candidate);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_quotient_examples() {
        assert_eq!(fermat_quotient(&nat(7), 10).unwrap(), nat(142_857));
        assert_eq!(fermat_quotient(&nat(11), 10).unwrap(), nat(909_090_909));
        assert_eq!(fermat_quotient(&nat(3), 2).unwrap(), nat(1));
        assert!(matches!(
            fermat_quotient(&nat(9), 10),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            fermat_quotient(&nat(2), 10),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            fermat_quotient(&nat(7), 14),
            Err(Error::NotCoprime { .. })
        ));
    }

    #[test]
    fn primitivity_by_expansion_examples() {
        assert!(is_primitive_root_by_expansion(&nat(7), 10).unwrap());
        assert!(!is_primitive_root_by_expansion(&nat(11), 10).unwrap());
        assert!(is_primitive_root_by_expansion(&nat(11), 2).unwrap());
        assert!(matches!(
            is_primitive_root_by_expansion(&nat(15), 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn certify_cyclic_number() {
        let outcome = certify_value(&nat(142_857), 10).unwrap();
        let certs = match outcome {
            CertifyOutcome::Certified(c) => c,
            other => panic!("expected certificates, got {other:?}"),
        };
        // m = 7 is prime, so p = 7 is the only qualifying prime.
        assert_eq!(certs.len(), 1);
        let cert = &certs[0];
        assert_eq!(cert.modulus, nat(7));
        assert_eq!(cert.prime, nat(7));
        assert_eq!(cert.prime_exponent, 1);
        assert_eq!(cert.length, 6);
        assert!(cert.length_condition);
        assert!(cert.order_condition_stated);
        assert!(cert.order_condition_reduced);
        assert!(cert.verified);
    }

    #[test]
    fn certify_composite_modulus() {
        // 47619 * 21 = 999999; m = 21 = 3 * 7.
        let outcome = certify_value(&nat(47_619), 10).unwrap();
        let certs = match outcome {
            CertifyOutcome::Certified(c) => c,
            other => panic!("expected certificates, got {other:?}"),
        };
        // Both p = 3 (2 | 6) and p = 7 (6 | 6) qualify; only p = 7 verifies.
        assert_eq!(certs.len(), 2);
        let p3 = certs.iter().find(|c| c.prime == nat(3)).unwrap();
        assert!(!p3.verified);
        let p7 = certs.iter().find(|c| c.prime == nat(7)).unwrap();
        assert_eq!(p7.modulus, nat(21));
        assert!(p7.order_condition_stated);
        assert!(p7.order_condition_reduced);
        assert!(p7.verified);
    }

    #[test]
    fn certify_rejections() {
        // 21 = 10101 in base 2, padded to 010101: word-periodic.
        match certify_value(&nat(21), 2).unwrap() {
            CertifyOutcome::Rejected(Rejection::WordPeriodic { word_period }) => {
                assert_eq!(word_period, 2)
            }
            other => panic!("expected word-periodic rejection, got {other:?}"),
        }
        // 9 in base 10 collapses to m = 1.
        match certify_value(&nat(9), 10).unwrap() {
            CertifyOutcome::Rejected(Rejection::Collapsed { modulus }) => {
                assert_eq!(modulus, nat(1))
            }
            other => panic!("expected collapse, got {other:?}"),
        }
        // 3 in base 10: l = 1, m = 3, and p = 3 needs 2 | 1.
        match certify_value(&nat(3), 10).unwrap() {
            CertifyOutcome::Rejected(Rejection::NoQualifyingPrime { modulus }) => {
                assert_eq!(modulus, nat(3))
            }
            other => panic!("expected no qualifying prime, got {other:?}"),
        }
    }

    #[test]
    fn certify_binary_anchor() {
        let outcome = certify_value(&nat(93), 2).unwrap();
        let certs = match outcome {
            CertifyOutcome::Certified(c) => c,
            other => panic!("expected certificates, got {other:?}"),
        };
        assert_eq!(certs.len(), 1);
        let cert = &certs[0];
        assert_eq!(cert.prime, nat(11));
        assert_eq!(cert.length, 10);
        assert!(cert.verified);
        assert!(cert.order_condition_stated);
        assert!(cert.order_condition_reduced);
    }

    fn collect_certificates(scan: Scan) -> (Vec<(Natural, Natural)>, bool) {
        let mut out = Vec::new();
        let mut truncated = false;
        for event in scan {
            match event.unwrap() {
                ScanEvent::Certificate(c) => out.push((c.value.clone(), c.prime.clone())),
                ScanEvent::Truncated { .. } => truncated = true,
            }
        }
        (out, truncated)
    }

    #[test]
    fn scan_base2_yields_known_witnesses() {
        let scan = Scan::new(ScanConfig::exhaustive(2, 12)).unwrap();
        let (certs, truncated) = collect_certificates(scan);
        assert!(!truncated);
        assert_eq!(
            certs,
            vec![
                (nat(11), nat(3)),
                (nat(13), nat(5)),
                (nat(35), nat(13)),
                (nat(93), nat(11)),
            ]
        );
    }

    #[test]
    fn scan_base10_yields_seven() {
        let scan = Scan::new(ScanConfig::exhaustive(10, 4)).unwrap();
        let (certs, truncated) = collect_certificates(scan);
        assert!(!truncated);
        assert!(certs.is_empty());

        let scan = Scan::new(ScanConfig::exhaustive(10, 6)).unwrap();
        let (certs, _) = collect_certificates(scan);
        assert_eq!(certs, vec![(nat(13), nat(7))]);
    }

    #[test]
    fn scan_square_base_is_empty_with_advisory() {
        let mut scan = Scan::new(ScanConfig::exhaustive(4, 6)).unwrap();
        assert!(scan.advisory().is_some());
        let events: Vec<_> = (&mut scan).collect();
        assert!(events
            .iter()
            .all(|e| !matches!(e, Ok(ScanEvent::Certificate(_)))));
        assert!(scan.examined() > 0);
        assert_eq!(scan.emitted(), 0);
    }

    #[test]
    fn scan_budget_truncates() {
        let mut config = ScanConfig::exhaustive(2, 14);
        config.budget = Some(20);
        let mut scan = Scan::new(config).unwrap();
        let events: Vec<_> = (&mut scan).collect();
        assert!(matches!(
            events.last().unwrap(),
            Ok(ScanEvent::Truncated { examined: 20 })
        ));
        assert!(scan.truncated());
        assert_eq!(scan.examined(), 20);
    }

    #[test]
    fn scan_workers_do_not_change_output() {
        let sequential = Scan::new(ScanConfig::exhaustive(2, 12)).unwrap();
        let mut parallel_config = ScanConfig::exhaustive(2, 12);
        parallel_config.workers = 4;
        let parallel = Scan::new(parallel_config).unwrap();
        assert_eq!(
            collect_certificates(sequential),
            collect_certificates(parallel)
        );
    }

    #[test]
    fn square_base_detection() {
        assert_eq!(perfect_square_root(4), Some(2));
        assert_eq!(perfect_square_root(9), Some(3));
        assert_eq!(perfect_square_root(2), None);
        assert_eq!(perfect_square_root(10), None);
        assert_eq!(perfect_square_root(u64::MAX), None);
        assert_eq!(perfect_square_root(1u64 << 62), Some(1 << 31));
    }

    #[test]
    fn scan_random_mode_is_seed_deterministic() {
        let config = |seed| ScanConfig {
            base: 2,
            max_length: 12,
            mode: ScanMode::Random { seed, draws: 500 },
            budget: None,
            workers: 1,
            options: CertifyOptions::default(),
        };
        let first = collect_certificates(Scan::new(config(7)).unwrap());
        let second = collect_certificates(Scan::new(config(7)).unwrap());
        assert_eq!(first, second);
        let mut scan = Scan::new(config(7)).unwrap();
        for _ in &mut scan {}
        assert_eq!(scan.examined(), 500);
    }
}
