//! Exact modular arithmetic on arbitrary-precision naturals: residues,
//! powers, multiplicative orders, primality, and factorization.
//!
//! Everything here is pure and deterministic. The randomized routines
//! (the rho splitter, the wide primality test) draw from a ChaCha stream
//! seeded with [`DEFAULT_SEED`] unless the caller supplies a seed, so
//! identical inputs always take identical trajectories.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::Natural;

/// Every candidate divisor up to this bound is tried before the randomized
/// splitter takes over.
pub const TRIAL_DIVISION_BOUND: u64 = 4096;

/// Default iteration budget for [`factorize`]. Sized so that every input the
/// bundled verification suites touch factors completely.
pub const DEFAULT_FACTOR_BUDGET: u64 = 1 << 20;

/// Seed used by randomized routines when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5EED_CAFE;

/// Seed for the extra witness rounds of the wide primality test.
const PRIMALITY_SEED: u64 = 0x4D52_0001;

/// Number of seeded witness rounds added for inputs past the deterministic
/// 64-bit range.
const PRIMALITY_EXTRA_ROUNDS: usize = 40;

/// Witness set that decides primality for every input below 3.3e24, which
/// covers the whole 64-bit range.
const SMALL_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

fn ensure_modulus(m: &Natural) -> Result<()> {
    if *m < nat(2) {
        return Err(Error::InvalidModulus { modulus: m.clone() });
    }
    Ok(())
}

fn ensure_coprime(a: &Natural, b: &Natural) -> Result<()> {
    if !a.gcd(b).is_one() {
        return Err(Error::NotCoprime {
            left: a.clone(),
            right: b.clone(),
        });
    }
    Ok(())
}

/// The representative of `g` modulo `m` in `[0, m)`.
pub fn least_residue(g: &Natural, modulus: &Natural) -> Result<Natural> {
    ensure_modulus(modulus)?;
    Ok(g % modulus)
}

/// `base^exponent mod modulus` by square-and-multiply.
pub fn mod_pow(base: &Natural, exponent: &Natural, modulus: &Natural) -> Result<Natural> {
    ensure_modulus(modulus)?;
    Ok(base.modpow(exponent, modulus))
}

/// Smallest `d >= 1` with `n^d = 1 (mod m)`, computed by factoring the
/// group exponent and descending through its divisors.
///
/// `m = 1` returns 1 so that pipelines that collapse onto the trivial
/// modulus keep reporting instead of erroring.
pub fn multiplicative_order(n: &Natural, m: &Natural) -> Result<Natural> {
    multiplicative_order_with(n, m, DEFAULT_FACTOR_BUDGET, DEFAULT_SEED)
}

/// [`multiplicative_order`] with an explicit factorization budget and seed.
pub fn multiplicative_order_with(
    n: &Natural,
    m: &Natural,
    budget: u64,
    seed: u64,
) -> Result<Natural> {
    if m.is_zero() {
        return Err(Error::InvalidModulus { modulus: m.clone() });
    }
    if m.is_one() {
        return Ok(Natural::one());
    }
    ensure_coprime(n, m)?;
    let lambda = carmichael_exponent_with(m, budget, seed)?;
    if lambda.is_one() {
        return Ok(Natural::one());
    }
    let mut order = lambda.clone();
    let lambda_factors = factorize_seeded(&lambda, budget, seed)?;
    for (q, _) in lambda_factors.pairs() {
        while (&order % q).is_zero() {
            let candidate = &order / q;
            if mod_pow(n, &candidate, m)?.is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

/// Smallest `d >= 1` with `n^d = 1 (mod m)`, found by incremental
/// multiplication. Slower than [`multiplicative_order`]; the two must agree
/// and the test suites check that they do.
pub fn multiplicative_order_incremental(n: &Natural, m: &Natural) -> Result<Natural> {
    if m.is_zero() {
        return Err(Error::InvalidModulus { modulus: m.clone() });
    }
    if m.is_one() {
        return Ok(Natural::one());
    }
    ensure_coprime(n, m)?;
    let step = n % m;
    let mut acc = step.clone();
    let mut order = Natural::one();
    while !acc.is_one() {
        acc = &acc * &step % m;
        order += 1u32;
    }
    Ok(order)
}

/// Incremental order computation that gives up after `max` steps.
///
/// Returns `Some(order)` when `n` has order at most `max` modulo `m`,
/// `None` otherwise. Used where only bounded orders are of interest and
/// factoring `m` may be out of reach.
pub fn order_at_most(n: u64, m: &Natural, max: u64) -> Option<u64> {
    if m.is_zero() {
        return None;
    }
    if m.is_one() {
        return if max >= 1 { Some(1) } else { None };
    }
    if !m.gcd(&nat(n)).is_one() {
        return None;
    }
    if let Some(m64) = m.to_u64() {
        let step = n % m64;
        let mut acc = step;
        for d in 1..=max {
            if acc == 1 {
                return Some(d);
            }
            acc = ((acc as u128 * step as u128) % m64 as u128) as u64;
        }
        return None;
    }
    let base = nat(n);
    let step = &base % m;
    let mut acc = step.clone();
    for d in 1..=max {
        if acc.is_one() {
            return Some(d);
        }
        acc = &acc * &step % m;
    }
    None
}

/// Carmichael exponent of the unit group modulo `m` (the lcm of the
/// exponents of its prime-power components).
pub fn carmichael_exponent(m: &Natural) -> Result<Natural> {
    carmichael_exponent_with(m, DEFAULT_FACTOR_BUDGET, DEFAULT_SEED)
}

fn carmichael_exponent_with(m: &Natural, budget: u64, seed: u64) -> Result<Natural> {
    if m.is_zero() {
        return Err(Error::InvalidModulus { modulus: m.clone() });
    }
    if m.is_one() {
        return Ok(Natural::one());
    }
    let factors = factorize_seeded(m, budget, seed)?;
    let mut lambda = Natural::one();
    for (p, e) in factors.pairs() {
        let component = if *p == nat(2) {
            match e {
                1 => Natural::one(),
                2 => nat(2),
                _ => nat(2).pow(e - 2),
            }
        } else {
            p.pow(e - 1) * (p - 1u32)
        };
        lambda = lambda.lcm(&component);
    }
    Ok(lambda)
}

/// Primality test: a fixed witness set decides every input in the 64-bit
/// range; wider inputs get the same witnesses plus 40 seeded rounds, so
/// the verdict is still deterministic per input.
pub fn is_prime(x: &Natural) -> bool {
    match x.to_u64() {
        Some(v) => is_prime_u64(v),
        None => is_prime_wide(x),
    }
}

pub(crate) fn is_prime_u64(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if x == p {
            return true;
        }
        if x % p == 0 {
            return false;
        }
    }
    let d = (x - 1) >> (x - 1).trailing_zeros();
    let s = (x - 1).trailing_zeros();
    'witness: for &a in &SMALL_WITNESSES {
        let mut v = mod_pow_u64(a % x, d, x);
        if v == 1 || v == x - 1 {
            continue;
        }
        for _ in 1..s {
            v = ((v as u128 * v as u128) % x as u128) as u64;
            if v == x - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mod_pow_u64(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut base = b as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m as u128;
        }
        base = base * base % m as u128;
        e >>= 1;
    }
    acc as u64
}

fn is_prime_wide(x: &Natural) -> bool {
    if x.is_even() {
        return false;
    }
    let one = Natural::one();
    let x_minus_one = x - &one;
    let s = x_minus_one.trailing_zeros().unwrap_or(0);
    let d = &x_minus_one >> s;
    let mut rng = ChaCha8Rng::seed_from_u64(PRIMALITY_SEED);
    let mut witnesses: Vec<Natural> = SMALL_WITNESSES.iter().map(|&w| nat(w)).collect();
    use num_bigint::RandBigInt;
    for _ in 0..PRIMALITY_EXTRA_ROUNDS {
        let w = rng.gen_biguint_below(&(x - nat(3))) + nat(2);
        witnesses.push(w);
    }
    'witness: for a in witnesses {
        let mut v = a.modpow(&d, x);
        if v.is_one() || v == x_minus_one {
            continue;
        }
        for _ in 1..s {
            v = &v * &v % x;
            if v == x_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Complete prime factorization of an exact natural number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(Natural, u32)>,
    subject: Natural,
}

fn count_pairs(primes: Vec<Natural>) -> Vec<(Natural, u32)> {
    let mut counts: BTreeMap<Natural, u32> = BTreeMap::new();
    for p in primes {
        *counts.entry(p).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}

impl Factorization {
    fn from_parts(primes: Vec<Natural>, subject: Natural) -> Self {
        let pairs = count_pairs(primes);
        let out = Factorization { pairs, subject };
        debug_assert_eq!(out.recompose(), out.subject);
        out
    }

    /// `(prime, exponent)` pairs with primes strictly increasing.
    pub fn pairs(&self) -> &[(Natural, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = &Natural> {
        self.pairs.iter().map(|(p, _)| p)
    }

    pub fn subject(&self) -> &Natural {
        &self.subject
    }

    pub fn exponent_of(&self, prime: &Natural) -> u32 {
        self.pairs
            .iter()
            .find(|(p, _)| p == prime)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Multiplies the factorization back together.
    pub fn recompose(&self) -> Natural {
        let mut acc = Natural::one();
        for (p, e) in &self.pairs {
            acc *= p.pow(*e);
        }
        acc
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, e) in &self.pairs {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factor `x >= 2` completely: trial division up to
/// [`TRIAL_DIVISION_BOUND`], then a seeded Brent-rho splitter that may spend
/// at most `budget` iterations in total.
pub fn factorize(x: &Natural, budget: u64) -> Result<Factorization> {
    factorize_seeded(x, budget, DEFAULT_SEED)
}

/// [`factorize`] with an explicit seed for the splitter.
pub fn factorize_seeded(x: &Natural, budget: u64, seed: u64) -> Result<Factorization> {
    if *x < nat(2) {
        return Err(Error::InvalidInput(format!(
            "factorization requires an input of at least 2, got {x}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut remaining_budget = budget;
    let mut primes: Vec<Natural> = Vec::new();

    if let Some(v) = x.to_u64() {
        match factor_u64(v, &mut remaining_budget, &mut rng) {
            Ok(found) => primes.extend(found.into_iter().map(nat)),
            Err((found, remaining)) => {
                return Err(Error::FactorBudgetExceeded {
                    found: count_pairs(found.into_iter().map(nat).collect()),
                    remaining: nat(remaining),
                });
            }
        }
        return Ok(Factorization::from_parts(primes, x.clone()));
    }

    let mut cofactor = x.clone();
    strip_small_factors(&mut cofactor, &mut primes);
    let mut pending: Vec<Natural> = Vec::new();
    if !cofactor.is_one() {
        pending.push(cofactor);
    }
    while let Some(c) = pending.pop() {
        if let Some(v) = c.to_u64() {
            match factor_u64(v, &mut remaining_budget, &mut rng) {
                Ok(found) => primes.extend(found.into_iter().map(nat)),
                Err((found, remaining)) => {
                    primes.extend(found.into_iter().map(nat));
                    return Err(budget_error(primes, nat(remaining), pending));
                }
            }
            continue;
        }
        if is_prime(&c) {
            primes.push(c);
            continue;
        }
        match brent_rho_wide(&c, &mut remaining_budget, &mut rng) {
            Some(d) => {
                let q = &c / &d;
                pending.push(d);
                pending.push(q);
            }
            None => return Err(budget_error(primes, c, pending)),
        }
    }
    Ok(Factorization::from_parts(primes, x.clone()))
}

fn budget_error(primes: Vec<Natural>, current: Natural, pending: Vec<Natural>) -> Error {
    let mut remaining = current;
    for c in pending {
        remaining *= c;
    }
    Error::FactorBudgetExceeded {
        found: count_pairs(primes),
        remaining,
    }
}

fn strip_small_factors(cofactor: &mut Natural, primes: &mut Vec<Natural>) {
    for d in trial_candidates() {
        let dn = nat(d);
        while (&*cofactor % &dn).is_zero() {
            primes.push(dn.clone());
            *cofactor /= &dn;
        }
        if cofactor.is_one() {
            break;
        }
    }
}

fn trial_candidates() -> impl Iterator<Item = u64> {
    [2u64, 3].into_iter().chain(
        (1..)
            .flat_map(|k| [6 * k - 1, 6 * k + 1])
            .take_while(|&d| d <= TRIAL_DIVISION_BOUND),
    )
}

type U64Partial = (Vec<u64>, u64);

fn factor_u64(
    x: u64,
    budget: &mut u64,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<Vec<u64>, U64Partial> {
    let mut primes: Vec<u64> = Vec::new();
    let mut cofactor = x;
    for d in trial_candidates() {
        if d.saturating_mul(d) > cofactor {
            break;
        }
        while cofactor % d == 0 {
            primes.push(d);
            cofactor /= d;
        }
    }
    if cofactor == 1 {
        return Ok(primes);
    }
    // No divisor up to the trial bound: prime whenever below its square.
    if cofactor <= TRIAL_DIVISION_BOUND * TRIAL_DIVISION_BOUND || is_prime_u64(cofactor) {
        primes.push(cofactor);
        return Ok(primes);
    }
    let mut pending = vec![cofactor];
    while let Some(c) = pending.pop() {
        if is_prime_u64(c) {
            primes.push(c);
            continue;
        }
        match brent_rho_u64(c, budget, rng) {
            Some(d) => {
                pending.push(d);
                pending.push(c / d);
            }
            None => {
                let mut remaining = c;
                for p in pending {
                    remaining = remaining.saturating_mul(p);
                }
                return Err((primes, remaining));
            }
        }
    }
    Ok(primes)
}

fn brent_rho_u64(n: u64, budget: &mut u64, rng: &mut ChaCha8Rng) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    loop {
        if *budget == 0 {
            return None;
        }
        let c = rng.gen_range(1..n);
        let mut y = rng.gen_range(1..n);
        let f = |v: u64| ((v as u128 * v as u128 + c as u128) % n as u128) as u64;
        let (mut x, mut ys) = (y, y);
        let mut d = 1u64;
        let mut r = 1u64;
        let mut q: u128 = 1;
        'outer: while d == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0u64;
            while k < r && d == 1 {
                ys = y;
                let batch = 128.min(r - k).min(*budget);
                if batch == 0 {
                    return None;
                }
                for _ in 0..batch {
                    y = f(y);
                    q = q * (x.abs_diff(y) as u128) % n as u128;
                }
                *budget -= batch;
                d = gcd_u64(q as u64, n);
                k += batch;
            }
            r *= 2;
            if *budget == 0 && d == 1 {
                break 'outer;
            }
        }
        if d == n {
            // Backtrack one step at a time to isolate the factor.
            loop {
                if *budget == 0 {
                    return None;
                }
                *budget -= 1;
                ys = f(ys);
                d = gcd_u64(x.abs_diff(ys), n);
                if d > 1 {
                    break;
                }
            }
        }
        if d > 1 && d < n {
            return Some(d);
        }
        if *budget == 0 {
            return None;
        }
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if a == 0 {
        b
    } else {
        gcd_u64(b % a, a)
    }
}

fn brent_rho_wide(n: &Natural, budget: &mut u64, rng: &mut ChaCha8Rng) -> Option<Natural> {
    use num_bigint::RandBigInt;
    if n.is_even() {
        return Some(nat(2));
    }
    let one = Natural::one();
    loop {
        if *budget == 0 {
            return None;
        }
        let c = rng.gen_biguint_below(n);
        let mut y = rng.gen_biguint_below(n);
        let f = |v: &Natural| (v * v + &c) % n;
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut d = one.clone();
        let mut r = 1u64;
        let mut q = one.clone();
        while d.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0u64;
            while k < r && d.is_one() {
                ys = y.clone();
                let batch = 128.min(r - k).min(*budget);
                if batch == 0 {
                    return None;
                }
                for _ in 0..batch {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                *budget -= batch;
                d = q.gcd(n);
                k += batch;
            }
            r *= 2;
            if *budget == 0 && d.is_one() {
                break;
            }
        }
        if d == *n {
            loop {
                if *budget == 0 {
                    return None;
                }
                *budget -= 1;
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                d = diff.gcd(n);
                if !d.is_one() {
                    break;
                }
            }
        }
        if !d.is_one() && d < *n {
            return Some(d);
        }
        if *budget == 0 {
            return None;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Oracle: reduce by repeated subtraction.
    fn residue_by_subtraction(mut g: u64, m: u64) -> u64 {
        while g >= m {
            g -= m;
        }
        g
    }

    // Oracle: exponentiation by iterated multiplication.
    fn pow_by_iteration(b: u64, e: u64, m: u64) -> u64 {
        let mut acc = 1u64 % m;
        for _ in 0..e {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        acc
    }

    // Oracle: order by incrementing the exponent until the power is 1.
    fn order_by_bruteforce(n: u64, m: u64) -> u64 {
        let mut acc = n % m;
        let mut d = 1;
        while acc != 1 {
            acc = ((acc as u128 * n as u128) % m as u128) as u64;
            d += 1;
        }
        d
    }

    // Oracle: trial division over all candidates.
    fn factor_by_trial(mut x: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= x {
            let mut e = 0;
            while x % d == 0 {
                x /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d, e));
            }
            d += 1;
        }
        if x > 1 {
            out.push((x, 1));
        }
        out
    }

    #[test]
    fn least_residue_examples() {
        assert_eq!(least_residue(&nat(100), &nat(7)).unwrap(), nat(2));
        assert_eq!(
            least_residue(&nat(1000), &nat(7)).unwrap(),
            nat(residue_by_subtraction(1000, 7))
        );
        assert_eq!(least_residue(&nat(1000), &nat(7)).unwrap(), nat(6));
        assert_eq!(least_residue(&nat(9), &nat(4)).unwrap(), nat(1));
    }

    #[test]
    fn least_residue_rejects_small_modulus() {
        assert!(matches!(
            least_residue(&nat(5), &nat(1)),
            Err(Error::InvalidModulus { .. })
        ));
        assert!(matches!(
            least_residue(&nat(5), &nat(0)),
            Err(Error::InvalidModulus { .. })
        ));
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(&nat(10), &nat(6), &nat(7)).unwrap(), nat(1));
        assert_eq!(pow_by_iteration(10, 6, 7), 1);
        assert_eq!(mod_pow(&nat(2), &nat(5), &nat(11)).unwrap(), nat(10));
        assert_eq!(pow_by_iteration(2, 5, 11), 10);
        for b in [3u64, 7, 10, 123] {
            assert_eq!(mod_pow(&nat(b), &nat(0), &nat(11)).unwrap(), nat(1));
        }
        assert!(matches!(
            mod_pow(&nat(2), &nat(5), &nat(1)),
            Err(Error::InvalidModulus { .. })
        ));
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(&nat(10), &nat(7)).unwrap(), nat(6));
        assert_eq!(order_by_bruteforce(10, 7), 6);
        assert_eq!(multiplicative_order(&nat(2), &nat(11)).unwrap(), nat(10));
        assert_eq!(order_by_bruteforce(2, 11), 10);
        assert_eq!(multiplicative_order(&nat(10), &nat(3)).unwrap(), nat(1));
        assert_eq!(multiplicative_order(&nat(2), &nat(93)).unwrap(), nat(10));
        assert_eq!(order_by_bruteforce(2, 93), 10);
    }

    #[test]
    fn order_conventions_and_errors() {
        assert_eq!(multiplicative_order(&nat(10), &nat(1)).unwrap(), nat(1));
        assert_eq!(
            multiplicative_order_incremental(&nat(10), &nat(1)).unwrap(),
            nat(1)
        );
        assert!(matches!(
            multiplicative_order(&nat(10), &nat(4)),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            multiplicative_order(&nat(10), &nat(0)),
            Err(Error::InvalidModulus { .. })
        ));
    }

    #[test]
    fn order_strategies_agree_small() {
        for m in 2u64..=200 {
            for n in [2u64, 3, 10] {
                if gcd_u64(n, m) != 1 {
                    continue;
                }
                let fast = multiplicative_order(&nat(n), &nat(m)).unwrap();
                let slow = multiplicative_order_incremental(&nat(n), &nat(m)).unwrap();
                assert_eq!(fast, slow, "order mismatch for n={n} m={m}");
            }
        }
    }

    #[test]
    fn order_at_most_matches_exact() {
        for m in 2u64..=120 {
            for n in [2u64, 10] {
                if gcd_u64(n, m) != 1 {
                    continue;
                }
                let exact = multiplicative_order(&nat(n), &nat(m))
                    .unwrap()
                    .to_u64()
                    .unwrap();
                assert_eq!(order_at_most(n, &nat(m), exact), Some(exact));
                if exact > 1 {
                    assert_eq!(order_at_most(n, &nat(m), exact - 1), None);
                }
            }
        }
        assert_eq!(order_at_most(10, &nat(1), 5), Some(1));
        assert_eq!(order_at_most(10, &nat(4), 5), None);
    }

    #[test]
    fn carmichael_values() {
        assert_eq!(carmichael_exponent(&nat(8)).unwrap(), nat(2));
        assert_eq!(carmichael_exponent(&nat(15)).unwrap(), nat(4));
        assert_eq!(carmichael_exponent(&nat(9)).unwrap(), nat(6));
        assert_eq!(carmichael_exponent(&nat(2)).unwrap(), nat(1));
        assert_eq!(carmichael_exponent(&nat(1)).unwrap(), nat(1));
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(&nat(999_999), DEFAULT_FACTOR_BUDGET).unwrap();
        let expected: Vec<(Natural, u32)> = factor_by_trial(999_999)
            .into_iter()
            .map(|(p, e)| (nat(p), e))
            .collect();
        assert_eq!(f.pairs(), expected.as_slice());
        assert_eq!(
            f.pairs(),
            &[
                (nat(3), 3),
                (nat(7), 1),
                (nat(11), 1),
                (nat(13), 1),
                (nat(37), 1)
            ]
        );
        assert_eq!(f.recompose(), nat(999_999));

        let f = factorize(&nat(93), DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(f.pairs(), &[(nat(3), 1), (nat(31), 1)]);

        let f = factorize(&nat(97), DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(f.pairs(), &[(nat(97), 1)]);
        assert_eq!(format!("{f}"), "97");
        assert_eq!(
            format!(
                "{}",
                factorize(&nat(999_999), DEFAULT_FACTOR_BUDGET).unwrap()
            ),
            "3^3 * 7 * 11 * 13 * 37"
        );
    }

    #[test]
    fn factorize_rejects_small_input() {
        assert!(matches!(
            factorize(&nat(1), DEFAULT_FACTOR_BUDGET),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            factorize(&nat(0), DEFAULT_FACTOR_BUDGET),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn factorize_budget_exhaustion_carries_partial() {
        // 4099 * 4111: both factors are past the trial division bound.
        let x = nat(4099u64 * 4111);
        match factorize(&x, 0) {
            Err(Error::FactorBudgetExceeded { found, remaining }) => {
                assert!(found.is_empty());
                assert_eq!(remaining, x);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
        // With the default budget it factors fine and deterministically.
        let f = factorize(&x, DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(f.pairs(), &[(nat(4099), 1), (nat(4111), 1)]);
        let again = factorize(&x, DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn factorize_wide_input() {
        // 2^89 - 1 is prime; multiplying by small primes exercises the wide path.
        let m89 = (Natural::one() << 89) - 1u32;
        assert!(is_prime(&m89));
        let x = &m89 * nat(6);
        let f = factorize(&x, DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(f.pairs(), &[(nat(2), 1), (nat(3), 1), (m89.clone(), 1)]);
    }

    #[test]
    fn is_prime_examples() {
        assert!(is_prime(&nat(7)));
        assert!(!is_prime(&nat(1023)));
        assert_eq!(factor_by_trial(142_857)[0].0, 3);
        assert!(!is_prime(&nat(142_857)));
        assert!(is_prime(&nat(2)));
        assert!(!is_prime(&nat(1)));
        assert!(!is_prime(&nat(0)));
        assert!(is_prime(&nat(4099)));
    }

    #[test]
    fn is_prime_wide_inputs() {
        let m89 = (Natural::one() << 89) - 1u32;
        assert!(is_prime(&m89));
        let composite = (nat(10_000_000_019u64)) * nat(10_000_000_033u64);
        assert!(composite > Natural::from(u64::MAX));
        assert!(!is_prime(&composite));
    }
}
