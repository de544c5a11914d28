//! Primality testing and integer factorization.
//!
//! Miller-Rabin with the first twelve prime bases is deterministic below
//! 3.3·10^24, which covers every machine-word input. Larger inputs get the
//! same test plus extra pseudo-random bases and are reported as probable
//! primes. Factoring is trial division to 10^4 followed by Pollard-Brent rho,
//! seeded from the input so repeated runs agree.

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const TRIAL_LIMIT: u64 = 10_000;
// below this bound the MR_BASES test is a proof
const DETERMINISTIC_BOUND: u128 = 3_317_044_064_679_887_385_961_981;
const EXTRA_ROUNDS: usize = 16;

/// Iteration budget for one Pollard-Brent attempt, and the number of attempts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorBudget {
    pub iterations: u64,
    pub attempts: u32,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            iterations: 1 << 21,
            attempts: 6,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Primality {
    Composite,
    Prime,
    ProbablePrime,
}

fn mul_mod64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod64(acc, a, m);
        }
        a = mul_mod64(a, a, m);
        e >>= 1;
    }
    acc
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &b in &MR_BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime(n: &BigUint, a: &BigUint, d: &BigUint, s: u64) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let mut x = a.modpow(d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

pub fn primality(n: &BigUint) -> Primality {
    if let Some(small) = n.to_u64() {
        return if is_prime_u64(small) {
            Primality::Prime
        } else {
            Primality::Composite
        };
    }
    for &b in &MR_BASES {
        if (n % b).is_zero() {
            return Primality::Composite;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    for &b in &MR_BASES {
        if !strong_probable_prime(n, &BigUint::from(b), &d, s) {
            return Primality::Composite;
        }
    }
    if n.to_u128().is_some_and(|v| v < DETERMINISTIC_BOUND) {
        return Primality::Prime;
    }
    let mut rng = rng_for(n);
    let two = BigUint::from(2u32);
    for _ in 0..EXTRA_ROUNDS {
        let a = rng.gen_biguint_range(&two, &n_minus_1);
        if !strong_probable_prime(n, &a, &d, s) {
            return Primality::Composite;
        }
    }
    Primality::ProbablePrime
}

pub fn is_prime(n: &BigUint) -> bool {
    primality(n) != Primality::Composite
}

fn rng_for(n: &BigUint) -> ChaCha8Rng {
    let digits = n.to_u64_digits();
    let seed = digits
        .iter()
        .fold(0x9e37_79b9_7f4a_7c15u64, |h, &w| (h ^ w).wrapping_mul(0x1000_0000_01b3).rotate_left(17));
    ChaCha8Rng::seed_from_u64(seed)
}

/// A multiset of prime factors, possibly with unsplit composite cofactors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    #[serde(with = "crate::decimal")]
    pub n: BigUint,
    /// Prime factors with multiplicity, ascending.
    #[serde(with = "crate::decimal::vec")]
    pub primes: Vec<BigUint>,
    /// Composite cofactors the budget could not split.
    #[serde(with = "crate::decimal::vec")]
    pub unfactored: Vec<BigUint>,
    /// False when some factor is only a probable prime.
    pub certified: bool,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.unfactored.is_empty()
    }

    /// Distinct primes with exponents.
    pub fn distinct(&self) -> Vec<(BigUint, u32)> {
        let mut out: Vec<(BigUint, u32)> = Vec::new();
        for p in &self.primes {
            match out.last_mut() {
                Some((last, e)) if last == p => *e += 1,
                _ => out.push((p.clone(), 1)),
            }
        }
        out
    }

    pub fn product(&self) -> BigUint {
        self.primes
            .iter()
            .chain(&self.unfactored)
            .fold(BigUint::one(), |acc, p| acc * p)
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self
            .distinct()
            .into_iter()
            .map(|(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        parts.extend(self.unfactored.iter().map(|c| format!("[{c}]")));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}

pub fn factor_integer(n: &BigUint) -> Factorization {
    factor_with_budget(n, FactorBudget::default())
}

pub fn factor_with_budget(n: &BigUint, budget: FactorBudget) -> Factorization {
    let mut primes = Vec::new();
    let mut unfactored = Vec::new();
    let mut certified = true;
    let mut rest = n.clone();
    if rest.is_zero() {
        return Factorization {
            n: n.clone(),
            primes,
            unfactored: vec![BigUint::zero()],
            certified,
        };
    }
    let mut t = 2u64;
    while t < TRIAL_LIMIT {
        let tb = BigUint::from(t);
        if &tb * &tb > rest {
            break;
        }
        while (&rest % t).is_zero() {
            rest /= t;
            primes.push(tb.clone());
        }
        t += if t == 2 { 1 } else { 2 };
    }
    let mut stack = Vec::new();
    if !rest.is_one() {
        stack.push(rest);
    }
    let mut rng = rng_for(n);
    while let Some(m) = stack.pop() {
        match primality(&m) {
            Primality::Prime => primes.push(m),
            Primality::ProbablePrime => {
                certified = false;
                primes.push(m);
            }
            Primality::Composite => {
                let mut split = None;
                for _ in 0..budget.attempts {
                    let c = rng.gen_biguint_range(&BigUint::one(), &m);
                    let x0 = rng.gen_biguint_range(&BigUint::zero(), &m);
                    if let Some(d) = pollard_brent(&m, &c, &x0, budget.iterations) {
                        split = Some(d);
                        break;
                    }
                }
                match split {
                    Some(d) => {
                        let other = &m / &d;
                        stack.push(d);
                        stack.push(other);
                    }
                    None => unfactored.push(m),
                }
            }
        }
    }
    primes.sort();
    unfactored.sort();
    Factorization {
        n: n.clone(),
        primes,
        unfactored,
        certified,
    }
}

/// Pollard rho with Brent's cycle detection and batched gcds. Returns a
/// nontrivial divisor of the composite `n`, or `None` within `max_iter` steps.
fn pollard_brent(n: &BigUint, c: &BigUint, x0: &BigUint, max_iter: u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    let f = |v: &BigUint| (v * v + c) % n;
    let batch = 128u64;
    let mut y = x0.clone();
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut steps = 0u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0u64;
        while k < r && g.is_one() {
            ys = y.clone();
            let lim = batch.min(r - k);
            for _ in 0..lim {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += lim;
            steps += lim;
        }
        r *= 2;
        if steps > max_iter {
            return None;
        }
    }
    if &g == n {
        // backtrack one step at a time
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if g > one {
                break;
            }
        }
    }
    if &g == n || g.is_one() {
        None
    } else {
        Some(g)
    }
}

/// Factorization of a machine-sized integer as `(prime, exponent)` pairs.
pub fn factor_u128(n: u128) -> Vec<(u128, u32)> {
    let f = factor_integer(&BigUint::from(n));
    assert!(f.is_complete(), "word-sized factorization must complete");
    f.distinct()
        .into_iter()
        .map(|(p, e)| (p.to_u128().expect("fits"), e))
        .collect()
}

/// `Some((p, r))` when `q = p^r` with `p` prime and `r ≥ 1`.
pub fn prime_power(q: &BigUint) -> Option<(BigUint, u32)> {
    if q < &BigUint::from(2u32) {
        return None;
    }
    let f = factor_integer(q);
    if !f.is_complete() {
        return None;
    }
    let distinct = f.distinct();
    if distinct.len() == 1 {
        Some(distinct.into_iter().next().expect("one prime"))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_primes() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        // strong pseudoprime to bases 2..13
        assert!(!is_prime_u64(3_215_031_751));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }

    #[test]
    fn factors_known_values() {
        let f = factor_integer(&big(167_761));
        assert_eq!(f.primes, vec![big(11), big(101), big(151)]);
        let f = factor_integer(&big(6161));
        assert_eq!(f.primes, vec![big(61), big(101)]);
        let f = factor_integer(&big(1));
        assert!(f.primes.is_empty() && f.is_complete());
    }

    #[test]
    fn splits_a_product_of_two_large_primes() {
        let p = big(1_000_000_007);
        let q = big(998_244_353);
        let f = factor_integer(&(&p * &q * &p));
        assert_eq!(f.primes, vec![q.clone(), p.clone(), p.clone()]);
        assert!(f.certified);
    }

    #[test]
    fn tiny_budget_reports_partial_result() {
        let n = big(1_000_000_007) * big(998_244_353);
        let f = factor_with_budget(&n, FactorBudget { iterations: 1, attempts: 1 });
        assert!(!f.is_complete());
        assert_eq!(f.product(), n);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(&big(9)), Some((big(3), 2)));
        assert_eq!(prime_power(&big(13)), Some((big(13), 1)));
        assert_eq!(prime_power(&big(6)), None);
        assert_eq!(prime_power(&big(35)), None);
        assert_eq!(prime_power(&big(1)), None);
    }

    #[test]
    fn big_primality_beyond_word_size() {
        // 2^127 - 1
        let m127 = (BigUint::one() << 127u32) - 1u32;
        assert_ne!(primality(&m127), Primality::Composite);
        let composite = &m127 * big(3);
        assert_eq!(primality(&composite), Primality::Composite);
    }
}
