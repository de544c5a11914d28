//! The gcd `gcd(q^d + 1, q^2 - q - 1)` and its Fibonacci characterization.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fibonacci::{fib, lucas, FibonacciTable};
use super::primes::{factor_integer, Factorization};
use crate::error::{Error, Result};

/// `q^2 - q - 1`, for `q ≥ 2`.
fn golden_quadratic(q: &BigUint) -> BigUint {
    q * q - q - 1u32
}

/// `gcd(q^d + 1, q^2 - q - 1)`.
pub fn gcd_pair(q: &BigUint, d: u32) -> BigUint {
    (q.pow(d) + 1u32).gcd(&golden_quadratic(q))
}

/// `M_d = F_{d+1} + F_{d-1} + 1 + (-1)^d`.
pub fn m_d(d: u32) -> BigUint {
    let base = fib(d as u64 + 1).expect("d ≥ 1") + fib(d as u64 - 1).unwrap_or_default() + 1u32;
    if d % 2 == 0 {
        base + 1u32
    } else {
        base - 1u32
    }
}

/// Checks the division of `q^d + 1` by `q^2 - q - 1`:
/// the quotient is `Σ_{i=1}^{d-1} F_i q^{d-i-1}`, the remainder
/// `F_d q + F_{d-1} + 1`, and the two gcds agree.
pub fn remainder_identity_check(q: &BigUint, d: u32) -> Result<bool> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("d = {d} < 2")));
    }
    let t = FibonacciTable::new(d as usize);
    let q_int = BigInt::from(q.clone());
    let quotient = (1..d).fold(BigInt::zero(), |acc, i| {
        acc + t.f(i as usize) * q_int.pow(d - i - 1)
    });
    let remainder = t.f(d as usize) * &q_int + t.f(d as usize - 1) + 1;
    let lhs: BigInt = q_int.pow(d) + 1;
    let divisor = BigInt::from(golden_quadratic(q));
    let division_ok = lhs == &divisor * quotient + &remainder;
    let gcd_ok = lhs.gcd(&divisor) == divisor.gcd(&remainder);
    Ok(division_ok && gcd_ok)
}

/// For one `d`: the number `M_d`, its factorization, and for each prime
/// `t | M_d` coprime to `F_d` the residue class of `q` forcing `t` to divide
/// the gcd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorCharacterization {
    pub d: u32,
    pub f_d: BigUint,
    pub f_d_minus_1: BigUint,
    pub f_d_plus_1: BigUint,
    pub m_d: BigUint,
    pub factorization: Factorization,
    /// `(t, residue)` with `residue ≡ -(F_{d-1} + 1) / F_d (mod t)`.
    pub admissible: Vec<(BigUint, BigUint)>,
    /// Primes dividing both `M_d` and `F_d`.
    pub excluded: Vec<BigUint>,
}

impl DivisorCharacterization {
    pub fn is_complete(&self) -> bool {
        self.factorization.is_complete()
    }
}

fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a % m);
    let m_int = BigInt::from(m.clone());
    let e = a.extended_gcd(&m_int);
    if !e.gcd.is_one() {
        return None;
    }
    e.x.mod_floor(&m_int).to_biguint()
}

/// A factorization that stops at the budget yields a characterization with
/// `is_complete() == false`; the admissible list then covers only the primes
/// that were found.
pub fn characterize_divisors(d: u32) -> Result<DivisorCharacterization> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("d = {d} < 2")));
    }
    let f_d = fib(d as u64)?;
    let f_d_minus_1 = fib(d as u64 - 1)?;
    let f_d_plus_1 = fib(d as u64 + 1)?;
    let m = m_d(d);
    let factorization = factor_integer(&m);
    let mut admissible = Vec::new();
    let mut excluded = Vec::new();
    for (t, _) in factorization.distinct() {
        if (&f_d % &t).is_zero() {
            excluded.push(t);
            continue;
        }
        let inv = mod_inverse(&f_d, &t).expect("t prime and coprime to F_d");
        let numer = (&f_d_minus_1 + 1u32) % &t;
        let residue = ((&t - numer) * inv) % &t;
        admissible.push((t, residue));
    }
    Ok(DivisorCharacterization {
        d,
        f_d,
        f_d_minus_1,
        f_d_plus_1,
        m_d: m,
        factorization,
        admissible,
        excluded,
    })
}

fn is_plus_minus_two_mod_five(p: &BigUint) -> bool {
    matches!((p % 5u32).to_u32(), Some(2) | Some(3))
}

/// True iff every prime divisor of `F_d` and of `M_d` is `±2 (mod 5)`, in
/// which case the gcd is 1 for every `q`.
pub fn gcd_always_one(d: u32) -> Result<bool> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("d = {d} < 2")));
    }
    let mut all = true;
    for n in [fib(d as u64)?, m_d(d)] {
        let f = factor_integer(&n);
        if !f.is_complete() {
            return Err(Error::FactorizationIncomplete(n));
        }
        all &= f.primes.iter().all(is_plus_minus_two_mod_five);
    }
    Ok(all)
}

/// For even `d`: every prime `≠ 5` of `M_d = L_d + 2` divides `F_d`.
/// Also checks the identity that drives it, `L_d + 2 = L_{d/2}^2` for
/// `d ≡ 0 (mod 4)` and `L_d + 2 = 5 F_{d/2}^2` for `d ≡ 2 (mod 4)`.
pub fn even_d_lemma_check(d: u32) -> Result<bool> {
    if d % 2 != 0 || d == 0 {
        return Err(Error::InvalidParams(format!("d = {d} is not even")));
    }
    let m = m_d(d);
    let l_d = lucas(d as u64)?;
    let half = d as u64 / 2;
    let identity_ok = if d % 4 == 0 {
        let l_half = lucas(half)?;
        &l_d + 2u32 == &l_half * &l_half
    } else {
        let f_half = fib(half)?;
        &l_d + 2u32 == BigUint::from(5u32) * &f_half * &f_half
    };
    let consistent = m == &l_d + 2u32;
    let f = factor_integer(&m);
    if !f.is_complete() {
        return Err(Error::FactorizationIncomplete(m));
    }
    let f_d = fib(d as u64)?;
    let five = BigUint::from(5u32);
    let divides = f
        .distinct()
        .iter()
        .filter(|(p, _)| *p != five)
        .all(|(p, _)| (&f_d % p).is_zero());
    Ok(identity_ok && consistent && divides)
}

/// Result of scanning `gcd(F_d, F_{d-1} + 1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FibGcdScan {
    pub d_max: u32,
    /// Odd `d` with `gcd(F_d, F_{d-1} + 1) ∉ {1, 2}`, with the gcd.
    pub counterexamples: Vec<(u32, BigUint)>,
    /// Even `d` where the factorization of `F_{d-1} + 1` failed to hold.
    pub identity_failures: Vec<u32>,
}

impl FibGcdScan {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty() && self.identity_failures.is_empty()
    }
}

/// Odd `d`: checks `gcd(F_d, F_{d-1}+1) ∈ {1, 2}`. Even `d`: checks
/// `F_{d-1} + 1 = F_{d/2} L_{d/2-1}` (`d ≡ 2 mod 4`) or
/// `F_{d-1} + 1 = L_{d/2} F_{d/2-1}` (`d ≡ 0 mod 4`).
pub fn f_gcd_conjecture_scan(d_max: u32) -> FibGcdScan {
    let t = FibonacciTable::new(d_max as usize + 1);
    let mut scan = FibGcdScan {
        d_max,
        ..FibGcdScan::default()
    };
    for d in 2..=d_max as usize {
        let shifted = t.f(d - 1) + 1;
        if d % 2 == 1 {
            let g = t.f(d).gcd(&shifted);
            if g > BigInt::from(2) {
                scan.counterexamples
                    .push((d as u32, g.abs().to_biguint().expect("nonnegative")));
            }
        } else {
            let h = d / 2;
            let rhs = if d % 4 == 2 {
                t.f(h) * t.l(h - 1)
            } else {
                t.l(h) * t.f(h - 1)
            };
            if shifted != rhs {
                scan.identity_failures.push(d as u32);
            }
        }
    }
    scan
}
