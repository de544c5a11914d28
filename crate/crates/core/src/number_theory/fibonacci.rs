//! Fibonacci and Lucas numbers over arbitrary-precision integers.
//!
//! Indexing starts at 1 with `F_1 = F_2 = 1`. Lucas numbers use
//! `L_1 = 1, L_2 = 3`, the convention under which `L_k = F_{k-1} + F_{k+1}`
//! and `F_{2k} = F_k L_k` hold.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `(F_k, F_{k+1})` by fast doubling; valid for `k = 0` as well.
fn fib_pair(k: u64) -> (BigUint, BigUint) {
    if k == 0 {
        return (BigUint::zero(), BigUint::one());
    }
    let (a, b) = fib_pair(k / 2);
    // F_{2m} = F_m (2 F_{m+1} - F_m), F_{2m+1} = F_m^2 + F_{m+1}^2
    let two_b = &b << 1u32;
    let c = &a * (&two_b - &a);
    let d = &a * &a + &b * &b;
    if k % 2 == 0 {
        (c, d)
    } else {
        let next = &c + &d;
        (d, next)
    }
}

pub fn fib(k: u64) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidParams("Fibonacci numbers are indexed from 1".into()));
    }
    Ok(fib_pair(k).0)
}

pub fn lucas(k: u64) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidParams("Lucas numbers are indexed from 1".into()));
    }
    let (f, f_next) = fib_pair(k);
    // L_k = 2 F_{k+1} - F_k
    Ok((f_next << 1u32) - f)
}

/// Precomputed `F_0..=F_max` and `L_0..=L_max` (with `F_0 = 0`, `L_0 = 2`)
/// for bulk identity checks.
#[derive(Clone, Debug)]
pub struct FibonacciTable {
    f: Vec<BigInt>,
    l: Vec<BigInt>,
}

impl FibonacciTable {
    pub fn new(max: usize) -> Self {
        let mut f = vec![BigInt::zero(), BigInt::one()];
        let mut l = vec![BigInt::from(2), BigInt::one()];
        for k in 2..=max.max(1) {
            f.push(&f[k - 1] + &f[k - 2]);
            l.push(&l[k - 1] + &l[k - 2]);
        }
        f.truncate(max + 1);
        l.truncate(max + 1);
        FibonacciTable { f, l }
    }

    pub fn f(&self, k: usize) -> &BigInt {
        &self.f[k]
    }

    pub fn l(&self, k: usize) -> &BigInt {
        &self.l[k]
    }

    pub fn max_index(&self) -> usize {
        self.f.len() - 1
    }
}

fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Names of the identities checked by [`identity_failures`].
pub const IDENTITIES: [&str; 7] = [
    "cassini: F(k+1)F(k-1) - F(k)^2 = (-1)^k",
    "doubling: F(2k) = F(k)L(k)",
    "lucas: L(k) = F(k-1) + F(k+1)",
    "square: L(4k) + 2 = L(2k)^2",
    "five: L(2k) + 2(-1)^(k+1) = 5F(k)^2",
    "odd-plus: F(k+1)L(k) = F(2k+1) + (-1)^k",
    "odd-minus: L(k+1)F(k) = F(2k+1) - (-1)^k",
];

/// Checks every identity in [`IDENTITIES`] for `1 ≤ k ≤ k_max`; returns the
/// `(identity, k)` pairs that fail.
pub fn identity_failures(k_max: usize) -> Vec<(&'static str, usize)> {
    let t = FibonacciTable::new(4 * k_max + 2);
    let mut failures = Vec::new();
    let five = BigInt::from(5);
    let two = BigInt::from(2);
    for k in 1..=k_max {
        let (f, l) = (|i: usize| t.f(i), |i: usize| t.l(i));
        let checks = [
            f(k + 1) * f(k - 1) - f(k) * f(k) == sign(k),
            *f(2 * k) == f(k) * l(k),
            *l(k) == f(k - 1) + f(k + 1),
            l(4 * k) + &two == l(2 * k) * l(2 * k),
            l(2 * k) - &two * sign(k) == &five * f(k) * f(k),
            f(k + 1) * l(k) == f(2 * k + 1) + sign(k),
            l(k + 1) * f(k) == f(2 * k + 1) - sign(k),
        ];
        for (name, ok) in IDENTITIES.iter().zip(checks) {
            if !ok {
                failures.push((*name, k));
            }
        }
    }
    failures
}
