//! Arithmetic in a single ambient extension field `F_p[z]/(f)`.
//!
//! The tower `F_p ⊂ F_q ⊂ F_{q^k} ⊂ F_{q^n}` is never materialized: a subfield
//! is the fixed set of a power of the `q`-Frobenius, and every subfield query
//! goes through the one [`FieldSpec`].
//!
//! Elements are dense little-endian coefficient vectors in the generator `z`.
//! Frobenius is applied as a precomputed `F_p`-linear map, so `x -> x^{q^e}`
//! costs `e` matrix-vector products instead of a long exponentiation.

use std::env;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number_theory::primes::is_prime_u64;

/// Default enumeration cap, in field elements.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 26;

/// Environment variable overriding [`DEFAULT_ENUMERATION_CAP`].
pub const CAP_ENV_VAR: &str = "TRACECURVE_CAP";

/// Guard on exhaustive scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationCap {
    pub limit: u64,
    pub force: bool,
}

impl Default for EnumerationCap {
    fn default() -> Self {
        EnumerationCap {
            limit: DEFAULT_ENUMERATION_CAP,
            force: false,
        }
    }
}

impl EnumerationCap {
    pub fn new(limit: u64, force: bool) -> Self {
        EnumerationCap { limit, force }
    }

    /// Default cap, overridden by `TRACECURVE_CAP` when it parses as an integer.
    pub fn from_env(force: bool) -> Self {
        let limit = env::var(CAP_ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .unwrap_or(DEFAULT_ENUMERATION_CAP);
        EnumerationCap { limit, force }
    }

    pub fn forced() -> Self {
        EnumerationCap {
            limit: DEFAULT_ENUMERATION_CAP,
            force: true,
        }
    }

    pub fn check(&self, size: u128) -> Result<()> {
        if self.force || size <= self.limit as u128 {
            Ok(())
        } else {
            Err(Error::CapExceeded {
                size,
                cap: self.limit,
            })
        }
    }
}

/// An element of the ambient field. Coefficients are always reduced mod `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// The field `F_{p^{r·n_total}}`, seen as `F_{q^{n_total}}` with `q = p^r`.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    p: u64,
    r: u32,
    n_total: u32,
    degree: usize,
    modulus: Vec<u64>,
    neg_modulus: Vec<u64>,
    // column i is the image of z^i under x -> x^q
    q_frobenius: Vec<Vec<u64>>,
    // products of two residues can be summed this many times without overflow
    lazy_terms: u64,
}

impl FieldSpec {
    /// Builds `F_{p^{r·n_total}}` with the first irreducible monic modulus in
    /// lexicographic order (constant term varying fastest).
    pub fn build(p: u64, r: u32, n_total: u32) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 32 {
            return Err(Error::Unsupported(format!("characteristic {p} exceeds 32 bits")));
        }
        if r == 0 || n_total == 0 {
            return Err(Error::BadDegree(format!("r = {r}, n_total = {n_total}")));
        }
        let degree = (r as usize)
            .checked_mul(n_total as usize)
            .ok_or_else(|| Error::BadDegree("degree overflow".into()))?;
        if (p as u128).checked_pow(degree as u32).is_none() {
            return Err(Error::BadDegree(format!("p^{degree} does not fit in 128 bits")));
        }
        let modulus = first_irreducible(p, degree);
        Self::with_modulus(p, r, n_total, modulus)
    }

    /// Builds the field from an explicit monic irreducible modulus.
    pub fn with_modulus(p: u64, r: u32, n_total: u32, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 32 {
            return Err(Error::Unsupported(format!("characteristic {p} exceeds 32 bits")));
        }
        if r == 0 || n_total == 0 {
            return Err(Error::BadDegree(format!("r = {r}, n_total = {n_total}")));
        }
        let degree = r as usize * n_total as usize;
        if modulus.len() != degree + 1 || modulus[degree] != 1 {
            return Err(Error::BadDegree(format!(
                "modulus must be monic of degree {degree}"
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadDegree("modulus coefficients must lie in [0, p)".into()));
        }
        if !poly_fp::is_irreducible(&modulus, p) {
            return Err(Error::BadDegree("modulus is reducible".into()));
        }
        let neg_modulus = modulus[..degree].iter().map(|&c| (p - c) % p).collect();
        let max_product = (p - 1) * (p - 1);
        let lazy_terms = if max_product == 0 {
            u64::MAX
        } else {
            u64::MAX / max_product
        };
        let mut spec = FieldSpec {
            p,
            r,
            n_total,
            degree,
            modulus,
            neg_modulus,
            q_frobenius: Vec::new(),
            lazy_terms,
        };
        let q = p
            .checked_pow(r)
            .ok_or_else(|| Error::BadDegree(format!("q = {p}^{r} overflows")))?;
        let z = spec.generator();
        let zq = spec.pow_u128(&z, q as u128);
        let mut columns = Vec::with_capacity(degree);
        let mut col = spec.one();
        for _ in 0..degree {
            columns.push(col.coeffs.clone());
            col = spec.mul(&col, &zq);
        }
        spec.q_frobenius = columns;
        Ok(spec)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n_total(&self) -> u32 {
        self.n_total
    }

    /// Degree of the ambient field over `F_p`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.r)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Number of elements, `p^{r·n_total}`.
    pub fn cardinality(&self) -> u128 {
        (self.p as u128).pow(self.degree as u32)
    }

    /// `q^k`, the size of the subfield fixed by the `k`-th power of Frobenius
    /// when `k` divides `n_total`.
    pub fn subfield_size(&self, k: u32) -> u128 {
        (self.q() as u128).pow(k)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.degree],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_base(1)
    }

    /// The prime-field element `c mod p`.
    pub fn from_base(&self, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.degree];
        coeffs[0] = c % self.p;
        FieldElement { coeffs }
    }

    /// The class of `z`.
    pub fn generator(&self) -> FieldElement {
        if self.degree == 1 {
            // z ≡ -f_0 when the modulus is linear
            return self.from_base(self.neg_modulus[0]);
        }
        let mut coeffs = vec![0; self.degree];
        coeffs[1] = 1;
        FieldElement { coeffs }
    }

    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.degree {
            return Err(Error::BadDegree(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.degree
            )));
        }
        let mut out = vec![0; self.degree];
        for (o, &c) in out.iter_mut().zip(coeffs) {
            *o = c % self.p;
        }
        Ok(FieldElement { coeffs: out })
    }

    /// Element whose base-`p` digits (constant term first) spell `index`.
    pub fn from_index(&self, mut index: u128) -> FieldElement {
        let p = self.p as u128;
        let mut coeffs = vec![0; self.degree];
        for c in coeffs.iter_mut() {
            *c = (index % p) as u64;
            index /= p;
        }
        FieldElement { coeffs }
    }

    pub fn to_index(&self, a: &FieldElement) -> u128 {
        a.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * self.p as u128 + c as u128)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut out = a.coeffs.clone();
        self.add_assign_slice(&mut out, &b.coeffs);
        FieldElement { coeffs: out }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| if x >= y { x - y } else { x + p - y })
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let p = self.p;
        let coeffs = a.coeffs.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect();
        FieldElement { coeffs }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut out = vec![0; self.degree];
        let mut scratch = vec![0; 2 * self.degree];
        self.mul_slices(&a.coeffs, &b.coeffs, &mut out, &mut scratch);
        FieldElement { coeffs: out }
    }

    pub fn square(&self, a: &FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn scale(&self, a: &FieldElement, c: u64) -> FieldElement {
        let c = c % self.p;
        let p = self.p;
        FieldElement {
            coeffs: a.coeffs.iter().map(|&x| mul_mod(x, c, p)).collect(),
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = poly_fp::inverse_mod(&a.coeffs, &self.modulus, self.p)
            .ok_or(Error::DivisionByZero)?;
        self.element(&inv)
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let b_inv = self.inv(b)?;
        Ok(self.mul(a, &b_inv))
    }

    /// `a^e` by square-and-multiply.
    pub fn pow(&self, a: &FieldElement, e: &BigUint) -> FieldElement {
        match e.to_u128() {
            Some(small) => self.pow_u128(a, small),
            None => {
                // reduce the exponent modulo the multiplicative group order
                if a.is_zero() {
                    return self.zero();
                }
                let order = BigUint::from(self.cardinality() - 1);
                let reduced = (e % &order).to_u128().expect("reduced exponent fits");
                self.pow_u128(a, reduced)
            }
        }
    }

    pub fn pow_u128(&self, a: &FieldElement, e: u128) -> FieldElement {
        let mut out = vec![0; self.degree];
        let mut scratch = Scratch::new(self.degree);
        self.pow_slices(&a.coeffs, e, &mut out, &mut scratch);
        FieldElement { coeffs: out }
    }

    /// `a^{q^e}`.
    pub fn frobenius(&self, a: &FieldElement, e: u32) -> FieldElement {
        let mut cur = a.coeffs.clone();
        let mut next = vec![0; self.degree];
        for _ in 0..(e % self.n_total) {
            self.frobenius_slice(&cur, &mut next);
            std::mem::swap(&mut cur, &mut next);
        }
        FieldElement { coeffs: cur }
    }

    fn check_tower(&self, m: u32, k: u32) -> Result<()> {
        if k == 0 || m == 0 || m % k != 0 {
            return Err(Error::NotDivisor { k, m });
        }
        if self.n_total % m != 0 {
            return Err(Error::NotDivisor {
                k: m,
                m: self.n_total,
            });
        }
        Ok(())
    }

    /// `Tr_{q^m : q^k}(a) = Σ_{i < m/k} a^{q^{k i}}`, for `a ∈ F_{q^m}`.
    pub fn trace_to_base(&self, a: &FieldElement, m: u32, k: u32) -> Result<FieldElement> {
        self.check_tower(m, k)?;
        let mut acc = a.clone();
        let mut cur = a.clone();
        for _ in 1..(m / k) {
            cur = self.frobenius(&cur, k);
            acc = self.add(&acc, &cur);
        }
        Ok(acc)
    }

    /// `N_{q^m : q^k}(a) = Π_{i < m/k} a^{q^{k i}}`, for `a ∈ F_{q^m}`.
    pub fn norm_to_base(&self, a: &FieldElement, m: u32, k: u32) -> Result<FieldElement> {
        self.check_tower(m, k)?;
        let mut acc = a.clone();
        let mut cur = a.clone();
        for _ in 1..(m / k) {
            cur = self.frobenius(&cur, k);
            acc = self.mul(&acc, &cur);
        }
        Ok(acc)
    }

    /// `a ∈ F_{q^k}`, i.e. `a^{q^k} = a`.
    pub fn in_subfield(&self, a: &FieldElement, k: u32) -> bool {
        self.frobenius(a, k) == *a
    }

    /// Multiplicative order of a nonzero element, by trial over divisors of
    /// `|F|-1`.
    pub fn multiplicative_order(&self, a: &FieldElement) -> Result<u128> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let group = self.cardinality() - 1;
        let mut order = group;
        for (prime, _) in crate::number_theory::primes::factor_u128(group) {
            while order % prime == 0 && self.pow_u128(a, order / prime) == self.one() {
                order /= prime;
            }
        }
        Ok(order)
    }

    /// All elements, in index order.
    pub fn enumerate(&self, cap: &EnumerationCap) -> Result<Elements<'_>> {
        cap.check(self.cardinality())?;
        Ok(self.range(0, self.cardinality()))
    }

    /// Elements with index in `[start, end)`; used for partitioned scans.
    pub fn range(&self, start: u128, end: u128) -> Elements<'_> {
        let end = end.min(self.cardinality());
        Elements {
            spec: self,
            digits: self.from_index(start).coeffs,
            next: start,
            end,
            started: false,
        }
    }

    // ---- slice-level kernels shared with the enumeration hot paths ----

    pub(crate) fn add_assign_slice(&self, acc: &mut [u64], b: &[u64]) {
        let p = self.p;
        for (x, &y) in acc.iter_mut().zip(b) {
            let s = *x + y;
            *x = if s >= p { s - p } else { s };
        }
    }

    pub(crate) fn mul_slices(&self, a: &[u64], b: &[u64], out: &mut [u64], scratch: &mut [u64]) {
        let m = self.degree;
        let p = self.p;
        let t = &mut scratch[..2 * m];
        t.iter_mut().for_each(|v| *v = 0);
        let lazy = self.lazy_terms >= 2 * m as u64 + 1;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if lazy {
                    t[i + j] += ai * bj;
                } else {
                    t[i + j] = (t[i + j] + mul_mod(ai, bj, p)) % p;
                }
            }
        }
        for top in (m..2 * m - 1).rev() {
            let c = t[top] % p;
            t[top] = 0;
            if c == 0 {
                continue;
            }
            let base = top - m;
            for (j, &nf) in self.neg_modulus.iter().enumerate() {
                if lazy {
                    t[base + j] += c * nf;
                } else {
                    t[base + j] = (t[base + j] + mul_mod(c, nf, p)) % p;
                }
            }
        }
        for (o, &v) in out.iter_mut().zip(t.iter()) {
            *o = v % p;
        }
    }

    pub(crate) fn frobenius_slice(&self, a: &[u64], out: &mut [u64]) {
        let p = self.p;
        let lazy = self.lazy_terms >= self.degree as u64 + 1;
        out.iter_mut().for_each(|v| *v = 0);
        for (&ai, col) in a.iter().zip(&self.q_frobenius) {
            if ai == 0 {
                continue;
            }
            for (o, &c) in out.iter_mut().zip(col) {
                if lazy {
                    *o += ai * c;
                } else {
                    *o = (*o + mul_mod(ai, c, p)) % p;
                }
            }
        }
        out.iter_mut().for_each(|v| *v %= p);
    }

    pub(crate) fn pow_slices(&self, a: &[u64], mut e: u128, out: &mut [u64], s: &mut Scratch) {
        let all_zero = a.iter().all(|&c| c == 0);
        if all_zero {
            out.iter_mut().for_each(|v| *v = 0);
            if e == 0 {
                out[0] = 1;
            }
            return;
        }
        let group = self.cardinality() - 1;
        if e >= group {
            e %= group;
        }
        out.iter_mut().for_each(|v| *v = 0);
        out[0] = 1;
        s.base.copy_from_slice(a);
        while e > 0 {
            if e & 1 == 1 {
                self.mul_slices(out, &s.base, &mut s.tmp, &mut s.wide);
                out.copy_from_slice(&s.tmp);
            }
            e >>= 1;
            if e > 0 {
                self.mul_slices(&s.base, &s.base, &mut s.tmp, &mut s.wide);
                s.base.copy_from_slice(&s.tmp);
            }
        }
    }

    pub(crate) fn wrap(&self, coeffs: Vec<u64>) -> FieldElement {
        debug_assert_eq!(coeffs.len(), self.degree);
        FieldElement { coeffs }
    }
}

/// Reusable buffers for [`FieldSpec::pow_slices`].
pub(crate) struct Scratch {
    base: Vec<u64>,
    tmp: Vec<u64>,
    wide: Vec<u64>,
}

impl Scratch {
    pub(crate) fn new(degree: usize) -> Self {
        Scratch {
            base: vec![0; degree],
            tmp: vec![0; degree],
            wide: vec![0; 2 * degree],
        }
    }
}

/// Odometer over field elements in index order.
pub struct Elements<'a> {
    spec: &'a FieldSpec,
    digits: Vec<u64>,
    next: u128,
    end: u128,
    started: bool,
}

impl<'a> Elements<'a> {
    /// Advances and exposes the current element without allocating.
    pub fn next_slice(&mut self) -> Option<&[u64]> {
        if self.next >= self.end {
            return None;
        }
        if self.started {
            let p = self.spec.p;
            for d in self.digits.iter_mut() {
                *d += 1;
                if *d < p {
                    break;
                }
                *d = 0;
            }
        }
        self.started = true;
        self.next += 1;
        Some(&self.digits)
    }
}

impl<'a> Iterator for Elements<'a> {
    type Item = FieldElement;

    fn next(&mut self) -> Option<FieldElement> {
        self.next_slice().map(|s| FieldElement { coeffs: s.to_vec() })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next.min(self.end)) as usize;
        (left, Some(left))
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// First monic irreducible polynomial of degree `m` over `F_p`, searching
/// with the constant coefficient varying fastest.
pub fn first_irreducible(p: u64, m: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; m + 1];
    coeffs[m] = 1;
    loop {
        if poly_fp::is_irreducible(&coeffs, p) {
            return coeffs;
        }
        // odometer over the non-leading coefficients
        let mut i = 0;
        loop {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
            assert!(i < m, "irreducible polynomials of every degree exist");
        }
    }
}

/// Irreducibility test for a monic polynomial over `F_p`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    poly_fp::is_irreducible(f, p)
}

/// Dense polynomials over `F_p`, little-endian, trimmed (no trailing zeros).
pub(crate) mod poly_fp {
    use super::{mul_mod, pow_mod};
    use crate::number_theory::primes::factor_u128;

    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn degree(a: &[u64]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out: Vec<u64> = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Returns `(quotient, remainder)`; `b` must be nonzero.
    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let db = degree(b).expect("nonzero divisor");
        let lead_inv = pow_mod(b[db], p - 2, p);
        let mut rem = a.to_vec();
        trim(&mut rem);
        if rem.len() <= db {
            return (Vec::new(), rem);
        }
        let mut quot = vec![0u64; rem.len() - db];
        while let Some(dr) = degree(&rem) {
            if dr < db {
                break;
            }
            let c = mul_mod(rem[dr], lead_inv, p);
            let shift = dr - db;
            quot[shift] = c;
            for (j, &bj) in b[..=db].iter().enumerate() {
                let t = mul_mod(c, bj, p);
                rem[shift + j] = (rem[shift + j] + p - t) % p;
            }
            trim(&mut rem);
        }
        trim(&mut quot);
        (quot, rem)
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        divrem(a, b, p).1
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        // monic
        if let Some(&lead) = x.last() {
            let inv = pow_mod(lead, p - 2, p);
            for c in x.iter_mut() {
                *c = mul_mod(*c, inv, p);
            }
        }
        x
    }

    pub fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        rem(&mul(a, b, p), f, p)
    }

    pub fn powmod(a: &[u64], mut e: u128, f: &[u64], p: u64) -> Vec<u64> {
        let mut acc = rem(&[1], f, p);
        let mut base = rem(a, f, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &base, f, p);
            }
            e >>= 1;
            if e > 0 {
                base = mulmod(&base, &base, f, p);
            }
        }
        acc
    }

    /// Inverse of `a` modulo `f` by the extended Euclidean algorithm.
    pub fn inverse_mod(a: &[u64], f: &[u64], p: u64) -> Option<Vec<u64>> {
        let mut r0 = f.to_vec();
        let mut r1 = rem(a, f, p);
        trim(&mut r0);
        let mut s0: Vec<u64> = Vec::new();
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            let s = sub(&s0, &mul(&q, &s1, p), p);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.len() != 1 {
            return None;
        }
        let inv = pow_mod(r0[0], p - 2, p);
        let mut out: Vec<u64> = s0.iter().map(|&c| mul_mod(c, inv, p)).collect();
        out.resize(f.len() - 1, 0);
        Some(out)
    }

    /// `f` of degree `m` is irreducible iff `x^{p^m} ≡ x (mod f)` and
    /// `gcd(x^{p^{m/l}} - x, f) = 1` for every prime `l | m`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let mut f = f.to_vec();
        trim(&mut f);
        let Some(m) = degree(&f) else {
            return false;
        };
        if m == 0 {
            return false;
        }
        if f[m] != 1 {
            return false;
        }
        let x = rem(&[0, 1], &f, p);
        // frob[k] = x^{p^k} mod f
        let mut frob = Vec::with_capacity(m + 1);
        frob.push(x.clone());
        for k in 1..=m {
            let next = powmod(&frob[k - 1], p as u128, &f, p);
            frob.push(next);
        }
        if frob[m] != x {
            return false;
        }
        factor_u128(m as u128).into_iter().all(|(l, _)| {
            let h = sub(&frob[m / l as usize], &x, p);
            gcd(&h, &f, p).len() == 1
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_fields_have_expected_moduli() {
        let f2 = FieldSpec::build(2, 1, 1).unwrap();
        assert_eq!(f2.modulus(), &[0, 1]);
        let f4 = FieldSpec::build(2, 1, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn rejects_composite_and_zero_degree() {
        assert!(matches!(FieldSpec::build(4, 1, 2), Err(Error::NotPrime(4))));
        assert!(matches!(FieldSpec::build(3, 0, 2), Err(Error::BadDegree(_))));
        assert!(matches!(FieldSpec::build(3, 1, 0), Err(Error::BadDegree(_))));
    }

    #[test]
    fn f4_products_and_frobenius() {
        let f4 = FieldSpec::build(2, 1, 2).unwrap();
        let z = f4.generator();
        let z1 = f4.add(&z, &f4.one());
        assert_eq!(f4.mul(&z, &z1), f4.one());
        assert_eq!(f4.frobenius(&z, 1), z1);
        assert_eq!(f4.trace_to_base(&z, 2, 1).unwrap(), f4.one());
        assert!(!f4.in_subfield(&z, 1));
        assert!(f4.in_subfield(&f4.zero(), 1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = FieldSpec::build(3, 1, 2).unwrap();
        let a = f.generator();
        assert!(matches!(f.div(&a, &f.zero()), Err(Error::DivisionByZero)));
        assert!(matches!(f.inv(&f.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn pow_edge_cases() {
        let f = FieldSpec::build(3, 1, 4).unwrap();
        let g = f.from_index(17);
        assert_eq!(f.pow(&g, &BigUint::from(0u32)), f.one());
        assert_eq!(f.pow(&f.zero(), &BigUint::from(0u32)), f.one());
        assert_eq!(f.pow(&g, &BigUint::from(81u32)), g);
        assert_eq!(f.pow(&g, &BigUint::from(80u32)), f.one());
        let huge = BigUint::from(80u32).pow(40) + 1u32;
        assert_eq!(f.pow(&g, &huge), g);
    }

    #[test]
    fn enumeration_counts_and_cap() {
        let f = FieldSpec::build(3, 1, 4).unwrap();
        let all: HashSet<_> = f.enumerate(&EnumerationCap::default()).unwrap().collect();
        assert_eq!(all.len(), 81);
        let tight = EnumerationCap::new(80, false);
        assert!(matches!(f.enumerate(&tight), Err(Error::CapExceeded { .. })));
        assert_eq!(f.enumerate(&EnumerationCap::new(80, true)).unwrap().count(), 81);
        let mid: Vec<_> = f.range(10, 13).collect();
        assert_eq!(mid, vec![f.from_index(10), f.from_index(11), f.from_index(12)]);
    }

    #[test]
    fn tower_divisibility_errors() {
        let f = FieldSpec::build(3, 1, 4).unwrap();
        let a = f.generator();
        assert!(matches!(f.trace_to_base(&a, 4, 3), Err(Error::NotDivisor { .. })));
        assert!(matches!(f.norm_to_base(&a, 3, 1), Err(Error::NotDivisor { .. })));
    }

    #[test]
    fn nonprime_extension_of_prime_power_base() {
        // F_4 as base: q = 4, n_total = 3 gives F_64
        let f = FieldSpec::build(2, 2, 3).unwrap();
        assert_eq!(f.q(), 4);
        assert_eq!(f.cardinality(), 64);
        let count = f
            .enumerate(&EnumerationCap::default())
            .unwrap()
            .filter(|a| f.in_subfield(a, 1))
            .count();
        assert_eq!(count, 4);
    }

    #[test]
    fn multiplicative_order_of_generator_divides_group() {
        let f = FieldSpec::build(3, 1, 4).unwrap();
        for a in f.enumerate(&EnumerationCap::default()).unwrap().skip(1) {
            let ord = f.multiplicative_order(&a).unwrap();
            assert_eq!(80 % ord, 0);
            assert_eq!(f.pow_u128(&a, ord), f.one());
        }
    }
}
