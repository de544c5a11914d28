//! Sparse integer polynomials in `y0, y1` and reduced fractions of them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::dense::{DensePoly, UniPoly};
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Y0,
    Y1,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::Y0 => Var::Y1,
            Var::Y1 => Var::Y0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Y0 => "y0",
            Var::Y1 => "y1",
        }
    }
}

/// `Z[y1][y0]` or `Z[y0][y1]` in dense recursive form.
pub type Recursive = DensePoly<UniPoly>;

/// Map `(e0, e1) → c` with no zero coefficients. Key order is lexicographic
/// in `(e0, e1)`, so the last key is the leading term in `y0`-major order.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(<BigInt as Ring>::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::Y0 => Self::monomial(<BigInt as Ring>::one(), 1, 0),
            Var::Y1 => Self::monomial(<BigInt as Ring>::one(), 0, 1),
        }
    }

    pub fn monomial(c: BigInt, e0: u32, e1: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e0, e1), c);
        }
        BiPoly { terms }
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms(it: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    pub fn from_i64_terms(terms: &[(i64, u32, u32)]) -> Self {
        Self::from_terms(terms.iter().map(|&(c, e0, e1)| ((e0, e1), BigInt::from(c))))
    }

    fn add_term(&mut self, k: (u32, u32), c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e0: u32, e1: u32) -> BigInt {
        self.terms.get(&(e0, e1)).cloned().unwrap_or_default()
    }

    pub fn degree(&self, v: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(a, b)| if v == Var::Y0 { a } else { b })
            .max()
    }

    /// Coefficient of the `y0`-major leading term.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut acc: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (&(a0, a1), ca) in &self.terms {
            for (&(b0, b1), cb) in &rhs.terms {
                *acc.entry((a0 + b0, a1 + b1)).or_default() += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        BiPoly { terms: acc }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Non-negative gcd of all coefficients.
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(<BigInt as Ring>::zero(), |g, c| Ring::gcd(&g, c))
    }

    /// Swap the roles of `y0` and `y1`.
    pub fn swap_vars(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    /// Dense recursive form with `outer` as the main variable.
    pub fn to_recursive(&self, outer: Var) -> Recursive {
        let Some(deg) = self.degree(outer) else {
            return Recursive::zero();
        };
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); deg as usize + 1];
        for (&(a, b), c) in &self.terms {
            let (o, i) = if outer == Var::Y0 { (a, b) } else { (b, a) };
            let row = &mut rows[o as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, <BigInt as Ring>::zero());
            }
            row[i as usize] = c.clone();
        }
        DensePoly::new(rows.into_iter().map(UniPoly::new).collect())
    }

    pub fn from_recursive(p: &Recursive, outer: Var) -> Self {
        let mut terms = BTreeMap::new();
        for (o, row) in p.coeffs().iter().enumerate() {
            for (i, c) in row.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let key = if outer == Var::Y0 {
                    (o as u32, i as u32)
                } else {
                    (i as u32, o as u32)
                };
                terms.insert(key, c.clone());
            }
        }
        BiPoly { terms }
    }

    /// Univariate view when only `v` occurs.
    pub fn to_uni(&self, v: Var) -> Option<UniPoly> {
        let rec = self.to_recursive(v);
        if rec.coeffs().iter().any(|c| c.degree().unwrap_or(0) > 0) {
            return None;
        }
        Some(rec.map(|c| c.coeff(0)))
    }

    pub fn from_uni(p: &UniPoly, v: Var) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            (if v == Var::Y0 { (k, 0) } else { (0, k) }, c.clone())
        }))
    }

    /// gcd with integer content included, leading coefficient positive.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (a, b) = (self.to_recursive(Var::Y0), rhs.to_recursive(Var::Y0));
        let g = super::gcd::heu_gcd_rec(&a, &b).unwrap_or_else(|| a.gcd_poly(&b));
        Self::from_recursive(&g, Var::Y0)
    }

    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let q = self
            .to_recursive(Var::Y0)
            .exact_div_poly(&rhs.to_recursive(Var::Y0))?;
        Some(Self::from_recursive(&q, Var::Y0))
    }

    pub fn eval(&self, y0: &BigInt, y1: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * y0.pow(a) * y1.pow(b))
            .sum()
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = Signed::is_negative(c);
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut parts = Vec::new();
            if mag != <BigInt as Ring>::one() || (a == 0 && b == 0) {
                parts.push(mag.to_string());
            }
            for (v, e) in [("y0", a), ("y1", b)] {
                match e {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// `num / den` in lowest terms with the denominator's leading coefficient
/// positive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiRat {
    num: BiPoly,
    den: BiPoly,
}

impl BiRat {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return BiRat {
                num,
                den: BiPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g == BiPoly::one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        if den.leading_coeff().is_some_and(|c| Signed::is_negative(c)) {
            num = num.neg();
            den = den.neg();
        }
        BiRat { num, den }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        BiRat {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::reduced(self.num.add(&rhs.num), self.den.clone());
        }
        Self::reduced(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        BiRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(
            self.num.mul(&rhs.den),
            self.den.mul(&rhs.num),
        ))
    }
}
