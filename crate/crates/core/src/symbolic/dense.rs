//! Dense univariate polynomials over any [`Ring`], coefficients stored
//! lowest degree first with no trailing zeros.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::ring::Ring;

#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct DensePoly<R> {
    coeffs: Vec<R>,
}

/// Integer polynomials in one variable.
pub type UniPoly = DensePoly<BigInt>;

impl<R: Ring> DensePoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        DensePoly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            o.add_assign(s);
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.coeffs.clone();
        if out.len() < rhs.coeffs.len() {
            out.resize(rhs.coeffs.len(), R::zero());
        }
        for (o, s) in out.iter_mut().zip(&rhs.coeffs) {
            o.sub_assign(s);
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        DensePoly {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_mul_assign(a, b);
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DensePoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        Ring::pow(self, e)
    }

    /// Divide every coefficient by `c`; `None` unless all divisions are exact.
    pub fn div_scalar(&self, c: &R) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|a| a.exact_div(c))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Pseudo-remainder: `lc(b)^{deg a − deg b + 1}·a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.lc().expect("nonzero");
        let mut r = self.coeffs.clone();
        let mut steps = 0u32;
        let mut top = da;
        loop {
            // r ← lb·r − r_top·x^{top−db}·b
            let lr = r[top].clone();
            for c in r.iter_mut().take(top + 1) {
                *c = c.mul(lb);
            }
            let off = top - db;
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[off + j].sub_mul_assign(&lr, bj);
            }
            debug_assert!(r[top].is_zero());
            r.truncate(top);
            steps += 1;
            while r.last().is_some_and(Ring::is_zero) {
                r.pop();
            }
            match r.len().checked_sub(1) {
                Some(t) if t >= db => top = t,
                _ => break,
            }
        }
        let missing = (da - db + 1) as u32 - steps;
        let out = Self::new(r);
        if missing > 0 {
            out.scale(&lb.pow(missing))
        } else {
            out
        }
    }

    /// `Some(q)` with `self = q·b` exactly.
    pub fn exact_div_poly(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let Some(da) = self.degree() else {
            return Some(Self::zero());
        };
        if da < db {
            return None;
        }
        let lb = b.lc().expect("nonzero");
        let mut r = self.coeffs.clone();
        let mut q = vec![R::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = r[i + db].exact_div(lb)?;
            if !c.is_zero() {
                for (j, bj) in b.coeffs.iter().enumerate() {
                    r[i + j].sub_mul_assign(&c, bj);
                }
            }
            q[i] = c;
        }
        r.iter().all(Ring::is_zero).then(|| Self::new(q))
    }

    /// gcd of the coefficients, sign-normalized; zero for the zero polynomial.
    pub fn content(&self) -> R {
        let mut g = R::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g == R::one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.div_scalar(&self.content()).expect("content divides")
    }

    /// gcd over the coefficient ring via the primitive remainder sequence.
    pub fn gcd_poly(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone().normalized();
        }
        if rhs.is_zero() {
            return self.clone().normalized();
        }
        let c = self.content().gcd(&rhs.content());
        let (mut f, mut g) = (self.primitive_part(), rhs.primitive_part());
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = f.pseudo_rem(&g);
            f = g;
            g = r.primitive_part();
        }
        let f = if f.degree() == Some(0) {
            Self::constant(R::one())
        } else {
            f
        };
        f.scale(&c).normalized()
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x);
            acc.add_assign(c);
        }
        acc
    }

    /// Apply `f` to every coefficient.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> DensePoly<S> {
        DensePoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> Ring for DensePoly<R> {
    fn zero() -> Self {
        DensePoly::zero()
    }

    fn one() -> Self {
        DensePoly::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        DensePoly::add(self, rhs)
    }

    fn sub(&self, rhs: &Self) -> Self {
        DensePoly::sub(self, rhs)
    }

    fn mul(&self, rhs: &Self) -> Self {
        DensePoly::mul(self, rhs)
    }

    fn neg(&self) -> Self {
        DensePoly::neg(self)
    }

    fn add_assign(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), R::zero());
        }
        for (o, s) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            o.add_assign(s);
        }
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }

    fn sub_assign(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), R::zero());
        }
        for (o, s) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            o.sub_assign(s);
        }
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let need = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, R::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                self.coeffs[i + j].add_mul_assign(x, y);
            }
        }
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let need = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, R::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                self.coeffs[i + j].sub_mul_assign(x, y);
            }
        }
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.exact_div_poly(rhs)
    }

    fn gcd(&self, rhs: &Self) -> Self {
        self.gcd_poly(rhs)
    }

    fn lead_negative(&self) -> bool {
        self.lc().is_some_and(Ring::lead_negative)
    }
}

impl UniPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !Ring::is_zero(*c)).count()
    }

    /// Exponent of the largest power of `x` dividing `self`.
    pub fn x_adic_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !Ring::is_zero(c))
    }

    /// Coefficients reduced into `[0, p)`.
    pub fn residues(&self, p: u64) -> Vec<u64> {
        let m = BigInt::from(p);
        self.coeffs
            .iter()
            .map(|c| {
                let r = ((c % &m) + &m) % &m;
                u64::try_from(r).expect("residue below p")
            })
            .collect()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Ring::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == BigInt::from(1);
            match k {
                0 => write!(f, "{mag}")?,
                _ if unit => {}
                _ => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(p(&[-1, 1]).mul(&p(&[1, 1])), a);
        assert_eq!(a.add(&UniPoly::zero()), a);
        assert_eq!(a.sub(&a), UniPoly::zero());
        assert_eq!(a.degree(), Some(2));
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[3, 0, 2]).shift(2), p(&[0, 0, 3, 0, 2]));
        assert_eq!(a.eval(&BigInt::from(5)), BigInt::from(24));
    }

    #[test]
    fn division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.exact_div_poly(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(a.exact_div_poly(&p(&[2, 1])), None);
        assert_eq!(p(&[2, 4]).exact_div_poly(&p(&[2])), Some(p(&[1, 2])));
        // 4(x^2) mod (2x + 1) as a pseudo-remainder: lc^2·x^2 = (2x−1)(2x+1) + 1
        assert_eq!(p(&[0, 0, 1]).pseudo_rem(&p(&[1, 2])), p(&[1]));
    }

    #[test]
    fn gcd_and_content() {
        let common = p(&[1, 1, 1]);
        let a = common.mul(&p(&[-2, 3])).scale(&BigInt::from(6));
        let b = common.mul(&p(&[5, 0, 1])).scale(&BigInt::from(-4));
        assert_eq!(a.gcd_poly(&b), common.scale(&BigInt::from(2)));
        assert_eq!(a.content(), BigInt::from(6));
        assert_eq!(p(&[3, 6]).gcd_poly(&UniPoly::zero()), p(&[3, 6]));
        assert_eq!(p(&[-3, -6]).gcd_poly(&UniPoly::zero()), p(&[3, 6]));
        assert_eq!(p(&[1, 1]).gcd_poly(&p(&[-1, 1])), p(&[1]));
    }

    #[test]
    fn nested_ring() {
        // (u + v)(u − v) over Z[u][v]
        let u = DensePoly::constant(p(&[0, 1]));
        let v: DensePoly<UniPoly> = DensePoly::x();
        let prod = u.add(&v).mul(&u.sub(&v));
        assert_eq!(prod.exact_div_poly(&u.add(&v)), Some(u.sub(&v)));
        let g = prod.gcd_poly(&u.add(&v).mul(&v));
        assert_eq!(g, u.add(&v));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1, 0, 2]).to_string(), "2*y^3 - y + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-y");
    }
}
