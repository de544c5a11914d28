//! The minimal commutative-ring interface the polynomial code is generic over.
//!
//! Implemented for `BigInt` and, recursively, for `DensePoly<R>`, so
//! `DensePoly<DensePoly<BigInt>>` is `Z[u][v]` with the same algorithms.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub trait Ring: Clone + PartialEq + Eq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self = self.sub(rhs);
    }

    /// `self += a·b`.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        self.add_assign(&a.mul(b));
    }

    /// `self -= a·b`.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        self.sub_assign(&a.mul(b));
    }

    /// `Some(q)` with `self = q·rhs`, `None` if `rhs` does not divide `self`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// A greatest common divisor with non-negative leading sign.
    fn gcd(&self, rhs: &Self) -> Self;

    /// Sign of the innermost leading integer coefficient.
    fn lead_negative(&self) -> bool;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiply by −1 if the leading sign is negative.
    fn normalized(self) -> Self {
        if self.lead_negative() {
            self.neg()
        } else {
            self
        }
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self -= rhs;
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }

    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }

    fn lead_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigint_ring() {
        let a = BigInt::from(-12);
        let b = BigInt::from(18);
        assert_eq!(Ring::gcd(&a, &b), BigInt::from(6));
        assert_eq!(a.exact_div(&BigInt::from(4)), Some(BigInt::from(-3)));
        assert_eq!(a.exact_div(&BigInt::from(5)), None);
        assert_eq!(a.exact_div(&BigInt::from(0)), None);
        assert_eq!(Ring::pow(&BigInt::from(3), 5), BigInt::from(243));
        assert_eq!(a.normalized(), BigInt::from(12));
    }
}
