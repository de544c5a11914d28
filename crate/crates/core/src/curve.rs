//! The twisted trace curve `Tr_{q^n:q}(y) = R_d(x)` and its point counts.
//!
//! `R_d(x) = x + x^q + … + x^{q^{d-2}} + x^{q^{d-1} + q^d - 1}`. An `x` with
//! `R_d(x) ∈ F_q` carries exactly `q^{n-1}` values of `y` (the trace is
//! surjective), so `#C(F_{q^n}) = 1 + q^{n-1} · #{x : R_d(x) ∈ F_q}` with the
//! single point at infinity counted once.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{EnumerationCap, FieldElement, FieldSpec, Scratch};
use crate::number_theory::predict::{predict, Prediction, PredictionStatus};
use crate::number_theory::primes::{is_prime_u64, prime_power};

/// Default limit on `q^{2n}` for the `(x, y)` pair oracle.
pub const AFFINE_PAIR_LIMIT: u128 = 10_000_000;

/// `(q, n, d)` with `q = p^r`, `n ≥ 4`, `d | n`, `1 < d < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveParams {
    p: u64,
    r: u32,
    n: u32,
    d: u32,
}

impl CurveParams {
    pub fn new(p: u64, r: u32, n: u32, d: u32) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::InvalidParams("r must be at least 1".into()));
        }
        if n < 4 {
            return Err(Error::InvalidParams(format!("n = {n} < 4")));
        }
        if d <= 1 || d >= n || n % d != 0 {
            return Err(Error::InvalidParams(format!(
                "d = {d} must divide n = {n} with 1 < d < n"
            )));
        }
        p.checked_pow(r)
            .ok_or_else(|| Error::InvalidParams(format!("q = {p}^{r} overflows")))?;
        Ok(CurveParams { p, r, n, d })
    }

    /// Accepts `q` directly, rejecting anything that is not a prime power.
    pub fn from_q(q: u64, n: u32, d: u32) -> Result<Self> {
        let qb = BigUint::from(q);
        let (p, r) = prime_power(&qb).ok_or(Error::NotPrimePower(qb))?;
        let p = u64::try_from(p).expect("divides a u64");
        Self::new(p, r, n, d)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.r)
    }

    pub fn q_big(&self) -> BigUint {
        BigUint::from(self.q())
    }

    /// `1 + q^{n-1+d}`, the count guaranteed by the subfield `F_{q^d}`.
    pub fn baseline(&self) -> BigUint {
        BigUint::one() + self.q_big().pow(self.n - 1 + self.d)
    }

    /// `(q - 1) q^{n-1}`: the number of points contributed by one `F_q^*`
    /// orbit of bonus `x` values.
    pub fn bonus_unit(&self) -> BigUint {
        let q = self.q_big();
        (&q - 1u32) * q.pow(self.n - 1)
    }
}

/// `g(C) = (q^{n-1} - 1)(q^{d-1} + q^d - 2) / 2`.
pub fn genus(params: &CurveParams) -> BigUint {
    let q = params.q_big();
    let a = q.pow(params.n - 1) - 1u32;
    let b = q.pow(params.d - 1) + q.pow(params.d) - 2u32;
    let numerator = a * b;
    assert!(numerator.is_even(), "genus numerator is always even");
    numerator >> 1u32
}

/// Result of a brute-force count with the predictor that applies, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub p: u64,
    pub r: u32,
    pub q: u64,
    pub n: u32,
    pub d: u32,
    #[serde(with = "crate::decimal")]
    pub brute_count: BigUint,
    pub special_x: u128,
    #[serde(with = "crate::decimal")]
    pub baseline: BigUint,
    #[serde(with = "crate::decimal")]
    pub bonus: BigUint,
    /// `1 + bonus / ((q-1) q^{n-1})` when the division is exact.
    #[serde(with = "crate::decimal::option")]
    pub observed_g: Option<BigUint>,
    #[serde(with = "crate::decimal::option")]
    pub predicted: Option<BigUint>,
    pub predictor_name: String,
    pub prediction: Option<Prediction>,
    pub agrees: Option<bool>,
}

impl CountReport {
    pub fn status(&self) -> PredictionStatus {
        self.prediction
            .as_ref()
            .map(|p| p.status)
            .unwrap_or(PredictionStatus::None)
    }
}

/// `(1 - α^{q+1})^{q^d - 1} = α^{q^{d-1} - 1} (1 - α)^{q^d - 1}`, evaluated in
/// `field` with `q` taken from the field.
pub fn membership_equation(field: &FieldSpec, alpha: &FieldElement, d: u32) -> Result<bool> {
    if alpha.is_zero() || *alpha == field.one() {
        return Err(Error::HypothesisViolated);
    }
    let q = field.q() as u128;
    let qd_minus_1 = q.pow(d) - 1;
    let one = field.one();
    let lhs_base = field.sub(&one, &field.pow_u128(alpha, q + 1));
    let lhs = field.pow_u128(&lhs_base, qd_minus_1);
    let rhs = field.mul(
        &field.pow_u128(alpha, q.pow(d - 1) - 1),
        &field.pow_u128(&field.sub(&one, alpha), qd_minus_1),
    );
    Ok(lhs == rhs)
}

/// A curve together with its ambient field `F_{q^n}`.
#[derive(Clone, Debug)]
pub struct TraceCurve {
    params: CurveParams,
    field: FieldSpec,
}

impl TraceCurve {
    /// Builds `F_{q^n}`; fails if `q^n` exceeds the cap.
    pub fn new(params: CurveParams, cap: &EnumerationCap) -> Result<Self> {
        let size = (params.q() as u128)
            .checked_pow(params.n)
            .ok_or_else(|| Error::InvalidParams("q^n does not fit in 128 bits".into()))?;
        cap.check(size)?;
        let field = FieldSpec::build(params.p, params.r, params.n)?;
        Ok(TraceCurve { params, field })
    }

    /// Uses an existing field, which must be `F_{q^n}` for these parameters.
    pub fn with_field(params: CurveParams, field: FieldSpec) -> Result<Self> {
        if field.p() != params.p || field.r() != params.r || field.n_total() != params.n {
            return Err(Error::InvalidParams("field does not match curve parameters".into()));
        }
        Ok(TraceCurve { params, field })
    }

    pub fn params(&self) -> &CurveParams {
        &self.params
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// `q^{d-1} + q^d - 1`, the exponent of the twisted last term.
    fn twist_exponent(&self) -> u128 {
        let q = self.params.q() as u128;
        q.pow(self.params.d - 1) + q.pow(self.params.d) - 1
    }

    pub fn rd_value(&self, x: &FieldElement) -> FieldElement {
        let mut kernel = RdKernel::new(self);
        kernel.evaluate(x.coeffs());
        self.field.wrap(kernel.value.clone())
    }

    /// `R_d(x) ∈ F_q`.
    pub fn is_special(&self, x: &FieldElement) -> bool {
        RdKernel::new(self).is_special(x.coeffs())
    }

    /// `α = x^{q^d - 1}`.
    pub fn alpha_of(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::AlphaUndefined);
        }
        let q = self.params.q() as u128;
        Ok(self.field.pow_u128(x, q.pow(self.params.d) - 1))
    }

    pub fn membership_equation_holds(&self, alpha: &FieldElement) -> Result<bool> {
        membership_equation(&self.field, alpha, self.params.d)
    }

    fn chunks(&self) -> Vec<(u128, u128)> {
        let total = self.field.cardinality();
        let pieces = (rayon::current_num_threads() as u128 * 8).min(total).max(1);
        let step = total.div_ceil(pieces);
        (0..pieces)
            .map(|i| (i * step, ((i + 1) * step).min(total)))
            .filter(|(a, b)| a < b)
            .collect()
    }

    /// Number of `x ∈ F_{q^n}` with `R_d(x) ∈ F_q`, by full enumeration.
    pub fn special_x_count(&self) -> u128 {
        self.chunks()
            .into_par_iter()
            .map(|(start, end)| {
                let mut kernel = RdKernel::new(self);
                let mut it = self.field.range(start, end);
                let mut count = 0u128;
                while let Some(x) = it.next_slice() {
                    if kernel.is_special(x) {
                        count += 1;
                    }
                }
                count
            })
            .sum()
    }

    /// All `x` with `R_d(x) ∈ F_q`, in index order.
    pub fn special_x(&self) -> Vec<FieldElement> {
        self.chunks()
            .into_par_iter()
            .map(|(start, end)| {
                let mut kernel = RdKernel::new(self);
                let mut it = self.field.range(start, end);
                let mut found = Vec::new();
                while let Some(x) = it.next_slice() {
                    if kernel.is_special(x) {
                        found.push(self.field.wrap(x.to_vec()));
                    }
                }
                found
            })
            .flatten()
            .collect()
    }

    pub fn point_count(&self) -> Result<CountReport> {
        let special_x = self.special_x_count();
        build_report(&self.params, special_x)
    }

    /// Affine points by enumerating every `(x, y)` pair against
    /// `Tr_{q^n:q}(y) = R_d(x)`. Refuses `q^{2n} > 10^7` unless forced.
    pub fn affine_oracle_count(&self, force: bool) -> Result<u128> {
        let size = self.field.cardinality();
        let pairs = size.checked_mul(size).unwrap_or(u128::MAX);
        if !force && pairs > AFFINE_PAIR_LIMIT {
            return Err(Error::CapExceeded {
                size: pairs,
                cap: AFFINE_PAIR_LIMIT as u64,
            });
        }
        let n = self.params.n;
        let cap = EnumerationCap::forced();
        let rd: Vec<u128> = self
            .field
            .enumerate(&cap)?
            .map(|x| self.field.to_index(&self.rd_value(&x)))
            .collect();
        let traces: Vec<u128> = self
            .field
            .enumerate(&cap)?
            .map(|y| {
                let t = self.field.trace_to_base(&y, n, 1).expect("n | n");
                self.field.to_index(&t)
            })
            .collect();
        let mut count = 0u128;
        for rx in &rd {
            for ty in &traces {
                if rx == ty {
                    count += 1;
                }
            }
        }
        Ok(count)
    }
}

/// Assembles a report from the number of special `x`, attaching a predictor.
pub fn build_report(params: &CurveParams, special_x: u128) -> Result<CountReport> {
    let q = params.q_big();
    let brute_count = BigUint::one() + q.pow(params.n - 1) * BigUint::from(special_x);
    let baseline = params.baseline();
    if brute_count < baseline {
        return Err(Error::Invariant(format!(
            "count {brute_count} below subfield baseline {baseline}"
        )));
    }
    let bonus = &brute_count - &baseline;
    let unit = params.bonus_unit();
    let observed_g = if (&bonus % &unit).is_zero() {
        Some(&bonus / &unit + 1u32)
    } else {
        None
    };
    let prediction = predict(&q, params.n, params.d)?;
    let predicted = prediction.predicted_count(&q, params.n, params.d);
    let agrees = predicted.as_ref().map(|v| *v == brute_count);
    let predictor_name = match prediction.status {
        PredictionStatus::None => "none".to_string(),
        status => format!("{} ({})", status.label(), prediction.source),
    };
    Ok(CountReport {
        p: params.p,
        r: params.r,
        q: params.q(),
        n: params.n,
        d: params.d,
        brute_count,
        special_x,
        baseline,
        bonus,
        observed_g,
        predicted,
        predictor_name,
        prediction: if prediction.status == PredictionStatus::None {
            None
        } else {
            Some(prediction)
        },
        agrees,
    })
}

/// Allocation-free evaluator of `R_d` over raw coefficient slices.
struct RdKernel<'a> {
    field: &'a FieldSpec,
    d: u32,
    exponent: u128,
    value: Vec<u64>,
    cur: Vec<u64>,
    next: Vec<u64>,
    last: Vec<u64>,
    scratch: Scratch,
}

impl<'a> RdKernel<'a> {
    fn new(curve: &'a TraceCurve) -> Self {
        let m = curve.field.degree();
        RdKernel {
            field: &curve.field,
            d: curve.params.d,
            exponent: curve.twist_exponent(),
            value: vec![0; m],
            cur: vec![0; m],
            next: vec![0; m],
            last: vec![0; m],
            scratch: Scratch::new(m),
        }
    }

    fn evaluate(&mut self, x: &[u64]) {
        self.value.copy_from_slice(x);
        self.cur.copy_from_slice(x);
        for _ in 0..self.d.saturating_sub(2) {
            self.field.frobenius_slice(&self.cur, &mut self.next);
            std::mem::swap(&mut self.cur, &mut self.next);
            self.field.add_assign_slice(&mut self.value, &self.cur);
        }
        self.field
            .pow_slices(x, self.exponent, &mut self.last, &mut self.scratch);
        self.field.add_assign_slice(&mut self.value, &self.last);
    }

    fn is_special(&mut self, x: &[u64]) -> bool {
        self.evaluate(x);
        self.field.frobenius_slice(&self.value, &mut self.next);
        self.next == self.value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(p: u64, r: u32, n: u32, d: u32) -> TraceCurve {
        TraceCurve::new(CurveParams::new(p, r, n, d).unwrap(), &EnumerationCap::default()).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(CurveParams::new(4, 1, 4, 2).is_err());
        assert!(CurveParams::new(2, 1, 3, 2).is_err());
        assert!(CurveParams::new(2, 1, 6, 4).is_err());
        assert!(CurveParams::new(2, 1, 6, 6).is_err());
        assert!(CurveParams::new(2, 1, 6, 1).is_err());
        assert!(matches!(CurveParams::from_q(6, 4, 2), Err(Error::NotPrimePower(_))));
        let c = CurveParams::from_q(9, 6, 2).unwrap();
        assert_eq!((c.p(), c.r(), c.q()), (3, 2, 9));
    }

    #[test]
    fn genus_values() {
        let g = |p, n, d| genus(&CurveParams::new(p, 1, n, d).unwrap());
        assert_eq!(g(2, 4, 2), BigUint::from(14u32));
        assert_eq!(g(3, 4, 2), BigUint::from(130u32));
        assert_eq!(g(2, 6, 3), BigUint::from(155u32));
    }

    #[test]
    fn special_counts() {
        assert_eq!(curve(2, 1, 4, 2).special_x_count(), 4);
        assert_eq!(curve(3, 1, 4, 2).special_x_count(), 17);
        assert_eq!(curve(2, 1, 6, 3).special_x_count(), 8);
    }

    #[test]
    fn rd_of_zero_is_zero() {
        let c = curve(3, 1, 4, 2);
        assert!(c.rd_value(&c.field().zero()).is_zero());
    }

    #[test]
    fn alpha_errors() {
        let c = curve(3, 1, 4, 2);
        assert!(matches!(c.alpha_of(&c.field().zero()), Err(Error::AlphaUndefined)));
        let one = c.field().one();
        assert!(matches!(c.membership_equation_holds(&one), Err(Error::HypothesisViolated)));
        let zero = c.field().zero();
        assert!(matches!(c.membership_equation_holds(&zero), Err(Error::HypothesisViolated)));
    }

    #[test]
    fn cap_is_enforced() {
        let params = CurveParams::new(13, 1, 6, 2).unwrap();
        let cap = EnumerationCap::new(1000, false);
        assert!(matches!(TraceCurve::new(params, &cap), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn report_fields() {
        let r = curve(3, 1, 4, 2).point_count().unwrap();
        assert_eq!(r.brute_count, BigUint::from(460u32));
        assert_eq!(r.baseline, BigUint::from(244u32));
        assert_eq!(r.observed_g, Some(BigUint::from(5u32)));
        assert_eq!(r.agrees, Some(true));
        let r = curve(2, 1, 4, 2).point_count().unwrap();
        assert_eq!(r.brute_count, BigUint::from(33u32));
        assert_eq!(r.bonus, BigUint::zero());
    }

    #[test]
    fn affine_guard() {
        let c = curve(3, 1, 8, 4);
        assert!(matches!(c.affine_oracle_count(false), Err(Error::CapExceeded { .. })));
        assert_eq!(curve(2, 1, 4, 2).affine_oracle_count(false).unwrap(), 32);
    }
}
