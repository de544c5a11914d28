//! Exhaustive scans for the `d = 2` relation `α^{q+2} = 1`.
//!
//! A scan visits every `α ∉ {0, 1}` of a field, keeps those satisfying the
//! membership equation (and, for the second form, `α^{(q^n-1)/(q^2-1)} = 1`),
//! and records each one with `α^{q+2} ≠ 1` as a counterexample. Hits are
//! results, never panics: each carries enough context to be re-checked from
//! scratch with [`recheck`].

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::curve::membership_equation;
use crate::error::{Error, Result};
use crate::field::{EnumerationCap, FieldElement, FieldSpec};
use crate::number_theory::primes::prime_power;

const D: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjectureForm {
    /// The membership equation alone implies `α^{q+2} = 1`.
    MembershipOnly,
    /// The membership equation plus `α^{(q^n-1)/(q^2-1)} = 1` imply it.
    WithNormCondition,
}

impl ConjectureForm {
    pub fn label(self) -> &'static str {
        match self {
            ConjectureForm::MembershipOnly => "1",
            ConjectureForm::WithNormCondition => "2",
        }
    }
}

/// A re-checkable witness against `α^{q+2} = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub form: ConjectureForm,
    pub p: u64,
    pub r: u32,
    /// Degree of the scanned field over `F_q`.
    pub m: u32,
    pub modulus: Vec<u64>,
    pub alpha: Vec<u64>,
    pub alpha_order: u128,
    /// `α^{q+2}`, which is not 1.
    pub alpha_q_plus_2: Vec<u64>,
    /// True when `α` already lies in `F_q`.
    pub alpha_in_base_field: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOutcome {
    pub form: ConjectureForm,
    pub q: u64,
    pub m: u32,
    /// Number of `α` that passed the side conditions and were tested.
    pub candidates: u128,
    /// Candidates satisfying the membership equation.
    pub satisfying: u128,
    pub counterexamples: Vec<Counterexample>,
}

impl ScanOutcome {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn split_q(q: u64) -> Result<(u64, u32)> {
    let qb = BigUint::from(q);
    let (p, r) = prime_power(&qb).ok_or(Error::NotPrimePower(qb))?;
    Ok((u64::try_from(p).expect("divides a u64"), r))
}

fn scan(
    form: ConjectureForm,
    q: u64,
    m: u32,
    cap: &EnumerationCap,
    side_condition: impl Fn(&FieldSpec, &FieldElement) -> bool,
) -> Result<ScanOutcome> {
    let (p, r) = split_q(q)?;
    let size = (q as u128)
        .checked_pow(m)
        .ok_or_else(|| Error::InvalidParams("q^m does not fit in 128 bits".into()))?;
    cap.check(size)?;
    let field = FieldSpec::build(p, r, m)?;
    let one = field.one();
    let q128 = q as u128;
    let mut outcome = ScanOutcome {
        form,
        q,
        m,
        candidates: 0,
        satisfying: 0,
        counterexamples: Vec::new(),
    };
    for alpha in field.enumerate(cap)? {
        if alpha.is_zero() || alpha == one || !side_condition(&field, &alpha) {
            continue;
        }
        outcome.candidates += 1;
        if !membership_equation(&field, &alpha, D)? {
            continue;
        }
        outcome.satisfying += 1;
        let power = field.pow_u128(&alpha, q128 + 2);
        if power != one {
            outcome.counterexamples.push(Counterexample {
                form,
                p,
                r,
                m,
                modulus: field.modulus().to_vec(),
                alpha_order: field.multiplicative_order(&alpha)?,
                alpha_q_plus_2: power.coeffs().to_vec(),
                alpha_in_base_field: field.in_subfield(&alpha, 1),
                alpha: alpha.coeffs().to_vec(),
            });
        }
    }
    Ok(outcome)
}

/// Scans every `α ∈ F_{q^m} \ {0, 1}` for the membership-only form.
pub fn conjecture1_scan(q: u64, m: u32, cap: &EnumerationCap) -> Result<ScanOutcome> {
    scan(ConjectureForm::MembershipOnly, q, m, cap, |_, _| true)
}

/// Scans `α ∈ F_{q^n} \ {0, 1}` with `α^{(q^n-1)/(q^2-1)} = 1`.
pub fn conjecture2_scan(q: u64, n: u32, cap: &EnumerationCap) -> Result<ScanOutcome> {
    if n % 2 != 0 || n < 4 {
        return Err(Error::InvalidParams(format!("n = {n} must be even and ≥ 4")));
    }
    let q128 = q as u128;
    let exponent = (q128.pow(n) - 1) / (q128 * q128 - 1);
    scan(ConjectureForm::WithNormCondition, q, n, cap, move |f, a| {
        f.pow_u128(a, exponent) == f.one()
    })
}

/// Rebuilds the field from the stored modulus and re-verifies every claim.
pub fn recheck(c: &Counterexample) -> Result<bool> {
    let field = FieldSpec::with_modulus(c.p, c.r, c.m, c.modulus.clone())?;
    let alpha = field.element(&c.alpha)?;
    let one = field.one();
    if alpha.is_zero() || alpha == one {
        return Ok(false);
    }
    let q = field.q() as u128;
    if c.form == ConjectureForm::WithNormCondition {
        let exponent = (q.pow(c.m) - 1) / (q * q - 1);
        if field.pow_u128(&alpha, exponent) != one {
            return Ok(false);
        }
    }
    let power = field.pow_u128(&alpha, q + 2);
    Ok(membership_equation(&field, &alpha, D)?
        && power != one
        && power.coeffs() == c.alpha_q_plus_2.as_slice()
        && field.multiplicative_order(&alpha)? == c.alpha_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_scans_run() {
        let cap = EnumerationCap::default();
        let s = conjecture2_scan(3, 4, &cap).unwrap();
        assert!(s.is_clean());
        assert!(s.satisfying > 0);
        let s = conjecture1_scan(3, 4, &cap).unwrap();
        assert_eq!(s.candidates, 79);
        for c in &s.counterexamples {
            assert!(recheck(c).unwrap());
        }
    }

    #[test]
    fn rejects_bad_input() {
        let cap = EnumerationCap::default();
        assert!(matches!(conjecture1_scan(6, 4, &cap), Err(Error::NotPrimePower(_))));
        assert!(conjecture2_scan(3, 5, &cap).is_err());
        let tight = EnumerationCap::new(10, false);
        assert!(matches!(conjecture1_scan(3, 4, &tight), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn tampered_artifact_fails_recheck() {
        let cap = EnumerationCap::default();
        let s = conjecture1_scan(5, 4, &cap).unwrap();
        if let Some(c) = s.counterexamples.first() {
            let mut bad = c.clone();
            bad.alpha_order += 1;
            assert!(!recheck(&bad).unwrap());
        }
    }
}
