//! Two independent resultant routes.
//!
//! - [`Strategy::SubresultantPrs`]: the subresultant remainder sequence over
//!   the coefficient ring, never leaving it.
//! - [`Strategy::EvaluateInterpolate`]: specialize the surviving variable at
//!   `0, 1, …, N`, take the Bareiss determinant of the integer Sylvester
//!   matrix at formal degrees, then interpolate exactly through Newton
//!   forward differences.
//!
//! They share nothing beyond the input representation, so agreement is a
//! real cross-check.

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bipoly::{BiPoly, Var};
use super::dense::{DensePoly, UniPoly};
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    SubresultantPrs,
    EvaluateInterpolate,
}

impl Strategy {
    pub const ALL: [Strategy; 2] = [Strategy::SubresultantPrs, Strategy::EvaluateInterpolate];

    pub fn label(self) -> &'static str {
        match self {
            Strategy::SubresultantPrs => "subresultant-prs",
            Strategy::EvaluateInterpolate => "evaluate-interpolate",
        }
    }
}

/// `Res_v(a, b)` as a polynomial in the other variable.
pub fn resultant(a: &BiPoly, b: &BiPoly, v: Var, strategy: Strategy) -> Result<UniPoly> {
    let da = a.degree(v).unwrap_or(0);
    let db = b.degree(v).unwrap_or(0);
    if da == 0 || db == 0 {
        return Err(Error::Symbolic(format!(
            "resultant in {} needs both degrees positive (got {da}, {db})",
            v.name()
        )));
    }
    let ra = a.to_recursive(v);
    let rb = b.to_recursive(v);
    Ok(match strategy {
        Strategy::SubresultantPrs => resultant_prs(&ra, &rb),
        Strategy::EvaluateInterpolate => evaluate_interpolate(&ra, &rb),
    })
}

/// Subresultant PRS resultant over any ring with exact division.
pub fn resultant_prs<R: Ring>(a: &DensePoly<R>, b: &DensePoly<R>) -> R {
    let (Some(mut da), Some(mut db)) = (a.degree(), b.degree()) else {
        return R::zero();
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        negate = da % 2 == 1 && db % 2 == 1;
    }
    let mut g = R::one();
    let mut h = R::one();
    while db > 0 {
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        let Some(dr) = r.degree() else {
            return R::zero();
        };
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = r.div_scalar(&divisor).expect("subresultant division is exact");
        g = a.lc().expect("nonzero").clone();
        if delta > 0 {
            h = g
                .pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("subresultant h update is exact");
        }
        da = db;
        db = dr;
    }
    // b is a nonzero constant
    let lb = b.lc().expect("nonzero");
    let res = if da == 0 {
        R::one()
    } else {
        lb.pow(da as u32)
            .exact_div(&h.pow(da as u32 - 1))
            .expect("final subresultant division is exact")
    };
    if negate {
        res.neg()
    } else {
        res
    }
}

/// Fraction-free determinant; the input is consumed.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(i) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, i);
            negate = !negate;
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = v.div_floor(&prev);
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Sylvester matrix at formal degrees `a.len() − 1`, `b.len() − 1`; zero
/// leading entries are kept so specializations commute with the determinant.
pub fn sylvester(a: &[BigInt], b: &[BigInt]) -> Vec<Vec<BigInt>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (src, count) in [(a, n), (b, m)] {
        for i in 0..count {
            let mut row = vec![BigInt::zero(); size];
            for (j, c) in src.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Interpolate the integer polynomial of degree ≤ `values.len() − 1` taking
/// `values[k]` at `x = k`.
pub fn interpolate_consecutive(values: &[BigInt]) -> UniPoly {
    let n = values.len();
    let mut d = values.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            let prev = d[i - 1].clone();
            d[i] -= prev;
        }
    }
    // d[k] = Δ^k f(0), divisible by k! for integer-coefficient f
    let mut fact = BigInt::one();
    for (k, dk) in d.iter_mut().enumerate().skip(1) {
        fact *= k;
        let (q, r) = dk.div_rem(&fact);
        assert!(r.is_zero(), "forward difference not divisible by {k}!");
        *dk = q;
    }
    // Newton form f = Σ d_k · x(x−1)…(x−k+1), evaluated Horner-style.
    let mut acc: Vec<BigInt> = vec![d[n - 1].clone()];
    for k in (0..n - 1).rev() {
        // acc ← acc·(x − k) + d_k
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, c) in acc.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * k;
        }
        next[0] += &d[k];
        acc = next;
    }
    UniPoly::new(acc)
}

fn evaluate_interpolate(a: &DensePoly<UniPoly>, b: &DensePoly<UniPoly>) -> UniPoly {
    let inner_deg = |p: &DensePoly<UniPoly>| {
        p.coeffs()
            .iter()
            .filter_map(|c| c.degree())
            .max()
            .unwrap_or(0)
    };
    let da = a.degree().expect("nonzero");
    let db = b.degree().expect("nonzero");
    let bound = db * inner_deg(a) + da * inner_deg(b);
    let values: Vec<BigInt> = (0..=bound)
        .into_par_iter()
        .map(|k| {
            let x = BigInt::from(k);
            let sa: Vec<BigInt> = a.coeffs().iter().map(|c| c.eval(&x)).collect();
            let sb: Vec<BigInt> = b.coeffs().iter().map(|c| c.eval(&x)).collect();
            bareiss_det(sylvester(&sa, &sb))
        })
        .collect();
    interpolate_consecutive(&values)
}
