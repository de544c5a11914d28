//! Exhaustive root-of-unity case analysis for the `d = 2, n = 6` relation
//! `α(α−1)(α^q−1) = (α^{q+1}−1)(α^{q²+q}−1)`.
//!
//! For a primitive `k`-th root `α` with `α^q = α^t`, the relation becomes a
//! polynomial `E_t(α)` reduced modulo `Φ_k`. A zero remainder means the
//! relation holds automatically whenever `q ≡ t (mod k)`; otherwise a root
//! can only exist in characteristics dividing `Res(Φ_k, remainder)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use super::dense::UniPoly;
use super::factorization::cyclotomic;
use super::resultant::resultant_prs;
use crate::error::Result;
use crate::number_theory::{factor_integer, Factorization};

/// The root orders left after the `G1`/`G2` factor analysis.
pub const ROOT_ORDERS: [u32; 3] = [3, 7, 21];

#[derive(Clone, Debug, Serialize)]
pub struct RootCase {
    pub k: u32,
    pub t: u32,
    /// The relation holds identically modulo `Φ_k`.
    pub automatic: bool,
    /// Remainder coefficients, lowest degree first.
    pub remainder: Vec<String>,
    /// `Res(Φ_k, remainder)`; zero when automatic.
    #[serde(with = "crate::decimal::signed")]
    pub resultant: BigInt,
    /// Characteristics in which this case could still occur.
    pub factorization: Option<Factorization>,
}

impl RootCase {
    /// True when no root can exist in characteristic `p`.
    pub fn excluded_in(&self, p: u64) -> bool {
        if self.k as u64 % p == 0 {
            // no primitive k-th roots at all
            return true;
        }
        if self.automatic {
            return false;
        }
        let r = self.resultant.abs();
        (r % p) != BigInt::from(0u8)
    }
}

/// `α^e` for `α^k = 1`, as a polynomial of degree below `k`.
fn power(e: u64, k: u32) -> UniPoly {
    UniPoly::monomial(BigInt::one(), (e % k as u64) as usize)
}

fn relation_mod_k(t: u32, k: u32) -> UniPoly {
    let one = UniPoly::from_i64(&[1]);
    let t = t as u64;
    let a = power(1, k);
    let lhs = a.mul(&a.sub(&one)).mul(&power(t, k).sub(&one));
    let rhs = power(t + 1, k)
        .sub(&one)
        .mul(&power(t * t + t, k).sub(&one));
    lhs.sub(&rhs)
}

pub fn analyze_case(k: u32, t: u32) -> Result<RootCase> {
    let phi = cyclotomic(k);
    let rem = relation_mod_k(t, k).pseudo_rem(&phi);
    let automatic = rem.is_zero();
    let (resultant, factorization) = if automatic {
        (BigInt::from(0), None)
    } else {
        let r = resultant_prs(&phi, &rem);
        let mag: BigUint = r.magnitude().clone();
        (r, Some(factor_integer(&mag)))
    };
    Ok(RootCase {
        k,
        t,
        automatic,
        remainder: rem.coeffs().iter().map(|c| c.to_string()).collect(),
        resultant,
        factorization,
    })
}

/// Every `(k, t)` with `k ∈ {3, 7, 21}` and `gcd(t, k) = 1`.
pub fn root_of_unity_cases() -> Result<Vec<RootCase>> {
    let mut out = Vec::new();
    for k in ROOT_ORDERS {
        for t in 1..k {
            if t.gcd(&k) == 1 {
                out.push(analyze_case(k, t)?);
            }
        }
    }
    Ok(out)
}

/// `G` implied by the automatic cases for `q` in characteristic `p`, or
/// `None` when some non-automatic case is not excluded in that
/// characteristic (the analysis is then inconclusive).
pub fn g_from_cases(cases: &[RootCase], q: u64, p: u64) -> Option<u64> {
    let mut g = 1;
    for c in cases {
        // p | k forces gcd(q, k) > 1, so such cases never match a unit t
        if q % c.k as u64 != c.t as u64 {
            continue;
        }
        if c.automatic {
            // every primitive k-th root qualifies
            g += (1..c.k).filter(|t| t.gcd(&c.k) == 1).count() as u64;
        } else if !c.excluded_in(p) {
            return None;
        }
    }
    Some(g)
}
