//! Heuristic gcd (evaluate at a large integer, take the smaller gcd,
//! reconstruct ξ-adically, confirm by exact division).
//!
//! A candidate is only ever accepted after it divides both inputs, and a
//! common divisor reconstructed this way with `ξ > 2·min(‖a‖, ‖b‖) + 2` is
//! the gcd; when every attempt fails the caller falls back to the primitive
//! remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::bipoly::Recursive;
use super::dense::UniPoly;
use super::ring::Ring;

const ATTEMPTS: usize = 6;

fn max_norm_uni(p: &UniPoly) -> BigInt {
    p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn max_norm_rec(p: &Recursive) -> BigInt {
    p.coeffs().iter().map(max_norm_uni).max().unwrap_or_default()
}

/// Symmetric base-`xi` digits of `v`, lowest first.
fn xi_adic(mut v: BigInt, xi: &BigInt) -> UniPoly {
    let half = xi / 2;
    let mut digits = Vec::new();
    while !Ring::is_zero(&v) {
        let mut d = v.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        v = (v - &d) / xi;
        digits.push(d);
    }
    UniPoly::new(digits)
}

fn initial_xi(na: &BigInt, nb: &BigInt) -> BigInt {
    na.min(nb) * 2 + 29
}

fn next_xi(xi: &BigInt) -> BigInt {
    // the usual irrational-ish growth factor avoids repeating bad points
    xi * 73794 / 27011
}

/// gcd of two integer polynomials, `None` if the heuristic gives up.
pub fn heu_gcd_uni(a: &UniPoly, b: &UniPoly) -> Option<UniPoly> {
    if a.is_zero() || b.is_zero() {
        return Some(a.gcd_poly(b));
    }
    let (ca, cb) = (a.content(), b.content());
    let c = Ring::gcd(&ca, &cb);
    let a = a.div_scalar(&ca)?;
    let b = b.div_scalar(&cb)?;
    let mut xi = initial_xi(&max_norm_uni(&a), &max_norm_uni(&b));
    for _ in 0..ATTEMPTS {
        let gamma = Ring::gcd(&a.eval(&xi), &b.eval(&xi));
        let g = xi_adic(gamma, &xi).primitive_part();
        if g.degree().is_some() && a.exact_div_poly(&g).is_some() && b.exact_div_poly(&g).is_some() {
            return Some(g.scale(&c).normalized());
        }
        xi = next_xi(&xi);
    }
    None
}

/// gcd in `Z[inner][outer]`, evaluating the inner variable.
pub fn heu_gcd_rec(a: &Recursive, b: &Recursive) -> Option<Recursive> {
    if a.is_zero() || b.is_zero() {
        return Some(a.gcd_poly(b));
    }
    let int_content = |p: &Recursive| {
        p.coeffs()
            .iter()
            .fold(<BigInt as Ring>::zero(), |g, c| Ring::gcd(&g, &c.content()))
    };
    let (ca, cb) = (int_content(a), int_content(b));
    let c = Ring::gcd(&ca, &cb);
    let a = a.div_scalar(&UniPoly::constant(ca))?;
    let b = b.div_scalar(&UniPoly::constant(cb))?;
    let mut xi = initial_xi(&max_norm_rec(&a), &max_norm_rec(&b));
    for _ in 0..ATTEMPTS {
        let xa = a.map(|c| c.eval(&xi));
        let xb = b.map(|c| c.eval(&xi));
        let image = heu_gcd_uni(&xa, &xb).unwrap_or_else(|| xa.gcd_poly(&xb));
        let candidate = image.map(|v| xi_adic(v.clone(), &xi));
        let cc = candidate
            .coeffs()
            .iter()
            .fold(<BigInt as Ring>::zero(), |g, c| Ring::gcd(&g, &c.content()));
        if !Ring::is_zero(&cc) {
            let g = candidate.div_scalar(&UniPoly::constant(cc))?;
            if a.exact_div_poly(&g).is_some() && b.exact_div_poly(&g).is_some() {
                return Some(g.scale(&UniPoly::constant(c)).normalized());
            }
        }
        xi = next_xi(&xi);
    }
    None
}
