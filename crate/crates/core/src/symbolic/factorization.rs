//! Cyclotomic polynomials and verification of the two published
//! factorizations by multiplying them back out.

use num_bigint::BigInt;
use serde::Serialize;

use super::dense::UniPoly;
use super::ring::Ring;

/// `Φ_k` by dividing `x^k − 1` by `Φ_j` for every proper divisor `j`.
pub fn cyclotomic(k: u32) -> UniPoly {
    assert!(k >= 1, "cyclotomic index must be positive");
    let mut p = UniPoly::monomial(BigInt::one(), k as usize).sub(&UniPoly::from_i64(&[1]));
    for j in 1..k {
        if k % j == 0 {
            p = p
                .exact_div_poly(&cyclotomic(j))
                .expect("cyclotomic factors divide x^k − 1");
        }
    }
    p
}

/// `p1 … p7` as printed.
pub fn published_factor(i: usize) -> UniPoly {
    match i {
        1 => UniPoly::from_i64(&[-1, 1]),
        2 => UniPoly::from_i64(&[1, 1, 1]),
        3 => UniPoly::from_i64(&[1, -1, 1]),
        4 => UniPoly::from_i64(&[1, -2, 2, -1, 1]),
        5 => UniPoly::from_i64(&[1, 1, 1, 1, 1, 1, 1]),
        6 => UniPoly::from_i64(&[1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1]),
        7 => UniPoly::from_i64(&[1, -2, 4, -5, 6, -7, 4, -1, 1]),
        _ => panic!("no published factor p{i}"),
    }
}

/// Cyclotomic identifications claimed for the factors: `(factor, k)`.
pub const CYCLOTOMIC_IDENTIFICATIONS: &[(usize, u32)] = &[(2, 3), (3, 6), (5, 7), (6, 21)];

/// A published factorization: a constant times a power of `y` times powers
/// of the `p_i`.
#[derive(Clone, Debug, Serialize)]
pub struct PublishedFactorization {
    pub name: &'static str,
    pub constant: i64,
    pub y_power: u32,
    /// `(i, e)` for `p_i^e`.
    pub factors: Vec<(usize, u32)>,
    pub degree: usize,
}

impl PublishedFactorization {
    pub fn g1() -> Self {
        PublishedFactorization {
            name: "G1",
            constant: 4,
            y_power: 76,
            factors: vec![(1, 110), (2, 6), (3, 8), (4, 2), (5, 1), (6, 1)],
            degree: 240,
        }
    }

    pub fn g2() -> Self {
        PublishedFactorization {
            name: "G2",
            constant: 4,
            y_power: 149,
            factors: vec![(1, 101), (2, 6), (3, 20), (4, 4), (5, 1), (6, 1), (7, 1)],
            degree: 344,
        }
    }

    /// Degree implied by the exponents.
    pub fn exponent_sum(&self) -> usize {
        self.y_power as usize
            + self
                .factors
                .iter()
                .map(|&(i, e)| e as usize * published_factor(i).degree().unwrap_or(0))
                .sum::<usize>()
    }

    pub fn expand(&self) -> UniPoly {
        let mut acc = UniPoly::monomial(BigInt::from(self.constant), self.y_power as usize);
        for &(i, e) in &self.factors {
            acc = acc.mul(&published_factor(i).pow(e));
        }
        acc
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoefficientDiff {
    pub power: usize,
    #[serde(with = "crate::decimal::signed")]
    pub computed: BigInt,
    #[serde(with = "crate::decimal::signed")]
    pub expected: BigInt,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationCheck {
    pub name: &'static str,
    pub computed_degree: Option<usize>,
    pub published_degree: usize,
    pub exponent_sum: usize,
    #[serde(with = "crate::decimal::signed")]
    pub content: BigInt,
    /// `+1`/`−1` when the expansion equals the computed polynomial up to that sign.
    pub sign: i8,
    /// At most 10 differing coefficients against the closer sign.
    pub diffs: Vec<CoefficientDiff>,
}

impl FactorizationCheck {
    pub fn ok(&self) -> bool {
        self.sign != 0
            && self.content == BigInt::from(4)
            && self.computed_degree == Some(self.published_degree)
            && self.exponent_sum == self.published_degree
    }
}

fn diff(a: &UniPoly, b: &UniPoly) -> Vec<CoefficientDiff> {
    let n = a.coeffs().len().max(b.coeffs().len());
    (0..n)
        .filter_map(|k| {
            let (x, y) = (a.coeff(k), b.coeff(k));
            (x != y).then_some(CoefficientDiff {
                power: k,
                computed: x,
                expected: y,
            })
        })
        .collect()
}

pub fn verify_factorization(computed: &UniPoly, published: &PublishedFactorization) -> FactorizationCheck {
    let expanded = published.expand();
    let plus = diff(computed, &expanded);
    let minus = diff(computed, &expanded.neg());
    let (sign, mut diffs) = if plus.is_empty() {
        (1, plus)
    } else if minus.is_empty() {
        (-1, minus)
    } else if plus.len() <= minus.len() {
        (0, plus)
    } else {
        (0, minus)
    };
    diffs.truncate(10);
    FactorizationCheck {
        name: published.name,
        computed_degree: computed.degree(),
        published_degree: published.degree,
        exponent_sum: published.exponent_sum(),
        content: computed.content(),
        sign,
        diffs,
    }
}

/// Whether each claimed identification `p_i = Φ_k` holds exactly.
pub fn cyclotomic_identifications() -> Vec<(usize, u32, bool)> {
    CYCLOTOMIC_IDENTIFICATIONS
        .iter()
        .map(|&(i, k)| (i, k, published_factor(i) == cyclotomic(k)))
        .collect()
}
