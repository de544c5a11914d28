//! The Frobenius chain `y_{i+2} = (y_i²y_{i+1} − y_i² + y_i − 1) /
//! (y_{i+1}(y_i y_{i+1} − 1))` started from free `y0, y1`, and the two
//! numerators eliminated afterwards.

use num_bigint::BigInt;
use serde::Serialize;

use super::bipoly::{BiPoly, BiRat, Var};
use crate::error::Result;

/// The next element of the chain from two consecutive ones.
///
/// With `a = A/B`, `b = C/E` in lowest terms the step is
/// `E(A²C − A²E + ABE − B²E) / (B·C·(AC − BE))`, reduced once.
pub fn chain_step(a: &BiRat, b: &BiRat) -> Result<BiRat> {
    let (ca, cb) = (a.num(), a.den());
    let (cc, ce) = (b.num(), b.den());
    let a2 = ca.mul(ca);
    let be = cb.mul(ce);
    let inner = a2.mul(cc).sub(&a2.mul(ce)).add(&ca.mul(&be)).sub(&cb.mul(&be));
    let num = ce.mul(&inner);
    let den = cb.mul(cc).mul(&ca.mul(cc).sub(&be));
    BiRat::new(num, den)
}

/// `x·y·z − 1` in lowest terms, reduced once.
fn triple_product_minus_one(x: &BiRat, y: &BiRat, z: &BiRat) -> Result<BiRat> {
    let den = x.den().mul(y.den()).mul(z.den());
    let num = x.num().mul(y.num()).mul(z.num()).sub(&den);
    BiRat::new(num, den)
}

/// `[y0, y1, y2, y3, y4, y5]`, every entry in lowest terms.
pub fn build_chain() -> Result<Vec<BiRat>> {
    let mut ys = vec![
        BiRat::from_poly(BiPoly::var(Var::Y0)),
        BiRat::from_poly(BiPoly::var(Var::Y1)),
    ];
    for i in 0..4 {
        let next = chain_step(&ys[i], &ys[i + 1])?;
        ys.push(next);
    }
    Ok(ys)
}

#[derive(Clone, Debug)]
pub struct Numerators {
    /// Numerator of `y0·y2·y4 − 1`.
    pub f1: BiPoly,
    /// Numerator of `y1·y3·y5 − 1`.
    pub f2: BiPoly,
    pub f1_den: BiPoly,
    pub f2_den: BiPoly,
}

pub fn compute_f1_f2() -> Result<Numerators> {
    let ys = build_chain()?;
    let e1 = triple_product_minus_one(&ys[0], &ys[2], &ys[4])?;
    let e2 = triple_product_minus_one(&ys[1], &ys[3], &ys[5])?;
    Ok(Numerators {
        f1: e1.num().clone(),
        f2: e2.num().clone(),
        f1_den: e1.den().clone(),
        f2_den: e2.den().clone(),
    })
}

/// `(coefficient, e0, e1)` of the published numerator, transcribed term by term.
pub const PRINTED_F1: &[(i64, u32, u32)] = &[
    (-1, 11, 3), (3, 11, 2), (-3, 11, 1), (1, 11, 0),
    (1, 10, 5), (-2, 10, 4), (3, 10, 3), (-9, 10, 2), (12, 10, 1), (-5, 10, 0),
    (-1, 9, 5), (3, 9, 4), (-2, 9, 3), (11, 9, 2), (-24, 9, 1), (13, 9, 0),
    (-4, 8, 4), (3, 8, 3), (-7, 8, 2), (30, 8, 1), (-22, 8, 0),
    (3, 7, 4), (-4, 7, 3), (-1, 7, 2), (-23, 7, 1), (26, 7, 0),
    (-1, 6, 9), (4, 6, 3), (4, 6, 2), (9, 6, 1), (-22, 6, 0),
    (1, 5, 10), (4, 5, 8), (-3, 5, 3), (-2, 5, 2), (2, 5, 1), (13, 5, 0),
    (-5, 4, 9), (1, 4, 8), (-6, 4, 7), (-5, 4, 1), (-5, 4, 0),
    (10, 3, 8), (-4, 3, 7), (4, 3, 6), (1, 3, 2), (3, 3, 1), (1, 3, 0),
    (-10, 2, 7), (6, 2, 6), (-1, 2, 5), (-1, 2, 1),
    (5, 1, 6), (-4, 1, 5),
    (-1, 0, 5), (1, 0, 4),
];

/// The published denominator of `y0·y2·y4 − 1`.
pub const PRINTED_F1_DEN: &[(i64, u32, u32)] = &[
    (1, 6, 9), (-1, 5, 10), (-4, 5, 8), (5, 4, 9), (-1, 4, 8), (6, 4, 7),
    (-10, 3, 8), (4, 3, 7), (-4, 3, 6), (10, 2, 7), (-6, 2, 6), (1, 2, 5),
    (-5, 1, 6), (4, 1, 5), (1, 0, 5), (-1, 0, 4),
];

pub fn printed_f1() -> BiPoly {
    BiPoly::from_i64_terms(PRINTED_F1)
}

pub fn printed_f1_den() -> BiPoly {
    BiPoly::from_i64_terms(PRINTED_F1_DEN)
}

#[derive(Clone, Debug, Serialize)]
pub struct TermDiff {
    pub e0: u32,
    pub e1: u32,
    #[serde(with = "crate::decimal::signed")]
    pub computed: BigInt,
    #[serde(with = "crate::decimal::signed")]
    pub expected: BigInt,
}

#[derive(Clone, Debug, Serialize)]
pub struct SignedComparison {
    /// `+1` or `−1` when equal up to that sign, `0` otherwise.
    pub sign: i8,
    pub computed_terms: usize,
    pub expected_terms: usize,
    /// First differences against the better-matching sign.
    pub diffs: Vec<TermDiff>,
}

impl SignedComparison {
    pub fn matches(&self) -> bool {
        self.sign != 0
    }
}

/// Compare up to one global sign; report at most `limit` differing terms.
pub fn compare_up_to_sign(computed: &BiPoly, expected: &BiPoly, limit: usize) -> SignedComparison {
    let collect = |target: &BiPoly| -> Vec<TermDiff> {
        let mut keys: Vec<(u32, u32)> = computed.terms().map(|(k, _)| *k).collect();
        keys.extend(target.terms().map(|(k, _)| *k));
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .rev()
            .filter_map(|(e0, e1)| {
                let c = computed.coeff(e0, e1);
                let e = target.coeff(e0, e1);
                (c != e).then_some(TermDiff { e0, e1, computed: c, expected: e })
            })
            .collect()
    };
    let plus = collect(expected);
    let minus = collect(&expected.neg());
    let (sign, mut diffs) = match (plus.is_empty(), minus.is_empty()) {
        (true, _) => (1, plus),
        (_, true) => (-1, minus),
        _ if plus.len() <= minus.len() => (0, plus),
        _ => (0, minus),
    };
    diffs.truncate(limit);
    SignedComparison {
        sign,
        computed_terms: computed.len(),
        expected_terms: expected.len(),
        diffs,
    }
}
