//! Evaluate the integer polynomials of the elimination at every curve-arising
//! `α = x^{q²−1}` in `F_{q^6}` (`d = 2`), coefficients reduced mod `p`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::bipoly::BiPoly;
use super::dense::UniPoly;
use super::factorization::published_factor;
use super::Reconstruction;
use crate::curve::{CurveParams, TraceCurve};
use crate::error::{Error, Result};
use crate::field::{EnumerationCap, FieldElement, FieldSpec};
use crate::number_theory::{predict_d2, prime_power};

#[derive(Clone, Debug, Serialize)]
pub struct AlphaCheck {
    pub alpha: Vec<u64>,
    pub order: u128,
    /// How many special `x` map to this `α`.
    pub multiplicity: u64,
    pub f1_vanishes: bool,
    pub f2_vanishes: bool,
    pub g1_vanishes: bool,
    pub g2_vanishes: bool,
    pub order_divides_21: bool,
    /// The defining relation holds at `(α^{q^i}, α^{q^{i+1}}, α^{q^{i+2}})`
    /// for `i = 0, 1, 2, 3`.
    pub chain_relation_holds: bool,
    /// `α` is a root of `p4` reduced mod `p`.
    pub p4_root: bool,
    pub in_base_field: bool,
}

impl AlphaCheck {
    pub fn ok(&self) -> bool {
        self.f1_vanishes
            && self.f2_vanishes
            && self.g1_vanishes
            && self.g2_vanishes
            && self.order_divides_21
            && self.chain_relation_holds
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpotCheck {
    pub q: u64,
    pub p: u64,
    pub modulus: Vec<u64>,
    pub special_x: u128,
    /// Special `x` with `α ∉ {0, 1}`.
    pub qualifying_x: u128,
    pub alphas: Vec<AlphaCheck>,
    /// Distinct qualifying `α` with `α^7 = 1`.
    pub seventh_roots: usize,
    #[serde(with = "crate::decimal")]
    pub predicted_g: num_bigint::BigUint,
}

impl SpotCheck {
    pub fn ok(&self) -> bool {
        self.alphas.iter().all(AlphaCheck::ok)
    }

    /// Base-field `α` that are also roots of `p4` (the characteristic-7
    /// coincidence `α = 4`).
    pub fn p4_coincidences(&self) -> Vec<Vec<u64>> {
        self.alphas
            .iter()
            .filter(|a| a.p4_root)
            .map(|a| a.alpha.clone())
            .collect()
    }
}

fn residue(c: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    u64::try_from(((c % &m) + &m) % &m).expect("residue below p")
}

fn eval_uni(field: &FieldSpec, poly: &UniPoly, x: &FieldElement) -> FieldElement {
    let mut acc = field.zero();
    for c in poly.residues(field.p()).iter().rev() {
        acc = field.mul(&acc, x);
        acc = field.add(&acc, &field.from_base(*c));
    }
    acc
}

fn powers(field: &FieldSpec, x: &FieldElement, max: u32) -> Vec<FieldElement> {
    let mut out = vec![field.one()];
    for i in 0..max as usize {
        out.push(field.mul(&out[i], x));
    }
    out
}

fn eval_bi(field: &FieldSpec, poly: &BiPoly, a: &FieldElement, b: &FieldElement) -> FieldElement {
    let pa = powers(field, a, poly.degree(super::Var::Y0).unwrap_or(0));
    let pb = powers(field, b, poly.degree(super::Var::Y1).unwrap_or(0));
    let mut acc = field.zero();
    for (&(e0, e1), c) in poly.terms() {
        let r = residue(c, field.p());
        if r == 0 {
            continue;
        }
        let t = field.mul(&pa[e0 as usize], &pb[e1 as usize]);
        acc = field.add(&acc, &field.scale(&t, r));
    }
    acc
}

fn relation_holds(field: &FieldSpec, a: &FieldElement, b: &FieldElement, c: &FieldElement) -> bool {
    let one = field.one();
    let lhs = field.mul(&field.mul(a, &field.sub(a, &one)), &field.sub(b, &one));
    let rhs = field.mul(
        &field.sub(&field.mul(a, b), &one),
        &field.sub(&field.mul(b, c), &one),
    );
    lhs == rhs
}

/// Checks every qualifying `α` for odd `q` with `q^6` under the cap.
pub fn finite_field_spotcheck(rec: &Reconstruction, q: u64, cap: &EnumerationCap) -> Result<SpotCheck> {
    let params = CurveParams::from_q(q, 6, 2)?;
    if q % 2 == 0 {
        return Err(Error::Unsupported(
            "even q: both resultants vanish in characteristic 2".into(),
        ));
    }
    let curve = TraceCurve::new(params, cap)?;
    let field = curve.field();
    let special = curve.special_x();
    let one = field.one();
    let mut by_alpha: BTreeMap<u128, (FieldElement, u64)> = BTreeMap::new();
    let mut qualifying = 0u128;
    for x in special.iter().filter(|x| !x.is_zero()) {
        let alpha = curve.alpha_of(x)?;
        if alpha.is_zero() || alpha == one {
            continue;
        }
        qualifying += 1;
        by_alpha
            .entry(field.to_index(&alpha))
            .or_insert_with(|| (alpha, 0))
            .1 += 1;
    }
    let p4 = published_factor(4);
    let mut alphas = Vec::new();
    let mut seventh_roots = 0;
    for (alpha, multiplicity) in by_alpha.into_values() {
        let ys: Vec<FieldElement> = (0..6).map(|i| field.frobenius(&alpha, i)).collect();
        let chain_relation_holds = (0..4).all(|i| relation_holds(field, &ys[i], &ys[i + 1], &ys[i + 2]));
        if field.pow_u128(&alpha, 7) == one {
            seventh_roots += 1;
        }
        alphas.push(AlphaCheck {
            order: field.multiplicative_order(&alpha)?,
            multiplicity,
            f1_vanishes: eval_bi(field, &rec.numerators.f1, &ys[0], &ys[1]).is_zero(),
            f2_vanishes: eval_bi(field, &rec.numerators.f2, &ys[0], &ys[1]).is_zero(),
            g1_vanishes: eval_uni(field, &rec.g1, &alpha).is_zero(),
            g2_vanishes: eval_uni(field, &rec.g2, &alpha).is_zero(),
            order_divides_21: field.pow_u128(&alpha, 21) == one,
            chain_relation_holds,
            p4_root: eval_uni(field, &p4, &alpha).is_zero(),
            in_base_field: field.in_subfield(&alpha, 1),
            alpha: alpha.coeffs().to_vec(),
        });
    }
    let qb = num_bigint::BigUint::from(q);
    let p = prime_power(&qb).map(|(p, _)| p).expect("validated prime power");
    Ok(SpotCheck {
        q,
        p: u64::try_from(p).expect("fits"),
        modulus: field.modulus().to_vec(),
        special_x: special.len() as u128,
        qualifying_x: qualifying,
        alphas,
        seventh_roots,
        predicted_g: predict_d2(&qb, 6)?.value_g,
    })
}
