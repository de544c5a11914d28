//! JSON archival of `F1, F2, G1, G2`: sparse exponent → decimal-string maps.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::bipoly::{BiPoly, Var};
use super::dense::UniPoly;
use super::Reconstruction;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiPolyJson {
    pub name: String,
    pub variables: [String; 2],
    /// `[e0, e1, coefficient]`, leading term first.
    pub terms: Vec<(u32, u32, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniPolyJson {
    pub name: String,
    pub variable: String,
    pub degree: Option<usize>,
    /// `[exponent, coefficient]` for nonzero coefficients, highest first.
    pub terms: Vec<(usize, String)>,
}

fn parse(s: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|_| Error::Symbolic(format!("bad integer literal {s:?}")))
}

impl BiPolyJson {
    pub fn from_poly(name: &str, p: &BiPoly) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(&(a, b), c)| (a, b, c.to_string())).collect();
        terms.reverse();
        BiPolyJson {
            name: name.into(),
            variables: ["y0".into(), "y1".into()],
            terms,
        }
    }

    pub fn to_poly(&self) -> Result<BiPoly> {
        let terms = self
            .terms
            .iter()
            .map(|(a, b, c)| Ok(((*a, *b), parse(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(BiPoly::from_terms(terms))
    }
}

impl UniPolyJson {
    pub fn from_poly(name: &str, var: Var, p: &UniPoly) -> Self {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| **c != BigInt::from(0))
            .map(|(k, c)| (k, c.to_string()))
            .collect();
        UniPolyJson {
            name: name.into(),
            variable: var.name().into(),
            degree: p.degree(),
            terms,
        }
    }

    pub fn to_poly(&self) -> Result<UniPoly> {
        let len = self.terms.iter().map(|(k, _)| k + 1).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::from(0); len];
        for (k, c) in &self.terms {
            coeffs[*k] = parse(c)?;
        }
        Ok(UniPoly::new(coeffs))
    }
}

pub const ARTIFACT_FILES: [&str; 4] = ["F1.json", "F2.json", "G1.json", "G2.json"];

/// Write the four artifacts into `dir`, returning their paths.
pub fn dump(rec: &Reconstruction, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let docs = [
        serde_json::to_string_pretty(&BiPolyJson::from_poly("F1", &rec.numerators.f1))?,
        serde_json::to_string_pretty(&BiPolyJson::from_poly("F2", &rec.numerators.f2))?,
        serde_json::to_string_pretty(&UniPolyJson::from_poly("G1", Var::Y1, &rec.g1))?,
        serde_json::to_string_pretty(&UniPolyJson::from_poly("G2", Var::Y0, &rec.g2))?,
    ];
    let mut paths = Vec::new();
    for (name, doc) in ARTIFACT_FILES.iter().zip(docs) {
        let path = dir.join(name);
        fs::write(&path, doc + "\n")?;
        paths.push(path);
    }
    Ok(paths)
}

/// `(F1, F2, G1, G2)` read back from a [`dump`] directory.
pub fn load(dir: &Path) -> Result<(BiPoly, BiPoly, UniPoly, UniPoly)> {
    let read = |name: &str| -> Result<String> { Ok(fs::read_to_string(dir.join(name))?) };
    let f1: BiPolyJson = serde_json::from_str(&read(ARTIFACT_FILES[0])?)?;
    let f2: BiPolyJson = serde_json::from_str(&read(ARTIFACT_FILES[1])?)?;
    let g1: UniPolyJson = serde_json::from_str(&read(ARTIFACT_FILES[2])?)?;
    let g2: UniPolyJson = serde_json::from_str(&read(ARTIFACT_FILES[3])?)?;
    Ok((f1.to_poly()?, f2.to_poly()?, g1.to_poly()?, g2.to_poly()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_forms_round_trip() {
        let b = BiPoly::from_i64_terms(&[(-3, 2, 1), (7, 0, 4), (1, 0, 0)]);
        assert_eq!(BiPolyJson::from_poly("b", &b).to_poly().unwrap(), b);
        let u = UniPoly::from_i64(&[0, 0, -5, 0, 12]);
        let j = UniPolyJson::from_poly("u", Var::Y1, &u);
        assert_eq!(j.degree, Some(4));
        assert_eq!(j.to_poly().unwrap(), u);
        assert_eq!(UniPolyJson::from_poly("z", Var::Y0, &UniPoly::zero()).to_poly().unwrap(), UniPoly::zero());
    }
}
