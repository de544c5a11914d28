//! Verification tools for the twisted trace curves
//! `Tr_{q^n:q}(y) = x + x^q + … + x^{q^{d-2}} + x^{q^{d-1} + q^d - 1}`
//! over finite fields.
//!
//! - [`field`]: one ambient extension field with Frobenius, trace, norm and
//!   subfield tests.
//! - [`curve`]: brute-force point counts, genus and the membership equation.
//! - [`number_theory`]: Fibonacci/Lucas identities, the gcd predictors,
//!   factoring and conjecture scans.
//! - [`symbolic`]: exact bivariate elimination for `d = 2, n = 6`.
//! - [`cli`]: the command-line front end and its report formats.

pub mod cli;
pub mod curve;
pub mod decimal;
pub mod error;
pub mod field;
pub mod number_theory;
pub mod symbolic;

pub use curve::{genus, CountReport, CurveParams, TraceCurve};
pub use error::{Error, Result};
pub use field::{EnumerationCap, FieldElement, FieldSpec};
