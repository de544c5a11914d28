//! Fibonacci/Lucas machinery, gcd predictors, factoring, and conjecture scans.

pub mod conjecture;
pub mod divisors;
pub mod fibonacci;
pub mod predict;
pub mod primes;

pub use conjecture::{conjecture1_scan, conjecture2_scan, Counterexample, ScanOutcome};
pub use divisors::{
    characterize_divisors, even_d_lemma_check, f_gcd_conjecture_scan, gcd_always_one, gcd_pair,
    m_d, remainder_identity_check, DivisorCharacterization, FibGcdScan,
};
pub use fibonacci::{fib, identity_failures, lucas, FibonacciTable};
pub use predict::{
    closed_form_count, predict, predict_d2, predict_half_case, Prediction, PredictionStatus,
};
pub use primes::{factor_integer, is_prime, prime_power, Factorization};
