use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;
use tracecurve::number_theory::{
    characterize_divisors, factor_integer, fib, gcd_pair, is_prime, m_d, prime_power, remainder_identity_check,
};

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn factorization_multiplies_back(n in 1u64..u64::MAX) {
        let f = factor_integer(&big(n));
        prop_assert!(f.is_complete());
        prop_assert_eq!(f.product(), big(n));
        for p in &f.primes {
            prop_assert!(is_prime(p));
        }
    }

    #[test]
    fn remainder_identity_for_random_q(q in 2u64..100_000, d in 2u32..60) {
        prop_assert!(remainder_identity_check(&big(q), d).unwrap());
    }

    /// Every prime of gcd(q^d + 1, q² − q − 1) that is coprime to F_d divides M_d.
    #[test]
    fn gcd_primes_divide_m_d(q in 2u64..1_000_000, d in 2u32..=40) {
        let g = gcd_pair(&big(q), d);
        let f_d = fib(d as u64).unwrap();
        let m = m_d(d);
        for (t, _) in factor_integer(&g).distinct() {
            if (&f_d % &t).is_zero() {
                continue;
            }
            prop_assert!((&m % &t).is_zero(), "q={} d={} t={}", q, d, t);
        }
    }
}

/// For each admissible (t, residue), the first five prime powers q in that
/// residue class make t divide the gcd.
#[test]
fn admissible_residues_force_divisibility() {
    for d in 2..=30u32 {
        let c = characterize_divisors(d).unwrap();
        assert!(c.is_complete());
        for (t, residue) in &c.admissible {
            let t64 = t.to_u64().unwrap();
            let mut q = residue.to_u64().unwrap();
            let mut hits = 0;
            while hits < 5 {
                if q >= 2 && prime_power(&big(q)).is_some() {
                    let g = gcd_pair(&big(q), d);
                    assert!((&g % t).is_zero(), "d={d} t={t} q={q}");
                    hits += 1;
                }
                q += t64;
            }
        }
    }
}

/// Prime factors ≠ 5 of q² − q − 1 are ±1 (mod 5).
#[test]
fn quadratic_prime_factors_are_plus_minus_one_mod_five() {
    for q in 2..=10_000u64 {
        let v = big(q * q - q - 1);
        for (p, _) in factor_integer(&v).distinct() {
            let r = (&p % 5u32).to_u32().unwrap();
            assert!(r == 0 || r == 1 || r == 4, "q={q} p={p}");
        }
    }
}

#[test]
fn prime_power_detection_matches_factorization() {
    for n in 2..5000u64 {
        let distinct = factor_integer(&big(n)).distinct();
        let expected = (distinct.len() == 1).then(|| distinct[0].clone());
        assert_eq!(prime_power(&big(n)), expected, "n={n}");
    }
    assert!(prime_power(&BigUint::one()).is_none());
}

#[test]
fn fibonacci_gcd_is_fibonacci_of_gcd() {
    for a in 1..80u64 {
        for b in 1..80u64 {
            assert_eq!(fib(a).unwrap().gcd(&fib(b).unwrap()), fib(a.gcd(&b)).unwrap());
        }
    }
}
