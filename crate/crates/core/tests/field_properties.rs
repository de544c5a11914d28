use proptest::prelude::*;
use tracecurve::{EnumerationCap, FieldElement, FieldSpec};

/// (p, r, n_total) for the fields the properties range over.
const SHAPES: [(u64, u32, u32); 6] = [(2, 1, 4), (3, 1, 4), (2, 2, 3), (5, 1, 3), (7, 1, 2), (3, 2, 2)];

fn field(i: usize) -> FieldSpec {
    let (p, r, n) = SHAPES[i % SHAPES.len()];
    FieldSpec::build(p, r, n).unwrap()
}

fn elem(f: &FieldSpec, seed: u64) -> FieldElement {
    f.from_index(seed as u128 % f.cardinality())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(i in 0usize..6, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = field(i);
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
        prop_assert_eq!(f.sub(&a, &b), f.add(&a, &f.neg(&b)));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            prop_assert_eq!(f.mul(&f.div(&b, &a).unwrap(), &a), b.clone());
        }
    }

    #[test]
    fn frobenius_is_an_automorphism(i in 0usize..6, a in any::<u64>(), b in any::<u64>(), e in 0u32..8) {
        let f = field(i);
        let (a, b) = (elem(&f, a), elem(&f, b));
        prop_assert_eq!(f.frobenius(&f.mul(&a, &b), e), f.mul(&f.frobenius(&a, e), &f.frobenius(&b, e)));
        prop_assert_eq!(f.frobenius(&f.add(&a, &b), e), f.add(&f.frobenius(&a, e), &f.frobenius(&b, e)));
    }

    #[test]
    fn frobenius_matches_pow(i in 0usize..6, a in any::<u64>(), e in 0u32..6) {
        let f = field(i);
        let a = elem(&f, a);
        let q = num_bigint::BigUint::from(f.q());
        prop_assert_eq!(f.frobenius(&a, e), f.pow(&a, &q.pow(e)));
    }

    #[test]
    fn trace_is_linear_over_the_target(i in 0usize..6, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = field(i);
        let m = f.n_total();
        let (a, b) = (elem(&f, a), elem(&f, b));
        // c drawn from F_q
        let c = f.from_base(c % f.p());
        let lhs = f.trace_to_base(&f.add(&a, &f.mul(&c, &b)), m, 1).unwrap();
        let rhs = f.add(&f.trace_to_base(&a, m, 1).unwrap(), &f.mul(&c, &f.trace_to_base(&b, m, 1).unwrap()));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(f.in_subfield(&f.trace_to_base(&a, m, 1).unwrap(), 1));
    }

    #[test]
    fn norm_is_multiplicative(i in 0usize..6, a in any::<u64>(), b in any::<u64>()) {
        let f = field(i);
        let m = f.n_total();
        let (a, b) = (elem(&f, a), elem(&f, b));
        let n = |x: &FieldElement| f.norm_to_base(x, m, 1).unwrap();
        prop_assert_eq!(n(&f.mul(&a, &b)), f.mul(&n(&a), &n(&b)));
        prop_assert!(f.in_subfield(&n(&a), 1));
    }

    #[test]
    fn subfield_test_is_the_fixed_set(i in 0usize..6, a in any::<u64>(), k in 1u32..4) {
        let f = field(i);
        let a = elem(&f, a);
        prop_assert_eq!(f.in_subfield(&a, k), f.frobenius(&a, k) == a);
    }
}

#[test]
fn subfield_sizes_and_trace_surjectivity_exhaustive() {
    let cap = EnumerationCap::default();
    for (p, r, n) in SHAPES.into_iter().chain([(3, 1, 6), (2, 1, 8)]) {
        let f = FieldSpec::build(p, r, n).unwrap();
        let elements: Vec<FieldElement> = f.enumerate(&cap).unwrap().collect();
        assert_eq!(elements.len() as u128, f.cardinality());
        for k in (1..=n).filter(|k| n % k == 0) {
            let inside = elements.iter().filter(|a| f.in_subfield(a, k)).count() as u128;
            assert_eq!(inside, f.subfield_size(k), "p={p} r={r} n={n} k={k}");
            // Tr_{q^n : q^k} hits all of F_{q^k}
            let mut image: Vec<u128> = elements
                .iter()
                .map(|a| f.to_index(&f.trace_to_base(a, n, k).unwrap()))
                .collect();
            image.sort_unstable();
            image.dedup();
            assert_eq!(image.len() as u128, f.subfield_size(k));
        }
    }
}

#[test]
fn enumeration_has_no_duplicates() {
    let f = FieldSpec::build(3, 1, 4).unwrap();
    let mut seen: Vec<Vec<u64>> = f
        .enumerate(&EnumerationCap::default())
        .unwrap()
        .map(|a| a.coeffs().to_vec())
        .collect();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), 81);
}
