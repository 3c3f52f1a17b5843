use degenq::{Exec, LaurentPoly, RatFn, SparseMat};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=4, -5i64..=5), 0..5).prop_map(LaurentPoly::from_terms)
}

fn ratfn() -> impl Strategy<Value = RatFn> {
    (laurent(), laurent()).prop_map(|(n, d)| if d.is_zero() { RatFn::from(n) } else { RatFn::new(n, d).unwrap() })
}

fn nonzero_ratfn() -> impl Strategy<Value = RatFn> {
    ratfn().prop_filter("nonzero", |x| !x.is_zero())
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = SparseMat> {
    prop::collection::vec(prop::option::weighted(0.4, ratfn()), rows * cols).prop_map(move |cells| {
        let t = cells.into_iter().enumerate().filter_map(|(k, x)| x.map(|x| (k / cols, k % cols, x))).collect();
        SparseMat::from_triplets(rows, cols, t)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
    }

    #[test]
    fn field_axioms(a in ratfn(), b in ratfn(), c in nonzero_ratfn()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a / &c) * &c, a.clone());
        prop_assert!((&c * &c.inv().unwrap()).is_one());
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn equality_agrees_with_cross_multiplication(a in ratfn(), b in ratfn()) {
        let cross = a.numer() * b.denom() == b.numer() * a.denom();
        prop_assert_eq!(a == b, cross);
    }

    #[test]
    fn canonical_form(a in ratfn()) {
        prop_assert_eq!(a.normalize(), a.clone());
        let d = a.denom();
        prop_assert!(d.low_degree() == Some(0));
        prop_assert!(d.leading_coeff().unwrap() > &BigInt::from(0));
    }

    #[test]
    fn text_round_trip(a in ratfn()) {
        let back: RatFn = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfn(), b in ratfn(), t in 2i64..7) {
        let at = BigRational::from_integer(t.into());
        if let (Some(x), Some(y), Some(z)) = (a.eval(&at), b.eval(&at), (&a * &b).eval(&at)) {
            prop_assert_eq!(x * y, z);
        }
    }

    #[test]
    fn kron_mixed_product(
        a in small_matrix(2, 2), b in small_matrix(2, 3), c in small_matrix(2, 2), d in small_matrix(3, 2)
    ) {
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exec_policies_agree(xs in prop::collection::vec(ratfn(), 0..20)) {
        let f = |x: &RatFn| x * x;
        prop_assert_eq!(Exec::Sequential.map(&xs, f), Exec::Parallel.map(&xs, f));
    }
}

#[test]
fn quantum_integer_values() {
    use degenq::field::quantum_int;
    assert_eq!(quantum_int(3).to_string(), "q^2 + 1 + q^-2");
    assert_eq!(quantum_int(0), LaurentPoly::zero());
    assert_eq!(quantum_int(-2), -quantum_int(2));
    let x: LaurentPoly = "q - q^-1".parse().unwrap();
    let y: LaurentPoly = "q + q^-1".parse().unwrap();
    assert_eq!((&x * &y).to_string(), "q^2 - q^-2");
}

#[test]
fn signed_parameters() {
    use degenq::field::p;
    use degenq::GLParams;
    let g = GLParams::new(2, 1).unwrap();
    assert_eq!(g.q_sub(1).unwrap(), RatFn::q());
    assert_eq!(g.q_sub(3).unwrap(), p());
    assert_eq!(p(), "-q^-1".parse().unwrap());
    assert!(g.q_sub(4).is_err());
    // q_a - q_a^-1 does not depend on a
    let x = g.q_sub(3).unwrap();
    assert_eq!(&x - &x.inv().unwrap(), degenq::field::q_minus_qinv());
}
