use glmix::scalar::{Field, ParamMono};
use glmix::{Bindings, Coeff, MatrixDiffOp, Param, PolySpinor, Polynomial, QuadNum, ScalarDiffOp};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn quad() -> impl Strategy<Value = QuadNum> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| &QuadNum::frac(a, b) + &(&QuadNum::frac(c, d) * &QuadNum::sqrt2()))
}

fn coeff() -> impl Strategy<Value = Coeff> {
    prop::collection::vec(([0u32..=2, 0..=1, 0..=1, 0..=1], quad()), 0..4)
        .prop_map(|terms| Coeff::from_terms(terms.into_iter().map(|(e, q)| (ParamMono(e), q))))
}

fn scalar_op() -> impl Strategy<Value = ScalarDiffOp> {
    prop::collection::vec(([0u32..=2, 0..=2], [0u32..=2, 0..=1], coeff()), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(ScalarDiffOp::zero(2), |acc, (x, d, c)| acc.add(&ScalarDiffOp::monomial(x.to_vec(), d.to_vec(), c)))
    })
}

fn matrix_op() -> impl Strategy<Value = MatrixDiffOp> {
    prop::collection::vec(scalar_op(), 4).prop_map(|e| MatrixDiffOp::from_entries(2, 2, e).unwrap())
}

fn spinor() -> impl Strategy<Value = PolySpinor> {
    let poly = prop::collection::vec(([0u32..=3, 0..=3], coeff()), 0..4).prop_map(|t| {
        Polynomial::from_terms(2, t.into_iter().map(|(e, c)| (e.to_vec(), c)))
    });
    prop::collection::vec(poly, 2).prop_map(|c| PolySpinor::new(2, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quad_field_inverse(a in quad()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.try_inv().unwrap(), QuadNum::one());
    }

    #[test]
    fn quad_order_matches_float(a in quad(), b in quad()) {
        if (a.to_f64() - b.to_f64()).abs() > 1e-9 {
            prop_assert_eq!(a < b, a.to_f64() < b.to_f64());
        }
    }

    #[test]
    fn coeff_ring_axioms(a in coeff(), b in coeff(), c in coeff()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Coeff::zero());
        prop_assert_eq!(&a * &Coeff::one(), a.clone());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in coeff(), b in coeff(), k in -3i64..=3, w in -3i64..=3) {
        let bind: Bindings = [(Param::K, glmix::scalar::rat(k)), (Param::Omega, glmix::scalar::rat(w))].into_iter().collect();
        prop_assert_eq!((&a * &b).substitute(&bind), &a.substitute(&bind) * &b.substitute(&bind));
    }

    #[test]
    fn composition_is_associative(a in matrix_op(), b in matrix_op(), c in matrix_op()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn apply_is_a_homomorphism(a in matrix_op(), b in matrix_op(), v in spinor()) {
        let lhs = (&a * &b).apply(&v).unwrap();
        let rhs = a.apply(&b.apply(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_identity(a in matrix_op(), b in matrix_op(), c in matrix_op()) {
        let br = |x: &MatrixDiffOp, y: &MatrixDiffOp| x.commutator(y).unwrap();
        let s = &(&br(&a, &br(&b, &c)) + &br(&b, &br(&c, &a))) + &br(&c, &br(&a, &b));
        prop_assert!(s.is_zero());
    }

    #[test]
    fn commutator_is_antisymmetric(a in matrix_op(), b in matrix_op()) {
        prop_assert_eq!(a.commutator(&b).unwrap(), -&b.commutator(&a).unwrap());
    }

    #[test]
    fn renormalize_is_idempotent(a in matrix_op()) {
        let once = a.renormalized();
        prop_assert_eq!(&once, &a);
        prop_assert_eq!(once.renormalized(), once);
    }

    #[test]
    fn application_is_linear(a in scalar_op(), p in spinor(), q in spinor()) {
        let m = MatrixDiffOp::scalar(2, &a);
        prop_assert_eq!(m.apply(&p.add(&q)).unwrap(), m.apply(&p).unwrap().add(&m.apply(&q).unwrap()));
    }

    #[test]
    fn quad_serde_round_trip(a in quad()) {
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<QuadNum>(&s).unwrap(), a);
    }

    #[test]
    fn coeff_serde_round_trip(a in coeff()) {
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Coeff>(&s).unwrap(), a);
    }
}
