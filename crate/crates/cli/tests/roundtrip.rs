use glmix::scalar::ParamMono;
use glmix::weyl::DiffMonomial;
use glmix::{Coeff, MatrixDiffOp, QuadNum, ScalarDiffOp};
use glmix_cli::dto::OperatorDto;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Coeff> {
    prop::collection::vec(([0u32..=2, 0..=1, 0..=1, 0..=1], -20i64..=20, 1i64..=9, -3i64..=3), 0..3).prop_map(|t| {
        Coeff::from_terms(
            t.into_iter()
                .map(|(e, n, d, s)| (ParamMono(e), &QuadNum::frac(n, d) + &(&QuadNum::int(s) * &QuadNum::sqrt2()))),
        )
    })
}

fn entry() -> impl Strategy<Value = ScalarDiffOp> {
    prop::collection::vec(([0u32..=3, 0..=3], [0u32..=2, 0..=2], coeff()), 0..4).prop_map(|t| {
        ScalarDiffOp::from_terms(2, t.into_iter().map(|(x, d, c)| (DiffMonomial { xpow: x.to_vec(), dpow: d.to_vec() }, c)))
    })
}

fn operator() -> impl Strategy<Value = MatrixDiffOp> {
    (1usize..=3).prop_flat_map(|dim| {
        prop::collection::vec(entry(), dim * dim).prop_map(move |e| MatrixDiffOp::from_entries(dim, 2, e).unwrap())
    })
}

proptest! {
    #[test]
    fn operator_json_round_trip(op in operator()) {
        let text = serde_json::to_string(&OperatorDto::from(&op)).unwrap();
        let dto: OperatorDto = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(MatrixDiffOp::try_from(&dto).unwrap(), op);
    }
}
