use proptest::prelude::*;

use schurkit::format::{format_factored, Format};
use schurkit::json::{
    factored_from_json, factored_to_json, multipartition_from_json, multipartition_to_json,
    poly_from_json, poly_to_json,
};
use schurkit_core::{Alphabet, FactoredRational, Multipartition, Partition, Variable};

const VARS: [Variable; 4] = [
    Variable::Param(1),
    Variable::Param(2),
    Variable::Param(3),
    Variable::X,
];

fn rational_fn() -> impl Strategy<Value = FactoredRational> {
    let factor = (
        -5i64..=5,
        0usize..4,
        proptest::option::of(0usize..4),
        -3i64..=3,
    );
    (
        (-20i64..=20).prop_filter("nonzero", |c| *c != 0),
        1i64..=6,
        prop::collection::vec(factor, 0..6),
    )
        .prop_map(|(num, den, fs)| {
            let mut acc = FactoredRational::from_rational(num_rational::BigRational::new(
                num.into(),
                den.into(),
            ));
            for (c, a, b, e) in fs {
                if b == Some(a) || e == 0 {
                    continue;
                }
                acc.mul_linear(c, Some(VARS[a]), b.map(|k| VARS[k]), e)
                    .unwrap();
            }
            acc
        })
}

fn multipartition() -> impl Strategy<Value = Multipartition> {
    prop::collection::vec(prop::collection::vec(1usize..5, 0..4), 1..4).prop_map(|comps| {
        Multipartition::new(
            comps
                .into_iter()
                .map(|mut parts| {
                    parts.sort_unstable_by(|a, b| b.cmp(a));
                    Partition::new(parts).unwrap()
                })
                .collect(),
        )
        .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn factored_json_round_trips(a in rational_fn()) {
        let text = format_factored(&a, Format::Json);
        let back = factored_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(factored_to_json(&back), factored_to_json(&a));
    }

    #[test]
    fn polynomial_json_round_trips(a in rational_fn()) {
        let alphabet = Alphabet { params: 3, indeterminate: true };
        let poly = FactoredRational::from_integer(a.constant().numer().clone());
        let poly = a.factors().fold(poly, |mut acc, (f, e)| {
            acc.mul_form(*f, e.abs());
            acc
        });
        let expanded = poly.expand_in(alphabet).unwrap();
        prop_assert_eq!(poly_from_json(&poly_to_json(&expanded), alphabet).unwrap(), expanded);
    }

    #[test]
    fn multipartition_json_round_trips(lam in multipartition()) {
        prop_assert_eq!(multipartition_from_json(&multipartition_to_json(&lam)).unwrap(), lam);
    }
}
