use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use schurkit_core::arith::{Field, FieldElement};
use schurkit_core::{Alphabet, FactoredRational, Permutation, Specialization, Variable};

const VARS: [Variable; 4] = [
    Variable::Param(1),
    Variable::Param(2),
    Variable::Param(3),
    Variable::X,
];

fn alphabet() -> Alphabet {
    Alphabet {
        params: 3,
        indeterminate: true,
    }
}

/// `(c + a − b)^e` with `a ≠ b` so the factor is never a bare constant.
fn factor(
    exps: std::ops::RangeInclusive<i64>,
) -> impl Strategy<Value = (i64, usize, Option<usize>, i64)> {
    (-4i64..=4, 0usize..4, proptest::option::of(0usize..3), exps)
        .prop_map(|(c, a, b, e)| {
            let b = b.map(|k| if k >= a { k + 1 } else { k });
            (c, a, b, e)
        })
        .prop_filter("nonzero exponent", |f| f.3 != 0)
}

fn build(constant: BigRational, factors: &[(i64, usize, Option<usize>, i64)]) -> FactoredRational {
    let mut acc = FactoredRational::from_rational(constant);
    for &(c, a, b, e) in factors {
        acc.mul_linear(c, Some(VARS[a]), b.map(|k| VARS[k]), e)
            .unwrap();
    }
    acc
}

fn rational_fn() -> impl Strategy<Value = FactoredRational> {
    (
        (-5i64..=5).prop_filter("nonzero", |c| *c != 0),
        1i64..=3,
        prop::collection::vec(factor(-2..=2), 0..5),
    )
        .prop_map(|(num, den, fs)| build(BigRational::new(num.into(), den.into()), &fs))
}

fn unit_rational_fn() -> impl Strategy<Value = FactoredRational> {
    (prop::bool::ANY, prop::collection::vec(factor(-2..=2), 0..6)).prop_map(|(neg, fs)| {
        build(
            BigRational::from_integer(if neg { -1 } else { 1 }.into()),
            &fs,
        )
    })
}

fn polynomial() -> impl Strategy<Value = FactoredRational> {
    (
        (-5i64..=5).prop_filter("nonzero", |c| *c != 0),
        prop::collection::vec(factor(1..=2), 0..4),
    )
        .prop_map(|(k, fs)| build(BigRational::from_integer(k.into()), &fs))
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Rationals),
        Just(Field::Prime(101)),
        Just(Field::Prime(10007)),
    ]
}

fn specialization() -> impl Strategy<Value = Specialization> {
    (field(), prop::collection::vec(-50i64..=50, 4)).prop_map(|(f, v)| {
        Specialization::from_integers(f, &v[..3])
            .with_x(f.from_i64(v[3]))
            .unwrap()
    })
}

fn permutation() -> impl Strategy<Value = Permutation> {
    (0usize..6).prop_map(|k| Permutation::all(3)[k].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn mul_is_commutative_and_associative(a in rational_fn(), b in rational_fn(), c in rational_fn()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn unit_times_inverse_is_one(a in unit_rational_fn()) {
        prop_assert!((&a * &a.inverse().unwrap()).is_one());
    }

    #[test]
    fn eval_agrees_with_expansion(a in polynomial(), theta in specialization()) {
        let expanded = a.expand_in(alphabet()).unwrap();
        prop_assert_eq!(a.eval(&theta).unwrap(), expanded.eval(&theta).unwrap());
    }

    #[test]
    fn permutation_is_a_group_action(a in rational_fn(), s in permutation(), t in permutation()) {
        let st = s.compose(&t).unwrap();
        prop_assert_eq!(a.permute(&st), a.permute(&t).permute(&s));
        prop_assert_eq!(a.permute(&Permutation::identity(3)), a.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn expansion_is_multiplicative(a in polynomial(), b in polynomial()) {
        let lhs = (&a * &b).expand_in(alphabet()).unwrap();
        let rhs = a.expand_in(alphabet()).unwrap().mul(&b.expand_in(alphabet()).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn permutation_commutes_with_expansion(a in polynomial(), s in permutation()) {
        let lhs = a.permute(&s).expand_in(alphabet()).unwrap();
        let rhs = a.expand_in(alphabet()).unwrap().permute(&s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_respects_products(a in rational_fn(), b in rational_fn(), theta in specialization()) {
        if let (Ok(x), Ok(y)) = (a.eval(&theta), b.eval(&theta)) {
            prop_assert_eq!((&a * &b).eval(&theta).unwrap(), x.mul(&y).unwrap());
        }
    }

    /// Distinct canonical forms must be distinct functions: they differ at
    /// one of 2(1 + degree) random rational points.
    #[test]
    fn distinct_representations_are_distinct_functions(
        a in rational_fn(),
        b in rational_fn(),
        points in prop::collection::vec(prop::collection::vec(-1000i64..=1000, 4), 64),
    ) {
        prop_assume!(a != b);
        let quotient = a.div(&b).unwrap();
        let degree: i64 = quotient.factors().map(|(_, e)| e.abs()).sum();
        let needed = (2 * (1 + degree)) as usize;
        let mut differs = false;
        let mut tried = 0;
        for p in &points {
            let theta = Specialization::from_integers(Field::Rationals, &p[..3])
                .with_x(Field::Rationals.from_i64(p[3]))
                .unwrap();
            let (Ok(x), Ok(y)) = (a.eval(&theta), b.eval(&theta)) else { continue };
            tried += 1;
            if x != y {
                differs = true;
                break;
            }
            if tried >= needed {
                break;
            }
        }
        prop_assert!(differs, "{} and {} agree at {} points", a, b, tried);
    }
}

#[test]
fn not_a_polynomial_is_reported() {
    let x_over = build(
        BigRational::from_integer(BigInt::from(1)),
        &[(0, 3, None, 1), (1, 3, None, -1)],
    );
    assert!(x_over.expand().is_err());
    let theta = Specialization::from_integers(Field::Rationals, &[0, 0, 0])
        .with_x(FieldElement::Rational(BigRational::from_integer(
            (-1).into(),
        )))
        .unwrap();
    assert!(x_over.eval(&theta).is_err());
}
