use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use multisign::expr::{
    eval, eval_str, format_expr, format_value, grouping_sensitivity, parse, Expr, Shape, Value,
};
use multisign::structures::{from_signed, to_signed, MultisignTuple, SignedRational};
use multisign::{solve_linear, Magnitude, MultisignNumber};

fn magnitude() -> impl Strategy<Value = Magnitude> {
    (0u64..500, 1u64..40).prop_map(|(n, d)| Magnitude::new(n, d).unwrap())
}

fn nonzero_magnitude() -> impl Strategy<Value = Magnitude> {
    (1u64..500, 1u64..40).prop_map(|(n, d)| Magnitude::new(n, d).unwrap())
}

fn number(s: u32) -> impl Strategy<Value = MultisignNumber> {
    (1..=s, magnitude()).prop_map(move |(d, m)| {
        if m.is_zero() {
            MultisignNumber::zero(s)
        } else {
            MultisignNumber::make(s, d.into(), m).unwrap()
        }
    })
}

fn nonzero(s: u32) -> impl Strategy<Value = MultisignNumber> {
    (1..=s, nonzero_magnitude())
        .prop_map(move |(d, m)| MultisignNumber::make(s, d.into(), m).unwrap())
}

fn triple() -> impl Strategy<Value = (MultisignNumber, MultisignNumber, MultisignNumber)> {
    (1u32..=7).prop_flat_map(|s| (number(s), number(s), number(s)))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-400i64..400, 1i64..40).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn leaf_expr(s: u32) -> impl Strategy<Value = Expr> {
    number(s).prop_map(Expr::literal)
}

/// At most `2^depth` leaves, which keeps addition chains within the
/// grouping-analysis limit for `depth <= 3`.
fn expr(s: u32, depth: u32) -> impl Strategy<Value = Expr> {
    leaf_expr(s).prop_recursive(depth, 1 << depth, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::add(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Expr::mul(l, r)),
        ]
    })
}

proptest! {
    #[test]
    fn magnitude_text_round_trips(m in magnitude()) {
        prop_assert_eq!(m.to_string().parse::<Magnitude>().unwrap(), m);
    }

    #[test]
    fn magnitude_sub_inverts_add(a in magnitude(), b in magnitude()) {
        let sum = &a + &b;
        prop_assert_eq!(sum.checked_sub(&b).unwrap(), a.clone());
        prop_assert!(sum >= a);
    }

    #[test]
    fn commutativity((x, y, _) in triple()) {
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
    }

    #[test]
    fn identities((x, _, _) in triple()) {
        let s = x.signs_count();
        prop_assert_eq!(x.add(&MultisignNumber::zero(s)).unwrap(), x.clone());
        prop_assert_eq!(x.mul(&MultisignNumber::one(s)).unwrap(), x.clone());
        prop_assert!(x.mul(&MultisignNumber::zero(s)).unwrap().is_zero());
    }

    #[test]
    fn multiplication_is_associative((x, y, z) in triple()) {
        let left = x.mul(&y).unwrap().mul(&z).unwrap();
        let right = x.mul(&y.mul(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn distributes_both_sides((x, y, z) in triple()) {
        let left = x.mul(&y.add(&z).unwrap()).unwrap();
        prop_assert_eq!(left, x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap());
        let right = y.add(&z).unwrap().mul(&x).unwrap();
        prop_assert_eq!(right, y.mul(&x).unwrap().add(&z.mul(&x).unwrap()).unwrap());
    }

    #[test]
    fn associative_when_at_most_two_labels((x, y, z) in triple()) {
        let labels: BTreeSet<u32> = [&x, &y, &z].iter().map(|v| v.sign().index()).collect();
        prop_assume!(labels.len() <= 2 || [&x, &y, &z].iter().any(|v| v.is_zero()));
        let left = x.add(&y).unwrap().add(&z).unwrap();
        let right = x.add(&y.add(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn two_sign_addition_is_associative(x in number(2), y in number(2), z in number(2)) {
        let left = x.add(&y).unwrap().add(&z).unwrap();
        let right = x.add(&y.add(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn additive_inverses_cancel(x in (1u32..=7).prop_flat_map(number)) {
        let invs = x.additive_inverses();
        let expected = if x.is_zero() { 1 } else { (x.signs_count() - 1) as usize };
        prop_assert_eq!(invs.len(), expected);
        for y in invs.iter() {
            prop_assert!(x.add(y).unwrap().is_zero());
        }
    }

    #[test]
    fn nonzero_additive_inverse_count(x in (1u32..=7).prop_flat_map(nonzero)) {
        let s = x.signs_count();
        let invs = x.additive_inverses();
        prop_assert_eq!(invs.len(), (s - 1) as usize);
        for y in invs.iter() {
            prop_assert!(x.add(y).unwrap().is_zero());
            prop_assert_eq!(y.magnitude(), x.magnitude());
            prop_assert_ne!(y.sign(), x.sign());
        }
    }

    #[test]
    fn multiplicative_inverse(x in (1u32..=7).prop_flat_map(nonzero)) {
        let s = x.signs_count();
        let inv = x.mul_inverse().unwrap();
        prop_assert_eq!(x.mul(&inv).unwrap(), MultisignNumber::one(s));
        prop_assert_eq!(inv.mul_inverse().unwrap(), x.clone());
    }

    #[test]
    fn linear_solutions_satisfy_equation(
        (a, b) in (1u32..=6).prop_flat_map(|s| (nonzero(s), number(s)))
    ) {
        let set = solve_linear(&a, &b).unwrap();
        let s = a.signs_count();
        let expected = if b.is_zero() { 1 } else { (s - 1) as usize };
        prop_assert_eq!(set.len(), expected);
        for x in set.iter() {
            prop_assert!(x.mul(&a).unwrap().add(&b).unwrap().is_zero());
        }
    }

    #[test]
    fn two_sign_map_is_a_homomorphism(a in rational(), b in rational()) {
        let (ra, rb) = (SignedRational::from_rational(&a), SignedRational::from_rational(&b));
        let (x, y) = (from_signed(&ra), from_signed(&rb));
        prop_assert_eq!(to_signed(&x.add(&y).unwrap()).unwrap().to_rational(), &a + &b);
        prop_assert_eq!(to_signed(&x.mul(&y).unwrap()).unwrap().to_rational(), &a * &b);
        prop_assert_eq!(to_signed(&x).unwrap(), ra);
    }

    #[test]
    fn tuple_operations_are_componentwise(
        (xs, ys) in prop::collection::vec(1u32..=5, 1..4).prop_flat_map(|shape| {
            let slots = |shape: &[u32]| shape.iter().map(|&s| number(s)).collect::<Vec<_>>();
            (slots(&shape), slots(&shape))
        })
    ) {
        let x = MultisignTuple::new(xs.clone()).unwrap();
        let y = MultisignTuple::new(ys.clone()).unwrap();
        let sum = x.add(&y).unwrap();
        let product = x.mul(&y).unwrap();
        for t in 0..xs.len() {
            prop_assert_eq!(&sum.slots()[t], &xs[t].add(&ys[t]).unwrap());
            prop_assert_eq!(&product.slots()[t], &xs[t].mul(&ys[t]).unwrap());
        }
        let predicted: usize = xs.iter().map(|v| v.additive_inverses().len()).product();
        prop_assert_eq!(x.additive_inverses().len(), predicted);
    }

    #[test]
    fn value_text_round_trips(x in (1u32..=7).prop_flat_map(number)) {
        let s = x.signs_count();
        let v = Value::Number(x);
        prop_assert_eq!(eval_str(&format_value(&v), &Shape::Scalar(s)).unwrap(), v);
    }

    #[test]
    fn expression_text_round_trips(e in (1u32..=5).prop_flat_map(|s| expr(s, 4))) {
        let s = match eval(&e).unwrap() {
            Value::Number(x) => x.signs_count(),
            Value::Tuple(_) => unreachable!(),
        };
        let back = parse(&format_expr(&e), &Shape::Scalar(s)).unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(eval(&back).unwrap(), eval(&e).unwrap());
    }

    #[test]
    fn sensitivity_contains_written_value(e in (1u32..=4).prop_flat_map(|s| expr(s, 3))) {
        let report = grouping_sensitivity(&e).unwrap();
        prop_assert!(report.distinct_values.contains(&report.value));
        prop_assert_eq!(report.is_sensitive, report.distinct_values.len() > 1);
        if let Some((written, other)) = &report.witness_groupings {
            prop_assert_ne!(eval(written).unwrap(), eval(other).unwrap());
        }
    }

    #[test]
    fn two_sign_expressions_are_insensitive(e in expr(2, 3)) {
        prop_assert!(!grouping_sensitivity(&e).unwrap().is_sensitive);
    }
}
