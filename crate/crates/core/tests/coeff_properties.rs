//! Property tests for the coefficient field. Random expression trees are
//! built twice: once through `Coeff` arithmetic, once as plain integer
//! fractions at a sample point, which serves as the independent oracle.

use dynred::coeffs::Poly;
use dynred::{Coeff, WeightVector};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

const N: usize = 3;

#[derive(Clone, Debug)]
enum Expr {
    Int(i64),
    Var(usize),
    /// `h~_i - h~_j + k`, the typical denominator factor.
    Root(usize, usize, i64),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (-3i64..=3).prop_map(Expr::Int),
        (1..=N).prop_map(Expr::Var),
        (1..=N, 1..=N, -3i64..=3)
            .prop_filter("distinct", |(i, j, _)| i != j)
            .prop_map(|(i, j, k)| Expr::Root(i, j, k)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(a.into(), b.into())),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(a.into(), b.into())),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(a.into(), b.into())),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Div(a.into(), b.into())),
        ]
    })
}

/// Division by a zero coefficient falls back to multiplication, in both
/// interpretations.
fn build(e: &Expr) -> Coeff {
    match e {
        Expr::Int(c) => Coeff::integer(N, *c),
        Expr::Var(i) => Coeff::h(N, *i),
        Expr::Root(i, j, k) => &Coeff::h_diff(N, *i, *j) + &Coeff::integer(N, *k),
        Expr::Add(a, b) => &build(a) + &build(b),
        Expr::Sub(a, b) => &build(a) - &build(b),
        Expr::Mul(a, b) => &build(a) * &build(b),
        Expr::Div(a, b) => {
            let d = build(b);
            if d.is_zero() {
                &build(a) * &d
            } else {
                build(a).checked_div(&d).unwrap()
            }
        }
    }
}

type Frac = (BigInt, BigInt);

/// Value at `point`; `None` if some intermediate denominator vanishes there.
fn value(e: &Expr, point: &[i64]) -> Option<Frac> {
    let int = |c: i64| (BigInt::from(c), BigInt::one());
    Some(match e {
        Expr::Int(c) => int(*c),
        Expr::Var(i) => int(point[i - 1]),
        Expr::Root(i, j, k) => int(point[i - 1] - point[j - 1] + k),
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let ((p, q), (r, s)) = (value(a, point)?, value(b, point)?);
            let rs = if matches!(e, Expr::Sub(..)) { -r } else { r };
            (p * &s + rs * &q, q * s)
        }
        Expr::Mul(a, b) => {
            let ((p, q), (r, s)) = (value(a, point)?, value(b, point)?);
            (p * r, q * s)
        }
        Expr::Div(a, b) => {
            let (p, q) = value(a, point)?;
            if build(b).is_zero() {
                (BigInt::zero(), BigInt::one())
            } else {
                let (r, s) = value(b, point)?;
                if r.is_zero() {
                    return None;
                }
                (p * s, q * r)
            }
        }
    })
}

fn same(a: &Frac, b: &Frac) -> bool {
    &a.0 * &b.1 == &b.0 * &a.1
}

fn at(c: &Coeff, point: &[i64]) -> Option<Frac> {
    let p: Vec<BigInt> = point.iter().map(|&x| BigInt::from(x)).collect();
    c.eval(&p)
}

fn coeff() -> impl Strategy<Value = Coeff> {
    expr().prop_map(|e| build(&e))
}

fn point() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-40i64..=40, N)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn arithmetic_matches_pointwise_evaluation(e in expr(), pt in point()) {
        let c = build(&e);
        let expect = value(&e, &pt);
        prop_assume!(expect.is_some());
        match at(&c, &pt) {
            Some(got) => prop_assert!(same(&got, &expect.unwrap()), "{c} at {pt:?}"),
            // a canceled pole can only sit where the oracle also divided by zero
            None => prop_assert!(false, "{c} has a pole at {pt:?} but the expression does not"),
        }
    }

    #[test]
    fn field_axioms(a in coeff(), b in coeff(), c in coeff()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in coeff(), b in coeff(), pt in point()) {
        // equal values at a point and equal text iff equal coefficients
        prop_assert_eq!(a == b, a.serialize() == b.serialize());
        if a == b {
            prop_assert_eq!(at(&a, &pt), at(&b, &pt));
        }
    }

    #[test]
    fn text_round_trip(a in coeff()) {
        let back = Coeff::parse(&a.serialize(), N).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.serialize(), a.serialize());
    }

    #[test]
    fn common_factors_cancel(a in coeff(), g in coeff()) {
        // a = num/den; num*g/(den*g) must come back to a whatever g is
        prop_assume!(!a.is_zero() && g.is_polynomial() && !g.is_zero());
        let gp = g.numerator().clone();
        let widened = Coeff::from_fraction(a.numerator().mul(&gp), a.denominator().mul(&gp), N).unwrap();
        prop_assert_eq!(&widened, &a);
        let plain = Coeff::from_fraction(a.numerator().clone(), a.denominator().clone(), N).unwrap();
        prop_assert_eq!(&plain, &a);
    }

    #[test]
    fn shift_is_an_automorphism(a in coeff(), b in coeff(), w in prop::collection::vec(-3i32..=3, N)) {
        let alpha = WeightVector::from_slice(&w);
        let s = |c: &Coeff| c.shift(&alpha);
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&a).shift(&-alpha.clone()), a.clone());
    }

    #[test]
    fn shift_moves_the_evaluation_point(a in coeff(), w in prop::collection::vec(-3i32..=3, N), pt in point()) {
        let shifted_pt: Vec<i64> = pt.iter().zip(&w).map(|(x, d)| x + *d as i64).collect();
        let lhs = at(&a.shift(&WeightVector::from_slice(&w)), &pt);
        let rhs = at(&a, &shifted_pt);
        match (lhs, rhs) {
            (Some(l), Some(r)) => prop_assert!(same(&l, &r)),
            (l, r) => prop_assert!(l.is_none() && r.is_none()),
        }
    }

    #[test]
    fn permutation_is_an_automorphism(a in coeff(), b in coeff(), sigma in Just(vec![1usize, 2, 3]).prop_shuffle()) {
        let p = |c: &Coeff| c.weyl_permute(&sigma).unwrap();
        prop_assert_eq!(p(&(&a + &b)), &p(&a) + &p(&b));
        prop_assert_eq!(p(&(&a * &b)), &p(&a) * &p(&b));
        let mut inverse = vec![0; N];
        for (k, &s) in sigma.iter().enumerate() {
            inverse[s - 1] = k + 1;
        }
        prop_assert_eq!(p(&a).weyl_permute(&inverse).unwrap(), a.clone());
    }

    #[test]
    fn reflections_square_to_identity(a in coeff(), i in 1..N) {
        prop_assert_eq!(a.reflect(i).reflect(i), a.clone());
        prop_assert_eq!(a.negate_h().negate_h(), a);
    }
}

#[test]
fn zero_denominator_is_rejected() {
    assert!(Coeff::from_fraction(Poly::one(), Poly::zero(), N).is_err());
    assert!(Coeff::zero(N).inv().is_err());
}
