//! Algebraic laws for polynomials, rational functions, series and the
//! linear solver.

use num_bigint::BigInt;
use permclass::ratfun::{
    fixed_point_residual, solve_fixed_point_system, solve_linear, Poly, PowerSeries, Rational,
    RationalFunction,
};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 0..=max_len).prop_map(Poly::from_coeffs)
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (poly(4), poly(3).prop_filter("nonzero", |d| !d.is_zero()))
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

/// Rational function with nonzero constant term in the denominator.
fn regular_ratfun() -> impl Strategy<Value = RationalFunction> {
    (poly(4), poly(3), 1i64..=5).prop_map(|(n, d, c)| {
        let den = &d * &Poly::x() + Poly::constant(Rational::from_integer(c.into()));
        RationalFunction::new(n, den).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &RationalFunction::zero(), a.clone());
        prop_assert_eq!(&a * &RationalFunction::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        }
    }

    #[test]
    fn normal_form_is_canonical(a in ratfun()) {
        prop_assert!(a.den().leading_coeff().is_some_and(|c| *c == Rational::from_integer(1.into())));
        prop_assert!(Poly::gcd(a.num(), a.den()).is_one());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<RationalFunction>(&json).unwrap(), a);
    }

    #[test]
    fn poly_division(a in poly(6), b in poly(4).prop_filter("nonzero", |b| !b.is_zero())) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn series_is_a_ring_homomorphism(a in regular_ratfun(), b in regular_ratfun()) {
        let n = 8;
        let (sa, sb) = (a.series(n).unwrap(), b.series(n).unwrap());
        prop_assert_eq!((&a * &b).series(n).unwrap(), cauchy(&sa, &sb));
        prop_assert_eq!((&a + &b).series(n).unwrap(), &sa + &sb);
    }

    #[test]
    fn series_recip(a in regular_ratfun().prop_filter("unit", |a| !a.has_zero_constant_term())) {
        let s = a.series(7).unwrap();
        prop_assert_eq!(&s * &s.recip().unwrap(), PowerSeries::one(7));
    }

    #[test]
    fn fixed_point_systems_have_zero_residual(
        entries in prop::collection::vec(regular_ratfun(), 9),
        v in prop::collection::vec(ratfun(), 3),
    ) {
        let m: Vec<Vec<RationalFunction>> = entries
            .chunks(3)
            .map(|row| row.iter().map(|e| e * &RationalFunction::x()).collect())
            .collect();
        let h = solve_fixed_point_system(&m, &v).unwrap();
        prop_assert!(fixed_point_residual(&m, &h, &v).iter().all(RationalFunction::is_zero));
    }
}

/// Schoolbook product of truncated series.
fn cauchy(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    let n = a.order().min(b.order());
    let c = (0..=n)
        .map(|k| (0..=k).map(|i| a.coeff(i) * b.coeff(k - i)).sum())
        .collect();
    PowerSeries::new(c, n)
}

#[test]
fn linear_solve_matches_cramer_2x2() {
    let f = |n: &[i64], d: &[i64]| RationalFunction::from_i64(n, d).unwrap();
    let a = vec![
        vec![f(&[1], &[1]), f(&[0, 1], &[1])],
        vec![f(&[2], &[1, 1]), f(&[1, -1], &[1])],
    ];
    let b = vec![f(&[1], &[1]), f(&[0, 0, 1], &[1])];
    let h = solve_linear(&a, &b).unwrap();
    let det = &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0]);
    let h0 = (&(&b[0] * &a[1][1]) - &(&a[0][1] * &b[1]))
        .checked_div(&det)
        .unwrap();
    let h1 = (&(&a[0][0] * &b[1]) - &(&b[0] * &a[1][0]))
        .checked_div(&det)
        .unwrap();
    assert_eq!(h, vec![h0, h1]);
}
