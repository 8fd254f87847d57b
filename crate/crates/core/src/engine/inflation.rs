//! Closed-form generating function of the whole inflation `X[U]`.

use super::USpec;
use crate::error::{Error, Result};
use crate::ratfun::{Poly, Rational, RationalFunction};

/// Generating functions of the sum-indecomposable and skew-indecomposable
/// members of `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndecomposableGfs {
    pub sum_indecomposable: RationalFunction,
    pub skew_indecomposable: RationalFunction,
}

pub fn indecomposable_gfs(u: &USpec) -> Result<IndecomposableGfs> {
    let x = RationalFunction::x();
    // x / (1 - x): every monotone permutation of the opposite direction
    let geometric = || RationalFunction::from_i64(&[0, 1], &[1, -1]);
    Ok(match u {
        USpec::Trivial => IndecomposableGfs {
            sum_indecomposable: x.clone(),
            skew_indecomposable: x,
        },
        USpec::Increasing => IndecomposableGfs {
            sum_indecomposable: x,
            skew_indecomposable: geometric()?,
        },
        USpec::Decreasing => IndecomposableGfs {
            sum_indecomposable: geometric()?,
            skew_indecomposable: x,
        },
        USpec::FiniteSet(c) => {
            let mut sum = vec![Rational::from_integer(0.into()); c.max_len() + 1];
            let mut skew = sum.clone();
            for pi in c.members() {
                if !pi.is_sum_decomposable() {
                    sum[pi.len()] += Rational::from_integer(1.into());
                }
                if !pi.is_skew_decomposable() {
                    skew[pi.len()] += Rational::from_integer(1.into());
                }
            }
            IndecomposableGfs {
                sum_indecomposable: RationalFunction::from_poly(Poly::from_coeffs(sum)),
                skew_indecomposable: RationalFunction::from_poly(Poly::from_coeffs(skew)),
            }
        }
    })
}

/// `g = (x - a² - b²) / (1 - 2a + a² - 2b + b²)` where `a` and `b` count the
/// sum- and skew-indecomposable members of `U`.
///
/// This counts nonempty members of `X[U]` provided the only member of `U`
/// that is both sum and skew indecomposable is the single point, which holds
/// whenever `U` consists of separable permutations.
pub fn x_inflation_gf(
    sum_indecomposable: &RationalFunction,
    skew_indecomposable: &RationalFunction,
) -> Result<RationalFunction> {
    let a = sum_indecomposable;
    let b = skew_indecomposable;
    let one = RationalFunction::one();
    let two = RationalFunction::constant(Rational::from_integer(2.into()));
    let a2 = a * a;
    let b2 = b * b;
    let num = &(&RationalFunction::x() - &a2) - &b2;
    let den = &(&(&(&one - &(&two * a)) + &a2) - &(&two * b)) + &b2;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    num.checked_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn x_class_closed_form() {
        let x = RationalFunction::x();
        let g = x_inflation_gf(&x, &x).unwrap();
        assert_eq!(
            g,
            RationalFunction::from_i64(&[0, 1, -2], &[1, -4, 2]).unwrap()
        );
        assert_eq!(g.to_string(), "(x - 2x^2)/(1 - 4x + 2x^2)");
    }

    #[test]
    fn degenerate_inputs() {
        let z = RationalFunction::zero();
        assert_eq!(x_inflation_gf(&z, &z).unwrap(), RationalFunction::x());
        // a = 1, b = 0 makes the denominator vanish identically.
        assert_eq!(
            x_inflation_gf(&RationalFunction::one(), &RationalFunction::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn monotone_indecomposables_by_brute_force() {
        for (u, which) in [(USpec::Increasing, 0), (USpec::Decreasing, 1)] {
            let gfs = indecomposable_gfs(&u).unwrap();
            let sum = gfs.sum_indecomposable.series(8).unwrap();
            let skew = gfs.skew_indecomposable.series(8).unwrap();
            for n in 1..=8usize {
                let members: Vec<Permutation> =
                    Permutation::all(n).filter(|p| u.contains(p)).collect();
                let si = members.iter().filter(|p| !p.is_sum_decomposable()).count() as i64;
                let ki = members.iter().filter(|p| !p.is_skew_decomposable()).count() as i64;
                let coeff = |s: &crate::ratfun::PowerSeries| s.integer_coeffs_i64().unwrap()[n];
                assert_eq!(coeff(&sum), si, "which={which} n={n}");
                assert_eq!(coeff(&skew), ki, "which={which} n={n}");
            }
        }
        let inc = indecomposable_gfs(&USpec::Increasing).unwrap();
        assert_eq!(inc.sum_indecomposable, RationalFunction::x());
        assert_eq!(
            inc.skew_indecomposable,
            RationalFunction::from_i64(&[0, 1], &[1, -1]).unwrap()
        );
    }

    #[test]
    fn finite_indecomposables() {
        let (u, _) = USpec::finite_closure([&"231".parse::<Permutation>().unwrap()]).unwrap();
        let gfs = indecomposable_gfs(&u).unwrap();
        // {1, 21, 231} are sum indecomposable; {1, 12} skew indecomposable.
        assert_eq!(
            gfs.sum_indecomposable,
            RationalFunction::from_i64(&[0, 1, 1, 1], &[1]).unwrap()
        );
        assert_eq!(
            gfs.skew_indecomposable,
            RationalFunction::from_i64(&[0, 1, 1], &[1]).unwrap()
        );
    }
}
