//! Truncated power series over ℚ and a fixed-point solver for functional
//! equations `f = Φ(f)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// Coefficients `c_0..=c_order`; everything beyond `order` is unknown.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
    order: usize,
}

impl PowerSeries {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        PowerSeries { coeffs, order }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::new(vec![Rational::one()], order)
    }

    pub fn x(order: usize) -> Self {
        PowerSeries::new(vec![Rational::zero(), Rational::one()], order)
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        PowerSeries::new(p.coeffs().to_vec(), order)
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        PowerSeries::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// Restricts to a lower truncation order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        PowerSeries::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::SeriesNotInvertible);
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for k in 1..=self.order {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-(acc * &inv0));
        }
        Ok(PowerSeries {
            coeffs: out,
            order: self.order,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(PowerSeries::one(self.order), |acc, _| &acc * self)
    }

    /// Coefficients as exact integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn integer_coeffs_i64(&self) -> Option<Vec<i64>> {
        self.integer_coeffs()?
            .iter()
            .map(ToPrimitive::to_i64)
            .collect()
    }

    pub fn is_nonnegative_integral(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// First index where two series differ, up to the smaller order.
    pub fn first_difference(&self, other: &PowerSeries) -> Option<usize> {
        let n = self.order.min(other.order);
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
            .collect();
        PowerSeries { coeffs, order }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
            .collect();
        PowerSeries { coeffs, order }
    }
}

/// Cauchy product truncated to the smaller order.
impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs, order }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = Poly::from_coeffs(self.coeffs.clone());
        write!(f, "{p} + O(x^{})", self.order + 1)
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries({self})")
    }
}

/// Solves `f = phi(f)` for the series `f` with `f(0) = 0`, modulo
/// `x^(order+1)`.
///
/// Iterates `phi` from zero `order + 1` times. When `phi` raises x-adic
/// agreement by one per step this reaches the unique solution; otherwise the
/// final self-consistency check fails with [`Error::NonContraction`].
pub fn solve_fixed_point<F>(order: usize, phi: F) -> Result<PowerSeries>
where
    F: Fn(&PowerSeries) -> Result<PowerSeries>,
{
    let mut f = PowerSeries::zero(order);
    for _ in 0..=order {
        f = phi(&f)?.truncate(order);
    }
    let check = phi(&f)?.truncate(order);
    if let Some(at) = check.first_difference(&f) {
        return Err(Error::NonContraction { order, at });
    }
    if check.order() < order {
        return Err(Error::NonContraction {
            order,
            at: check.order() + 1,
        });
    }
    if !f.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    Ok(f)
}

/// `f = x + 2f²/(1+f)`: separable permutations by first sum component.
pub fn separable_functional(f: &PowerSeries) -> Result<PowerSeries> {
    let order = f.order();
    let one_plus_f = &PowerSeries::one(order) + f;
    let quad = &(f * f) * &one_plus_f.recip()?;
    Ok(&PowerSeries::x(order) + &quad.scale(&Rational::from_integer(2.into())))
}

/// `f = x(1+f)²`: 231-avoiders.
pub fn catalan_functional(f: &PowerSeries) -> Result<PowerSeries> {
    let order = f.order();
    let one_plus_f = &PowerSeries::one(order) + f;
    Ok(&PowerSeries::x(order) * &one_plus_f.pow(2))
}
