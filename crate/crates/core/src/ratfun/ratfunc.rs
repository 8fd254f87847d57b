//! Rational functions over ℚ in lowest terms with a monic denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Poly, PowerSeries, Rational};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading_coeff().expect("nonzero denominator").recip();
        RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(Poly::one())
    }

    pub fn x() -> Self {
        RationalFunction::from_poly(Poly::x())
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction::from_poly(Poly::constant(c))
    }

    /// Convenience constructor from integer coefficient lists (ascending).
    pub fn from_i64(num: &[i64], den: &[i64]) -> Result<Self> {
        RationalFunction::new(Poly::from_i64(num), Poly::from_i64(den))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// x-adic valuation (`ord_x num - ord_x den`); `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        let vn = self.num.valuation()? as i64;
        let vd = self.den.valuation().expect("nonzero denominator") as i64;
        Some(vn - vd)
    }

    /// True iff this is a power series with vanishing constant term, i.e. it
    /// is divisible by `x` in `ℚ[[x]]`.
    pub fn has_zero_constant_term(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 1)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Presentation form `(num', den')` with the same ratio, where `den'` has
    /// coprime integer coefficients and its lowest-order nonzero coefficient
    /// is positive (the constant term whenever that is nonzero).
    pub fn integer_form(&self) -> (Poly, Poly) {
        let (s, mut den) = self.den.primitive_part();
        let mut scale = s.recip();
        let lead_sign_neg = match den.valuation() {
            Some(v) => den.coeff(v) < Rational::zero(),
            None => false,
        };
        if lead_sign_neg {
            den = -&den;
            scale = -scale;
        }
        (self.num.scale(&scale), den)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(RationalFunction::one(), |acc, _| &acc * self)
    }

    /// Coefficients `c_0..=c_order` of the Taylor expansion at 0, via the
    /// linear recurrence defined by the denominator.
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        let d0 = self.den.constant_term();
        if d0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        let d0_inv = d0.recip();
        let den = self.den.coeffs();
        let mut c: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.num.coeff(k);
            for (j, dj) in den.iter().enumerate().skip(1).take(k) {
                acc -= dj * &c[k - j];
            }
            c.push(acc * &d0_inv);
        }
        Ok(PowerSeries::new(c, order))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (num, den) = self.integer_form();
        write!(f, "({num})/({den})")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

/// JSON form: ascending coefficient lists, each coefficient a string `p` or
/// `p/q`.
#[derive(Serialize, Deserialize)]
struct Wire {
    num: Vec<String>,
    den: Vec<String>,
}

fn to_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(Rational::to_string).collect()
}

fn from_strings(v: &[String]) -> std::result::Result<Poly, String> {
    v.iter()
        .map(|s| {
            s.trim()
                .parse::<Rational>()
                .map_err(|_| format!("invalid rational coefficient `{s}`"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Poly::from_coeffs)
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (num, den) = self.integer_form();
        Wire {
            num: to_strings(&num),
            den: to_strings(&den),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(deserializer)?;
        let num = from_strings(&w.num).map_err(serde::de::Error::custom)?;
        let den = from_strings(&w.den).map_err(serde::de::Error::custom)?;
        RationalFunction::new(num, den).map_err(serde::de::Error::custom)
    }
}
