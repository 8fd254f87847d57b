//! Exact algebra over ℚ: polynomials, rational functions, truncated power
//! series and linear systems over ℚ(x). No floating point is used anywhere.

mod linsolve;
mod poly;
mod ratfunc;
mod series;

pub use linsolve::{fixed_point_residual, solve_fixed_point_system, solve_linear};
pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use series::{catalan_functional, separable_functional, solve_fixed_point, PowerSeries};

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = num_rational::BigRational;
