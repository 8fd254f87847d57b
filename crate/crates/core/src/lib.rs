//! Exact enumeration of permutation classes built as inflations of the
//! class `X = Av(2143, 2413, 3142, 3412)`, and rational generating functions
//! for their finitely based subclasses.
//!
//! The main entry points are:
//!
//! * [`Permutation`] and [`perm`] for patterns, containment and sums;
//! * [`septree`] for separating trees and `X[U]` membership;
//! * [`enumerate`] for brute-force counting, used as ground truth;
//! * [`ratfun`] for exact polynomials, rational functions and series;
//! * [`engine`] for the profile linear system and its solution.

pub mod cli;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod perm;
pub mod ratfun;
pub mod septree;

pub use engine::{class_gf, USpec};
pub use enumerate::{enumerate_av, enumerate_xu, ClassSpec, CountTable};
pub use error::{Error, Result};
pub use perm::Permutation;
pub use ratfun::{PowerSeries, RationalFunction};
