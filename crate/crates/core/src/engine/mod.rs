//! Rational generating functions for `X[U]` and its finitely based
//! subclasses.

mod inflation;
mod profile;
mod system;
mod uspec;

pub use inflation::{indecomposable_gfs, x_inflation_gf, IndecomposableGfs};
pub use profile::{Profile, PropertySet, SKEW, SUM};
pub use system::{class_gf, ProfileSystem, DEFAULT_PROFILE_CAP};
pub use uspec::{FiniteClass, USpec};
