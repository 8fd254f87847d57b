//! Closed form for the whole inflation X[U] when U is separable.
//!
//! cargo run --example x_inflation

use permclass::engine::{indecomposable_gfs, x_inflation_gf, USpec};
use permclass::Permutation;

fn main() -> permclass::Result<()> {
    let top: Permutation = "231".parse()?;
    let (finite, _) = USpec::finite_closure([&top])?;
    for u in [USpec::Trivial, USpec::Increasing, USpec::Decreasing, finite] {
        let gfs = indecomposable_gfs(&u)?;
        let g = x_inflation_gf(&gfs.sum_indecomposable, &gfs.skew_indecomposable)?;
        let series = g.series(8)?.integer_coeffs().unwrap();
        let terms: Vec<String> = series[1..].iter().map(ToString::to_string).collect();
        println!("X[{u}]");
        println!("  sum indecomposables  {}", gfs.sum_indecomposable);
        println!("  skew indecomposables {}", gfs.skew_indecomposable);
        println!("  g = {g}");
        println!("  {}", terms.join(", "));
    }
    Ok(())
}
