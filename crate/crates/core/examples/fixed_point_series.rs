//! Power series solutions of algebraic functional equations.
//!
//! cargo run --example fixed_point_series

use permclass::ratfun::{catalan_functional, separable_functional, solve_fixed_point, PowerSeries};

fn main() -> permclass::Result<()> {
    let schroder = solve_fixed_point(10, separable_functional)?;
    println!(
        "f = x + 2f²/(1+f): {:?}",
        &schroder.integer_coeffs_i64().unwrap()[1..]
    );

    let catalan = solve_fixed_point(10, catalan_functional)?;
    println!(
        "f = x(1+f)²:       {:?}",
        &catalan.integer_coeffs_i64().unwrap()[1..]
    );

    // Motzkin paths: f = x(1 + f + f²), counted from length 1.
    let motzkin = solve_fixed_point(10, |f: &PowerSeries| {
        let one = PowerSeries::one(f.order());
        Ok(&PowerSeries::x(f.order()) * &(&(&one + f) + &(f * f)))
    })?;
    println!(
        "f = x(1+f+f²):     {:?}",
        &motzkin.integer_coeffs_i64().unwrap()[1..]
    );

    // f = f + x never settles: each step changes every coefficient.
    let stuck = solve_fixed_point(5, |f: &PowerSeries| Ok(f + &PowerSeries::x(f.order())));
    println!("f = f + x:         {}", stuck.unwrap_err());
    Ok(())
}
