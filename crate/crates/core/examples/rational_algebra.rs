//! Exact rational functions, series expansion and linear systems over ℚ(x).
//!
//! cargo run --example rational_algebra

use permclass::ratfun::{solve_fixed_point_system, RationalFunction};

fn main() -> permclass::Result<()> {
    let x = RationalFunction::x();
    let one = RationalFunction::one();

    // (x - 2x²)/(1 - 4x + 2x²) + 1 = (1 - 3x)/(1 - 4x + 2x²)
    let g = RationalFunction::from_i64(&[0, 1, -2], &[1, -4, 2])?;
    let with_empty = &g + &one;
    println!("g + 1 = {with_empty}");
    println!("series: {}", with_empty.series(8)?);
    println!("json:   {}", serde_json::to_string(&with_empty).unwrap());

    // Reduction to lowest terms.
    let f = RationalFunction::from_i64(&[-1, 0, 1], &[-1, 1])?;
    println!("(x² - 1)/(x - 1) = {f}");

    // h = M·h + v with M = [[x, x], [x, 0]], v = [x, x].
    let m = vec![
        vec![x.clone(), x.clone()],
        vec![x.clone(), RationalFunction::zero()],
    ];
    let v = vec![x.clone(), x.clone()];
    let h = solve_fixed_point_system(&m, &v)?;
    for (i, hi) in h.iter().enumerate() {
        println!("h{i} = {hi}");
    }

    match one.checked_div(&RationalFunction::zero()) {
        Ok(_) => unreachable!(),
        Err(e) => println!("1/0: {e}"),
    }
    Ok(())
}
