//! The profile linear system behind `class_gf`, shown step by step.
//!
//! cargo run --example profile_system

use permclass::engine::{ProfileSystem, USpec};
use permclass::enumerate::{enumerate_xu, ClassSpec};
use permclass::Permutation;

fn main() -> permclass::Result<()> {
    let basis: Vec<Permutation> = vec!["123".parse()?];
    let spec = ClassSpec::new(&basis)?;
    let u = USpec::Trivial;
    let sys = ProfileSystem::build(&u, &spec)?;
    let ps = sys.properties();
    println!("properties: {}", ps.width());
    println!("achievable profiles: {}", sys.profiles().len());
    for q in sys.profiles() {
        println!("  {}", ps.describe(q));
    }

    let h = sys.solve()?;
    println!(
        "residual is zero: {}",
        sys.residual(&h).iter().all(|r| r.is_zero())
    );
    for (q, hq) in sys.profiles().iter().zip(&h) {
        println!("  h{} = {hq}", ps.describe(q));
    }

    let gf = sys.class_gf()?;
    println!("X ∩ Av(123): {gf}");
    let series = gf.series(10)?.integer_coeffs().unwrap();
    println!("engine:      {:?}", &series[1..]);
    println!("enumeration: {:?}", enumerate_xu(&u, &spec, 10)?.counts);
    Ok(())
}
