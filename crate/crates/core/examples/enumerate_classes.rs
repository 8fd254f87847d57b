//! Brute-force counting of Av(B) and X[U] ∩ Av(B).
//!
//! cargo run --release --example enumerate_classes

use permclass::engine::USpec;
use permclass::enumerate::{
    enumerate_av, enumerate_av_with, enumerate_xu, ClassSpec, EnumerationOptions,
};
use permclass::Permutation;

fn spec(items: &[&str]) -> ClassSpec {
    let perms: Vec<Permutation> = items.iter().map(|s| s.parse().unwrap()).collect();
    ClassSpec::new(&perms).unwrap()
}

fn main() -> permclass::Result<()> {
    println!(
        "Av(2413, 3142): {:?}",
        enumerate_av(&spec(&["2413", "3142"]), 9)?.counts
    );
    println!(
        "Av(231):        {:?}",
        enumerate_av(&spec(&["231"]), 9)?.counts
    );
    println!(
        "X:              {:?}",
        enumerate_xu(&USpec::Trivial, &ClassSpec::empty(), 9)?.counts
    );
    println!(
        "X[inc]:         {:?}",
        enumerate_xu(&USpec::Increasing, &ClassSpec::empty(), 9)?.counts
    );
    println!(
        "X ∩ Av(123):    {:?}",
        enumerate_xu(&USpec::Trivial, &spec(&["123"]), 9)?.counts
    );

    let opts = EnumerationOptions {
        keep_members: true,
        ..Default::default()
    };
    let table = enumerate_av_with(&spec(&["123", "321"]), 4, &opts)?;
    for (n, level) in table.members.unwrap().iter().enumerate() {
        let names: Vec<String> = level.iter().map(ToString::to_string).collect();
        println!("Av(123, 321) length {}: {}", n + 1, names.join(" "));
    }
    Ok(())
}
