//! Pattern containment, sums, symmetries and bases.
//!
//! cargo run --example containment

use permclass::perm::{closure, minimal_antichain};
use permclass::Permutation;

fn main() -> permclass::Result<()> {
    let pi: Permutation = "391867452".parse()?;
    let sigma: Permutation = "51342".parse()?;
    println!("{pi} contains {sigma}: {}", pi.contains(&sigma));
    println!("{pi} avoids 123: {}", pi.avoids(&"123".parse()?));

    let a: Permutation = "21".parse()?;
    let b: Permutation = "132".parse()?;
    println!("{a} ⊕ {b} = {}", a.direct_sum(&b));
    println!("{a} ⊖ {b} = {}", a.skew_sum(&b));

    let t: Permutation = "2413".parse()?;
    println!(
        "reverse {t} = {}, complement = {}, inverse = {}",
        t.reverse(),
        t.complement(),
        t.inverse()
    );

    let c: Permutation = "214365".parse()?;
    let parts: Vec<String> = c
        .sum_components()?
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("sum components of {c}: {}", parts.join(" ⊕ "));

    let cl = closure([&t]);
    let names: Vec<String> = cl.iter().map(ToString::to_string).collect();
    println!("Cl({t}) = {{{}}}", names.join(", "));

    let set: Vec<Permutation> = ["123", "1234", "2143", "321"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let basis: Vec<String> = minimal_antichain(&set)
        .iter()
        .map(ToString::to_string)
        .collect();
    println!(
        "minimal elements of {{123, 1234, 2143, 321}}: {{{}}}",
        basis.join(", ")
    );
    Ok(())
}
