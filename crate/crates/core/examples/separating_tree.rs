//! Separating trees, inflations and membership in X[U].
//!
//! cargo run --example separating_tree

use permclass::engine::USpec;
use permclass::septree::{inflate, is_in_x, is_in_x_inflation, SeparatingTree};
use permclass::Permutation;

fn main() -> permclass::Result<()> {
    for s in ["132", "2143", "3412", "25314", "2413"] {
        let pi: Permutation = s.parse()?;
        match SeparatingTree::build(&pi)? {
            Some(tree) => println!("{pi}: {tree}"),
            None => println!("{pi}: not separable"),
        }
    }

    let tree: SeparatingTree = "-(+(1, 1), 1, 1)".parse()?;
    println!("{tree} is {}", tree.to_permutation());

    let skeleton: Permutation = "21".parse()?;
    let parts: Vec<Permutation> = vec!["12".parse()?, "231".parse()?];
    let inflated = inflate(&skeleton, &parts)?;
    println!("21[12, 231] = {inflated}");

    let pi: Permutation = "3412".parse()?;
    println!("{pi} in X: {}", is_in_x(&pi));
    for u in [USpec::Trivial, USpec::Increasing, USpec::Decreasing] {
        println!("{pi} in X[{u}]: {}", is_in_x_inflation(&pi, &u));
    }
    Ok(())
}
