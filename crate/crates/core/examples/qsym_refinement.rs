//! Quasisymmetric Schur functions summed over rearrangements of a partition
//! recover the Schur function.
//!
//! cargo run --example qsym_refinement -- "(2,1)"

use cthecke::composition::{Composition, SkewShape};
use cthecke::qsym::{quasischur, schur};
use cthecke::verify::refinement_sum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(2,1)".to_string());
    let lambda: Composition = arg.parse()?;
    let m = lambda.size();
    let mut alphas: Vec<Composition> = cthecke::composition::compositions_of(m)
        .into_iter()
        .filter(|a| a.rearrange_to_partition() == lambda)
        .collect();
    alphas.sort();
    for a in &alphas {
        println!("S{a} = {}", quasischur(&SkewShape::straight(a.clone()), m)?);
    }
    let s = schur(&lambda, m)?;
    println!("s{lambda} = {s}");
    println!("sum equals Schur: {}", refinement_sum(&lambda, m)? == s);
    Ok(())
}
