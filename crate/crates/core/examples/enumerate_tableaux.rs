//! Standard composition tableaux of a shape, with their descent statistics.
//!
//! cargo run --example enumerate_tableaux -- "(1,3)/(2)"

use cthecke::composition::SkewShape;
use cthecke::tableau::{enumerate_sct, Tableau};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(2,3)".to_string());
    let shape: SkewShape = arg.parse()?;
    let all = enumerate_sct(&shape);
    println!(
        "{} standard composition tableaux of shape {shape}",
        all.len()
    );
    for t in &all {
        let d = t.descent_data();
        println!(
            "  {t:<24} D={:?} AD={:?} nAD={:?} col={}",
            d.descents,
            d.attacking,
            d.non_attacking,
            t.column_word()
        );
    }

    // A skew tableau, its chain in the composition poset and a restriction.
    let t: Tableau = "2 | . 5 4 1 | . . 3".parse()?;
    let chain: Vec<String> = t.chain_of().iter().map(|c| c.to_string()).collect();
    println!("\n{t} has shape {}", t.shape());
    println!(
        "  chain (inner to outer): {}",
        chain.iter().rev().cloned().collect::<Vec<_>>().join(" < ")
    );
    let r = t.restrict_above(2)?;
    println!("  T^(>2) = {r} of shape {}", r.shape());
    Ok(())
}
