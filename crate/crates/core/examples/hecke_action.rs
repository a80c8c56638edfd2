//! The 0-Hecke generators acting on a tableau, and the resulting
//! decomposition of a shape into equivalence classes.
//!
//! cargo run --example hecke_action

use cthecke::hecke::{apply_pi, apply_word, partition_classes, HeckeWord};
use cthecke::tableau::Tableau;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t: Tableau = "1 | 6 5 4 3 | 8 7 2".parse()?;
    println!("T = {t}");
    for i in 1..t.size() {
        println!("  π{i} T = {}", apply_pi(i, &t)?);
    }
    let w = HeckeWord::new(vec![3, 2, 1]);
    println!("  {w} T = {}", apply_word(&w, &t)?);

    let classes = partition_classes(t.shape())?;
    println!("\n{} classes for shape {}:", classes.len(), t.shape());
    for (k, c) in classes.iter().enumerate() {
        println!(
            "  class {k:>2}: {:>3} members, source [{}], sink [{}]",
            c.len(),
            c.source(),
            c.sink()
        );
    }
    let total: usize = classes.iter().map(|c| c.len()).sum();
    println!("  total {total}");
    Ok(())
}
