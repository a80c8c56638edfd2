//! Left weak order on permutations: lengths, reduced words and an interval
//! with its labelled covers.
//!
//! cargo run --example weak_intervals

use cthecke::permutation::{chain_to_word, Permutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w: Permutation = "16857423".parse()?;
    println!(
        "w = {w}, length {}, left descents {:?}",
        w.length(),
        w.left_descents()
    );
    println!("a reduced word: {:?}", w.reduced_word());
    println!("support: {:?}", w.support());

    let bottom: Permutation = "2134".parse()?;
    let top: Permutation = "4321".parse()?;
    let interval = bottom.weak_interval(&top)?;
    println!(
        "\n[{bottom}, {top}]: {} elements, ranks {:?}",
        interval.len(),
        interval.rank_sizes()
    );
    println!(
        "graded {} lattice {}",
        interval.is_graded(),
        interval.is_lattice()
    );
    for c in interval.covers() {
        println!(
            "  {} --s{}--> {}",
            interval.elements()[c.lower],
            c.label,
            interval.elements()[c.upper]
        );
    }
    let chains = interval.saturated_chains();
    println!(
        "{} maximal chains; first spells {:?}",
        chains.len(),
        chain_to_word(&chains[0])
    );
    Ok(())
}
