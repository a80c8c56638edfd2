//! The class of shape (1,4,3) containing 1 | 6 5 4 3 | 8 7 2: its Hasse
//! diagram, ranks and the matching interval of the weak order.
//!
//! cargo run --example figure_class > class.dot

use cthecke::hecke::{class_iso_check, partition_classes};
use cthecke::tableau::Tableau;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let source: Tableau = "1 | 6 5 4 3 | 8 7 2".parse()?;
    let class = partition_classes(source.shape())?
        .into_iter()
        .find(|c| c.contains(&source))
        .expect("every tableau lies in some class");

    eprintln!("members: {}", class.len());
    eprintln!(
        "source:  {}  col = {}",
        class.source(),
        class.source().column_word()
    );
    eprintln!(
        "sink:    {}  col = {}",
        class.sink(),
        class.sink().column_word()
    );
    eprintln!("ranks:   {:?}", class.rank_profile());
    let interval = class
        .source()
        .column_word()
        .weak_interval(&class.sink().column_word())?;
    eprintln!(
        "interval [col source, col sink] has {} elements",
        interval.len()
    );
    eprintln!("isomorphic to the interval: {}", class_iso_check(&class));
    for c in class.covers() {
        eprintln!(
            "  {} --π{}--> {}",
            class.members()[c.lower],
            c.label,
            class.members()[c.upper]
        );
    }
    print!("{}", class.to_dot("figure"));
    Ok(())
}
