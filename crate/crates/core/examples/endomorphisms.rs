//! Endomorphism rings of class modules: trivial for straight shapes, and a
//! decomposable example for a skew shape.
//!
//! cargo run --example endomorphisms

use cthecke::composition::SkewShape;
use cthecke::hecke::partition_classes;
use cthecke::modrep::{build_rep, certify_indecomposable, commutant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for s in ["(2,3)", "(1,3,2)", "(3,1,2)"] {
        let shape: SkewShape = s.parse()?;
        for (k, class) in partition_classes(&shape)?.iter().enumerate() {
            let cert = certify_indecomposable(class)?;
            println!(
                "{shape} class {k}: dim {} dim End {} {:?}",
                cert.dim_module, cert.dim_end, cert.verdict
            );
        }
    }

    let shape: SkewShape = "(1,3)/(2)".parse()?;
    let class = &partition_classes(&shape)?[0];
    let rep = build_rep(class)?;
    println!(
        "\n{shape}: basis {:?}",
        class
            .members()
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
    );
    println!("π1 = {:?}", rep.matrix(1));
    let end = commutant(&rep);
    println!("commutant has dimension {}", end.dim);
    let cert = certify_indecomposable(class)?;
    if let (Some(e), Some((a, b))) = (&cert.idempotent, cert.decomposition()) {
        println!("idempotent {e:?}");
        let show = |vs: &[Vec<cthecke::linalg::Rational>]| {
            vs.iter()
                .map(|v| {
                    format!(
                        "({})",
                        v.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                })
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!("summands: span{{{}}} ⊕ span{{{}}}", show(&a), show(&b));
    }
    Ok(())
}
