//! Autotopisms that are not automorphisms: the horse pattern and powers
//! of the cyclic-group isotopism; `realize` maps parastrophes back.
//!
//! cargo run --example horse_and_trivial

use autotopism::construct::{build_horse, realize, trivial_component_witness};
use autotopism::perm::{CycleStructure, StructureTriple};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (l, theta) = build_horse(6)?;
    println!("horse {theta} {}\n{l}", theta.structure());
    let (l, theta) = trivial_component_witness(6, 3)?;
    println!("cyclic power {theta} {}\n{l}", theta.structure());

    let cs = |s: &str| s.parse::<CycleStructure>();
    for (a, b, c) in [("3", "1^3", "3"), ("2^2", "4", "4"), ("1^6", "2^3", "2^3")] {
        let t = StructureTriple::new(cs(a)?, cs(b)?, cs(c)?)?;
        let (l, theta) = realize(&t)?;
        println!("realized {t} by {theta}\n{l}");
    }
    Ok(())
}
