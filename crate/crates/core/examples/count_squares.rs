//! Counts the squares admitting an isotopism by orbit-wise exact cover.
//!
//! cargo run --release --example count_squares

use autotopism::perm::{CycleStructure, Isotopism, StructureTriple};
use autotopism::search::{count_delta, exists_witness};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cs = |s: &str| s.parse::<CycleStructure>();
    for (a, b, c) in [
        ("1^4", "1^4", "1^4"),
        ("1^5", "1^5", "1^5"),
        ("2", "2", "1^2"),
        ("3.1^3", "3.1^3", "3.1^3"),
        ("2^3", "2^3", "2^3"),
        ("4", "4", "4"),
        ("2^3", "3^2", "6"),
    ] {
        let theta = Isotopism::canonical(&StructureTriple::new(cs(a)?, cs(b)?, cs(c)?)?);
        println!("{theta}: Δ = {}", count_delta(&theta, None)?);
    }
    let theta = Isotopism::canonical(&StructureTriple::automorphism(cs("1^7")?));
    println!("trivial, order 7: Δ {}", count_delta(&theta, Some(100_000))?);
    let theta = Isotopism::canonical(&StructureTriple::automorphism(cs("4.2.1")?));
    println!("first square for 4.2.1:\n{}", exists_witness(&theta)?.expect("member"));
    Ok(())
}
