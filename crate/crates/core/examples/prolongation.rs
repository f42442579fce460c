//! Adds fixed points to an automorphism by diverting one orbit per cycle
//! into a new row and column.
//!
//! cargo run --example prolongation

use autotopism::construct::{halving_square, prolong, prolongation_capacity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (l, alpha) = halving_square(3)?;
    println!("base {alpha}, capacity {}\n{l}", prolongation_capacity(&l, &alpha));
    for nu in 1..=3 {
        let (l2, a2) = prolong(&l, &alpha, nu)?;
        println!("nu = {nu}: {}\n{l2}", a2.cycle_structure());
    }
    println!("nu = 4: {}", prolong(&l, &alpha, 4).unwrap_err());
    Ok(())
}
