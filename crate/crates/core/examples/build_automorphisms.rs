//! Builds squares for automorphism cycle structures: one cycle, equal
//! lengths, two cycles and each three-cycle case.
//!
//! cargo run --example build_automorphisms -- 6.2^2.1

use autotopism::construct::{
    build_automorphism, build_equal_lengths, build_single_cycle, build_three_cycles, build_two_cycles,
};
use autotopism::contour::Contour;
use autotopism::perm::CycleStructure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(arg) = std::env::args().nth(1) {
        let cs: CycleStructure = arg.parse()?;
        let (l, alpha) = build_automorphism(&cs)?;
        println!("{alpha}\n{}\n{l}", Contour::from_square(&l, &alpha)?.render());
        return Ok(());
    }
    let built = [
        ("single 5", build_single_cycle(5, 5)?),
        ("single 3.1^2", build_single_cycle(5, 3)?),
        ("single 10.1^10", build_single_cycle(20, 10)?),
        ("equal 2^2", build_equal_lengths(2, 2, 0)?),
        ("equal 3^2.1^3", build_equal_lengths(3, 2, 3)?),
        ("two 6.3", build_two_cycles(6, 3, 0)?),
        ("two 16.4.1", build_two_cycles(16, 4, 1)?),
        ("three 6.2^2.1", build_three_cycles(6, 2, 2, 1)?),
        ("three 12^2.4.1", build_three_cycles(12, 12, 4, 1)?),
        ("three 15.5.3", build_three_cycles(15, 5, 3, 0)?),
        ("three 30.10.6.1", build_three_cycles(30, 10, 6, 1)?),
        ("three 18.6.3", build_three_cycles(18, 6, 3, 0)?),
    ];
    for (name, (l, alpha)) in &built {
        println!("{name:<18} order {:>2}  {}", l.order(), alpha.cycle_structure());
    }
    for bad in [(4, 4), (9, 4)] {
        println!("single {bad:?}: {}", build_single_cycle(bad.0, bad.1).unwrap_err());
    }
    println!("two (4, 2, 0): {}", build_two_cycles(4, 2, 0).unwrap_err());
    Ok(())
}
