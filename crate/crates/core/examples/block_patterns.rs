//! Leading-symbol patterns used inside blocks, the first-block and later
//! offsets, and gapped transversals of cell-orbit windows.
//!
//! cargo run --example block_patterns

use autotopism::contour::{
    delta, gapped_transversal, offset_first, offset_later, place_even_pattern, place_odd_pattern, place_staircase,
    transversal_parity, OrbitWindow, PatternWindow,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = |g| PatternWindow { block_row: 1, block_col: 1, height: 6, width: 6, row: 0, col: 0, g };
    println!("odd g=5:   {:?}", place_odd_pattern(w(5), 1)?);
    println!("even g=6:  {:?}", place_even_pattern(w(6), 1, 7)?);
    println!("stair g=6: {:?}", place_staircase(w(6), 1, 7)?);

    let d1 = 12;
    let first: Vec<isize> = (1..=d1).map(|i| offset_first(d1, i)).collect();
    println!("O_1,i for d1=12: {first:?}");
    let later: Vec<isize> = (1..=10).map(|i| offset_later(4, 6, i)).collect();
    println!("O_j,i for dj=4, g=6: {later:?}");

    for (g, e) in [(6, 3), (6, 5), (5, 4)] {
        let win = OrbitWindow { g, r: 0, c: 0, e, h1: 1, h2: 2 };
        let (d, ok) = transversal_parity(&win);
        println!("g={g} e={e}: delta={} parity({d}) ok={ok} transversal={:?}", delta(g), gapped_transversal(&win)?);
    }
    Ok(())
}
