//! Block diagrams of squares admitting an automorphism: per block and
//! symbol class, how often each symbol of the class occurs.
//!
//! cargo run --example block_diagrams

use autotopism::contour::block_diagram_of;
use autotopism::latin::LatinSquare;
use autotopism::perm::parse_permutation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alpha = parse_permutation("(1 2 3)(4 5 6)", 6)?;
    let squares = [
        "6\n1 3 2 4 6 5\n3 2 1 6 5 4\n2 1 3 5 4 6\n4 6 5 1 3 2\n6 5 4 3 2 1\n5 4 6 2 1 3\n",
        "6\n4 3 2 1 6 5\n3 5 1 6 2 4\n2 1 6 5 4 3\n1 6 5 4 3 2\n6 2 4 3 5 1\n5 4 3 2 1 6\n",
    ];
    for text in squares {
        let l: LatinSquare = text.parse()?;
        let bd = block_diagram_of(&l, &alpha)?;
        println!("{l}{bd}row/column sums consistent: {}\n", bd.check_sums());
    }
    Ok(())
}
