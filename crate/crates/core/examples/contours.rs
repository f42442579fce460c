//! A contour holds one leading symbol per cell orbit; it validates and
//! expands to a full square admitting the automorphism.
//!
//! cargo run --example contours

use autotopism::contour::Contour;
use autotopism::perm::parse_permutation;
use autotopism::search::contour_search;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alpha = parse_permutation("(1 2 3)", 5)?;
    let mut c = Contour::new(alpha)?;
    for (i, j, s) in [
        (1, 1, 1),
        (1, 2, 4),
        (1, 3, 5),
        (2, 5, 1),
        (3, 4, 1),
        (4, 3, 1),
        (4, 4, 4),
        (4, 5, 5),
        (5, 2, 1),
        (5, 4, 5),
        (5, 5, 4),
    ] {
        c.set(i, j, s);
    }
    println!("{}", c.render());
    c.validate()?;
    println!("expanded:\n{}", c.expand()?);
    println!("text form:\n{}", c.to_text());

    // Breaking one cell reports the violated condition and its position.
    c.remove(2, 5);
    c.set(3, 5, 1);
    println!("after moving a cell: {}", c.validate().unwrap_err());

    // Search finds a contour for a structure from scratch.
    let alpha = parse_permutation("(1 2 3 4 5 6)(7 8)(9 10)", 11)?;
    let found = contour_search(&alpha).expect("6.2^2.1 is admissible");
    println!("\nsearched contour for 6.2^2.1:\n{}", found.render());
    Ok(())
}
