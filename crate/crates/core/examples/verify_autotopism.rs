//! Checks an isotopism against a square and reports the first bad cell.
//!
//! cargo run --example verify_autotopism

use autotopism::latin::{apply_isotopism, is_autotopism, LatinSquare};
use autotopism::perm::{parse_permutation, Isotopism};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l: LatinSquare = "5\n1 4 5 2 3\n5 2 4 3 1\n4 5 3 1 2\n2 3 1 4 5\n3 1 2 5 4\n".parse()?;
    println!("square:\n{l}");

    for text in ["(1 2 3)", "(1 2)"] {
        let theta = Isotopism::automorphism(parse_permutation(text, l.order())?);
        match l.first_violation(&theta)? {
            None => println!("{text}: autotopism"),
            Some((i, j)) => println!("{text}: fails at cell ({i}, {j})"),
        }
    }

    // An isotopism maps the square to another; the image admits the conjugate.
    let phi = Isotopism::new(
        parse_permutation("(1 5)", 5)?,
        parse_permutation("(2 4)", 5)?,
        parse_permutation("(3 4 5)", 5)?,
    )?;
    let image = apply_isotopism(&phi, &l)?;
    let theta = Isotopism::automorphism(parse_permutation("(1 2 3)", 5)?);
    println!("conjugate admitted by image: {}", is_autotopism(&theta.conjugate(&phi), &image));
    Ok(())
}
