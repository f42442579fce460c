//! Autotopisms transport along conjugation, parastrophes and direct
//! products.
//!
//! cargo run --example transports

use autotopism::construct::build_single_cycle;
use autotopism::latin::{apply_isotopism, direct_product, is_autotopism, parastrophe, product_isotopism};
use autotopism::perm::{parse_permutation, Isotopism, Parastrophy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (l, alpha) = build_single_cycle(5, 3)?;
    let theta = Isotopism::automorphism(alpha);
    let phi = Isotopism::new(
        parse_permutation("(1 4)(2 5)", 5)?,
        parse_permutation("(1 2 3 4 5)", 5)?,
        parse_permutation("(3 5)", 5)?,
    )?;
    let image = apply_isotopism(&phi, &l)?;
    println!("conjugate {} admitted: {}", theta.conjugate(&phi), is_autotopism(&theta.conjugate(&phi), &image));
    for lambda in Parastrophy::ALL {
        let p = parastrophe(&l, lambda);
        println!("parastrophe {:?}: {}", lambda.map(), is_autotopism(&theta.parastrophe(lambda), &p));
    }
    let (m, beta) = build_single_cycle(3, 3)?;
    let prod = direct_product(&l, &m);
    let theta2 = product_isotopism(&theta, &Isotopism::automorphism(beta));
    println!("product of orders 5 and 3 admits {} {}: {}", theta2, theta2.structure(), is_autotopism(&theta2, &prod));
    Ok(())
}
