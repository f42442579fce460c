mod common;
mod oracle;

use autotopism::latin::is_autotopism;
use autotopism::perm::{Isotopism, Parastrophy};
use autotopism::search::{count_delta, exists_witness, Count};

#[test]
fn trivial_counts_match_the_oracle() {
    assert_eq!(count_delta(&Isotopism::trivial(4), None).unwrap(), Count::Exact(576));
    assert_eq!(count_delta(&Isotopism::trivial(5), None).unwrap(), Count::Exact(161280));
}

#[test]
fn random_triples_match_the_oracle() {
    for n in 3..=5 {
        let squares = oracle::all_squares(n);
        let mut rng = common::rng(n as u64);
        let mut nonzero = 0;
        for _ in 0..50 {
            let theta = common::random_isotopism(&mut rng, n);
            let want = oracle::naive_delta(&theta, &squares);
            assert_eq!(count_delta(&theta, None).unwrap(), Count::Exact(want), "{theta}");
            let w = exists_witness(&theta).unwrap();
            assert_eq!(w.is_some(), want > 0, "{theta}");
            if let Some(l) = w {
                assert!(is_autotopism(&theta, &l));
                nonzero += 1;
            }
        }
        assert!(nonzero >= 10, "sample for n={n} has only {nonzero} members");
    }
}

#[test]
fn delta_is_a_class_function() {
    let mut rng = common::rng(99);
    for n in 3..=5 {
        for _ in 0..8 {
            let theta = common::random_isotopism(&mut rng, n);
            let base = count_delta(&theta, None).unwrap();
            for lambda in Parastrophy::ALL {
                assert_eq!(count_delta(&theta.parastrophe(lambda), None).unwrap(), base);
            }
            for _ in 0..5 {
                let phi = common::random_conjugator(&mut rng, n);
                assert_eq!(count_delta(&theta.conjugate(&phi), None).unwrap(), base);
            }
        }
    }
}
