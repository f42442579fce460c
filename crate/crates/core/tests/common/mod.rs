//! Random generators shared by the integration tests.

#![allow(dead_code)]

use autotopism::perm::{canonical_permutation, CycleStructure, Isotopism, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// A uniformly chosen permutation with structure `cs`.
pub fn random_with_structure(rng: &mut ChaCha8Rng, cs: &CycleStructure) -> Permutation {
    let phi = random_perm(rng, cs.degree());
    canonical_permutation(cs).conjugate(&phi)
}

pub fn random_structure(rng: &mut ChaCha8Rng, n: usize) -> CycleStructure {
    let all = CycleStructure::all_of_degree(n);
    all[rng.gen_range(0..all.len())].clone()
}

/// Half of the samples share one cycle structure across components (so
/// that members are common), the rest pick three structures independently.
pub fn random_isotopism(rng: &mut ChaCha8Rng, n: usize) -> Isotopism {
    let (a, b, c) = if rng.gen_bool(0.5) {
        let s = random_structure(rng, n);
        (s.clone(), s.clone(), s)
    } else {
        (random_structure(rng, n), random_structure(rng, n), random_structure(rng, n))
    };
    Isotopism::new(random_with_structure(rng, &a), random_with_structure(rng, &b), random_with_structure(rng, &c))
        .unwrap()
}

pub fn random_conjugator(rng: &mut ChaCha8Rng, n: usize) -> Isotopism {
    Isotopism::new(random_perm(rng, n), random_perm(rng, n), random_perm(rng, n)).unwrap()
}
