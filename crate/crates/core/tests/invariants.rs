use autotopism::conditions::classify;
use autotopism::construct::{build_single_cycle, prolong, prolongation_capacity, realize};
use autotopism::latin::{is_autotopism, LatinSquare};
use autotopism::perm::{canonical_permutation, parse_permutation, CycleStructure, Isotopism, Parastrophy, Permutation};
use autotopism::search::normalized_triples;
use proptest::prelude::*;

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn structure(max: usize) -> impl Strategy<Value = CycleStructure> {
    (1..=max).prop_flat_map(|n| {
        let all = CycleStructure::all_of_degree(n);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

proptest! {
    #[test]
    fn canonical_permutation_has_its_structure(cs in structure(12)) {
        let p = canonical_permutation(&cs);
        prop_assert_eq!(p.cycle_structure(), cs.clone());
        prop_assert!(p.is_canonical());
        prop_assert_eq!(cs.to_string().parse::<CycleStructure>().unwrap(), cs);
    }

    #[test]
    fn canonicalizer_reaches_the_canonical_form(p in permutation(12)) {
        let q = p.conjugate(&p.canonicalizer());
        prop_assert!(q.is_canonical());
        prop_assert_eq!(q.cycle_structure(), p.cycle_structure());
    }

    #[test]
    fn cycle_notation_round_trips(p in permutation(12)) {
        prop_assert_eq!(parse_permutation(&p.to_string(), p.degree()).unwrap(), p);
    }

    #[test]
    fn group_laws(p in permutation(10), k in -20i64..20) {
        let n = p.degree();
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert!(p.power(p.order() as i64).is_identity());
        prop_assert_eq!(p.power(k).compose(&p.power(-k)), Permutation::identity(n));
    }

    #[test]
    fn classification_is_invariant_under_parastrophy(a in structure(9), seed in 0usize..1000) {
        let n = a.degree();
        let all = CycleStructure::all_of_degree(n);
        let (b, c) = (all[seed % all.len()].clone(), all[(seed / 7) % all.len()].clone());
        let t = autotopism::perm::StructureTriple::new(a, b, c).unwrap();
        let status = classify(&t).status();
        for lambda in Parastrophy::ALL {
            prop_assert_eq!(classify(&t.parastrophe(lambda)).status(), status);
        }
    }

    #[test]
    fn realized_witnesses_admit_the_canonical_isotopism(n in 1usize..=7, k in 0usize..10_000) {
        let members: Vec<_> = normalized_triples(n)
            .into_iter()
            .filter_map(|t| realize(&t).ok().map(|r| (t, r)))
            .collect();
        let (t, (l, theta)) = &members[k % members.len()];
        prop_assert_eq!(theta, &Isotopism::canonical(t));
        prop_assert!(is_autotopism(theta, l));
        prop_assert_eq!(l.to_string().parse::<LatinSquare>().unwrap(), l.clone());
    }

    #[test]
    fn prolongation_adds_exactly_the_requested_fixed_points(d in 2usize..=12, extra in 0usize..6, nu in 0usize..8) {
        let n = d + extra;
        prop_assume!((d == n && n % 2 == 1) || (n.div_ceil(2) <= d && d < n));
        let (l, alpha) = build_single_cycle(n, d).unwrap();
        let mu = prolongation_capacity(&l, &alpha);
        let result = prolong(&l, &alpha, nu);
        if nu <= mu {
            let (l2, a2) = result.unwrap();
            prop_assert_eq!(a2.cycle_structure().fixed_points(), n - d + nu);
            prop_assert!(is_autotopism(&Isotopism::automorphism(a2), &l2));
        } else {
            prop_assert!(result.is_err());
        }
    }
}
