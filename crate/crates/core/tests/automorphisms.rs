use autotopism::conditions::{decide_automorphism, Status};
use autotopism::construct::build_automorphism;
use autotopism::latin::is_autotopism;
use autotopism::perm::{CycleStructure, Isotopism};
use autotopism::search::exists_witness;

/// Every decided automorphism structure up to order 14 is built exactly
/// when it is a member, and the built square has the requested structure.
#[test]
fn builder_agrees_with_decision() {
    for n in 1..=14 {
        for cs in CycleStructure::all_of_degree(n) {
            let status = decide_automorphism(&cs).status();
            let built = build_automorphism(&cs);
            match status {
                Status::Member => {
                    let (l, a) = built.unwrap_or_else(|e| panic!("{cs}: {e}"));
                    assert_eq!(a.cycle_structure(), cs);
                    assert!(is_autotopism(&Isotopism::automorphism(a), &l), "{cs}");
                }
                Status::NonMember => assert!(built.is_err(), "{cs} built despite rejection"),
                Status::Undecided => {}
            }
        }
    }
}

/// Decisions with at most three nontrivial cycles match exhaustive search
/// for orders up to 7.
#[test]
fn decision_matches_search() {
    for n in 1..=7 {
        for cs in CycleStructure::all_of_degree(n) {
            let status = decide_automorphism(&cs).status();
            if status == Status::Undecided {
                continue;
            }
            let theta = Isotopism::canonical(&autotopism::perm::StructureTriple::automorphism(cs.clone()));
            let found = exists_witness(&theta).unwrap().is_some();
            assert_eq!(found, status == Status::Member, "{cs}");
        }
    }
}
