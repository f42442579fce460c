//! Decides membership for a few cycle-structure triples and names the
//! construction or the violated condition.
//!
//! cargo run --example classify_triples -- "4.2" "4.2" "4.1^2"

use autotopism::conditions::{classify, necessary_conditions};
use autotopism::perm::{CycleStructure, StructureTriple};

fn triple(a: &str, b: &str, c: &str) -> StructureTriple {
    let cs = |s: &str| s.parse::<CycleStructure>().expect("cycle structure");
    StructureTriple::new(cs(a), cs(b), cs(c)).expect("equal degrees")
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let triples = if args.len() == 3 {
        vec![triple(&args[0], &args[1], &args[2])]
    } else {
        vec![
            triple("6.3", "6.3", "6.3"),
            triple("5.1^5", "5.1^5", "5.1^5"),
            triple("4.2", "4.2", "4.1^2"),
            triple("3^2.2^3", "3^4", "2^6"),
            triple("2^3", "2^3", "2^3"),
            triple("4", "2^2", "4"),
            triple("3.1^2", "3.1^2", "5"),
        ]
    };
    for t in triples {
        let v = classify(&t);
        let battery = match necessary_conditions(&t) {
            Ok(()) => "passes".to_string(),
            Err(c) => format!("fails {c}"),
        };
        println!("{:<28} {:<10?} {:<24} battery {battery}", t.to_string(), v.status(), v.provenance());
    }
}
