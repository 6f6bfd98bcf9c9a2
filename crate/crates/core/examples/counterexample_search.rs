//! Probing which hypotheses matter by searching for the first violation.

use reslat::{emit, find_counterexample, EnumKind};

fn main() {
    let probes = [
        ("dnl_axiom_i", EnumKind::SemiringCis, 4),
        ("simple", EnumKind::SemiringCi, 4),
        ("prelinear", EnumKind::Reslat, 5),
        ("divisible", EnumKind::Reslat, 5),
        (
            "adjointness_of_constructed_reslat",
            EnumKind::SemiringCis,
            4,
        ),
    ];
    for (law, kind, max) in probes {
        match find_counterexample(law, kind, max).unwrap() {
            Some(c) => {
                println!("{law} over {kind}: {}", c.entry);
                print!("{}", emit(&c.alg));
            }
            None => println!("{law} over {kind}: none up to size {max}"),
        }
    }
}
