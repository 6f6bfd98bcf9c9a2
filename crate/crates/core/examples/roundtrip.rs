//! Both round trips, `S -> L -> S` and `L -> S -> L`, on every fixture.

use reslat::{fixtures, roundtrip, AlgebraValue};

fn main() {
    let algebras: Vec<AlgebraValue> = vec![
        fixtures::b2_semiring().into(),
        fixtures::l3_semiring().into(),
        fixtures::g3_semiring().into(),
        fixtures::b4_reslat().into(),
        fixtures::g3_reslat().into(),
        fixtures::l3_mv().into(),
    ];
    for alg in &algebras {
        let report = roundtrip(alg);
        println!(
            "{} ({}): {}",
            alg.name(),
            alg.kind(),
            if report.passed() { "PASS" } else { "FAIL" }
        );
        for entry in &report.entries {
            println!("  {entry}");
        }
    }
}
