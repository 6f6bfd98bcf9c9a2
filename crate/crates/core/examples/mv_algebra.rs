//! MV-algebra axioms and the derived residuated lattice.

use reslat::{check_mv, check_optional_law, emit, fixtures, mv_to_reslat, OptionalLaw};

fn main() {
    let mv = fixtures::l3_mv();
    for entry in check_mv(&mv).entries {
        println!("{entry}");
    }
    let l = mv_to_reslat(&mv).unwrap();
    print!("{}", emit(&l.clone().into()));
    println!(
        "matches the built-in chain: {}",
        l.same_tables(&fixtures::l3_reslat())
    );
    for law in [
        OptionalLaw::DoubleNegation,
        OptionalLaw::Prelinear,
        OptionalLaw::Divisible,
    ] {
        println!("{}: {}", law.name(), check_optional_law(&l, law).passed());
    }
}
