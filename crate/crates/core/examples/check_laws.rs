//! Law checking with lexicographically least witnesses.

use reslat::{
    check_isotone, check_optional_law, check_semiring, check_variety_flags, fixtures, OptionalLaw,
};

fn main() {
    let n3 = fixtures::n3_semiring();
    println!("{} as a semiring:", n3.name);
    for entry in check_semiring(&n3)
        .entries
        .iter()
        .chain(&check_variety_flags(&n3).report.entries)
    {
        println!("  {entry}");
    }
    for entry in check_isotone(&n3).unwrap().entries {
        println!("  {entry}");
    }

    for l in [fixtures::g3_reslat(), fixtures::l3_reslat()] {
        println!("{}:", l.name);
        for law in OptionalLaw::ALL {
            for entry in check_optional_law(&l, law).entries {
                println!("  {entry}");
            }
        }
    }
}
