//! Counting instances of every class up to isomorphism.

use reslat::{format::emit_stream, EnumKind, Search};

fn main() {
    let search = Search::default();
    for kind in EnumKind::ALL {
        let counts: Vec<usize> = (1..=5)
            .map(|n| search.count(kind, n, &[]).unwrap())
            .collect();
        println!("{kind:<32} {counts:?}");
    }
    let prelinear = search.count(EnumKind::Reslat, 5, &["prelinear"]).unwrap();
    println!("prelinear residuated lattices of size 5: {prelinear}");

    print!(
        "{}",
        emit_stream(&search.enumerate(EnumKind::SemiringCis, 3, &[]).unwrap())
    );
}
