//! Building `L(S)` from a simple semiring and `S(L)` back from it.

use reslat::{
    check_residuated, emit, fixtures, residuum_from, to_residuated_lattice, to_semiring,
    CisSemiring,
};

fn main() {
    let g3 = fixtures::g3_semiring();
    let cis = CisSemiring::new(&g3).unwrap();
    println!("a -> 0 = sum of x with a*x <= 0 = {}", cis.residuum(1, 0));
    println!("1 -> a = {}", residuum_from(&g3, 2, 1).unwrap());

    let l = to_residuated_lattice(&g3).unwrap();
    println!(
        "residuated lattice laws hold: {}",
        check_residuated(&l).passed()
    );
    print!("{}", emit(&l.clone().into()));

    let s = to_semiring(&l).unwrap();
    println!("S(L(S)) = S: {}", s.same_tables(&g3));
}
