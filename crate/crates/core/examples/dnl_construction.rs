//! The negation map and the construction that needs only `+`, `·` and `n`.

use reslat::{check_dnl, dnl_to_residuated_lattice, fixtures, negation_map, to_residuated_lattice};

fn main() {
    for s in [
        fixtures::l3_semiring(),
        fixtures::g3_semiring(),
        fixtures::b4_semiring(),
    ] {
        let n = negation_map(&s).unwrap();
        println!("{}: n = {:?}", s.name, n.as_slice());
        for entry in check_dnl(&s).unwrap().entries {
            println!("  {entry}");
        }
        match dnl_to_residuated_lattice(&s) {
            Ok(l) => {
                let sum = to_residuated_lattice(&s).unwrap();
                println!("  agrees with the residuum sum: {}", l.same_tables(&sum));
            }
            Err(e) => println!("  construction refused: {e}"),
        }
    }
}
