//! Idempotency against Boolean structure across small residuated lattices.

use reslat::{check_boolean, check_optional_law, enumerate, EnumKind, OptionalLaw};

fn main() {
    for n in 1..=5 {
        for alg in enumerate(EnumKind::Reslat, n, &[]).unwrap() {
            let l = alg.as_reslat().unwrap();
            let idempotent = check_optional_law(l, OptionalLaw::Idempotent).passed();
            let dnl = check_optional_law(l, OptionalLaw::DoubleNegation).passed();
            let (boolean, _) = check_boolean(l);
            println!(
                "{:<12} idempotent={idempotent:<5} double_negation={dnl:<5} boolean={boolean}",
                alg.name()
            );
        }
    }
}
