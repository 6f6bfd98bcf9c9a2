//! Small named algebras used throughout the tests and examples.
//!
//! | name | carrier            | structure                                  |
//! |------|--------------------|--------------------------------------------|
//! | B2   | 0 < 1              | two-element Boolean algebra                |
//! | G3   | 0 < a < 1          | Gödel chain, `⊙ = min`                     |
//! | Ł3   | 0 < a < 1          | Łukasiewicz chain, `a ⊙ a = 0`             |
//! | B4   | 0 < a, b < 1       | four-element Boolean algebra (bit vectors) |
//! | N3   | 0 < 1 < t          | idempotent semiring that is not simple     |
//!
//! Chains use indices in increasing order; B4 uses the bit patterns
//! `0 = 00, a = 01, b = 10, 1 = 11`.

use crate::algebra::{BinOp, Carrier, MvAlg, ResiduatedLatticeAlg, SemiringAlg, UnOp};

fn carrier(size: usize, zero: usize, one: usize) -> Carrier {
    Carrier::new(size, zero, one).expect("fixture carrier")
}

fn chain_join(n: usize) -> BinOp {
    BinOp::from_fn(n, |x, y| x.max(y))
}

fn chain_meet(n: usize) -> BinOp {
    BinOp::from_fn(n, |x, y| x.min(y))
}

pub fn b2_semiring() -> SemiringAlg {
    SemiringAlg::new(
        "b2",
        carrier(2, 0, 1),
        BinOp::from_fn(2, |x, y| x | y),
        BinOp::from_fn(2, |x, y| x & y),
    )
    .expect("fixture")
}

pub fn b2_reslat() -> ResiduatedLatticeAlg {
    ResiduatedLatticeAlg::new(
        "b2",
        carrier(2, 0, 1),
        BinOp::from_fn(2, |x, y| x | y),
        BinOp::from_fn(2, |x, y| x & y),
        BinOp::from_fn(2, |x, y| x & y),
        BinOp::from_fn(2, |x, y| (1 - x) | y),
    )
    .expect("fixture")
}

pub fn b2_mv() -> MvAlg {
    MvAlg::new(
        "b2",
        2,
        0,
        BinOp::from_fn(2, |x, y| x | y),
        UnOp::from_fn(2, |x| 1 - x),
    )
    .expect("fixture")
}

pub fn g3_semiring() -> SemiringAlg {
    SemiringAlg::new("g3", carrier(3, 0, 2), chain_join(3), chain_meet(3)).expect("fixture")
}

/// Gödel residuum: `x → y = 1` if `x ≤ y`, else `y`.
pub fn g3_reslat() -> ResiduatedLatticeAlg {
    ResiduatedLatticeAlg::new(
        "g3",
        carrier(3, 0, 2),
        chain_join(3),
        chain_meet(3),
        chain_meet(3),
        BinOp::from_fn(3, |x, y| if x <= y { 2 } else { y }),
    )
    .expect("fixture")
}

/// Truncated sum `max(0, x + y - 1)` in units of one half.
fn l3_odot() -> BinOp {
    BinOp::from_fn(3, |x, y| (x + y).saturating_sub(2))
}

pub fn l3_semiring() -> SemiringAlg {
    SemiringAlg::new("l3", carrier(3, 0, 2), chain_join(3), l3_odot()).expect("fixture")
}

/// Łukasiewicz residuum `min(1, 1 - x + y)`.
pub fn l3_reslat() -> ResiduatedLatticeAlg {
    ResiduatedLatticeAlg::new(
        "l3",
        carrier(3, 0, 2),
        chain_join(3),
        chain_meet(3),
        l3_odot(),
        BinOp::from_fn(3, |x, y| (2 + y - x).min(2)),
    )
    .expect("fixture")
}

pub fn l3_mv() -> MvAlg {
    MvAlg::new(
        "l3",
        3,
        0,
        BinOp::from_fn(3, |x, y| (x + y).min(2)),
        UnOp::from_fn(3, |x| 2 - x),
    )
    .expect("fixture")
}

pub fn b4_semiring() -> SemiringAlg {
    SemiringAlg::new(
        "b4",
        carrier(4, 0, 3),
        BinOp::from_fn(4, |x, y| x | y),
        BinOp::from_fn(4, |x, y| x & y),
    )
    .expect("fixture")
}

/// Boolean algebra as a Heyting structure: `⊙ = ∧`, `x → y = ¬x ∨ y`.
pub fn b4_reslat() -> ResiduatedLatticeAlg {
    ResiduatedLatticeAlg::new(
        "b4",
        carrier(4, 0, 3),
        BinOp::from_fn(4, |x, y| x | y),
        BinOp::from_fn(4, |x, y| x & y),
        BinOp::from_fn(4, |x, y| x & y),
        BinOp::from_fn(4, |x, y| (!x & 3) | y),
    )
    .expect("fixture")
}

/// Chain `0 < 1 < t` under max with `t · t = t`: a commutative idempotent
/// semiring in which `t + 1 = t`.
pub fn n3_semiring() -> SemiringAlg {
    let mul = BinOp::from_fn(3, |x, y| match (x, y) {
        (0, _) | (_, 0) => 0,
        (1, v) | (v, 1) => v,
        _ => 2,
    });
    SemiringAlg::new("n3", carrier(3, 0, 1), chain_join(3), mul).expect("fixture")
}
