//! Finite residuated lattices and commutative idempotent simple semirings.
//!
//! Every residuated lattice `L` is a commutative idempotent simple semiring
//! `S(L) = (L, ∨, ⊙, 0, 1)`, and every finite commutative idempotent simple
//! semiring `S` becomes a residuated lattice `L(S)` with the residuum
//! `a → b = Σ{x | a·x ≤ b}`. This crate builds both translations over
//! explicit operation tables, checks every law involved with
//! lexicographically least witnesses, and enumerates all small algebras up
//! to isomorphism so the correspondence can be verified exhaustively.
//!
//! The runnable programs under `examples/` walk through each capability:
//!
//! ```bash
//! cargo run -p reslat --example check_laws
//! cargo run -p reslat --example theorem_sweep
//! ```

pub mod algebra;
pub mod canon;
pub mod cli;
pub mod constructions;
pub mod enumerate;
mod error;
pub mod fixtures;
pub mod format;
pub mod order;
pub mod registry;
pub mod report;
pub mod residuated_laws;
pub mod semiring_laws;

pub use algebra::{
    AlgebraValue, BinOp, Carrier, Elem, Kind, MvAlg, ResiduatedLatticeAlg, SemiringAlg, UnOp,
};
pub use canon::{canonical_form, canonicalize};
pub use constructions::{
    check_dnl, check_prelinearity_identity, dnl_to_residuated_lattice, negation_map, residuum_from,
    roundtrip, to_residuated_lattice, to_semiring, CisSemiring,
};
pub use enumerate::{
    enumerate, find_counterexample, sweep_verify, EnumKind, Guard, Search, SweepReport, Theorem,
};
pub use error::{Error, Result};
pub use format::{emit, parse_algebra, parse_algebras};
pub use order::{induced_order, meet_table, supremum, OrderRel};
pub use report::{LawEntry, LawReport, Witness};
pub use residuated_laws::{
    check_boolean, check_mv, check_negation_laws, check_optional_law, check_residuated,
    mv_to_reslat, negation_of, OptionalLaw,
};
pub use semiring_laws::{check_isotone, check_semiring, check_variety_flags, VarietyFlags};
