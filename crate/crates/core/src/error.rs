use thiserror::Error;

use crate::algebra::{Elem, Kind};
use crate::report::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: op `{op}` needs {expected} row(s), found {found}")]
    RowCount {
        line: usize,
        op: String,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: op `{op}` row has {found} entries, expected {expected}")]
    RowLength {
        line: usize,
        op: String,
        expected: usize,
        found: usize,
    },

    #[error("line {line}, column {column}: index {index} out of range for size {size}")]
    IndexOutOfRange {
        line: usize,
        column: usize,
        index: usize,
        size: usize,
    },

    #[error("missing op `{op}` required by kind {kind}")]
    MissingOp { op: String, kind: Kind },

    #[error("line {line}: duplicate op `{op}`")]
    DuplicateOp { line: usize, op: String },

    #[error("line {line}: op `{op}` does not belong to kind {kind}")]
    UnknownOp { line: usize, op: String, kind: Kind },

    #[error("invalid carrier: {0}")]
    InvalidCarrier(String),

    #[error("table has {found} cells, expected {expected}")]
    TableShape { expected: usize, found: usize },

    #[error("not a semilattice: `{law}` fails at {witness}")]
    NotASemilattice { law: &'static str, witness: Witness },

    #[error("subset has no upper bound")]
    NoUpperBound,

    #[error("no least upper bound: {0} and {1} are incomparable minimal upper bounds")]
    NoLeastUpperBound(Elem, Elem),

    #[error("subset has no lower bound")]
    NoLowerBound,

    #[error("no greatest lower bound: {0} and {1} are incomparable maximal lower bounds")]
    NoGreatestLowerBound(Elem, Elem),

    #[error("not a lattice: pair ({}, {}) has {}", .pair.0, .pair.1, describe_bounds(.bounds))]
    NotALattice {
        pair: (Elem, Elem),
        bounds: Option<(Elem, Elem)>,
    },

    /// A construction or check was handed an algebra outside its domain.
    #[error("precondition `{law}` fails at {witness}")]
    Precondition { law: String, witness: Witness },

    #[error("expected a {expected} algebra, got {found}")]
    WrongKind { expected: Kind, found: Kind },

    #[error("unknown law `{0}`")]
    UnknownLaw(String),

    #[error("unknown enumeration kind `{0}`")]
    UnknownKind(String),

    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),

    #[error("size {size} exceeds the resource guard of {limit}")]
    ResourceLimit { size: usize, limit: usize },

    #[error("{0}")]
    Io(String),
}

fn describe_bounds(bounds: &Option<(Elem, Elem)>) -> String {
    match bounds {
        Some((a, b)) => format!("incomparable maximal lower bounds {a} and {b}"),
        None => "no lower bound".to_string(),
    }
}
