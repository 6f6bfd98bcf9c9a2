//! Semiring axioms, variety flags and isotonicity of multiplication.

use crate::algebra::SemiringAlg;
use crate::order::induced_order;
use crate::report::{scan1, scan2, scan3, LawEntry, LawReport, Witness};
use crate::Result;

/// Names of the entries produced by [`check_semiring`], in report order.
pub const SEMIRING_LAWS: &[&str] = &[
    "add_associative",
    "add_commutative",
    "add_neutral",
    "mul_associative",
    "mul_neutral",
    "left_distributive",
    "right_distributive",
    "annihilation",
];

pub const FLAG_LAWS: &[&str] = &[
    "idempotent",
    "commutative",
    "simple",
    "completely_distributive",
];

pub fn check_semiring(alg: &SemiringAlg) -> LawReport {
    let n = alg.size();
    let (add, mul) = (&alg.add, &alg.mul);
    let (zero, one) = (alg.zero(), alg.one());
    let mut r = LawReport::new(alg.carrier.is_degenerate());
    r.law(
        "add_associative",
        scan3(n, |x, y, z| {
            add.get(add.get(x, y), z) == add.get(x, add.get(y, z))
        }),
    );
    r.law(
        "add_commutative",
        scan2(n, |x, y| add.get(x, y) == add.get(y, x)),
    );
    r.law(
        "add_neutral",
        scan1(n, |x| add.get(x, zero) == x && add.get(zero, x) == x),
    );
    r.law(
        "mul_associative",
        scan3(n, |x, y, z| {
            mul.get(mul.get(x, y), z) == mul.get(x, mul.get(y, z))
        }),
    );
    r.law(
        "mul_neutral",
        scan1(n, |x| mul.get(x, one) == x && mul.get(one, x) == x),
    );
    r.law("left_distributive", left_distributive(alg));
    r.law(
        "right_distributive",
        scan3(n, |x, y, z| {
            mul.get(add.get(x, y), z) == add.get(mul.get(x, z), mul.get(y, z))
        }),
    );
    r.law(
        "annihilation",
        scan1(n, |x| mul.get(x, zero) == zero && mul.get(zero, x) == zero),
    );
    r
}

fn left_distributive(alg: &SemiringAlg) -> Option<Witness> {
    let (add, mul) = (&alg.add, &alg.mul);
    scan3(alg.size(), |x, y, z| {
        mul.get(x, add.get(y, z)) == add.get(mul.get(x, y), mul.get(x, z))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyFlags {
    pub idempotent: bool,
    pub commutative: bool,
    pub simple: bool,
    pub completely_distributive: bool,
    /// One entry per flag, carrying witnesses for the false ones.
    pub report: LawReport,
}

impl VarietyFlags {
    /// Idempotent, commutative and simple: the hypotheses of the
    /// semiring-to-residuated-lattice construction.
    pub fn is_cis(&self) -> bool {
        self.idempotent && self.commutative && self.simple
    }
}

/// Finite complete distributivity reduces to binary sums plus the empty
/// sum; larger finite sums follow by induction.
const FINITE_CD_NOTE: &str =
    "finite carrier: all sums exist; distributivity over binary and empty sums suffices";

pub fn check_variety_flags(alg: &SemiringAlg) -> VarietyFlags {
    let n = alg.size();
    let (add, mul) = (&alg.add, &alg.mul);
    let one = alg.one();
    let zero = alg.zero();
    let idem = scan1(n, |x| add.get(x, x) == x);
    let comm = scan2(n, |x, y| mul.get(x, y) == mul.get(y, x));
    let simple = scan1(n, |x| add.get(x, one) == one);
    // Completely distributive is defined for commutative idempotent
    // semirings; report the first missing ingredient.
    let cd = left_distributive(alg)
        .or_else(|| scan1(n, |x| mul.get(x, zero) == zero))
        .or_else(|| idem.clone())
        .or_else(|| comm.clone());

    let mut report = LawReport::new(alg.carrier.is_degenerate());
    report.law("idempotent", idem.clone());
    report.law("commutative", comm.clone());
    report.law("simple", simple.clone());
    report.push(LawEntry::new("completely_distributive", cd.clone()).with_note(FINITE_CD_NOTE));
    VarietyFlags {
        idempotent: idem.is_none(),
        commutative: comm.is_none(),
        simple: simple.is_none(),
        completely_distributive: cd.is_none(),
        report,
    }
}

/// `a ≤ b` implies `a·c ≤ b·c` and `c·a ≤ c·b`; witness `(a, b, c)`.
pub fn check_isotone(alg: &SemiringAlg) -> Result<LawReport> {
    let ord = induced_order(&alg.add)?;
    let mul = &alg.mul;
    let mut r = LawReport::new(alg.carrier.is_degenerate());
    r.law(
        "isotone",
        scan3(alg.size(), |a, b, c| {
            !ord.leq(a, b)
                || (ord.leq(mul.get(a, c), mul.get(b, c)) && ord.leq(mul.get(c, a), mul.get(c, b)))
        }),
    );
    Ok(r)
}
