//! Residuated lattice axioms, negation facts, optional identities, the
//! Boolean criterion and MV-algebras.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{BinOp, Elem, MvAlg, ResiduatedLatticeAlg};
use crate::report::{scan1, scan2, scan3, LawReport};
use crate::{Error, Result};

pub const RESIDUATED_LAWS: &[&str] = &[
    "join_associative",
    "join_commutative",
    "join_idempotent",
    "meet_associative",
    "meet_commutative",
    "meet_idempotent",
    "absorption",
    "lower_bound",
    "upper_bound",
    "meet_order_consistent",
    "odot_associative",
    "odot_commutative",
    "odot_neutral",
    "adjointness",
];

pub const NEGATION_LAWS: &[&str] = &[
    "residuum_greatest",
    "neg_zero",
    "neg_one",
    "neg_annihilates",
    "double_neg_inflationary",
    "neg_antitone",
];

pub const BOOLEAN_LAWS: &[&str] = &["boolean_distributive", "complement_join", "complement_meet"];

pub const MV_LAWS: &[&str] = &[
    "mv_oplus_associative",
    "mv_oplus_commutative",
    "mv_zero_neutral",
    "mv_one_absorbing",
    "mv_involution",
    "mv_exchange",
];

fn associative(op: &BinOp) -> Option<crate::report::Witness> {
    scan3(op.size(), |x, y, z| {
        op.get(op.get(x, y), z) == op.get(x, op.get(y, z))
    })
}

fn commutative(op: &BinOp) -> Option<crate::report::Witness> {
    scan2(op.size(), |x, y| op.get(x, y) == op.get(y, x))
}

/// Bounded lattice, commutative monoid and the full `x ⊙ y ≤ z ⇔ x ≤ y → z`
/// scan. The order is the one induced by `join`; `meet` is checked against
/// it separately.
pub fn check_residuated(alg: &ResiduatedLatticeAlg) -> LawReport {
    let n = alg.size();
    let (join, meet, odot, res) = (&alg.join, &alg.meet, &alg.odot, &alg.res);
    let (zero, one) = (alg.zero(), alg.one());
    let leq = |x: Elem, y: Elem| alg.leq(x, y);

    let mut r = LawReport::new(alg.carrier.is_degenerate());
    r.law("join_associative", associative(join));
    r.law("join_commutative", commutative(join));
    r.law("join_idempotent", scan1(n, |x| join.get(x, x) == x));
    r.law("meet_associative", associative(meet));
    r.law("meet_commutative", commutative(meet));
    r.law("meet_idempotent", scan1(n, |x| meet.get(x, x) == x));
    r.law(
        "absorption",
        scan2(n, |x, y| {
            join.get(x, meet.get(x, y)) == x && meet.get(x, join.get(x, y)) == x
        }),
    );
    r.law("lower_bound", scan1(n, |x| join.get(x, zero) == x));
    r.law("upper_bound", scan1(n, |x| join.get(x, one) == one));
    r.law(
        "meet_order_consistent",
        scan2(n, |x, y| {
            let m = meet.get(x, y);
            leq(m, x) && leq(m, y) && (0..n).all(|z| !(leq(z, x) && leq(z, y)) || leq(z, m))
        }),
    );
    r.law("odot_associative", associative(odot));
    r.law("odot_commutative", commutative(odot));
    r.law(
        "odot_neutral",
        scan1(n, |x| odot.get(x, one) == x && odot.get(one, x) == x),
    );
    r.law(
        "adjointness",
        scan3(n, |x, y, z| leq(odot.get(x, y), z) == leq(x, res.get(y, z))),
    );
    r
}

/// `¬x = x → 0`.
pub fn negation_of(alg: &ResiduatedLatticeAlg, x: Elem) -> Elem {
    alg.res.get(x, alg.zero())
}

pub fn check_negation_laws(alg: &ResiduatedLatticeAlg) -> LawReport {
    let n = alg.size();
    let (odot, res) = (&alg.odot, &alg.res);
    let (zero, one) = (alg.zero(), alg.one());
    let leq = |x: Elem, y: Elem| alg.leq(x, y);
    let neg = |x: Elem| negation_of(alg, x);

    let mut r = LawReport::new(alg.carrier.is_degenerate());
    // a → b is the greatest x with x ⊙ a ≤ b
    r.law(
        "residuum_greatest",
        scan2(n, |a, b| {
            let top = res.get(a, b);
            leq(odot.get(top, a), b) && (0..n).all(|x| !leq(odot.get(x, a), b) || leq(x, top))
        }),
    );
    r.law(
        "neg_zero",
        (neg(zero) != one).then(crate::report::Witness::empty),
    );
    r.law(
        "neg_one",
        (neg(one) != zero).then(crate::report::Witness::empty),
    );
    r.law("neg_annihilates", scan1(n, |a| odot.get(a, neg(a)) == zero));
    r.law("double_neg_inflationary", scan1(n, |a| leq(a, neg(neg(a)))));
    r.law(
        "neg_antitone",
        scan2(n, |a, b| !leq(a, b) || leq(neg(b), neg(a))),
    );
    r
}

/// Identities that some residuated lattices satisfy and others do not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OptionalLaw {
    /// `¬¬x = x`
    DoubleNegation,
    /// `x ⊙ x = x`
    Idempotent,
    /// `(x → y) ∨ (y → x) = 1`
    Prelinear,
    /// `x ∧ y = x ⊙ (x → y)`
    Divisible,
}

impl OptionalLaw {
    pub const ALL: [OptionalLaw; 4] = [
        OptionalLaw::DoubleNegation,
        OptionalLaw::Idempotent,
        OptionalLaw::Prelinear,
        OptionalLaw::Divisible,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OptionalLaw::DoubleNegation => "double_negation",
            OptionalLaw::Idempotent => "idempotent",
            OptionalLaw::Prelinear => "prelinear",
            OptionalLaw::Divisible => "divisible",
        }
    }
}

impl fmt::Display for OptionalLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OptionalLaw {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OptionalLaw::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

pub fn check_optional_law(alg: &ResiduatedLatticeAlg, law: OptionalLaw) -> LawReport {
    let n = alg.size();
    let (join, meet, odot, res) = (&alg.join, &alg.meet, &alg.odot, &alg.res);
    let neg = |x: Elem| negation_of(alg, x);
    let witness = match law {
        OptionalLaw::DoubleNegation => scan1(n, |x| neg(neg(x)) == x),
        OptionalLaw::Idempotent => scan1(n, |x| odot.get(x, x) == x),
        OptionalLaw::Prelinear => scan2(n, |x, y| {
            join.get(res.get(x, y), res.get(y, x)) == alg.one()
        }),
        OptionalLaw::Divisible => scan2(n, |x, y| meet.get(x, y) == odot.get(x, res.get(x, y))),
    };
    let mut r = LawReport::new(alg.carrier.is_degenerate());
    r.law(law.name(), witness);
    r
}

/// Whether `(join, meet, ¬, 0, 1)` is a Boolean algebra: distributive with
/// `x ∨ ¬x = 1` and `x ∧ ¬x = 0`.
pub fn check_boolean(alg: &ResiduatedLatticeAlg) -> (bool, LawReport) {
    let n = alg.size();
    let (join, meet) = (&alg.join, &alg.meet);
    let neg = |x: Elem| negation_of(alg, x);
    let mut r = LawReport::new(alg.carrier.is_degenerate());
    r.law(
        "boolean_distributive",
        scan3(n, |x, y, z| {
            meet.get(x, join.get(y, z)) == join.get(meet.get(x, y), meet.get(x, z))
        }),
    );
    r.law(
        "complement_join",
        scan1(n, |x| join.get(x, neg(x)) == alg.one()),
    );
    r.law(
        "complement_meet",
        scan1(n, |x| meet.get(x, neg(x)) == alg.zero()),
    );
    (r.passed(), r)
}

pub fn check_mv(mv: &MvAlg) -> LawReport {
    let n = mv.size();
    let (oplus, neg) = (&mv.oplus, &mv.neg);
    let zero = mv.zero();
    let top = neg.get(zero);
    let mut r = LawReport::new(n == 1);
    r.law("mv_oplus_associative", associative(oplus));
    r.law("mv_oplus_commutative", commutative(oplus));
    r.law("mv_zero_neutral", scan1(n, |x| oplus.get(x, zero) == x));
    r.law("mv_one_absorbing", scan1(n, |x| oplus.get(x, top) == top));
    r.law("mv_involution", scan1(n, |x| neg.get(neg.get(x)) == x));
    r.law(
        "mv_exchange",
        scan2(n, |x, y| {
            oplus.get(neg.get(oplus.get(neg.get(x), y)), y)
                == oplus.get(neg.get(oplus.get(neg.get(y), x)), x)
        }),
    );
    r
}

/// The residuated lattice of an MV-algebra:
/// `x → y = ¬x ⊕ y`, `x ∨ y = (x → y) → y`, `x ∧ y = ¬(¬x ∨ ¬y)`,
/// `x ⊙ y = ¬(¬x ⊕ ¬y)`, `1 = ¬0`.
pub fn mv_to_reslat(mv: &MvAlg) -> Result<ResiduatedLatticeAlg> {
    check_mv(mv).require()?;
    let n = mv.size();
    let (oplus, neg) = (&mv.oplus, &mv.neg);
    let res = BinOp::from_fn(n, |x, y| oplus.get(neg.get(x), y));
    let join = BinOp::from_fn(n, |x, y| res.get(res.get(x, y), y));
    let meet = BinOp::from_fn(n, |x, y| neg.get(join.get(neg.get(x), neg.get(y))));
    let odot = BinOp::from_fn(n, |x, y| neg.get(oplus.get(neg.get(x), neg.get(y))));
    let carrier = crate::algebra::Carrier::new(n, mv.zero(), mv.one())?;
    ResiduatedLatticeAlg::new(mv.name.clone(), carrier, join, meet, odot, res)
}
