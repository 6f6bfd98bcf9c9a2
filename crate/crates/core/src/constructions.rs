//! Translations between residuated lattices and commutative idempotent
//! simple semirings.
//!
//! * `S(L) = (L, ∨, ⊙, 0, 1)` ([`to_semiring`]).
//! * `L(S) = (S, +, ∧, ·, →, 0, 1)` with `a → b = Σ{x | a·x ≤ b}` and `∧`
//!   the meet of the induced order ([`to_residuated_lattice`]).
//! * On DNL-semirings, `x ∧ y = n(n(x) + n(y))` and `x → y = n(x·n(y))` with
//!   `n(x) = Σ{y | x·y = 0}` ([`dnl_to_residuated_lattice`]).

use crate::algebra::{AlgebraValue, BinOp, Elem, ResiduatedLatticeAlg, SemiringAlg, UnOp};
use crate::order::{induced_order, meet_table, OrderRel};
use crate::report::{scan1, scan2, scan3, LawEntry, LawReport, Witness};
use crate::residuated_laws::{check_optional_law, check_residuated, mv_to_reslat, OptionalLaw};
use crate::semiring_laws::{check_semiring, check_variety_flags};
use crate::Result;

pub const DNL_LAWS: &[&str] = &["dnl_i", "dnl_ii", "dnl_iii"];

/// A semiring known to be commutative, idempotent and simple, together
/// with its induced order.
#[derive(Debug, Clone)]
pub struct CisSemiring<'a> {
    alg: &'a SemiringAlg,
    order: OrderRel,
}

impl<'a> CisSemiring<'a> {
    pub fn new(alg: &'a SemiringAlg) -> Result<Self> {
        check_semiring(alg).require()?;
        let flags = check_variety_flags(alg);
        let mut hyp = LawReport::new(false);
        hyp.entries = flags
            .report
            .entries
            .into_iter()
            .filter(|e| e.name != "completely_distributive")
            .collect();
        hyp.require()?;
        let order = induced_order(&alg.add)?;
        Ok(CisSemiring { alg, order })
    }

    pub fn alg(&self) -> &'a SemiringAlg {
        self.alg
    }

    pub fn order(&self) -> &OrderRel {
        &self.order
    }

    /// `Σ items`, the empty sum being `0`.
    pub fn sum(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        items
            .into_iter()
            .fold(self.alg.zero(), |acc, x| self.alg.add.get(acc, x))
    }

    /// `a → b = Σ{x | a·x ≤ b}`.
    pub fn residuum(&self, a: Elem, b: Elem) -> Elem {
        let mul = &self.alg.mul;
        self.sum((0..self.alg.size()).filter(|&x| self.order.leq(mul.get(a, x), b)))
    }

    /// `n(x) = Σ{y | x·y = 0}`.
    pub fn negation(&self, x: Elem) -> Elem {
        let (mul, zero) = (&self.alg.mul, self.alg.zero());
        self.sum((0..self.alg.size()).filter(|&y| mul.get(x, y) == zero))
    }

    pub fn negation_map(&self) -> UnOp {
        UnOp::from_fn(self.alg.size(), |x| self.negation(x))
    }
}

/// `S(L)`: keep `∨` as addition and `⊙` as multiplication.
pub fn to_semiring(alg: &ResiduatedLatticeAlg) -> Result<SemiringAlg> {
    check_residuated(alg).require()?;
    SemiringAlg::new(
        format!("{}.S", alg.name),
        alg.carrier,
        alg.join.clone(),
        alg.odot.clone(),
    )
}

pub fn residuum_from(alg: &SemiringAlg, a: Elem, b: Elem) -> Result<Elem> {
    Ok(CisSemiring::new(alg)?.residuum(a, b))
}

/// `L(S)`. The result is not assumed residuated; run
/// [`check_residuated`] on it.
pub fn to_residuated_lattice(alg: &SemiringAlg) -> Result<ResiduatedLatticeAlg> {
    let cis = CisSemiring::new(alg)?;
    let n = alg.size();
    let meet = meet_table(cis.order())?;
    let res = BinOp::from_fn(n, |a, b| cis.residuum(a, b));
    ResiduatedLatticeAlg::new(
        format!("{}.L", alg.name),
        alg.carrier,
        alg.add.clone(),
        meet,
        alg.mul.clone(),
        res,
    )
}

pub fn negation_map(alg: &SemiringAlg) -> Result<UnOp> {
    Ok(CisSemiring::new(alg)?.negation_map())
}

/// The three DNL-semiring identities, computed with `n` from
/// [`negation_map`]:
///
/// * `dnl_i`: `n(n(x)) = x`
/// * `dnl_ii`: `x·n(x·n(y)) + y = y`
/// * `dnl_iii`: `x·n(x + y) = 0`
pub fn check_dnl(alg: &SemiringAlg) -> Result<LawReport> {
    let neg = negation_map(alg)?;
    let n = alg.size();
    let (add, mul) = (&alg.add, &alg.mul);
    let nf = |x: Elem| neg.get(x);
    let mut r = LawReport::new(alg.carrier.is_degenerate());
    r.law("dnl_i", scan1(n, |x| nf(nf(x)) == x));
    r.law(
        "dnl_ii",
        scan2(n, |x, y| add.get(mul.get(x, nf(mul.get(x, nf(y)))), y) == y),
    );
    r.law(
        "dnl_iii",
        scan2(n, |x, y| mul.get(x, nf(add.get(x, y))) == alg.zero()),
    );
    Ok(r)
}

/// `x ∧ y = n(n(x) + n(y))`, `x → y = n(x·n(y))`; `n` is always
/// recomputed from the multiplication.
pub fn dnl_to_residuated_lattice(alg: &SemiringAlg) -> Result<ResiduatedLatticeAlg> {
    check_dnl(alg)?.require()?;
    let neg = negation_map(alg)?;
    let n = alg.size();
    let (add, mul) = (&alg.add, &alg.mul);
    let meet = BinOp::from_fn(n, |x, y| neg.get(add.get(neg.get(x), neg.get(y))));
    let res = BinOp::from_fn(n, |x, y| neg.get(mul.get(x, neg.get(y))));
    ResiduatedLatticeAlg::new(
        format!("{}.Ldnl", alg.name),
        alg.carrier,
        add.clone(),
        meet,
        mul.clone(),
        res,
    )
}

/// `x·n(n(y) + n(z)) = n(n(x·y) + n(x·z))` over all triples; on
/// DNL-semirings this holds exactly when the constructed residuated
/// lattice is prelinear.
pub fn check_prelinearity_identity(alg: &SemiringAlg) -> Result<LawEntry> {
    check_dnl(alg)?.require()?;
    let neg = negation_map(alg)?;
    let (add, mul) = (&alg.add, &alg.mul);
    let nf = |x: Elem| neg.get(x);
    let w = scan3(alg.size(), |x, y, z| {
        mul.get(x, nf(add.get(nf(y), nf(z)))) == nf(add.get(nf(mul.get(x, y)), nf(mul.get(x, z))))
    });
    Ok(LawEntry::new("prelinearity_identity", w))
}

fn precondition_entry(name: &'static str, result: Result<LawReport>) -> LawEntry {
    match result {
        Ok(r) => LawEntry::new(
            name,
            r.first_failure()
                .map(|e| e.witness().cloned().unwrap_or_else(Witness::empty)),
        ),
        Err(crate::Error::Precondition { witness, .. }) => LawEntry::fail(name, witness),
        Err(_) => LawEntry::fail(name, Witness::empty()),
    }
}

fn difference_entry(diff: Option<(Elem, Elem)>) -> LawEntry {
    LawEntry::new("roundtrip_identity", diff.map(|(x, y)| Witness(vec![x, y])))
}

fn semiring_roundtrip(alg: &SemiringAlg, report: &mut LawReport) {
    let pre = precondition_entry("dnl_precondition", check_dnl(alg));
    let ok = pre.holds();
    report.push(pre);
    if !ok {
        return;
    }
    let back = dnl_to_residuated_lattice(alg).and_then(|l| to_semiring(&l));
    match back {
        Ok(s) => {
            let diff = if s.carrier != alg.carrier {
                Some((0, 0))
            } else {
                alg.add
                    .first_difference(&s.add)
                    .or_else(|| alg.mul.first_difference(&s.mul))
            };
            report.push(difference_entry(diff));
        }
        Err(e) => report.push(precondition_entry("intermediate_residuated", Err(e))),
    }
}

fn reslat_roundtrip(alg: &ResiduatedLatticeAlg, report: &mut LawReport) {
    let res = precondition_entry("residuated_precondition", Ok(check_residuated(alg)));
    let dn = precondition_entry(
        "double_negation_precondition",
        Ok(check_optional_law(alg, OptionalLaw::DoubleNegation)),
    );
    let ok = res.holds() && dn.holds();
    report.push(res);
    report.push(dn);
    if !ok {
        return;
    }
    let s = match to_semiring(alg) {
        Ok(s) => s,
        Err(e) => return report.push(precondition_entry("to_semiring", Err(e))),
    };
    let dnl = precondition_entry("intermediate_dnl", check_dnl(&s));
    let ok = dnl.holds();
    report.push(dnl);
    if !ok {
        return;
    }
    match dnl_to_residuated_lattice(&s) {
        Ok(l) => report.push(difference_entry(
            alg.first_difference(&l).map(|(_, x, y)| (x, y)),
        )),
        Err(e) => report.push(precondition_entry("intermediate_residuated", Err(e))),
    }
}

/// Checks `S(L(S)) = S` for semirings and `L(S(L)) = L` for residuated
/// lattices as literal table identity. MV input is first turned into its
/// residuated lattice.
pub fn roundtrip(alg: &AlgebraValue) -> LawReport {
    let mut report = LawReport::new(alg.is_degenerate());
    match alg {
        AlgebraValue::Semiring(s) => semiring_roundtrip(s, &mut report),
        AlgebraValue::Reslat(l) => reslat_roundtrip(l, &mut report),
        AlgebraValue::Mv(m) => match mv_to_reslat(m) {
            Ok(l) => {
                report.push(LawEntry::pass("mv_precondition"));
                reslat_roundtrip(&l, &mut report);
            }
            Err(e) => report.push(precondition_entry("mv_precondition", Err(e))),
        },
    }
    report
}
