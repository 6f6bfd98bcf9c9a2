//! Exhaustive verification of the semiring/residuated-lattice
//! correspondence over every instance up to a given size.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::algebra::{AlgebraValue, Elem, ResiduatedLatticeAlg, SemiringAlg};
use crate::canon::{canonicalize, hex};
use crate::constructions::{
    check_dnl, check_prelinearity_identity, dnl_to_residuated_lattice, roundtrip,
    to_residuated_lattice, to_semiring, CisSemiring,
};
use crate::order::{induced_order, meet_table};
use crate::report::{scan1, scan2, scan3, LawReport, Witness};
use crate::residuated_laws::{
    check_boolean, check_negation_laws, check_optional_law, check_residuated, negation_of,
    OptionalLaw,
};
use crate::semiring_laws::{check_isotone, check_semiring, check_variety_flags};
use crate::{Error, Result};

use super::{witness_of, EnumKind, Search};

/// Claims that can be swept. `L1`–`L3` cover the auxiliary facts the
/// others rely on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `S(L)` is a commutative idempotent simple semiring.
    T1,
    /// `L(S)` is a residuated lattice for finite commutative idempotent
    /// simple `S`.
    C1,
    /// The DNL construction yields a residuated lattice with double
    /// negation, agreeing with `L(S)`.
    T4,
    /// Idempotent iff `⊙ = ∧` over a distributive lattice.
    T5,
    /// `S(L)` of a DNL residuated lattice is a DNL-semiring.
    T6,
    /// `S(L(S)) = S` on DNL-semirings.
    T7i,
    /// `L(S(L)) = L` on DNL residuated lattices.
    T7ii,
    /// With double negation, idempotent iff Boolean.
    C2,
    /// The semiring-side prelinearity identity matches prelinearity.
    C3,
    /// Multiplication is isotone in idempotent semirings.
    L1,
    /// `a·n(a) = 0` and `a ≤ n(n(a))`.
    L2,
    /// Negation facts, residuum maximality and `a ≤ b ⇔ a → b = 1`.
    L3,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Theorem::T1,
        Theorem::C1,
        Theorem::T4,
        Theorem::T5,
        Theorem::T6,
        Theorem::T7i,
        Theorem::T7ii,
        Theorem::C2,
        Theorem::C3,
        Theorem::L1,
        Theorem::L2,
        Theorem::L3,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::T1 => "T1",
            Theorem::C1 => "C1",
            Theorem::T4 => "T4",
            Theorem::T5 => "T5",
            Theorem::T6 => "T6",
            Theorem::T7i => "T7i",
            Theorem::T7ii => "T7ii",
            Theorem::C2 => "C2",
            Theorem::C3 => "C3",
            Theorem::L1 => "L1",
            Theorem::L2 => "L2",
            Theorem::L3 => "L3",
        }
    }

    /// The instance class the claim quantifies over.
    pub fn class(self) -> EnumKind {
        match self {
            Theorem::T1 | Theorem::T5 | Theorem::L3 => EnumKind::Reslat,
            Theorem::C1 | Theorem::L2 => EnumKind::SemiringCis,
            Theorem::T4 | Theorem::T7i | Theorem::C3 => EnumKind::DnlSemiring,
            Theorem::T6 | Theorem::T7ii | Theorem::C2 => EnumKind::DnlReslat,
            Theorem::L1 => EnumKind::SemiringCi,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeStats {
    pub size: usize,
    /// Instances in the theorem's class.
    pub instances: usize,
    /// Instances satisfying the claim's extra hypothesis (for the
    /// equivalences: the left-hand side).
    pub premise: usize,
    pub failures: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepFailure {
    pub size: usize,
    pub instance: String,
    pub canonical: Vec<u8>,
    pub law: String,
    pub witness: Option<Witness>,
}

impl fmt::Display for SweepFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "size={} instance={} law={}",
            self.size, self.instance, self.law
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        write!(f, " form={}", hex(&self.canonical))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub theorem: Theorem,
    pub max_size: usize,
    pub sizes: Vec<SizeStats>,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_instances(&self) -> usize {
        self.sizes.iter().map(|s| s.instances).sum()
    }

    /// `SWEEP <id> size=<s> instances=<c> failures=<f>` per size.
    pub fn lines(&self) -> Vec<String> {
        self.sizes
            .iter()
            .map(|s| {
                format!(
                    "SWEEP {} size={} instances={} failures={}",
                    self.theorem, s.size, s.instances, s.failures
                )
            })
            .collect()
    }
}

/// Outcome of checking one instance.
#[derive(Default)]
struct Verdict {
    premise: bool,
    failures: Vec<(String, Option<Witness>)>,
}

impl Verdict {
    fn premise(premise: bool) -> Self {
        Verdict {
            premise,
            failures: Vec::new(),
        }
    }

    fn report(&mut self, r: &LawReport) {
        for e in r.entries.iter().filter(|e| !e.holds()) {
            self.failures
                .push((e.name.to_string(), e.witness().cloned()));
        }
    }

    fn law(&mut self, name: &str, w: Option<Witness>) {
        if let Some(w) = w {
            self.failures.push((name.to_string(), Some(w)));
        }
    }

    fn construction(&mut self, what: &str, e: Error) {
        self.failures.push((format!("{what}: {e}"), witness_of(&e)));
    }
}

fn diff_witness(a: &ResiduatedLatticeAlg, b: &ResiduatedLatticeAlg) -> Option<Witness> {
    a.first_difference(b).map(|(_, x, y)| Witness(vec![x, y]))
}

fn check_t1(l: &ResiduatedLatticeAlg) -> Verdict {
    let mut v = Verdict::premise(true);
    match to_semiring(l) {
        Ok(s) => {
            v.report(&check_semiring(&s));
            v.report(&check_variety_flags(&s).report);
        }
        Err(e) => v.construction("to_semiring", e),
    }
    v
}

fn check_c1(s: &SemiringAlg) -> Verdict {
    let mut v = Verdict::premise(true);
    match to_residuated_lattice(s) {
        Ok(l) => {
            v.report(&check_residuated(&l));
            v.report(&check_negation_laws(&l));
        }
        Err(e) => v.construction("to_residuated_lattice", e),
    }
    v
}

fn check_t4(s: &SemiringAlg) -> Verdict {
    let mut v = Verdict::premise(true);
    let l = match dnl_to_residuated_lattice(s) {
        Ok(l) => l,
        Err(e) => {
            v.construction("dnl_to_residuated_lattice", e);
            return v;
        }
    };
    v.report(&check_residuated(&l));
    v.report(&check_optional_law(&l, OptionalLaw::DoubleNegation));
    match induced_order(&s.add).and_then(|o| meet_table(&o)) {
        Ok(m) => v.law(
            "meet_is_order_meet",
            m.first_difference(&l.meet)
                .map(|(x, y)| Witness(vec![x, y])),
        ),
        Err(e) => v.construction("meet_table", e),
    }
    match to_residuated_lattice(s) {
        Ok(sum) => v.law("agrees_with_sum_residuum", diff_witness(&l, &sum)),
        Err(e) => v.construction("to_residuated_lattice", e),
    }
    match CisSemiring::new(s) {
        Ok(cis) => {
            let n = s.size();
            let ord = cis.order();
            let nf = |x: Elem| cis.negation(x);
            v.law("neg_equals_n", scan1(n, |x| negation_of(&l, x) == nf(x)));
            v.law("n_involutive", scan1(n, |x| nf(nf(x)) == x));
            v.law(
                "n_antitone_iff",
                scan2(n, |x, y| ord.leq(x, y) == ord.leq(nf(y), nf(x))),
            );
        }
        Err(e) => v.construction("negation_map", e),
    }
    v
}

fn is_distributive(l: &ResiduatedLatticeAlg) -> Option<Witness> {
    let (join, meet) = (&l.join, &l.meet);
    scan3(l.size(), |x, y, z| {
        meet.get(x, join.get(y, z)) == join.get(meet.get(x, y), meet.get(x, z))
    })
}

fn check_t5(l: &ResiduatedLatticeAlg) -> Verdict {
    let idempotent = check_optional_law(l, OptionalLaw::Idempotent).passed();
    let mut v = Verdict::premise(idempotent);
    let rhs = l.odot == l.meet && is_distributive(l).is_none();
    if idempotent != rhs {
        let w = l
            .odot
            .first_difference(&l.meet)
            .map(|(x, y)| Witness(vec![x, y]))
            .or_else(|| is_distributive(l))
            .or_else(|| {
                check_optional_law(l, OptionalLaw::Idempotent).entries[0]
                    .witness()
                    .cloned()
            });
        v.failures
            .push(("idempotent_iff_distributive_meet".into(), w));
    }
    v
}

fn check_t6(l: &ResiduatedLatticeAlg) -> Verdict {
    let mut v = Verdict::premise(true);
    match to_semiring(l).and_then(|s| check_dnl(&s)) {
        Ok(r) => v.report(&r),
        Err(e) => v.construction("check_dnl", e),
    }
    v
}

fn check_roundtrip(alg: &AlgebraValue) -> Verdict {
    let mut v = Verdict::premise(true);
    v.report(&roundtrip(alg));
    v
}

fn check_c2(l: &ResiduatedLatticeAlg) -> Verdict {
    let idempotent = check_optional_law(l, OptionalLaw::Idempotent);
    let (boolean, report) = check_boolean(l);
    let mut v = Verdict::premise(idempotent.passed());
    let rhs = boolean && l.odot == l.meet;
    if idempotent.passed() && !rhs {
        v.report(&report);
        if l.odot != l.meet {
            v.law(
                "odot_is_meet",
                l.odot
                    .first_difference(&l.meet)
                    .map(|(x, y)| Witness(vec![x, y])),
            );
        }
    }
    if rhs && !idempotent.passed() {
        v.report(&idempotent);
    }
    v
}

fn check_c3(s: &SemiringAlg) -> Verdict {
    let mut v = Verdict::premise(true);
    let identity = match check_prelinearity_identity(s) {
        Ok(e) => e,
        Err(e) => {
            v.construction("prelinearity_identity", e);
            return v;
        }
    };
    let prelinear = match dnl_to_residuated_lattice(s) {
        Ok(l) => check_optional_law(&l, OptionalLaw::Prelinear),
        Err(e) => {
            v.construction("dnl_to_residuated_lattice", e);
            return v;
        }
    };
    v.premise = prelinear.passed();
    if identity.holds() != prelinear.passed() {
        let w = identity
            .witness()
            .cloned()
            .or_else(|| prelinear.entries[0].witness().cloned());
        v.failures
            .push(("prelinearity_identity_iff_prelinear".into(), w));
    }
    v
}

fn check_l1(s: &SemiringAlg) -> Verdict {
    let mut v = Verdict::premise(true);
    match check_isotone(s) {
        Ok(r) => v.report(&r),
        Err(e) => v.construction("induced_order", e),
    }
    v
}

fn check_l2(s: &SemiringAlg) -> Verdict {
    let mut v = Verdict::premise(true);
    match CisSemiring::new(s) {
        Ok(cis) => {
            let n = s.size();
            let nf = |x: Elem| cis.negation(x);
            v.law(
                "n_annihilates",
                scan1(n, |a| s.mul.get(a, nf(a)) == s.zero()),
            );
            v.law(
                "n_inflationary",
                scan1(n, |a| cis.order().leq(a, nf(nf(a)))),
            );
        }
        Err(e) => v.construction("negation_map", e),
    }
    v
}

fn check_l3(l: &ResiduatedLatticeAlg) -> Verdict {
    let mut v = Verdict::premise(true);
    let n = l.size();
    v.report(&check_negation_laws(l));
    v.law(
        "order_test",
        scan2(n, |a, b| l.leq(a, b) == (l.res.get(a, b) == l.one())),
    );
    v.law(
        "odot_distributes_over_join",
        scan3(n, |x, y, z| {
            l.odot.get(x, l.join.get(y, z)) == l.join.get(l.odot.get(x, y), l.odot.get(x, z))
        }),
    );
    v
}

fn verdict(theorem: Theorem, alg: &AlgebraValue) -> Verdict {
    let semiring = || alg.as_semiring().expect("semiring class");
    let reslat = || alg.as_reslat().expect("reslat class");
    match theorem {
        Theorem::T1 => check_t1(reslat()),
        Theorem::C1 => check_c1(semiring()),
        Theorem::T4 => check_t4(semiring()),
        Theorem::T5 => check_t5(reslat()),
        Theorem::T6 => check_t6(reslat()),
        Theorem::T7i | Theorem::T7ii => check_roundtrip(alg),
        Theorem::C2 => check_c2(reslat()),
        Theorem::C3 => check_c3(semiring()),
        Theorem::L1 => check_l1(semiring()),
        Theorem::L2 => check_l2(semiring()),
        Theorem::L3 => check_l3(reslat()),
    }
}

pub(super) fn run(search: &Search, theorem: Theorem, max_n: usize) -> Result<SweepReport> {
    search.guard.check(max_n)?;
    let mut report = SweepReport {
        theorem,
        max_size: max_n,
        sizes: Vec::new(),
        failures: Vec::new(),
    };
    for size in 1..=max_n {
        let start = Instant::now();
        let instances = search.enumerate(theorem.class(), size, &[])?;
        let verdicts: Vec<Verdict> = search.in_pool(|| {
            instances
                .par_iter()
                .map(|alg| verdict(theorem, alg))
                .collect()
        });
        let mut stats = SizeStats {
            size,
            instances: instances.len(),
            premise: 0,
            failures: 0,
            elapsed: Duration::ZERO,
        };
        for (alg, v) in instances.iter().zip(verdicts) {
            stats.premise += usize::from(v.premise);
            if !v.failures.is_empty() {
                stats.failures += 1;
                let canonical = canonicalize(alg);
                for (law, witness) in v.failures {
                    report.failures.push(SweepFailure {
                        size,
                        instance: alg.name().to_string(),
                        canonical: canonical.clone(),
                        law,
                        witness,
                    });
                }
            }
        }
        stats.elapsed = start.elapsed();
        report.sizes.push(stats);
    }
    Ok(report)
}
