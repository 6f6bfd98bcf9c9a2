//! Isomorph-free generation of small algebras.
//!
//! Bounded lattices are generated first (one per isomorphism class), then
//! multiplication tables over each lattice by constrained backtracking.
//! Candidates are verified by the law checkers, relabeled into canonical
//! form and deduplicated, so the output is one representative per class in
//! ascending canonical order regardless of how many worker threads ran.

mod lattices;
mod sweep;
mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{AlgebraValue, BinOp, Carrier, ResiduatedLatticeAlg, SemiringAlg};
use crate::canon::canonical_relabeling;
use crate::constructions::check_dnl;
use crate::registry::{evaluate_law, is_known_law};
use crate::report::{LawEntry, Witness};
use crate::residuated_laws::{check_optional_law, check_residuated, OptionalLaw};
use crate::semiring_laws::{check_semiring, check_variety_flags};
use crate::{Error, Result};

use lattices::{bounded_lattices, Lattice};
use tables::{Constraints, TableSearch};

pub use sweep::{SizeStats, SweepFailure, SweepReport, Theorem};

/// Instance classes the generator can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnumKind {
    /// Commutative idempotent simple semirings.
    SemiringCis,
    /// Commutative idempotent semirings, not necessarily simple.
    SemiringCi,
    Reslat,
    DnlSemiring,
    /// Residuated lattices satisfying the double negation law.
    DnlReslat,
}

impl EnumKind {
    pub const ALL: [EnumKind; 5] = [
        EnumKind::SemiringCis,
        EnumKind::SemiringCi,
        EnumKind::Reslat,
        EnumKind::DnlSemiring,
        EnumKind::DnlReslat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EnumKind::SemiringCis => "semiring_cis",
            EnumKind::SemiringCi => "semiring_commutative_idempotent",
            EnumKind::Reslat => "reslat",
            EnumKind::DnlSemiring => "dnl_semiring",
            EnumKind::DnlReslat => "dnl_reslat",
        }
    }
}

impl fmt::Display for EnumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for EnumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "semiring_ci" => Ok(EnumKind::SemiringCi),
            _ => EnumKind::ALL
                .into_iter()
                .find(|k| k.name() == s)
                .ok_or_else(|| Error::UnknownKind(s.to_string())),
        }
    }
}

/// Largest carrier size the generator will attempt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub max_size: usize,
}

impl Guard {
    pub const DEFAULT_MAX_SIZE: usize = 6;
    pub const ENV_VAR: &'static str = "RESLAT_MAX_SIZE";

    /// The default guard, overridden by `RESLAT_MAX_SIZE` when it parses.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|max_size| Guard { max_size })
            .unwrap_or_default()
    }

    pub fn check(&self, size: usize) -> Result<()> {
        if size > self.max_size {
            return Err(Error::ResourceLimit {
                size,
                limit: self.max_size,
            });
        }
        Ok(())
    }
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_size: Self::DEFAULT_MAX_SIZE,
        }
    }
}

/// First instance, in enumeration order, violating a law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub alg: AlgebraValue,
    pub entry: LawEntry,
}

/// Enumeration settings: resource guard and worker count (`None` uses the
/// global rayon pool).
#[derive(Debug, Clone, Copy, Default)]
pub struct Search {
    pub guard: Guard,
    pub workers: Option<usize>,
}

impl Search {
    pub fn with_guard(guard: Guard) -> Self {
        Search {
            guard,
            workers: None,
        }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers.max(1));
        self
    }

    fn in_pool<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.workers {
            None => f(),
            Some(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .expect("thread pool")
                .install(f),
        }
    }

    /// One canonical representative per isomorphism class of size `n`,
    /// keeping only those on which every filter law holds.
    pub fn enumerate(
        &self,
        kind: EnumKind,
        n: usize,
        filters: &[&str],
    ) -> Result<Vec<AlgebraValue>> {
        if n == 0 {
            return Err(Error::InvalidCarrier("size must be at least 1".into()));
        }
        self.guard.check(n)?;
        if let Some(bad) = filters.iter().find(|f| !is_known_law(f)) {
            return Err(Error::UnknownLaw(bad.to_string()));
        }
        let mut found = self.in_pool(|| generate(kind, n));
        for (i, alg) in found.iter_mut().enumerate() {
            alg.set_name(format!("{}-{n}-{i}", kind.name()));
        }
        let mut out = Vec::with_capacity(found.len());
        for alg in found {
            if passes_filters(&alg, filters)? {
                out.push(alg);
            }
        }
        Ok(out)
    }

    pub fn count(&self, kind: EnumKind, n: usize, filters: &[&str]) -> Result<usize> {
        Ok(self.enumerate(kind, n, filters)?.len())
    }

    /// Searches sizes `1..=max_n` in order. An instance on which the law
    /// cannot even be evaluated (a construction rejects it) counts as a
    /// counterexample carrying the rejecting precondition.
    pub fn find_counterexample(
        &self,
        law: &str,
        kind: EnumKind,
        max_n: usize,
    ) -> Result<Option<Counterexample>> {
        if !is_known_law(law) {
            return Err(Error::UnknownLaw(law.to_string()));
        }
        self.guard.check(max_n)?;
        for n in 1..=max_n {
            for alg in self.enumerate(kind, n, &[])? {
                let failing = match evaluate_law(&alg, law) {
                    Ok(entries) => entries.into_iter().find(|e| !e.holds()),
                    Err(Error::Precondition { law, witness }) => Some(LawEntry::fail(law, witness)),
                    Err(e) => return Err(e),
                };
                if let Some(entry) = failing {
                    return Ok(Some(Counterexample { alg, entry }));
                }
            }
        }
        Ok(None)
    }

    pub fn sweep(&self, theorem: Theorem, max_n: usize) -> Result<SweepReport> {
        sweep::run(self, theorem, max_n)
    }
}

fn passes_filters(alg: &AlgebraValue, filters: &[&str]) -> Result<bool> {
    for f in filters {
        match evaluate_law(alg, f) {
            Ok(entries) if entries.iter().all(LawEntry::holds) => {}
            Ok(_) | Err(Error::Precondition { .. }) | Err(Error::NotASemilattice { .. }) => {
                return Ok(false)
            }
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

pub fn enumerate(kind: EnumKind, n: usize, filters: &[&str]) -> Result<Vec<AlgebraValue>> {
    Search::default().enumerate(kind, n, filters)
}

pub fn find_counterexample(
    law: &str,
    kind: EnumKind,
    max_n: usize,
) -> Result<Option<Counterexample>> {
    Search::default().find_counterexample(law, kind, max_n)
}

pub fn sweep_verify(theorem: Theorem, max_n: usize) -> Result<SweepReport> {
    Search::default().sweep(theorem, max_n)
}

fn dedupe(candidates: Vec<AlgebraValue>) -> Vec<AlgebraValue> {
    let mut classes: BTreeMap<Vec<u8>, AlgebraValue> = BTreeMap::new();
    for alg in candidates {
        let (perm, bytes) = canonical_relabeling(&alg);
        classes.entry(bytes).or_insert_with(|| alg.permute(&perm));
    }
    classes.into_values().collect()
}

fn generate(kind: EnumKind, n: usize) -> Vec<AlgebraValue> {
    match kind {
        EnumKind::SemiringCis => semirings(n, true),
        EnumKind::SemiringCi => semirings(n, false),
        EnumKind::Reslat => reslats(n),
        EnumKind::DnlSemiring => semirings(n, true)
            .into_iter()
            .filter(|a| {
                a.as_semiring()
                    .ok()
                    .and_then(|s| check_dnl(s).ok())
                    .is_some_and(|r| r.passed())
            })
            .collect(),
        EnumKind::DnlReslat => reslats(n)
            .into_iter()
            .filter(|a| {
                a.as_reslat()
                    .is_ok_and(|l| check_optional_law(l, OptionalLaw::DoubleNegation).passed())
            })
            .collect(),
    }
}

fn trivial_semiring() -> SemiringAlg {
    let op = BinOp::from_fn(1, |_, _| 0);
    SemiringAlg::new(
        "trivial",
        Carrier::new(1, 0, 0).expect("trivial carrier"),
        op.clone(),
        op,
    )
    .expect("trivial semiring")
}

/// Commutative idempotent semirings over every lattice; `simple` pins the
/// unit to the top.
fn semirings(n: usize, simple: bool) -> Vec<AlgebraValue> {
    if n == 1 {
        return vec![trivial_semiring().into()];
    }
    let top = n - 1;
    let jobs: Vec<(Lattice, usize)> = bounded_lattices(n)
        .into_iter()
        .flat_map(|l| {
            let units: Vec<usize> = if simple { vec![top] } else { (1..n).collect() };
            units.into_iter().map(move |u| (l.clone(), u))
        })
        .collect();
    let candidates: Vec<AlgebraValue> = jobs
        .par_iter()
        .flat_map_iter(|(lattice, unit)| {
            let rules = Constraints {
                distributive: true,
                monotone: true,
                below_meet: simple,
            };
            let carrier = Carrier::new(n, 0, *unit).expect("carrier");
            TableSearch::new(lattice, *unit, rules)
                .run()
                .into_iter()
                .filter_map(move |mul| {
                    let s =
                        SemiringAlg::new("candidate", carrier, lattice.join.clone(), mul).ok()?;
                    let flags = check_variety_flags(&s);
                    let ok = check_semiring(&s).passed()
                        && flags.idempotent
                        && flags.commutative
                        && (!simple || flags.simple);
                    ok.then(|| AlgebraValue::from(s))
                })
        })
        .collect();
    dedupe(candidates)
}

/// Residuated lattices: commutative monoids over each lattice whose
/// residuum `max{x | x ⊙ a ≤ b}` exists everywhere.
fn reslats(n: usize) -> Vec<AlgebraValue> {
    if n == 1 {
        let op = BinOp::from_fn(1, |_, _| 0);
        let l = ResiduatedLatticeAlg::new(
            "trivial",
            Carrier::new(1, 0, 0).expect("trivial carrier"),
            op.clone(),
            op.clone(),
            op.clone(),
            op,
        )
        .expect("trivial lattice");
        return vec![l.into()];
    }
    let top = n - 1;
    let lattices = bounded_lattices(n);
    let candidates: Vec<AlgebraValue> = lattices
        .par_iter()
        .flat_map_iter(|lattice| {
            let rules = Constraints {
                distributive: false,
                monotone: true,
                below_meet: true,
            };
            let carrier = Carrier::new(n, 0, top).expect("carrier");
            TableSearch::new(lattice, top, rules)
                .run()
                .into_iter()
                .filter_map(move |odot| {
                    let res = residuum_by_maximum(lattice, &odot)?;
                    let l = ResiduatedLatticeAlg::new(
                        "candidate",
                        carrier,
                        lattice.join.clone(),
                        lattice.meet.clone(),
                        odot,
                        res,
                    )
                    .ok()?;
                    check_residuated(&l).passed().then(|| AlgebraValue::from(l))
                })
        })
        .collect();
    dedupe(candidates)
}

/// `a → b` as the greatest `x` with `x ⊙ a ≤ b`, when every such set has a
/// greatest element.
fn residuum_by_maximum(lattice: &Lattice, odot: &BinOp) -> Option<BinOp> {
    let n = odot.size();
    let ord = &lattice.order;
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let qualifying: Vec<usize> = (0..n).filter(|&x| ord.leq(odot.get(x, a), b)).collect();
            let max = qualifying
                .iter()
                .copied()
                .find(|&m| qualifying.iter().all(|&x| ord.leq(x, m)))?;
            table.push(max);
        }
    }
    BinOp::from_table(n, table).ok()
}

pub(crate) fn witness_of(e: &Error) -> Option<Witness> {
    match e {
        Error::Precondition { witness, .. } | Error::NotASemilattice { witness, .. } => {
            Some(witness.clone())
        }
        _ => None,
    }
}
