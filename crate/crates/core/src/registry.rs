//! Laws addressable by name, used by `check --law`, enumeration filters and
//! counterexample search.
//!
//! Every entry name produced by the checkers is a law name. A few group
//! names select several entries at once (`semiring`, `flags`, `residuated`,
//! `negation`, `boolean`, `mv`, `dnl`). Laws that belong to the other
//! signature are evaluated through the constructions: residuated-lattice
//! laws on a semiring run on `L(S)`, semiring laws on a residuated lattice
//! run on `S(L)`, and an MV-algebra answers through its residuated lattice.
//! The suffix `_of_constructed_reslat` forces the `L(S)` route.

use crate::algebra::{AlgebraValue, ResiduatedLatticeAlg, SemiringAlg};
use crate::constructions::{
    check_dnl, check_prelinearity_identity, to_residuated_lattice, to_semiring, DNL_LAWS,
};
use crate::report::LawEntry;
use crate::residuated_laws::{
    check_boolean, check_mv, check_negation_laws, check_optional_law, check_residuated,
    mv_to_reslat, OptionalLaw, BOOLEAN_LAWS, MV_LAWS, NEGATION_LAWS, RESIDUATED_LAWS,
};
use crate::semiring_laws::{
    check_isotone, check_semiring, check_variety_flags, FLAG_LAWS, SEMIRING_LAWS,
};
use crate::{Error, Result};

const CONSTRUCTED_SUFFIX: &str = "_of_constructed_reslat";

fn alias(name: &str) -> &str {
    match name {
        "dnl_axiom_i" => "dnl_i",
        "dnl_axiom_ii" => "dnl_ii",
        "dnl_axiom_iii" => "dnl_iii",
        other => other,
    }
}

fn is_semiring_law(name: &str) -> bool {
    SEMIRING_LAWS.contains(&name)
        || FLAG_LAWS.contains(&name)
        || DNL_LAWS.contains(&name)
        || matches!(
            name,
            "semiring" | "flags" | "isotone" | "dnl" | "prelinearity_identity"
        )
}

fn is_reslat_law(name: &str) -> bool {
    RESIDUATED_LAWS.contains(&name)
        || NEGATION_LAWS.contains(&name)
        || BOOLEAN_LAWS.contains(&name)
        || name.parse::<OptionalLaw>().is_ok()
        || matches!(name, "residuated" | "negation" | "boolean")
}

fn is_mv_law(name: &str) -> bool {
    MV_LAWS.contains(&name) || name == "mv"
}

/// Whether `name` can be evaluated on at least one signature.
pub fn is_known_law(name: &str) -> bool {
    let name = alias(name);
    if let Some(base) = name.strip_suffix(CONSTRUCTED_SUFFIX) {
        return is_reslat_law(alias(base));
    }
    is_semiring_law(name) || is_reslat_law(name) || is_mv_law(name)
}

fn select(entries: Vec<LawEntry>, name: &str) -> Vec<LawEntry> {
    entries.into_iter().filter(|e| e.name == name).collect()
}

fn semiring_laws(alg: &SemiringAlg, name: &str) -> Result<Vec<LawEntry>> {
    if SEMIRING_LAWS.contains(&name) {
        return Ok(select(check_semiring(alg).entries, name));
    }
    if FLAG_LAWS.contains(&name) {
        return Ok(select(check_variety_flags(alg).report.entries, name));
    }
    if DNL_LAWS.contains(&name) {
        return Ok(select(check_dnl(alg)?.entries, name));
    }
    match name {
        "semiring" => Ok(check_semiring(alg).entries),
        "flags" => Ok(check_variety_flags(alg).report.entries),
        "isotone" => Ok(check_isotone(alg)?.entries),
        "dnl" => Ok(check_dnl(alg)?.entries),
        "prelinearity_identity" => Ok(vec![check_prelinearity_identity(alg)?]),
        _ if is_reslat_law(name) => reslat_laws(&to_residuated_lattice(alg)?, name),
        _ => Err(Error::UnknownLaw(name.to_string())),
    }
}

fn reslat_laws(alg: &ResiduatedLatticeAlg, name: &str) -> Result<Vec<LawEntry>> {
    if RESIDUATED_LAWS.contains(&name) {
        return Ok(select(check_residuated(alg).entries, name));
    }
    if NEGATION_LAWS.contains(&name) {
        return Ok(select(check_negation_laws(alg).entries, name));
    }
    if BOOLEAN_LAWS.contains(&name) {
        return Ok(select(check_boolean(alg).1.entries, name));
    }
    if let Ok(law) = name.parse::<OptionalLaw>() {
        return Ok(check_optional_law(alg, law).entries);
    }
    match name {
        "residuated" => Ok(check_residuated(alg).entries),
        "negation" => Ok(check_negation_laws(alg).entries),
        "boolean" => Ok(check_boolean(alg).1.entries),
        _ if is_semiring_law(name) => semiring_laws(&to_semiring(alg)?, name),
        _ => Err(Error::UnknownLaw(name.to_string())),
    }
}

/// Evaluates the named law (or law group) on `alg`. Errors when the name is
/// unknown or when a construction needed to reach the law rejects `alg`.
pub fn evaluate_law(alg: &AlgebraValue, name: &str) -> Result<Vec<LawEntry>> {
    let name = alias(name);
    if let Some(base) = name.strip_suffix(CONSTRUCTED_SUFFIX) {
        let base = alias(base);
        if !is_reslat_law(base) {
            return Err(Error::UnknownLaw(name.to_string()));
        }
        let l = to_residuated_lattice(alg.as_semiring()?)?;
        let suffixed = format!("{base}{CONSTRUCTED_SUFFIX}");
        return Ok(reslat_laws(&l, base)?
            .into_iter()
            .map(|e| e.renamed(suffixed.clone()))
            .collect());
    }
    match alg {
        AlgebraValue::Semiring(s) => semiring_laws(s, name),
        AlgebraValue::Reslat(l) => reslat_laws(l, name),
        AlgebraValue::Mv(m) if is_mv_law(name) => {
            let r = check_mv(m);
            Ok(if name == "mv" {
                r.entries
            } else {
                select(r.entries, name)
            })
        }
        AlgebraValue::Mv(m) => reslat_laws(&mv_to_reslat(m)?, name),
    }
}

/// True when every entry selected by `name` holds.
pub fn law_holds(alg: &AlgebraValue, name: &str) -> Result<bool> {
    Ok(evaluate_law(alg, name)?.iter().all(LawEntry::holds))
}
