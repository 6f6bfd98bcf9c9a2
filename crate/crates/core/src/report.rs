//! Law reports with lexicographically least witnesses.
//!
//! Every universally quantified law is checked by a row-major scan over its
//! variables in the order they appear in the law, so the first failing tuple
//! found is the least one.

use std::borrow::Cow;
use std::fmt;

use crate::algebra::Elem;

/// A tuple of element indices falsifying a law.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness(pub Vec<Elem>);

impl Witness {
    pub fn empty() -> Self {
        Witness(Vec::new())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<Elem>> for Witness {
    fn from(v: Vec<Elem>) -> Self {
        Witness(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawEntry {
    pub name: Cow<'static, str>,
    witness: Option<Witness>,
    pub note: Option<&'static str>,
}

impl LawEntry {
    pub fn new(name: impl Into<Cow<'static, str>>, witness: Option<Witness>) -> Self {
        LawEntry {
            name: name.into(),
            witness,
            note: None,
        }
    }

    pub fn pass(name: impl Into<Cow<'static, str>>) -> Self {
        Self::new(name, None)
    }

    pub fn fail(name: impl Into<Cow<'static, str>>, witness: Witness) -> Self {
        Self::new(name, Some(witness))
    }

    pub fn with_note(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    pub fn renamed(mut self, name: impl Into<Cow<'static, str>>) -> Self {
        self.name = name.into();
        self
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }
}

/// `LAW <name> PASS` or `LAW <name> FAIL witness=(i,j,k)`.
impl fmt::Display for LawEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "LAW {} PASS", self.name),
            Some(w) => write!(f, "LAW {} FAIL witness={}", self.name, w),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LawReport {
    pub entries: Vec<LawEntry>,
    pub degenerate: bool,
}

impl LawReport {
    pub fn new(degenerate: bool) -> Self {
        LawReport {
            entries: Vec::new(),
            degenerate,
        }
    }

    pub fn push(&mut self, entry: LawEntry) {
        self.entries.push(entry);
    }

    pub fn law(&mut self, name: &'static str, witness: Option<Witness>) {
        self.entries.push(LawEntry::new(name, witness));
    }

    pub fn extend(&mut self, other: LawReport) {
        self.degenerate |= other.degenerate;
        self.entries.extend(other.entries);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(LawEntry::holds)
    }

    pub fn entry(&self, name: &str) -> Option<&LawEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn first_failure(&self) -> Option<&LawEntry> {
        self.entries.iter().find(|e| !e.holds())
    }

    /// Turns the first failing entry into a precondition error.
    pub(crate) fn require(&self) -> crate::Result<()> {
        match self.first_failure() {
            None => Ok(()),
            Some(e) => Err(crate::Error::Precondition {
                law: e.name.to_string(),
                witness: e.witness().cloned().unwrap_or_else(Witness::empty),
            }),
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

pub(crate) fn scan1(n: usize, mut ok: impl FnMut(Elem) -> bool) -> Option<Witness> {
    (0..n).find(|&x| !ok(x)).map(|x| Witness(vec![x]))
}

pub(crate) fn scan2(n: usize, mut ok: impl FnMut(Elem, Elem) -> bool) -> Option<Witness> {
    for x in 0..n {
        for y in 0..n {
            if !ok(x, y) {
                return Some(Witness(vec![x, y]));
            }
        }
    }
    None
}

pub(crate) fn scan3(n: usize, mut ok: impl FnMut(Elem, Elem, Elem) -> bool) -> Option<Witness> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !ok(x, y, z) {
                    return Some(Witness(vec![x, y, z]));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering() {
        assert_eq!(LawEntry::pass("simple").to_string(), "LAW simple PASS");
        let e = LawEntry::fail("adjointness", Witness(vec![1, 1, 0]));
        assert_eq!(e.to_string(), "LAW adjointness FAIL witness=(1,1,0)");
        assert_eq!(
            LawEntry::fail("neg_zero", Witness::empty()).to_string(),
            "LAW neg_zero FAIL witness=()"
        );
    }

    #[test]
    fn scans_return_least_tuple() {
        assert_eq!(scan2(3, |x, y| !(x + y == 3)), Some(Witness(vec![1, 2])));
        assert_eq!(
            scan3(2, |x, y, z| x + y + z < 2),
            Some(Witness(vec![0, 1, 1]))
        );
        assert_eq!(scan1(4, |_| true), None);
    }
}
