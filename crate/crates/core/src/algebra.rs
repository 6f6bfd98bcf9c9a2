//! Finite carriers, operation tables, and the three algebra signatures.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::{Error, Result};

/// An element of a finite carrier, identified by its index.
pub type Elem = usize;

/// Largest carrier size the file format and canonical forms support.
pub const MAX_CARRIER: usize = 255;

/// A finite universe `0..size` with designated constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Carrier {
    size: usize,
    zero: Elem,
    one: Elem,
}

impl Carrier {
    pub fn new(size: usize, zero: Elem, one: Elem) -> Result<Self> {
        if size == 0 || size > MAX_CARRIER {
            return Err(Error::InvalidCarrier(format!(
                "size {size} not in 1..={MAX_CARRIER}"
            )));
        }
        if zero >= size || one >= size {
            return Err(Error::InvalidCarrier(format!(
                "constants zero={zero} one={one} out of range for size {size}"
            )));
        }
        if zero == one && size > 1 {
            return Err(Error::InvalidCarrier(format!(
                "zero and one coincide ({zero}) in a carrier of size {size}"
            )));
        }
        Ok(Carrier { size, zero, one })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    /// The one-element algebra where `0 = 1`.
    pub fn is_degenerate(&self) -> bool {
        self.size == 1
    }

    pub fn elements(&self) -> Range<Elem> {
        0..self.size
    }
}

/// A total binary operation stored row-major (`row = left operand`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinOp {
    size: usize,
    table: Vec<Elem>,
}

impl BinOp {
    pub fn from_fn(size: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Self {
        let mut table = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                let v = f(x, y);
                assert!(v < size, "operation value {v} out of range for size {size}");
                table.push(v);
            }
        }
        BinOp { size, table }
    }

    pub fn from_table(size: usize, table: Vec<Elem>) -> Result<Self> {
        if table.len() != size * size {
            return Err(Error::TableShape {
                expected: size * size,
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= size) {
            return Err(Error::InvalidCarrier(format!(
                "table entry {bad} out of range for size {size}"
            )));
        }
        Ok(BinOp { size, table })
    }

    pub fn from_rows(rows: &[Vec<Elem>]) -> Result<Self> {
        let size = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::TableShape {
                expected: size,
                found: r.len(),
            });
        }
        Self::from_table(size, rows.concat())
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.table[x * self.size + y]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.table
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        self.table.chunks(self.size.max(1))
    }

    /// Relabels through `perm` (old index to new index).
    pub fn permute(&self, perm: &[Elem]) -> Self {
        let inv = invert(perm);
        BinOp::from_fn(self.size, |x, y| perm[self.get(inv[x], inv[y])])
    }

    /// First cell, in row-major order, where the two tables differ.
    pub fn first_difference(&self, other: &BinOp) -> Option<(Elem, Elem)> {
        let n = self.size;
        (0..n * n)
            .find(|&i| self.table[i] != other.table[i])
            .map(|i| (i / n, i % n))
    }
}

/// A total unary operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnOp {
    table: Vec<Elem>,
}

impl UnOp {
    pub fn from_fn(size: usize, f: impl FnMut(Elem) -> Elem) -> Self {
        let table: Vec<Elem> = (0..size).map(f).collect();
        assert!(
            table.iter().all(|&v| v < size),
            "unary operation out of range"
        );
        UnOp { table }
    }

    pub fn from_vec(table: Vec<Elem>) -> Result<Self> {
        let size = table.len();
        if let Some(&bad) = table.iter().find(|&&v| v >= size) {
            return Err(Error::InvalidCarrier(format!(
                "table entry {bad} out of range for size {size}"
            )));
        }
        Ok(UnOp { table })
    }

    #[inline]
    pub fn get(&self, x: Elem) -> Elem {
        self.table[x]
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.table
    }

    pub fn permute(&self, perm: &[Elem]) -> Self {
        let inv = invert(perm);
        UnOp::from_fn(self.size(), |x| perm[self.get(inv[x])])
    }
}

pub(crate) fn invert(perm: &[Elem]) -> Vec<Elem> {
    let mut inv = vec![0; perm.len()];
    for (old, &new) in perm.iter().enumerate() {
        inv[new] = old;
    }
    inv
}

/// Signature tag of an algebra value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Semiring,
    Reslat,
    Mv,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Semiring => "semiring",
            Kind::Reslat => "reslat",
            Kind::Mv => "mv",
        }
    }

    /// Operation names in file order.
    pub fn ops(self) -> &'static [&'static str] {
        match self {
            Kind::Semiring => &["add", "mul"],
            Kind::Reslat => &["join", "meet", "odot", "res"],
            Kind::Mv => &["oplus", "neg"],
        }
    }

    pub fn is_unary_op(self, op: &str) -> bool {
        self == Kind::Mv && op == "neg"
    }

    pub(crate) fn tag(self) -> u8 {
        match self {
            Kind::Semiring => 0,
            Kind::Reslat => 1,
            Kind::Mv => 2,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "semiring" => Ok(Kind::Semiring),
            "reslat" => Ok(Kind::Reslat),
            "mv" => Ok(Kind::Mv),
            other => Err(format!("unknown kind `{other}`")),
        }
    }
}

fn check_size(size: usize, ops: &[&BinOp]) -> Result<()> {
    for op in ops {
        if op.size() != size {
            return Err(Error::TableShape {
                expected: size * size,
                found: op.size() * op.size(),
            });
        }
    }
    Ok(())
}

/// `(S, +, ·, 0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiringAlg {
    pub name: String,
    pub carrier: Carrier,
    pub add: BinOp,
    pub mul: BinOp,
}

impl SemiringAlg {
    pub fn new(name: impl Into<String>, carrier: Carrier, add: BinOp, mul: BinOp) -> Result<Self> {
        check_size(carrier.size(), &[&add, &mul])?;
        Ok(SemiringAlg {
            name: name.into(),
            carrier,
            add,
            mul,
        })
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn zero(&self) -> Elem {
        self.carrier.zero()
    }

    pub fn one(&self) -> Elem {
        self.carrier.one()
    }

    /// Same carrier and identical tables; names are ignored.
    pub fn same_tables(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.add == other.add && self.mul == other.mul
    }
}

/// `(L, ∨, ∧, ⊙, →, 0, 1)`. Validity is established by
/// [`check_residuated`](crate::residuated_laws::check_residuated).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduatedLatticeAlg {
    pub name: String,
    pub carrier: Carrier,
    pub join: BinOp,
    pub meet: BinOp,
    pub odot: BinOp,
    pub res: BinOp,
}

impl ResiduatedLatticeAlg {
    pub fn new(
        name: impl Into<String>,
        carrier: Carrier,
        join: BinOp,
        meet: BinOp,
        odot: BinOp,
        res: BinOp,
    ) -> Result<Self> {
        check_size(carrier.size(), &[&join, &meet, &odot, &res])?;
        Ok(ResiduatedLatticeAlg {
            name: name.into(),
            carrier,
            join,
            meet,
            odot,
            res,
        })
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn zero(&self) -> Elem {
        self.carrier.zero()
    }

    pub fn one(&self) -> Elem {
        self.carrier.one()
    }

    /// Lattice order read off the join table.
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.join.get(x, y) == y
    }

    pub fn same_tables(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.join == other.join
            && self.meet == other.meet
            && self.odot == other.odot
            && self.res == other.res
    }

    /// First differing cell across join, meet, odot, res.
    pub fn first_difference(&self, other: &Self) -> Option<(&'static str, Elem, Elem)> {
        [
            ("join", &self.join, &other.join),
            ("meet", &self.meet, &other.meet),
            ("odot", &self.odot, &other.odot),
            ("res", &self.res, &other.res),
        ]
        .into_iter()
        .find_map(|(name, a, b)| a.first_difference(b).map(|(x, y)| (name, x, y)))
    }
}

/// `(L, ⊕, ¬, 0)`; the top is the derived constant `¬0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvAlg {
    pub name: String,
    size: usize,
    zero: Elem,
    pub oplus: BinOp,
    pub neg: UnOp,
}

impl MvAlg {
    pub fn new(
        name: impl Into<String>,
        size: usize,
        zero: Elem,
        oplus: BinOp,
        neg: UnOp,
    ) -> Result<Self> {
        if size == 0 || size > MAX_CARRIER || zero >= size {
            return Err(Error::InvalidCarrier(format!(
                "zero={zero} with size {size}"
            )));
        }
        check_size(size, &[&oplus])?;
        if neg.size() != size {
            return Err(Error::TableShape {
                expected: size,
                found: neg.size(),
            });
        }
        Ok(MvAlg {
            name: name.into(),
            size,
            zero,
            oplus,
            neg,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.neg.get(self.zero)
    }

    pub fn same_tables(&self, other: &Self) -> bool {
        self.size == other.size
            && self.zero == other.zero
            && self.oplus == other.oplus
            && self.neg == other.neg
    }
}

/// Any of the three supported signatures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraValue {
    Semiring(SemiringAlg),
    Reslat(ResiduatedLatticeAlg),
    Mv(MvAlg),
}

impl AlgebraValue {
    pub fn kind(&self) -> Kind {
        match self {
            AlgebraValue::Semiring(_) => Kind::Semiring,
            AlgebraValue::Reslat(_) => Kind::Reslat,
            AlgebraValue::Mv(_) => Kind::Mv,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            AlgebraValue::Semiring(a) => &a.name,
            AlgebraValue::Reslat(a) => &a.name,
            AlgebraValue::Mv(a) => &a.name,
        }
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        let name = name.into();
        match self {
            AlgebraValue::Semiring(a) => a.name = name,
            AlgebraValue::Reslat(a) => a.name = name,
            AlgebraValue::Mv(a) => a.name = name,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            AlgebraValue::Semiring(a) => a.size(),
            AlgebraValue::Reslat(a) => a.size(),
            AlgebraValue::Mv(a) => a.size(),
        }
    }

    pub fn zero(&self) -> Elem {
        match self {
            AlgebraValue::Semiring(a) => a.zero(),
            AlgebraValue::Reslat(a) => a.zero(),
            AlgebraValue::Mv(a) => a.zero(),
        }
    }

    /// `None` for MV algebras, whose top is derived.
    pub fn declared_one(&self) -> Option<Elem> {
        match self {
            AlgebraValue::Semiring(a) => Some(a.one()),
            AlgebraValue::Reslat(a) => Some(a.one()),
            AlgebraValue::Mv(_) => None,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.size() == 1
    }

    pub fn same_tables(&self, other: &AlgebraValue) -> bool {
        match (self, other) {
            (AlgebraValue::Semiring(a), AlgebraValue::Semiring(b)) => a.same_tables(b),
            (AlgebraValue::Reslat(a), AlgebraValue::Reslat(b)) => a.same_tables(b),
            (AlgebraValue::Mv(a), AlgebraValue::Mv(b)) => a.same_tables(b),
            _ => false,
        }
    }

    /// Applies the relabeling `perm` (old index to new index) to every
    /// table and constant.
    ///
    /// Panics if `perm` is not a permutation of the carrier.
    pub fn permute(&self, perm: &[Elem]) -> AlgebraValue {
        assert_eq!(perm.len(), self.size(), "permutation length mismatch");
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(p < perm.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        match self {
            AlgebraValue::Semiring(a) => AlgebraValue::Semiring(SemiringAlg {
                name: a.name.clone(),
                carrier: Carrier {
                    size: a.size(),
                    zero: perm[a.zero()],
                    one: perm[a.one()],
                },
                add: a.add.permute(perm),
                mul: a.mul.permute(perm),
            }),
            AlgebraValue::Reslat(a) => AlgebraValue::Reslat(ResiduatedLatticeAlg {
                name: a.name.clone(),
                carrier: Carrier {
                    size: a.size(),
                    zero: perm[a.zero()],
                    one: perm[a.one()],
                },
                join: a.join.permute(perm),
                meet: a.meet.permute(perm),
                odot: a.odot.permute(perm),
                res: a.res.permute(perm),
            }),
            AlgebraValue::Mv(a) => AlgebraValue::Mv(MvAlg {
                name: a.name.clone(),
                size: a.size,
                zero: perm[a.zero],
                oplus: a.oplus.permute(perm),
                neg: a.neg.permute(perm),
            }),
        }
    }

    pub fn as_semiring(&self) -> Result<&SemiringAlg> {
        match self {
            AlgebraValue::Semiring(a) => Ok(a),
            other => Err(Error::WrongKind {
                expected: Kind::Semiring,
                found: other.kind(),
            }),
        }
    }

    pub fn as_reslat(&self) -> Result<&ResiduatedLatticeAlg> {
        match self {
            AlgebraValue::Reslat(a) => Ok(a),
            other => Err(Error::WrongKind {
                expected: Kind::Reslat,
                found: other.kind(),
            }),
        }
    }

    pub fn as_mv(&self) -> Result<&MvAlg> {
        match self {
            AlgebraValue::Mv(a) => Ok(a),
            other => Err(Error::WrongKind {
                expected: Kind::Mv,
                found: other.kind(),
            }),
        }
    }
}

impl From<SemiringAlg> for AlgebraValue {
    fn from(a: SemiringAlg) -> Self {
        AlgebraValue::Semiring(a)
    }
}

impl From<ResiduatedLatticeAlg> for AlgebraValue {
    fn from(a: ResiduatedLatticeAlg) -> Self {
        AlgebraValue::Reslat(a)
    }
}

impl From<MvAlg> for AlgebraValue {
    fn from(a: MvAlg) -> Self {
        AlgebraValue::Mv(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carrier_rules() {
        assert!(Carrier::new(1, 0, 0).unwrap().is_degenerate());
        assert!(Carrier::new(2, 1, 1).is_err());
        assert!(Carrier::new(3, 0, 3).is_err());
        assert!(Carrier::new(0, 0, 0).is_err());
        let c = Carrier::new(3, 2, 0).unwrap();
        assert_eq!((c.zero(), c.one()), (2, 0));
    }

    #[test]
    fn table_closure() {
        assert!(BinOp::from_table(2, vec![0, 1, 1, 2]).is_err());
        assert!(BinOp::from_rows(&[vec![0, 1], vec![1]]).is_err());
        assert!(UnOp::from_vec(vec![1, 2]).is_err());
    }

    #[test]
    fn permute_moves_constants_and_cells() {
        let add = BinOp::from_fn(3, |x, y| x.max(y));
        let mul = BinOp::from_fn(3, |x, y| x.min(y));
        let alg: AlgebraValue = SemiringAlg::new("c3", Carrier::new(3, 0, 2).unwrap(), add, mul)
            .unwrap()
            .into();
        let p = alg.permute(&[2, 0, 1]);
        let s = p.as_semiring().unwrap();
        assert_eq!((s.zero(), s.one()), (2, 1));
        // old max(0, 1) = 1 becomes new add(2, 0) = 0
        assert_eq!(s.add.get(2, 0), 0);
        assert!(p.permute(&[1, 2, 0]).same_tables(&alg));
    }
}
