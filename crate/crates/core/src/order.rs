//! Partial orders induced by join-semilattice tables, suprema and meets.

use crate::algebra::{BinOp, Elem};
use crate::report::{scan1, scan2, scan3, Witness};
use crate::{Error, Result};

/// A finite relation `leq`, expected to be a partial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRel {
    size: usize,
    leq: Vec<bool>,
}

impl OrderRel {
    pub fn from_fn(size: usize, mut f: impl FnMut(Elem, Elem) -> bool) -> Self {
        let mut leq = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                leq.push(f(x, y));
            }
        }
        OrderRel { size, leq }
    }

    /// Reflexive-transitive closure of the given cover pairs `(lower, upper)`.
    pub fn from_covers(size: usize, covers: &[(Elem, Elem)]) -> Self {
        let mut rel = OrderRel::from_fn(size, |x, y| x == y);
        for &(a, b) in covers {
            rel.leq[a * size + b] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if rel.leq(i, k) {
                    for j in 0..size {
                        if rel.leq(k, j) {
                            rel.leq[i * size + j] = true;
                        }
                    }
                }
            }
        }
        rel
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.size + y]
    }

    #[inline]
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn reflexivity_failure(&self) -> Option<Witness> {
        scan1(self.size, |x| self.leq(x, x))
    }

    pub fn antisymmetry_failure(&self) -> Option<Witness> {
        scan2(self.size, |x, y| {
            x == y || !(self.leq(x, y) && self.leq(y, x))
        })
    }

    pub fn transitivity_failure(&self) -> Option<Witness> {
        scan3(self.size, |x, y, z| {
            !(self.leq(x, y) && self.leq(y, z)) || self.leq(x, z)
        })
    }

    pub fn is_partial_order(&self) -> bool {
        self.reflexivity_failure().is_none()
            && self.antisymmetry_failure().is_none()
            && self.transitivity_failure().is_none()
    }

    pub fn least(&self) -> Option<Elem> {
        (0..self.size).find(|&x| (0..self.size).all(|y| self.leq(x, y)))
    }

    pub fn greatest(&self) -> Option<Elem> {
        (0..self.size).find(|&x| (0..self.size).all(|y| self.leq(y, x)))
    }

    /// Least upper bound of `subset`; the empty subset yields the least
    /// element.
    pub fn supremum(&self, subset: &[Elem]) -> Result<Elem> {
        let uppers: Vec<Elem> = (0..self.size)
            .filter(|&u| subset.iter().all(|&s| self.leq(s, u)))
            .collect();
        if uppers.is_empty() {
            return Err(Error::NoUpperBound);
        }
        if let Some(&lub) = uppers
            .iter()
            .find(|&&u| uppers.iter().all(|&v| self.leq(u, v)))
        {
            return Ok(lub);
        }
        let mut minimal = uppers
            .iter()
            .copied()
            .filter(|&u| !uppers.iter().any(|&v| self.lt(v, u)));
        let a = minimal
            .next()
            .expect("finite nonempty set has a minimal element");
        let b = minimal.next().unwrap_or(a);
        Err(Error::NoLeastUpperBound(a, b))
    }

    /// Greatest lower bound of `subset`; the empty subset yields the
    /// greatest element.
    pub fn infimum(&self, subset: &[Elem]) -> Result<Elem> {
        let lowers: Vec<Elem> = (0..self.size)
            .filter(|&l| subset.iter().all(|&s| self.leq(l, s)))
            .collect();
        if lowers.is_empty() {
            return Err(Error::NoLowerBound);
        }
        if let Some(&glb) = lowers
            .iter()
            .find(|&&l| lowers.iter().all(|&v| self.leq(v, l)))
        {
            return Ok(glb);
        }
        let mut maximal = lowers
            .iter()
            .copied()
            .filter(|&l| !lowers.iter().any(|&v| self.lt(l, v)));
        let a = maximal
            .next()
            .expect("finite nonempty set has a maximal element");
        let b = maximal.next().unwrap_or(a);
        Err(Error::NoGreatestLowerBound(a, b))
    }
}

/// `x ≤ y` iff `x + y = y`, after checking that `add` is idempotent,
/// commutative and associative (in that order).
pub fn induced_order(add: &BinOp) -> Result<OrderRel> {
    let n = add.size();
    if let Some(w) = scan1(n, |x| add.get(x, x) == x) {
        return Err(Error::NotASemilattice {
            law: "idempotent",
            witness: w,
        });
    }
    if let Some(w) = scan2(n, |x, y| add.get(x, y) == add.get(y, x)) {
        return Err(Error::NotASemilattice {
            law: "commutative",
            witness: w,
        });
    }
    if let Some(w) = scan3(n, |x, y, z| {
        add.get(add.get(x, y), z) == add.get(x, add.get(y, z))
    }) {
        return Err(Error::NotASemilattice {
            law: "associative",
            witness: w,
        });
    }
    Ok(OrderRel::from_fn(n, |x, y| add.get(x, y) == y))
}

pub fn supremum(order: &OrderRel, subset: &[Elem]) -> Result<Elem> {
    order.supremum(subset)
}

/// Pairwise greatest lower bounds.
pub fn meet_table(order: &OrderRel) -> Result<BinOp> {
    let n = order.size();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let m = order.infimum(&[x, y]).map_err(|e| Error::NotALattice {
                pair: (x, y),
                bounds: match e {
                    Error::NoGreatestLowerBound(a, b) => Some((a, b)),
                    _ => None,
                },
            })?;
            table.push(m);
        }
    }
    BinOp::from_table(n, table)
}

/// Pairwise least upper bounds.
pub fn join_table(order: &OrderRel) -> Result<BinOp> {
    let n = order.size();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push(order.supremum(&[x, y])?);
        }
    }
    BinOp::from_table(n, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn b2_chain() {
        let ord = induced_order(&fixtures::b2_semiring().add).unwrap();
        assert!(ord.leq(0, 1) && !ord.leq(1, 0));
        assert!(ord.is_partial_order());
    }

    #[test]
    fn g3_is_a_chain() {
        // pairwise x + y = y checked by hand: max over 0 < a < 1
        let ord = induced_order(&fixtures::g3_semiring().add).unwrap();
        let expected = [
            [true, true, true],
            [false, true, true],
            [false, false, true],
        ];
        for (x, row) in expected.iter().enumerate() {
            for (y, &leq) in row.iter().enumerate() {
                assert_eq!(ord.leq(x, y), leq, "({x},{y})");
            }
        }
    }

    #[test]
    fn non_idempotent_add() {
        let add = BinOp::from_fn(2, |x, y| (x + y) % 2);
        assert_eq!(
            induced_order(&add),
            Err(Error::NotASemilattice {
                law: "idempotent",
                witness: Witness(vec![1])
            })
        );
        let left = BinOp::from_fn(2, |x, _| x);
        assert_eq!(
            induced_order(&left),
            Err(Error::NotASemilattice {
                law: "commutative",
                witness: Witness(vec![0, 1])
            })
        );
    }

    #[test]
    fn suprema() {
        let g3 = induced_order(&fixtures::g3_semiring().add).unwrap();
        assert_eq!(supremum(&g3, &[]), Ok(0));
        assert_eq!(supremum(&g3, &[1, 2]), Ok(2));
        let b4 = induced_order(&fixtures::b4_semiring().add).unwrap();
        assert_eq!(supremum(&b4, &[1, 2]), Ok(3));
        assert_eq!(supremum(&b4, &[]), Ok(0));
    }

    #[test]
    fn supremum_failures() {
        // two incomparable maximal elements, nothing above
        let v = OrderRel::from_covers(3, &[(0, 1), (0, 2)]);
        assert_eq!(v.supremum(&[1, 2]), Err(Error::NoUpperBound));
        // 0 < a, b < c, d: {a, b} has upper bounds c, d but no least one
        let bowtie = OrderRel::from_covers(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)]);
        assert_eq!(
            bowtie.supremum(&[1, 2]),
            Err(Error::NoLeastUpperBound(3, 4))
        );
    }

    #[test]
    fn meets() {
        let chain = OrderRel::from_fn(4, |x, y| x <= y);
        let m = meet_table(&chain).unwrap();
        assert_eq!(m, BinOp::from_fn(4, |x, y| x.min(y)));
        let b4 = induced_order(&fixtures::b4_semiring().add).unwrap();
        assert_eq!(meet_table(&b4).unwrap().get(1, 2), 0);
    }

    #[test]
    fn meet_of_non_lattice() {
        // 0 < c, d < a, b < 1 with c, d both below a and b
        let (bot, c, d, a, b, top) = (0, 1, 2, 3, 4, 5);
        let ord = OrderRel::from_covers(
            6,
            &[
                (bot, c),
                (bot, d),
                (c, a),
                (c, b),
                (d, a),
                (d, b),
                (a, top),
                (b, top),
            ],
        );
        assert!(ord.is_partial_order());
        assert_eq!(
            meet_table(&ord),
            Err(Error::NotALattice {
                pair: (a, b),
                bounds: Some((c, d))
            })
        );
    }
}
