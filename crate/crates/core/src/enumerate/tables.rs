//! Backtracking search for commutative multiplication tables over a fixed
//! lattice, with `0` absorbing and a chosen unit.

use crate::algebra::{BinOp, Elem};

use super::lattices::Lattice;

const UNSET: Elem = Elem::MAX;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Constraints {
    pub distributive: bool,
    pub monotone: bool,
    /// Restrict `x·y` to the down-set of `x ∧ y`.
    pub below_meet: bool,
}

pub(crate) struct TableSearch<'a> {
    n: usize,
    lattice: &'a Lattice,
    rules: Constraints,
    cells: Vec<(Elem, Elem)>,
    table: Vec<Elem>,
}

impl<'a> TableSearch<'a> {
    pub fn new(lattice: &'a Lattice, unit: Elem, rules: Constraints) -> Self {
        let n = lattice.join.size();
        let mut table = vec![UNSET; n * n];
        for x in 0..n {
            table[x] = 0;
            table[x * n] = 0;
        }
        for x in 0..n {
            if x != 0 {
                table[unit * n + x] = x;
                table[x * n + unit] = x;
            }
        }
        let cells = (0..n)
            .filter(|&i| i != 0 && i != unit)
            .flat_map(|i| {
                (i..n)
                    .filter(move |&j| j != 0 && j != unit)
                    .map(move |j| (i, j))
            })
            .collect();
        TableSearch {
            n,
            lattice,
            rules,
            cells,
            table,
        }
    }

    #[inline]
    fn get(&self, x: Elem, y: Elem) -> Option<Elem> {
        match self.table[x * self.n + y] {
            UNSET => None,
            v => Some(v),
        }
    }

    fn consistent(&self) -> bool {
        let n = self.n;
        let join = &self.lattice.join;
        let leq = |x, y| self.lattice.order.leq(x, y);
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    if let (Some(xy), Some(yz)) = (xy, self.get(y, z)) {
                        if let (Some(l), Some(r)) = (self.get(xy, z), self.get(x, yz)) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                    if self.rules.distributive {
                        if let (Some(l), Some(a), Some(b)) =
                            (self.get(x, join.get(y, z)), xy, self.get(x, z))
                        {
                            if l != join.get(a, b) {
                                return false;
                            }
                        }
                    }
                    if self.rules.monotone && leq(x, y) {
                        if let (Some(a), Some(b)) = (self.get(x, z), self.get(y, z)) {
                            if !leq(a, b) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn domain(&self, (i, j): (Elem, Elem)) -> Vec<Elem> {
        if self.rules.below_meet {
            let m = self.lattice.meet.get(i, j);
            (0..self.n)
                .filter(|&v| self.lattice.order.leq(v, m))
                .collect()
        } else {
            (0..self.n).collect()
        }
    }

    fn step(&mut self, k: usize, out: &mut Vec<BinOp>) {
        if k == self.cells.len() {
            out.push(BinOp::from_table(self.n, self.table.clone()).expect("complete table"));
            return;
        }
        let (i, j) = self.cells[k];
        for v in self.domain((i, j)) {
            self.table[i * self.n + j] = v;
            self.table[j * self.n + i] = v;
            if self.consistent() {
                self.step(k + 1, out);
            }
        }
        self.table[i * self.n + j] = UNSET;
        self.table[j * self.n + i] = UNSET;
    }

    pub fn run(mut self) -> Vec<BinOp> {
        let mut out = Vec::new();
        if self.consistent() {
            self.step(0, &mut out);
        }
        out
    }
}
