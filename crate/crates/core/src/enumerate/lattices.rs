//! Bounded lattices on `0..n` with bottom `0` and top `n - 1`, one per
//! isomorphism class.

use std::collections::BTreeMap;

use crate::algebra::BinOp;
use crate::canon::canonical_binop;
use crate::order::{join_table, meet_table, OrderRel};

#[derive(Debug, Clone)]
pub(crate) struct Lattice {
    pub join: BinOp,
    pub meet: BinOp,
    pub order: OrderRel,
}

impl Lattice {
    fn from_join(join: BinOp) -> Self {
        let order = OrderRel::from_fn(join.size(), |x, y| join.get(x, y) == y);
        let meet = meet_table(&order).expect("finite bounded join-semilattice is a lattice");
        Lattice { join, meet, order }
    }
}

/// Every poset has a linear extension, so it suffices to relate middle
/// elements `i < j` only in index order.
pub(crate) fn bounded_lattices(n: usize) -> Vec<Lattice> {
    if n == 1 {
        return vec![Lattice::from_join(BinOp::from_fn(1, |_, _| 0))];
    }
    let top = n - 1;
    let middle: Vec<usize> = (1..top).collect();
    let pairs: Vec<(usize, usize)> = middle
        .iter()
        .flat_map(|&i| middle.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
        .collect();
    let pins = [(0, 0), (top, top)];
    let mut found: BTreeMap<Vec<u8>, BinOp> = BTreeMap::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut below = vec![false; n * n];
        for x in 0..n {
            below[x * n + x] = true;
            below[x] = true;
            below[x * n + top] = true;
        }
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                below[i * n + j] = true;
            }
        }
        let transitive = pairs.iter().all(|&(i, j)| {
            !below[i * n + j] || (j + 1..top).all(|k| !below[j * n + k] || below[i * n + k])
        });
        if !transitive {
            continue;
        }
        let order = OrderRel::from_fn(n, |x, y| below[x * n + y]);
        let Ok(join) = join_table(&order) else {
            continue;
        };
        let (perm, bytes) = canonical_binop(&join, &pins);
        found.entry(bytes).or_insert_with(|| join.permute(&perm));
    }
    found.into_values().map(Lattice::from_join).collect()
}
