//! Canonical forms up to isomorphism.
//!
//! Isomorphisms must send constants to constants, so every relabeling
//! considered here maps `0` to index 0 and `1` to index `n - 1`; the
//! remaining elements are permuted freely and the lexicographically least
//! serialization wins. Two algebras of the same kind therefore share a
//! canonical form exactly when they are isomorphic.

use itertools::Itertools;

use crate::algebra::{invert, AlgebraValue, BinOp, Elem, UnOp};

/// Element pinned to a fixed target index during relabeling.
type Pin = (Elem, Elem);

fn pins(alg: &AlgebraValue) -> Vec<Pin> {
    let n = alg.size();
    let zero = alg.zero();
    let one = match alg {
        AlgebraValue::Mv(m) => m.one(),
        _ => alg.declared_one().expect("non-mv kinds declare one"),
    };
    let mut p = vec![(zero, 0)];
    if one != zero {
        p.push((one, n - 1));
    }
    p
}

/// Every relabeling (old index to new index) consistent with `pins`.
pub(crate) fn relabelings(n: usize, pins: &[Pin]) -> impl Iterator<Item = Vec<Elem>> + '_ {
    let free_old: Vec<Elem> = (0..n).filter(|x| !pins.iter().any(|p| p.0 == *x)).collect();
    let free_new: Vec<Elem> = (0..n).filter(|x| !pins.iter().any(|p| p.1 == *x)).collect();
    let k = free_old.len();
    free_new.into_iter().permutations(k).map(move |targets| {
        let mut perm = vec![0; n];
        for &(old, new) in pins {
            perm[old] = new;
        }
        for (&old, new) in free_old.iter().zip(targets) {
            perm[old] = new;
        }
        perm
    })
}

fn push_binop(out: &mut Vec<u8>, op: &BinOp, perm: &[Elem], inv: &[Elem]) {
    let n = op.size();
    for i in 0..n {
        for j in 0..n {
            out.push(perm[op.get(inv[i], inv[j])] as u8);
        }
    }
}

fn push_unop(out: &mut Vec<u8>, op: &UnOp, perm: &[Elem], inv: &[Elem]) {
    for i in 0..op.size() {
        out.push(perm[op.get(inv[i])] as u8);
    }
}

/// Serialization of `alg` relabeled by `perm`, without materializing it.
fn serialize(alg: &AlgebraValue, perm: &[Elem]) -> Vec<u8> {
    let inv = invert(perm);
    let n = alg.size();
    let mut out = Vec::with_capacity(4 + 4 * n * n);
    out.push(alg.kind().tag());
    out.push(n as u8);
    out.push(perm[alg.zero()] as u8);
    if let Some(one) = alg.declared_one() {
        out.push(perm[one] as u8);
    }
    match alg {
        AlgebraValue::Semiring(a) => {
            push_binop(&mut out, &a.add, perm, &inv);
            push_binop(&mut out, &a.mul, perm, &inv);
        }
        AlgebraValue::Reslat(a) => {
            push_binop(&mut out, &a.join, perm, &inv);
            push_binop(&mut out, &a.meet, perm, &inv);
            push_binop(&mut out, &a.odot, perm, &inv);
            push_binop(&mut out, &a.res, perm, &inv);
        }
        AlgebraValue::Mv(a) => {
            push_binop(&mut out, &a.oplus, perm, &inv);
            push_unop(&mut out, &a.neg, perm, &inv);
        }
    }
    out
}

/// The relabeling producing the canonical form, with its serialization.
pub fn canonical_relabeling(alg: &AlgebraValue) -> (Vec<Elem>, Vec<u8>) {
    let pins = pins(alg);
    relabelings(alg.size(), &pins)
        .map(|perm| {
            let bytes = serialize(alg, &perm);
            (perm, bytes)
        })
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("at least the pinned relabeling exists")
}

/// Lexicographically least table serialization over all admissible
/// relabelings.
pub fn canonicalize(alg: &AlgebraValue) -> Vec<u8> {
    canonical_relabeling(alg).1
}

/// `alg` relabeled into its canonical form. The name is kept.
pub fn canonical_form(alg: &AlgebraValue) -> AlgebraValue {
    let (perm, _) = canonical_relabeling(alg);
    alg.permute(&perm)
}

pub fn isomorphic(a: &AlgebraValue, b: &AlgebraValue) -> bool {
    a.kind() == b.kind() && a.size() == b.size() && canonicalize(a) == canonicalize(b)
}

/// Canonical serialization of a single binary table under the given pins;
/// used to deduplicate lattices before multiplication search.
pub(crate) fn canonical_binop(op: &BinOp, pins: &[Pin]) -> (Vec<Elem>, Vec<u8>) {
    relabelings(op.size(), pins)
        .map(|perm| {
            let inv = invert(&perm);
            let mut bytes = Vec::with_capacity(op.size() * op.size());
            push_binop(&mut bytes, op, &perm, &inv);
            (perm, bytes)
        })
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("at least one relabeling")
}

pub fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
