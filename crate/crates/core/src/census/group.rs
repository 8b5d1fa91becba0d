//! Explicit finite subgroups of GSp4(F_l) and their closure from generators.

use std::collections::HashSet;

use rayon::prelude::*;

use super::packed::{self, Elem, Packer};
use crate::error::{Error, Result};

/// Bytes per element charged against the memory budget during closure
/// (hash-set slot with load-factor slack, frontier and sorted output).
const BYTES_PER_ELEMENT: u64 = 40;
const CHUNK: usize = 2048;

/// A finite subgroup of GSp4(F_l) stored as a sorted list of packed keys.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupSet {
    packer: Packer,
    keys: Vec<u64>,
}

impl GroupSet {
    /// Builds a set (not necessarily a group) from matrices.
    pub fn from_elements(ell: u64, elems: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let packer = Packer::new(ell)?;
        let mut keys: Vec<u64> = elems.into_iter().map(|m| packer.encode(&m)).collect();
        keys.par_sort_unstable();
        keys.dedup();
        Ok(GroupSet { packer, keys })
    }

    pub fn ell(&self) -> u8 {
        self.packer.ell()
    }

    pub fn order(&self) -> usize {
        self.keys.len()
    }

    pub fn keys(&self) -> &[u64] {
        &self.keys
    }

    pub fn packer(&self) -> Packer {
        self.packer
    }

    pub fn contains(&self, m: &Elem) -> bool {
        self.keys.binary_search(&self.packer.encode(m)).is_ok()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.keys.iter().map(|&k| self.packer.decode(k))
    }

    pub fn par_elements(&self) -> impl ParallelIterator<Item = Elem> + '_ {
        let p = self.packer;
        self.keys.par_iter().map(move |&k| p.decode(k))
    }

    pub fn is_subset_of(&self, other: &GroupSet) -> bool {
        self.ell() == other.ell() && self.keys.par_iter().all(|k| other.keys.binary_search(k).is_ok())
    }

    /// Checks closure under products with `gens` and under inverses.
    pub fn is_closed_under(&self, gens: &[Elem]) -> bool {
        let ell = self.ell();
        self.par_elements().all(|x| {
            gens.iter().all(|g| self.contains(&packed::mul(&x, g, ell)))
                && packed::inverse(&x, ell).is_some_and(|y| self.contains(&y))
        })
    }

    /// Elements whose similitude factor satisfies `pred`.
    pub fn filter_nu(&self, pred: impl Fn(u8) -> bool + Sync) -> GroupSet {
        let ell = self.ell();
        let keys = self
            .keys
            .par_iter()
            .copied()
            .filter(|&k| packed::similitude(&self.packer.decode(k), ell).is_some_and(&pred))
            .collect();
        GroupSet { packer: self.packer, keys }
    }
}

/// Estimated peak memory of a closure producing `order` elements.
pub fn estimated_bytes(order: u64) -> u64 {
    order * BYTES_PER_ELEMENT
}

/// Breadth-first closure of `gens` under right multiplication.
///
/// Frontier products are computed in parallel chunks and merged in chunk
/// order, so the result does not depend on the number of worker threads.
pub fn closure(ell: u64, gens: &[Elem], limit: usize) -> Result<GroupSet> {
    let packer = Packer::new(ell)?;
    let l = packer.ell();
    let id = packer.encode(&packed::identity());
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(id);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let seen_ref = &seen;
        let candidates: Vec<Vec<u64>> = frontier
            .par_chunks(CHUNK)
            .map(|chunk| {
                let mut out = Vec::with_capacity(chunk.len() * gens.len());
                for &k in chunk {
                    let x = packer.decode(k);
                    for g in gens {
                        let y = packer.encode(&packed::mul(&x, g, l));
                        if !seen_ref.contains(&y) {
                            out.push(y);
                        }
                    }
                }
                out
            })
            .collect();
        let mut next = Vec::new();
        for y in candidates.into_iter().flatten() {
            if seen.insert(y) {
                next.push(y);
            }
        }
        if seen.len() > limit {
            return Err(Error::ResourceLimit(format!("closure exceeded {limit} elements")));
        }
        frontier = next;
    }
    let mut keys: Vec<u64> = seen.into_iter().collect();
    keys.par_sort_unstable();
    Ok(GroupSet { packer, keys })
}

/// Smallest primitive root modulo `ell`.
pub fn primitive_root(ell: u8) -> u8 {
    let l = ell as u32;
    (2..l)
        .find(|&g| {
            let mut x = 1;
            (1..l - 1).all(|_| {
                x = x * g % l;
                x != 1
            })
        })
        .unwrap_or(1) as u8
}

/// Torus, root-group and Weyl generators of Sp4(F_l).
pub fn sp4_generators(ell: u8) -> Vec<Elem> {
    let g = primitive_root(ell) as i64;
    let gi = (1..ell as i64).find(|x| x * g % ell as i64 == 1).unwrap();
    let unit = |offs: &[(usize, usize, i64)]| {
        let mut r = [[0i64; 4]; 4];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, v) in offs {
            r[i][j] += v;
        }
        packed::from_rows(r, ell)
    };
    let transpose = |m: &Elem| -> Elem { std::array::from_fn(|k| m[4 * (k % 4) + k / 4]) };
    let roots = [
        unit(&[(0, 1, 1), (3, 2, -1)]),
        unit(&[(1, 3, 1)]),
        unit(&[(0, 2, 1)]),
        unit(&[(0, 3, 1), (1, 2, 1)]),
    ];
    let mut gens = vec![packed::diag([g, 1, gi, 1], ell), packed::diag([1, g, 1, gi], ell)];
    for r in &roots {
        gens.push(*r);
        gens.push(transpose(r));
    }
    gens.push(packed::from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], ell));
    gens.push(packed::from_rows([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0]], ell));
    gens
}

/// `l^4 (l^2 - 1)(l^4 - 1)`.
pub fn sp4_order(ell: u64) -> u64 {
    ell.pow(4) * (ell * ell - 1) * (ell.pow(4) - 1)
}

fn check_budget(ell: u64, order: u64, budget_mb: u64) -> Result<()> {
    if ell >= 7 {
        return Err(Error::ResourceLimit(format!(
            "full enumeration refused for l = {ell} (order {order})"
        )));
    }
    let need = estimated_bytes(order);
    if need > budget_mb * 1024 * 1024 {
        return Err(Error::ResourceLimit(format!(
            "l = {ell} needs about {} MB, budget is {budget_mb} MB",
            need.div_ceil(1024 * 1024)
        )));
    }
    Ok(())
}

/// Sp4(F_l) by closure of the standard generators.
pub fn enumerate_sp4(ell: u64, budget_mb: u64) -> Result<GroupSet> {
    Packer::new(ell)?;
    let order = sp4_order(ell);
    check_budget(ell, order, budget_mb)?;
    closure(ell, &sp4_generators(ell as u8), order as usize)
}

/// GSp4(F_l) as the union of the cosets `diag(1,1,nu,nu) Sp4(F_l)`.
pub fn enumerate_gsp4(ell: u64, budget_mb: u64) -> Result<GroupSet> {
    Packer::new(ell)?;
    check_budget(ell, sp4_order(ell) * (ell - 1), budget_mb)?;
    let sp = enumerate_sp4(ell, budget_mb)?;
    let l = ell as u8;
    let shifts: Vec<Elem> = (1..ell as i64).map(|nu| packed::diag([1, 1, nu, nu], l)).collect();
    let elems: Vec<Elem> = shifts
        .iter()
        .flat_map(|d| sp.elements().map(move |x| packed::mul(d, &x, l)))
        .collect();
    GroupSet::from_elements(ell, elems)
}

/// Generators of GSp4(F_l): those of Sp4 plus one similitude of primitive factor.
pub fn gsp4_generators(ell: u8) -> Vec<Elem> {
    let mut gens = sp4_generators(ell);
    let g = primitive_root(ell) as i64;
    gens.push(packed::diag([1, 1, g, g], ell));
    gens
}
