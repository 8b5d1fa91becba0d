use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_arith::{Field, Mat};

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// A finite matrix group listed in breadth-first discovery order.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup<F: Field> {
    generators: Vec<Mat<F>>,
    elements: Vec<Mat<F>>,
    index: HashMap<Mat<F>, usize>,
}

impl<F: Field> FiniteMatrixGroup<F> {
    pub fn generators(&self) -> &[Mat<F>] {
        &self.generators
    }

    pub fn elements(&self) -> &[Mat<F>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Mat<F>) -> bool {
        self.index.contains_key(m)
    }

    /// Position of `m` in discovery order.
    pub fn position(&self, m: &Mat<F>) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Scalar matrices in the group, as their scalars.
    pub fn scalars(&self) -> Vec<F> {
        self.elements.iter().filter_map(|m| m.is_scalar()).collect()
    }

    /// Whether `x m x^-1` lies in the group for every generator `m`.
    pub fn normalized_by(&self, x: &Mat<F>) -> bool {
        let Some(xi) = x.inverse() else { return false };
        self.generators.iter().all(|m| self.contains(&(&(x * m) * &xi)))
    }

    /// Order of the quotient by the central subgroup of the given scalar
    /// matrices, which must lie in the group.
    pub fn quotient_order(&self, scalars: &[F]) -> Option<usize> {
        let s = self.sample();
        let id = Mat::identity(self.elements[0].nrows(), &s);
        let all_in = scalars.iter().all(|c| self.contains(&id.scale(c)));
        (all_in && !scalars.is_empty() && self.order().is_multiple_of(scalars.len())).then(|| self.order() / scalars.len())
    }

    /// Exponent of the quotient by the given scalars: the least `k` with
    /// every `g^k` scalar from the list.
    pub fn quotient_exponent(&self, scalars: &[F]) -> usize {
        let is_central = |m: &Mat<F>| m.is_scalar().is_some_and(|c| scalars.contains(&c));
        let order_of = |g: &Mat<F>| {
            let mut x = g.clone();
            let mut k = 1;
            while !is_central(&x) {
                x = &x * g;
                k += 1;
            }
            k
        };
        self.elements.iter().map(order_of).fold(1, num_integer::lcm)
    }

    fn sample(&self) -> F {
        self.elements[0].sample().clone()
    }
}

/// Closure of `gens` under multiplication, stopping with an error once more
/// than `cap` elements have been found.
pub fn group_closure<F: Field>(gens: &[Mat<F>], cap: usize) -> Result<FiniteMatrixGroup<F>> {
    let first = gens.first().ok_or_else(|| Error::OutOfRange("no generators".into()))?;
    let n = first.nrows();
    if gens.iter().any(|g| g.nrows() != n || g.ncols() != n || g.det().is_zero()) {
        return Err(Error::Singular);
    }
    let id = Mat::identity(n, first.sample());
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let products: Vec<Mat<F>> = frontier
            .par_iter()
            .flat_map_iter(|&i| gens.iter().map(move |g| (i, g)))
            .map(|(i, g)| &elements[i] * g)
            .collect();
        let mut next = Vec::new();
        for m in products {
            if !index.contains_key(&m) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                index.insert(m.clone(), elements.len());
                next.push(elements.len());
                elements.push(m);
            }
        }
        frontier = next;
    }
    Ok(FiniteMatrixGroup { generators: gens.to_vec(), elements, index })
}
