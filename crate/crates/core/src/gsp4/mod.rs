//! The group GSp4 of 4x4 matrices `g` with `g^t J g = nu(g) J`, where
//! `J = [[0, I2], [-I2, 0]]`, over any exact field.

mod lambda;
mod oddness;
mod weyl;

pub use lambda::{lambda_rep, moebius, SiegelPoint};
pub use oddness::oddness_normalize;
pub use weyl::{
    casimir_pair, infinity_type_solve, weyl_act, weyl_elements, weyl_orbit_and_stabilizer,
    CharacterData, Sign, WeylGen, WeylWord,
};

use crate::error::{Error, Result};
use crate::exact_arith::{Field, Mat, UPoly};

/// The standard alternating form `[[0, I2], [-I2, 0]]`.
pub fn j_matrix<F: Field>(sample: &F) -> Mat<F> {
    Mat::from_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]], sample)
}

/// `x^t J y`.
pub fn pairing<F: Field>(x: &[F], y: &[F]) -> F {
    x[0].clone() * y[2].clone() + x[1].clone() * y[3].clone()
        - x[2].clone() * y[0].clone()
        - x[3].clone() * y[1].clone()
}

/// The scalar `nu` with `m^t J m = nu J`, if it exists and is nonzero.
pub fn similitude_of<F: Field>(m: &Mat<F>) -> Result<F> {
    if m.nrows() != 4 || m.ncols() != 4 {
        return Err(Error::NotSimilitude);
    }
    let j = j_matrix(m.sample());
    let form = &(&m.transpose() * &j) * m;
    let nu = form.get(0, 2).clone();
    if nu.is_zero() || form != j.scale(&nu) {
        return Err(Error::NotSimilitude);
    }
    Ok(nu)
}

/// `diag(t1, t2, t0/t1, t0/t2)`.
pub fn torus<F: Field>(t1: &F, t2: &F, t0: &F) -> Result<Mat<F>> {
    let a = t0.div(t1).ok_or(Error::Singular)?;
    let b = t0.div(t2).ok_or(Error::Singular)?;
    Ok(Mat::diag(&[t1.clone(), t2.clone(), a, b]))
}

/// A verified element of GSp4 with its similitude factor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GSpElement<F: Field> {
    mat: Mat<F>,
    nu: F,
}

impl<F: Field> GSpElement<F> {
    pub fn new(mat: Mat<F>) -> Result<Self> {
        let nu = similitude_of(&mat)?;
        Ok(GSpElement { mat, nu })
    }

    pub fn identity(sample: &F) -> Self {
        GSpElement { mat: Mat::identity(4, sample), nu: sample.one_like() }
    }

    pub fn mat(&self) -> &Mat<F> {
        &self.mat
    }

    pub fn nu(&self) -> &F {
        &self.nu
    }

    pub fn into_mat(self) -> Mat<F> {
        self.mat
    }

    pub fn mul(&self, o: &Self) -> Self {
        GSpElement { mat: &self.mat * &o.mat, nu: self.nu.clone() * o.nu.clone() }
    }

    pub fn inverse(&self) -> Self {
        GSpElement {
            mat: self.mat.inverse().expect("similitudes are invertible"),
            nu: self.nu.inv().expect("similitude factor is nonzero"),
        }
    }

    pub fn conj_by(&self, p: &Self) -> Self {
        p.inverse().mul(self).mul(p)
    }

    pub fn char_poly(&self) -> UPoly<F> {
        char_poly(&self.mat)
    }
}

/// `det(1 - m T)` for a square matrix, via sums of principal minors.
pub fn char_poly<F: Field>(m: &Mat<F>) -> UPoly<F> {
    let n = m.nrows();
    let s = m.sample();
    let mut coeffs = vec![s.zero_like(); n + 1];
    coeffs[0] = s.one_like();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let k = idx.len();
        let minor = m.submatrix(&idx, &idx).det();
        coeffs[k] = if k.is_multiple_of(2) { coeffs[k].clone() + minor } else { coeffs[k].clone() - minor };
    }
    UPoly::new(coeffs)
}

/// Levi-type subgroups recognised by [`is_in_levi`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Levi {
    /// The diagonal torus.
    B,
    /// Siegel Levi: block diagonal `(A, u A^-t)`.
    P,
    /// Klingen Levi: `diag(a', *, u/a', *)` with a GL2 block on coordinates 2 and 4.
    Q,
    /// Endoscopic checkerboard subgroup.
    Hen,
}

fn zero_outside<F: Field>(m: &Mat<F>, allowed: impl Fn(usize, usize) -> bool) -> bool {
    (0..4).all(|i| (0..4).all(|j| allowed(i, j) || m.get(i, j).is_zero()))
}

pub fn is_in_levi<F: Field>(g: &GSpElement<F>, which: Levi) -> bool {
    let m = g.mat();
    match which {
        Levi::B => zero_outside(m, |i, j| i == j),
        Levi::P => zero_outside(m, |i, j| (i < 2) == (j < 2)),
        Levi::Q => zero_outside(m, |i, j| {
            (i == j && (i == 0 || i == 2)) || (i % 2 == 1 && j % 2 == 1)
        }),
        Levi::Hen => {
            zero_outside(m, |i, j| i % 2 == j % 2) && {
                let (a, b) = hen_blocks(m);
                a.det() == b.det()
            }
        }
    }
}

/// The pair `(A, B)` read from the checkerboard positions.
pub fn hen_blocks<F: Field>(m: &Mat<F>) -> (Mat<F>, Mat<F>) {
    (m.submatrix(&[0, 2], &[0, 2]), m.submatrix(&[1, 3], &[1, 3]))
}

/// `(A, B) -> ` the checkerboard element of the endoscopic subgroup; needs `det A = det B`.
pub fn endoscopic_embed<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Result<GSpElement<F>> {
    if a.det() != b.det() {
        return Err(Error::ParameterInconsistency("det A != det B".into()));
    }
    let z = a.sample().zero_like();
    let m = Mat::from_fn(4, 4, |i, j| match (i % 2, j % 2) {
        (0, 0) => a.get(i / 2, j / 2).clone(),
        (1, 1) => b.get(i / 2, j / 2).clone(),
        _ => z.clone(),
    });
    GSpElement::new(m)
}


#[cfg(test)]
mod proptests;
