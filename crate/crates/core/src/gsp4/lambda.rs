//! The weight representation of GL2 and the action on the Siegel upper half-space.

use super::GSpElement;
use crate::error::{Error, Result};
use crate::exact_arith::{Field, Gaussian, Mat, Rational, UPoly};

/// Matrix of `Sym^(k1-k2) (x) det^k2` on the basis `e1^(n-i) e2^i`, `n = k1 - k2`.
///
/// Row `i` holds the coordinates of `g . e1^(n-i) e2^i`, where
/// `g . e1 = a e1 + b e2` and `g . e2 = c e1 + d e2` for `g = [[a, b], [c, d]]`.
/// With this convention `lambda(gh) = lambda(g) lambda(h)`.
pub fn lambda_rep<F: Field>(k1: i64, k2: i64, g: &Mat<F>) -> Result<Mat<F>> {
    if k1 < k2 {
        return Err(Error::OutOfRange(format!("k1 = {k1} < k2 = {k2}")));
    }
    if g.nrows() != 2 || g.ncols() != 2 {
        return Err(Error::OutOfRange("expected a 2x2 matrix".into()));
    }
    let det = g.det();
    let dk = det.pow(k2).ok_or(Error::Singular)?;
    let n = (k1 - k2) as usize;
    let s = g.sample();
    // polynomials in the e2-degree
    let img1 = UPoly::new(vec![g.get(0, 0).clone(), g.get(0, 1).clone()]);
    let img2 = UPoly::new(vec![g.get(1, 0).clone(), g.get(1, 1).clone()]);
    let mut out = Mat::zeros(n + 1, n + 1, s);
    for i in 0..=n {
        let mut p = UPoly::constant(s.one_like());
        for _ in 0..n - i {
            p = p * img1.clone();
        }
        for _ in 0..i {
            p = p * img2.clone();
        }
        for (j, c) in p.padded(n + 1, s).into_iter().enumerate() {
            out.set(i, j, c * dk.clone());
        }
    }
    Ok(out)
}

/// A symmetric 2x2 complex matrix with positive definite imaginary part.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SiegelPoint {
    z: Mat<Gaussian>,
}

impl SiegelPoint {
    pub fn new(z: Mat<Gaussian>) -> Result<Self> {
        if z.nrows() != 2 || z.ncols() != 2 || z.get(0, 1) != z.get(1, 0) {
            return Err(Error::PreconditionViolated("Z is not a symmetric 2x2 matrix".into()));
        }
        let y = z.map(|x| x.im.clone());
        if !(y.get(0, 0) > &Rational::zero() && y.det() > Rational::zero()) {
            return Err(Error::PreconditionViolated("Im(Z) is not positive definite".into()));
        }
        Ok(SiegelPoint { z })
    }

    pub fn z(&self) -> &Mat<Gaussian> {
        &self.z
    }
}

/// `(gamma Z, J(gamma, Z)) = ((AZ + B)(CZ + D)^-1, CZ + D)`; requires `nu(gamma) > 0`.
pub fn moebius(gamma: &GSpElement<Gaussian>, z: &SiegelPoint) -> Result<(SiegelPoint, Mat<Gaussian>)> {
    let nu = gamma.nu();
    if !(nu.is_real() && nu.re > Rational::zero()) {
        return Err(Error::PreconditionViolated("similitude factor must be positive".into()));
    }
    let m = gamma.mat();
    let a = m.submatrix(&[0, 1], &[0, 1]);
    let b = m.submatrix(&[0, 1], &[2, 3]);
    let c = m.submatrix(&[2, 3], &[0, 1]);
    let d = m.submatrix(&[2, 3], &[2, 3]);
    let j = &c * z.z() + d;
    let jinv = j.inverse().ok_or(Error::Singular)?;
    let w = &(&a * z.z() + b) * &jinv;
    Ok((SiegelPoint::new(w)?, j))
}
