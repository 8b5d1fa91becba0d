//! Satake parameters, Hecke eigenvalues and local Euler factors in weight (2,1).

mod density;
mod lattice;
mod rou;

pub use density::{density_ratio, float_spin_factor, float_std5_factor, parse_eigen_table, EigenRow};
pub use lattice::{check_int, enumerate_y, LatticeElem, LatticeRing, RingMember};
pub use rou::{rou_charpolys, RouFactor, MAX_ROU_BOUND};

use crate::error::{Error, Result};
use crate::exact_arith::{ExactRepr, Field, UPoly};

/// Unramified parameters `(alpha0, alpha1, alpha2)`, all nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SatakeParams<F: Field> {
    pub alpha0: F,
    pub alpha1: F,
    pub alpha2: F,
}

impl<F: Field> SatakeParams<F> {
    pub fn new(alpha0: F, alpha1: F, alpha2: F) -> Result<Self> {
        if alpha0.is_zero() || alpha1.is_zero() || alpha2.is_zero() {
            return Err(Error::OutOfRange("Satake parameters must be nonzero".into()));
        }
        Ok(SatakeParams { alpha0, alpha1, alpha2 })
    }

    /// Central value `alpha0^2 alpha1 alpha2`.
    pub fn eps(&self) -> F {
        self.alpha0.clone() * self.alpha0.clone() * self.alpha1.clone() * self.alpha2.clone()
    }

    /// `alpha1 + alpha2 + 1 + alpha1^-1 + alpha2^-1`.
    pub fn c(&self) -> F {
        let one = self.alpha0.one_like();
        self.alpha1.clone()
            + self.alpha2.clone()
            + one
            + self.alpha1.inv().expect("nonzero")
            + self.alpha2.inv().expect("nonzero")
    }

    /// The four roots `alpha0 alpha1 alpha2, alpha0 alpha1, alpha0 alpha2, alpha0`.
    pub fn spin_roots(&self) -> [F; 4] {
        let (a0, a1, a2) = (&self.alpha0, &self.alpha1, &self.alpha2);
        [
            a0.clone() * a1.clone() * a2.clone(),
            a0.clone() * a1.clone(),
            a0.clone() * a2.clone(),
            a0.clone(),
        ]
    }
}

/// Eigenvalues `a1 = lambda(p)`, `a2` and central value `eps` at a prime `p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HeckeData<F: Field> {
    pub a1: F,
    pub a2: F,
    pub eps: F,
    pub p: u64,
}

/// A local factor `1 + c1 T + ... + cn T^n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EulerFactor<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> EulerFactor<F> {
    pub fn new(coeffs: Vec<F>) -> Result<Self> {
        if coeffs.first().is_none_or(|c| !c.is_one()) {
            return Err(Error::OutOfRange("Euler factor must have constant term 1".into()));
        }
        Ok(EulerFactor { coeffs })
    }

    fn from_poly(p: UPoly<F>, degree: usize, sample: &F) -> Self {
        EulerFactor { coeffs: p.padded(degree + 1, sample) }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn poly(&self) -> UPoly<F> {
        UPoly::new(self.coeffs.clone())
    }

    /// `c3 = eps c1` and `c4 = eps^2` for a degree-4 factor.
    pub fn satisfies_spin_shape(&self, eps: &F) -> bool {
        self.degree() == 4
            && self.coeffs[3] == eps.clone() * self.coeffs[1].clone()
            && self.coeffs[4] == eps.clone() * eps.clone()
    }

    /// `c_k = -c_{5-k}`, the symmetry of a degree-5 factor with unit determinant.
    pub fn is_antipalindromic(&self) -> bool {
        let n = self.degree();
        (0..=n).all(|k| self.coeffs[k] == -self.coeffs[n - k].clone())
    }

    pub fn to_json(&self) -> serde_json::Value
    where
        F: ExactRepr,
    {
        serde_json::json!({
            "degree": self.degree(),
            "coeffs": self.coeffs.iter().map(|c| c.exact_string()).collect::<Vec<_>>(),
        })
    }
}

fn prime_as<F: Field>(sample: &F, p: u64) -> F {
    sample.from_i64_like(p as i64)
}

/// `H_p(T) = 1 - a1 T + (p a2 + (1 + p^-2) eps) T^2 - a1 eps T^3 + eps^2 T^4`.
pub fn hecke_poly<F: Field>(h: &HeckeData<F>) -> EulerFactor<F> {
    let one = h.eps.one_like();
    let p = prime_as(&h.eps, h.p);
    let pinv2 = (p.clone() * p.clone()).inv().expect("p is invertible");
    let c2 = p * h.a2.clone() + (one.clone() + pinv2) * h.eps.clone();
    EulerFactor {
        coeffs: vec![one, -h.a1.clone(), c2, -(h.a1.clone() * h.eps.clone()), h.eps.clone() * h.eps.clone()],
    }
}

/// Eigenvalues of the spherical vector with the given Satake parameters.
pub fn satake_to_hecke<F: Field>(s: &SatakeParams<F>, p: u64) -> HeckeData<F> {
    let one = s.alpha0.one_like();
    let eps = s.eps();
    let a1 = s.alpha0.clone() * (one.clone() + s.alpha1.clone()) * (one.clone() + s.alpha2.clone());
    let pf = prime_as(&one, p);
    let pinv = pf.inv().expect("p is invertible");
    let inner = s.c() + one.clone() - one.clone() - pinv.clone() * pinv.clone();
    let a2 = eps.clone() * inner * pinv;
    HeckeData { a1, a2, eps, p }
}

/// `prod (1 - r T)` over the four spin roots.
pub fn spin_factor<F: Field>(s: &SatakeParams<F>) -> EulerFactor<F> {
    let roots = s.spin_roots();
    EulerFactor::from_poly(UPoly::from_reciprocal_roots(&roots, &s.alpha0), 4, &s.alpha0)
}

/// `(1 - a1 T)(1 - a2 T)(1 - T)(1 - a1^-1 T)(1 - a2^-1 T)`.
pub fn std5_factor<F: Field>(s: &SatakeParams<F>) -> EulerFactor<F> {
    let one = s.alpha0.one_like();
    let roots = [
        s.alpha1.clone(),
        s.alpha2.clone(),
        one.clone(),
        s.alpha1.inv().expect("nonzero"),
        s.alpha2.inv().expect("nonzero"),
    ];
    EulerFactor::from_poly(UPoly::from_reciprocal_roots(&roots, &one), 5, &one)
}

/// Pairwise products `r_i r_j` (`i < j`) of the spin roots.
pub fn wedge2_params<F: Field>(s: &SatakeParams<F>) -> [F; 6] {
    let r = s.spin_roots();
    [
        r[0].clone() * r[1].clone(),
        r[0].clone() * r[2].clone(),
        r[0].clone() * r[3].clone(),
        r[1].clone() * r[2].clone(),
        r[1].clone() * r[3].clone(),
        r[2].clone() * r[3].clone(),
    ]
}

/// `lambda(p^2) = lambda(p)^2 - eps p^-1 - eps (c(p) + 1)`.
pub fn lambda_p2<F: Field>(h: &HeckeData<F>, c_p: &F) -> F {
    let one = h.eps.one_like();
    let pinv = prime_as(&one, h.p).inv().expect("p is invertible");
    h.a1.clone() * h.a1.clone() - h.eps.clone() * pinv - h.eps.clone() * (c_p.clone() + one)
}

/// `lambda(p)^2 - lambda(p^2) - eps p^-1 = p a2 + (1 + p^-2) eps`.
pub fn eigenvalue_relation_holds<F: Field>(h: &HeckeData<F>, lambda_p2: &F) -> bool {
    let one = h.eps.one_like();
    let p = prime_as(&one, h.p);
    let pinv = p.inv().expect("p is invertible");
    let lhs = h.a1.clone() * h.a1.clone() - lambda_p2.clone() - h.eps.clone() * pinv.clone();
    let rhs = p * h.a2.clone() + (one + pinv.clone() * pinv) * h.eps.clone();
    lhs == rhs
}

/// Product of two degree-2 factors with the same determinant term.
pub fn endoscopic_spin_factor<F: Field>(f1: &EulerFactor<F>, f2: &EulerFactor<F>) -> Result<EulerFactor<F>> {
    if f1.degree() != 2 || f2.degree() != 2 {
        return Err(Error::OutOfRange("expected two degree-2 factors".into()));
    }
    if f1.coeffs[2] != f2.coeffs[2] || f1.coeffs[2].is_zero() {
        return Err(Error::ParameterInconsistency("central characters differ".into()));
    }
    let s = f1.coeffs[0].clone();
    Ok(EulerFactor::from_poly(f1.poly() * f2.poly(), 4, &s))
}


#[cfg(test)]
mod proptests;
