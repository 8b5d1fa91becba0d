use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{quadratic_nonresidue, Field, Fp};
use crate::error::{Error, Result};

/// Element `x + y*sqrt(u)` of F_{l^2} = F_l(sqrt(u)) for a non-residue `u`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QuadExt {
    pub u: Fp,
    pub x: Fp,
    pub y: Fp,
}

impl QuadExt {
    pub fn new(u: Fp, x: i64, y: i64) -> Self {
        let p = u.modulus();
        QuadExt { u, x: Fp::new(p, x), y: Fp::new(p, y) }
    }

    /// Validates that `u` is a non-residue.
    pub fn checked(u: Fp, x: i64, y: i64) -> Result<Self> {
        Fp::checked(u.modulus(), 0)?;
        if u.is_square() {
            return Err(Error::ParameterInconsistency(format!(
                "{u} is a square mod {}",
                u.modulus()
            )));
        }
        Ok(QuadExt::new(u, x, y))
    }

    /// Uses the canonical non-residue of [`quadratic_nonresidue`].
    pub fn canonical(ell: u64, x: i64, y: i64) -> Result<Self> {
        Ok(QuadExt::new(quadratic_nonresidue(ell)?, x, y))
    }

    pub fn modulus(&self) -> u64 {
        self.u.modulus()
    }

    /// All `l^2` elements in the order `(x, y)` lexicographic.
    pub fn all(u: Fp) -> Vec<QuadExt> {
        let p = u.modulus() as i64;
        (0..p).flat_map(|x| (0..p).map(move |y| QuadExt::new(u, x, y))).collect()
    }

    pub fn norm(&self) -> Fp {
        self.x * self.x - self.u * self.y * self.y
    }
}

/// The Frobenius `x + y sqrt(u) -> x - y sqrt(u)`, i.e. raising to the l-th power.
pub fn frobenius(z: QuadExt) -> QuadExt {
    QuadExt { u: z.u, x: z.x, y: -z.y }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*sqrt({})", self.x, self.y, self.u)
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, o: QuadExt) -> QuadExt {
        QuadExt { u: self.u, x: self.x + o.x, y: self.y + o.y }
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, o: QuadExt) -> QuadExt {
        QuadExt { u: self.u, x: self.x - o.x, y: self.y - o.y }
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, o: QuadExt) -> QuadExt {
        QuadExt {
            u: self.u,
            x: self.x * o.x + self.u * self.y * o.y,
            y: self.x * o.y + self.y * o.x,
        }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { u: self.u, x: -self.x, y: -self.y }
    }
}

impl Field for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt::new(self.u, 0, 0)
    }
    fn one_like(&self) -> Self {
        QuadExt::new(self.u, 1, 0)
    }
    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(QuadExt { u: self.u, x: self.x * n, y: -self.y * n })
    }
    fn from_i64_like(&self, n: i64) -> Self {
        QuadExt::new(self.u, n, 0)
    }
    fn characteristic(&self) -> u64 {
        self.modulus()
    }
}
