//! Exact coefficient domains and the linear algebra built on them.
//!
//! Every domain implements [`Field`]. Domains that carry a parameter (the
//! modulus of a prime field, the conductor of a cyclotomic field) build
//! constants from an existing element through the `*_like` constructors.

mod cyclotomic;
mod gaussian;
mod matrix;
mod poly;
mod prime_field;
mod quad_ext;
mod rational;

pub use cyclotomic::{cyclotomic_poly, Cyclotomic};
pub use gaussian::Gaussian;
pub use matrix::Mat;
pub use poly::UPoly;
pub use prime_field::{is_prime, quadratic_nonresidue, solve_sum_of_squares, Fp};
pub use quad_ext::{frobenius, QuadExt};
pub use rational::Rational;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

/// Lossless text form used in reports: `num/den` for rationals,
/// `a/b+c/d*i` for Gaussian rationals.
pub trait ExactRepr {
    fn exact_string(&self) -> String;
}

impl ExactRepr for Rational {
    fn exact_string(&self) -> String {
        Rational::exact_string(self)
    }
}

impl ExactRepr for Gaussian {
    fn exact_string(&self) -> String {
        Gaussian::exact_string(self)
    }
}

impl ExactRepr for Cyclotomic {
    fn exact_string(&self) -> String {
        self.to_string()
    }
}

impl ExactRepr for Fp {
    fn exact_string(&self) -> String {
        self.value().to_string()
    }
}

/// A commutative field with exact equality.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64_like(&self, n: i64) -> Self;
    /// Characteristic of the field (0 for characteristic zero).
    fn characteristic(&self) -> u64;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    /// Integer power; negative exponents invert.
    fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b.clone();
            }
            b = b.clone() * b;
            e >>= 1;
        }
        Some(acc)
    }
}

#[cfg(test)]
mod proptests;
