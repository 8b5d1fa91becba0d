use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Field;
use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_odd_prime(ell: u64) -> Result<()> {
    if ell == 2 || !is_prime(ell) {
        return Err(Error::InvalidField(format!("{ell} is not an odd prime")));
    }
    Ok(())
}

/// Element of the prime field F_p with p an odd prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    p: u64,
    v: u64,
}

impl Fp {
    /// Reduce `v` modulo `p`. The modulus is trusted; use [`Fp::checked`] at boundaries.
    pub fn new(p: u64, v: i64) -> Self {
        Fp { p, v: v.rem_euclid(p as i64) as u64 }
    }

    pub fn checked(p: u64, v: i64) -> Result<Self> {
        check_odd_prime(p)?;
        Ok(Fp::new(p, v))
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn is_square(&self) -> bool {
        self.v == 0 || self.legendre() == 1
    }

    fn legendre(&self) -> u64 {
        let mut acc = 1u64;
        let mut b = self.v;
        let mut e = (self.p - 1) / 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { p: self.p, v: (self.v + o.v) % self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { p: self.p, v: (self.v + self.p - o.v) % self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { p: self.p, v: self.v * o.v % self.p }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp { p: self.p, v: (self.p - self.v) % self.p }
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp { p: self.p, v: 0 }
    }
    fn one_like(&self) -> Self {
        Fp { p: self.p, v: 1 }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        self.pow(self.p as i64 - 2)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Fp::new(self.p, n)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// Smallest positive integer that is not a square modulo `ell`.
pub fn quadratic_nonresidue(ell: u64) -> Result<Fp> {
    check_odd_prime(ell)?;
    (1..ell as i64)
        .map(|u| Fp::new(ell, u))
        .find(|x| !x.is_square())
        .ok_or_else(|| Error::NoSolution(format!("no non-residue mod {ell}")))
}

/// Lexicographically smallest `(a, b)` with `a, b` nonzero and `a^2 + b^2 = u`.
pub fn solve_sum_of_squares(u: Fp, ell: u64) -> Result<(Fp, Fp)> {
    check_odd_prime(ell)?;
    if u.modulus() != ell {
        return Err(Error::ParameterInconsistency(format!(
            "u lives in F_{} but ell = {ell}",
            u.modulus()
        )));
    }
    if u.is_square() {
        return Err(Error::ParameterInconsistency(format!("{u} is a square mod {ell}")));
    }
    for a in 1..ell as i64 {
        for b in 1..ell as i64 {
            let (x, y) = (Fp::new(ell, a), Fp::new(ell, b));
            if x * x + y * y == u {
                return Ok((x, y));
            }
        }
    }
    Err(Error::NoSolution(format!("a^2+b^2={u} mod {ell} with a,b nonzero")))
}
