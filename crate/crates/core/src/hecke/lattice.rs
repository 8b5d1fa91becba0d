use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::{lambda_p2, HeckeData};
use crate::error::{Error, Result};
use crate::exact_arith::{Cyclotomic, Field, Gaussian, Rational};

/// `Z`, `Z[i]` or `Z[w]` with `w` a primitive cube root of unity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum LatticeRing {
    Z,
    Gaussian,
    Eisenstein,
}

impl LatticeRing {
    /// Conductor of the cyclotomic field the ring generates.
    pub fn conductor(self) -> u64 {
        match self {
            LatticeRing::Z => 1,
            LatticeRing::Gaussian => 4,
            LatticeRing::Eisenstein => 3,
        }
    }

    pub fn units(self) -> Vec<LatticeElem> {
        let e = |x, y| LatticeElem::new(self, x, y);
        match self {
            LatticeRing::Z => vec![e(1, 0), e(-1, 0)],
            LatticeRing::Gaussian => vec![e(1, 0), e(-1, 0), e(0, 1), e(0, -1)],
            LatticeRing::Eisenstein => vec![e(1, 0), e(-1, 0), e(0, 1), e(0, -1), e(1, 1), e(-1, -1)],
        }
    }

    /// Squared modulus of `x + y theta` under either complex embedding.
    pub fn norm(self, x: i64, y: i64) -> i64 {
        match self {
            LatticeRing::Z => x * x,
            LatticeRing::Gaussian => x * x + y * y,
            LatticeRing::Eisenstein => x * x - x * y + y * y,
        }
    }
}

impl fmt::Display for LatticeRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeRing::Z => "z",
            LatticeRing::Gaussian => "gaussian",
            LatticeRing::Eisenstein => "eisenstein",
        })
    }
}

impl FromStr for LatticeRing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "z" | "zz" | "integers" => Ok(LatticeRing::Z),
            "gaussian" | "z[i]" | "zi" => Ok(LatticeRing::Gaussian),
            "eisenstein" | "z[w]" | "zw" | "z[omega]" => Ok(LatticeRing::Eisenstein),
            _ => Err(Error::Parse(format!("unknown ring {s:?}"))),
        }
    }
}

/// `x + y theta` with `theta = 0, i, w` according to the ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LatticeElem {
    pub ring: LatticeRing,
    pub x: i64,
    pub y: i64,
}

impl LatticeElem {
    pub fn new(ring: LatticeRing, x: i64, y: i64) -> Self {
        let y = if ring == LatticeRing::Z { 0 } else { y };
        LatticeElem { ring, x, y }
    }

    pub fn norm(&self) -> i64 {
        self.ring.norm(self.x, self.y)
    }

    pub fn mul(&self, other: &LatticeElem) -> LatticeElem {
        assert_eq!(self.ring, other.ring);
        let (a, b, c, d) = (self.x, self.y, other.x, other.y);
        match self.ring {
            LatticeRing::Z => LatticeElem::new(self.ring, a * c, 0),
            LatticeRing::Gaussian => LatticeElem::new(self.ring, a * c - b * d, a * d + b * c),
            // w^2 = -1 - w
            LatticeRing::Eisenstein => LatticeElem::new(self.ring, a * c - b * d, a * d + b * c - b * d),
        }
    }

    pub fn conj(&self) -> LatticeElem {
        match self.ring {
            LatticeRing::Z => *self,
            LatticeRing::Gaussian => LatticeElem::new(self.ring, self.x, -self.y),
            // conj(w) = -1 - w
            LatticeRing::Eisenstein => LatticeElem::new(self.ring, self.x - self.y, -self.y),
        }
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        let n = self.ring.conductor();
        let x = Cyclotomic::from_rational(n, Rational::from_int(self.x));
        if self.ring == LatticeRing::Z {
            return x;
        }
        x + Cyclotomic::zeta_pow(n, 1) * Cyclotomic::from_rational(n, Rational::from_int(self.y))
    }

    /// Images under all complex embeddings.
    pub fn embeddings(&self) -> Vec<Complex64> {
        let c = self.to_cyclotomic();
        let n = c.conductor();
        (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).map(|k| c.embed(k)).collect()
    }
}

impl fmt::Display for LatticeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.ring {
            LatticeRing::Z => return write!(f, "{}", self.x),
            LatticeRing::Gaussian => "i",
            LatticeRing::Eisenstein => "w",
        };
        match (self.x, self.y) {
            (x, 0) => write!(f, "{x}"),
            (0, y) => write!(f, "{y}*{t}"),
            (x, y) if y < 0 => write!(f, "{x}-{}*{t}", -y),
            (x, y) => write!(f, "{x}+{y}*{t}"),
        }
    }
}

/// Largest `c` accepted by [`enumerate_y`].
const MAX_Y_BOUND: i64 = 1 << 20;

/// All ring elements whose embeddings all have squared modulus at most `c`.
pub fn enumerate_y(c: &Rational, ring: LatticeRing) -> Result<BTreeSet<LatticeElem>> {
    if c.is_negative() {
        return Err(Error::OutOfRange("bound must be nonnegative".into()));
    }
    let cap = c.floor().to_i64().filter(|&v| v <= MAX_Y_BOUND).ok_or_else(|| Error::OutOfRange(format!("bound {c} too large")))?;
    // x^2 - xy + y^2 >= 3 max(|x|,|y|)^2 / 4
    let r = ((4 * cap) as f64 / 3.0).sqrt().floor() as i64 + 1;
    let ys: Vec<i64> = if ring == LatticeRing::Z { vec![0] } else { (-r..=r).collect() };
    let mut out = BTreeSet::new();
    for x in -r..=r {
        for &y in &ys {
            if ring.norm(x, y) <= cap {
                out.insert(LatticeElem::new(ring, x, y));
            }
        }
    }
    Ok(out)
}

/// Membership test in a [`LatticeRing`] for values of a coefficient field.
pub trait RingMember {
    /// `Ok(true)` for ring elements, `Ok(false)` for non-integral elements of
    /// the fraction field, and an error outside the fraction field.
    fn in_ring(&self, ring: LatticeRing) -> Result<bool>;
}

fn outside(v: &dyn fmt::Display, ring: LatticeRing) -> Error {
    Error::NotInFractionField(format!("{v} is not in the fraction field of {ring}"))
}

impl RingMember for Rational {
    fn in_ring(&self, _ring: LatticeRing) -> Result<bool> {
        Ok(self.is_integer())
    }
}

impl RingMember for Gaussian {
    fn in_ring(&self, ring: LatticeRing) -> Result<bool> {
        match ring {
            LatticeRing::Gaussian => Ok(self.re.is_integer() && self.im.is_integer()),
            _ if self.is_real() => Ok(self.re.is_integer()),
            _ => Err(outside(self, ring)),
        }
    }
}

impl RingMember for Cyclotomic {
    fn in_ring(&self, ring: LatticeRing) -> Result<bool> {
        if !self.in_subfield(ring.conductor()) {
            return Err(outside(self, ring));
        }
        Ok(self.is_integral())
    }
}

/// True iff `lambda(p)` and `lambda(p)^2 - lambda(p^2) - eps/p` lie in the ring.
pub fn check_int<F: Field + RingMember>(h: &HeckeData<F>, c_p: &F, ring: LatticeRing) -> Result<bool> {
    let pinv = h.eps.from_i64_like(h.p as i64).inv().expect("p is invertible");
    let second = h.a1.clone() * h.a1.clone() - lambda_p2(h, c_p) - h.eps.clone() * pinv;
    let a = h.a1.in_ring(ring)?;
    let b = second.in_ring(ring)?;
    Ok(a && b)
}
