use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Field;

/// Univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        UPoly::new(vec![c])
    }

    /// `1 - r*T`.
    pub fn one_minus(r: &F) -> Self {
        UPoly::new(vec![r.one_like(), -r.clone()])
    }

    /// `prod (1 - r*T)` over `roots`; `sample` supplies the constant 1 for an empty product.
    pub fn from_reciprocal_roots(roots: &[F], sample: &F) -> Self {
        roots
            .iter()
            .fold(UPoly::constant(sample.one_like()), |acc, r| acc * UPoly::one_minus(r))
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient vector padded with zeros to length `n`.
    pub fn padded(&self, n: usize, sample: &F) -> Vec<F> {
        let mut v = self.coeffs.clone();
        v.resize(n.max(v.len()), sample.zero_like());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Option<&F> {
        self.coeffs.get(k)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, s: &F) -> Self {
        UPoly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// `p(s*T)`.
    pub fn rescale_var(&self, s: &F) -> Self {
        let mut pw = s.one_like();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.clone() * pw.clone());
            pw = pw * s.clone();
        }
        UPoly::new(out)
    }

    /// Euclidean division; `None` for a zero divisor.
    pub fn divrem(&self, d: &Self) -> Option<(Self, Self)> {
        let lead_inv = d.leading()?.inv()?;
        let dd = d.degree()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((UPoly::zero(), self.clone()));
        }
        let zero = lead_inv.zero_like();
        let mut q = vec![zero.clone(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() * lead_inv.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Some((UPoly::new(q), UPoly::new(r)))
    }
}

impl<F: Field> Add for UPoly<F> {
    type Output = UPoly<F>;
    fn add(self, o: UPoly<F>) -> UPoly<F> {
        let (mut long, short) = if self.coeffs.len() >= o.coeffs.len() {
            (self.coeffs, o.coeffs)
        } else {
            (o.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a = a.clone() + b;
        }
        UPoly::new(long)
    }
}

impl<F: Field> Neg for UPoly<F> {
    type Output = UPoly<F>;
    fn neg(self) -> UPoly<F> {
        UPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<F: Field> Sub for UPoly<F> {
    type Output = UPoly<F>;
    fn sub(self, o: UPoly<F>) -> UPoly<F> {
        self + (-o)
    }
}

impl<F: Field> Mul for UPoly<F> {
    type Output = UPoly<F>;
    fn mul(self, o: UPoly<F>) -> UPoly<F> {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UPoly::new(out)
    }
}

impl<F: Field> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*T")?,
                _ => write!(f, "({c})*T^{k}")?,
            }
        }
        Ok(())
    }
}
