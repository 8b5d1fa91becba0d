use std::io::Read;

use num_complex::Complex64;
use serde::Deserialize;

use super::HeckeData;
use crate::error::{Error, Result};
use crate::exact_arith::{Field, Gaussian};

/// `(sum_p |lambda(p)|^2 p^-s) / log(1 / (s - 1))` over the given primes.
///
/// Defined for `1 < s < 2`, where the denominator is positive.
pub fn density_ratio(eigdata: &[(u64, Complex64)], s: f64) -> Result<f64> {
    if s.is_nan() || s <= 1.0 {
        return Err(Error::OutOfRange(format!("s = {s} must exceed 1")));
    }
    if s >= 2.0 {
        return Err(Error::OutOfRange(format!("s = {s}: log(1/(s-1)) is not positive")));
    }
    let num: f64 = eigdata.iter().map(|&(p, l)| l.norm_sqr() / (p as f64).powf(s)).sum();
    Ok(num / (1.0 / (s - 1.0)).ln())
}

fn one_minus_product(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        let mut next = c.clone();
        next.push(Complex64::new(0.0, 0.0));
        for k in 0..c.len() {
            next[k + 1] -= r * c[k];
        }
        c = next;
    }
    c
}

/// Floating spin factor coefficients `[1, c1, c2, c3, c4]`.
pub fn float_spin_factor(a0: Complex64, a1: Complex64, a2: Complex64) -> Vec<Complex64> {
    one_minus_product(&[a0 * a1 * a2, a0 * a1, a0 * a2, a0])
}

/// Floating degree-5 standard factor coefficients.
pub fn float_std5_factor(a1: Complex64, a2: Complex64) -> Vec<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    one_minus_product(&[a1, a2, one, one / a1, one / a2])
}

/// One line `p, lambda_p, lambda_p2, eps` of an eigenvalue table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EigenRow {
    pub p: u64,
    pub lambda_p: Gaussian,
    pub lambda_p2: Gaussian,
    pub eps: Gaussian,
}

#[derive(Deserialize)]
struct RawRow {
    p: u64,
    lambda_p: String,
    lambda_p2: String,
    eps: String,
}

impl EigenRow {
    /// Recovers `c(p)` and `a2` from `lambda(p^2) = lambda(p)^2 - eps/p - eps (c(p) + 1)`.
    pub fn hecke_data(&self) -> Result<(HeckeData<Gaussian>, Gaussian)> {
        let einv = self.eps.inv().ok_or_else(|| Error::OutOfRange(format!("eps = 0 at p = {}", self.p)))?;
        let one = Gaussian::from_ints(1, 0);
        let p = Gaussian::from_ints(self.p as i64, 0);
        let pinv = p.inv().unwrap();
        let a1sq = self.lambda_p.clone() * self.lambda_p.clone();
        let c_p = (a1sq - self.eps.clone() * pinv.clone() - self.lambda_p2.clone()) * einv - one.clone();
        // p a2 + (1 + p^-2) eps = eps (c(p) + 1)
        let a2 = (self.eps.clone() * (c_p.clone() + one.clone()) - (one + pinv.clone() * pinv.clone()) * self.eps.clone()) * pinv;
        let h = HeckeData { a1: self.lambda_p.clone(), a2, eps: self.eps.clone(), p: self.p };
        Ok((h, c_p))
    }

    pub fn lambda_f64(&self) -> Complex64 {
        Complex64::new(self.lambda_p.re.to_f64(), self.lambda_p.im.to_f64())
    }
}

/// Reads a headed CSV with columns `p,lambda_p,lambda_p2,eps`.
pub fn parse_eigen_table<R: Read>(reader: R) -> Result<Vec<EigenRow>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let mut out = Vec::new();
    for rec in rdr.deserialize::<RawRow>() {
        let r = rec.map_err(|e| Error::Parse(e.to_string()))?;
        if !crate::exact_arith::is_prime(r.p) {
            return Err(Error::Parse(format!("{} is not prime", r.p)));
        }
        out.push(EigenRow { p: r.p, lambda_p: r.lambda_p.parse()?, lambda_p2: r.lambda_p2.parse()?, eps: r.eps.parse()? });
    }
    Ok(out)
}
