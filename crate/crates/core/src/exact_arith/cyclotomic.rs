use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_complex::Complex64;
use num_integer::Integer;
use once_cell::sync::Lazy;

use super::{Field, Gaussian, Rational, UPoly};
use crate::error::{Error, Result};

static PHI_CACHE: Lazy<Mutex<HashMap<u64, Arc<UPoly<Rational>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The cyclotomic polynomial Phi_n (monic, integer coefficients).
pub fn cyclotomic_poly(n: u64) -> Arc<UPoly<Rational>> {
    assert!(n >= 1);
    if let Some(p) = PHI_CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    let one = Rational::one();
    let mut xn1 = vec![Rational::zero(); n as usize + 1];
    xn1[0] = -one.clone();
    xn1[n as usize] = one;
    let mut p = UPoly::new(xn1);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = p.divrem(&cyclotomic_poly(d)).expect("monic divisor").0;
    }
    let p = Arc::new(p);
    PHI_CACHE.lock().unwrap().insert(n, p.clone());
    p
}

#[cfg(test)]
fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// Element of Q(zeta_n) in the power basis `1, z, ..., z^(phi(n)-1)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    n: u64,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.coeffs == o.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.n.hash(h);
        self.coeffs.hash(h);
    }
}

impl Cyclotomic {
    fn reduce(n: u64, p: UPoly<Rational>) -> Self {
        let phi = cyclotomic_poly(n);
        let d = phi.degree().unwrap();
        let r = if p.degree().is_some_and(|k| k >= d) { p.divrem(&phi).unwrap().1 } else { p };
        Cyclotomic { n, coeffs: r.padded(d, &Rational::zero()) }
    }

    pub fn from_rational(n: u64, q: Rational) -> Self {
        Cyclotomic::reduce(n, UPoly::constant(q))
    }

    /// Coefficients in the power basis, reduced modulo Phi_n.
    pub fn from_coeffs(n: u64, coeffs: Vec<Rational>) -> Self {
        Cyclotomic::reduce(n, UPoly::new(coeffs))
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta_pow(n: u64, k: i64) -> Self {
        let k = k.rem_euclid(n as i64) as usize;
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = Rational::one();
        Cyclotomic::reduce(n, UPoly::new(v))
    }

    /// Embeds a Gaussian rational; requires `4 | n`.
    pub fn from_gaussian(n: u64, g: &Gaussian) -> Result<Self> {
        if !n.is_multiple_of(4) {
            return Err(Error::InvalidField(format!("i is not in Q(zeta_{n})")));
        }
        let i = Cyclotomic::zeta_pow(n, (n / 4) as i64);
        Ok(Cyclotomic::from_rational(n, g.re.clone()) + i * Cyclotomic::from_rational(n, g.im.clone()))
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| self.coeffs[0].clone())
    }

    /// Galois action `zeta -> zeta^k` for `k` prime to the conductor.
    pub fn galois(&self, k: u64) -> Self {
        assert_eq!(k.gcd(&self.n), 1, "exponent not prime to conductor");
        let mut acc = vec![Rational::zero(); self.n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            let t = (j as u64 * k % self.n) as usize;
            acc[t] = &acc[t] + c;
        }
        Cyclotomic::reduce(self.n, UPoly::new(acc))
    }

    /// True iff the element lies in the subfield Q(zeta_m), `m | n`.
    pub fn in_subfield(&self, m: u64) -> bool {
        let m = m.gcd(&self.n);
        (1..self.n)
            .filter(|k| k.gcd(&self.n) == 1 && k % m == 1 % m)
            .all(|k| self.galois(k) == *self)
    }

    /// Integral power-basis coefficients, i.e. membership in Z[zeta_n].
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Value under the embedding `zeta_n -> exp(2 pi i k / n)`.
    pub fn embed(&self, k: u64) -> Complex64 {
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / self.n as f64);
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * w + c.to_f64();
        }
        acc
    }

    fn as_poly(&self) -> UPoly<Rational> {
        UPoly::new(self.coeffs.clone())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.exact_string(),
                1 => format!("{}*z{}", c.exact_string(), self.n),
                _ => format!("{}*z{}^{k}", c.exact_string(), self.n),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0/1")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: Cyclotomic) -> Cyclotomic {
        assert_eq!(self.n, o.n, "mixed conductors");
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        Cyclotomic { n: self.n, coeffs }
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: Cyclotomic) -> Cyclotomic {
        assert_eq!(self.n, o.n, "mixed conductors");
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        Cyclotomic { n: self.n, coeffs }
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: Cyclotomic) -> Cyclotomic {
        assert_eq!(self.n, o.n, "mixed conductors");
        Cyclotomic::reduce(self.n, self.as_poly() * o.as_poly())
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { n: self.n, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Field for Cyclotomic {
    fn zero_like(&self) -> Self {
        Cyclotomic::from_rational(self.n, Rational::zero())
    }
    fn one_like(&self) -> Self {
        Cyclotomic::from_rational(self.n, Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // extended Euclid: s*a + t*phi = g with g a nonzero constant
        let phi = (*cyclotomic_poly(self.n)).clone();
        let (mut r0, mut r1) = (phi, self.as_poly());
        let (mut s0, mut s1) = (UPoly::zero(), UPoly::constant(Rational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0 - q * s1.clone();
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let g = r0.coeff(0)?.inv()?;
        debug_assert_eq!(r0.degree(), Some(0));
        Some(Cyclotomic::reduce(self.n, s0.scale(&g)))
    }
    fn from_i64_like(&self, k: i64) -> Self {
        Cyclotomic::from_rational(self.n, Rational::from_int(k))
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        let ints = |n| -> Vec<i64> {
            cyclotomic_poly(n).coeffs().iter().map(|c| c.numer().try_into().unwrap()).collect()
        };
        assert_eq!(ints(1), vec![-1, 1]);
        assert_eq!(ints(4), vec![1, 0, 1]);
        assert_eq!(ints(6), vec![1, -1, 1]);
        assert_eq!(ints(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(840).degree(), Some(euler_phi(840) as usize));
    }

    #[test]
    fn zeta_order_and_inverse() {
        let z = Cyclotomic::zeta_pow(12, 1);
        assert!(z.pow(12).unwrap().is_one());
        assert!(!z.pow(6).unwrap().is_one());
        let a = z.clone() + z.from_i64_like(3);
        assert!((a.clone() * a.inv().unwrap()).is_one());
    }

    #[test]
    fn subfields() {
        let i = Cyclotomic::zeta_pow(12, 3);
        assert!(i.in_subfield(4));
        assert!(!i.in_subfield(3));
        let w = Cyclotomic::zeta_pow(12, 4);
        assert!(w.in_subfield(3));
        assert!(Cyclotomic::from_rational(12, Rational::new(1, 2)).in_subfield(1));
    }
}
