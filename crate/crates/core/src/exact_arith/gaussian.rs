use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{Field, Rational};
use crate::error::{Error, Result};

/// Gaussian rational `re + im*i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Gaussian::new(Rational::from_int(re), Rational::from_int(im))
    }

    pub fn real(re: Rational) -> Self {
        Gaussian::new(re, Rational::zero())
    }

    pub fn i() -> Self {
        Gaussian::from_ints(0, 1)
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Lossless `a/b+c/d*i` form used in serialized reports.
    pub fn exact_string(&self) -> String {
        let im = self.im.exact_string();
        if self.im.is_negative() {
            format!("{}{}*i", self.re.exact_string(), im)
        } else {
            format!("{}+{}*i", self.re.exact_string(), im)
        }
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}*i", self.im),
            (false, false) if self.im.is_negative() => write!(f, "{}{}*i", self.re, self.im),
            _ => write!(f, "{}+{}*i", self.re, self.im),
        }
    }
}

impl FromStr for Gaussian {
    type Err = Error;

    /// Accepts `a`, `b*i`, `a+b*i` and `a-b*i` with rational `a`, `b`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = s.strip_suffix("*i").or_else(|| s.strip_suffix('i')) else {
            return Ok(Gaussian::real(s.parse()?));
        };
        // split at the last sign that is not the leading one
        let cut = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re, im) = match cut {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            x => x.strip_prefix('+').unwrap_or(x),
        };
        Ok(Gaussian::new(re.parse()?, im.parse()?))
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, o: Gaussian) -> Gaussian {
        Gaussian::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, o: Gaussian) -> Gaussian {
        Gaussian::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, o: Gaussian) -> Gaussian {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        Gaussian::new(re, im)
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl From<Rational> for Gaussian {
    fn from(q: Rational) -> Self {
        Gaussian::real(q)
    }
}

impl Field for Gaussian {
    fn zero_like(&self) -> Self {
        Gaussian::from_ints(0, 0)
    }
    fn one_like(&self) -> Self {
        Gaussian::from_ints(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(Gaussian::new(&self.re * &n, -(&self.im * &n)))
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Gaussian::from_ints(n, 0)
    }
    fn characteristic(&self) -> u64 {
        0
    }
}
