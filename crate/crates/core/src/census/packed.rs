//! 4x4 matrices over F_l stored as `[u8; 16]` and packed into a `u64` key.

use crate::error::{Error, Result};
use crate::exact_arith::{is_prime, Field, Fp, Mat};

pub type Elem = [u8; 16];

/// Largest field size whose matrices fit in one machine word.
pub const MAX_ELL: u8 = 13;

/// Row-major key with `ceil(log2 l)` bits per entry.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Packer {
    ell: u8,
    bits: u32,
}

impl Packer {
    pub fn new(ell: u64) -> Result<Self> {
        if ell == 2 || !is_prime(ell) {
            return Err(Error::InvalidField(format!("{ell} is not an odd prime")));
        }
        if ell > MAX_ELL as u64 {
            return Err(Error::OutOfRange(format!("packed keys support l <= {MAX_ELL}, got {ell}")));
        }
        let bits = 64 - (ell - 1).leading_zeros();
        Ok(Packer { ell: ell as u8, bits })
    }

    pub fn ell(&self) -> u8 {
        self.ell
    }

    pub fn encode(&self, m: &Elem) -> u64 {
        m.iter().fold(0u64, |acc, &x| (acc << self.bits) | x as u64)
    }

    pub fn decode(&self, mut key: u64) -> Elem {
        let mask = (1u64 << self.bits) - 1;
        let mut m = [0u8; 16];
        for k in (0..16).rev() {
            m[k] = (key & mask) as u8;
            key >>= self.bits;
        }
        m
    }
}

pub fn identity() -> Elem {
    let mut m = [0u8; 16];
    for i in 0..4 {
        m[5 * i] = 1;
    }
    m
}

pub fn from_rows(rows: [[i64; 4]; 4], ell: u8) -> Elem {
    let mut m = [0u8; 16];
    for i in 0..4 {
        for j in 0..4 {
            m[4 * i + j] = rows[i][j].rem_euclid(ell as i64) as u8;
        }
    }
    m
}

pub fn diag(d: [i64; 4], ell: u8) -> Elem {
    let mut rows = [[0i64; 4]; 4];
    for i in 0..4 {
        rows[i][i] = d[i];
    }
    from_rows(rows, ell)
}

pub fn mul(a: &Elem, b: &Elem, ell: u8) -> Elem {
    let mut out = [0u8; 16];
    let l = ell as u32;
    for i in 0..4 {
        for j in 0..4 {
            let mut s = 0u32;
            for k in 0..4 {
                s += a[4 * i + k] as u32 * b[4 * k + j] as u32;
            }
            out[4 * i + j] = (s % l) as u8;
        }
    }
    out
}

fn col(m: &Elem, j: usize) -> [u32; 4] {
    [m[j] as u32, m[4 + j] as u32, m[8 + j] as u32, m[12 + j] as u32]
}

/// `x^t J y` modulo l.
fn pair(x: &[u32; 4], y: &[u32; 4], l: u32) -> u32 {
    (x[0] * y[2] + x[1] * y[3] + 2 * l * l - x[2] * y[0] - x[3] * y[1]) % l
}

/// Similitude factor, or `None` if `m` is not in GSp4(F_l).
pub fn similitude(m: &Elem, ell: u8) -> Option<u8> {
    let l = ell as u32;
    let c: [[u32; 4]; 4] = [col(m, 0), col(m, 1), col(m, 2), col(m, 3)];
    let nu = pair(&c[0], &c[2], l);
    let ok = nu != 0
        && pair(&c[1], &c[3], l) == nu
        && pair(&c[0], &c[1], l) == 0
        && pair(&c[0], &c[3], l) == 0
        && pair(&c[2], &c[1], l) == 0
        && pair(&c[2], &c[3], l) == 0;
    ok.then_some(nu as u8)
}

fn det3(m: &Elem, r: [usize; 3]) -> i64 {
    let g = |i: usize, j: usize| m[4 * r[i] + r[j]] as i64;
    g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
        + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0))
}

fn det4(m: &Elem) -> i64 {
    let g = |i: usize, j: usize| m[4 * i + j] as i64;
    let mut d = 0;
    for c in 0..4 {
        let cols: Vec<usize> = (0..4).filter(|&x| x != c).collect();
        let minor = {
            let h = |i: usize, j: usize| g(i + 1, cols[j]);
            h(0, 0) * (h(1, 1) * h(2, 2) - h(1, 2) * h(2, 1)) - h(0, 1) * (h(1, 0) * h(2, 2) - h(1, 2) * h(2, 0))
                + h(0, 2) * (h(1, 0) * h(2, 1) - h(1, 1) * h(2, 0))
        };
        d += if c % 2 == 0 { g(0, c) * minor } else { -g(0, c) * minor };
    }
    d
}

/// Coefficients `(c1, c2, c3, c4)` of `det(1 - gT) = 1 + c1 T + c2 T^2 + c3 T^3 + c4 T^4`.
pub fn charpoly(m: &Elem, ell: u8) -> [u8; 4] {
    let l = ell as i64;
    let g = |i: usize, j: usize| m[4 * i + j] as i64;
    let e1: i64 = (0..4).map(|i| g(i, i)).sum();
    let mut e2 = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            e2 += g(i, i) * g(j, j) - g(i, j) * g(j, i);
        }
    }
    let e3 = det3(m, [1, 2, 3]) + det3(m, [0, 2, 3]) + det3(m, [0, 1, 3]) + det3(m, [0, 1, 2]);
    let e4 = det4(m);
    let r = |x: i64| x.rem_euclid(l) as u8;
    [r(-e1), r(e2), r(-e3), r(e4)]
}

/// Inverse of a similitude: `g^-1 = nu^-1 J^-1 g^t J`.
pub fn inverse(m: &Elem, ell: u8) -> Option<Elem> {
    let nu = similitude(m, ell)?;
    let nu_inv = Fp::new(ell as u64, nu as i64).inv()?.value() as u32;
    let l = ell as u32;
    // (J^-1 g^t J)_{ij} = s_i s_j g_{j', i'} with i' = i xor 2 and sign s_i = +1 for i < 2
    let mut out = [0u8; 16];
    for i in 0..4 {
        for j in 0..4 {
            let v = m[4 * (j ^ 2) + (i ^ 2)] as u32;
            let neg = (i < 2) != (j < 2);
            let v = if neg { (l - v) % l } else { v };
            out[4 * i + j] = (v * nu_inv % l) as u8;
        }
    }
    Some(out)
}

pub fn to_mat(m: &Elem, ell: u8) -> Mat<Fp> {
    Mat::from_fn(4, 4, |i, j| Fp::new(ell as u64, m[4 * i + j] as i64))
}

pub fn from_mat(m: &Mat<Fp>) -> Elem {
    let mut e = [0u8; 16];
    for (k, x) in m.entries().iter().enumerate() {
        e[k] = x.value() as u8;
    }
    e
}
