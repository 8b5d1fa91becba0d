//! Random elements shared by the property suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact_arith::{Field, Gaussian, Mat, Rational};
use crate::gsp4::{j_matrix, GSpElement};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A word of length `len` in unipotent, Levi and Weyl-type generators of GSp4.
pub fn random_gsp4<F: Field>(r: &mut impl Rng, sample: &F, len: usize) -> GSpElement<F> {
    let mut g = GSpElement::identity(sample);
    let int = |r: &mut dyn rand::RngCore| sample.from_i64_like(r.gen_range(-3..=3));
    for _ in 0..len {
        let m = match r.gen_range(0..5) {
            0 => {
                let (a, b, c) = (int(r), int(r), int(r));
                let mut m = Mat::identity(4, sample);
                m.set(0, 2, a);
                m.set(0, 3, b.clone());
                m.set(1, 2, b);
                m.set(1, 3, c);
                m
            }
            1 => {
                let (a, b, c) = (int(r), int(r), int(r));
                let mut m = Mat::identity(4, sample);
                m.set(2, 0, a);
                m.set(2, 1, b.clone());
                m.set(3, 0, b);
                m.set(3, 1, c);
                m
            }
            2 => {
                // diag(A, nu A^-t) with A = [[1, t], [0, 1]] and nu = 2
                let t = int(r);
                let two = sample.from_i64_like(2);
                let mut m = Mat::diag(&[sample.one_like(), sample.one_like(), two.clone(), two.clone()]);
                m.set(0, 1, t.clone());
                m.set(3, 2, -(two * t));
                m
            }
            3 => j_matrix(sample),
            _ => crate::gsp4::WeylGen::S1.matrix(sample),
        };
        g = g.mul(&GSpElement::new(m).expect("generator is a similitude"));
    }
    g
}

pub fn small_rational(r: &mut impl Rng) -> Rational {
    Rational::new(r.gen_range(-9..=9), r.gen_range(1..=4))
}

pub fn small_gaussian(r: &mut impl Rng) -> Gaussian {
    Gaussian::new(small_rational(r), small_rational(r))
}

pub fn nonzero_gaussian(r: &mut impl Rng) -> Gaussian {
    loop {
        let g = small_gaussian(r);
        if !g.is_zero() {
            return g;
        }
    }
}

pub fn random_gl2<F: Field>(r: &mut impl Rng, sample: &F) -> Mat<F> {
    loop {
        let v: Vec<F> = (0..4).map(|_| sample.from_i64_like(r.gen_range(-6..=6))).collect();
        let m = Mat::from_fn(2, 2, |i, j| v[2 * i + j].clone());
        if !m.det().is_zero() {
            return m;
        }
    }
}
