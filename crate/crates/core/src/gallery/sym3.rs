use super::Check;
use crate::error::{Error, Result};
use crate::exact_arith::{Field, Mat, Rational};
use crate::gsp4::{j_matrix, oddness_normalize, similitude_of, GSpElement};

/// Action of a 2x2 matrix on binary cubics in the basis
/// `e1^3, e1^2 e2, e1 e2^2, e2^3`; column `i` is the image of `e1^(3-i) e2^i`.
pub fn sym3_lift<F: Field>(g: &Mat<F>) -> Result<Mat<F>> {
    if g.nrows() != 2 || g.ncols() != 2 {
        return Err(Error::OutOfRange("expected a 2x2 matrix".into()));
    }
    if g.det().is_zero() {
        return Err(Error::Singular);
    }
    let s = g.sample().clone();
    // g e1 = a e1 + c e2, g e2 = b e1 + d e2
    let u = [g.get(0, 0).clone(), g.get(1, 0).clone()];
    let v = [g.get(0, 1).clone(), g.get(1, 1).clone()];
    let lin = |w: &[F; 2]| vec![w[0].clone(), w[1].clone()];
    let mul = |p: &[F], q: &[F]| {
        let mut out = vec![s.zero_like(); p.len() + q.len() - 1];
        for (i, x) in p.iter().enumerate() {
            for (j, y) in q.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        out
    };
    let cols: Vec<Vec<F>> = (0..4)
        .map(|i| {
            let mut acc = vec![s.one_like()];
            for _ in 0..3 - i {
                acc = mul(&acc, &lin(&u));
            }
            for _ in 0..i {
                acc = mul(&acc, &lin(&v));
            }
            acc
        })
        .collect();
    Ok(Mat::from_cols(&cols))
}

/// The antidiagonal matrix of ones, the lift of the swap `[[0,1],[1,0]]`.
pub fn j_prime<F: Field>(sample: &F) -> Mat<F> {
    Mat::from_fn(4, 4, |i, j| if i + j == 3 { sample.one_like() } else { sample.zero_like() })
}

/// The conjugator `1/2 [[1,-1,0,0],[0,0,1,1],[0,0,-1,1],[1,1,0,0]]`.
pub fn conjugator_p() -> Mat<Rational> {
    let half = Rational::new(1, 2);
    Mat::from_i64(&[&[1, -1, 0, 0], &[0, 0, 1, 1], &[0, 0, -1, 1], &[1, 1, 0, 0]], &half).scale(&half)
}

/// The alternating form preserved by cubic lifts up to `det^3`:
/// antidiagonal `(1, -1/3, 1/3, -1)`.
pub fn sym3_form<F: Field>(sample: &F) -> Mat<F> {
    let third = sample.from_i64_like(3).inv().expect("characteristic is not 3");
    let mut m = Mat::zeros(4, 4, sample);
    m.set(0, 3, sample.one_like());
    m.set(1, 2, -third.clone());
    m.set(2, 1, third);
    m.set(3, 0, -sample.one_like());
    m
}

/// Columns `e1, e2, e4, -3 e3`: a basis change taking [`sym3_form`] to `J`.
pub fn sym3_symplectic_basis<F: Field>(sample: &F) -> Mat<F> {
    let e = |i: usize, c: i64| (0..4).map(|k| if k == i { sample.from_i64_like(c) } else { sample.zero_like() }).collect();
    Mat::from_cols(&[e(0, 1), e(1, 1), e(3, 1), e(2, -3)])
}

/// The cubic lift written in a symplectic basis for `J`; its similitude is `det(g)^3`.
pub fn sym3_gsp4<F: Field>(g: &Mat<F>) -> Result<GSpElement<F>> {
    let c = sym3_symplectic_basis(g.sample());
    let ci = c.inverse().ok_or(Error::Singular)?;
    GSpElement::new(&(&ci * &sym3_lift(g)?) * &c)
}

/// Outcomes of the conjugator identities and the cubic-lift similitude.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sym3Report {
    pub checks: Vec<Check>,
    /// Similitude of `P` with respect to `J`, if `P` is a similitude.
    pub p_similitude: Option<Rational>,
    /// Similitude of `J'` with respect to `J`.
    pub jprime_similitude: Option<Rational>,
    pub samples: usize,
}

impl Sym3Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn sample_matrices(count: usize) -> Vec<Mat<Rational>> {
    // a fixed linear congruential walk keeps the report reproducible
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) % 19) as i64 - 9
    };
    let mut out = Vec::new();
    while out.len() < count {
        let q = Rational::zero();
        let m = Mat::from_i64(&[&[next(), next()], &[next(), next()]], &q);
        if !m.det().is_zero() {
            out.push(m);
        }
    }
    out
}

/// Verifies the identities attached to the conjugator `P` and the lift of the swap.
pub fn sym3_identities_check(samples: usize) -> Sym3Report {
    let q = Rational::zero();
    let p = conjugator_p();
    let pi = p.inverse().expect("P is invertible");
    let jp = j_prime(&q);
    let j = j_matrix(&q);
    let target = Mat::diag(&[1, -1, -1, 1].map(Rational::from_int));
    let half_j = j.scale(&Rational::new(1, 2));
    let swap = Mat::from_i64(&[&[0, 1], &[1, 0]], &q);

    let jp_conj = GSpElement::new(jp.clone())
        .and_then(|g| oddness_normalize(&g).map(|c| (g, c)))
        .map(|(g, c)| g.conj_by(&c).mat() == &target)
        .unwrap_or(false);

    let lifts = sample_matrices(samples);
    let lift_nu = lifts.iter().all(|g| {
        let d = g.det();
        sym3_gsp4(g).is_ok_and(|e| *e.nu() == d.clone() * d.clone() * d)
    });
    let form = sym3_form(&q);
    let lift_form = lifts.iter().all(|g| {
        let s = sym3_lift(g).unwrap();
        let d = g.det();
        &(&s.transpose() * &form) * &s == form.scale(&(d.clone() * d.clone() * d))
    });
    // the form obtained by pulling J back through P
    let transported = &(&pi.transpose() * &j) * &pi;
    let lift_p = lifts.iter().all(|g| {
        let s = sym3_lift(g).unwrap();
        let d = g.det();
        &(&s.transpose() * &transported) * &s == transported.scale(&(d.clone() * d.clone() * d))
    });

    let checks = vec![
        Check::new("sym3.p_inverse_is_transpose", pi == p.transpose()),
        Check::new("sym3.p_conjugates_jprime", &(&pi * &jp) * &p == target),
        Check::new("sym3.p_scales_j_by_half", &(&p.transpose() * &j) * &p == half_j),
        Check::new("sym3.jprime_conjugate_in_gsp4", jp_conj),
        Check::new("sym3.swap_lift_is_jprime", sym3_lift(&swap).is_ok_and(|m| m == jp)),
        Check::new("sym3.lift_preserves_cubic_form", lift_form),
        Check::new("sym3.lift_similitude_is_det_cubed", lift_nu),
        Check::new("sym3.lift_preserves_p_transported_form", lift_p),
    ];
    Sym3Report { checks, p_similitude: similitude_of(&p).ok(), jprime_similitude: similitude_of(&jp).ok(), samples }
}
