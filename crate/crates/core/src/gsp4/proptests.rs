use proptest::prelude::*;

use super::*;
use crate::exact_arith::{Fp, Gaussian, Mat, Rational, UPoly};
use crate::hecke::{endoscopic_spin_factor, EulerFactor};
use crate::testutil::{nonzero_gaussian, random_gl2, random_gsp4, rng, small_rational};

fn odd_target<F: Field>(s: &F) -> Mat<F> {
    Mat::diag(&[1, -1, -1, 1].map(|v| s.from_i64_like(v)))
}

fn check_oddness<F: Field>(seed: u64, sample: &F, t: (F, F, F)) {
    let mut r = rng(seed);
    let tor = GSpElement::new(torus(&t.0, &t.1, &t.2).unwrap()).unwrap();
    let x = random_gsp4(&mut r, sample, 4).mul(&tor).mul(&random_gsp4(&mut r, sample, 4));
    let d = GSpElement::new(Mat::diag(&[1, 1, -1, -1].map(|v| sample.from_i64_like(v)))).unwrap();
    let g = d.conj_by(&x);
    let p = oddness_normalize(&g).unwrap();
    assert!(similitude_of(p.mat()).is_ok());
    assert_eq!(g.conj_by(&p).mat(), &odd_target(sample));
}

fn charpoly2<F: Field>(m: &Mat<F>) -> UPoly<F> {
    UPoly::new(vec![m.sample().one_like(), -m.trace(), m.det()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn oddness_over_f7(seed in any::<u64>(), t in (1i64..7, 1i64..7, 1i64..7)) {
        check_oddness(seed, &Fp::new(7, 0), (Fp::new(7, t.0), Fp::new(7, t.1), Fp::new(7, t.2)));
    }

    #[test]
    fn oddness_over_gaussian(seed in any::<u64>()) {
        let mut r = rng(!seed);
        let t = (nonzero_gaussian(&mut r), nonzero_gaussian(&mut r), nonzero_gaussian(&mut r));
        check_oddness(seed, &Gaussian::from_ints(0, 0), t);
    }

    #[test]
    fn similitude_is_multiplicative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = Rational::zero();
        let g = random_gsp4(&mut r, &s, 5);
        let h = random_gsp4(&mut r, &s, 5);
        let gh = g.mul(&h);
        prop_assert_eq!(gh.nu().clone(), g.nu().clone() * h.nu().clone());
        prop_assert_eq!(similitude_of(gh.mat()).unwrap(), gh.nu().clone());
        let cp = char_poly(g.mat());
        // det(1 - gT) is reciprocal with respect to nu
        let c = cp.padded(5, &s);
        prop_assert_eq!(c[3].clone(), g.nu().clone() * c[1].clone());
        prop_assert_eq!(c[4].clone(), g.nu().clone() * g.nu().clone());
        prop_assert_eq!(g.inverse().mul(&g), GSpElement::identity(&s));
    }

    #[test]
    fn lambda_is_a_homomorphism(seed in any::<u64>(), k2 in -2i64..3, d in 0i64..4) {
        let mut r = rng(seed);
        let s = Rational::zero();
        let (g, h) = (random_gl2(&mut r, &s), random_gl2(&mut r, &s));
        let k1 = k2 + d;
        let lhs = lambda_rep(k1, k2, &(&g * &h)).unwrap();
        prop_assert_eq!(lhs, &lambda_rep(k1, k2, &g).unwrap() * &lambda_rep(k1, k2, &h).unwrap());
        prop_assert_eq!(lambda_rep(k1, k2, &Mat::identity(2, &s)).unwrap(), Mat::identity((d + 1) as usize, &s));
    }

    #[test]
    fn moebius_cocycle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = Gaussian::from_ints(0, 0);
        let g1 = random_gsp4(&mut r, &s, 4);
        let g2 = random_gsp4(&mut r, &s, 4);
        let re = |r: &mut _| Gaussian::real(small_rational(r));
        let (x1, x2, x3) = (re(&mut r), re(&mut r), re(&mut r));
        let y = |a: i64, b: i64| Gaussian::from_ints(a, b);
        let z = Mat::from_rows(vec![
            vec![x1 + y(0, 3), x2.clone() + y(0, 1)],
            vec![x2 + y(0, 1), x3 + y(0, 2)],
        ]);
        let z = SiegelPoint::new(z).unwrap();
        let (w2, j2) = moebius(&g2, &z).unwrap();
        let (w12, j1) = moebius(&g1, &w2).unwrap();
        let (w, j) = moebius(&g1.mul(&g2), &z).unwrap();
        prop_assert_eq!(w.z(), w12.z());
        prop_assert_eq!(j, &j1 * &j2);
    }

    #[test]
    fn endoscopic_pairs(seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = Fp::new(7, 0);
        let a = random_gl2(&mut r, &s);
        let b0 = random_gl2(&mut r, &s);
        let fix = a.det() * b0.det().inv().unwrap();
        let b = &b0 * &Mat::diag(&[fix, s.one_like()]);
        let e = endoscopic_embed(&a, &b).unwrap();
        prop_assert!(is_in_levi(&e, Levi::Hen));
        prop_assert_eq!(*e.nu(), a.det());
        let cp = char_poly(e.mat());
        prop_assert_eq!(cp.clone(), charpoly2(&a) * charpoly2(&b));
        let fa = EulerFactor::new(charpoly2(&a).padded(3, &s)).unwrap();
        let fb = EulerFactor::new(charpoly2(&b).padded(3, &s)).unwrap();
        let spin = endoscopic_spin_factor(&fa, &fb).unwrap();
        prop_assert_eq!(spin.poly(), cp);
        prop_assert!(spin.satisfies_spin_shape(&a.det()));
    }

    #[test]
    fn weyl_action_matches_conjugation(seed in any::<u64>(), k in 0usize..8) {
        let mut r = rng(seed);
        let s = Rational::zero();
        let nz = |r: &mut _| loop { let q = small_rational(r); if !q.is_zero() { break q; } };
        let t = (nz(&mut r), nz(&mut r), nz(&mut r));
        let w = &weyl_elements()[k];
        let m = w.matrix(&s);
        let conj = &(&m * &torus(&t.0, &t.1, &t.2).unwrap()) * &m.inverse().unwrap();
        let u = weyl_act(w, t).unwrap();
        prop_assert_eq!(conj, torus(&u.0, &u.1, &u.2).unwrap());
    }
}
