use proptest::prelude::*;

use super::*;
use crate::exact_arith::{Field, Gaussian, Mat};
use crate::gsp4::{oddness_normalize, similitude_of, GSpElement};
use crate::testutil::{random_gl2, rng, small_gaussian};

fn gaussian_gl2(seed: u64) -> Mat<Gaussian> {
    let mut r = rng(seed);
    loop {
        let v: Vec<Gaussian> = (0..4).map(|_| small_gaussian(&mut r)).collect();
        let m = Mat::from_fn(2, 2, |i, j| v[2 * i + j].clone());
        if !m.det().is_zero() {
            return m;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn sym3_is_a_homomorphism(a in any::<u64>(), b in any::<u64>()) {
        let (g, h) = (gaussian_gl2(a), gaussian_gl2(b));
        let lhs = sym3_lift(&(&g * &h)).unwrap();
        prop_assert_eq!(lhs, &sym3_lift(&g).unwrap() * &sym3_lift(&h).unwrap());
        let d = g.det();
        prop_assert_eq!(sym3_lift(&g).unwrap().det(), d.pow(6).unwrap());
    }

    #[test]
    fn sym3_similitude_is_det_cubed(a in any::<u64>()) {
        let g = gaussian_gl2(a);
        let e = sym3_gsp4(&g).unwrap();
        prop_assert_eq!(e.nu().clone(), g.det().pow(3).unwrap());
        let h = gaussian_gl2(a.wrapping_add(1));
        prop_assert_eq!(sym3_gsp4(&(&g * &h)).unwrap(), sym3_gsp4(&g).unwrap().mul(&sym3_gsp4(&h).unwrap()));
    }

    #[test]
    fn endoscopic_images(a in any::<u64>()) {
        let mut r = rng(a);
        let s = crate::exact_arith::Rational::zero();
        let x = random_gl2(&mut r, &s);
        let y = random_gl2(&mut r, &s);
        let fix = x.det() * y.det().inv().unwrap();
        let y = &y * &Mat::diag(&[fix, s.one_like()]);
        let e = endoscopic_embed(&x, &y).unwrap();
        prop_assert!(crate::gsp4::is_in_levi(&e, crate::gsp4::Levi::Hen));
        let z = random_gl2(&mut r, &s);
        prop_assume!(z.det() != x.det());
        prop_assert!(endoscopic_embed(&x, &z).is_err());
    }
}

#[test]
fn closure_elements_are_similitudes() {
    let gens = martin_generators();
    let a: Vec<_> = gens[..5].iter().map(|g| g.mat.clone()).collect();
    let h = group_closure(&a, DEFAULT_CLOSURE_CAP).unwrap();
    let one = Gaussian::from_ints(1, 0);
    let minus = -one.clone();
    let id = Mat::identity(4, &one);
    for m in h.elements() {
        let nu = similitude_of(m).unwrap();
        assert!(nu == one || nu == minus);
        if m * m == id && nu == minus {
            let g = GSpElement::new(m.clone()).unwrap();
            let p = oddness_normalize(&g).unwrap();
            assert_eq!(g.conj_by(&p).mat(), &Mat::diag(&[1, -1, -1, 1].map(|v| Gaussian::from_ints(v, 0))));
        }
    }
    // the full group preserves the alternating form pairing (e1, e2) and (e3, e4)
    let x0 = Mat::from_i64(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]], &one);
    let full = group_closure(&gens.iter().map(|g| g.mat.clone()).collect::<Vec<_>>(), DEFAULT_CLOSURE_CAP).unwrap();
    for m in full.elements() {
        let f = &(&m.transpose() * &x0) * m;
        let c = f.get(0, 1).clone();
        assert_eq!(f, x0.scale(&c));
        assert!(c.pow(4).unwrap().is_one());
    }
    assert!(full.scalars().iter().all(|c| c.pow(4).unwrap().is_one()));
}

#[test]
fn closure_is_thread_independent() {
    let gens: Vec<_> = martin_generators().into_iter().map(|g| g.mat).collect();
    let run = |n: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
        pool.install(|| group_closure(&gens, DEFAULT_CLOSURE_CAP).unwrap().elements().to_vec())
    };
    let one = run(1);
    assert_eq!(one, run(2));
    assert_eq!(one, run(8));
}
