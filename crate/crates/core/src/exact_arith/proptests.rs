use proptest::prelude::*;

use super::*;

fn axioms<F: Field>(a: &F, b: &F, c: &F) {
    let zero = a.zero_like();
    let one = a.one_like();
    assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
    assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
    assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
    assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
    assert_eq!(a.clone() + zero.clone(), a.clone());
    assert_eq!(a.clone() * one.clone(), a.clone());
    assert_eq!(a.clone() + (-a.clone()), zero.clone());
    assert_eq!(a.clone() - b.clone(), a.clone() + (-b.clone()));
    match a.inv() {
        Some(ai) => assert_eq!(ai * a.clone(), one),
        None => assert!(a.is_zero()),
    }
}

fn rat() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d))
}

fn gauss() -> impl Strategy<Value = Gaussian> {
    (rat(), rat()).prop_map(|(a, b)| Gaussian::new(a, b))
}

fn cyclo(n: u64) -> impl Strategy<Value = Cyclotomic> {
    proptest::collection::vec(-6i64..6, n as usize).prop_map(move |v| {
        Cyclotomic::from_coeffs(n, v.into_iter().map(Rational::from_int).collect())
    })
}

proptest! {
    #[test]
    fn rational_field(a in rat(), b in rat(), c in rat()) {
        axioms(&a, &b, &c);
        let s: Rational = a.exact_string().parse().unwrap();
        prop_assert_eq!(s, a);
    }

    #[test]
    fn gaussian_field(a in gauss(), b in gauss(), c in gauss()) {
        axioms(&a, &b, &c);
        prop_assert_eq!((a.clone() * b.clone()).norm(), &a.norm() * &b.norm());
        let s: Gaussian = a.exact_string().parse().unwrap();
        prop_assert_eq!(s, a);
    }

    #[test]
    fn prime_field(p in prop::sample::select(vec![3u64, 5, 7, 11, 13]), a in -100i64..100, b in -100i64..100, c in -100i64..100) {
        axioms(&Fp::new(p, a), &Fp::new(p, b), &Fp::new(p, c));
    }

    #[test]
    fn quadratic_extension(p in prop::sample::select(vec![3u64, 5, 7, 11]), v in proptest::collection::vec(-30i64..30, 6)) {
        let u = quadratic_nonresidue(p).unwrap();
        let z = |k: usize| QuadExt::new(u, v[k], v[k + 1]);
        let (a, b, c) = (z(0), z(2), z(4));
        axioms(&a, &b, &c);
        prop_assert_eq!(frobenius(a * b), frobenius(a) * frobenius(b));
        prop_assert_eq!(a * frobenius(a), QuadExt::new(u, a.norm().value() as i64, 0));
    }

    #[test]
    fn cyclotomic_field(a in cyclo(12), b in cyclo(12), c in cyclo(12)) {
        axioms(&a, &b, &c);
        for k in [5u64, 7, 11] {
            prop_assert_eq!((a.clone() * b.clone()).galois(k), a.galois(k) * b.galois(k));
        }
        let z = a.embed(1) * b.embed(1);
        prop_assert!((z - (a.clone() * b.clone()).embed(1)).norm() < 1e-6 * (1.0 + z.norm()));
    }

    #[test]
    fn poly_division(a in proptest::collection::vec(rat(), 0..7), b in proptest::collection::vec(rat(), 1..5)) {
        let pa = UPoly::new(a);
        let pb = UPoly::new(b);
        prop_assume!(!pb.is_zero());
        let (q, r) = pa.divrem(&pb).unwrap();
        prop_assert_eq!(q * pb.clone() + r.clone(), pa);
        prop_assert!(r.is_zero() || r.degree() < pb.degree());
    }

    #[test]
    fn poly_eval_is_ring_map(a in proptest::collection::vec(rat(), 0..5), b in proptest::collection::vec(rat(), 0..5), x in rat()) {
        let (pa, pb) = (UPoly::new(a), UPoly::new(b));
        prop_assert_eq!((pa.clone() * pb.clone()).eval(&x), &pa.eval(&x) * &pb.eval(&x));
        prop_assert_eq!(pa.rescale_var(&x).eval(&Rational::one()), pa.eval(&x));
    }

    #[test]
    fn determinant_and_inverse(v in proptest::collection::vec(-5i64..5, 32)) {
        let q = Rational::zero();
        let m = Mat::from_fn(4, 4, |i, j| Rational::from_int(v[4 * i + j]));
        let n = Mat::from_fn(4, 4, |i, j| Rational::from_int(v[16 + 4 * i + j]));
        prop_assert_eq!((&m * &n).det(), &m.det() * &n.det());
        prop_assert_eq!(m.transpose().det(), m.det());
        match m.inverse() {
            Some(mi) => prop_assert_eq!(&m * &mi, Mat::identity(4, &q)),
            None => prop_assert!(m.det().is_zero()),
        }
        for k in m.nullspace() {
            prop_assert!(m.mul_vec(&k).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(m.rank() + m.nullspace().len(), 4);
    }
}
