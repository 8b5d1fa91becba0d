use proptest::prelude::*;

use super::*;
use crate::exact_arith::{Cyclotomic, Gaussian, Rational, UPoly};
use crate::testutil::{nonzero_gaussian, rng};

fn point(seed: u64) -> SatakeParams<Gaussian> {
    let mut r = rng(seed);
    SatakeParams::new(nonzero_gaussian(&mut r), nonzero_gaussian(&mut r), nonzero_gaussian(&mut r)).unwrap()
}

fn primes() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn spin_identity(seed in any::<u64>(), p in primes()) {
        let s = point(seed);
        let h = satake_to_hecke(&s, p);
        let f = hecke_poly(&h);
        prop_assert_eq!(&f, &spin_factor(&s));
        prop_assert!(f.satisfies_spin_shape(&h.eps));
        prop_assert_eq!(f.coeffs()[1].clone(), -h.a1.clone());
    }

    #[test]
    fn lambda_relations(seed in any::<u64>(), p in primes()) {
        let s = point(seed);
        let h = satake_to_hecke(&s, p);
        let c = s.c();
        let l2 = lambda_p2(&h, &c);
        prop_assert!(eigenvalue_relation_holds(&h, &l2));
        let pinv = Gaussian::from_ints(p as i64, 0).inv().unwrap();
        let lhs = h.a1.clone() * h.a1.clone() - l2 - h.eps.clone() * pinv;
        prop_assert_eq!(lhs, h.eps.clone() * (c + Gaussian::from_ints(1, 0)));
    }

    #[test]
    fn standard_and_wedge(seed in any::<u64>()) {
        let s = point(seed);
        let std5 = std5_factor(&s);
        let one = Gaussian::from_ints(1, 0);
        prop_assert!(std5.is_antipalindromic());
        prop_assert!(std5.poly().eval(&one).is_zero());
        prop_assert_eq!(std5.coeffs()[1].clone(), -s.c());
        let eps = s.eps();
        let w = wedge2_params(&s);
        let lhs = UPoly::from_reciprocal_roots(&w, &eps);
        prop_assert_eq!(lhs, UPoly::one_minus(&eps) * std5.poly().rescale_var(&eps));
        let einv = eps.inv().unwrap();
        let normalized: Vec<Gaussian> = w.iter().map(|x| x.clone() * einv.clone()).collect();
        let (q, r) = UPoly::from_reciprocal_roots(&normalized, &one).divrem(&UPoly::one_minus(&one)).unwrap();
        prop_assert!(r.is_zero());
        prop_assert_eq!(q, std5.poly());
        let pinned = SatakeParams::new(s.alpha0.clone() + one.clone(), s.alpha1.clone(), s.alpha2.clone());
        if let Ok(t) = pinned {
            prop_assert_eq!(std5_factor(&t), std5);
        }
    }

    #[test]
    fn root_of_unity_points_are_integral(k in (0i64..12, 0i64..12, 0i64..12), p in primes(), eis in any::<bool>()) {
        let (ring, step) = if eis { (LatticeRing::Eisenstein, 2) } else { (LatticeRing::Gaussian, 3) };
        let z = |e: i64| Cyclotomic::zeta_pow(12, e * step);
        let s = SatakeParams::new(z(k.0), z(k.1), z(k.2)).unwrap();
        let h = satake_to_hecke(&s, p);
        prop_assert!(check_int(&h, &s.c(), ring).unwrap());
    }

    #[test]
    fn y_sets(c in (0i64..40, 1i64..4), extra in 0i64..10) {
        for ring in [LatticeRing::Z, LatticeRing::Gaussian, LatticeRing::Eisenstein] {
            let c0 = Rational::new(c.0, c.1);
            let c1 = &c0 + &Rational::from_int(extra);
            let y = enumerate_y(&c0, ring).unwrap();
            let y1 = enumerate_y(&c1, ring).unwrap();
            prop_assert!(y.is_subset(&y1));
            for e in &y {
                prop_assert!(y.contains(&e.conj()));
                for u in ring.units() {
                    prop_assert!(y.contains(&e.mul(&u)));
                }
                for z in e.embeddings() {
                    prop_assert!(z.norm_sqr() <= c0.to_f64() + 1e-9);
                }
            }
            // every lattice point of small norm is found
            for x in -7i64..=7 {
                for v in -7i64..=7 {
                    let e = LatticeElem::new(ring, x, v);
                    prop_assert_eq!(y.contains(&e), Rational::from_int(e.norm()) <= c0);
                }
            }
        }
    }
}

#[test]
fn rou_cardinalities_and_unit_circle() {
    for a in 1u64..=7 {
        let n: u64 = (1..a).fold(1, num_integer::lcm);
        let roots = (0..n).filter(|k| n / num_integer::gcd(*k, n) < a).count() as u64;
        let expect = (roots * (roots + 1) * (roots + 2) * (roots + 3) / 24) as usize;
        let all = rou_charpolys(a, false).unwrap();
        assert_eq!(all.len(), expect, "A = {a}");
        for f in &all {
            let c = f.factor.coeffs();
            // unimodular roots: c_{4-k} = c_4 * conj(c_k) under every embedding
            for k in 1..f.conductor.max(2) {
                if num_integer::gcd(k, f.conductor) != 1 {
                    continue;
                }
                let e: Vec<_> = c.iter().map(|x| x.embed(k)).collect();
                assert!((e[4].norm() - 1.0).abs() < 1e-9);
                for j in 0..5 {
                    assert!((e[4 - j] - e[4] * e[j].conj()).norm() < 1e-9);
                }
            }
        }
    }
}
