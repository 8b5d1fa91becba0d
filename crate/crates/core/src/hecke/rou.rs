use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::EulerFactor;
use crate::error::{Error, Result};
use crate::exact_arith::{cyclotomic_poly, Cyclotomic, Rational};

/// Largest order bound accepted by [`rou_charpolys`].
pub const MAX_ROU_BOUND: u64 = 9;

/// A degree-4 factor together with the exponents `k_i` of its roots `zeta_N^k_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RouFactor {
    pub conductor: u64,
    pub exponents: [u64; 4],
    pub factor: EulerFactor<Cyclotomic>,
}

impl RouFactor {
    /// Some pairing of the roots has `r1 r2 = r3 r4`.
    pub fn is_symplectic(&self) -> bool {
        symplectic_pairing(&self.exponents, self.conductor).is_some()
    }

    /// The common pair product `nu` as an exponent of `zeta_N`, if any.
    pub fn similitude_exponent(&self) -> Option<u64> {
        symplectic_pairing(&self.exponents, self.conductor)
    }
}

fn symplectic_pairing(k: &[u64; 4], n: u64) -> Option<u64> {
    [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)]
        .into_iter()
        .find(|&(a, b, c, d)| (k[a] + k[b]) % n == (k[c] + k[d]) % n)
        .map(|(a, b, _, _)| (k[a] + k[b]) % n)
}

fn lcm_below(a: u64) -> u64 {
    (1..a).fold(1, |acc, d| acc.lcm(&d))
}

/// Power-basis coordinates of `zeta_n^m` for `0 <= m < n`.
fn power_table(n: u64) -> Vec<Vec<i64>> {
    let phi: Vec<i64> = cyclotomic_poly(n).coeffs().iter().map(|c| c.numer().to_i64().unwrap()).collect();
    let d = phi.len() - 1;
    let mut cur = vec![0i64; d];
    cur[0] = 1;
    let mut out = Vec::with_capacity(n as usize);
    for _ in 0..n {
        out.push(cur.clone());
        // multiply by zeta and reduce with the monic relation
        let top = cur[d - 1];
        let mut next = vec![0i64; d];
        next[1..d].copy_from_slice(&cur[..d - 1]);
        for (j, c) in next.iter_mut().enumerate() {
            *c -= top * phi[j];
        }
        cur = next;
    }
    out
}

/// Every `prod (1 - r_i T)` over multisets of four roots of unity of order
/// below `a`, in the field `Q(zeta_N)` with `N = lcm(1, ..., a - 1)`.
/// With `admissible_only`, keeps the multisets admitting a pairing with
/// `r1 r2 = r3 r4`, which forces `c3 = nu c1` and `c4 = nu^2`.
pub fn rou_charpolys(a: u64, admissible_only: bool) -> Result<Vec<RouFactor>> {
    if a == 0 || a > MAX_ROU_BOUND {
        return Err(Error::OutOfRange(format!("order bound {a} outside 1..={MAX_ROU_BOUND}")));
    }
    if a == 1 {
        return Ok(Vec::new());
    }
    let n = lcm_below(a);
    let roots: Vec<u64> = (0..n).filter(|k| n / k.gcd(&n) < a).collect();
    let mut combos = Vec::new();
    let r = roots.len();
    for i in 0..r {
        for j in i..r {
            for k in j..r {
                for l in k..r {
                    combos.push([roots[i], roots[j], roots[k], roots[l]]);
                }
            }
        }
    }
    if admissible_only {
        combos.retain(|e| symplectic_pairing(e, n).is_some());
    }
    let table = power_table(n);
    let d = table[0].len();
    let to_field = |terms: &[u64], sign: i64| -> Cyclotomic {
        let mut acc = vec![0i64; d];
        for &m in terms {
            for (x, t) in acc.iter_mut().zip(&table[m as usize]) {
                *x += sign * t;
            }
        }
        Cyclotomic::from_coeffs(n, acc.into_iter().map(Rational::from_int).collect())
    };
    Ok(combos
        .into_par_iter()
        .map(|e| {
            let mut sums: [Vec<u64>; 5] = Default::default();
            sums[0].push(0);
            for mask in 1u32..16 {
                let s = (0..4).filter(|b| mask >> b & 1 == 1).map(|b| e[b]).sum::<u64>() % n;
                sums[mask.count_ones() as usize].push(s);
            }
            let coeffs = (0..5).map(|k| to_field(&sums[k], if k % 2 == 0 { 1 } else { -1 })).collect();
            RouFactor { conductor: n, exponents: e, factor: EulerFactor::new(coeffs).expect("constant term 1") }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{Field, UPoly};

    #[test]
    fn small_bounds() {
        assert!(rou_charpolys(1, false).unwrap().is_empty());
        let two = rou_charpolys(2, false).unwrap();
        assert_eq!(two.len(), 1);
        let one = Cyclotomic::from_rational(1, Rational::one());
        assert_eq!(two[0].factor.poly(), UPoly::from_reciprocal_roots(&[one.clone(), one.clone(), one.clone(), one.clone()], &one));
        let three = rou_charpolys(3, false).unwrap();
        assert_eq!(three.len(), 5);
        let target: Vec<Rational> = [1, 0, -2, 0, 1].iter().map(|&v| Rational::from_int(v)).collect();
        assert!(three.iter().any(|f| f.factor.coeffs().iter().map(|c| c.as_rational().unwrap()).collect::<Vec<_>>() == target));
        assert!(rou_charpolys(10, false).is_err());
    }

    #[test]
    fn counts_match_multisets() {
        for (a, roots) in [(4u64, 4u64), (5, 6), (6, 10), (7, 12)] {
            let expect = (roots * (roots + 1) * (roots + 2) * (roots + 3) / 24) as usize;
            assert_eq!(rou_charpolys(a, false).unwrap().len(), expect);
        }
    }

    #[test]
    fn factors_match_direct_product() {
        for f in rou_charpolys(5, false).unwrap() {
            let z: Vec<Cyclotomic> = f.exponents.iter().map(|&k| Cyclotomic::zeta_pow(f.conductor, k as i64)).collect();
            assert_eq!(f.factor.poly(), UPoly::from_reciprocal_roots(&z, &z[0]));
        }
    }

    #[test]
    fn admissible_shape() {
        let all = rou_charpolys(5, false).unwrap();
        let adm = rou_charpolys(5, true).unwrap();
        assert!(adm.len() < all.len());
        for f in &adm {
            let nu = Cyclotomic::zeta_pow(f.conductor, f.similitude_exponent().unwrap() as i64);
            assert!(f.factor.satisfies_spin_shape(&nu));
        }
        assert_eq!(all.iter().filter(|f| f.is_symplectic()).count(), adm.len());
        assert!(adm.iter().all(|f| f.factor.coeffs()[0].is_one()));
    }

    #[test]
    fn largest_bound() {
        let all = rou_charpolys(MAX_ROU_BOUND, false).unwrap();
        assert_eq!(all.len(), 12650);
        assert!(all.iter().all(|f| f.conductor == 840));
    }
}
