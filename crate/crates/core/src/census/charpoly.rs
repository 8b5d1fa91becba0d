//! Characteristic-polynomial histograms and the C(eta, M) property.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;

use super::group::GroupSet;
use super::packed;
use crate::error::{Error, Result};
use crate::exact_arith::Rational;

/// Counts of `(c1, c2, c3, c4, nu)` over a finite group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharPolyHistogram {
    pub ell: u8,
    pub counts: BTreeMap<[u8; 5], u64>,
    pub total: u64,
}

impl CharPolyHistogram {
    /// Counts keyed by the characteristic polynomial alone.
    pub fn by_charpoly(&self) -> BTreeMap<[u8; 4], u64> {
        let mut out = BTreeMap::new();
        for (k, &v) in &self.counts {
            *out.entry([k[0], k[1], k[2], k[3]]).or_insert(0) += v;
        }
        out
    }

    pub fn count_of(&self, c: [u8; 4]) -> u64 {
        self.by_charpoly().get(&c).copied().unwrap_or(0)
    }

    pub fn max_class_size(&self) -> u64 {
        self.by_charpoly().values().copied().max().unwrap_or(0)
    }

    pub fn num_classes(&self) -> usize {
        self.by_charpoly().len()
    }

    pub const CSV_HEADER: &'static str = "c1,c2,c3,c4,nu,count";

    pub fn to_csv(&self) -> String {
        let mut s = String::from(Self::CSV_HEADER);
        s.push('\n');
        for (k, v) in &self.counts {
            let _ = writeln!(s, "{},{},{},{},{},{}", k[0], k[1], k[2], k[3], k[4], v);
        }
        s
    }
}

/// Exact histogram of characteristic polynomials and similitude factors.
pub fn charpoly_census(g: &GroupSet) -> CharPolyHistogram {
    let ell = g.ell();
    let packer = g.packer();
    let maps: Vec<HashMap<[u8; 5], u64>> = g
        .keys()
        .par_chunks(4096)
        .map(|chunk| {
            let mut m = HashMap::new();
            for &k in chunk {
                let x = packer.decode(k);
                let c = packed::charpoly(&x, ell);
                let nu = packed::similitude(&x, ell).expect("group elements are similitudes");
                *m.entry([c[0], c[1], c[2], c[3], nu]).or_insert(0) += 1;
            }
            m
        })
        .collect();
    let mut counts = BTreeMap::new();
    for m in maps {
        for (k, v) in m {
            *counts.entry(k).or_insert(0) += v;
        }
    }
    CharPolyHistogram { ell, counts, total: g.order() as u64 }
}

/// `det(1 - aT)^4` coefficients over F_l.
pub fn scalar_charpoly(a: u8, ell: u8) -> [u8; 4] {
    let l = ell as i64;
    let a = a as i64;
    let r = |x: i64| x.rem_euclid(l) as u8;
    [r(-4 * a), r(6 * a * a), r(-4 * a * a * a), r(a * a * a * a)]
}

/// The closed-form count `l^8 - l^6/2 + l^5 - l^4/2 + l^2/2 - l + 1/2`.
pub fn unipotent_count_polynomial(ell: u64) -> Rational {
    let l = |k: u32| Rational::from_int(ell.pow(k) as i64);
    let h = Rational::new(1, 2);
    &(&(&(&(&(&l(8) - &(&h * &l(6))) + &l(5)) - &(&h * &l(4))) + &(&h * &l(2))) - &l(1)) + &h
}

/// Sum of the five centralizer orbits `|G| / |Z_G(u)|` over the unipotent types.
pub fn unipotent_orbit_sum(ell: u64) -> Rational {
    let l = ell as i64;
    let g = Rational::from_int((l - 1) * l.pow(4) * (l * l - 1) * (l.pow(4) - 1));
    let cents = [
        g.clone(),
        Rational::from_int(l.pow(4) * (l - 1) * (l * l - 1)),
        Rational::from_int(2 * l.pow(3) * (l - 1) * (l - 1)),
        Rational::from_int(2 * l.pow(3) * (l * l - 1)),
        Rational::from_int(l * l * (l - 1)),
    ];
    cents.iter().fold(Rational::zero(), |acc, c| &acc + &(&g / c))
}

/// One step of the greedy coverage in [`c_eta_m`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverageStep {
    pub charpoly: [u8; 4],
    pub count: u64,
    pub covered: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CEtaResult {
    pub m: usize,
    pub target: Rational,
    pub trace: Vec<CoverageStep>,
}

/// Least `M` such that at least `(1 - eta)|G|` elements realize at most `M`
/// characteristic polynomials.
///
/// Taking classes in order of decreasing size is optimal: any `M` classes
/// cover at most as many elements as the `M` largest ones.
pub fn c_eta_m(hist: &CharPolyHistogram, eta: &Rational) -> Result<CEtaResult> {
    if !(eta > &Rational::zero() && eta < &Rational::one()) {
        return Err(Error::OutOfRange(format!("eta = {eta} is not in (0, 1)")));
    }
    let mut classes: Vec<([u8; 4], u64)> = hist.by_charpoly().into_iter().collect();
    classes.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let target = &(&Rational::one() - eta) * &Rational::from_int(hist.total as i64);
    let mut covered = 0u64;
    let mut trace = Vec::new();
    for (k, c) in classes {
        if Rational::from_int(covered as i64) >= target {
            break;
        }
        covered += c;
        trace.push(CoverageStep { charpoly: k, count: c, covered });
    }
    Ok(CEtaResult { m: trace.len().max(1), target, trace })
}

/// Checks that `C(eta, M)` for `g` implies `C(2 eta, M)` for the index-2 subgroup `sub`,
/// over each `eta` in `etas` with `2 eta < 1`.
pub fn index_two_implication(g: &CharPolyHistogram, sub: &CharPolyHistogram, etas: &[Rational]) -> Result<bool> {
    if sub.total * 2 != g.total {
        return Err(Error::ParameterInconsistency("subgroup does not have index 2".into()));
    }
    let two = Rational::from_int(2);
    for eta in etas {
        let eta2 = &two * eta;
        if eta2 >= Rational::one() {
            continue;
        }
        if c_eta_m(sub, &eta2)?.m > c_eta_m(g, eta)?.m {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The index-2 subgroup of elements with square similitude factor.
pub fn square_similitude_subgroup(g: &GroupSet) -> GroupSet {
    let ell = g.ell() as u32;
    let squares: Vec<bool> = (0..ell).map(|x| (1..ell).any(|y| y * y % ell == x)).collect();
    g.filter_nu(|nu| squares[nu as usize])
}
