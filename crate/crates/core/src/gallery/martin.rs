use super::closure::{group_closure, FiniteMatrixGroup, DEFAULT_CLOSURE_CAP};
use super::Check;
use crate::exact_arith::{Gaussian, Mat};
use crate::gsp4::{oddness_normalize, similitude_of, GSpElement};

/// A generator and its label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NamedGenerator {
    pub name: &'static str,
    pub mat: Mat<Gaussian>,
}

type Entry = (i64, i64);

// Entries as (re, im); the last matrix is scaled by -(1+i)/2 afterwards.
const TABLE: [(&str, [[Entry; 4]; 4]); 6] = [
    ("A1", [[(1, 0), (0, 0), (0, 0), (0, 0)], [(0, 0), (-1, 0), (0, 0), (0, 0)], [(0, 0), (0, 0), (1, 0), (0, 0)], [(0, 0), (0, 0), (0, 0), (-1, 0)]]),
    ("A2", [[(0, 0), (1, 0), (0, 0), (0, 0)], [(1, 0), (0, 0), (0, 0), (0, 0)], [(0, 0), (0, 0), (0, 0), (-1, 0)], [(0, 0), (0, 0), (-1, 0), (0, 0)]]),
    ("A3", [[(0, 0), (0, 1), (0, 0), (0, 0)], [(0, 1), (0, 0), (0, 0), (0, 0)], [(0, 0), (0, 0), (0, 0), (0, 1)], [(0, 0), (0, 0), (0, 1), (0, 0)]]),
    ("A4", [[(0, 0), (0, 0), (0, 0), (0, 1)], [(0, 0), (0, 0), (0, 1), (0, 0)], [(0, 0), (0, 1), (0, 0), (0, 0)], [(0, 1), (0, 0), (0, 0), (0, 0)]]),
    ("A5", [[(1, 0), (0, 0), (0, 0), (0, 0)], [(0, 0), (-1, 0), (0, 0), (0, 0)], [(0, 0), (0, 0), (-1, 0), (0, 0)], [(0, 0), (0, 0), (0, 0), (1, 0)]]),
    ("T", [[(0, -1), (0, 0), (0, 0), (0, 1)], [(0, 0), (1, 0), (1, 0), (0, 0)], [(1, 0), (0, 0), (0, 0), (1, 0)], [(0, 0), (0, -1), (0, 1), (0, 0)]]),
];

/// `A1, ..., A5` and `T` with exact Gaussian rational entries.
pub fn martin_generators() -> Vec<NamedGenerator> {
    let t_scale = Gaussian::new(crate::exact_arith::Rational::new(-1, 2), crate::exact_arith::Rational::new(-1, 2));
    TABLE
        .iter()
        .map(|(name, rows)| {
            let m = Mat::from_fn(4, 4, |i, j| Gaussian::from_ints(rows[i][j].0, rows[i][j].1));
            let m = if *name == "T" { m.scale(&t_scale) } else { m };
            NamedGenerator { name, mat: m }
        })
        .collect()
}

/// Computed structure of the groups generated by the table above.
#[derive(Clone, Debug)]
pub struct MartinReport {
    /// Similitude of each generator for `J`, `None` when it is not a similitude.
    pub similitudes: Vec<(&'static str, Option<Gaussian>)>,
    pub order_h: usize,
    pub order_full: usize,
    pub scalars_h: Vec<Gaussian>,
    pub scalars_full: Vec<Gaussian>,
    /// Order and exponent of `<A1..A5>` modulo `{+-I}`.
    pub quotient_pm_order: Option<usize>,
    pub quotient_pm_exponent: usize,
    /// Order and exponent of `<A1..A5>` modulo all of its scalars.
    pub quotient_scalar_order: Option<usize>,
    pub quotient_scalar_exponent: usize,
    pub t_normalizes_h: bool,
    pub t_fifth_power: Option<Gaussian>,
    pub a5_odd: bool,
    /// Involutions of `<A1..A5>` with similitude -1, and how many of them normalize.
    pub odd_involutions: (usize, usize),
    pub checks: Vec<Check>,
    pub h: FiniteMatrixGroup<Gaussian>,
    pub full: FiniteMatrixGroup<Gaussian>,
}

impl MartinReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn martin_report() -> crate::Result<MartinReport> {
    let gens = martin_generators();
    let one = Gaussian::from_ints(1, 0);
    let pm = [one.clone(), -one.clone()];
    let similitudes: Vec<_> = gens.iter().map(|g| (g.name, similitude_of(&g.mat).ok())).collect();
    let a: Vec<Mat<Gaussian>> = gens[..5].iter().map(|g| g.mat.clone()).collect();
    let all: Vec<Mat<Gaussian>> = gens.iter().map(|g| g.mat.clone()).collect();
    let h = group_closure(&a, DEFAULT_CLOSURE_CAP)?;
    let full = group_closure(&all, DEFAULT_CLOSURE_CAP)?;
    let t = &gens[5].mat;
    let scalars_h = h.scalars();
    let scalars_full = full.scalars();
    let t_fifth_power = t.pow(5).is_scalar();
    let a5_odd = GSpElement::new(gens[4].mat.clone())
        .and_then(|g| oddness_normalize(&g).map(|p| g.conj_by(&p).mat() == g.mat()))
        .unwrap_or(false);
    let id = Mat::identity(4, &one);
    let mut odd_involutions = (0, 0);
    for m in h.elements() {
        if (m * m) != id {
            continue;
        }
        let Ok(g) = GSpElement::new(m.clone()) else { continue };
        if *g.nu() != -one.clone() || m.is_scalar().is_some() {
            continue;
        }
        odd_involutions.0 += 1;
        let target = Mat::diag(&[1, -1, -1, 1].map(|v| Gaussian::from_ints(v, 0)));
        if oddness_normalize(&g).is_ok_and(|p| g.conj_by(&p).mat() == &target) {
            odd_involutions.1 += 1;
        }
    }
    let expected_nu = [1, -1, -1, 1, -1].map(|v| Some(Gaussian::from_ints(v, 0)));
    let quotient_pm_order = h.quotient_order(&pm);
    let quotient_pm_exponent = h.quotient_exponent(&pm);
    let checks = vec![
        Check::new("martin.generator_similitudes", similitudes[..5].iter().map(|s| s.1.clone()).eq(expected_nu)),
        Check::new("martin.all_generators_in_gsp4", similitudes.iter().all(|s| s.1.is_some())),
        Check::new("martin.order_h_32", h.order() == 32),
        Check::new("martin.quotient_pm_e16", quotient_pm_order == Some(16) && quotient_pm_exponent == 2),
        Check::new("martin.order_full_160", full.order() == 160),
        Check::new("martin.t_normalizes_h", h.normalized_by(t)),
        Check::new("martin.t_fifth_power_scalar", t_fifth_power.is_some()),
        Check::new("martin.a5_odd", a5_odd),
        Check::new("martin.no_scalars_beyond_pm", scalars_full.iter().all(|c| pm.contains(c))),
    ];
    Ok(MartinReport {
        similitudes,
        order_h: h.order(),
        order_full: full.order(),
        quotient_pm_order,
        quotient_pm_exponent,
        quotient_scalar_order: h.quotient_order(&scalars_h),
        quotient_scalar_exponent: h.quotient_exponent(&scalars_h),
        t_normalizes_h: h.normalized_by(t),
        t_fifth_power,
        a5_odd,
        odd_involutions,
        checks,
        scalars_h,
        scalars_full,
        h,
        full,
    })
}
