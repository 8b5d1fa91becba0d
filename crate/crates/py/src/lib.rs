use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use sympkit::census;
use sympkit::exact_arith::{Gaussian, Rational};
use sympkit::gallery;
use sympkit::hecke::{self, LatticeRing, SatakeParams};

type CensusRow = ((u8, u8, u8, u8, u8), u64);

fn err(e: sympkit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn satake(alphas: Vec<String>) -> PyResult<SatakeParams<Gaussian>> {
    let [a0, a1, a2]: [String; 3] =
        alphas.try_into().map_err(|_| PyValueError::new_err("expected three Satake parameters"))?;
    let parse = |s: &str| s.parse::<Gaussian>().map_err(err);
    SatakeParams::new(parse(&a0)?, parse(&a1)?, parse(&a2)?).map_err(err)
}

/// Order of GSp4(F_ell) by full enumeration.
#[pyfunction]
#[pyo3(signature = (ell, budget_mb = 1024))]
fn gsp4_order(py: Python<'_>, ell: u64, budget_mb: u64) -> PyResult<usize> {
    py.detach(|| census::enumerate_gsp4(ell, budget_mb)).map(|g| g.order()).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (ell, budget_mb = 1024))]
fn sp4_order(py: Python<'_>, ell: u64, budget_mb: u64) -> PyResult<usize> {
    py.detach(|| census::enumerate_sp4(ell, budget_mb)).map(|g| g.order()).map_err(err)
}

/// Histogram of `(c1, c2, c3, c4, nu)` over GSp4(F_ell).
#[pyfunction]
#[pyo3(signature = (ell, budget_mb = 1024))]
fn charpoly_census(py: Python<'_>, ell: u64, budget_mb: u64) -> PyResult<Vec<CensusRow>> {
    let h = py
        .detach(|| census::enumerate_gsp4(ell, budget_mb).map(|g| census::charpoly_census(&g)))
        .map_err(err)?;
    Ok(h.counts.into_iter().map(|(k, v)| ((k[0], k[1], k[2], k[3], k[4]), v)).collect())
}

/// Coefficients of the spin L-factor, lowest degree first, as exact strings.
#[pyfunction]
fn spin_factor(alphas: Vec<String>) -> PyResult<Vec<String>> {
    let s = satake(alphas)?;
    Ok(hecke::spin_factor(&s).coeffs().iter().map(Gaussian::to_string).collect())
}

/// `(a1, a2, eps, lambda(p^2))` for the given Satake parameters.
#[pyfunction]
fn hecke_data(alphas: Vec<String>, p: u64) -> PyResult<(String, String, String, String)> {
    let s = satake(alphas)?;
    let h = hecke::satake_to_hecke(&s, p);
    let l2 = hecke::lambda_p2(&h, &s.c());
    Ok((h.a1.to_string(), h.a2.to_string(), h.eps.to_string(), l2.to_string()))
}

/// Points of the ring with conjugate norm bounded by `c`.
#[pyfunction]
fn enumerate_y(c: &str, ring: &str) -> PyResult<Vec<String>> {
    let c: Rational = c.parse().map_err(err)?;
    let ring: LatticeRing = ring.parse().map_err(err)?;
    Ok(hecke::enumerate_y(&c, ring).map_err(err)?.iter().map(|e| e.to_string()).collect())
}

/// Number of degree-4 root-of-unity factors for the bound `a`.
#[pyfunction]
#[pyo3(signature = (a, admissible_only = false))]
fn rou_count(py: Python<'_>, a: u64, admissible_only: bool) -> PyResult<usize> {
    py.detach(|| hecke::rou_charpolys(a, admissible_only)).map(|v| v.len()).map_err(err)
}

/// `(|<A1..A5>|, |<A1..A5, T>|)` for the printed solvable example.
#[pyfunction]
fn martin_orders(py: Python<'_>) -> PyResult<(usize, usize)> {
    py.detach(gallery::martin_report).map(|m| (m.order_h, m.order_full)).map_err(err)
}

/// Runs the command-line interface and returns `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run(py: Python<'_>, args: Vec<String>) -> (i32, String, String) {
    py.detach(|| {
        let mut out = Vec::new();
        let mut e = Vec::new();
        let argv = std::iter::once("sympkit".to_string()).chain(args);
        let code = sympkit::cli::run(argv, &mut out, &mut e);
        (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&e).into_owned())
    })
}

#[pymodule]
fn _sympkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(gsp4_order, m)?)?;
    m.add_function(wrap_pyfunction!(sp4_order, m)?)?;
    m.add_function(wrap_pyfunction!(charpoly_census, m)?)?;
    m.add_function(wrap_pyfunction!(spin_factor, m)?)?;
    m.add_function(wrap_pyfunction!(hecke_data, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_y, m)?)?;
    m.add_function(wrap_pyfunction!(rou_count, m)?)?;
    m.add_function(wrap_pyfunction!(martin_orders, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
