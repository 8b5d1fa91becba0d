use std::collections::BTreeSet;

use num_complex::Complex64;
use serde_json::{json, Value};

use super::{Command, Config, GalleryCommand, Mode, Report};
use crate::census::{self, packed, CharPolyHistogram, FamilySpec};
use crate::error::{Error, Result};
use crate::exact_arith::{is_prime, ExactRepr, Field, Gaussian, Rational, UPoly};
use crate::gallery::{martin_report, sym3_identities_check};
use crate::hecke::{self, LatticeRing, SatakeParams};

pub(super) fn name(c: &Command) -> &'static str {
    match c {
        Command::Census { .. } => "census",
        Command::Family { .. } => "family",
        Command::Ceta { .. } => "ceta",
        Command::Hecke { .. } => "hecke",
        Command::Ylattice { .. } => "ylattice",
        Command::Gallery { which: GalleryCommand::Martin } => "gallery-martin",
        Command::Gallery { which: GalleryCommand::Sym3 } => "gallery-sym3",
        Command::P1reps { .. } => "p1reps",
    }
}

pub(super) fn dispatch(c: &Command, config: &Config, r: &mut Report) -> Result<()> {
    match c {
        Command::Census { ell, csv } => census_cmd(*ell, csv.as_deref(), config, r),
        Command::Family { case, ell } => family_cmd(case, *ell, r),
        Command::Ceta { case, ell, eta } => ceta_cmd(case, *ell, eta, r),
        Command::Hecke { satake, p } => hecke_cmd(satake, *p, config.mode, r),
        Command::Ylattice { ring, c } => ylattice_cmd(ring, c, r),
        Command::Gallery { which: GalleryCommand::Martin } => martin_cmd(r),
        Command::Gallery { which: GalleryCommand::Sym3 } => sym3_cmd(r),
        Command::P1reps { p, beta } => p1_cmd(*p, *beta, r),
    }
}

pub(super) fn text_summary(r: &Report) -> String {
    let mut s = String::new();
    if let Value::Object(m) = &r.results {
        for (k, v) in m {
            match v {
                Value::Array(a) if a.len() <= 20 => {
                    s.push_str(&format!("{k}:\n"));
                    for x in a {
                        s.push_str(&format!("  {x}\n"));
                    }
                }
                Value::Array(_) | Value::Object(_) => {}
                Value::String(x) => s.push_str(&format!("{k}: {x}\n")),
                other => s.push_str(&format!("{k}: {other}\n")),
            }
        }
    }
    for a in &r.assertions {
        s.push_str(&format!("{} {}\n", if a.pass { "PASS" } else { "FAIL" }, a.anchor));
    }
    s
}

fn histogram_json(h: &CharPolyHistogram, top: usize) -> Value {
    let mut classes: Vec<([u8; 4], u64)> = h.by_charpoly().into_iter().collect();
    classes.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    json!({
        "total": h.total,
        "classes": h.num_classes(),
        "max_class_size": h.max_class_size(),
        "largest": classes.iter().take(top).map(|(c, n)| json!({"charpoly": c, "count": n})).collect::<Vec<_>>(),
    })
}

fn census_cmd(ell: u64, csv: Option<&std::path::Path>, config: &Config, r: &mut Report) -> Result<()> {
    let g = census::enumerate_gsp4(ell, config.memory_budget_mb)?;
    let h = census::charpoly_census(&g);
    let l = ell as u8;
    let expected = census::sp4_order(ell) * (ell - 1);
    let orbit_sum = census::unipotent_orbit_sum(ell);
    let scalar_counts: Vec<u64> = (1..l).map(|a| h.count_of(census::scalar_charpoly(a, l))).collect();
    let gl2_max = census::gl2_charpoly_counts(l).values().copied().max().unwrap_or(0);
    if let Some(path) = csv {
        std::fs::write(path, h.to_csv()).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    r.results = json!({
        "ell": ell,
        "order": g.order(),
        "expected_order": expected,
        "sp4_order": census::sp4_order(ell),
        "classes": h.num_classes(),
        "max_class_size": h.max_class_size(),
        "scalar_unipotent_counts": scalar_counts,
        "unipotent_count_polynomial": census::unipotent_count_polynomial(ell).exact_string(),
        "unipotent_orbit_sum": orbit_sum.exact_string(),
        "gl2_max_class_size": gl2_max,
        "histogram": histogram_json(&h, 10),
    });
    r.assert("census.gsp4_order", g.order() as u64 == expected);
    r.assert(
        "census.unipotent_orbit_sum",
        scalar_counts.iter().all(|&c| Rational::from_int(c as i64) == orbit_sum),
    );
    r.assert("census.gl2_bound", gl2_max <= ell * ell + ell);
    Ok(())
}

fn family(case: &str, ell: u64) -> Result<census::Family> {
    let spec = FamilySpec::canonical(case.parse()?, ell)?;
    census::build_family(&spec)
}

fn family_cmd(case: &str, ell: u64, r: &mut Report) -> Result<()> {
    let f = family(case, ell)?;
    let l = f.group.ell();
    let in_gsp4 = f.group.elements().all(|m| packed::similitude(&m, l).is_some());
    r.results = json!({
        "case": f.spec.case.to_string(),
        "ell": ell,
        "u": f.spec.u,
        "ab": f.spec.ab,
        "order": f.group.order(),
        "literal_size": f.literal_size,
        "literal_is_group": f.literal_is_group,
        "generators": f.generators.len(),
        "extra_generators": f.extra_generators.len(),
    });
    r.assert("family.closed", f.group.is_closed_under(&f.generators));
    r.assert("family.in_gsp4", in_gsp4);
    Ok(())
}

fn ceta_cmd(case: &str, ell: u64, eta: &str, r: &mut Report) -> Result<()> {
    let eta: Rational = eta.parse()?;
    let f = family(case, ell)?;
    let h = census::charpoly_census(&f.group);
    let res = census::c_eta_m(&h, &eta)?;
    let half = &eta * &Rational::new(1, 2);
    let finer = census::c_eta_m(&h, &half)?;
    let sub = census::square_similitude_subgroup(&f.group);
    let index_two = if sub.order() * 2 == f.group.order() {
        Some(census::index_two_implication(&h, &census::charpoly_census(&sub), std::slice::from_ref(&eta))?)
    } else {
        None
    };
    let covered = res.trace.last().map_or(0, |s| s.covered);
    r.results = json!({
        "case": f.spec.case.to_string(),
        "ell": ell,
        "eta": eta.exact_string(),
        "order": f.group.order(),
        "m": res.m,
        "target": res.target.exact_string(),
        "covered": covered,
        "trace": res.trace.iter().map(|s| json!({"charpoly": s.charpoly, "count": s.count, "covered": s.covered})).collect::<Vec<_>>(),
        "square_similitude_subgroup_order": sub.order(),
    });
    r.assert("ceta.target_covered", Rational::from_int(covered as i64) >= res.target);
    r.assert("ceta.monotone_in_eta", finer.m >= res.m);
    if let Some(ok) = index_two {
        r.assert("ceta.index_two_implication", ok);
    }
    Ok(())
}

fn coeff_strings<F: Field + ExactRepr>(v: &[F]) -> Vec<String> {
    v.iter().map(|c| c.exact_string()).collect()
}

fn to_c64(g: &Gaussian) -> Complex64 {
    Complex64::new(g.re.to_f64(), g.im.to_f64())
}

fn hecke_cmd(satake: &str, p: u64, mode: Mode, r: &mut Report) -> Result<()> {
    if p == 0 || !is_prime(p) {
        return Err(Error::Parse(format!("{p} is not prime")));
    }
    let parts: Vec<Gaussian> = satake.split(',').map(str::parse).collect::<Result<_>>()?;
    let [a0, a1, a2]: [Gaussian; 3] =
        parts.try_into().map_err(|_| Error::Parse("expected three Satake parameters".into()))?;
    let s = SatakeParams::new(a0, a1, a2)?;
    let h = hecke::satake_to_hecke(&s, p);
    let c = s.c();
    let l2 = hecke::lambda_p2(&h, &c);
    let hp = hecke::hecke_poly(&h);
    let spin = hecke::spin_factor(&s);
    let std5 = hecke::std5_factor(&s);
    let wedge = hecke::wedge2_params(&s);
    let eps = h.eps.clone();
    let wedge_poly = UPoly::from_reciprocal_roots(&wedge, &eps);
    let split = UPoly::one_minus(&eps) * std5.poly().rescale_var(&eps);
    let ring = if [&s.alpha0, &s.alpha1, &s.alpha2].iter().all(|x| x.is_real()) { LatticeRing::Z } else { LatticeRing::Gaussian };
    let integral = hecke::check_int(&h, &c, ring)?;
    let mut results = json!({
        "p": p,
        "a1": h.a1.exact_string(),
        "a2": h.a2.exact_string(),
        "eps": eps.exact_string(),
        "c_p": c.exact_string(),
        "lambda_p2": l2.exact_string(),
        "hecke_poly": hp.to_json(),
        "spin_factor": spin.to_json(),
        "std5_factor": std5.to_json(),
        "wedge2": coeff_strings(&wedge),
        "integrality_ring": ring.to_string(),
        "integral": integral,
    });
    if mode == Mode::Float {
        let f = hecke::float_spin_factor(to_c64(&s.alpha0), to_c64(&s.alpha1), to_c64(&s.alpha2));
        results["spin_factor_float"] = json!(f.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>());
    }
    r.results = results;
    r.assert("hecke.spin_identity", hp == spin);
    r.assert("hecke.lambda_p2_relation", hecke::eigenvalue_relation_holds(&h, &l2));
    r.assert("hecke.std5_antipalindromic", std5.is_antipalindromic());
    r.assert("hecke.wedge2_splitting", wedge_poly == split);
    Ok(())
}

fn ylattice_cmd(ring: &str, c: &str, r: &mut Report) -> Result<()> {
    let ring: LatticeRing = ring.parse()?;
    let c: Rational = c.parse()?;
    let y = hecke::enumerate_y(&c, ring)?;
    let bigger = hecke::enumerate_y(&(&c + &Rational::one()), ring)?;
    let units = ring.units();
    let unit_sym = y.iter().all(|e| units.iter().all(|u| y.contains(&e.mul(u))));
    let conj_sym = y.iter().all(|e| y.contains(&e.conj()));
    let as_set: BTreeSet<_> = y.iter().collect();
    r.results = json!({
        "ring": ring.to_string(),
        "c": c.exact_string(),
        "count": y.len(),
        "elements": y.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
    });
    r.assert("ylattice.unit_symmetric", unit_sym);
    r.assert("ylattice.conjugation_symmetric", conj_sym);
    r.assert("ylattice.monotone", as_set.iter().all(|e| bigger.contains(e)));
    Ok(())
}

fn martin_cmd(r: &mut Report) -> Result<()> {
    let m = martin_report()?;
    let opt = |g: &Option<Gaussian>| g.as_ref().map(|x| x.exact_string());
    r.results = json!({
        "similitudes": m.similitudes.iter().map(|(n, s)| json!({"name": n, "nu": opt(s)})).collect::<Vec<_>>(),
        "order_h": m.order_h,
        "order_full": m.order_full,
        "scalars_h": coeff_strings(&m.scalars_h),
        "scalars_full": coeff_strings(&m.scalars_full),
        "quotient_pm_order": m.quotient_pm_order,
        "quotient_pm_exponent": m.quotient_pm_exponent,
        "quotient_scalar_order": m.quotient_scalar_order,
        "quotient_scalar_exponent": m.quotient_scalar_exponent,
        "t_normalizes_h": m.t_normalizes_h,
        "t_fifth_power": opt(&m.t_fifth_power),
        "a5_odd": m.a5_odd,
        "odd_involutions": m.odd_involutions.0,
        "odd_involutions_normalized": m.odd_involutions.1,
    });
    r.extend_checks(&m.checks);
    Ok(())
}

fn sym3_cmd(r: &mut Report) -> Result<()> {
    let s = sym3_identities_check(50);
    r.results = json!({
        "samples": s.samples,
        "p_similitude": s.p_similitude.as_ref().map(|x| x.exact_string()),
        "jprime_similitude": s.jprime_similitude.as_ref().map(|x| x.exact_string()),
    });
    r.extend_checks(&s.checks);
    Ok(())
}

fn p1_cmd(p: u64, beta: u32, r: &mut Report) -> Result<()> {
    if p == 0 || !is_prime(p) {
        return Err(Error::Parse(format!("{p} is not prime")));
    }
    if (p as f64).powi(beta as i32) > 1e6 {
        return Err(Error::OutOfRange(format!("p^beta = {p}^{beta} is too large")));
    }
    let reps = census::enumerate_p1_reps(p, beta);
    r.results = json!({
        "p": p,
        "beta": beta,
        "count": reps.len(),
        "reps": if reps.len() <= 1000 { json!(reps) } else { Value::Null },
    });
    r.assert("p1reps.count", reps.len() as u64 == census::p1_count(p, beta));
    Ok(())
}
