//! Constructive conjugation of a symplectically odd involution to `diag(1,-1,-1,1)`.

use super::{pairing, GSpElement, WeylGen};
use crate::error::{Error, Result};
use crate::exact_arith::{Field, Mat};

fn violated(msg: &str) -> Error {
    Error::PreconditionViolated(msg.into())
}

fn scale_vec<F: Field>(v: &[F], s: &F) -> Vec<F> {
    v.iter().map(|x| x.clone() * s.clone()).collect()
}

fn basis<F: Field>(i: usize, s: &F) -> Vec<F> {
    (0..4).map(|k| if k == i { s.one_like() } else { s.zero_like() }).collect()
}

/// Returns `P` in GSp4 with `P^-1 g P = diag(1,-1,-1,1)`.
///
/// Requires `g^2 = 1`, `nu(g) = -1` and `det(1 - gT) = (1-T)^2 (1+T)^2`.
/// The conjugator is assembled in four stages: a symplectic basis change
/// sending a fixed vector to `e1`, a determinant-one change of the middle
/// block, the unipotent that clears the first row, and finally `s2`.
pub fn oddness_normalize<F: Field>(g: &GSpElement<F>) -> Result<GSpElement<F>> {
    let s = g.mat().sample().clone();
    if s.characteristic() == 2 {
        return Err(violated("characteristic 2"));
    }
    let one = s.one_like();
    let id = Mat::identity(4, &s);
    if (g.mat() * g.mat()) != id {
        return Err(violated("g is not an involution"));
    }
    if *g.nu() != -one.clone() {
        return Err(violated("similitude factor is not -1"));
    }
    let expect = crate::exact_arith::UPoly::new(
        [1, 0, -2, 0, 1].iter().map(|&c| s.from_i64_like(c)).collect(),
    );
    if g.char_poly() != expect {
        return Err(violated("eigenvalues are not 1,1,-1,-1"));
    }
    let half = s.from_i64_like(2).inv().expect("odd characteristic");

    // stage 1: symplectic basis (v, c2, w, c4) with g v = v
    let v = (g.mat().clone() - id.clone())
        .nullspace()
        .into_iter()
        .next()
        .ok_or_else(|| violated("no fixed vector"))?;
    let w = (0..4)
        .find_map(|j| {
            let e = basis(j, &s);
            pairing(&v, &e).inv().map(|c| scale_vec(&e, &c))
        })
        .expect("pairing is nondegenerate");
    let project = |x: Vec<F>| -> Vec<F> {
        let a = -pairing(&x, &w);
        let b = pairing(&x, &v);
        (0..4).map(|k| x[k].clone() + a.clone() * v[k].clone() + b.clone() * w[k].clone()).collect()
    };
    let comp: Vec<Vec<F>> = (0..4).map(|j| project(basis(j, &s))).collect();
    let c2 = comp.iter().find(|x| x.iter().any(|c| !c.is_zero())).expect("complement is 2-dimensional").clone();
    let c4 = comp
        .iter()
        .find_map(|y| pairing(&c2, y).inv().map(|c| scale_vec(y, &c)))
        .expect("complement is nondegenerate");
    let p1 = GSpElement::new(Mat::from_cols(&[v, c2, w, c4]))?;
    let g1 = g.conj_by(&p1);

    // stage 2: diagonalize the middle block with a determinant-one change
    let b = g1.mat().submatrix(&[1, 3], &[1, 3]);
    let id2 = Mat::identity(2, &s);
    let up = (b.clone() - id2.clone()).nullspace().into_iter().next().ok_or_else(|| violated("middle block"))?;
    let um = (b + id2).nullspace().into_iter().next().ok_or_else(|| violated("middle block"))?;
    let d = up[0].clone() * um[1].clone() - up[1].clone() * um[0].clone();
    let um = scale_vec(&um, &d.inv().ok_or_else(|| violated("middle block"))?);
    let z = s.zero_like();
    let k = Mat::from_rows(vec![
        vec![one.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), up[0].clone(), z.clone(), um[0].clone()],
        vec![z.clone(), z.clone(), one.clone(), z.clone()],
        vec![z.clone(), up[1].clone(), z.clone(), um[1].clone()],
    ]);
    let k = GSpElement::new(k)?;
    let g2 = g1.conj_by(&k);

    // stage 3: g2 = diag(1,1,-1,-1) * U(x1, x2, x3), then clear U
    let dm = Mat::diag(&[one.clone(), one.clone(), -one.clone(), -one.clone()]);
    let n = &dm * g2.mat();
    let (x1, x2, x3) = (n.get(0, 1).clone(), n.get(0, 3).clone(), n.get(0, 2).clone());
    let u = Mat::from_rows(vec![
        vec![one.clone(), x1.clone(), x3.clone(), x2.clone()],
        vec![z.clone(), one.clone(), x2.clone(), z.clone()],
        vec![z.clone(), z.clone(), one.clone(), z.clone()],
        vec![z.clone(), z.clone(), -x1.clone(), one.clone()],
    ]);
    if n != u || !x1.is_zero() {
        return Err(violated("reduction did not reach the Klingen shape"));
    }
    let p3 = Mat::from_rows(vec![
        vec![one.clone(), z.clone(), -(x3 * half.clone()), -(x2.clone() * half.clone())],
        vec![z.clone(), one.clone(), -(x2 * half), z.clone()],
        vec![z.clone(), z.clone(), one.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), one.clone()],
    ]);
    let p3 = GSpElement::new(p3)?;

    // stage 4: s2^-1 diag(1,1,-1,-1) s2 = diag(1,-1,-1,1)
    let s2 = GSpElement::new(WeylGen::S2.matrix(&s))?;
    let p = p1.mul(&k).mul(&p3).mul(&s2);
    let target = Mat::diag(&[one.clone(), -one.clone(), -one.clone(), one]);
    if g.conj_by(&p).mat() != &target {
        return Err(violated("post-condition failed"));
    }
    Ok(p)
}
