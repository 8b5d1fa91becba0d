//! Explicit subgroup families of GSp4(F_l): Levi subgroups, the endoscopic
//! subgroup and the irreducible normalizer-type families.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::group::{closure, GroupSet};
use super::packed::{self, Elem};
use crate::error::{Error, Result};
use crate::exact_arith::{quadratic_nonresidue, solve_sum_of_squares, Fp, QuadExt};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Case {
    LeviB,
    LeviP,
    LeviQ,
    Hen,
    Case5,
    Case6,
    Case7,
    Case8,
    Case9,
}

impl Case {
    pub const ALL: [Case; 9] = [
        Case::LeviB,
        Case::LeviP,
        Case::LeviQ,
        Case::Hen,
        Case::Case5,
        Case::Case6,
        Case::Case7,
        Case::Case8,
        Case::Case9,
    ];
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::LeviB => "levi-b",
            Case::LeviP => "levi-p",
            Case::LeviQ => "levi-q",
            Case::Hen => "hen",
            Case::Case5 => "5",
            Case::Case6 => "6",
            Case::Case7 => "7",
            Case::Case8 => "8",
            Case::Case9 => "9",
        };
        write!(f, "{s}")
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace('_', "-");
        let t = t.strip_prefix("case").map(|x| x.trim_start_matches('-')).unwrap_or(&t).to_string();
        Ok(match t.as_str() {
            "levi-b" | "b" | "1b" => Case::LeviB,
            "levi-p" | "p" | "1p" => Case::LeviP,
            "levi-q" | "q" | "1q" => Case::LeviQ,
            "hen" | "2" => Case::Hen,
            "5" => Case::Case5,
            "6" => Case::Case6,
            "7" => Case::Case7,
            "8" => Case::Case8,
            "9" => Case::Case9,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

/// A family together with the canonical parameters it was built from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    pub case: Case,
    pub ell: u64,
    /// Quadratic non-residue used by cases 7 and 8.
    pub u: Option<u8>,
    /// `(a, b)` with `a^2 + b^2 = u` used by case 7.
    pub ab: Option<(u8, u8)>,
}

impl FamilySpec {
    pub fn canonical(case: Case, ell: u64) -> Result<Self> {
        let (u, ab) = match case {
            Case::Case7 => {
                let u = quadratic_nonresidue(ell)?;
                let (a, b) = solve_sum_of_squares(u, ell)?;
                (Some(u.value() as u8), Some((a.value() as u8, b.value() as u8)))
            }
            Case::Case8 => (Some(quadratic_nonresidue(ell)?.value() as u8), None),
            _ => {
                Fp::checked(ell, 0)?;
                (None, None)
            }
        };
        Ok(FamilySpec { case, ell, u, ab })
    }

    fn check(&self) -> Result<()> {
        Fp::checked(self.ell, 0)?;
        if let Some(u) = self.u {
            if Fp::new(self.ell, u as i64).is_square() {
                return Err(Error::ParameterInconsistency(format!("u = {u} is a square mod {}", self.ell)));
            }
        }
        if let (Some(u), Some((a, b))) = (self.u, self.ab) {
            let l = self.ell as u32;
            if a == 0 || b == 0 || (a as u32 * a as u32 + b as u32 * b as u32) % l != u as u32 % l {
                return Err(Error::ParameterInconsistency(format!("a^2 + b^2 != u for (a, b) = ({a}, {b})")));
            }
        }
        if matches!(self.case, Case::Case7) && (self.u.is_none() || self.ab.is_none())
            || matches!(self.case, Case::Case8) && self.u.is_none()
        {
            return Err(Error::ParameterInconsistency(format!("missing parameters for case {}", self.case)));
        }
        Ok(())
    }
}

/// Output of [`build_family`].
#[derive(Clone, Debug)]
pub struct Family {
    pub spec: FamilySpec,
    pub group: GroupSet,
    /// Number of matrices in the displayed parametrized set (before closure).
    pub literal_size: usize,
    /// Extra generators adjoined to the displayed set.
    pub extra_generators: Vec<Elem>,
    /// A small generating set found incrementally from the displayed set.
    pub generators: Vec<Elem>,
    /// Whether the displayed set is already a group.
    pub literal_is_group: bool,
}

/// All 2x2 invertible matrices `[a, b, c, d]` over F_l.
pub fn gl2(ell: u8) -> Vec<[u8; 4]> {
    let l = ell as u32;
    let mut out = Vec::new();
    for a in 0..ell {
        for b in 0..ell {
            for c in 0..ell {
                for d in 0..ell {
                    let det = (a as u32 * d as u32 + l * l - b as u32 * c as u32) % l;
                    if det != 0 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

fn det2(m: &[u8; 4], ell: u8) -> u8 {
    let l = ell as u32;
    ((m[0] as u32 * m[3] as u32 + l * l - m[1] as u32 * m[2] as u32) % l) as u8
}

fn inv_mod(x: u8, ell: u8) -> u8 {
    (1..ell).find(|&y| (x as u32 * y as u32) % ell as u32 == 1).expect("nonzero")
}

/// The block swap `[[0, I2], [I2, 0]]`.
pub fn block_swap(ell: u8) -> Elem {
    packed::from_rows([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]], ell)
}

fn torus_set(ell: u8) -> Vec<Elem> {
    let mut out = Vec::new();
    for t1 in 1..ell {
        for t2 in 1..ell {
            for t0 in 1..ell {
                let a = t0 as u32 * inv_mod(t1, ell) as u32;
                let b = t0 as u32 * inv_mod(t2, ell) as u32;
                out.push(packed::diag([t1 as i64, t2 as i64, a as i64, b as i64], ell));
            }
        }
    }
    out
}

/// `diag(A, u A^-t)`.
fn siegel_levi_set(ell: u8) -> Vec<Elem> {
    let l = ell as i64;
    let mut out = Vec::new();
    for m in gl2(ell) {
        let di = inv_mod(det2(&m, ell), ell) as i64;
        let (a, b, c, d) = (m[0] as i64, m[1] as i64, m[2] as i64, m[3] as i64);
        // A^-t = det^-1 [[d, -c], [-b, a]]
        for u in 1..l {
            let s = u * di;
            out.push(packed::from_rows(
                [[a, b, 0, 0], [c, d, 0, 0], [0, 0, s * d, -s * c], [0, 0, -s * b, s * a]],
                ell,
            ));
        }
    }
    out
}

/// `diag(a', 1, u/a', u) * (SL2 block on coordinates 2, 4)`.
fn klingen_levi_set(ell: u8) -> Vec<Elem> {
    let mut out = Vec::new();
    for m in gl2(ell) {
        let u = det2(&m, ell);
        for ap in 1..ell {
            let c = u as i64 * inv_mod(ap, ell) as i64;
            out.push(packed::from_rows(
                [
                    [ap as i64, 0, 0, 0],
                    [0, m[0] as i64, 0, m[1] as i64],
                    [0, 0, c, 0],
                    [0, m[2] as i64, 0, m[3] as i64],
                ],
                ell,
            ));
        }
    }
    out
}

/// Checkerboard pairs `(A, B)` with `det A = det B`.
fn hen_set(ell: u8) -> Vec<Elem> {
    let mats = gl2(ell);
    let mut by_det: BTreeMap<u8, Vec<[u8; 4]>> = BTreeMap::new();
    for m in &mats {
        by_det.entry(det2(m, ell)).or_default().push(*m);
    }
    let mut out = Vec::new();
    for a in &mats {
        for b in &by_det[&det2(a, ell)] {
            out.push(hen_elem(a, b, ell));
        }
    }
    out
}

pub fn hen_elem(a: &[u8; 4], b: &[u8; 4], ell: u8) -> Elem {
    let (a0, a1, a2, a3) = (a[0] as i64, a[1] as i64, a[2] as i64, a[3] as i64);
    let (b0, b1, b2, b3) = (b[0] as i64, b[1] as i64, b[2] as i64, b[3] as i64);
    packed::from_rows([[a0, 0, a1, 0], [0, b0, 0, b1], [a2, 0, a3, 0], [0, b2, 0, b3]], ell)
}

/// `S(x + y sqrt(u)) = [[x + a y, b y], [b y, x - a y]]`.
pub fn s_block(z: &QuadExt, a: u8, b: u8) -> [i64; 4] {
    let (x, y) = (z.x.value() as i64, z.y.value() as i64);
    let (a, b) = (a as i64, b as i64);
    [x + a * y, b * y, b * y, x - a * y]
}

/// `[[S(a1), S(a2)], [S(a3), S(a4)]]`.
pub fn s_matrix(g: &[QuadExt; 4], a: u8, b: u8, ell: u8) -> Elem {
    let s: Vec<[i64; 4]> = g.iter().map(|z| s_block(z, a, b)).collect();
    packed::from_rows(
        [
            [s[0][0], s[0][1], s[1][0], s[1][1]],
            [s[0][2], s[0][3], s[1][2], s[1][3]],
            [s[2][0], s[2][1], s[3][0], s[3][1]],
            [s[2][2], s[2][3], s[3][2], s[3][3]],
        ],
        ell,
    )
}

fn case7_set(ell: u8, u: u8, a: u8, b: u8) -> Vec<Elem> {
    let uf = Fp::new(ell as u64, u as i64);
    let nonzero: Vec<QuadExt> = QuadExt::all(uf).into_iter().filter(|z| !(z.x.value() == 0 && z.y.value() == 0)).collect();
    let mut out = Vec::new();
    for a1 in &nonzero {
        for a2 in &nonzero {
            for a3 in &nonzero {
                for a4 in &nonzero {
                    let m = s_matrix(&[*a1, *a2, *a3, *a4], a, b, ell);
                    if packed::similitude(&m, ell).is_some() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// `u(A, B) = [[A, B], [u B, A]]`.
pub fn u_matrix(a: &[u8; 4], b: &[u8; 4], u: u8, ell: u8) -> Elem {
    let a: [i64; 4] = a.map(|x| x as i64);
    let b: [i64; 4] = b.map(|x| x as i64);
    let u = u as i64;
    packed::from_rows(
        [
            [a[0], a[1], b[0], b[1]],
            [a[2], a[3], b[2], b[3]],
            [u * b[0], u * b[1], a[0], a[1]],
            [u * b[2], u * b[3], a[2], a[3]],
        ],
        ell,
    )
}

fn all_m2(ell: u8) -> Vec<[u8; 4]> {
    let mut out = Vec::new();
    for a in 0..ell {
        for b in 0..ell {
            for c in 0..ell {
                for d in 0..ell {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

fn case8_set(ell: u8, u: u8) -> Vec<Elem> {
    let m2 = all_m2(ell);
    let mut out = Vec::new();
    for a in &m2 {
        for b in &m2 {
            let m = u_matrix(a, b, u, ell);
            if packed::similitude(&m, ell).is_some() {
                out.push(m);
            }
        }
    }
    out
}

/// Both displayed tensor shapes `GL2 x D` with `v, z` from the dihedral factor.
fn case9_set(ell: u8) -> Vec<Elem> {
    let mut out = Vec::new();
    for m in all_m2(ell) {
        let (a, b, c, d) = (m[0] as i64, m[1] as i64, m[2] as i64, m[3] as i64);
        for v in 0..ell as i64 {
            for z in 0..ell as i64 {
                let first = packed::from_rows(
                    [[a * v, 0, b * v, 0], [0, a * z, 0, b * z], [c * v, 0, d * v, 0], [0, c * z, 0, d * z]],
                    ell,
                );
                let second = packed::from_rows(
                    [[0, a * v, 0, b * v], [a * z, 0, b * z, 0], [0, c * v, 0, d * v], [c * z, 0, d * z, 0]],
                    ell,
                );
                for x in [first, second] {
                    if packed::similitude(&x, ell).is_some() {
                        out.push(x);
                    }
                }
            }
        }
    }
    out
}

/// Generating set taken greedily from `candidates`: an element is kept when
/// it is not already in the group generated by the earlier ones.
pub fn incremental_generators(ell: u64, candidates: &[Elem], limit: usize) -> Result<(Vec<Elem>, GroupSet)> {
    let mut gens: Vec<Elem> = Vec::new();
    let mut group = closure(ell, &gens, limit)?;
    for c in candidates {
        if !group.contains(c) {
            gens.push(*c);
            group = closure(ell, &gens, limit)?;
        }
    }
    Ok((gens, group))
}

/// Builds the subgroup of the given family.
pub fn build_family(spec: &FamilySpec) -> Result<Family> {
    spec.check()?;
    let ell = spec.ell as u8;
    let swap = block_swap(ell);
    let (literal, extra): (Vec<Elem>, Vec<Elem>) = match spec.case {
        Case::LeviB => (torus_set(ell), vec![]),
        Case::LeviP => (siegel_levi_set(ell), vec![]),
        Case::LeviQ => (klingen_levi_set(ell), vec![]),
        Case::Hen => (hen_set(ell), vec![]),
        Case::Case5 => (siegel_levi_set(ell), vec![swap]),
        Case::Case6 => (hen_set(ell), vec![swap]),
        Case::Case7 => {
            let (a, b) = spec.ab.unwrap();
            (case7_set(ell, spec.u.unwrap(), a, b), vec![swap])
        }
        Case::Case8 => (case8_set(ell, spec.u.unwrap()), vec![swap]),
        Case::Case9 => (case9_set(ell), vec![]),
    };
    let literal_set = GroupSet::from_elements(spec.ell, literal.iter().copied())?;
    let mut candidates: Vec<Elem> = literal_set.elements().collect();
    candidates.extend(extra.iter().copied());
    // the ambient group bounds every family
    let limit = super::group::sp4_order(spec.ell) as usize * (spec.ell as usize - 1);
    let (generators, group) = incremental_generators(spec.ell, &candidates, limit)?;
    let literal_is_group = group == literal_set;
    Ok(Family {
        spec: spec.clone(),
        group,
        literal_size: literal_set.order(),
        extra_generators: extra,
        generators,
        literal_is_group,
    })
}
