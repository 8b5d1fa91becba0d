//! Weyl group of GSp4, characters of the real torus and the Casimir map.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::{Field, Mat, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum WeylGen {
    S1,
    S2,
}

impl WeylGen {
    pub fn matrix<F: Field>(self, sample: &F) -> Mat<F> {
        match self {
            WeylGen::S1 => Mat::from_i64(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]], sample),
            WeylGen::S2 => Mat::from_i64(&[&[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0], &[0, -1, 0, 0]], sample),
        }
    }

    /// Action on torus exponents: row `i` gives the exponents of the new `t_i`
    /// in the old `(t1, t2, t0)`.
    fn exponent_matrix(self) -> [[i64; 3]; 3] {
        match self {
            WeylGen::S1 => [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
            WeylGen::S2 => [[1, 0, 0], [0, -1, 1], [0, 0, 1]],
        }
    }
}

/// A word in the generators, read as a matrix product left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct WeylWord(pub Vec<WeylGen>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(WeylWord::identity());
        }
        let mut out = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix("s1") {
                out.push(WeylGen::S1);
                rest = r;
            } else if let Some(r) = rest.strip_prefix("s2") {
                out.push(WeylGen::S2);
                rest = r;
            } else {
                return Err(Error::Parse(format!("bad Weyl word {s:?}")));
            }
        }
        Ok(WeylWord(out))
    }

    pub fn matrix<F: Field>(&self, sample: &F) -> Mat<F> {
        self.0.iter().fold(Mat::identity(4, sample), |acc, g| acc * g.matrix(sample))
    }

    fn exponent_matrix(&self) -> [[i64; 3]; 3] {
        let mut acc = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        // the rightmost letter acts first, so compose on the right
        for g in &self.0 {
            let m = g.exponent_matrix();
            let mut next = [[0; 3]; 3];
            for (i, row) in next.iter_mut().enumerate() {
                for (j, x) in row.iter_mut().enumerate() {
                    *x = (0..3).map(|k| acc[i][k] * m[k][j]).sum();
                }
            }
            acc = next;
        }
        acc
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for g in &self.0 {
            write!(f, "{}", if *g == WeylGen::S1 { "s1" } else { "s2" })?;
        }
        Ok(())
    }
}

/// Action on a torus triple `(t1, t2, t0)` induced by `t -> w t w^-1`.
pub fn weyl_act<F: Field>(w: &WeylWord, t: (F, F, F)) -> Result<(F, F, F)> {
    let mut t = t;
    for g in w.0.iter().rev() {
        t = match g {
            WeylGen::S1 => (t.1, t.0, t.2),
            WeylGen::S2 => {
                let b = t.2.div(&t.1).ok_or(Error::Singular)?;
                (t.0, b, t.2)
            }
        };
    }
    Ok(t)
}

/// The eight Weyl group elements as shortest words, in breadth-first order.
pub fn weyl_elements() -> Vec<WeylWord> {
    let mut seen = BTreeSet::new();
    let mut out = vec![WeylWord::identity()];
    seen.insert(WeylWord::identity().exponent_matrix());
    let mut k = 0;
    while k < out.len() {
        for g in [WeylGen::S1, WeylGen::S2] {
            let mut w = out[k].0.clone();
            w.push(g);
            let w = WeylWord(w);
            if seen.insert(w.exponent_matrix()) {
                out.push(w);
            }
        }
        k += 1;
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Trivial,
    Sgn,
}

impl Sign {
    fn mul(self, o: Sign) -> Sign {
        if self == o { Sign::Trivial } else { Sign::Sgn }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Sign::Trivial { "1" } else { "sgn" })
    }
}

/// The character `t(t1,t2,t0) -> eps1(t1)|t1|^s1 * eps2(t2)|t2|^s2 * eps0(t0)|t0|^s0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CharacterData {
    pub eps1: Sign,
    pub eps2: Sign,
    pub eps0: Sign,
    pub s1: Rational,
    pub s2: Rational,
    pub s0: Rational,
}

impl CharacterData {
    pub fn signs(eps1: Sign, eps2: Sign, eps0: Sign) -> Self {
        CharacterData { eps1, eps2, eps0, s1: Rational::zero(), s2: Rational::zero(), s0: Rational::zero() }
    }

    /// `chi o g` for a generator.
    fn compose(&self, g: WeylGen) -> Self {
        match g {
            WeylGen::S1 => CharacterData {
                eps1: self.eps2,
                eps2: self.eps1,
                eps0: self.eps0,
                s1: self.s2.clone(),
                s2: self.s1.clone(),
                s0: self.s0.clone(),
            },
            // chi(t1, t0/t2, t0)
            WeylGen::S2 => CharacterData {
                eps1: self.eps1,
                eps2: self.eps2,
                eps0: self.eps0.mul(self.eps2),
                s1: self.s1.clone(),
                s2: -self.s2.clone(),
                s0: &self.s0 + &self.s2,
            },
        }
    }

    /// `(w chi)(t) = chi(w^-1 t w)`.
    pub fn act(&self, w: &WeylWord) -> Self {
        w.0.iter().rev().fold(self.clone(), |chi, &g| chi.compose(g))
    }
}

impl fmt::Display for CharacterData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |e: Sign, s: &Rational| {
            if s.is_zero() { e.to_string() } else { format!("{e}|.|^{s}") }
        };
        write!(
            f,
            "chi({},{},{})",
            part(self.eps1, &self.s1),
            part(self.eps2, &self.s2),
            part(self.eps0, &self.s0)
        )
    }
}

/// Orbit (sorted) and stabilizer (shortest words) of a character.
pub fn weyl_orbit_and_stabilizer(chi: &CharacterData) -> (Vec<CharacterData>, Vec<WeylWord>) {
    let mut orbit = BTreeSet::new();
    let mut stab = Vec::new();
    for w in weyl_elements() {
        let c = chi.act(&w);
        if c == *chi {
            stab.push(w);
        }
        orbit.insert(c);
    }
    (orbit.into_iter().collect(), stab)
}

/// Eigenvalues of the two Casimir-type operators on the spherical vector.
pub fn casimir_pair(s1: &Rational, s2: &Rational) -> (Rational, Rational) {
    let a = s1 * s1;
    let b = s2 * s2;
    let c1 = (&(&a + &b) - &Rational::from_int(5)) / Rational::from_int(12);
    (c1, &a * &b)
}

/// All rational `(s1, s2)` with `s1 >= s2 >= 0` and `casimir_pair(s1, s2) = (c1, c2)`.
///
/// `s1^2` and `s2^2` are the roots of `z^2 - (12 c1 + 5) z + c2`, so the
/// solution set is found exactly rather than by search.
pub fn infinity_type_solve(c1: &Rational, c2: &Rational) -> Vec<(Rational, Rational)> {
    let sum = &(c1 * &Rational::from_int(12)) + &Rational::from_int(5);
    let disc = &(&sum * &sum) - &(c2 * &Rational::from_int(4));
    let Some(d) = disc.sqrt_exact() else {
        return Vec::new();
    };
    let half = Rational::new(1, 2);
    let x = &(&sum + &d) * &half;
    let y = &(&sum - &d) * &half;
    match (x.sqrt_exact(), y.sqrt_exact()) {
        (Some(a), Some(b)) => vec![(a, b)],
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{Fp, Rational};
    use crate::gsp4::torus;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn generator_actions() {
        let t = (q(2), q(3), q(5));
        let w = |s| WeylWord::parse(s).unwrap();
        assert_eq!(weyl_act(&w("s1"), t.clone()).unwrap(), (q(3), q(2), q(5)));
        assert_eq!(weyl_act(&w("s2"), t.clone()).unwrap(), (q(2), Rational::new(5, 3), q(5)));
        assert_eq!(weyl_act(&w("s1s1"), t.clone()).unwrap(), t);
    }

    #[test]
    fn action_matches_conjugation() {
        let s = Fp::new(7, 0);
        let t = (Fp::new(7, 2), Fp::new(7, 3), Fp::new(7, 5));
        for w in weyl_elements() {
            let m = w.matrix(&s);
            let conj = &(&m * &torus(&t.0, &t.1, &t.2).unwrap()) * &m.inverse().unwrap();
            let (a, b, c) = weyl_act(&w, t).unwrap();
            assert_eq!(conj, torus(&a, &b, &c).unwrap(), "word {w}");
        }
    }

    #[test]
    fn eight_elements() {
        let names: Vec<String> = weyl_elements().iter().map(|w| w.to_string()).collect();
        assert_eq!(names, ["1", "s1", "s2", "s1s2", "s2s1", "s1s2s1", "s2s1s2", "s1s2s1s2"]);
    }

    #[test]
    fn orbit_of_one_sgn_sgn() {
        use Sign::*;
        let chi = CharacterData::signs(Trivial, Sgn, Sgn);
        let (orbit, stab) = weyl_orbit_and_stabilizer(&chi);
        let expect: BTreeSet<_> = [
            CharacterData::signs(Trivial, Sgn, Trivial),
            CharacterData::signs(Sgn, Trivial, Trivial),
            CharacterData::signs(Trivial, Sgn, Sgn),
            CharacterData::signs(Sgn, Trivial, Sgn),
        ]
        .into_iter()
        .collect();
        assert_eq!(orbit.into_iter().collect::<BTreeSet<_>>(), expect);
        assert_eq!(stab, vec![WeylWord::identity(), WeylWord::parse("s1s2s1").unwrap()]);
    }

    #[test]
    fn trivial_character_fixed() {
        use Sign::*;
        let (orbit, stab) = weyl_orbit_and_stabilizer(&CharacterData::signs(Trivial, Trivial, Trivial));
        assert_eq!((orbit.len(), stab.len()), (1, 8));
    }

    #[test]
    fn orbit_stabilizer_for_all_sign_patterns() {
        use Sign::*;
        for e1 in [Trivial, Sgn] {
            for e2 in [Trivial, Sgn] {
                for e0 in [Trivial, Sgn] {
                    let (o, s) = weyl_orbit_and_stabilizer(&CharacterData::signs(e1, e2, e0));
                    assert_eq!(o.len() * s.len(), 8);
                }
            }
        }
    }

    #[test]
    fn casimir_examples() {
        assert_eq!(casimir_pair(&q(0), &q(0)), (Rational::new(-5, 12), q(0)));
        assert_eq!(casimir_pair(&q(1), &q(2)), (q(0), q(4)));
        assert_eq!(casimir_pair(&q(2), &q(1)), casimir_pair(&q(1), &q(2)));
        assert_eq!(infinity_type_solve(&Rational::new(-5, 12), &q(0)), vec![(q(0), q(0))]);
        assert_eq!(infinity_type_solve(&q(0), &q(4)), vec![(q(2), q(1))]);
        assert!(infinity_type_solve(&q(-1), &q(0)).is_empty());
    }

    #[test]
    fn conjugacy_identity() {
        let one = q(1);
        let s1 = WeylGen::S1.matrix(&one);
        let a = Mat::diag(&[q(-1), q(1), q(1), q(-1)]);
        assert_eq!(&(&s1 * &a) * &s1, Mat::diag(&[q(1), q(-1), q(-1), q(1)]));
    }
}
