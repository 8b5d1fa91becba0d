use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Field;

/// Dense row-major matrix over a field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Mat { rows, cols, data }
    }

    /// Integer matrix mapped into the field of `sample`.
    pub fn from_i64(rows: &[&[i64]], sample: &F) -> Self {
        Mat::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| sample.from_i64_like(x)).collect()).collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize, sample: &F) -> Self {
        Mat { rows, cols, data: vec![sample.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, sample: &F) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { sample.one_like() } else { sample.zero_like() })
    }

    pub fn diag(entries: &[F]) -> Self {
        let n = entries.len();
        Mat::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { entries[0].zero_like() })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn sample(&self) -> &F {
        &self.data[0]
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_cols(cols: &[Vec<F>]) -> Self {
        let r = cols[0].len();
        Mat::from_fn(r, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Mat::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(v[0].zero_like(), |acc, j| acc + self.get(i, j).clone() * v[j].clone())
            })
            .collect()
    }

    pub fn is_scalar(&self) -> Option<F> {
        let s = self.get(0, 0).clone();
        (*self == Mat::identity(self.rows, &s).scale(&s)).then_some(s)
    }

    pub fn trace(&self) -> F {
        (0..self.rows).fold(self.sample().zero_like(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Mat::identity(self.rows, self.sample());
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// Row echelon form in place; returns (pivot columns, determinant sign/scale factor).
    fn eliminate(&mut self, reduced: bool) -> (Vec<usize>, F) {
        let mut factor = self.sample().one_like();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
                factor = -factor;
            }
            let piv = self.get(r, c).clone();
            let inv = piv.inv().expect("nonzero pivot");
            factor = factor * piv;
            for j in 0..self.cols {
                let v = self.get(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            let targets: Vec<usize> =
                if reduced { (0..self.rows).filter(|&i| i != r).collect() } else { (r + 1..self.rows).collect() };
            for i in targets {
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = self.get(i, j).clone() - f.clone() * self.get(r, j).clone();
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, factor)
    }

    pub fn det(&self) -> F {
        assert!(self.is_square());
        let mut m = self.clone();
        let (pivots, factor) = m.eliminate(false);
        if pivots.len() < self.rows {
            self.sample().zero_like()
        } else {
            factor
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate(false).0.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let id = Mat::identity(n, self.sample());
        let mut aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n { self.get(i, j).clone() } else { id.get(i, j - n).clone() }
        });
        let (pivots, _) = aug.eliminate(true);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| aug.get(i, j + n).clone()))
    }

    /// Basis of the right kernel `{v : self * v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let (pivots, _) = m.eliminate(true);
        let zero = self.sample().zero_like();
        let one = self.sample().one_like();
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![zero.clone(); self.cols];
                v[free] = one.clone();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.get(r, free).clone();
                }
                v
            })
            .collect()
    }
}

impl<F: Field> Mul for Mat<F> {
    type Output = Mat<F>;
    fn mul(self, o: Mat<F>) -> Mat<F> {
        &self * &o
    }
}

impl<F: Field> Mul<&Mat<F>> for &Mat<F> {
    type Output = Mat<F>;
    fn mul(self, o: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let zero = self.sample().zero_like();
        Mat::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).fold(zero.clone(), |acc, k| acc + self.get(i, k).clone() * o.get(k, j).clone())
        })
    }
}

impl<F: Field> Add for Mat<F> {
    type Output = Mat<F>;
    fn add(self, o: Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.into_iter().zip(o.data).map(|(a, b)| a + b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }
}

impl<F: Field> Sub for Mat<F> {
    type Output = Mat<F>;
    fn sub(self, o: Mat<F>) -> Mat<F> {
        self + (-o)
    }
}

impl<F: Field> Neg for Mat<F> {
    type Output = Mat<F>;
    fn neg(self) -> Mat<F> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.into_iter().map(|x| -x).collect() }
    }
}

impl<F: Field> fmt::Display for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{Fp, Rational};

    #[test]
    fn det_inverse_nullspace() {
        let one = Rational::one();
        let m = Mat::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]], &one);
        assert_eq!(m.det(), Rational::from_int(18));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(3, &one));
        let s = Mat::from_i64(&[&[1, 2, 3], &[2, 4, 6]], &one);
        let ns = s.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(s.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
        assert!(Mat::from_i64(&[&[1, 2], &[2, 4]], &one).inverse().is_none());
    }

    #[test]
    fn det_over_prime_field() {
        let s = Fp::new(3, 0);
        let m = Mat::from_i64(&[&[1, 1], &[1, 2]], &s);
        assert_eq!(m.det(), Fp::new(3, 1));
    }
}
