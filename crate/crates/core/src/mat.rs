//! Dense matrices over an exact ring, with exact linear algebra (rank,
//! kernel, solving, determinant, characteristic polynomial) over a field.

use crate::poly::Polynomial;
use crate::ring::{Conj, Field, Ring};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MatError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

impl<T: Ring> Mat<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc + self.at(i, i).clone();
        }
        acc
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    if !self.at(i, j).is_zero() && !v[j].is_zero() {
                        acc = acc + self.at(i, j).clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Mat::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate a polynomial at this matrix.
    pub fn poly_eval(&self, p: &Polynomial<T>) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Mat::zero(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &acc * self;
            for i in 0..n {
                let v = acc.at(i, i).clone() + c.clone();
                acc.set(i, i, v);
            }
        }
        acc
    }
}

impl<T: Ring + Conj> Mat<T> {
    pub fn conj_transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && self.conj_transpose() == *self
    }
}

/// Reduced row echelon form together with its pivot columns.
pub struct Rref<T> {
    pub mat: Mat<T>,
    pub pivots: Vec<usize>,
}

impl<T: Field> Mat<T> {
    pub fn rref(&self) -> Rref<T> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, col).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                let tmp = m.at(r, j).clone();
                m.set(r, j, m.at(p, j).clone());
                m.set(p, j, tmp);
            }
            let inv = m.at(r, col).try_inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = m.at(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.at(i, col).is_zero() {
                    continue;
                }
                let f = m.at(i, col).clone();
                for j in 0..m.cols {
                    let v = m.at(i, j).clone() - f.clone() * m.at(r, j).clone();
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        Rref { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Exact basis of the right null space. Empty iff full column rank.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let Rref { mat, pivots } = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut vec = vec![T::zero(); self.cols];
            vec[free] = T::one();
            for (row, &p) in pivots.iter().enumerate() {
                vec[p] = -mat.at(row, free).clone();
            }
            basis.push(vec);
        }
        basis
    }

    /// One exact solution of self * x = b, or None when inconsistent.
    pub fn solve(&self, b: &[T]) -> Result<Option<Vec<T>>, MatError> {
        if b.len() != self.rows {
            return Err(MatError::DimensionMismatch(format!(
                "rhs length {} vs {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let Rref { mat, pivots } = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // pivot in the rhs column: inconsistent
        }
        let mut x = vec![T::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = mat.at(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn det(&self) -> Result<T, MatError> {
        if !self.is_square() {
            return Err(MatError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !m.at(i, col).is_zero()) else {
                return Ok(T::zero());
            };
            if p != col {
                for j in 0..n {
                    let tmp = m.at(col, j).clone();
                    m.set(col, j, m.at(p, j).clone());
                    m.set(p, j, tmp);
                }
                det = -det;
            }
            let pivot = m.at(col, col).clone();
            det = det * pivot.clone();
            let inv = pivot.try_inv().expect("nonzero pivot");
            for i in col + 1..n {
                if m.at(i, col).is_zero() {
                    continue;
                }
                let f = m.at(i, col).clone() * inv.clone();
                for j in col..n {
                    let v = m.at(i, j).clone() - f.clone() * m.at(col, j).clone();
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Monic characteristic polynomial det(tI - M), by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> Result<Polynomial<T>, MatError> {
        if !self.is_square() {
            return Err(MatError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m: Mat<T> = Mat::zero(n, n);
        let mut c = T::one();
        for k in 1..=n {
            // M_k = A (M_{k-1} + c_{k-1} I)
            for i in 0..n {
                let v = m.at(i, i).clone() + c.clone();
                m.set(i, i, v);
            }
            m = self * &m;
            let kk = T::from_int(k as i64).try_inv().expect("char 0 field");
            c = -(m.trace() * kk);
            coeffs[n - k] = c.clone();
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }

    /// True iff the product of (M - r I) over the given roots vanishes.
    pub fn min_poly_divides(&self, roots: &[T]) -> Result<bool, MatError> {
        if !self.is_square() {
            return Err(MatError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut acc = Mat::identity(n);
        for r in roots {
            let mut shifted = self.clone();
            for i in 0..n {
                let v = shifted.at(i, i).clone() - r.clone();
                shifted.set(i, i, v);
            }
            acc = &acc * &shifted;
        }
        Ok(acc.is_zero())
    }
}

impl<T: Ring + fmt::Display> Mat<T> {
    /// CSV with labeled rows/columns, entries via Display. Fields that
    /// contain commas or quotes are quoted per RFC 4180.
    pub fn to_csv(&self, row_labels: &[String], col_labels: &[String]) -> String {
        assert_eq!(row_labels.len(), self.rows);
        assert_eq!(col_labels.len(), self.cols);
        fn field(s: &str) -> String {
            if s.contains(',') || s.contains('"') {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        }
        let cols: Vec<String> = col_labels.iter().map(|l| field(l)).collect();
        let mut out = String::new();
        out.push_str(&format!(",{}\n", cols.join(",")));
        for i in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            out.push_str(&format!("{},{}\n", field(&row_labels[i]), cells.join(",")));
        }
        out
    }
}

impl<T: Ring> Mul for &Mat<T> {
    type Output = Mat<T>;
    fn mul(self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out: Mat<T> = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl<T: Ring> Add for &Mat<T> {
    type Output = Mat<T>;
    fn add(self, rhs: &Mat<T>) -> Mat<T> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() + rhs.at(i, j).clone()
        })
    }
}

impl<T: Ring> Sub for &Mat<T> {
    type Output = Mat<T>;
    fn sub(self, rhs: &Mat<T>) -> Mat<T> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() - rhs.at(i, j).clone()
        })
    }
}

impl<T: Ring> Neg for &Mat<T> {
    type Output = Mat<T>;
    fn neg(self) -> Mat<T> {
        Mat::from_fn(self.rows, self.cols, |i, j| -self.at(i, j).clone())
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn m(rows: Vec<Vec<i64>>) -> Mat<Scalar> {
        Mat::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Scalar::from_int).collect())
                .collect(),
        )
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(m(vec![vec![1, 0], vec![0, 1]]).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_is_full() {
        assert_eq!(m(vec![vec![0, 0], vec![0, 0]]).kernel_basis().len(), 2);
    }

    #[test]
    fn rank_nullity() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(a.rank() + a.kernel_basis().len(), 3);
    }

    #[test]
    fn char_poly_of_identity() {
        // (t-1)^2 = t^2 - 2t + 1
        let p = m(vec![vec![1, 0], vec![0, 1]]).char_poly().unwrap();
        assert_eq!(p.coeff(0), Scalar::from_int(1));
        assert_eq!(p.coeff(1), Scalar::from_int(-2));
        assert_eq!(p.coeff(2), Scalar::from_int(1));
    }

    #[test]
    fn char_poly_of_diagonal() {
        let d = m(vec![vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 4]]);
        let p = d.char_poly().unwrap();
        for r in [1, 2, 4] {
            assert!(p.eval(&Scalar::from_int(r)).is_zero());
        }
        assert!(!p.eval(&Scalar::from_int(3)).is_zero());
    }

    #[test]
    fn cayley_hamilton() {
        let a = m(vec![vec![1, 2, 0], vec![3, -1, 1], vec![0, 5, 2]]);
        let p = a.char_poly().unwrap();
        assert!(a.poly_eval(&p).is_zero());
    }

    #[test]
    fn solve_consistent_and_not() {
        let id = m(vec![vec![1, 0], vec![0, 1]]);
        let b = vec![Scalar::from_int(3), Scalar::from_int(-4)];
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);
        let a = m(vec![vec![1], vec![1]]);
        let bad = vec![Scalar::from_int(1), Scalar::from_int(2)];
        assert!(a.solve(&bad).unwrap().is_none());
    }

    #[test]
    fn min_poly_divides_identity() {
        let id = m(vec![vec![1, 0], vec![0, 1]]);
        assert!(id.min_poly_divides(&[Scalar::from_int(1)]).unwrap());
        assert!(!id.min_poly_divides(&[Scalar::from_int(2)]).unwrap());
    }

    #[test]
    fn conj_transpose_involution_and_antihomomorphism() {
        let i = Scalar::i();
        let a = Mat::from_rows(vec![
            vec![Scalar::from_int(1), i.clone()],
            vec![Scalar::from_ratio(1, 2), -i.clone()],
        ]);
        let b = Mat::from_rows(vec![
            vec![i.clone(), Scalar::zero()],
            vec![Scalar::from_int(2), Scalar::from_int(1)],
        ]);
        assert_eq!(a.conj_transpose().conj_transpose(), a);
        assert_eq!((&a * &b).conj_transpose(), &b.conj_transpose() * &a.conj_transpose());
    }
}
