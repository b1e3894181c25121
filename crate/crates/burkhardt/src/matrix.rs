//! Small dense matrices over an exact ring. Everything here is sized for
//! the 4x4 and 5x5 representation matrices and 2x6 Jacobians that occur in
//! practice; no attempt is made at large-scale linear algebra.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

pub fn ring_pow<R: Ring>(base: &R, e: u32) -> R {
    let mut acc = R::one();
    for _ in 0..e {
        acc = acc * base.clone();
    }
    acc
}

impl<R: Ring> Mat<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut R {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Mat<S> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &Mat<R>) -> Mat<R> {
        assert_eq!(self.cols, other.rows, "matrix dimensions");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j).clone() + a.clone() * other.at(k, j).clone();
                    *out.at_mut(i, j) = v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for j in 0..self.cols {
                    acc = acc + self.at(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &R) -> Mat<R> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn trace(&self) -> R {
        assert_eq!(self.rows, self.cols);
        let mut acc = R::zero();
        for i in 0..self.rows {
            acc = acc + self.at(i, i).clone();
        }
        acc
    }

    /// Determinant by cofactor expansion; fine for the small sizes here,
    /// and requires no division so it works over any ring.
    pub fn det(&self) -> R {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        match n {
            0 => R::one(),
            1 => self.at(0, 0).clone(),
            2 => {
                self.at(0, 0).clone() * self.at(1, 1).clone()
                    - self.at(0, 1).clone() * self.at(1, 0).clone()
            }
            _ => {
                let mut acc = R::zero();
                for j in 0..n {
                    let c = self.at(0, j);
                    if c.is_zero() {
                        continue;
                    }
                    let minor = self.minor(0, j);
                    let term = c.clone() * minor.det();
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    fn minor(&self, row: usize, col: usize) -> Mat<R> {
        let mut m = Mat::zero(self.rows - 1, self.cols - 1);
        let mut ri = 0;
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            let mut ci = 0;
            for j in 0..self.cols {
                if j == col {
                    continue;
                }
                *m.at_mut(ri, ci) = self.at(i, j).clone();
                ci += 1;
            }
            ri += 1;
        }
        m
    }

    /// All 2x2 minors vanish, i.e. rank <= 1. Works over any ring.
    pub fn rank_at_most_one(&self) -> bool {
        for i1 in 0..self.rows {
            for i2 in i1 + 1..self.rows {
                for j1 in 0..self.cols {
                    for j2 in j1 + 1..self.cols {
                        let d = self.at(i1, j1).clone() * self.at(i2, j2).clone()
                            - self.at(i1, j2).clone() * self.at(i2, j1).clone();
                        if !d.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

impl<R: Field> Mat<R> {
    /// Row-reduce a copy and return the rank.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..m.cols {
            let pivot = (row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(pr) = pivot else { continue };
            m.swap_rows(pr, row);
            let inv = m.at(row, col).inv();
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let f = m.at(r, col).clone() * inv.clone();
                for c in col..m.cols {
                    let v = m.at(r, c).clone() - f.clone() * m.at(row, c).clone();
                    *m.at_mut(r, c) = v;
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Solve M x = b uniquely; returns None when the system is singular or
    /// inconsistent.
    pub fn solve(&self, b: &[R]) -> Option<Vec<R>> {
        assert_eq!(self.rows, b.len());
        let n = self.cols;
        let mut m = self.clone();
        let mut rhs = b.to_vec();
        let mut where_col = vec![usize::MAX; n];
        let mut row = 0;
        for col in 0..n {
            let pivot = (row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(pr) = pivot else { continue };
            m.swap_rows(pr, row);
            rhs.swap(pr, row);
            let inv = m.at(row, col).inv();
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let f = m.at(r, col).clone() * inv.clone();
                for c in col..n {
                    let v = m.at(r, c).clone() - f.clone() * m.at(row, c).clone();
                    *m.at_mut(r, c) = v;
                }
                rhs[r] = rhs[r].clone() - f * rhs[row].clone();
            }
            where_col[col] = row;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        // remaining rows must be consistent
        for r in row..m.rows {
            if !rhs[r].is_zero() {
                return None;
            }
        }
        let mut x = vec![R::zero(); n];
        for col in 0..n {
            let r = where_col[col];
            if r == usize::MAX {
                // underdetermined: demand a unique solution
                return None;
            }
            x[col] = rhs[r].clone() * m.at(r, col).inv();
        }
        Some(x)
    }
}

impl<R: Ring> std::fmt::Debug for Mat<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn det_and_rank() {
        let m = Mat::from_rows(vec![
            vec![q(1), q(2), q(3)],
            vec![q(4), q(5), q(6)],
            vec![q(7), q(8), q(10)],
        ]);
        assert_eq!(m.det(), q(-3));
        assert_eq!(m.rank(), 3);
        let s = Mat::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert!(s.rank_at_most_one());
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn solve_unique() {
        let m = Mat::from_rows(vec![vec![q(2), q(1)], vec![q(1), q(3)]]);
        let x = m.solve(&[q(5), q(10)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(5), q(10)]);
    }
}
