//! Dense exact matrices over Gaussian rationals.
//!
//! Determinants use fraction-free Bareiss elimination after clearing row
//! denominators, which keeps intermediate entries integral and bounds
//! coefficient swell.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::ComplexRational;

/// Row-major exact matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<ComplexRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![ComplexRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows_in: Vec<Vec<ComplexRational>>) -> Self {
        let rows = rows_in.len();
        let cols = rows_in.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows * cols);
        for r in rows_in {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ComplexRational::one();
        }
        m
    }

    /// Submatrix picked by row and column index lists (0-based).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m[(i, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a * &rhs[(k, j)];
                    let cur = out[(i, j)].clone();
                    out[(i, j)] = cur + add;
                }
            }
        }
        out
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> ComplexRational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return ComplexRational::one();
        }
        // Clear denominators per row so Bareiss runs over Gaussian integers.
        let mut a = Vec::with_capacity(n);
        let mut scale = BigRational::one();
        for i in 0..n {
            let mut l = BigInt::one();
            for j in 0..n {
                let e = &self[(i, j)];
                l = l.lcm(e.re.denom());
                l = l.lcm(e.im.denom());
            }
            let lr = BigRational::from_integer(l);
            scale *= &lr;
            let f = ComplexRational::new(lr, BigRational::zero());
            let row: Vec<ComplexRational> =
                (0..n).map(|j| &self[(i, j)] * &f).collect();
            a.push(row);
        }

        let mut sign = false;
        let mut prev = ComplexRational::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                // pivot search
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = !sign;
                    }
                    None => return ComplexRational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    // exact division in the Bareiss scheme
                    a[i][j] = num / prev.clone();
                }
                a[i][k] = ComplexRational::zero();
            }
            prev = a[k][k].clone();
        }
        let mut d = a[n - 1][n - 1].clone();
        if sign {
            d = -d;
        }
        let inv_scale = ComplexRational::new(scale.recip(), BigRational::zero());
        d * inv_scale
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a[(col, j)].clone();
                    a[(col, j)] = a[(pivot, j)].clone();
                    a[(pivot, j)] = tmp;
                    let tmp = inv[(col, j)].clone();
                    inv[(col, j)] = inv[(pivot, j)].clone();
                    inv[(pivot, j)] = tmp;
                }
            }
            let p = a[(col, col)].inv()?;
            for j in 0..n {
                a[(col, j)] = a[(col, j)].clone() * p.clone();
                inv[(col, j)] = inv[(col, j)].clone() * p.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let s = f.clone() * a[(col, j)].clone();
                    a[(r, j)] = a[(r, j)].clone() - s;
                    let s = f.clone() * inv[(col, j)].clone();
                    inv[(r, j)] = inv[(r, j)].clone() - s;
                }
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = ComplexRational;
    fn index(&self, (i, j): (usize, usize)) -> &ComplexRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ComplexRational {
        &mut self.data[i * self.cols + j]
    }
}
