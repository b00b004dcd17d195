//! Dense bivariate polynomials over Gaussian rationals.

use num_complex::Complex64;

use crate::poly::Polynomial;
use crate::scalar::ComplexRational;

/// Coefficients indexed as `coeffs[i][j]` for the monomial `z^i w^j`.
/// The bounding box is kept tight: the last row and the last column each
/// contain a nonzero entry (the zero polynomial is the empty grid).
#[derive(Clone, PartialEq)]
pub struct BivariatePolynomial {
    coeffs: Vec<Vec<ComplexRational>>,
}

impl std::fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    terms.push(format!("({c})z^{i}w^{j}"));
                }
            }
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl BivariatePolynomial {
    pub fn new(mut coeffs: Vec<Vec<ComplexRational>>) -> Self {
        // pad ragged rows to a rectangle
        let w = coeffs.iter().map(|r| r.len()).max().unwrap_or(0);
        for r in coeffs.iter_mut() {
            r.resize(w, ComplexRational::zero());
        }
        let mut p = BivariatePolynomial { coeffs };
        p.tighten();
        p
    }

    pub fn zero() -> Self {
        BivariatePolynomial { coeffs: vec![] }
    }

    fn tighten(&mut self) {
        while self
            .coeffs
            .last()
            .is_some_and(|r| r.iter().all(|c| c.is_zero()))
        {
            self.coeffs.pop();
        }
        let w = self
            .coeffs
            .iter()
            .map(|r| r.len() - r.iter().rev().take_while(|c| c.is_zero()).count())
            .max()
            .unwrap_or(0);
        for r in self.coeffs.iter_mut() {
            r.truncate(w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in z (rows), `None` when zero.
    pub fn deg_z(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree in w (columns), `None` when zero.
    pub fn deg_w(&self) -> Option<usize> {
        self.coeffs.first().map(|r| r.len() - 1)
    }

    pub fn coeff(&self, i: usize, j: usize) -> ComplexRational {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(ComplexRational::zero)
    }

    pub fn rows(&self) -> &[Vec<ComplexRational>] {
        &self.coeffs
    }

    pub fn eval(&self, z: &ComplexRational, w: &ComplexRational) -> ComplexRational {
        // Horner in z over Horner in w
        let mut acc = ComplexRational::zero();
        for row in self.coeffs.iter().rev() {
            let mut rv = ComplexRational::zero();
            for c in row.iter().rev() {
                rv = rv * w.clone() + c.clone();
            }
            acc = acc * z.clone() + rv;
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64, w: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for row in self.coeffs.iter().rev() {
            let mut rv = Complex64::new(0.0, 0.0);
            for c in row.iter().rev() {
                rv = rv * w + c.to_complex64();
            }
            acc = acc * z + rv;
        }
        acc
    }

    /// Substitutes polynomials for both variables:
    /// `sum_{ij} c_ij A(t)^i B(t)^j`.
    pub fn compose_univariate(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        let mut apow = Polynomial::one();
        for row in &self.coeffs {
            let mut bpow = Polynomial::one();
            let mut row_acc = Polynomial::zero();
            for c in row {
                if !c.is_zero() {
                    row_acc = row_acc.add(&bpow.scale(c));
                }
                bpow = bpow.mul(b);
            }
            acc = acc.add(&apow.mul(&row_acc));
            apow = apow.mul(a);
        }
        acc
    }

    pub fn scale(&self, c: &ComplexRational) -> BivariatePolynomial {
        BivariatePolynomial::new(
            self.coeffs
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
        )
    }

    /// View coefficients as a float grid.
    pub fn to_complex_grid(&self) -> Vec<Vec<Complex64>> {
        self.coeffs
            .iter()
            .map(|r| r.iter().map(|c| c.to_complex64()).collect())
            .collect()
    }
}
