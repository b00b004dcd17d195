//! Dense univariate polynomials over Gaussian rationals, with the classical
//! resultant determinants (Sylvester, Bezout, truncated Toeplitz) and the
//! polynomial discriminant.
//!
//! Coefficients are stored in ascending degree order. The zero polynomial is
//! the empty coefficient vector and its degree is `None`; every nonzero
//! polynomial keeps a nonzero top coefficient.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{ComplexFloat, ComplexRational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<ComplexRational>,
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})z^{i}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Polynomial {
    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn new(mut coeffs: Vec<ComplexRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial::constant(ComplexRational::one())
    }

    pub fn constant(c: ComplexRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial z.
    pub fn z() -> Self {
        Polynomial::new(vec![ComplexRational::zero(), ComplexRational::one()])
    }

    /// Monic product of linear factors prod (z - r).
    pub fn from_roots(roots: &[ComplexRational]) -> Self {
        let mut p = Polynomial::one();
        for r in roots {
            p = p.mul(&Polynomial::new(vec![-r.clone(), ComplexRational::one()]));
        }
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| ComplexRational::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[ComplexRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> ComplexRational {
        self.coeffs.get(k).cloned().unwrap_or_else(ComplexRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient (errors on the zero polynomial).
    pub fn leading(&self) -> Result<ComplexRational> {
        self.coeffs.last().cloned().ok_or(Error::ZeroPolynomial)
    }

    pub fn eval(&self, z: &ComplexRational) -> ComplexRational {
        let mut acc = ComplexRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z.clone() + c.clone();
        }
        acc
    }

    pub fn eval_complex(&self, z: ComplexFloat) -> ComplexFloat {
        let mut acc = ComplexFloat::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_complex64();
        }
        acc
    }

    pub fn to_complex_coeffs(&self) -> Vec<ComplexFloat> {
        self.coeffs.iter().map(|c| c.to_complex64()).collect()
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::new(out)
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![ComplexRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                out[i + j] += t;
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &ComplexRational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder of exact long division (rhs nonzero).
    pub fn divrem(&self, rhs: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = rhs.degree().unwrap();
        let lc_inv = rhs.leading()?.inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![
            ComplexRational::zero();
            self.coeffs.len().saturating_sub(d)
        ];
        while rem.len() > d {
            let k = rem.len() - 1;
            let q = rem[k].clone() * lc_inv.clone();
            if !q.is_zero() {
                quot[k - d] = q.clone();
                for j in 0..=d {
                    let t = q.clone() * rhs.coeffs[j].clone();
                    rem[k - d + j] -= t;
                }
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= d {
                break;
            }
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic().unwrap_or_else(|_| Polynomial::zero())
    }

    /// Scales to leading coefficient one.
    pub fn monic(&self) -> Result<Polynomial> {
        let lc = self.leading()?;
        Ok(self.scale(&lc.inv()?))
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| ComplexRational::from_int(i as i64 + 1) * c.clone())
                .collect(),
        )
    }

    pub fn pow(&self, mut e: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// Coefficient-wise complex conjugate.
    pub fn conj(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    /// Coefficient reversal at formal degree `n >= deg`; the result is
    /// `z^n * p(1/z)` with coefficients padded as needed.
    pub fn reverse_at(&self, n: usize) -> Polynomial {
        let mut out = vec![ComplexRational::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i <= n, "reverse_at below actual degree");
            out[n - i] = c.clone();
        }
        Polynomial::new(out)
    }

    /// Multiplicity of `a` as a root, by repeated exact division.
    pub fn root_multiplicity(&self, a: &ComplexRational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Polynomial::new(vec![-a.clone(), ComplexRational::one()]);
        let mut m = 0usize;
        let mut p = self.clone();
        while !p.is_constant() || m == 0 {
            if !p.eval(a).is_zero() {
                break;
            }
            let (q, r) = p.divrem(&lin).unwrap();
            debug_assert!(r.is_zero());
            p = q;
            m += 1;
            if p.is_zero() {
                break;
            }
        }
        m
    }

    /// Divides out `(z - a)^m` exactly.
    pub fn strip_root(&self, a: &ComplexRational, m: usize) -> Polynomial {
        let lin = Polynomial::new(vec![-a.clone(), ComplexRational::one()]);
        let mut p = self.clone();
        for _ in 0..m {
            let (q, r) = p.divrem(&lin).unwrap();
            debug_assert!(r.is_zero());
            p = q;
        }
        p
    }

    /// First `k` Taylor coefficients of `self / g` at the origin
    /// (requires g(0) != 0); exact power-series division.
    pub fn series_div(&self, g: &Polynomial, k: usize) -> Result<Vec<ComplexRational>> {
        let g0 = g.coeff(0);
        if g0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g0_inv = g0.inv()?;
        let mut h: Vec<ComplexRational> = Vec::with_capacity(k);
        for n in 0..k {
            let mut acc = self.coeff(n);
            for j in 1..=n {
                let t = g.coeff(j) * h[n - j].clone();
                acc -= t;
            }
            h.push(acc * g0_inv.clone());
        }
        Ok(h)
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate(points: &[(ComplexRational, ComplexRational)]) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Polynomial::one();
            let mut denom = ComplexRational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&Polynomial::new(vec![-xj.clone(), ComplexRational::one()]));
                denom *= xi - xj;
            }
            let w = yi.clone() / denom;
            acc = acc.add(&basis.scale(&w));
        }
        acc
    }
}

/// The reciprocal polynomial `z^deg(P) * conj(P)(1/z)`; coefficients are
/// conjugated and reversed.
pub fn reciprocal_poly(p: &Polynomial) -> Result<Polynomial> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    Ok(p.conj().reverse_at(n))
}

/// Sylvester matrix with formal degrees (m, n); coefficient slots above the
/// actual degree are zero. Row layout is calibrated so the determinant equals
/// the Poisson product `f_m^n prod g(a_i)`.
pub fn sylvester_matrix_formal(f: &Polynomial, m: usize, g: &Polynomial, n: usize) -> Matrix {
    let size = m + n;
    let mut s = Matrix::zeros(size, size);
    for i in 0..n {
        for k in 0..=m {
            // row i holds f_m .. f_0 starting at column i
            s[(i, i + k)] = f.coeff(m - k);
        }
    }
    for i in 0..m {
        for k in 0..=n {
            s[(n + i, i + k)] = g.coeff(n - k);
        }
    }
    s
}

/// Classical polynomial resultant via the Sylvester determinant.
///
/// Conventions: `Res(f, g) = f_m^n * prod_i g(a_i)` over the roots of `f`;
/// a constant `f = c` gives `c^deg(g)` (and `Res(c, c') = 1`).
pub fn sylvester_resultant(f: &Polynomial, g: &Polynomial) -> Result<ComplexRational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    if m == 0 {
        return f.coeff(0).pow(n as i64);
    }
    if n == 0 {
        return g.coeff(0).pow(m as i64);
    }
    Ok(sylvester_matrix_formal(f, m, g, n).det())
}

/// Resultant of `f` and `g` treated at *formal* degrees `(m, n)`; this is the
/// plain Sylvester determinant with padded coefficient slots, polynomial in
/// any parameters hiding in the coefficients.
pub fn sylvester_resultant_formal(
    f: &Polynomial,
    m: usize,
    g: &Polynomial,
    n: usize,
) -> ComplexRational {
    if m == 0 && n == 0 {
        return ComplexRational::one();
    }
    if m == 0 {
        return f.coeff(0).pow(n as i64).expect("constant resultant");
    }
    if n == 0 {
        return g.coeff(0).pow(m as i64).expect("constant resultant");
    }
    sylvester_matrix_formal(f, m, g, n).det()
}

/// Resultant by the Euclidean remainder sequence over the coefficient
/// field; the same value as [`sylvester_resultant`] at a fraction of the
/// cost. `Res(f, g) = f_m^{deg g - deg r} (-1)^{deg f deg r'} ...` unrolled
/// iteratively with the usual degree bookkeeping.
pub fn resultant_prs(f: &Polynomial, g: &Polynomial) -> Result<ComplexRational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut acc = ComplexRational::one();
    let mut negate = false;
    // keep deg a <= deg b
    if a.degree().unwrap() > b.degree().unwrap() {
        if (a.degree().unwrap() * b.degree().unwrap()) % 2 == 1 {
            negate = !negate;
        }
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let m = a.degree().unwrap();
        let n = b.degree().unwrap();
        if m == 0 {
            // Res(c, b) = c^n
            let mut v = a.coeff(0).pow(n as i64)? * acc;
            if negate {
                v = -v;
            }
            return Ok(v);
        }
        // Res(a, b) = lc(a)^{n - deg r} Res(a, r) with r = b mod a
        let (_, r) = b.divrem(&a)?;
        if r.is_zero() {
            return Ok(ComplexRational::zero());
        }
        let dr = r.degree().unwrap();
        acc *= a.leading()?.pow((n - dr) as i64)?;
        // swap to keep the first argument of smaller degree
        if (m * dr) % 2 == 1 {
            negate = !negate;
        }
        b = a;
        a = r;
        let _ = m;
    }
}

/// Resultant via the Bezoutian determinant, sign-calibrated to
/// [`sylvester_resultant`]. Requires `deg f <= deg g`; the deficit is handled
/// by the padded Bezout matrix of order `deg g`.
pub fn bezout_resultant(f: &Polynomial, g: &Polynomial) -> Result<ComplexRational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    assert!(m <= n, "bezout_resultant requires deg f <= deg g");
    if n == 0 {
        return Ok(ComplexRational::one());
    }
    // beta_{ij} from (f(z) g(w) - f(w) g(z)) / (z - w), both treated at degree n.
    let mut beta = Matrix::zeros(n, n);
    // Coefficient of z^i w^j in the quotient: sum over k of
    // f_{j+k+1} g_{i-k} - g_{j+k+1} f_{i-k}  (a standard expansion of the
    // Cayley quotient), with indices clipped to [0, n].
    for i in 0..n {
        for j in 0..n {
            let mut acc = ComplexRational::zero();
            let kmax = (n.saturating_sub(j + 1)).min(i);
            for k in 0..=kmax {
                let t1 = f.coeff(j + k + 1) * g.coeff(i - k);
                let t2 = g.coeff(j + k + 1) * f.coeff(i - k);
                acc += t1 - t2;
            }
            beta[(i, j)] = acc;
        }
    }
    let raw = beta.det();
    // det Bez = (-1)^{n(n-1)/2 + n(n-m)} g_n^{n-m} Res(f, g); the sign law
    // is calibrated against the Poisson/Sylvester value and frozen in tests
    // over all degree combinations up to 7
    let sign = if (n * (n - 1) / 2 + n * (n - m)) % 2 == 1 {
        -ComplexRational::one()
    } else {
        ComplexRational::one()
    };
    let gn = g.leading()?.pow((n - m) as i64)?;
    Ok(raw * sign / gn)
}

/// Resultant as a truncated Toeplitz determinant of the Taylor symbol
/// `h = f/g` at the origin: `f_m^{n-N} g_0^{m+N} det (h_{m+i-j})_{N x N}`.
/// Stable in `N` for every `N >= deg g`.
pub fn toeplitz_resultant(f: &Polynomial, g: &Polynomial, nn: i64) -> Result<ComplexRational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = f.degree().unwrap() as i64;
    let n = g.degree().unwrap() as i64;
    if g.coeff(0).is_zero() {
        return Err(Error::DivisionByZero);
    }
    if nn < n {
        return Err(Error::TruncationTooSmall { n: nn, d: n });
    }
    let nn_u = nn as usize;
    // Taylor coefficients of f/g up to index m + N - 1.
    let need = (m as usize) + nn_u;
    let h = f.series_div(g, need.max(1))?;
    let h_at = |k: i64| -> ComplexRational {
        if k < 0 {
            ComplexRational::zero()
        } else {
            h.get(k as usize).cloned().unwrap_or_else(ComplexRational::zero)
        }
    };
    let mut t = Matrix::zeros(nn_u, nn_u);
    for i in 0..nn_u {
        for j in 0..nn_u {
            t[(i, j)] = h_at(m + i as i64 - j as i64);
        }
    }
    let det = t.det();
    let pre = f.leading()?.pow(n - nn)? * g.coeff(0).pow(m + nn)?;
    Ok(pre * det)
}

/// Polynomial discriminant `(-1)^{m(m-1)/2} Res(f, f') / f_m`, normalized so
/// a monic `f` gives the squared Vandermonde product of root differences.
/// Non-monic input is normalized to monic first.
pub fn discriminant_pol(f: &Polynomial) -> Result<ComplexRational> {
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    if m == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let fm = f.monic()?;
    let res = sylvester_resultant(&fm, &fm.derivative())?;
    let sign = if (m * (m - 1) / 2) % 2 == 1 {
        -ComplexRational::one()
    } else {
        ComplexRational::one()
    };
    Ok(sign * res)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> ComplexRational {
        ComplexRational::from_int(n)
    }

    #[test]
    fn product_of_linears() {
        // (z-1)(z+1) = z^2 - 1
        let p = Polynomial::from_roots(&[c(1), c(-1)]);
        assert_eq!(p, Polynomial::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn gcd_common_factor() {
        let a = Polynomial::from_ints(&[-1, 0, 1]); // z^2-1
        let b = Polynomial::from_ints(&[-1, 1]); // z-1
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn divrem_long_division() {
        // (z^2 - 1) / (z - 2) = z + 2 rem 3, by hand
        let a = Polynomial::from_ints(&[-1, 0, 1]);
        let b = Polynomial::from_ints(&[-2, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, Polynomial::from_ints(&[2, 1]));
        assert_eq!(r, Polynomial::from_ints(&[3]));
    }

    #[test]
    fn sylvester_linear_pair() {
        // Poisson product: f = z-1, g = z-2 gives g(1) = -1
        let f = Polynomial::from_ints(&[-1, 1]);
        let g = Polynomial::from_ints(&[-2, 1]);
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), c(-1));
    }

    #[test]
    fn sylvester_constant_case() {
        // Res(c, g) = c^deg g
        let f = Polynomial::from_ints(&[3]);
        let g = Polynomial::from_ints(&[-2, 0, 1]);
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), c(9));
    }

    #[test]
    fn sylvester_quadratic_pair() {
        // roots {1,-1} x {2,-2}: (-1)(3)(-3)(1) = 9
        let f = Polynomial::from_ints(&[-1, 0, 1]);
        let g = Polynomial::from_ints(&[-4, 0, 1]);
        assert_eq!(sylvester_resultant(&f, &g).unwrap(), c(9));
    }

    #[test]
    fn bezout_matches_sylvester() {
        let f = Polynomial::from_ints(&[-1, 0, 1]);
        let g = Polynomial::from_ints(&[-4, 0, 1]);
        assert_eq!(bezout_resultant(&f, &g).unwrap(), c(9));
        let f = Polynomial::from_ints(&[0, 1]); // z
        let g = Polynomial::from_ints(&[-1, 1]); // z-1
        assert_eq!(
            bezout_resultant(&f, &g).unwrap(),
            sylvester_resultant(&f, &g).unwrap()
        );
        // identical arguments vanish
        let h = Polynomial::from_ints(&[1, 2, 3]);
        assert_eq!(bezout_resultant(&h, &h).unwrap(), c(0));
        // unequal degrees: Res(z-1, z^2-4) = g(1) = -3
        let f = Polynomial::from_ints(&[-1, 1]);
        let g = Polynomial::from_ints(&[-4, 0, 1]);
        assert_eq!(bezout_resultant(&f, &g).unwrap(), c(-3));
    }

    #[test]
    fn toeplitz_matches_sylvester() {
        let f = Polynomial::from_ints(&[-1, 1]);
        let g = Polynomial::from_ints(&[-2, 1]);
        assert_eq!(toeplitz_resultant(&f, &g, 1).unwrap(), c(-1));
        assert_eq!(toeplitz_resultant(&f, &g, 2).unwrap(), c(-1));
        assert_eq!(toeplitz_resultant(&f, &g, 5).unwrap(), c(-1));
        // f = 1 constant
        let one = Polynomial::one();
        assert_eq!(toeplitz_resultant(&one, &g, 2).unwrap(), c(1));
        // precondition: N >= deg g
        assert!(toeplitz_resultant(&f, &g, 0).is_err());
        let g0 = Polynomial::from_ints(&[0, 1]);
        assert!(toeplitz_resultant(&f, &g0, 2).is_err());
    }

    #[test]
    fn discriminant_values() {
        // z^2 - 1 -> (1 - (-1))^2 = 4
        assert_eq!(
            discriminant_pol(&Polynomial::from_ints(&[-1, 0, 1])).unwrap(),
            c(4)
        );
        // double root
        assert_eq!(
            discriminant_pol(&Polynomial::from_ints(&[0, 0, 1])).unwrap(),
            c(0)
        );
        // z^2 + bz + c -> b^2 - 4c at (1,1)
        assert_eq!(
            discriminant_pol(&Polynomial::from_ints(&[1, 1, 1])).unwrap(),
            c(-3)
        );
        assert!(discriminant_pol(&Polynomial::one()).is_err());
    }

    #[test]
    fn reciprocal_examples() {
        // P = z - 2 -> -2z + 1
        let p = Polynomial::from_ints(&[-2, 1]);
        assert_eq!(reciprocal_poly(&p).unwrap(), Polynomial::from_ints(&[1, -2]));
        // P = iz + 1 -> z - i (conjugation flips i)
        let p = Polynomial::new(vec![ComplexRational::one(), ComplexRational::i()]);
        let expect = Polynomial::new(vec![-ComplexRational::i(), ComplexRational::one()]);
        assert_eq!(reciprocal_poly(&p).unwrap(), expect);
        // involution when P(0) != 0
        let p = Polynomial::new(vec![
            ComplexRational::from_ratios(1, 2, -1, 3),
            ComplexRational::from_int(5),
            ComplexRational::i(),
        ]);
        assert_eq!(
            reciprocal_poly(&reciprocal_poly(&p).unwrap()).unwrap(),
            p
        );
    }

    #[test]
    fn series_division() {
        // 1/(z-2) = -1/2 - z/4 - z^2/8 - ...
        let one = Polynomial::one();
        let g = Polynomial::from_ints(&[-2, 1]);
        let h = one.series_div(&g, 3).unwrap();
        assert_eq!(h[0], ComplexRational::from_ratio(-1, 2));
        assert_eq!(h[1], ComplexRational::from_ratio(-1, 4));
        assert_eq!(h[2], ComplexRational::from_ratio(-1, 8));
    }

    #[test]
    fn interpolation_reconstructs() {
        let p = Polynomial::from_ints(&[3, -2, 0, 5]);
        let pts: Vec<_> = (0..4)
            .map(|k| {
                let x = c(k as i64 - 1);
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(Polynomial::interpolate(&pts), p);
    }
}
