//! Exact complex scalars: Gaussian rationals with arbitrary-precision parts.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Double-precision complex value used on all numeric paths.
pub type ComplexFloat = Complex64;

/// An exact complex number with arbitrary-precision rational real and
/// imaginary parts. Both parts are kept in lowest terms with positive
/// denominators (guaranteed by `BigRational`), so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplexRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl ComplexRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ComplexRational { re, im }
    }

    pub fn zero() -> Self {
        ComplexRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        ComplexRational::new(BigRational::one(), BigRational::zero())
    }

    pub fn i() -> Self {
        ComplexRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        ComplexRational::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// Exact rational p/q (panics if q = 0).
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        ComplexRational::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    /// Gaussian rational (p/q) + (r/s) i.
    pub fn from_ratios(p: i64, q: i64, r: i64, s: i64) -> Self {
        assert!(q != 0 && s != 0, "zero denominator");
        ComplexRational::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::new(BigInt::from(r), BigInt::from(s)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ComplexRational::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2 as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(ComplexRational::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Integer power; negative exponents invert (error on 0^negative).
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e == 0 {
            return Ok(ComplexRational::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = ComplexRational::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc *= b.clone();
            }
            b = b.clone() * b;
            k >>= 1;
        }
        Ok(acc)
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Parse a rational string "p/q" or "p" (optional sign, q > 0 after
    /// normalization).
    pub fn parse_rational(s: &str) -> Result<BigRational> {
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p = BigInt::from_str(p)
            .map_err(|_| Error::InvalidArgument(format!("bad rational numerator {s:?}")))?;
        let q = BigInt::from_str(q)
            .map_err(|_| Error::InvalidArgument(format!("bad rational denominator {s:?}")))?;
        if q.is_zero() {
            return Err(Error::InvalidArgument(format!("zero denominator in {s:?}")));
        }
        Ok(BigRational::new(p, q))
    }

    /// Canonical "p/q" rendering with the denominator always present.
    pub fn rational_string(r: &BigRational) -> String {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Debug for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {} i)", self.re, self.im)
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

// Lexicographic order on (re, im); used only to key ordered maps.
impl PartialOrd for ComplexRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ComplexRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl Add for ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: Self) -> Self {
        ComplexRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: Self) -> Self {
        ComplexRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        ComplexRational::new(re, im)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for ComplexRational {
    type Output = ComplexRational;
    fn div(self, rhs: Self) -> Self {
        let inv = rhs.inv().expect("division by zero ComplexRational");
        self * inv
    }
}

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> Self {
        ComplexRational::new(-self.re, -self.im)
    }
}

impl AddAssign for ComplexRational {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl SubAssign for ComplexRational {
    fn sub_assign(&mut self, rhs: Self) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl MulAssign for ComplexRational {
    fn mul_assign(&mut self, rhs: Self) {
        *self = self.clone() * rhs;
    }
}

impl<'a> Add<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: &'a ComplexRational) -> ComplexRational {
        self.clone() + rhs.clone()
    }
}

impl<'a> Sub<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: &'a ComplexRational) -> ComplexRational {
        self.clone() - rhs.clone()
    }
}

impl<'a> Mul<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: &'a ComplexRational) -> ComplexRational {
        self.clone() * rhs.clone()
    }
}
