//! Divisors on the Riemann sphere: points, integer-weighted supports,
//! rational functions with optional factored divisor data, orders, local
//! symbols, admissibility and multiplicative divisor actions.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::cpoly;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::ComplexRational;

/// A point of the extended complex plane. `Infinity` compares equal only to
/// itself and sorts above all finite points.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointP1 {
    Finite(ComplexRational),
    Infinity,
}

impl PointP1 {
    pub fn finite(c: ComplexRational) -> Self {
        PointP1::Finite(c)
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, PointP1::Infinity)
    }
}

impl fmt::Debug for PointP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointP1::Finite(c) => write!(f, "{c}"),
            PointP1::Infinity => write!(f, "inf"),
        }
    }
}

/// Finite multiset of points with nonzero integer multiplicities.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Divisor {
    entries: BTreeMap<PointP1, i64>,
}

impl Divisor {
    pub fn new() -> Self {
        Divisor::default()
    }

    pub fn add(&mut self, p: PointP1, mult: i64) {
        if mult == 0 {
            return;
        }
        let e = self.entries.entry(p.clone()).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.entries.remove(&p);
        }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (PointP1, i64)>) -> Self {
        let mut d = Divisor::new();
        for (p, m) in entries {
            d.add(p, m);
        }
        d
    }

    pub fn multiplicity(&self, p: &PointP1) -> i64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = &PointP1> {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PointP1, i64)> {
        self.entries.iter().map(|(p, &m)| (p, m))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, m) in rhs.iter() {
            out.add(p.clone(), m);
        }
        out
    }
}

/// Divisor with floating-point support points, tagged with the root-finding
/// tolerance it was produced at.
#[derive(Clone, Debug)]
pub struct NumericDivisor {
    pub points: Vec<(NumericPoint, i64)>,
    pub tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NumericPoint {
    Finite(Complex64),
    Infinity,
}

/// Tri-state value of resultant-like products: a finite nonzero exact value,
/// or the degenerate markers of admissible pairs.
#[derive(Clone, PartialEq, Debug)]
pub enum ResValue {
    Finite(ComplexRational),
    Zero,
    Infinite,
}

#[allow(clippy::should_implement_trait)]
impl ResValue {
    pub fn finite(self) -> Result<ComplexRational> {
        match self {
            ResValue::Finite(v) => Ok(v),
            ResValue::Zero => Ok(ComplexRational::zero()),
            ResValue::Infinite => Err(Error::InfiniteValue),
        }
    }

    pub fn mul(self, rhs: ResValue) -> Result<ResValue> {
        use ResValue::*;
        Ok(match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a * b),
            (Zero, Infinite) | (Infinite, Zero) => return Err(Error::Indeterminate),
            (Zero, _) | (_, Zero) => Zero,
            (Infinite, _) | (_, Infinite) => Infinite,
        })
    }

    pub fn inv(self) -> Result<ResValue> {
        Ok(match self {
            ResValue::Finite(v) => ResValue::Finite(v.inv()?),
            ResValue::Zero => ResValue::Infinite,
            ResValue::Infinite => ResValue::Zero,
        })
    }

    pub fn pow(self, e: i64) -> Result<ResValue> {
        if e == 0 {
            return Ok(ResValue::Finite(ComplexRational::one()));
        }
        Ok(match self {
            ResValue::Finite(v) => ResValue::Finite(v.pow(e)?),
            ResValue::Zero => {
                if e > 0 {
                    ResValue::Zero
                } else {
                    ResValue::Infinite
                }
            }
            ResValue::Infinite => {
                if e > 0 {
                    ResValue::Infinite
                } else {
                    ResValue::Zero
                }
            }
        })
    }
}

/// Factored divisor data carried alongside a rational function: scale and
/// exact finite zero/pole lists with multiplicity by repetition.
#[derive(Clone, Debug, PartialEq)]
pub struct Factored {
    pub scale: ComplexRational,
    pub zeros: Vec<ComplexRational>,
    pub poles: Vec<ComplexRational>,
}

/// A reduced ratio of polynomials. The denominator is monic and coprime to
/// the numerator; `0/0` is rejected at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
    factored: Option<Factored>,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::ZeroOverZero);
            }
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree().unwrap_or(0) > 0 {
            (num.divrem(&g)?.0, den.divrem(&g)?.0)
        } else {
            (num, den)
        };
        let lc = den.leading()?;
        if !lc.is_one() {
            let inv = lc.inv()?;
            den = den.scale(&inv);
            num = num.scale(&inv);
        }
        Ok(RationalFunction {
            num,
            den,
            factored: None,
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Result<Self> {
        RationalFunction::new(p, Polynomial::one())
    }

    /// Builds `scale * prod (z - zeros) / prod (z - poles)` and remembers the
    /// exact divisor data. Matching zero/pole pairs cancel.
    pub fn from_linear_factors(
        scale: ComplexRational,
        zeros: &[ComplexRational],
        poles: &[ComplexRational],
    ) -> Result<Self> {
        if scale.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        let mut zs = zeros.to_vec();
        let mut ps: Vec<ComplexRational> = Vec::new();
        'outer: for p in poles {
            for (i, z) in zs.iter().enumerate() {
                if z == p {
                    zs.remove(i);
                    continue 'outer;
                }
            }
            ps.push(p.clone());
        }
        let num = Polynomial::from_roots(&zs).scale(&scale);
        let den = Polynomial::from_roots(&ps);
        Ok(RationalFunction {
            num,
            den,
            factored: Some(Factored {
                scale,
                zeros: zs,
                poles: ps,
            }),
        })
    }

    /// The coordinate function z.
    pub fn identity() -> Self {
        RationalFunction::from_linear_factors(
            ComplexRational::one(),
            &[ComplexRational::zero()],
            &[],
        )
        .unwrap()
    }

    pub fn constant(c: ComplexRational) -> Result<Self> {
        if c.is_zero() {
            // the zero function is excluded from all divisor operations
            return Err(Error::ZeroOverZero);
        }
        Ok(RationalFunction {
            num: Polynomial::constant(c.clone()),
            den: Polynomial::one(),
            factored: Some(Factored {
                scale: c,
                zeros: vec![],
                poles: vec![],
            }),
        })
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn factored(&self) -> Option<&Factored> {
        self.factored.as_ref()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_zero_fn(&self) -> bool {
        self.num.is_zero()
    }

    /// Order as a map P1 -> P1: max of numerator and denominator degrees.
    pub fn order(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    /// Exact evaluation; poles give `Infinite`.
    pub fn eval_point(&self, p: &PointP1) -> ResValue {
        match p {
            PointP1::Finite(a) => {
                let dv = self.den.eval(a);
                if dv.is_zero() {
                    return ResValue::Infinite;
                }
                let nv = self.num.eval(a);
                if nv.is_zero() {
                    ResValue::Zero
                } else {
                    ResValue::Finite(nv / dv)
                }
            }
            PointP1::Infinity => {
                let o = self.ord_at(&PointP1::Infinity);
                match o.cmp(&0) {
                    std::cmp::Ordering::Greater => ResValue::Zero,
                    std::cmp::Ordering::Less => ResValue::Infinite,
                    std::cmp::Ordering::Equal => {
                        let a = self.num.leading().expect("nonzero");
                        let b = self.den.leading().expect("nonzero");
                        ResValue::Finite(a / b)
                    }
                }
            }
        }
    }

    /// f - c as a rational function (factored data does not survive).
    pub fn sub_scalar(&self, c: &ComplexRational) -> Result<RationalFunction> {
        let num = self.num.sub(&self.den.scale(c));
        RationalFunction::new(num, self.den.clone())
    }

    pub fn mul(&self, rhs: &RationalFunction) -> Result<RationalFunction> {
        let mut out = RationalFunction::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))?;
        if let (Some(a), Some(b)) = (&self.factored, &rhs.factored) {
            let mut zeros = a.zeros.clone();
            zeros.extend(b.zeros.iter().cloned());
            let mut poles = a.poles.clone();
            poles.extend(b.poles.iter().cloned());
            // cancel matching pairs exactly
            let mut zs: Vec<ComplexRational> = Vec::new();
            'outer: for z in zeros {
                for (i, p) in poles.iter().enumerate() {
                    if *p == z {
                        poles.remove(i);
                        continue 'outer;
                    }
                }
                zs.push(z);
            }
            out.factored = Some(Factored {
                scale: a.scale.clone() * b.scale.clone(),
                zeros: zs,
                poles,
            });
        }
        Ok(out)
    }

    pub fn inv(&self) -> Result<RationalFunction> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = RationalFunction::new(self.den.clone(), self.num.clone())?;
        if let Some(f) = &self.factored {
            out.factored = Some(Factored {
                scale: f.scale.inv()?,
                zeros: f.poles.clone(),
                poles: f.zeros.clone(),
            });
        }
        Ok(out)
    }

    pub fn div(&self, rhs: &RationalFunction) -> Result<RationalFunction> {
        self.mul(&rhs.inv()?)
    }

    pub fn scale(&self, c: &ComplexRational) -> Result<RationalFunction> {
        if c.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        let mut out = RationalFunction::new(self.num.scale(c), self.den.clone())?;
        if let Some(f) = &self.factored {
            out.factored = Some(Factored {
                scale: f.scale.clone() * c.clone(),
                zeros: f.zeros.clone(),
                poles: f.poles.clone(),
            });
        }
        Ok(out)
    }

    /// The conjugate reflection `F*(u) = conj(F(1 / conj u))` as an exact
    /// rational function.
    pub fn conj_reflect(&self) -> Result<RationalFunction> {
        let n = self.order();
        let num = self.num.conj().reverse_at(n);
        let den = self.den.conj().reverse_at(n);
        RationalFunction::new(num, den)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.num.eval_complex(z) / self.den.eval_complex(z)
    }

    /// Derivative as floating-point coefficient lists (num', den pair of the
    /// quotient rule), used by numeric certificates.
    pub fn derivative_complex(&self, z: Complex64) -> Complex64 {
        let n = self.num.to_complex_coeffs();
        let d = self.den.to_complex_coeffs();
        let np = cpoly::derivative(&n);
        let dp = cpoly::derivative(&d);
        let dv = cpoly::eval(&d, z);
        (cpoly::eval(&np, z) * dv - cpoly::eval(&n, z) * cpoly::eval(&dp, z)) / (dv * dv)
    }

    /// Integer order of vanishing at a point: positive at zeros, negative at
    /// poles, zero elsewhere. At infinity it is `deg den - deg num`.
    pub fn ord_at(&self, p: &PointP1) -> i64 {
        match p {
            PointP1::Finite(a) => {
                let zn = self.num.root_multiplicity(a) as i64;
                let zd = self.den.root_multiplicity(a) as i64;
                zn - zd
            }
            PointP1::Infinity => {
                self.den.degree().unwrap_or(0) as i64 - self.num.degree().unwrap_or(0) as i64
            }
        }
    }

    /// Value of the local unit `f(z) / (z - a)^{ord_a f}` at `a` (or the
    /// corresponding limit at infinity in the coordinate 1/z).
    pub fn local_unit(&self, p: &PointP1) -> ComplexRational {
        match p {
            PointP1::Finite(a) => {
                let mn = self.num.root_multiplicity(a);
                let md = self.den.root_multiplicity(a);
                let un = self.num.strip_root(a, mn).eval(a);
                let ud = self.den.strip_root(a, md).eval(a);
                un / ud
            }
            PointP1::Infinity => {
                // f(1/s) = s^{ord_inf} * rev(num)(s)/rev(den)(s)
                let a = self.num.leading().expect("nonzero numerator");
                let b = self.den.leading().expect("nonzero denominator");
                a / b
            }
        }
    }

    /// Exact principal divisor; requires factored data.
    pub fn divisor(&self) -> Result<Divisor> {
        let f = self
            .factored
            .as_ref()
            .ok_or(Error::FactoredInputRequired("divisor extraction"))?;
        let mut d = Divisor::new();
        for z in &f.zeros {
            d.add(PointP1::Finite(z.clone()), 1);
        }
        for p in &f.poles {
            d.add(PointP1::Finite(p.clone()), -1);
        }
        let inf = self.ord_at(&PointP1::Infinity);
        d.add(PointP1::Infinity, inf);
        Ok(d)
    }

    /// Numeric divisor via the simultaneous-iteration root finder; tagged
    /// with the tolerance used.
    pub fn divisor_numeric(&self, tol: f64) -> Result<NumericDivisor> {
        let mut points = Vec::new();
        if self.num.degree().unwrap_or(0) > 0 {
            for (z, m) in cpoly::roots(&self.num.to_complex_coeffs(), tol)? {
                points.push((NumericPoint::Finite(z), m as i64));
            }
        }
        if self.den.degree().unwrap_or(0) > 0 {
            for (z, m) in cpoly::roots(&self.den.to_complex_coeffs(), tol)? {
                points.push((NumericPoint::Finite(z), -(m as i64)));
            }
        }
        let inf = self.ord_at(&PointP1::Infinity);
        if inf != 0 {
            points.push((NumericPoint::Infinity, inf));
        }
        Ok(NumericDivisor { points, tol })
    }
}

/// `divisor_of(f)`: zeros minus poles with multiplicity, including the point
/// at infinity. A nonzero constant has the empty divisor; the zero function
/// has none.
pub fn divisor_of(f: &RationalFunction) -> Result<Divisor> {
    if f.is_zero_fn() {
        return Err(Error::ZeroOverZero);
    }
    if f.is_constant() {
        return Ok(Divisor::new());
    }
    f.divisor()
}

/// Local symbol `tau_a(f, g)`: the signed limit of `f^{ord_a g} / g^{ord_a f}`
/// at `a`, always finite and nonzero. Computed exactly by cancelling the
/// leading local factors (at infinity via the substitution z -> 1/s).
pub fn local_symbol(
    f: &RationalFunction,
    g: &RationalFunction,
    a: &PointP1,
) -> Result<ComplexRational> {
    if f.is_zero_fn() || g.is_zero_fn() {
        return Err(Error::ZeroOverZero);
    }
    let of = f.ord_at(a);
    let og = g.ord_at(a);
    let uf = f.local_unit(a);
    let ug = g.local_unit(a);
    let sign = if (of * og) % 2 != 0 {
        -ComplexRational::one()
    } else {
        ComplexRational::one()
    };
    Ok(sign * uf.pow(og)? / ug.pow(of)?)
}

/// Sign classification of `a -> ord_a(f) * ord_a(g)` over the union of the
/// supports, optionally excluding one point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissibility {
    /// disjoint supports
    Generic,
    /// all order products >= 0
    AdmissibleNonneg,
    /// all order products <= 0
    AdmissibleNonpos,
    NotAdmissible,
}

impl Admissibility {
    pub fn is_admissible(self) -> bool {
        !matches!(self, Admissibility::NotAdmissible)
    }
}

/// Classifies the pair without factoring: common support comes from gcds of
/// the numerators/denominators, where every root of `gcd(num_f, num_g)` is a
/// common zero (positive product) and so on; infinity is read off degrees.
pub fn is_admissible(
    f: &RationalFunction,
    g: &RationalFunction,
    excluded: Option<&PointP1>,
) -> Admissibility {
    let mut has_pos = false;
    let mut has_neg = false;

    let strip = |p: Polynomial| -> Polynomial {
        // remove the excluded point's linear factor from a common-root witness
        if let Some(PointP1::Finite(e)) = excluded {
            let m = p.root_multiplicity(e);
            p.strip_root(e, m)
        } else {
            p
        }
    };

    let pos1 = strip(f.num().gcd(g.num()));
    let pos2 = strip(f.den().gcd(g.den()));
    let neg1 = strip(f.num().gcd(g.den()));
    let neg2 = strip(f.den().gcd(g.num()));
    if pos1.degree().unwrap_or(0) > 0 || pos2.degree().unwrap_or(0) > 0 {
        has_pos = true;
    }
    if neg1.degree().unwrap_or(0) > 0 || neg2.degree().unwrap_or(0) > 0 {
        has_neg = true;
    }
    if !matches!(excluded, Some(PointP1::Infinity)) {
        let s = f.ord_at(&PointP1::Infinity) * g.ord_at(&PointP1::Infinity);
        if s > 0 {
            has_pos = true;
        }
        if s < 0 {
            has_neg = true;
        }
    }
    match (has_pos, has_neg) {
        (false, false) => Admissibility::Generic,
        (true, false) => Admissibility::AdmissibleNonneg,
        (false, true) => Admissibility::AdmissibleNonpos,
        (true, true) => Admissibility::NotAdmissible,
    }
}

/// Multiplicative action `g(D) = prod g(a)^{D(a)}`, with the degenerate
/// admissible cases reported as `Zero`/`Infinite`. Mixing zero and infinite
/// factors is the indeterminate error of a non-admissible configuration.
pub fn divisor_action(g: &RationalFunction, d: &Divisor) -> Result<ResValue> {
    let mut acc = ResValue::Finite(ComplexRational::one());
    for (p, m) in d.iter() {
        let v = g.eval_point(p).pow(m)?;
        acc = acc.mul(v)?;
    }
    Ok(acc)
}
