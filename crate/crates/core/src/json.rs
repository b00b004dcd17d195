//! Serde schemas for the exchange formats: polynomial coefficient arrays
//! with exact "p/q" rational strings, rational functions (coefficient or
//! factored form), divisors, and elimination-function data.

use serde::{Deserialize, Serialize};

use crate::bivar::BivariatePolynomial;
use crate::divisor::{Divisor, PointP1, RationalFunction};
use crate::elimination::EliminationFunction;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::ComplexRational;

/// A coefficient in the wire format: an integer, an exact rational string
/// "p/q", or an explicit complex pair of rational strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffDto {
    Int(i64),
    Rational(String),
    Complex { re: String, im: String },
}

impl CoeffDto {
    pub fn to_value(&self) -> Result<ComplexRational> {
        match self {
            CoeffDto::Int(n) => Ok(ComplexRational::from_int(*n)),
            CoeffDto::Rational(s) => Ok(ComplexRational::new(
                ComplexRational::parse_rational(s)?,
                num_rational::BigRational::new(0.into(), 1.into()),
            )),
            CoeffDto::Complex { re, im } => Ok(ComplexRational::new(
                ComplexRational::parse_rational(re)?,
                ComplexRational::parse_rational(im)?,
            )),
        }
    }

    pub fn from_value(v: &ComplexRational) -> Self {
        CoeffDto::Complex {
            re: ComplexRational::rational_string(&v.re),
            im: ComplexRational::rational_string(&v.im),
        }
    }
}

/// `{"coeffs": [c0, c1, ...]}` in ascending degree order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolynomialDto {
    pub coeffs: Vec<CoeffDto>,
}

impl PolynomialDto {
    pub fn to_poly(&self) -> Result<Polynomial> {
        coeffs_to_poly(&self.coeffs)
    }

    pub fn from_poly(p: &Polynomial) -> Self {
        PolynomialDto {
            coeffs: p.coeffs().iter().map(CoeffDto::from_value).collect(),
        }
    }
}

pub fn coeffs_to_poly(coeffs: &[CoeffDto]) -> Result<Polynomial> {
    let cs: Result<Vec<ComplexRational>> = coeffs.iter().map(|c| c.to_value()).collect();
    Ok(Polynomial::new(cs?))
}

/// Rational function input: either numerator/denominator coefficient arrays
/// or a factored form with exact zero/pole lists.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalFunctionDto {
    Coeffs {
        num: Vec<CoeffDto>,
        den: Vec<CoeffDto>,
    },
    Factored {
        #[serde(default)]
        scale: Option<CoeffDto>,
        zeros: Vec<CoeffDto>,
        poles: Vec<CoeffDto>,
    },
}

impl RationalFunctionDto {
    pub fn to_function(&self) -> Result<RationalFunction> {
        match self {
            RationalFunctionDto::Coeffs { num, den } => {
                RationalFunction::new(coeffs_to_poly(num)?, coeffs_to_poly(den)?)
            }
            RationalFunctionDto::Factored { scale, zeros, poles } => {
                let s = match scale {
                    Some(c) => c.to_value()?,
                    None => ComplexRational::one(),
                };
                let zs: Result<Vec<_>> = zeros.iter().map(|c| c.to_value()).collect();
                let ps: Result<Vec<_>> = poles.iter().map(|c| c.to_value()).collect();
                RationalFunction::from_linear_factors(s, &zs?, &ps?)
            }
        }
    }

    pub fn from_function(f: &RationalFunction) -> Self {
        RationalFunctionDto::Coeffs {
            num: f.num().coeffs().iter().map(CoeffDto::from_value).collect(),
            den: f.den().coeffs().iter().map(CoeffDto::from_value).collect(),
        }
    }
}

/// A divisor point: "inf" or a complex pair.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointDto {
    Infinity(String),
    Finite { re: String, im: String },
}

impl PointDto {
    pub fn to_point(&self) -> Result<PointP1> {
        match self {
            PointDto::Infinity(s) if s == "inf" => Ok(PointP1::Infinity),
            PointDto::Infinity(s) => Err(Error::InvalidArgument(format!(
                "unknown point literal {s:?} (expected \"inf\")"
            ))),
            PointDto::Finite { re, im } => Ok(PointP1::Finite(ComplexRational::new(
                ComplexRational::parse_rational(re)?,
                ComplexRational::parse_rational(im)?,
            ))),
        }
    }

    pub fn from_point(p: &PointP1) -> Self {
        match p {
            PointP1::Infinity => PointDto::Infinity("inf".to_string()),
            PointP1::Finite(c) => PointDto::Finite {
                re: ComplexRational::rational_string(&c.re),
                im: ComplexRational::rational_string(&c.im),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DivisorEntryDto {
    pub point: PointDto,
    pub mult: i64,
}

pub fn divisor_to_dto(d: &Divisor) -> Vec<DivisorEntryDto> {
    d.iter()
        .map(|(p, m)| DivisorEntryDto {
            point: PointDto::from_point(p),
            mult: m,
        })
        .collect()
}

pub fn dto_to_divisor(entries: &[DivisorEntryDto]) -> Result<Divisor> {
    let mut d = Divisor::new();
    for e in entries {
        d.add(e.point.to_point()?, e.mult);
    }
    Ok(d)
}

/// `{"Q": [[..]], "P": [..], "R": [..]}`; `Q[i][j]` multiplies `z^i w^j`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EliminationDto {
    #[serde(rename = "Q")]
    pub q: Vec<Vec<CoeffDto>>,
    #[serde(rename = "P")]
    pub p: Vec<CoeffDto>,
    #[serde(rename = "R")]
    pub r: Vec<CoeffDto>,
}

impl EliminationDto {
    pub fn from_elimination(e: &EliminationFunction) -> Self {
        EliminationDto {
            q: e.q
                .rows()
                .iter()
                .map(|row| row.iter().map(CoeffDto::from_value).collect())
                .collect(),
            p: e.p.coeffs().iter().map(CoeffDto::from_value).collect(),
            r: e.r.coeffs().iter().map(CoeffDto::from_value).collect(),
        }
    }

    pub fn to_elimination(&self) -> Result<EliminationFunction> {
        let rows: Result<Vec<Vec<ComplexRational>>> = self
            .q
            .iter()
            .map(|r| r.iter().map(|c| c.to_value()).collect())
            .collect();
        Ok(EliminationFunction {
            q: BivariatePolynomial::new(rows?),
            p: coeffs_to_poly(&self.p)?,
            r: coeffs_to_poly(&self.r)?,
        })
    }
}
