//! Argument parsing helpers: complex literals like "2", "1.5i", "-0.3+0.1i",
//! comma-separated complex lists, and exact rational lists like "0,1,-2/3".

use num_complex::Complex64;
use reslab_core::{ComplexRational, Error, Result};

/// Parses "a", "bi", "a+bi" or "a-bi" (floating-point parts).
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t = s.trim().replace(' ', "");
    if t.is_empty() {
        return Err(Error::InvalidArgument("empty complex literal".into()));
    }
    let bad = || Error::InvalidArgument(format!("bad complex literal {s:?}"));
    if let Some(body) = t.strip_suffix('i') {
        // find the split between the real part and the imaginary coefficient:
        // the last '+'/'-' that is not an exponent sign and not leading
        let chars: Vec<char> = body.chars().collect();
        let mut split = None;
        for k in (1..chars.len()).rev() {
            if (chars[k] == '+' || chars[k] == '-')
                && chars[k - 1] != 'e'
                && chars[k - 1] != 'E'
            {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re: f64 = body[..k].parse().map_err(|_| bad())?;
                let im_str = &body[k..];
                let im: f64 = if im_str == "+" {
                    1.0
                } else if im_str == "-" {
                    -1.0
                } else {
                    im_str.parse().map_err(|_| bad())?
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let im: f64 = if body.is_empty() {
                    1.0
                } else if body == "-" {
                    -1.0
                } else {
                    body.parse().map_err(|_| bad())?
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = t.parse().map_err(|_| bad())?;
        Ok(Complex64::new(re, 0.0))
    }
}

pub fn parse_complex_list(s: &str) -> Result<Vec<Complex64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_complex)
        .collect()
}

/// Parses a comma-separated list of exact rationals ("p/q" or integers).
pub fn parse_rational_list(s: &str) -> Result<Vec<ComplexRational>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            Ok(ComplexRational::new(
                ComplexRational::parse_rational(t)?,
                num_rational::BigRational::new(0.into(), 1.into()),
            ))
        })
        .collect()
}
