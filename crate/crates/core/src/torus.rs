//! Numeric genus-one layer: Jacobi theta evaluation with certified
//! truncation, the lattice (Abel) condition for principal divisors,
//! meromorphic resultants on a complex torus as theta-quotient products, and
//! the squared-theta identity for the two resultant values of a degree-four
//! quotient.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A torus `C / (Z + tau Z)` with a truncation half-width for theta sums.
/// Terms decay like `exp(-pi Im(tau) k^2)`, so the stored `trunc` certifies a
/// relative tail below 1e-14 for arguments in the fundamental domain; theta
/// evaluation widens the window with `|Im zeta| / Im tau` as needed.
#[derive(Clone, Copy, Debug)]
pub struct TorusModulus {
    pub tau: Complex64,
    pub trunc: usize,
}

impl TorusModulus {
    pub fn new(tau: Complex64) -> Result<Self> {
        if tau.im < 1e-3 {
            return Err(Error::ImTauTooSmall);
        }
        // exp(-pi Im(tau) k^2) < 1e-16 plus two guard terms
        let k = (16.0 * std::f64::consts::LN_10 / (std::f64::consts::PI * tau.im)).sqrt();
        Ok(TorusModulus {
            tau,
            trunc: k.ceil() as usize + 2,
        })
    }
}

/// Odd Jacobi theta with half-integer characteristics,
/// `theta(z) = sum_k exp(pi i ((k+1/2)^2 tau + 2 (k+1/2)(z + 1/2)))`.
///
/// This is the completed form of the series
/// `sum_k exp(pi i (k^2 tau + k (1 + tau + 2 z)))` (the two differ by the
/// nowhere-zero factor `exp(pi i (tau/4 + z + 1/2))`, which cancels from
/// every resultant ratio); the completed form is genuinely odd.
pub fn theta_eval(zeta: Complex64, m: &TorusModulus) -> Complex64 {
    let extra = (zeta.im.abs() / m.tau.im).ceil() as usize + 1;
    let k_max = (m.trunc + extra) as i64;
    let i_pi = Complex64::new(0.0, std::f64::consts::PI);
    let mut acc = Complex64::default();
    for k in -k_max..=k_max {
        let half = k as f64 + 0.5;
        let phase = i_pi * (half * half * m.tau + 2.0 * half * (zeta + 0.5));
        acc += phase.exp();
    }
    acc
}

/// Zeros and poles of one meromorphic function on the torus, length-matched.
#[derive(Clone, Debug)]
pub struct TorusDivisorPair {
    pub zeros: Vec<Complex64>,
    pub poles: Vec<Complex64>,
}

impl TorusDivisorPair {
    pub fn new(zeros: Vec<Complex64>, poles: Vec<Complex64>) -> Result<Self> {
        if zeros.len() != poles.len() || zeros.is_empty() {
            return Err(Error::InvalidArgument(
                "need equally many (and at least one) zeros and poles".into(),
            ));
        }
        Ok(TorusDivisorPair { zeros, poles })
    }

    fn sum(&self) -> Complex64 {
        self.zeros.iter().sum::<Complex64>() - self.poles.iter().sum::<Complex64>()
    }
}

/// Outcome of the lattice condition test: the nearest lattice point
/// `m + n tau` to the divisor sum and the distance to it.
#[derive(Clone, Copy, Debug)]
pub struct AbelCheck {
    pub ok: bool,
    pub m: i64,
    pub n: i64,
    pub residual: f64,
}

const LATTICE_TOL: f64 = 1e-8;

fn nearest_lattice(s: Complex64, tau: Complex64) -> (i64, i64, f64) {
    let n = (s.im / tau.im).round();
    let m = (s.re - n * tau.re).round();
    let residual = (s - Complex64::new(m, 0.0) - n * tau).norm();
    (m as i64, n as i64, residual)
}

/// True when the divisor sums to a lattice point within `1e-8`.
pub fn abel_check(d: &TorusDivisorPair, m: &TorusModulus) -> AbelCheck {
    let (mm, nn, residual) = nearest_lattice(d.sum(), m.tau);
    AbelCheck {
        ok: residual < LATTICE_TOL,
        m: mm,
        n: nn,
        residual,
    }
}

fn lattice_distance(x: Complex64, tau: Complex64) -> f64 {
    nearest_lattice(x, tau).2
}

/// Meromorphic resultant on the torus as the quadruple theta product
/// `prod_{i,j} theta(c_j - a_i) theta(d_j - b_i)
///  / (theta(c_j - b_i) theta(d_j - a_i))`.
///
/// Both divisors must satisfy the lattice condition; their representatives
/// are normalized (the last pole absorbs the lattice vector) so the product
/// is invariant under lattice translation of any input representative.
pub fn torus_resultant(
    df: &TorusDivisorPair,
    dg: &TorusDivisorPair,
    m: &TorusModulus,
) -> Result<Complex64> {
    let mut df = df.clone();
    let mut dg = dg.clone();
    for d in [&mut df, &mut dg] {
        let chk = abel_check(d, m);
        if !chk.ok {
            return Err(Error::AbelViolation);
        }
        let shift = Complex64::new(chk.m as f64, 0.0) + chk.n as f64 * m.tau;
        let last = d.poles.len() - 1;
        d.poles[last] += shift;
    }
    // supports must stay apart modulo the lattice
    for x in df.zeros.iter().chain(df.poles.iter()) {
        for y in dg.zeros.iter().chain(dg.poles.iter()) {
            if lattice_distance(x - y, m.tau) < 1e-10 {
                return Err(Error::LatticeCollision);
            }
        }
    }
    let mut acc = Complex64::new(1.0, 0.0);
    for (a, b) in df.zeros.iter().zip(df.poles.iter()) {
        for (c, d) in dg.zeros.iter().zip(dg.poles.iter()) {
            acc *= theta_eval(c - a, m) * theta_eval(d - b, m)
                / (theta_eval(c - b, m) * theta_eval(d - a, m));
        }
    }
    Ok(acc)
}

/// The two resultant values of the order-four quotient split determined by
/// points `(a1, a2; b1, b2)`, via the squared-theta expression, plus the
/// deviations of the addition identity `+-sqrt(xi1) +- sqrt(xi2) = 1`:
/// `identity_deviation` is the rationalized residual
/// `|(xi1 + xi2 - 1)^2 - 4 xi1 xi2|` and `sqrt_deviation` the best residual
/// of the four sign choices of the identity itself.
#[derive(Clone, Copy, Debug)]
pub struct XiCheck {
    pub xi1: Complex64,
    pub xi2: Complex64,
    pub pairing_spread: f64,
    pub identity_deviation: f64,
    pub sqrt_deviation: f64,
}

/// `rho_ij = [theta(a_i-b_j') theta(a_i+b_j') theta(a_i'-b_j) theta(a_i'+b_j)
///           / (theta(a_i-a_i') theta(a_i+a_i') theta(b_j-b_j') theta(b_j+b_j'))]^2`
fn rho(
    a: [Complex64; 2],
    b: [Complex64; 2],
    i: usize,
    j: usize,
    m: &TorusModulus,
) -> Complex64 {
    let ip = 1 - i;
    let jp = 1 - j;
    let num = theta_eval(a[i] - b[jp], m)
        * theta_eval(a[i] + b[jp], m)
        * theta_eval(a[ip] - b[j], m)
        * theta_eval(a[ip] + b[j], m);
    let den = theta_eval(a[i] - a[ip], m)
        * theta_eval(a[i] + a[ip], m)
        * theta_eval(b[j] - b[jp], m)
        * theta_eval(b[j] + b[jp], m);
    let r = num / den;
    r * r
}

/// Checks `xi1 = rho_11 = rho_22`, `xi2 = rho_12 = rho_21` and the
/// rationalized addition identity; `z0` shifts the divisor representatives
/// and must leave everything unchanged.
pub fn weierstrass_xi_check(
    a1: Complex64,
    a2: Complex64,
    b1: Complex64,
    b2: Complex64,
    z0: Complex64,
    m: &TorusModulus,
) -> Result<XiCheck> {
    let a = [a1, a2];
    let b = [b1, b2];
    for (x, y) in [(a1, a2), (b1, b2)] {
        if lattice_distance(x - y, m.tau) < LATTICE_TOL
            || lattice_distance(x + y, m.tau) < LATTICE_TOL
        {
            return Err(Error::LatticeCollision);
        }
    }
    for &x in &a {
        for &y in &b {
            if lattice_distance(x - y, m.tau) < LATTICE_TOL
                || lattice_distance(x + y, m.tau) < LATTICE_TOL
            {
                return Err(Error::LatticeCollision);
            }
        }
    }
    let r11 = rho(a, b, 0, 0, m);
    let r22 = rho(a, b, 1, 1, m);
    let r12 = rho(a, b, 0, 1, m);
    let r21 = rho(a, b, 1, 0, m);
    let spread = ((r11 - r22).norm() / (1.0 + r11.norm()))
        .max((r12 - r21).norm() / (1.0 + r12.norm()));

    // cross-check one value through the torus resultant on the shifted
    // divisors: f = phi(z-z0, a1)/phi(z-z0, b1), g = phi(z-z0, b2)/phi(z-z0, a2)
    let df = TorusDivisorPair::new(vec![z0 + a1, z0 - a1], vec![z0 + b1, z0 - b1])?;
    let dg = TorusDivisorPair::new(vec![z0 + b2, z0 - b2], vec![z0 + a2, z0 - a2])?;
    let direct = torus_resultant(&df, &dg, m)?;
    let spread = spread.max((direct - r11).norm() / (1.0 + r11.norm()));

    let one = Complex64::new(1.0, 0.0);
    // rationalized form of +-sqrt(xi1) +- sqrt(xi2) = 1
    let dev = ((r11 + r12 - one) * (r11 + r12 - one) - 4.0 * r11 * r12).norm();
    let s1 = r11.sqrt();
    let s2 = r12.sqrt();
    let sqrt_dev = [s1 + s2, s1 - s2, -s1 + s2, -s1 - s2]
        .into_iter()
        .map(|s| (s - one).norm())
        .fold(f64::INFINITY, f64::min);
    Ok(XiCheck {
        xi1: r11,
        xi2: r12,
        pairing_spread: spread,
        identity_deviation: dev,
        sqrt_deviation: sqrt_dev,
    })
}
