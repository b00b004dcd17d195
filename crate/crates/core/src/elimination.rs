//! Elimination functions: `E(z, w) = Res(f - z, g - w)` realized exactly as
//! `Q(z, w) / (P(z) R(w))` with polynomial data, plus the four-variable
//! extended version.
//!
//! `Q` is recovered by evaluation at exact Gaussian-rational nodes followed
//! by dense tensor interpolation against the degree bounds
//! `deg_z Q <= ord g`, `deg_w Q <= ord f`; `P` and `R` come from the pole
//! data of `g` and `f`. Node sets are deterministic, and nodes hitting a
//! degenerate configuration are skipped rather than perturbed.

use crate::bivar::BivariatePolynomial;
use crate::divisor::{PointP1, RationalFunction, ResValue};
use crate::error::{Error, Result};
use crate::poly::{resultant_prs, Polynomial};
use crate::resultant::res_four_poly;
use crate::scalar::ComplexRational;

/// `E(z, w) = Q(z, w) / (P(z) R(w))` with
/// `P(z) = prod_{d in poles(g)} (z - f(d))` and
/// `R(w) = prod_{b in poles(f)} (w - g(b))`, both monic.
#[derive(Clone, Debug, PartialEq)]
pub struct EliminationFunction {
    pub q: BivariatePolynomial,
    pub p: Polynomial,
    pub r: Polynomial,
}

impl EliminationFunction {
    /// Evaluates `Q / (P R)`; a vanishing denominator reports `Infinite`,
    /// a vanishing `Q` the `Zero` marker.
    pub fn eval(&self, z: &ComplexRational, w: &ComplexRational) -> ResValue {
        let den = self.p.eval(z) * self.r.eval(w);
        let num = self.q.eval(z, w);
        if den.is_zero() {
            if num.is_zero() {
                // finitely many truly indeterminate pairs
                return ResValue::Zero;
            }
            return ResValue::Infinite;
        }
        if num.is_zero() {
            ResValue::Zero
        } else {
            ResValue::Finite(num / den)
        }
    }
}

/// Deterministic stream of exact evaluation nodes: integers, half-integers
/// and Gaussian offsets, ordered by height. `seed` rotates the start.
fn node_stream(seed: u64) -> impl Iterator<Item = ComplexRational> {
    let base = (0u64..).flat_map(|lvl| {
        let l = lvl as i64 + 2;
        [
            ComplexRational::from_int(l),
            ComplexRational::from_int(-l),
            ComplexRational::from_ratio(2 * l - 1, 2),
            ComplexRational::from_ratio(-(2 * l - 1), 2),
            ComplexRational::from_ratios(l, 1, 1, 1),
            ComplexRational::from_ratios(l, 1, -1, 1),
        ]
    });
    base.skip((seed % 7) as usize)
}

/// Monic polynomial `prod_{d in poles(g)} (x - f(d))` over the finite poles
/// of `g`, evaluated without root extraction: for monic `g2`,
/// `prod_d (x f2 - f1)(d) = Res(g2, x f2 - f1)` and
/// `prod_d f2(d) = Res(g2, f2)`, so the product of `(x - f(d))` follows by
/// exact interpolation in `x`.
fn pole_transfer_poly(f: &RationalFunction, g: &RationalFunction) -> Result<Polynomial> {
    let g2 = g.den();
    let k = g2.degree().unwrap_or(0);
    if k == 0 {
        return Ok(Polynomial::one());
    }
    let denom = resultant_prs(g2, f.den())?;
    debug_assert!(!denom.is_zero(), "common pole escaped the precondition");
    let mut pts = Vec::with_capacity(k + 1);
    for x in node_stream(0) {
        if pts.len() > k {
            break;
        }
        let num_poly = f.den().scale(&x).sub(f.num());
        let val = if num_poly.is_zero() {
            ComplexRational::zero()
        } else {
            resultant_prs(g2, &num_poly)?
        };
        pts.push((x, val / denom.clone()));
    }
    let p = Polynomial::interpolate(&pts);
    debug_assert_eq!(p.degree(), Some(k));
    Ok(p)
}

/// Exact elimination function of a pair without common poles.
pub fn elimination_function(
    f: &RationalFunction,
    g: &RationalFunction,
) -> Result<EliminationFunction> {
    elimination_function_seeded(f, g, 0)
}

/// Same as [`elimination_function`] with a rotated node stream; results are
/// identical up to the node set actually used.
pub fn elimination_function_seeded(
    f: &RationalFunction,
    g: &RationalFunction,
    seed: u64,
) -> Result<EliminationFunction> {
    if f.is_constant() || g.is_constant() {
        return Err(Error::InvalidArgument(
            "elimination needs nonconstant functions".into(),
        ));
    }
    // no common poles: finite via gcd of denominators, infinity via orders
    if f.den().gcd(g.den()).degree().unwrap_or(0) > 0 {
        return Err(Error::CommonPole);
    }
    let inf = PointP1::Infinity;
    let of_inf = f.ord_at(&inf);
    let og_inf = g.ord_at(&inf);
    if of_inf < 0 && og_inf < 0 {
        return Err(Error::CommonPole);
    }

    let m = f.order();
    let n = g.order();

    // P(z) over poles of g (finite part plus the pole at infinity)
    let mut p = pole_transfer_poly(f, g)?;
    if og_inf < 0 {
        let f_inf = f
            .eval_point(&inf)
            .finite()
            .expect("f finite at infinity when g has a pole there");
        let lin = Polynomial::new(vec![-f_inf, ComplexRational::one()]);
        p = p.mul(&lin.pow((-og_inf) as usize));
    }
    // R(w) over poles of f
    let mut r = pole_transfer_poly(g, f)?;
    if of_inf < 0 {
        let g_inf = g
            .eval_point(&inf)
            .finite()
            .expect("g finite at infinity when f has a pole there");
        let lin = Polynomial::new(vec![-g_inf, ComplexRational::one()]);
        r = r.mul(&lin.pow((-of_inf) as usize));
    }

    // z-nodes: need n+1 with P(z) != 0
    let budget = 24 * (m + n + 2);
    let mut z_nodes = Vec::with_capacity(n + 1);
    for (tried, z) in node_stream(seed).enumerate() {
        if z_nodes.len() > n {
            break;
        }
        if tried > budget {
            return Err(Error::NodeBudgetExhausted);
        }
        if !p.eval(&z).is_zero() {
            z_nodes.push(z);
        }
    }
    // w-nodes: need m+1 with R(w) != 0 and a finite resultant against every
    // z-node
    let mut w_nodes = Vec::with_capacity(m + 1);
    let mut grid: Vec<Vec<ComplexRational>> = vec![Vec::new(); n + 1];
    for (tried, w) in node_stream(seed.wrapping_add(3)).enumerate() {
        if w_nodes.len() > m {
            break;
        }
        if tried > budget {
            return Err(Error::NodeBudgetExhausted);
        }
        if r.eval(&w).is_zero() {
            continue;
        }
        let mut column = Vec::with_capacity(n + 1);
        let mut ok = true;
        for z in &z_nodes {
            let fz = f.sub_scalar(z)?;
            let gw = g.sub_scalar(&w)?;
            match res_four_poly(&fz, &gw) {
                Ok(ResValue::Finite(v)) => {
                    column.push(v * p.eval(z) * r.eval(&w));
                }
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            for (row, v) in grid.iter_mut().zip(column) {
                row.push(v);
            }
            w_nodes.push(w);
        }
    }

    // tensor interpolation: first along w for each z-node, then along z
    let mut w_polys = Vec::with_capacity(n + 1);
    for row in &grid {
        let pts: Vec<_> = w_nodes.iter().cloned().zip(row.iter().cloned()).collect();
        w_polys.push(Polynomial::interpolate(&pts));
    }
    let mut coeffs: Vec<Vec<ComplexRational>> = Vec::with_capacity(n + 1);
    for j in 0..=m {
        let pts: Vec<_> = z_nodes
            .iter()
            .cloned()
            .zip(w_polys.iter().map(|wp| wp.coeff(j)))
            .collect();
        let col_poly = Polynomial::interpolate(&pts);
        for i in 0..=n {
            if coeffs.len() <= i {
                coeffs.push(vec![ComplexRational::zero(); m + 1]);
            }
            coeffs[i][j] = col_poly.coeff(i);
        }
    }
    let q = BivariatePolynomial::new(coeffs);
    if q.is_zero() {
        return Err(Error::DegenerateElimination);
    }
    Ok(EliminationFunction { q, p, r })
}

/// Numerator of `Q(f(t), g(t))` after clearing denominators; identically
/// zero exactly when the graph `(f, g)` lies on the curve `Q = 0`.
pub fn graph_numerator(
    q: &BivariatePolynomial,
    f: &RationalFunction,
    g: &RationalFunction,
) -> Polynomial {
    let dz = q.deg_z().unwrap_or(0);
    let dw = q.deg_w().unwrap_or(0);
    let mut acc = Polynomial::zero();
    for i in 0..=dz {
        for j in 0..=dw {
            let c = q.coeff(i, j);
            if c.is_zero() {
                continue;
            }
            let term = f
                .num()
                .pow(i)
                .mul(&f.den().pow(dz - i))
                .mul(&g.num().pow(j))
                .mul(&g.den().pow(dw - j))
                .scale(&c);
            acc = acc.add(&term);
        }
    }
    acc
}

/// Extended elimination function
/// `E(z, w; z0, w0) = Res((f-z)/(f-z0), (g-w)/(g-w0))`, defined whenever the
/// four level sets are disjoint:
/// `[g^{-1}(w) u g^{-1}(w0)] n [f^{-1}(z) u f^{-1}(z0)] = {}`.
pub fn extended_elimination(
    f: &RationalFunction,
    g: &RationalFunction,
    z: &ComplexRational,
    w: &ComplexRational,
    z0: &ComplexRational,
    w0: &ComplexRational,
) -> Result<ComplexRational> {
    if z == z0 || w == w0 {
        // one of the factors is constant 1; the resultant is an empty product
        return Ok(ComplexRational::one());
    }
    let level_f: Vec<Polynomial> = [z, z0]
        .iter()
        .map(|u| f.num().sub(&f.den().scale(u)))
        .collect();
    let level_g: Vec<Polynomial> = [w, w0]
        .iter()
        .map(|v| g.num().sub(&g.den().scale(v)))
        .collect();
    let m = f.order();
    let n = g.order();
    for a in &level_f {
        if a.is_zero() {
            return Err(Error::LevelsNotDisjoint);
        }
        for b in &level_g {
            if b.is_zero() {
                return Err(Error::LevelsNotDisjoint);
            }
            if a.gcd(b).degree().unwrap_or(0) > 0 {
                return Err(Error::LevelsNotDisjoint);
            }
            // both level sets reaching infinity (degree drop) also collide
            if a.degree().unwrap_or(0) < m && b.degree().unwrap_or(0) < n {
                return Err(Error::LevelsNotDisjoint);
            }
        }
    }
    let ff = RationalFunction::new(level_f[0].clone(), level_f[1].clone())?;
    let gg = RationalFunction::new(level_g[0].clone(), level_g[1].clone())?;
    res_four_poly(&ff, &gg)?.finite()
}
