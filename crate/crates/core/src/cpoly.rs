//! Double-precision complex polynomials: evaluation, simultaneous-iteration
//! root finding (Aberth-Ehrlich), LU determinants and the floating-point
//! resultant routes used by the numeric oracles.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CPoly = Vec<Complex64>;

/// Drops trailing coefficients below `eps` relative to the largest one.
pub fn trim(mut p: CPoly, eps: f64) -> CPoly {
    let scale = p.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let cut = eps * scale.max(f64::MIN_POSITIVE);
    while p.last().is_some_and(|c| c.norm() <= cut) {
        p.pop();
    }
    p
}

pub fn degree(p: &[Complex64]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn eval(p: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in p.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

pub fn derivative(p: &[Complex64]) -> CPoly {
    if p.len() <= 1 {
        return vec![];
    }
    p[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| c * (i as f64 + 1.0))
        .collect()
}

pub fn mul(a: &[Complex64], b: &[Complex64]) -> CPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn sub(a: &[Complex64], b: &[Complex64]) -> CPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            a.get(k).copied().unwrap_or_default() - b.get(k).copied().unwrap_or_default()
        })
        .collect()
}

pub fn scale(a: &[Complex64], c: Complex64) -> CPoly {
    a.iter().map(|x| x * c).collect()
}

/// All roots with multiplicities, by Aberth-Ehrlich simultaneous iteration.
/// Residuals are required to satisfy `|p(root)| <= tol * coefficient scale`;
/// close roots are clustered at radius `tol.sqrt()` and reported with
/// multiplicity. Non-convergence is an explicit error.
pub fn roots(p_in: &[Complex64], tol: f64) -> Result<Vec<(Complex64, usize)>> {
    let p = trim(p_in.to_vec(), 1e-14);
    let deg = degree(&p).ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(vec![]);
    }
    // deflate exact zeros at the origin
    let zero_mult = p.iter().take_while(|c| c.norm() == 0.0).count();
    let work: CPoly = p[zero_mult..].to_vec();
    let n = work.len() - 1;
    let mut found: Vec<Complex64> = Vec::with_capacity(deg);
    if n > 0 {
        let lead = *work.last().unwrap();
        let monic: CPoly = work.iter().map(|c| c / lead).collect();
        let dp = derivative(&monic);
        // initial guesses on a slightly irrational circle
        let radius = 1.0
            + monic[..n]
                .iter()
                .map(|c| c.norm())
                .fold(0.0f64, f64::max);
        let mut zs: Vec<Complex64> = (0..n)
            .map(|k| {
                let ang = 2.0 * std::f64::consts::PI * (k as f64 + 0.354) / n as f64;
                radius * Complex64::new(ang.cos(), ang.sin()) * 0.7
            })
            .collect();
        let cap = 400;
        let mut converged = false;
        for _ in 0..cap {
            let mut max_step = 0.0f64;
            for i in 0..n {
                let pv = eval(&monic, zs[i]);
                let dv = eval(&dp, zs[i]);
                if pv.norm() == 0.0 {
                    continue;
                }
                let newton = if dv.norm() > 0.0 { pv / dv } else { pv };
                let mut repulse = Complex64::new(0.0, 0.0);
                for j in 0..n {
                    if j != i {
                        let d = zs[i] - zs[j];
                        if d.norm() > 1e-300 {
                            repulse += 1.0 / d;
                        }
                    }
                }
                let denom = 1.0 - newton * repulse;
                let step = if denom.norm() > 1e-300 {
                    newton / denom
                } else {
                    newton
                };
                zs[i] -= step;
                max_step = max_step.max(step.norm());
            }
            if max_step < 1e-15 * radius.max(1.0) {
                converged = true;
                break;
            }
        }
        let coeff_scale = work.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
        let ok_residuals = zs.iter().all(|&z| {
            let s = coeff_scale * z.norm().max(1.0).powi(n as i32);
            eval(&work, z).norm() <= tol * s
        });
        if !(converged || ok_residuals) {
            return Err(Error::RootsDiverged);
        }
        if !ok_residuals {
            return Err(Error::RootsDiverged);
        }
        found.extend(zs);
    }
    for _ in 0..zero_mult {
        found.push(Complex64::new(0.0, 0.0));
    }
    // cluster at radius sqrt(tol)
    let r = tol.sqrt();
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    for z in found {
        match clusters
            .iter_mut()
            .find(|(c, _)| (*c - z).norm() <= r * c.norm().max(1.0))
        {
            Some((c, m)) => {
                // running mean keeps the cluster centre stable
                *c = (*c * (*m as f64) + z) / (*m as f64 + 1.0);
                *m += 1;
            }
            None => clusters.push((z, 1)),
        }
    }
    Ok(clusters)
}

/// Determinant by LU with partial pivoting (in place).
#[allow(clippy::needless_range_loop)]
pub fn det_lu(mut a: Vec<Vec<Complex64>>) -> Complex64 {
    let n = a.len();
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let (pivot, pnorm) = (k..n)
            .map(|r| (r, a[r][k].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if pnorm == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != k {
            a.swap(pivot, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k + 1..n {
                let s = f * a[k][j];
                a[i][j] -= s;
            }
        }
    }
    det
}

/// Sylvester determinant at formal degrees (m, n), floating point.
pub fn sylvester_resultant_formal(
    f: &[Complex64],
    m: usize,
    g: &[Complex64],
    n: usize,
) -> Complex64 {
    let at = |p: &[Complex64], k: usize| p.get(k).copied().unwrap_or_default();
    if m == 0 {
        return at(f, 0).powi(n as i32);
    }
    if n == 0 {
        return at(g, 0).powi(m as i32);
    }
    let size = m + n;
    let mut s = vec![vec![Complex64::new(0.0, 0.0); size]; size];
    for i in 0..n {
        for k in 0..=m {
            s[i][i + k] = at(f, m - k);
        }
    }
    for i in 0..m {
        for k in 0..=n {
            s[n + i][i + k] = at(g, n - k);
        }
    }
    det_lu(s)
}

pub fn sylvester_resultant(f: &[Complex64], g: &[Complex64]) -> Result<Complex64> {
    let ft = trim(f.to_vec(), 1e-13);
    let gt = trim(g.to_vec(), 1e-13);
    let m = degree(&ft).ok_or(Error::ZeroPolynomial)?;
    let n = degree(&gt).ok_or(Error::ZeroPolynomial)?;
    Ok(sylvester_resultant_formal(&ft, m, &gt, n))
}

/// Meromorphic resultant of f = f1/f2 and g = g1/g2 on the sphere by the
/// four-resultant product with leading-coefficient prefactors at infinity.
/// Floating-point twin of the exact route; assumes a generic pair.
pub fn res_four_poly(
    f1: &[Complex64],
    f2: &[Complex64],
    g1: &[Complex64],
    g2: &[Complex64],
) -> Result<Complex64> {
    let f1 = trim(f1.to_vec(), 1e-13);
    let f2 = trim(f2.to_vec(), 1e-13);
    let g1 = trim(g1.to_vec(), 1e-13);
    let g2 = trim(g2.to_vec(), 1e-13);
    let df1 = degree(&f1).ok_or(Error::ZeroPolynomial)? as i64;
    let df2 = degree(&f2).ok_or(Error::ZeroPolynomial)? as i64;
    let dg1 = degree(&g1).ok_or(Error::ZeroPolynomial)? as i64;
    let dg2 = degree(&g2).ok_or(Error::ZeroPolynomial)? as i64;
    let ord_inf_f = df2 - df1;
    let ord_inf_g = dg2 - dg1;
    let mut pre = Complex64::new(1.0, 0.0);
    if ord_inf_g != 0 {
        // f(inf) finite and nonzero is required here (generic pair)
        if ord_inf_f != 0 {
            return Err(Error::NotAdmissible);
        }
        let finf = f1.last().unwrap() / f2.last().unwrap();
        pre *= finf.powi(ord_inf_g as i32);
    }
    if ord_inf_f != 0 {
        if ord_inf_g != 0 {
            return Err(Error::NotAdmissible);
        }
        let ginf = g1.last().unwrap() / g2.last().unwrap();
        pre *= ginf.powi(ord_inf_f as i32);
    }
    let r11 = sylvester_resultant(&f1, &g1)?;
    let r22 = sylvester_resultant(&f2, &g2)?;
    let r12 = sylvester_resultant(&f1, &g2)?;
    let r21 = sylvester_resultant(&f2, &g1)?;
    Ok(pre * r11 * r22 / (r12 * r21))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn roots_of_quadratics() {
        // z^2 - 1
        let r = roots(&[(-1.0).into(), 0.0.into(), 1.0.into()], 1e-10).unwrap();
        assert_eq!(r.len(), 2);
        let mut vals: Vec<f64> = r.iter().map(|(z, _)| z.re).collect();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] + 1.0).abs() < 1e-9 && (vals[1] - 1.0).abs() < 1e-9);
        // z^2 + 1
        let r = roots(&[1.0.into(), 0.0.into(), 1.0.into()], 1e-10).unwrap();
        assert!(r.iter().all(|(z, _)| (z.im.abs() - 1.0).abs() < 1e-9));
    }

    #[test]
    fn double_root_clusters() {
        // (z-1)^2
        let r = roots(&[1.0.into(), (-2.0).into(), 1.0.into()], 1e-10).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].1, 2);
        assert!((r[0].0 - Complex64::new(1.0, 0.0)).norm() < 1e-5);
    }

    #[test]
    fn float_resultant_matches_exact() {
        // Res(z^2-1, z^2-4) = 9
        let f = vec![(-1.0).into(), 0.0.into(), 1.0.into()];
        let g = vec![(-4.0).into(), 0.0.into(), 1.0.into()];
        assert!(close(
            sylvester_resultant(&f, &g).unwrap(),
            Complex64::new(9.0, 0.0),
            1e-12
        ));
    }

    #[test]
    fn four_poly_float_route() {
        // f = z/(z-1/2), g = (z-2)/(z-3): Res = 10/9
        let v = res_four_poly(
            &[0.0.into(), 1.0.into()],
            &[(-0.5).into(), 1.0.into()],
            &[(-2.0).into(), 1.0.into()],
            &[(-3.0).into(), 1.0.into()],
        )
        .unwrap();
        assert!(close(v, Complex64::new(10.0 / 9.0, 0.0), 1e-12));
    }
}
