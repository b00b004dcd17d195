//! Exponential transforms of plane domains: the defining double integral
//! evaluated by adaptive midpoint quadrature (the numeric oracle), closed
//! forms for disks and for images of univalent rational maps via resultants,
//! the structured-determinant form for polynomial maps, pushforward under
//! proper rational maps, the algebraic boundary curve, the moment-matrix
//! order test, and the four-point extended transform.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::bivar::BivariatePolynomial;
use crate::cpoly;
use crate::divisor::RationalFunction;
use crate::elimination::elimination_function;
use crate::error::{Error, Result};
use crate::poly::{reciprocal_poly, sylvester_resultant_formal, Polynomial};
use crate::scalar::ComplexRational;

/// A bounded plane region: a disk, a simple polygon (star-shaped around its
/// vertex centroid), or the image of the unit disk under a univalent
/// rational map.
#[derive(Clone, Debug)]
pub enum RegionSpec {
    Disk { center: Complex64, radius: f64 },
    Polygon { vertices: Vec<Complex64> },
    MapImage { f: RationalFunction },
}

impl RegionSpec {
    pub fn disk(center: Complex64, radius: f64) -> Result<Self> {
        if radius <= 0.0 {
            return Err(Error::InvalidArgument("radius must be positive".into()));
        }
        Ok(RegionSpec::Disk { center, radius })
    }

    pub fn map_image(f: RationalFunction) -> Result<Self> {
        univalence_certificate(&f)?;
        Ok(RegionSpec::MapImage { f })
    }

    pub fn polygon(vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidArgument("polygon needs >= 3 vertices".into()));
        }
        Ok(RegionSpec::Polygon { vertices })
    }

    /// Signed distance estimate to the region (negative inside).
    pub fn distance(&self, p: Complex64) -> f64 {
        match self {
            RegionSpec::Disk { center, radius } => (p - center).norm() - radius,
            RegionSpec::Polygon { vertices } => {
                let mut d = f64::INFINITY;
                let n = vertices.len();
                for i in 0..n {
                    d = d.min(segment_distance(vertices[i], vertices[(i + 1) % n], p));
                }
                if point_in_polygon(vertices, p) {
                    -d
                } else {
                    d
                }
            }
            RegionSpec::MapImage { f } => {
                let m = 512;
                let mut d = f64::INFINITY;
                let mut winding = 0.0f64;
                let mut prev = f.eval_complex(Complex64::new(1.0, 0.0)) - p;
                for k in 1..=m {
                    let t = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
                    let b = f.eval_complex(Complex64::new(t.cos(), t.sin())) - p;
                    d = d.min(b.norm());
                    winding += (b / prev).arg();
                    prev = b;
                }
                if winding.abs() > std::f64::consts::PI {
                    -d
                } else {
                    d
                }
            }
        }
    }
}

fn segment_distance(a: Complex64, b: Complex64, p: Complex64) -> f64 {
    let ab = b - a;
    let denom = ab.norm_sqr();
    let t = if denom > 0.0 {
        (((p - a) * ab.conj()).re / denom).clamp(0.0, 1.0)
    } else {
        0.0
    };
    (p - (a + t * ab)).norm()
}

fn point_in_polygon(vs: &[Complex64], p: Complex64) -> bool {
    let mut inside = false;
    let n = vs.len();
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (vs[i], vs[j]);
        if (a.im > p.im) != (b.im > p.im) {
            let x = a.re + (p.im - a.im) / (b.im - a.im) * (b.re - a.re);
            if p.re < x {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

/// One midpoint-rule pass over the region at dyadic refinement `level`,
/// accumulating `nout` weighted integrands.
fn level_sum<E>(region: &RegionSpec, level: u32, nout: usize, eval: &E) -> Vec<Complex64>
where
    E: Fn(Complex64, &mut [Complex64]) + Sync,
{
    let add = |mut a: Vec<Complex64>, b: Vec<Complex64>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        a
    };
    match region {
        RegionSpec::Disk { center, radius } => {
            let n_r = 16usize << level;
            let n_t = 4 * n_r;
            let dr = 1.0 / n_r as f64;
            let dt = 2.0 * std::f64::consts::PI / n_t as f64;
            (0..n_r)
                .into_par_iter()
                .map(|i| {
                    let rho = (i as f64 + 0.5) * dr;
                    let w = radius * radius * rho * dr * dt;
                    let mut acc = vec![Complex64::default(); nout];
                    let mut scratch = vec![Complex64::default(); nout];
                    for j in 0..n_t {
                        let t = (j as f64 + 0.5) * dt;
                        let zeta =
                            center + radius * rho * Complex64::new(t.cos(), t.sin());
                        scratch.iter_mut().for_each(|s| *s = Complex64::default());
                        eval(zeta, &mut scratch);
                        for (a, s) in acc.iter_mut().zip(&scratch) {
                            *a += w * s;
                        }
                    }
                    acc
                })
                .reduce(|| vec![Complex64::default(); nout], add)
        }
        RegionSpec::MapImage { f } => {
            let n_r = 16usize << level;
            let n_t = 4 * n_r;
            let dr = 1.0 / n_r as f64;
            let dt = 2.0 * std::f64::consts::PI / n_t as f64;
            (0..n_r)
                .into_par_iter()
                .map(|i| {
                    let rho = (i as f64 + 0.5) * dr;
                    let w0 = rho * dr * dt;
                    let mut acc = vec![Complex64::default(); nout];
                    let mut scratch = vec![Complex64::default(); nout];
                    for j in 0..n_t {
                        let t = (j as f64 + 0.5) * dt;
                        let u = rho * Complex64::new(t.cos(), t.sin());
                        let zeta = f.eval_complex(u);
                        let jac = f.derivative_complex(u).norm_sqr();
                        scratch.iter_mut().for_each(|s| *s = Complex64::default());
                        eval(zeta, &mut scratch);
                        let w = w0 * jac;
                        for (a, s) in acc.iter_mut().zip(&scratch) {
                            *a += w * s;
                        }
                    }
                    acc
                })
                .reduce(|| vec![Complex64::default(); nout], add)
        }
        RegionSpec::Polygon { vertices } => {
            let n = vertices.len();
            let centroid = vertices.iter().sum::<Complex64>() / n as f64;
            let s = 4usize << level;
            (0..n)
                .into_par_iter()
                .map(|k| {
                    let a = centroid;
                    let u = (vertices[k] - a) / s as f64;
                    let v = (vertices[(k + 1) % n] - a) / s as f64;
                    // signed triangle area over s^2 cells
                    let area = 0.5 * (u.conj() * v).im;
                    let mut acc = vec![Complex64::default(); nout];
                    let mut scratch = vec![Complex64::default(); nout];
                    let third = 1.0 / 3.0;
                    for i in 0..s {
                        for j in 0..(s - i) {
                            let c_up =
                                a + u * (i as f64 + third) + v * (j as f64 + third);
                            scratch.iter_mut().for_each(|x| *x = Complex64::default());
                            eval(c_up, &mut scratch);
                            for (x, sc) in acc.iter_mut().zip(&scratch) {
                                *x += area * sc;
                            }
                            if i + j < s - 1 {
                                let c_dn = a
                                    + u * (i as f64 + 2.0 * third)
                                    + v * (j as f64 + 2.0 * third);
                                scratch
                                    .iter_mut()
                                    .for_each(|x| *x = Complex64::default());
                                eval(c_dn, &mut scratch);
                                for (x, sc) in acc.iter_mut().zip(&scratch) {
                                    *x += area * sc;
                                }
                            }
                        }
                    }
                    acc
                })
                .reduce(|| vec![Complex64::default(); nout], add)
        }
    }
}

/// Adaptive midpoint quadrature with Richardson extrapolation across dyadic
/// refinements; converged when two consecutive extrapolants agree within
/// `tol` componentwise (relative to scale).
fn integrate_many<E>(
    region: &RegionSpec,
    nout: usize,
    eval: &E,
    tol: f64,
) -> Result<Vec<Complex64>>
where
    E: Fn(Complex64, &mut [Complex64]) + Sync,
{
    let mut prev_plain = level_sum(region, 0, nout, eval);
    let mut prev_rich: Option<Vec<Complex64>> = None;
    for level in 1..=6u32 {
        let plain = level_sum(region, level, nout, eval);
        // midpoint error is O(h^2): eliminate the leading term
        let rich: Vec<Complex64> = plain
            .iter()
            .zip(&prev_plain)
            .map(|(a, b)| (4.0 * a - b) / 3.0)
            .collect();
        if let Some(pr) = &prev_rich {
            let scale = rich.iter().map(|v| v.norm()).fold(1.0f64, f64::max);
            let diff = rich
                .iter()
                .zip(pr)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0f64, f64::max);
            if diff <= tol * scale {
                return Ok(rich);
            }
        }
        prev_rich = Some(rich);
        prev_plain = plain;
    }
    Err(Error::QuadratureDiverged)
}

fn require_outside(region: &RegionSpec, pts: &[Complex64], tol: f64) -> Result<()> {
    let margin = tol.max(1e-9).sqrt() * 1e-3 + 1e-6;
    for &p in pts {
        if region.distance(p) <= margin {
            return Err(Error::PointInsideRegion);
        }
    }
    Ok(())
}

/// Exponential transform by direct quadrature:
/// `exp(-(1/pi) Int_region dA(zeta) / ((zeta - z)(conj zeta - conj w)))`.
pub fn exp_transform_numeric(
    region: &RegionSpec,
    z: Complex64,
    w: Complex64,
    tol: f64,
) -> Result<Complex64> {
    require_outside(region, &[z, w], tol)?;
    let eval = |zeta: Complex64, out: &mut [Complex64]| {
        out[0] = ((zeta - z) * (zeta.conj() - w.conj())).inv();
    };
    let i = integrate_many(region, 1, &eval, tol * 0.1)?;
    Ok((-i[0] / std::f64::consts::PI).exp())
}

/// Closed form for the disk of radius `r` at the origin: `1 - r^2/(z conj w)`.
pub fn exp_transform_disk(r: f64, z: Complex64, w: Complex64) -> Result<Complex64> {
    if r <= 0.0 {
        return Err(Error::InvalidArgument("radius must be positive".into()));
    }
    if z.norm() <= r || w.norm() <= r {
        return Err(Error::PointInsideRegion);
    }
    Ok(Complex64::new(1.0, 0.0) - r * r / (z * w.conj()))
}

/// Numeric univalence certificate for a rational map of the closed unit
/// disk: poles stay outside, the derivative does not vanish on an interior
/// mesh, and boundary samples are injective.
pub fn univalence_certificate(f: &RationalFunction) -> Result<()> {
    if f.is_constant() {
        return Err(Error::NotUnivalent("constant map"));
    }
    if f.den().degree().unwrap_or(0) > 0 {
        for (root, _) in cpoly::roots(&f.den().to_complex_coeffs(), 1e-10)? {
            if root.norm() <= 1.0 + 1e-9 {
                return Err(Error::NotUnivalent("pole in the closed disk"));
            }
        }
    }
    let m = 256usize;
    let boundary: Vec<Complex64> = (0..m)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
            f.eval_complex(Complex64::new(t.cos(), t.sin()))
        })
        .collect();
    let scale = boundary.iter().map(|z| z.norm()).fold(1e-300, f64::max);
    for i in 0..m {
        for j in i + 4..m {
            if m + i - j < 4 {
                continue; // circular neighbours
            }
            if (boundary[i] - boundary[j]).norm() < 1e-6 * scale {
                return Err(Error::NotUnivalent("boundary mesh self-intersects"));
            }
        }
    }
    let _ = scale;
    // critical points: roots of A'B - AB' must stay outside the closed disk
    let a = f.num().to_complex_coeffs();
    let b = f.den().to_complex_coeffs();
    let critical = cpoly::sub(
        &cpoly::mul(&cpoly::derivative(&a), &b),
        &cpoly::mul(&a, &cpoly::derivative(&b)),
    );
    let critical = cpoly::trim(critical, 1e-14);
    if cpoly::degree(&critical).is_some_and(|d| d > 0) {
        for (root, _) in cpoly::roots(&critical, 1e-10)? {
            if root.norm() <= 1.0 + 1e-9 {
                return Err(Error::NotUnivalent("critical point in the closed disk"));
            }
        }
    }
    Ok(())
}

/// Exponential transform of `F(unit disk)` as the resultant
/// `Res_u(F(u) - z, F*(u) - conj w)` with `F*(u) = conj(F(1/conj u))`.
pub fn exp_transform_qd(
    f: &RationalFunction,
    z: Complex64,
    w: Complex64,
) -> Result<Complex64> {
    univalence_certificate(f)?;
    let region = RegionSpec::MapImage { f: f.clone() };
    require_outside(&region, &[z, w], 1e-9)?;
    let n = f.order();
    let fnum = f.num().to_complex_coeffs();
    let fden = f.den().to_complex_coeffs();
    // F* = rev(conj num) / rev(conj den) at common formal degree n
    let rev_conj = |p: &[Complex64]| -> Vec<Complex64> {
        let mut out = vec![Complex64::default(); n + 1];
        for (i, c) in p.iter().enumerate() {
            out[n - i] = c.conj();
        }
        out
    };
    let fs_num = rev_conj(&fnum);
    let fs_den = rev_conj(&fden);
    let sub_scaled = |p: &[Complex64], q: &[Complex64], s: Complex64| -> Vec<Complex64> {
        cpoly::sub(p, &cpoly::scale(q, s))
    };
    let f1 = sub_scaled(&fnum, &fden, z);
    let g1 = sub_scaled(&fs_num, &fs_den, w.conj());
    cpoly::res_four_poly(&f1, &fden, &g1, &fs_den)
}

/// Rational kernel `E(z, w) = c * N(z, conj w) / (T1(z) T2(conj w))`; the
/// second argument slot is anti-holomorphic (it is conjugated on entry), so
/// Hermitian symmetry is structural. At infinity the transform continues to
/// one.
#[derive(Clone, Debug)]
pub struct HermitianRationalKernel {
    pub constant: Complex64,
    pub num: Vec<Vec<Complex64>>,
    pub t1: Vec<Complex64>,
    pub t2: Vec<Complex64>,
}

impl HermitianRationalKernel {
    /// Kernel of the disk of radius `r` centered at the origin.
    pub fn disk(r: f64) -> Result<Self> {
        if r <= 0.0 {
            return Err(Error::InvalidArgument("radius must be positive".into()));
        }
        Ok(HermitianRationalKernel {
            constant: Complex64::new(1.0, 0.0),
            num: vec![
                vec![Complex64::new(-r * r, 0.0), Complex64::default()],
                vec![Complex64::default(), Complex64::new(1.0, 0.0)],
            ],
            t1: vec![Complex64::default(), Complex64::new(1.0, 0.0)],
            t2: vec![Complex64::default(), Complex64::new(1.0, 0.0)],
        })
    }

    pub fn eval(&self, z: Complex64, w: Complex64) -> Complex64 {
        let v = w.conj();
        let mut num = Complex64::default();
        for row in self.num.iter().rev() {
            let mut rv = Complex64::default();
            for c in row.iter().rev() {
                rv = rv * v + c;
            }
            num = num * z + rv;
        }
        self.constant * num / (cpoly::eval(&self.t1, z) * cpoly::eval(&self.t2, v))
    }

    /// Largest relative Hermitian defect `|E(w,z) - conj E(z,w)|` over a
    /// sample grid outside the given radius.
    pub fn hermitian_defect(&self, radius: f64) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..6 {
            for j in 0..6 {
                let z = radius * Complex64::new(1.1 + 0.3 * i as f64, 0.2 * j as f64 - 0.5);
                let w = radius * Complex64::new(1.3 + 0.2 * j as f64, 0.7 - 0.25 * i as f64);
                let a = self.eval(w, z);
                let b = self.eval(z, w).conj();
                worst = worst.max((a - b).norm() / (1.0 + b.norm()));
            }
        }
        worst
    }
}

/// Closed-form kernel of the image of a univalent rational map `F = A/B`
/// (monic `B`): `Res(B, B#) * Res(P_z, P#_w) / (T(z) conj(T(w)))` with
/// `P_t = A - t B` and `T(z) = (F(0) - z)^{n-m} Res(P_z, B#)`; exact data
/// interpolated over Gaussian-rational nodes, then frozen as floats.
pub fn exp_transform_explicit(f: &RationalFunction) -> Result<HermitianRationalKernel> {
    univalence_certificate(f)?;
    let a = f.num().clone();
    let b = f.den().clone();
    let n = f.order();
    let m = b.degree().unwrap_or(0);
    let b_sharp = if m == 0 {
        Polynomial::one()
    } else {
        reciprocal_poly(&b)?
    };
    let constant = sylvester_resultant_formal(&b, m, &b_sharp, m);
    // N(z, v) = Res_formal(n,n)(A - z B, rev(conj A) - v rev(conj B))
    let ra = a.conj().reverse_at(n);
    let rb = b.conj().reverse_at(n);
    let nodes: Vec<ComplexRational> = (0..=(n as i64))
        .map(|k| ComplexRational::from_int(k + 2))
        .collect();
    let mut value_rows: Vec<Vec<ComplexRational>> = Vec::with_capacity(n + 1);
    for zs in &nodes {
        let pz = a.sub(&b.scale(zs));
        let mut row = Vec::with_capacity(n + 1);
        for vs in &nodes {
            let pv = ra.sub(&rb.scale(vs));
            row.push(sylvester_resultant_formal(&pz, n, &pv, n));
        }
        value_rows.push(row);
    }
    // tensor interpolation (w first, then z)
    let mut w_polys = Vec::with_capacity(n + 1);
    for row in &value_rows {
        let pts: Vec<_> = nodes.iter().cloned().zip(row.iter().cloned()).collect();
        w_polys.push(Polynomial::interpolate(&pts));
    }
    let mut grid = vec![vec![ComplexRational::zero(); n + 1]; n + 1];
    for j in 0..=n {
        let pts: Vec<_> = nodes
            .iter()
            .cloned()
            .zip(w_polys.iter().map(|p| p.coeff(j)))
            .collect();
        let col = Polynomial::interpolate(&pts);
        for (i, row) in grid.iter_mut().enumerate() {
            row[j] = col.coeff(i);
        }
    }
    // T(z) = (F(0) - z)^{n-m} Res_formal(n,m)(A - z B, B#)
    let f0 = a.coeff(0) / b.coeff(0);
    let mut t_pts = Vec::with_capacity(m + 1);
    for zs in nodes.iter().take(m + 1) {
        let pz = a.sub(&b.scale(zs));
        t_pts.push((zs.clone(), sylvester_resultant_formal(&pz, n, &b_sharp, m)));
    }
    let t_res = Polynomial::interpolate(&t_pts);
    let lin = Polynomial::new(vec![f0, -ComplexRational::one()]);
    let t = lin.pow(n - m).mul(&t_res);
    let t1: Vec<Complex64> = t.to_complex_coeffs();
    let t2: Vec<Complex64> = t.conj().to_complex_coeffs();
    Ok(HermitianRationalKernel {
        constant: constant.to_complex64(),
        num: grid
            .iter()
            .map(|r| r.iter().map(|c| c.to_complex64()).collect())
            .collect(),
        t1,
        t2,
    })
}

/// Structured-determinant form for a polynomial map
/// `F = a_1 u + .. + a_n u^n`: the 2n x 2n two-block Toeplitz determinant in
/// `x_i = a_i / z` and `y_i = conj(a_i) / conj(w)`.
pub fn exp_transform_polydet(
    coeffs: &[Complex64],
    z: Complex64,
    w: Complex64,
) -> Result<Complex64> {
    let mut a = coeffs.to_vec();
    while a.last().is_some_and(|c| c.norm() == 0.0) {
        a.pop();
    }
    let n = a.len();
    if n == 0 {
        return Err(Error::InvalidArgument("zero map".into()));
    }
    if z.norm() == 0.0 || w.norm() == 0.0 {
        return Err(Error::PointInsideRegion);
    }
    let x: Vec<Complex64> = a.iter().map(|c| c / z).collect();
    let y: Vec<Complex64> = a.iter().map(|c| c.conj() / w.conj()).collect();
    let size = 2 * n;
    let mut mat = vec![vec![Complex64::default(); size]; size];
    for j in 0..n {
        // column j: -1, x_1, .., x_n starting at row j
        mat[j][j] = Complex64::new(-1.0, 0.0);
        for k in 1..=n {
            mat[j + k][j] = x[k - 1];
        }
        // column n+j: y_n, .., y_1, -1 starting at row j
        for k in 0..n {
            mat[j + k][n + j] = y[n - 1 - k];
        }
        mat[j + n][n + j] = Complex64::new(-1.0, 0.0);
    }
    Ok(cpoly::det_lu(mat))
}

/// Pushforward of a kernel under a `p`-valent proper rational map:
/// `E2(z,w)^p = prod_{alpha, beta} E1(alpha, beta)^{Dz(alpha) Dw(beta)}`
/// over the divisors of `F - z` and `F - w` (numeric roots; factors at
/// infinity contribute one). Returns the `p`-th power of the transform.
pub fn pushforward_transform(
    e1: &HermitianRationalKernel,
    f: &RationalFunction,
    p: u32,
    z: Complex64,
    w: Complex64,
) -> Result<Complex64> {
    if p as usize != f.order() {
        return Err(Error::InvalidArgument(
            "valence must equal the order of the map".into(),
        ));
    }
    let divisor_of_level = |u: Complex64| -> Result<Vec<(Complex64, i64)>> {
        let num = cpoly::sub(&f.num().to_complex_coeffs(), &cpoly::scale(&f.den().to_complex_coeffs(), u));
        let mut pts: Vec<(Complex64, i64)> = Vec::new();
        for (r, m) in cpoly::roots(&num, 1e-11)? {
            pts.push((r, m as i64));
        }
        if f.den().degree().unwrap_or(0) > 0 {
            for (r, m) in cpoly::roots(&f.den().to_complex_coeffs(), 1e-11)? {
                pts.push((r, -(m as i64)));
            }
        }
        // the infinity part would carry exponent against E1(inf, ..) = 1
        Ok(pts)
    };
    let dz = divisor_of_level(z)?;
    let dw = divisor_of_level(w)?;
    let mut acc = Complex64::new(1.0, 0.0);
    for &(alpha, ma) in &dz {
        for &(beta, mb) in &dw {
            let e = e1.eval(alpha, beta);
            acc *= e.powi((ma * mb) as i32);
        }
    }
    Ok(acc)
}

/// Algebraic boundary curve of `F(unit disk)`: the cleared numerator
/// `Q(z, w)` of `Res_u(F(u) - z, F*(u) - w)`; the boundary satisfies
/// `Q(z, conj z) = 0` and the graph of the Schwarz function lies on `Q = 0`.
pub fn schwarz_curve(f: &RationalFunction) -> Result<BivariatePolynomial> {
    univalence_certificate(f)?;
    let fs = f.conj_reflect()?;
    let e = elimination_function(f, &fs)?;
    Ok(e.q)
}

/// Moment matrices of a region and the order report: `a[m][n]` are the
/// complex moments `Int z^m conj(z)^n dA`, `b` is their exponential
/// recoding (of the area-normalized moments `a/pi`), and `order` the
/// smallest `k <= N` with a vanishing leading `b`-determinant
/// (`|det| < tol * max_entry^{k+1}`).
#[derive(Clone, Debug)]
pub struct MomentReport {
    pub a: Vec<Vec<Complex64>>,
    pub b: Vec<Vec<Complex64>>,
    pub normalized_dets: Vec<f64>,
    pub order: Option<usize>,
}

pub fn moment_matrix(region: &RegionSpec, n: usize, tol: f64) -> Result<MomentReport> {
    let k = n + 1;
    let eval = |zeta: Complex64, out: &mut [Complex64]| {
        let mut zp = Complex64::new(1.0, 0.0);
        for m in 0..k {
            let mut zq = Complex64::new(1.0, 0.0);
            for nn in 0..k {
                out[m * k + nn] = zp * zq;
                zq *= zeta.conj();
            }
            zp *= zeta;
        }
    };
    let flat = integrate_many(region, k * k, &eval, (tol * 0.01).min(1e-8))?;
    let a: Vec<Vec<Complex64>> = (0..k)
        .map(|m| (0..k).map(|nn| flat[m * k + nn]).collect())
        .collect();

    // b-recoding: 1 - exp(-S) with S = sum (a_mn/pi) u^{m+1} v^{n+1},
    // truncated at total u,v powers k+1
    let dim = k + 1;
    let mut s = vec![vec![Complex64::default(); dim + 1]; dim + 1];
    for m in 0..k {
        for nn in 0..k {
            s[m + 1][nn + 1] = a[m][nn] / std::f64::consts::PI;
        }
    }
    let mul = |x: &Vec<Vec<Complex64>>, y: &Vec<Vec<Complex64>>| {
        let mut out = vec![vec![Complex64::default(); dim + 1]; dim + 1];
        for i in 0..=dim {
            for j in 0..=dim {
                if x[i][j].norm() == 0.0 {
                    continue;
                }
                for p in 0..=(dim - i) {
                    for q in 0..=(dim - j) {
                        let t = x[i][j] * y[p][q];
                        out[i + p][j + q] += t;
                    }
                }
            }
        }
        out
    };
    // B = 1 - exp(-S) = S - S^2/2! + S^3/3! - ...
    let mut b_series = vec![vec![Complex64::default(); dim + 1]; dim + 1];
    let mut power = s.clone();
    let mut factorial = 1.0f64;
    for ord in 1..=dim {
        factorial *= ord as f64;
        let sign = if ord % 2 == 1 { 1.0 } else { -1.0 };
        for i in 0..=dim {
            for j in 0..=dim {
                b_series[i][j] += sign / factorial * power[i][j];
            }
        }
        if ord < dim {
            power = mul(&power, &s);
        }
    }
    let b: Vec<Vec<Complex64>> = (0..k)
        .map(|m| (0..k).map(|nn| b_series[m + 1][nn + 1]).collect())
        .collect();

    let mut normalized = Vec::with_capacity(k);
    let mut order = None;
    for kk in 0..k {
        let sub: Vec<Vec<Complex64>> = (0..=kk)
            .map(|i| (0..=kk).map(|j| b[i][j]).collect())
            .collect();
        let max_entry = sub
            .iter()
            .flatten()
            .map(|v| v.norm())
            .fold(1e-30f64, f64::max);
        let det = cpoly::det_lu(sub);
        let norm_det = det.norm() / max_entry.powi(kk as i32 + 1);
        normalized.push(norm_det);
        if order.is_none() && norm_det < tol {
            order = Some(kk);
        }
    }
    Ok(MomentReport {
        a,
        b,
        normalized_dets: normalized,
        order,
    })
}

/// Four-point extended exponential transform
/// `exp(-(1/pi) Int (1/(zeta-z) - 1/(zeta-z0)) conj-slot (w, w0) dA)`.
pub fn extended_exp_transform(
    region: &RegionSpec,
    z: Complex64,
    w: Complex64,
    z0: Complex64,
    w0: Complex64,
    tol: f64,
) -> Result<Complex64> {
    require_outside(region, &[z, w, z0, w0], tol)?;
    if z == z0 || w == w0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let eval = |zeta: Complex64, out: &mut [Complex64]| {
        let a = (zeta - z).inv() - (zeta - z0).inv();
        let b = (zeta.conj() - w.conj()).inv() - (zeta.conj() - w0.conj()).inv();
        out[0] = a * b;
    };
    let i = integrate_many(region, 1, &eval, tol * 0.1)?;
    Ok((-i[0] / std::f64::consts::PI).exp())
}
