//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured figures (run with `--nocapture` to see them).

use std::time::Instant;

use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use reslab_core::elimination::{elimination_function, extended_elimination, graph_numerator};
use reslab_core::szego::{day_formula_exact, toeplitz_det_exact};
use reslab_core::torus::{TorusDivisorPair, TorusModulus};
use reslab_core::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_rational(r: &mut ChaCha8Rng, span: i64, dens: &[i64]) -> ComplexRational {
    let p = r.gen_range(-span..=span);
    let q = dens[r.gen_range(0..dens.len())];
    ComplexRational::from_ratio(p, q)
}

/// Pairwise distinct rationals, rejection-sampled.
fn distinct_rationals(r: &mut ChaCha8Rng, count: usize, span: i64) -> Vec<ComplexRational> {
    let dens = [1i64, 2, 3, 4, 5];
    let mut out: Vec<ComplexRational> = Vec::with_capacity(count);
    while out.len() < count {
        let c = rand_rational(r, span, &dens);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn factored_pair(
    r: &mut ChaCha8Rng,
    ord_f: usize,
    ord_g: usize,
) -> (RationalFunction, RationalFunction) {
    let pts = distinct_rationals(r, 2 * ord_f + 2 * ord_g, 12);
    let (zf, rest) = pts.split_at(ord_f);
    let (pf, rest) = rest.split_at(ord_f);
    let (zg, pg) = rest.split_at(ord_g);
    let f = RationalFunction::from_linear_factors(ComplexRational::one(), zf, pf).unwrap();
    let g = RationalFunction::from_linear_factors(ComplexRational::one(), zg, pg).unwrap();
    (f, g)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

#[test]
fn criterion_01_route_agreement_exact() {
    let mut r = rng(101);
    let start = Instant::now();
    let trials = 200;
    for t in 0..trials {
        let ord_f = r.gen_range(1..=5);
        let ord_g = r.gen_range(1..=5);
        let (f, g) = factored_pair(&mut r, ord_f, ord_g);
        let v1 = res_divisor(&f, &g).unwrap();
        let v2 = res_four_poly(&f, &g).unwrap();
        assert_eq!(v1, v2, "divisor vs four-poly at trial {t}");
        let ff = f.factored().unwrap();
        let gf = g.factored().unwrap();
        let to_pts = |v: &[ComplexRational]| -> Vec<PointP1> {
            v.iter().cloned().map(PointP1::Finite).collect()
        };
        let v3 = res_cross_ratio(
            &to_pts(&ff.zeros),
            &to_pts(&ff.poles),
            &to_pts(&gf.zeros),
            &to_pts(&gf.poles),
        )
        .unwrap();
        assert_eq!(v1, ResValue::Finite(v3), "cross-ratio route at trial {t}");
        let sym = res_divisor(&g, &f).unwrap();
        assert_eq!(v1, sym, "symmetry at trial {t}");
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 10.0, "runtime {dt:?} exceeds 10 s");
    println!(
        "[criterion 1] PASS - {trials} factored pairs: divisor = four-poly = cross-ratio and \
         Res(f,g) = Res(g,f) exactly, in {:.2} s",
        dt.as_secs_f64()
    );
}

fn random_poly(r: &mut ChaCha8Rng, deg: usize) -> Polynomial {
    let dens = [1i64, 2, 3];
    loop {
        let mut coeffs: Vec<ComplexRational> =
            (0..=deg).map(|_| rand_rational(r, 6, &dens)).collect();
        // keep the degree honest
        if coeffs[deg].is_zero() {
            coeffs[deg] = ComplexRational::one();
        }
        let p = Polynomial::new(coeffs);
        if p.degree() == Some(deg) {
            return p;
        }
    }
}

#[test]
fn criterion_02_polynomial_determinant_agreement() {
    let mut r = rng(202);
    let trials = 200;
    for t in 0..trials {
        let m = r.gen_range(1..=6);
        let n = r.gen_range(m..=6);
        let f = random_poly(&mut r, m);
        let mut g = random_poly(&mut r, n);
        if g.coeff(0).is_zero() {
            g = g.add(&Polynomial::one());
            if g.degree() != Some(n) {
                continue;
            }
        }
        let syl = sylvester_resultant(&f, &g).unwrap();
        let bez = bezout_resultant(&f, &g).unwrap();
        assert_eq!(syl, bez, "bezout at trial {t}");
        let toe = toeplitz_resultant(&f, &g, n as i64).unwrap();
        assert_eq!(syl, toe, "toeplitz at trial {t}");
        let toe2 = toeplitz_resultant(&f, &g, n as i64 + 2).unwrap();
        assert_eq!(syl, toe2, "toeplitz N-stability at trial {t}");
    }
    // discriminant and polarization identities on monic split polynomials
    for t in 0..40 {
        let pts = distinct_rationals(&mut r, 5, 20);
        let (fz, gz) = pts.split_at(3);
        let f = Polynomial::from_roots(fz);
        let g = Polynomial::from_roots(gz);
        let dis_f = discriminant_pol(&f).unwrap();
        let dis_g = discriminant_pol(&g).unwrap();
        let dis_fg = discriminant_pol(&f.mul(&g)).unwrap();
        let res = sylvester_resultant(&f, &g).unwrap();
        assert_eq!(
            dis_fg,
            dis_f * dis_g * res.pow(2).unwrap(),
            "polarization at trial {t}"
        );
    }
    println!(
        "[criterion 2] PASS - {trials} pairs deg <= 6: sylvester = bezout = toeplitz exactly; \
         Dis(fg) = Dis(f) Dis(g) Res^2 on 40 split pairs"
    );
}

#[test]
fn criterion_03_weil_reciprocity() {
    let mut r = rng(303);
    let trials = 100;
    for t in 0..trials {
        let ord_f = r.gen_range(1..=3);
        let ord_g = r.gen_range(1..=3);
        let (mut f, mut g) = factored_pair(&mut r, ord_f, ord_g);
        if t % 2 == 0 {
            // plant a shared zero and a zero-meets-pole collision
            let ff = f.factored().unwrap().clone();
            let gf = g.factored().unwrap().clone();
            let mut gz = gf.zeros.clone();
            let mut gp = gf.poles.clone();
            gz[0] = ff.zeros[0].clone();
            if ord_g > 1 {
                gp[0] = ff.zeros.last().unwrap().clone();
            }
            f = RationalFunction::from_linear_factors(ff.scale, &ff.zeros, &ff.poles).unwrap();
            g = RationalFunction::from_linear_factors(gf.scale, &gz, &gp).unwrap();
        }
        let w = weil_product(&f, &g).unwrap();
        assert!(w.is_one(), "weil product != 1 at trial {t}: {w}");
    }
    println!(
        "[criterion 3] PASS - weil product = 1 exactly on {trials} pairs (half with planted \
         common zeros/poles)"
    );
}

#[test]
fn criterion_04_reduced_resultant_recovers_polynomial() {
    let mut r = rng(404);
    let trials = 100;
    for t in 0..trials {
        let m = r.gen_range(1..=5);
        let n = r.gen_range(1..=5);
        let f = random_poly(&mut r, m);
        let g = random_poly(&mut r, n);
        let rf = RationalFunction::from_polynomial(f.clone()).unwrap();
        let rg = RationalFunction::from_polynomial(g.clone()).unwrap();
        let red = reduced_resultant(&rf, &rg).unwrap();
        let syl = sylvester_resultant(&f, &g).unwrap();
        assert_eq!(red, syl, "trial {t}");
    }
    println!(
        "[criterion 4] PASS - reduced resultant at infinity equals the Sylvester value exactly \
         on {trials} polynomial pairs"
    );
}

#[test]
fn criterion_05_sum_identities() {
    let mut r = rng(505);
    let sets_per_d = 20;
    let mut checked = 0usize;
    for d in 1..=5usize {
        for _ in 0..sets_per_d {
            let pts = distinct_rationals(&mut r, 2 * d, 30);
            let (a, b) = pts.split_at(d);
            for m in 0..=d {
                for j in subsets_colex(d, m) {
                    let s = sum_identity(a, b, m, &j).unwrap();
                    assert!(s.is_one(), "sum != 1 at d={d} m={m} J={j:?}");
                    checked += 1;
                }
            }
            // minor route on a random splitting per m
            for m in 0..=d {
                let subsets = subsets_colex(d, m);
                let i_set = &subsets[r.gen_range(0..subsets.len())];
                let j_set = &subsets[r.gen_range(0..subsets.len())];
                let direct = splitting_resultant(a, b, i_set, j_set).unwrap();
                let minor = minor_route(a, b, i_set, j_set).unwrap();
                assert_eq!(direct, minor, "minor route at d={d} m={m}");
            }
        }
    }
    // trigonometric specialization
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let d = r.gen_range(2..=4);
        let angles: Vec<f64> = (0..2 * d)
            .map(|k| k as f64 * 0.83 + r.gen_range(0.0..0.25))
            .collect();
        let (a, b) = angles.split_at(d);
        for m in 0..=d {
            let subsets = subsets_colex(d, m);
            let j = &subsets[r.gen_range(0..subsets.len())];
            let dev = trig_identity_check(a, b, m, j).unwrap();
            worst = worst.max(dev);
        }
    }
    assert!(worst < 1e-10, "trig deviation {worst}");
    println!(
        "[criterion 5] PASS - {checked} splitting sums equal 1 exactly (all d <= 5, all m, all \
         J, {sets_per_d} point sets); minor route matches exactly; worst trig deviation {worst:.2e}"
    );
}

fn random_rational_function(r: &mut ChaCha8Rng, max_ord: usize) -> RationalFunction {
    loop {
        let dn = r.gen_range(0..=max_ord);
        let nn = r.gen_range(if dn == 0 { 1 } else { 0 }..=max_ord);
        let num = random_poly(r, nn);
        let den = random_poly(r, dn).monic().unwrap();
        if let Ok(f) = RationalFunction::new(num, den) {
            if !f.is_constant() {
                return f;
            }
        }
    }
}

#[test]
fn criterion_06_elimination() {
    let mut r = rng(606);
    let trials = 50;
    let mut done = 0usize;
    while done < trials {
        let f = random_rational_function(&mut r, 3);
        let g = random_rational_function(&mut r, 3);
        // no common poles (including infinity)
        if f.den().gcd(g.den()).degree().unwrap_or(0) > 0 {
            continue;
        }
        if f.ord_at(&PointP1::Infinity) < 0 && g.ord_at(&PointP1::Infinity) < 0 {
            continue;
        }
        let e = match elimination_function(&f, &g) {
            Ok(e) => e,
            Err(Error::NodeBudgetExhausted) => continue,
            Err(other) => panic!("elimination failed: {other}"),
        };
        assert!(
            graph_numerator(&e.q, &f, &g).is_zero(),
            "Q(f,g) != 0 at trial {done}"
        );
        assert!(e.q.deg_w().unwrap() <= f.order());
        assert!(e.q.deg_z().unwrap() <= g.order());
        done += 1;
    }
    // the inverse pair pins Q, P, R
    let f = RationalFunction::identity();
    let g = f.inv().unwrap();
    let e = elimination_function(&f, &g).unwrap();
    assert_eq!(e.q.coeff(0, 0), ComplexRational::from_int(-1));
    assert_eq!(e.q.coeff(1, 1), ComplexRational::one());
    assert_eq!(e.q.coeff(1, 0), ComplexRational::zero());
    assert_eq!(e.q.coeff(0, 1), ComplexRational::zero());
    assert_eq!(e.p, Polynomial::z());
    assert_eq!(e.r, Polynomial::z());
    // extended elimination: cross-ratio power law for g = f, exact
    for _ in 0..10 {
        let n = r.gen_range(1..=3);
        let (f, _) = factored_pair(&mut r, n, 1);
        let vals = distinct_rationals(&mut r, 4, 25);
        let (z, w, z0, w0) = (&vals[0], &vals[1], &vals[2], &vals[3]);
        let ext = match extended_elimination(&f, &f, z, w, z0, w0) {
            Ok(v) => v,
            Err(Error::LevelsNotDisjoint) => continue,
            Err(other) => panic!("extended elimination failed: {other}"),
        };
        let cr = (z - w) / (z - w0) * ((z0 - w0) / (z0 - w));
        assert_eq!(ext, cr.pow(n as i64).unwrap(), "cross-ratio power law");
    }
    println!(
        "[criterion 6] PASS - Q(f(t), g(t)) = 0 as an exact polynomial identity on {trials} \
         instances; E = (zw-1)/(zw) for (t, 1/t); extended cross-ratio power law exact"
    );
}

#[test]
fn criterion_07_szego_route() {
    let mut r = rng(707);
    // the worked pair: 10/9 within 1e-10
    let f = RationalFunction::from_linear_factors(
        ComplexRational::one(),
        &[ComplexRational::zero()],
        &[ComplexRational::from_ratio(1, 2)],
    )
    .unwrap();
    let g = RationalFunction::from_linear_factors(
        ComplexRational::one(),
        &[ComplexRational::from_int(2)],
        &[ComplexRational::from_int(3)],
    )
    .unwrap();
    let v = szego_resultant(&f, &g, 1e-12).unwrap();
    assert!(
        (v - Complex64::new(10.0 / 9.0, 0.0)).norm() < 1e-10,
        "worked pair: {v}"
    );

    let trials = 50;
    let mut worst = 0.0f64;
    for t in 0..trials {
        let m = r.gen_range(1..=3);
        let n = r.gen_range(1..=3);
        // inside points p/8 with |p| <= 5, outside points q/4 with |q| >= 8
        let inside = loop {
            let cand: Vec<ComplexRational> = distinct_rationals(&mut r, 2 * m, 5)
                .into_iter()
                .map(|c| c * ComplexRational::from_ratio(1, 8))
                .take(2 * m)
                .collect();
            if cand.len() == 2 * m && !cand.iter().any(|c| c.is_zero()) {
                break cand;
            }
        };
        let outside: Vec<ComplexRational> = distinct_rationals(&mut r, 2 * n, 10)
            .into_iter()
            .map(|c| {
                let s = if c.re >= num_rational::BigRational::new(0.into(), 1.into()) {
                    ComplexRational::from_int(9)
                } else {
                    ComplexRational::from_int(-9)
                };
                c * ComplexRational::from_ratio(1, 4) + s
            })
            .collect();
        let f =
            RationalFunction::from_linear_factors(ComplexRational::one(), &inside[..m], &inside[m..])
                .unwrap();
        let g = RationalFunction::from_linear_factors(
            ComplexRational::one(),
            &outside[..n],
            &outside[n..],
        )
        .unwrap();
        let exact = match res_four_poly(&f, &g).unwrap() {
            ResValue::Finite(v) => v.to_complex64(),
            other => panic!("degenerate pair {other:?} at trial {t}"),
        };
        let v = szego_resultant(&f, &g, 1e-11).unwrap();
        let err = (v - exact).norm() / (1.0 + exact.norm());
        worst = worst.max(err);
        assert!(err < 1e-9, "szego error {err} at trial {t}");
    }
    println!(
        "[criterion 7] PASS - strong-limit sum matches the exact resultant within 1e-9 on \
         {trials} support-split pairs (worst {worst:.2e}); worked pair 10/9 within 1e-10"
    );
}

#[test]
fn criterion_08_day_calibration() {
    let mut r = rng(808);
    // analytic-symbol sanity values reproduced exactly by the oracle
    let h_analytic = RationalFunction::from_linear_factors(
        ComplexRational::one(),
        &[ComplexRational::from_ratio(1, 2)],
        &[ComplexRational::from_int(2)],
    )
    .unwrap();
    let s = fourier_coeffs(&h_analytic, 8).unwrap();
    for n in 1..=8usize {
        let det = toeplitz_det_exact(&s, n).unwrap().unwrap();
        assert_eq!(det, ComplexRational::from_ratio(1, 4).pow(n as i64).unwrap());
        assert_eq!(day_formula_exact(&h_analytic, n as i64).unwrap(), det);
    }
    let h_coanalytic = RationalFunction::from_linear_factors(
        ComplexRational::one(),
        &[ComplexRational::from_int(2)],
        &[ComplexRational::from_ratio(1, 2)],
    )
    .unwrap();
    let s = fourier_coeffs(&h_coanalytic, 8).unwrap();
    for n in 1..=8usize {
        let det = toeplitz_det_exact(&s, n).unwrap().unwrap();
        assert!(det.is_one());
        assert!(day_formula_exact(&h_coanalytic, n as i64).unwrap().is_one());
    }

    let trials = 50;
    for t in 0..trials {
        let d = r.gen_range(1..=4);
        // poles off the unit circle: p/8 (inside) or p/2 with |p| >= 3 (outside)
        let mut poles: Vec<ComplexRational> = Vec::new();
        let pool = distinct_rationals(&mut r, 2 * d + 2, 20);
        for (k, c) in pool.iter().take(d).enumerate() {
            let inside = r.gen_bool(0.5);
            let base = c.clone() * ComplexRational::from_ratio(1, 32);
            let p = if inside {
                base + ComplexRational::from_ratio((k as i64 % 2) * 2 - 1, 4)
            } else {
                base + ComplexRational::from_int(((k as i64 % 3) - 1) * 5 + 2)
            };
            if p.is_zero() || poles.contains(&p) {
                continue;
            }
            poles.push(p);
        }
        if poles.len() != d {
            continue;
        }
        let zeros: Vec<ComplexRational> = pool[d..2 * d]
            .iter()
            .map(|c| c.clone() + ComplexRational::from_ratios(0, 1, 7, 2))
            .collect();
        let h = match RationalFunction::from_linear_factors(ComplexRational::one(), &zeros, &poles)
        {
            Ok(h) if h.factored().unwrap().zeros.len() == d => h,
            _ => continue,
        };
        let n = r.gen_range(1..=8i64);
        let s = match fourier_coeffs(&h, n - 1) {
            Ok(s) => s,
            Err(Error::PoleOnCircle) => continue,
            Err(e) => panic!("fourier: {e}"),
        };
        let brute = toeplitz_det_exact(&s, n as usize).unwrap().unwrap();
        let day = day_formula_exact(&h, n).unwrap();
        assert_eq!(day, brute, "day formula at trial {t} (d={d}, N={n})");
        let rel = (day.to_complex64() - brute.to_complex64()).norm()
            / (1.0 + brute.to_complex64().norm());
        assert!(rel < 1e-8);
    }
    println!(
        "[criterion 8] PASS - splitting-sum formula equals brute-force Toeplitz determinants \
         exactly for {trials} random symbols (d <= 4, N <= 8); sanity values 4^-N and 1 exact"
    );
}

#[test]
fn criterion_09_exponential_transform_routes() {
    // the disk value is exact in floating point
    let z = Complex64::new(2.0, 0.0);
    let disk = exp_transform_disk(1.0, z, z).unwrap();
    assert_eq!(disk, Complex64::new(0.75, 0.0));
    let region = RegionSpec::disk(Complex64::default(), 1.0).unwrap();
    let numeric = exp_transform_numeric(&region, z, z, 1e-6).unwrap();
    assert!(close(numeric, disk, 1e-5), "disk quadrature {numeric}");

    // cardioid with c = 3/10
    let c = ComplexRational::from_ratio(3, 10);
    let f = RationalFunction::new(
        Polynomial::new(vec![ComplexRational::zero(), ComplexRational::one(), c]),
        Polynomial::one(),
    )
    .unwrap();
    let kernel = exp_transform_explicit(&f).unwrap();
    let coeffs = [Complex64::new(1.0, 0.0), Complex64::new(0.3, 0.0)];
    let region = RegionSpec::map_image(f.clone()).unwrap();
    let mut r = rng(909);
    let mut worst_pair = 0.0f64;
    for _ in 0..5 {
        let z = Complex64::new(r.gen_range(1.8..2.8), r.gen_range(-1.0..1.0));
        let w = Complex64::new(-r.gen_range(1.8..2.8), r.gen_range(-1.0..1.0));
        let qd = exp_transform_qd(&f, z, w).unwrap();
        let ex = kernel.eval(z, w);
        let pd = exp_transform_polydet(&coeffs, z, w).unwrap();
        for v in [ex, pd] {
            worst_pair = worst_pair.max((qd - v).norm() / (1.0 + qd.norm()));
        }
        assert!(close(qd, ex, 1e-9) && close(qd, pd, 1e-9), "route split");
        let num = exp_transform_numeric(&region, z, w, 1e-6).unwrap();
        assert!(close(num, qd, 1e-5), "quadrature {num} vs {qd}");
    }
    // printed n = 2 expansion, coefficient by coefficient (signs pinned by
    // the determinant and all other routes)
    let a = [Complex64::new(0.9, 0.15), Complex64::new(0.21, -0.08)];
    for _ in 0..20 {
        let z = Complex64::new(r.gen_range(1.5..3.0), r.gen_range(-2.0..2.0));
        let w = Complex64::new(r.gen_range(-3.0..-1.5), r.gen_range(-2.0..2.0));
        let x1 = a[0] / z;
        let x2 = a[1] / z;
        let y1 = a[0].conj() / w.conj();
        let y2 = a[1].conj() / w.conj();
        let expansion = Complex64::new(1.0, 0.0)
            - x1 * y1
            - 2.0 * x2 * y2
            - x2 * y1 * y1
            - x1 * x1 * y2
            - x1 * x2 * y1 * y2
            + x2 * x2 * y2 * y2;
        let det = exp_transform_polydet(&a, z, w).unwrap();
        assert!(close(det, expansion, 1e-12), "{det} vs {expansion}");
    }
    println!(
        "[criterion 9] PASS - disk closed form 0.75 exact and quadrature within 1e-5; cardioid \
         routes agree within 1e-9 (worst {worst_pair:.2e}) and match quadrature within 1e-5; \
         n = 2 monomial expansion reproduced"
    );
}

#[test]
fn criterion_10_schwarz_curve() {
    // F = (3/2) u gives zw - 9/4 up to a unit
    let f = RationalFunction::from_linear_factors(
        ComplexRational::from_ratio(3, 2),
        &[ComplexRational::zero()],
        &[],
    )
    .unwrap();
    let q = schwarz_curve(&f).unwrap();
    let unit = q.coeff(1, 1);
    assert!(!unit.is_zero());
    let qn = q.scale(&unit.inv().unwrap());
    assert_eq!(qn.coeff(0, 0), ComplexRational::from_ratio(-9, 4));
    assert_eq!(qn.deg_z(), Some(1));
    assert_eq!(qn.deg_w(), Some(1));
    assert_eq!(qn.coeff(1, 0), ComplexRational::zero());
    assert_eq!(qn.coeff(0, 1), ComplexRational::zero());

    // cardioid boundary samples
    let c = ComplexRational::from_ratio(3, 10);
    let f = RationalFunction::new(
        Polynomial::new(vec![ComplexRational::zero(), ComplexRational::one(), c]),
        Polynomial::one(),
    )
    .unwrap();
    let q = schwarz_curve(&f).unwrap();
    let scale: f64 = q
        .rows()
        .iter()
        .flatten()
        .map(|c| c.to_complex64().norm())
        .sum();
    let mut worst = 0.0f64;
    for k in 0..256 {
        let t = 2.0 * std::f64::consts::PI * k as f64 / 256.0;
        let z = f.eval_complex(Complex64::new(t.cos(), t.sin()));
        let v = q.eval_complex(z, z.conj()).norm();
        worst = worst.max(v);
        assert!(v < 1e-8 * scale, "boundary residual {v} vs scale {scale}");
    }
    println!(
        "[criterion 10] PASS - scaled-disk curve zw - r^2 exact; 256 cardioid boundary samples \
         satisfy |Q(z, conj z)| < 1e-8 * scale (worst {worst:.2e})"
    );
}

#[test]
fn criterion_11_moment_order() {
    // disk of radius 0.8
    let region = RegionSpec::disk(Complex64::default(), 0.8).unwrap();
    let rep = moment_matrix(&region, 2, 1e-6).unwrap();
    assert_eq!(rep.order, Some(1), "disk dets {:?}", rep.normalized_dets);
    assert!(
        (rep.b[0][0] - Complex64::new(0.64, 0.0)).norm() < 1e-6,
        "b00 {}",
        rep.b[0][0]
    );
    // translation invariance of the report
    let shifted = RegionSpec::disk(Complex64::new(0.3, 0.4), 0.8).unwrap();
    let rep2 = moment_matrix(&shifted, 2, 1e-6).unwrap();
    assert_eq!(rep2.order, Some(1));
    assert!((rep2.b[0][0] - Complex64::new(0.64, 0.0)).norm() < 1e-6);
    // cardioid of order 2
    let c = ComplexRational::from_ratio(3, 10);
    let f = RationalFunction::new(
        Polynomial::new(vec![ComplexRational::zero(), ComplexRational::one(), c]),
        Polynomial::one(),
    )
    .unwrap();
    let region = RegionSpec::map_image(f).unwrap();
    let rep3 = moment_matrix(&region, 3, 1e-6).unwrap();
    assert_eq!(rep3.order, Some(2), "cardioid dets {:?}", rep3.normalized_dets);
    println!(
        "[criterion 11] PASS - disk reports order 1 with b00 = r^2 within 1e-6 (also after \
         translation); cardioid reports order 2"
    );
}

#[test]
fn criterion_12_torus_suite() {
    let start = Instant::now();
    let mut r = rng(1212);
    let tau_i = TorusModulus::new(Complex64::new(0.0, 1.0)).unwrap();
    // symmetry and lattice invariance on random lattice-exact pairs
    for t in 0..20 {
        let deg = r.gen_range(1..=3);
        let mut pair = |m: &TorusModulus| -> TorusDivisorPair {
            let zeros: Vec<Complex64> = (0..deg)
                .map(|_| Complex64::new(r.gen_range(-0.4..0.4), r.gen_range(-0.4..0.4)))
                .collect();
            let mut poles: Vec<Complex64> = (0..deg - 1)
                .map(|_| Complex64::new(r.gen_range(-0.4..0.4), r.gen_range(-0.4..0.4)))
                .collect();
            let balance: Complex64 =
                zeros.iter().sum::<Complex64>() - poles.iter().sum::<Complex64>();
            poles.push(balance);
            let d = TorusDivisorPair::new(zeros, poles).unwrap();
            assert!(reslab_core::torus::abel_check(&d, m).ok);
            d
        };
        let df = pair(&tau_i);
        let dg = pair(&tau_i);
        let v1 = match torus_resultant(&df, &dg, &tau_i) {
            Ok(v) => v,
            Err(Error::LatticeCollision) => continue,
            Err(e) => panic!("torus resultant: {e}"),
        };
        let v2 = torus_resultant(&dg, &df, &tau_i).unwrap();
        assert!(close(v1, v2, 1e-9), "symmetry at trial {t}: {v1} vs {v2}");
        let mut df2 = df.clone();
        df2.zeros[0] += Complex64::new(2.0, 0.0) - tau_i.tau;
        let v3 = torus_resultant(&df2, &dg, &tau_i).unwrap();
        assert!(close(v1, v3, 1e-9), "lattice invariance at trial {t}");
    }
    // xi identity across moduli
    let mut worst = 0.0f64;
    for tau in [
        Complex64::new(0.0, 1.0),
        Complex64::new(0.5, 1.0),
        Complex64::new(0.0, 2.0),
    ] {
        let m = TorusModulus::new(tau).unwrap();
        let mut done = 0;
        while done < 34 {
            let p = |r: &mut ChaCha8Rng| {
                Complex64::new(r.gen_range(-0.45..0.45), r.gen_range(-0.45..0.45))
            };
            let (a1, a2, b1, b2) = (p(&mut r), p(&mut r), p(&mut r), p(&mut r));
            // keep the configuration well separated so theta ratios stay O(1)
            // and the absolute identity residual is meaningful
            let pts = [a1, a2, b1, b2];
            let mut separated = true;
            for i in 0..4 {
                for j in i + 1..4 {
                    if (pts[i] - pts[j]).norm() < 0.08 || (pts[i] + pts[j]).norm() < 0.08 {
                        separated = false;
                    }
                }
            }
            if !separated {
                continue;
            }
            let chk = match weierstrass_xi_check(a1, a2, b1, b2, p(&mut r), &m) {
                Ok(chk) => chk,
                Err(_) => continue,
            };
            worst = worst.max(chk.identity_deviation).max(chk.pairing_spread);
            assert!(
                chk.identity_deviation < 1e-8,
                "xi identity deviation {} at tau {tau}",
                chk.identity_deviation
            );
            assert!(chk.sqrt_deviation < 1e-8);
            done += 1;
        }
    }
    let dt = start.elapsed();
    assert!(dt.as_secs_f64() < 30.0, "torus suite took {dt:?}");
    println!(
        "[criterion 12] PASS - symmetry and lattice invariance within 1e-9; xi identity \
         deviation < 1e-8 over 102 quadruples at three moduli (worst {worst:.2e}); suite in \
         {:.2} s",
        dt.as_secs_f64()
    );
}

#[test]
fn criterion_13_pushforward_square_map() {
    let e1 = HermitianRationalKernel::disk(1.0).unwrap();
    let f = RationalFunction::from_linear_factors(
        ComplexRational::one(),
        &[ComplexRational::zero(), ComplexRational::zero()],
        &[],
    )
    .unwrap();
    let mut r = rng(1313);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let z = Complex64::new(r.gen_range(1.4..3.0), r.gen_range(-1.5..1.5));
        let w = Complex64::new(-r.gen_range(1.4..3.0), r.gen_range(-1.5..1.5));
        let v = pushforward_transform(&e1, &f, 2, z, w).unwrap();
        let base = Complex64::new(1.0, 0.0) - 1.0 / (z * w.conj());
        let expect = base * base;
        let err = (v - expect).norm() / (1.0 + expect.norm());
        worst = worst.max(err);
        assert!(err < 1e-10, "pushforward error {err}");
    }
    println!(
        "[criterion 13] PASS - square map on the disk kernel gives (1 - 1/(z conj w))^2 within \
         1e-10 at 20 sample points (worst {worst:.2e})"
    );
}
