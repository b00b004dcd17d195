//! Property tests for the algebraic invariants: resultant skew-symmetry and
//! multiplicativity, vanishing iff a common factor, divisor additivity,
//! reciprocal involution, local-symbol laws, and the agreement of the
//! remainder-sequence resultant with the Sylvester determinant.

use proptest::prelude::*;

use reslab_core::poly::resultant_prs;
use reslab_core::*;

fn coeff_strategy() -> impl Strategy<Value = ComplexRational> {
    (-8i64..=8, 1i64..=3, -4i64..=4).prop_map(|(p, q, r)| {
        ComplexRational::from_ratios(p, q, r, 1)
    })
}

fn poly_strategy(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(coeff_strategy(), 1..=max_deg + 1)
        .prop_map(Polynomial::new)
        .prop_filter("nonzero polynomial", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn resultant_skew_symmetry(f in poly_strategy(4), g in poly_strategy(4)) {
        let m = f.degree().unwrap();
        let n = g.degree().unwrap();
        let fg = sylvester_resultant(&f, &g).unwrap();
        let gf = sylvester_resultant(&g, &f).unwrap();
        let expect = if (m * n) % 2 == 1 { -gf } else { gf };
        prop_assert_eq!(fg, expect);
    }

    #[test]
    fn resultant_multiplicativity(
        f1 in poly_strategy(3),
        f2 in poly_strategy(3),
        g in poly_strategy(3),
    ) {
        let lhs = sylvester_resultant(&f1.mul(&f2), &g).unwrap();
        let rhs = sylvester_resultant(&f1, &g).unwrap() * sylvester_resultant(&f2, &g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn prs_matches_sylvester(f in poly_strategy(5), g in poly_strategy(5)) {
        prop_assert_eq!(
            resultant_prs(&f, &g).unwrap(),
            sylvester_resultant(&f, &g).unwrap()
        );
    }

    #[test]
    fn resultant_zero_iff_common_factor(
        f in poly_strategy(3),
        g in poly_strategy(3),
        shared in coeff_strategy(),
        plant in proptest::bool::ANY,
    ) {
        let lin = Polynomial::new(vec![-shared, ComplexRational::one()]);
        let (f, g) = if plant {
            (f.mul(&lin), g.mul(&lin))
        } else {
            (f, g)
        };
        let res = sylvester_resultant(&f, &g).unwrap();
        let gcd_nontrivial = f.gcd(&g).degree().unwrap_or(0) > 0;
        prop_assert_eq!(res.is_zero(), gcd_nontrivial);
    }

    #[test]
    fn reciprocal_involution(p in poly_strategy(4)) {
        prop_assume!(!p.coeff(0).is_zero());
        let r = reciprocal_poly(&p).unwrap();
        prop_assert_eq!(reciprocal_poly(&r).unwrap(), p);
    }
}

fn small_points(seed: &[i64]) -> Vec<ComplexRational> {
    seed.iter().map(|&k| ComplexRational::from_int(k)).collect()
}

#[test]
fn divisor_additivity_and_symbol_laws() {
    // three functions with assorted shared support
    let f = RationalFunction::from_linear_factors(
        ComplexRational::from_int(2),
        &small_points(&[0, 1]),
        &small_points(&[3]),
    )
    .unwrap();
    let g = RationalFunction::from_linear_factors(
        ComplexRational::from_ratio(-1, 2),
        &small_points(&[1]),
        &small_points(&[4, 0]),
    )
    .unwrap();
    let h = RationalFunction::from_linear_factors(
        ComplexRational::one(),
        &small_points(&[3, 5]),
        &small_points(&[1]),
    )
    .unwrap();
    // (fg) = (f) + (g)
    let fg = f.mul(&g).unwrap();
    assert_eq!(
        divisor_of(&fg).unwrap(),
        divisor_of(&f).unwrap().sum(&divisor_of(&g).unwrap())
    );
    let points: Vec<PointP1> = [0i64, 1, 3, 4, 5, 7]
        .iter()
        .map(|&k| PointP1::Finite(ComplexRational::from_int(k)))
        .chain([PointP1::Infinity])
        .collect();
    for a in &points {
        // multiplicativity in the second argument
        let lhs = local_symbol(&f, &fg, a).unwrap();
        let rhs = local_symbol(&f, &f, a).unwrap() * local_symbol(&f, &g, a).unwrap();
        assert_eq!(lhs, rhs, "symbol multiplicativity at {a:?}");
        // inverse pairing
        let t = local_symbol(&f, &g, a).unwrap() * local_symbol(&g, &f, a).unwrap();
        assert!(t.is_one(), "pairing at {a:?}");
        // triple relation
        let of = f.ord_at(a);
        let og = g.ord_at(a);
        let oh = h.ord_at(a);
        let triple = local_symbol(&f, &g, a).unwrap().pow(oh).unwrap()
            * local_symbol(&g, &h, a).unwrap().pow(of).unwrap()
            * local_symbol(&h, &f, a).unwrap().pow(og).unwrap();
        let sign = if (of * og * oh) % 2 != 0 {
            -ComplexRational::one()
        } else {
            ComplexRational::one()
        };
        assert_eq!(triple, sign, "triple relation at {a:?}");
    }
    // off the joint support the symbol is one
    let off = PointP1::Finite(ComplexRational::from_int(11));
    assert!(local_symbol(&f, &g, &off).unwrap().is_one());
}

#[test]
fn meromorphic_resultant_multiplicativity() {
    let f1 = RationalFunction::from_linear_factors(
        ComplexRational::one(),
        &small_points(&[0]),
        &small_points(&[1]),
    )
    .unwrap();
    let f2 = RationalFunction::from_linear_factors(
        ComplexRational::one(),
        &small_points(&[7]),
        &small_points(&[-5]),
    )
    .unwrap();
    let g = RationalFunction::from_linear_factors(
        ComplexRational::one(),
        &small_points(&[2, -3]),
        &small_points(&[3, 9]),
    )
    .unwrap();
    let lhs = res_divisor(&f1.mul(&f2).unwrap(), &g).unwrap();
    let rhs = res_divisor(&f1, &g)
        .unwrap()
        .mul(res_divisor(&f2, &g).unwrap())
        .unwrap();
    assert_eq!(lhs, rhs);
    // and in the second argument via symmetry
    let lhs = res_divisor(&g, &f1.mul(&f2).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn elimination_agrees_with_divisor_route_at_random_regular_points() {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let f = RationalFunction::from_linear_factors(
        ComplexRational::one(),
        &small_points(&[0, 2]),
        &small_points(&[5]),
    )
    .unwrap();
    let g = RationalFunction::from_linear_factors(
        ComplexRational::from_int(3),
        &small_points(&[-1]),
        &small_points(&[1, 7]),
    )
    .unwrap();
    let e = reslab_core::elimination::elimination_function(&f, &g).unwrap();
    let mut checked = 0;
    while checked < 20 {
        let z = ComplexRational::from_ratios(
            rng.gen_range(-30..30),
            rng.gen_range(1..4),
            rng.gen_range(-5..5),
            2,
        );
        let w = ComplexRational::from_ratios(
            rng.gen_range(-30..30),
            rng.gen_range(1..4),
            rng.gen_range(-5..5),
            2,
        );
        let fz = f.sub_scalar(&z).unwrap();
        let gw = g.sub_scalar(&w).unwrap();
        match res_four_poly(&fz, &gw) {
            Ok(ResValue::Finite(direct)) => {
                assert_eq!(e.eval(&z, &w), ResValue::Finite(direct));
                checked += 1;
            }
            _ => continue,
        }
    }
}

#[test]
fn fft_route_handles_repeated_poles() {
    // h = 1/(z-2)^2 has no simple-pole route; Taylor: h_k = (k+1) 2^{-k-2}
    let den = Polynomial::from_ints(&[4, -4, 1]);
    let h = RationalFunction::new(Polynomial::one(), den).unwrap();
    let s = fourier_coeffs(&h, 6).unwrap();
    assert!(!s.is_exact());
    for k in 0..=6i64 {
        let expect = (k as f64 + 1.0) / 2f64.powi(k as i32 + 2);
        let got = s.value(k).unwrap();
        assert!(
            (got - num_complex::Complex64::new(expect, 0.0)).norm() < 1e-10,
            "k = {k}: {got} vs {expect}"
        );
        if k < 6 {
            assert!(s.value(-k - 1).unwrap().norm() < 1e-12);
        }
    }
}
