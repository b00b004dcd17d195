//! The meromorphic resultant on the Riemann sphere: divisor route,
//! cross-ratio route, four-polynomial route, reduced resultants at a marked
//! point, the Weil product, the meromorphic discriminant and mutual energy.

use crate::divisor::{
    divisor_action, divisor_of, is_admissible, local_symbol, Admissibility, PointP1,
    RationalFunction, ResValue,
};
use crate::error::{Error, Result};
use crate::poly::{resultant_prs, sylvester_resultant, Polynomial};
use crate::scalar::ComplexRational;

/// `Res(f, g) = g((f))`: the multiplicative action of `g` on the divisor of
/// `f`. Requires an admissible pair and factored divisor data for `f`.
pub fn res_divisor(f: &RationalFunction, g: &RationalFunction) -> Result<ResValue> {
    if !is_admissible(f, g, None).is_admissible() {
        return Err(Error::NotAdmissible);
    }
    let d = divisor_of(f)?;
    divisor_action(g, &d)
}

/// Cross ratio `(a, b, c, d) = (a-c)/(a-d) * (b-d)/(b-c)` with the usual
/// limits when one entry is the point at infinity.
pub fn cross_ratio(a: &PointP1, b: &PointP1, c: &PointP1, d: &PointP1) -> Result<ComplexRational> {
    use PointP1::*;
    for (x, y) in [(a, c), (a, d), (b, c), (b, d)] {
        if x == y {
            return Err(Error::CoincidentPoints("cross-ratio pole or zero"));
        }
    }
    let diff = |x: &PointP1, y: &PointP1| -> Option<ComplexRational> {
        match (x, y) {
            (Finite(u), Finite(v)) => Some(u - v),
            _ => None,
        }
    };
    let infs = [a, b, c, d].iter().filter(|p| p.is_infinity()).count();
    if infs > 1 {
        return Err(Error::CoincidentPoints("two entries at infinity"));
    }
    let r = if a.is_infinity() {
        diff(b, d).unwrap() / diff(b, c).unwrap()
    } else if b.is_infinity() {
        diff(a, c).unwrap() / diff(a, d).unwrap()
    } else if c.is_infinity() {
        diff(b, d).unwrap() / diff(a, d).unwrap()
    } else if d.is_infinity() {
        diff(a, c).unwrap() / diff(b, c).unwrap()
    } else {
        diff(a, c).unwrap() / diff(a, d).unwrap() * (diff(b, d).unwrap() / diff(b, c).unwrap())
    };
    Ok(r)
}

/// Resultant of two degree-zero factored divisors as the double product of
/// cross ratios over zero/pole quadruples.
pub fn res_cross_ratio(
    zeros_f: &[PointP1],
    poles_f: &[PointP1],
    zeros_g: &[PointP1],
    poles_g: &[PointP1],
) -> Result<ComplexRational> {
    if zeros_f.len() != poles_f.len() || zeros_g.len() != poles_g.len() {
        return Err(Error::InvalidArgument(
            "cross-ratio route needs equal-length zero/pole lists".into(),
        ));
    }
    let mut acc = ComplexRational::one();
    for (a, b) in zeros_f.iter().zip(poles_f) {
        for (c, d) in zeros_g.iter().zip(poles_g) {
            acc *= cross_ratio(a, b, c, d)?;
        }
    }
    Ok(acc)
}

fn res_value_of_poly_pair(f: &Polynomial, g: &Polynomial) -> Result<ResValue> {
    let v = resultant_prs(f, g)?;
    Ok(if v.is_zero() {
        ResValue::Zero
    } else {
        ResValue::Finite(v)
    })
}

/// Resultant through four polynomial resultants with the infinity
/// prefactors:
/// `f(inf)^{ord_inf g} g(inf)^{ord_inf f} * R(f1,g1) R(f2,g2) / (R(f1,g2) R(f2,g1))`.
pub fn res_four_poly(f: &RationalFunction, g: &RationalFunction) -> Result<ResValue> {
    if f.is_zero_fn() || g.is_zero_fn() {
        return Err(Error::ZeroOverZero);
    }
    if !is_admissible(f, g, None).is_admissible() {
        return Err(Error::NotAdmissible);
    }
    let of = f.ord_at(&PointP1::Infinity);
    let og = g.ord_at(&PointP1::Infinity);
    let mut acc = ResValue::Finite(ComplexRational::one());
    if og != 0 {
        acc = acc.mul(f.eval_point(&PointP1::Infinity).pow(og)?)?;
    }
    if of != 0 {
        acc = acc.mul(g.eval_point(&PointP1::Infinity).pow(of)?)?;
    }
    let r11 = res_value_of_poly_pair(f.num(), g.num())?;
    let r22 = res_value_of_poly_pair(f.den(), g.den())?;
    let r12 = res_value_of_poly_pair(f.num(), g.den())?;
    let r21 = res_value_of_poly_pair(f.den(), g.num())?;
    acc = acc.mul(r11)?;
    acc = acc.mul(r22)?;
    acc = acc.mul(r12.inv()?)?;
    acc = acc.mul(r21.inv()?)?;
    Ok(acc)
}

/// Reduced resultant at infinity in the local coordinate `sigma = 1/z`:
/// `tau_inf(sigma,g)^{ord_inf f} / tau_inf(f,g) * prod_{xi != inf} g(xi)^{ord_xi f}`.
/// Recovers the classical polynomial resultant on polynomial input. An
/// infinite value (common finite pole configuration) is reported as an error.
pub fn reduced_resultant(f: &RationalFunction, g: &RationalFunction) -> Result<ComplexRational> {
    if is_admissible(f, g, Some(&PointP1::Infinity)) == Admissibility::NotAdmissible { return Err(Error::NotAdmissible) }
    let sigma = RationalFunction::new(Polynomial::one(), Polynomial::z())?;
    let inf = PointP1::Infinity;
    let t_sg = local_symbol(&sigma, g, &inf)?;
    let t_fg = local_symbol(f, g, &inf)?;
    let of = f.ord_at(&inf);

    // prod over finite共 zeros and poles of f of g(xi)^{ord_xi f}, written as
    // a ratio of Sylvester resultants; a vanishing denominator factor means
    // the product is infinite.
    let finite_part = |fpart: &Polynomial| -> Result<ResValue> {
        if fpart.degree().unwrap_or(0) == 0 {
            return Ok(ResValue::Finite(ComplexRational::one()));
        }
        let lc = fpart.leading()?;
        let dg1 = g.num().degree().unwrap_or(0) as i64;
        let dg2 = g.den().degree().unwrap_or(0) as i64;
        let top = res_value_of_poly_pair(fpart, g.num())?
            .mul(ResValue::Finite(lc.pow(dg1)?).inv()?)?;
        let bot = res_value_of_poly_pair(fpart, g.den())?
            .mul(ResValue::Finite(lc.pow(dg2)?).inv()?)?;
        top.mul(bot.inv()?)
    };
    let over_zeros = finite_part(f.num())?;
    let over_poles = finite_part(f.den())?.inv()?;

    let pre = ResValue::Finite(t_sg.pow(of)? / t_fg);
    pre.mul(over_zeros)?.mul(over_poles)?.finite()
}

/// Product of local symbols over the union of supports and infinity; by
/// reciprocity it is identically one. Factored input required for both
/// functions.
pub fn weil_product(f: &RationalFunction, g: &RationalFunction) -> Result<ComplexRational> {
    let df = divisor_of(f)?;
    let dg = divisor_of(g)?;
    let mut points: Vec<PointP1> = df.support().cloned().collect();
    for p in dg.support() {
        if !points.contains(p) {
            points.push(p.clone());
        }
    }
    if !points.contains(&PointP1::Infinity) {
        points.push(PointP1::Infinity);
    }
    let mut acc = ComplexRational::one();
    for p in &points {
        acc *= local_symbol(f, g, p)?;
    }
    Ok(acc)
}

/// Renormalized self-resultant of `f = prod(z-a_i)/prod(z-b_i)`:
/// `prod_{i!=j}(a_i-a_j) prod_{i!=j}(b_i-b_j) / (prod_{i,j}(a_i-b_j) prod_{i,j}(b_i-a_j))`.
/// Requires equally many simple, pairwise distinct zeros and poles.
pub fn mero_discriminant(f: &RationalFunction) -> Result<ComplexRational> {
    let fac = f
        .factored()
        .ok_or(Error::FactoredInputRequired("meromorphic discriminant"))?;
    let a = &fac.zeros;
    let b = &fac.poles;
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(
            "discriminant needs equally many zeros and poles".into(),
        ));
    }
    let distinct = |v: &[ComplexRational]| -> bool {
        v.iter()
            .enumerate()
            .all(|(i, x)| v[i + 1..].iter().all(|y| y != x))
    };
    if !distinct(a) || !distinct(b) {
        return Err(Error::CoincidentPoints("repeated zeros or poles"));
    }
    let m = a.len();
    let mut num = ComplexRational::one();
    let mut den = ComplexRational::one();
    for i in 0..m {
        for j in 0..m {
            if i != j {
                num = num * (&a[i] - &a[j]) * (&b[i] - &b[j]);
            }
            let d1 = &a[i] - &b[j];
            let d2 = &b[i] - &a[j];
            if d1.is_zero() || d2.is_zero() {
                return Err(Error::CoincidentPoints("zero meets pole"));
            }
            den = den * d1 * d2;
        }
    }
    Ok(num / den)
}

/// Floating-point discriminant from numeric zero/pole lists (all simple and
/// pairwise distinct), for divisors produced by the root finder.
pub fn mero_discriminant_numeric(
    zeros: &[num_complex::Complex64],
    poles: &[num_complex::Complex64],
) -> Result<num_complex::Complex64> {
    use num_complex::Complex64;
    if zeros.len() != poles.len() {
        return Err(Error::InvalidArgument(
            "discriminant needs equally many zeros and poles".into(),
        ));
    }
    let m = zeros.len();
    let mut num = Complex64::new(1.0, 0.0);
    let mut den = Complex64::new(1.0, 0.0);
    for i in 0..m {
        for j in 0..m {
            if i != j {
                num *= (zeros[i] - zeros[j]) * (poles[i] - poles[j]);
            }
            let d = (zeros[i] - poles[j]) * (poles[i] - zeros[j]);
            if d.norm() == 0.0 {
                return Err(Error::CoincidentPoints("zero meets pole"));
            }
            den *= d;
        }
    }
    Ok(num / den)
}

/// Same discriminant through the four polynomial resultants
/// `R(f1,f1') R(f2,f2') / (R(f1,f2) R(f2,f1))` for the monic parts; used as a
/// cross-route oracle.
pub fn mero_discriminant_resultant_route(f: &RationalFunction) -> Result<ComplexRational> {
    let fac = f
        .factored()
        .ok_or(Error::FactoredInputRequired("meromorphic discriminant"))?;
    let f1 = Polynomial::from_roots(&fac.zeros);
    let f2 = Polynomial::from_roots(&fac.poles);
    if f1.degree() != f2.degree() {
        return Err(Error::InvalidArgument(
            "discriminant needs equally many zeros and poles".into(),
        ));
    }
    if f1.is_constant() {
        return Ok(ComplexRational::one());
    }
    let top = sylvester_resultant(&f1, &f1.derivative())? * sylvester_resultant(&f2, &f2.derivative())?;
    let bot = sylvester_resultant(&f1, &f2)? * sylvester_resultant(&f2, &f1)?;
    if bot.is_zero() {
        return Err(Error::CoincidentPoints("zero meets pole"));
    }
    Ok(top / bot)
}

/// Logarithmic mutual energy `I(mu_(f), mu_(g)) = -sum m_a n_b log|a-b|` of
/// the divisor charge distributions; equals `-log |Res(f, g)|`. Supports must
/// be finite and disjoint.
pub fn mutual_energy(f: &RationalFunction, g: &RationalFunction) -> Result<f64> {
    let df = divisor_of(f)?;
    let dg = divisor_of(g)?;
    for d in [&df, &dg] {
        if d.multiplicity(&PointP1::Infinity) != 0 {
            return Err(Error::SupportCondition(
                "mutual energy requires finite supports",
            ));
        }
    }
    let mut acc = 0.0f64;
    for (p, mp) in df.iter() {
        for (q, mq) in dg.iter() {
            let (PointP1::Finite(a), PointP1::Finite(b)) = (p, q) else {
                unreachable!()
            };
            if a == b {
                return Err(Error::CoincidentPoints("mutual energy at coincident points"));
            }
            let dist = (a.to_complex64() - b.to_complex64()).norm();
            acc -= (mp * mq) as f64 * dist.ln();
        }
    }
    Ok(acc)
}
