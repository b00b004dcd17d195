//! Resultant identities over subset splittings of a degree-d divisor:
//! splitting resultants, the linear sum identities, the Vandermonde-minor
//! route, and their trigonometric specialization on the unit circle.
//!
//! Index sets are 0-based strictly increasing sequences; subset enumeration
//! is colexicographic so enumerations are stable.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::ComplexRational;

/// A splitting `(I, J)` of `{0, .., d-1}`: two strictly increasing index
/// sequences of common length `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
}

impl Splitting {
    pub fn new(d: usize, i: Vec<usize>, j: Vec<usize>) -> Result<Self> {
        let valid = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]) && s.iter().all(|&x| x < d);
        if i.len() != j.len() || !valid(&i) || !valid(&j) {
            return Err(Error::InvalidArgument(
                "splitting needs strictly increasing index sets of equal length".into(),
            ));
        }
        Ok(Splitting { i, j })
    }

    pub fn complement(s: &[usize], d: usize) -> Vec<usize> {
        (0..d).filter(|k| !s.contains(k)).collect()
    }
}

/// All m-subsets of `{0, .., d-1}` in colexicographic order.
pub fn subsets_colex(d: usize, m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    if m > d {
        return vec![];
    }
    let mut out = Vec::new();
    for top in (m - 1)..d {
        for mut s in subsets_colex(top, m - 1) {
            s.push(top);
            out.push(s);
        }
    }
    out
}

fn check_points(a: &[ComplexRational], b: &[ComplexRational]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(
            "zero and pole point lists must have equal length".into(),
        ));
    }
    let all: Vec<&ComplexRational> = a.iter().chain(b.iter()).collect();
    for (i, x) in all.iter().enumerate() {
        for y in &all[i + 1..] {
            if x == y {
                return Err(Error::CoincidentPoints("splitting points must be distinct"));
            }
        }
    }
    Ok(a.len())
}

/// `Res(h_IJ, 1/h_{I'J'})` for `h = prod (z-a_i)/(z-b_i)`, in closed form:
/// the zero/pole supports are disjoint, so the resultant is the exact cross
/// product
/// `prod_{i in I, j' in J'} (a_i - b_{j'}) prod_{j in J, i' in I'} (b_j - a_{i'})
///  / (prod_{i,i'} (a_i - a_{i'}) prod_{j,j'} (b_j - b_{j'}))`.
pub fn splitting_resultant(
    a: &[ComplexRational],
    b: &[ComplexRational],
    i_set: &[usize],
    j_set: &[usize],
) -> Result<ComplexRational> {
    let d = check_points(a, b)?;
    let s = Splitting::new(d, i_set.to_vec(), j_set.to_vec())?;
    let ic = Splitting::complement(&s.i, d);
    let jc = Splitting::complement(&s.j, d);
    let mut num = ComplexRational::one();
    for &i in &s.i {
        for &jp in &jc {
            num *= &a[i] - &b[jp];
        }
    }
    for &j in &s.j {
        for &ip in &ic {
            num *= &b[j] - &a[ip];
        }
    }
    let mut den = ComplexRational::one();
    for &i in &s.i {
        for &ip in &ic {
            den *= &a[i] - &a[ip];
        }
    }
    for &j in &s.j {
        for &jp in &jc {
            den *= &b[j] - &b[jp];
        }
    }
    Ok(num / den)
}

/// `sum_{I in C_d^m} Res(h_IJ, 1/h_{I'J'})`; identically one.
pub fn sum_identity(
    a: &[ComplexRational],
    b: &[ComplexRational],
    m: usize,
    j_set: &[usize],
) -> Result<ComplexRational> {
    let d = check_points(a, b)?;
    let mut acc = ComplexRational::zero();
    for i_set in subsets_colex(d, m) {
        acc += splitting_resultant(a, b, &i_set, j_set)?;
    }
    Ok(acc)
}

/// The transposed sum `sum_I Res(h_JI, 1/h_{J'I'})`, where `h_JI` takes its
/// zeros from `J` and its poles from `I`; also identically one.
pub fn sum_identity_transposed(
    a: &[ComplexRational],
    b: &[ComplexRational],
    m: usize,
    j_set: &[usize],
) -> Result<ComplexRational> {
    let d = check_points(a, b)?;
    let mut acc = ComplexRational::zero();
    for i_set in subsets_colex(d, m) {
        acc += splitting_resultant(a, b, j_set, &i_set)?;
    }
    Ok(acc)
}

/// Splitting resultant through Vandermonde minors:
/// `det L_IJ * det (L^{-1})_JI` with `L = A B^{-1}`, `A = (a_i^j)`,
/// `B = (b_i^j)`; the inverse minor is taken at the transposed index pair,
/// which makes the sign factors cancel. Exact, and equal to
/// [`splitting_resultant`] by the generalized Laplace expansion.
pub fn minor_route(
    a: &[ComplexRational],
    b: &[ComplexRational],
    i_set: &[usize],
    j_set: &[usize],
) -> Result<ComplexRational> {
    let d = check_points(a, b)?;
    let s = Splitting::new(d, i_set.to_vec(), j_set.to_vec())?;
    let vander = |pts: &[ComplexRational]| -> Matrix {
        let mut m = Matrix::zeros(d, d);
        for (i, p) in pts.iter().enumerate() {
            let mut pw = ComplexRational::one();
            for j in 0..d {
                m[(i, j)] = pw.clone();
                pw *= p.clone();
            }
        }
        m
    };
    let mat_a = vander(a);
    let mat_b = vander(b);
    let b_inv = mat_b.inverse().map_err(|_| Error::SingularMatrix)?;
    let lam = mat_a.mul(&b_inv);
    let lam_inv = lam.inverse().map_err(|_| Error::SingularMatrix)?;
    // per-term law pinned by the Jacobi identity: det L_IJ * det (L^{-1})_JI
    // (the inverse minor takes rows J and columns I; with that transposition
    // the sign factors cancel identically)
    let d1 = lam.submatrix(&s.i, &s.j).det();
    let d2 = lam_inv.submatrix(&s.j, &s.i).det();
    Ok(d1 * d2)
}

/// Evaluates the sine-product sum obtained from the splitting identity by
/// the substitution `z = e^{2 i angle}`, returning its deviation from one.
pub fn trig_identity_check(a: &[f64], b: &[f64], m: usize, j_set: &[usize]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::InvalidArgument(
            "angle lists must have equal length".into(),
        ));
    }
    let d = a.len();
    let s = Splitting::new(d, (0..m.min(d)).collect(), j_set.to_vec())?;
    if s.j.len() != m {
        return Err(Error::InvalidArgument("J must have length m".into()));
    }
    let all: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
    for (i, x) in all.iter().enumerate() {
        for y in &all[i + 1..] {
            if (x - y).sin().abs() < 1e-12 {
                return Err(Error::CoincidentPoints("angles collide modulo pi"));
            }
        }
    }
    if m == 0 {
        // the single term is the empty product
        return Ok(0.0);
    }
    let j = &s.j;
    let jc = Splitting::complement(j, d);
    let mut sum = 0.0f64;
    for i_set in subsets_colex(d, m) {
        let ic = Splitting::complement(&i_set, d);
        let mut term = 1.0f64;
        for &i in &i_set {
            for &jp in &jc {
                term *= (a[i] - b[jp]).sin();
            }
        }
        for &jj in j {
            for &ip in &ic {
                term *= (b[jj] - a[ip]).sin();
            }
        }
        for &i in &i_set {
            for &ip in &ic {
                term /= (a[i] - a[ip]).sin();
            }
        }
        for &jj in j {
            for &jp in &jc {
                term /= (b[jj] - b[jp]).sin();
            }
        }
        sum += term;
    }
    Ok((sum - 1.0).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> ComplexRational {
        ComplexRational::from_int(n)
    }

    #[test]
    fn colex_enumeration_order() {
        assert_eq!(
            subsets_colex(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(subsets_colex(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn splitting_values_d2() {
        // a = (0,1), b = (2,3), J = {0}: I = {0} -> -3, I = {1} -> 4
        let a = [c(0), c(1)];
        let b = [c(2), c(3)];
        assert_eq!(splitting_resultant(&a, &b, &[0], &[0]).unwrap(), c(-3));
        assert_eq!(splitting_resultant(&a, &b, &[1], &[0]).unwrap(), c(4));
        // m = 0: empty divisors
        assert_eq!(splitting_resultant(&a, &b, &[], &[]).unwrap(), c(1));
        // coincident points rejected
        let bad = [c(0), c(2)];
        assert!(splitting_resultant(&a, &bad, &[0], &[0]).is_err());
    }

    #[test]
    fn sums_are_one() {
        let a = [c(0), c(1)];
        let b = [c(2), c(3)];
        assert_eq!(sum_identity(&a, &b, 1, &[0]).unwrap(), c(1));
        assert_eq!(sum_identity_transposed(&a, &b, 1, &[0]).unwrap(), c(1));
        let a = [c(0), c(1), c(-2)];
        let b = [c(2), c(3), c(7)];
        for m in 0..=3 {
            for j in subsets_colex(3, m) {
                assert_eq!(sum_identity(&a, &b, m, &j).unwrap(), c(1));
                assert_eq!(sum_identity_transposed(&a, &b, m, &j).unwrap(), c(1));
            }
        }
    }

    #[test]
    fn minor_route_matches_splitting() {
        let a = [c(0), c(1)];
        let b = [c(2), c(3)];
        assert_eq!(minor_route(&a, &b, &[0], &[0]).unwrap(), c(-3));
        assert_eq!(minor_route(&a, &b, &[1], &[0]).unwrap(), c(4));
        // full splitting is the Laplace consistency case
        assert_eq!(minor_route(&a, &b, &[0, 1], &[0, 1]).unwrap(), c(1));
        // m = 0
        assert_eq!(minor_route(&a, &b, &[], &[]).unwrap(), c(1));
    }

    #[test]
    fn trig_specialization() {
        // pinned d=2 case: angles (0, pi/4; pi/2, 3pi/4)
        let a = [0.0, std::f64::consts::FRAC_PI_4];
        let b = [std::f64::consts::FRAC_PI_2, 3.0 * std::f64::consts::FRAC_PI_4];
        let dev = trig_identity_check(&a, &b, 1, &[0]).unwrap();
        assert!(dev < 1e-12, "deviation {dev}");
        // m = 0 is exactly zero deviation
        assert_eq!(trig_identity_check(&a, &b, 0, &[]).unwrap(), 0.0);
        // collision is rejected
        let bad = [0.0, std::f64::consts::PI];
        assert!(trig_identity_check(&bad, &b, 1, &[0]).is_err());
    }
}
