//! Exact and numeric computation of resultants for rational and meromorphic
//! functions: classical polynomial resultant determinants, the meromorphic
//! resultant on the Riemann sphere and the complex torus, elimination
//! functions, Toeplitz/Szego determinant identities, and exponential
//! transforms of quadrature domains.
//!
//! Exact paths run over arbitrary-precision Gaussian rationals and are
//! cross-validated against independent floating-point oracles throughout the
//! test suite.
//!
//! ```
//! use reslab_core::*;
//!
//! // Res(f, g) = g((f)) for f = z/(z - 1/2), g = (z - 2)/(z - 3)
//! let f = RationalFunction::from_linear_factors(
//!     ComplexRational::one(),
//!     &[ComplexRational::from_int(0)],
//!     &[ComplexRational::from_ratio(1, 2)],
//! )?;
//! let g = RationalFunction::from_linear_factors(
//!     ComplexRational::one(),
//!     &[ComplexRational::from_int(2)],
//!     &[ComplexRational::from_int(3)],
//! )?;
//! let value = res_divisor(&f, &g)?;
//! assert_eq!(value, ResValue::Finite(ComplexRational::from_ratio(10, 9)));
//! # Ok::<(), Error>(())
//! ```

pub mod bivar;
pub mod contour;
pub mod cpoly;
pub mod divisor;
pub mod elimination;
pub mod exptransform;
pub mod error;
pub mod identities;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod resultant;
pub mod scalar;
pub mod szego;
pub mod torus;

pub use bivar::BivariatePolynomial;
pub use divisor::{
    divisor_action, divisor_of, is_admissible, local_symbol, Admissibility, Divisor,
    NumericDivisor, NumericPoint, PointP1, RationalFunction, ResValue,
};
pub use elimination::{elimination_function, extended_elimination, EliminationFunction};
pub use error::{Error, Result};
pub use exptransform::{exp_transform_disk, exp_transform_explicit, exp_transform_numeric, exp_transform_polydet, exp_transform_qd, extended_exp_transform, moment_matrix, pushforward_transform, schwarz_curve, univalence_certificate, HermitianRationalKernel, MomentReport, RegionSpec};
pub use poly::{
    bezout_resultant, discriminant_pol, reciprocal_poly, sylvester_resultant, toeplitz_resultant,
    Polynomial,
};
pub use cpoly::roots as poly_roots;
pub use resultant::{
    cross_ratio, mero_discriminant, mero_discriminant_numeric, mutual_energy,
    reduced_resultant, res_cross_ratio, res_divisor, res_four_poly, weil_product,
};
pub use identities::{minor_route, splitting_resultant, subsets_colex, sum_identity, trig_identity_check, Splitting};
pub use scalar::{ComplexFloat, ComplexRational};
pub use szego::{cauchy_schur_resultant, day_formula, fourier_coeffs, log_coeffs, szego_resultant, toeplitz_det, LogCoeffs, SymbolCoeffs};
pub use torus::{abel_check, theta_eval, torus_resultant, weierstrass_xi_check, AbelCheck, TorusDivisorPair, TorusModulus, XiCheck};
