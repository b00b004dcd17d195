//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by exact and numeric routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("operation on the zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("0/0 is not a rational function")]
    ZeroOverZero,
    #[error("constant polynomial has no discriminant")]
    ConstantPolynomial,
    #[error("pair is not admissible: order products change sign")]
    NotAdmissible,
    #[error("indeterminate product of zero and infinite factors")]
    Indeterminate,
    #[error("resultant is infinite")]
    InfiniteValue,
    #[error("divisor data requires factored zeros and poles: {0}")]
    FactoredInputRequired(&'static str),
    #[error("functions share a pole; elimination function undefined")]
    CommonPole,
    #[error("disjointness condition on the four levels fails")]
    LevelsNotDisjoint,
    #[error("interpolation node budget exhausted")]
    NodeBudgetExhausted,
    #[error("root finding did not converge within the iteration cap")]
    RootsDiverged,
    #[error("symbol has a pole on or too close to the unit circle")]
    PoleOnCircle,
    #[error("coefficient window too small: need |k| <= {need}, have {have}")]
    WindowTooSmall { need: i64, have: i64 },
    #[error("truncation order N={n} below symbol denominator degree {d}")]
    TruncationTooSmall { n: i64, d: i64 },
    #[error("support condition violated: {0}")]
    SupportCondition(&'static str),
    #[error("input points collide: {0}")]
    CoincidentPoints(&'static str),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("evaluation point inside or too close to the region")]
    PointInsideRegion,
    #[error("quadrature did not converge within the refinement budget")]
    QuadratureDiverged,
    #[error("map failed the univalence certificate: {0}")]
    NotUnivalent(&'static str),
    #[error("degenerate elimination: resultant vanishes identically")]
    DegenerateElimination,
    #[error("Im(tau) too small for a certified theta truncation")]
    ImTauTooSmall,
    #[error("divisor sums violate the lattice condition")]
    AbelViolation,
    #[error("supports collide modulo the lattice")]
    LatticeCollision,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Process exit code used by the CLI: 2 for validation errors,
    /// 3 for numeric non-convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::RootsDiverged | Error::QuadratureDiverged | Error::NodeBudgetExhausted => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
