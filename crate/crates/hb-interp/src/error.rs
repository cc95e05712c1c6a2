//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite value in input: {0}")]
    NonFinite(String),

    #[error("point lies outside the open unit disk (|z| = {modulus})")]
    NotInterior { modulus: f64 },

    #[error("point is not on the unit circle (|z| = {modulus})")]
    NotOnCircle { modulus: f64 },

    #[error("evaluation too close to a pole: |1 - conj(lambda) z| = {distance}")]
    PoleProximity { distance: f64 },

    #[error("duplicate points in sequence (indices {i} and {j})")]
    DuplicatePoints { i: usize, j: usize },

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("polynomial has no roots to find (degree < 1)")]
    DegreeTooSmall,

    #[error("denominator has a root inside the closed unit disk (|root| = {modulus})")]
    PoleInsideDisk { modulus: f64 },

    #[error("trigonometric polynomial is negative on the circle (min = {min})")]
    NegativeDensity { min: f64 },

    #[error("boundary root of odd multiplicity {multiplicity} near {location};
input is not a nonnegative trigonometric polynomial")]
    OddBoundaryMultiplicity { multiplicity: usize, location: String },

    #[error("Laurent coefficients are not Hermitian symmetric: {0}")]
    NotHermitian(String),

    #[error("sup norm of b on the circle is {sup}, expected 1")]
    SupNormNotOne { sup: f64 },

    #[error("b is inner or extreme: 1 - |b|^2 vanishes identically on the circle")]
    InnerFunction,

    #[error("boundary zeros too close together: |z1 - z2| = {distance}")]
    ZerosTooClose { distance: f64 },

    #[error("pair invariant violated: {0}")]
    PairInvariant(String),

    #[error("function has a singularity at boundary point {location}")]
    SingularAtBoundary { location: String },

    #[error("series source does not support exact boundary jets")]
    UnsupportedSource,

    #[error("jet mismatch in decomposition: residual {residual} at {location}")]
    JetMismatch { residual: f64, location: String },

    #[error("|p_N({location})| = {value}, expected 1; truncation too coarse for the construction")]
    PnNotUnimodular { location: String, value: f64 },

    #[error("correction denominator too small: |a(l0) B(l0)| = {value}")]
    AddPointDegenerate { value: f64 },

    #[error("root iteration did not converge after {iterations} iterations")]
    RootsNonConvergence { iterations: usize },

    #[error("spectral factorization residual {residual} exceeds tolerance")]
    FactorizationResidual { residual: f64 },

    #[error("quadrature did not converge at panel cap: last two values {prev}, {last}")]
    QuadratureNonConvergence { prev: f64, last: f64 },

    #[error("bisection for the Pick level failed to bracket a feasible t")]
    PickNonBracketing,

    #[error("Schur recursion degenerated (reduced value has modulus {modulus} >= 1)")]
    SchurDegenerate { modulus: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit code the CLI maps this error to: 3 for numerical
    /// non-convergence, 2 for input and validation failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::RootsNonConvergence { .. }
            | Error::QuadratureNonConvergence { .. }
            | Error::PickNonBracketing
            | Error::SchurDegenerate { .. }
            | Error::FactorizationResidual { .. }
            | Error::PnNotUnimodular { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
