//! Interpolating sequences for de Branges-Rovnyak spaces H(b) with rational
//! non-extreme symbol.
//!
//! The crate decides and constructs interpolating sequences for H(b):
//!
//! - [`disk`]: pseudohyperbolic geometry, Blaschke factors and finite
//!   products, boundary Taylor data under the Ahern-Clark condition;
//! - [`poly`] / [`rational`]: complex polynomial algebra, a simultaneous
//!   root finder, Fejer-Riesz spectral factorization, and the Pythagorean
//!   mate `a` of `b` with its boundary zero set;
//! - [`space`]: the decomposition `f = a0 g + p` of H(b), the equivalent
//!   norm, reproducing kernels, and Gram diagnostics;
//! - [`dirichlet`]: higher-order local Dirichlet energies by two independent
//!   routes (coefficients and circle quadrature) plus the exact product
//!   identity;
//! - [`pick`] / [`interp`]: a Pick-matrix bisection and Schur-recursion
//!   solver, the Carleson/boundary-sum decision procedure, and the
//!   constructive multiplier interpolant;
//! - [`random`]: Steinhaus sequences with prescribed radii, exact exceedance
//!   probabilities, three-series diagnostics, dyadic counts, and the
//!   zero-one law experiment;
//! - [`cli`]: the batch command-line surface (`hb` binary) with JSON and CSV
//!   reports.
//!
//! Most numerical claims are checked twice: a coefficient-level computation
//! against an independent quadrature or closed form. Tolerances live in
//! [`tol`].

pub mod cli;
pub mod dirichlet;
pub mod disk;
pub mod error;
pub mod interp;
pub mod io;
pub mod pick;
pub mod poly;
pub mod quad;
pub mod random;
pub mod rational;
pub mod space;
pub mod toeplitz;
pub mod tol;

pub use error::{Error, Result};

pub use disk::{
    ahern_clark_sum, blaschke_eval, blaschke_factor_deriv, blaschke_factor_eval,
    blaschke_radial_derivatives, blaschke_taylor_at_boundary, rho, szego_kernel, BlaschkeProduct,
    DiskSequence, Provenance, UnitCirclePoint, UnitDiskPoint,
};
pub use dirichlet::{
    dirichlet_blaschke_quadrature, dirichlet_factor_closed_form, dirichlet_product_identity,
    local_dirichlet_norm,
};
pub use interp::{
    add_point, carleson_delta, construct_multiplier, decide, sum_condition, CarlesonReport,
    DecisionReport, InterpolantCertificate, SumConditionReport, Verdict,
};
pub use pick::{np_solve, pick_feasible, NpSolution, PickProblem, SchurChain};
pub use poly::{poly_roots, ComplexPoly};
pub use random::{
    dyadic_counts, exceedance_prob, sample_steinhaus, three_series, truncated_moments,
    zero_one_experiment, AngleLaw, DyadicReport, ExperimentReport, RadiiFamily, RadiiKind,
    SequenceFamily, SeriesClass, SteinhausSample, ThreeSeriesReport,
};
pub use rational::{
    corona_lower_bound, fejer_riesz, pythagorean_mate, verify_pair, BoundaryZeroSet, DiskGridSpec,
    PairReport, RationalFn, RationalPair,
};
pub use space::{
    decompose, gram, hb_norm, hb_norm_error, hermite_poly, kernel_kb, AnalyticSeries, GramReport,
    HbDecomposition, SeriesSource,
};
pub use toeplitz::{range_membership_residual, toeplitz_apply, MembershipResidual};
