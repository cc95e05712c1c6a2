//! Numerical tolerances used across the crate.
//!
//! Centralized so that every threshold has one definition and a stated
//! rationale instead of ad-hoc magic numbers at call sites.

/// Interiority margin for points of the open unit disk: `|z| < 1 - EPS_DISK`.
///
/// Quantities like `1 - |z|^2` and `1 - conj(w) z` must stay representable with
/// a few digits of headroom in f64; `1e-14` leaves two orders above machine
/// epsilon.
pub const EPS_DISK: f64 = 1e-14;

/// Tolerance on `| |z| - 1 |` for points of the unit circle.
pub const EPS_CIRCLE: f64 = 1e-12;

/// Pole-proximity guard: evaluations error out when `|1 - conj(lambda) z|`
/// falls below this, since `1/(1 - conj(lambda) z)` loses all accuracy there.
pub const EPS_POLE: f64 = 1e-14;

/// Stricter pole guard used for boundary Taylor data of Blaschke products.
pub const EPS_POLE_BOUNDARY: f64 = 1e-12;

/// Poles of a rational function must lie strictly outside the closed disk:
/// `|pole| >= 1 + POLE_OUTSIDE_MARGIN`.
pub const POLE_OUTSIDE_MARGIN: f64 = 1e-10;

/// Roots within this of unit modulus count as boundary roots (after
/// polishing; see `fejer_riesz`).
pub const BOUNDARY_ROOT_TOL: f64 = 1e-8;

/// Radius for clustering root-finder output into multiple roots.
pub const ROOT_CLUSTER_RADIUS: f64 = 1e-6;

/// Iteration cap for the simultaneous (Aberth-Ehrlich) root iteration.
pub const ROOT_MAX_ITER: usize = 200;

/// Residual contract of the root finder: `|p(root)| <= ROOT_RESIDUAL_TOL *
/// scale` with `scale` the max coefficient magnitude.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-8;

/// Default boundary grid size for sup norms and identity checks.
pub const BOUNDARY_GRID: usize = 4096;

/// Tolerance for the Pythagorean identity `|a|^2 + |b|^2 = 1` on the grid.
pub const PAIR_IDENTITY_TOL: f64 = 1e-9;

/// `sup_T |b|` must equal 1 within this for the mate construction.
pub const SUP_NORM_TOL: f64 = 1e-9;

/// Fejer-Riesz: the trigonometric polynomial may dip to `-FR_NEGATIVITY_TOL`
/// before the input is rejected as not nonnegative.
pub const FR_NEGATIVITY_TOL: f64 = 1e-12;

/// Fejer-Riesz: sup-relative error allowed for `|s|^2 = R` on the check grid.
pub const FR_MATCH_TOL: f64 = 1e-8;

/// Jet-matching residual allowed in the decomposition `f = a0 g + p`,
/// relative to the coefficient scale of the numerator.
pub const JET_RESIDUAL_TOL: f64 = 1e-9;

/// Relative target for series tail bounds when expanding rational functions.
pub const SERIES_TAIL_REL: f64 = 1e-13;

/// Hard cap on series expansion length.
pub const SERIES_MAX_LEN: usize = 1 << 20;

/// Relative convergence target of the doubling trapezoid rule on the circle.
pub const QUAD_REL_TOL: f64 = 1e-8;

/// Panel cap for circle quadrature and the truncated-moment integrals.
pub const QUAD_MAX_PANELS: usize = 1 << 20;

/// Pivot tolerance of the positive-semidefiniteness (Cholesky) test.
pub const PSD_PIVOT_TOL: f64 = 1e-12;

/// Relative accuracy of the bisection for the minimal Pick level `t*`.
pub const PICK_BISECT_REL: f64 = 1e-9;

/// The Schur recursion runs at `t = t_star * (1 + PICK_LIFT)`.
pub const PICK_LIFT: f64 = 1e-6;

/// Points closer than this count as duplicates for separation purposes.
pub const SEPARATION_MIN_RHO: f64 = 1e-10;

/// `|p_N(zeta_j)|` must be within this of 1 in the multiplier construction.
pub const PN_UNIMODULAR_TOL: f64 = 1e-6;

/// Guard for the division in the add-a-point correction.
pub const ADD_POINT_GUARD: f64 = 1e-12;

/// Minimal pairwise distance between distinct boundary zeros.
pub const ZERO_SEPARATION: f64 = 1e-8;
