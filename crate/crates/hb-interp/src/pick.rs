//! Finite Nevanlinna-Pick machinery: the Pick matrix feasibility test, the
//! minimal level `t*` by bisection, and a rational solution from the Schur
//! recursion.

use num_complex::Complex64;

use crate::disk::{rho, DiskSequence};
use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::rational::RationalFn;
use crate::tol;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Bounded interpolation problem at level `scale`.
#[derive(Clone, Debug)]
pub struct PickProblem {
    pub nodes: DiskSequence,
    pub targets: Vec<Complex64>,
    pub scale: f64,
}

impl PickProblem {
    pub fn new(nodes: DiskSequence, targets: Vec<Complex64>, scale: f64) -> Result<Self> {
        if nodes.len() != targets.len() {
            return Err(Error::SizeMismatch(format!(
                "{} nodes vs {} targets",
                nodes.len(),
                targets.len()
            )));
        }
        if !(scale >= 0.0 && scale.is_finite()) {
            return Err(Error::InvalidInput(format!("scale {scale} must be >= 0")));
        }
        let pts = nodes.points();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                if rho(&pts[i], &pts[j]) <= tol::SEPARATION_MIN_RHO {
                    return Err(Error::DuplicatePoints { i, j });
                }
            }
        }
        Ok(PickProblem {
            nodes,
            targets,
            scale,
        })
    }
}

/// PSD test by Hermitian Cholesky with pivot clamping at `PSD_PIVOT_TOL`.
fn hermitian_psd(a: &[Vec<Complex64>]) -> bool {
    let n = a.len();
    let scale = (0..n).map(|i| a[i][i].re.abs()).fold(1e-300, f64::max);
    let pivot_tol = tol::PSD_PIVOT_TOL * scale;
    let mut l = vec![vec![Complex64::default(); n]; n];
    let mut d = vec![0.0f64; n];
    for j in 0..n {
        let mut djj = a[j][j].re;
        for k in 0..j {
            djj -= l[j][k].norm_sqr() * d[k];
        }
        if djj < -pivot_tol {
            return false;
        }
        if djj <= pivot_tol {
            // Semidefinite pivot: the rest of the column must vanish.
            d[j] = 0.0;
            for i in j + 1..n {
                let mut v = a[i][j];
                for k in 0..j {
                    v -= l[i][k] * l[j][k].conj() * d[k];
                }
                if v.norm() > pivot_tol.sqrt() * scale.sqrt() {
                    return false;
                }
                l[i][j] = Complex64::default();
            }
            l[j][j] = Complex64::default();
        } else {
            d[j] = djj;
            l[j][j] = one();
            for i in j + 1..n {
                let mut v = a[i][j];
                for k in 0..j {
                    v -= l[i][k] * l[j][k].conj() * d[k];
                }
                l[i][j] = v / djj;
            }
        }
    }
    true
}

/// True iff `[(t^2 - w_i conj(w_j)) / (1 - lambda_i conj(lambda_j))]` is
/// positive semidefinite. The test runs on the diagonally normalized matrix
/// (a congruence, so semidefiniteness is unchanged), which keeps the pivot
/// tolerance meaningful when nodes sit close to the boundary and the raw
/// diagonal spreads over orders of magnitude.
pub fn pick_feasible(p: &PickProblem) -> Result<bool> {
    let n = p.nodes.len();
    if n == 0 {
        return Ok(true);
    }
    let pts = p.nodes.values();
    let t2 = p.scale * p.scale;
    let mut m = vec![vec![Complex64::default(); n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = (Complex64::new(t2, 0.0) - p.targets[i] * p.targets[j].conj())
                / (one() - pts[i] * pts[j].conj());
        }
    }
    let max_diag = (0..n).map(|i| m[i][i].re).fold(0.0f64, f64::max);
    let scales: Vec<f64> = (0..n)
        .map(|i| {
            let d = m[i][i].re;
            if d > 1e-14 * max_diag.max(1e-300) {
                d.sqrt()
            } else {
                1.0
            }
        })
        .collect();
    for i in 0..n {
        for j in 0..n {
            m[i][j] /= scales[i] * scales[j];
        }
    }
    Ok(hermitian_psd(&m))
}

/// The Schur parameters of a solution, evaluated as a chain of Mobius maps.
/// Pointwise evaluation through the chain keeps every intermediate in the
/// closed unit ball, which stays accurate where the expanded rational form
/// does not.
#[derive(Clone, Debug)]
pub struct SchurChain {
    t_scale: f64,
    levels: Vec<(Complex64, Complex64)>, // (node, consumed value)
}

impl SchurChain {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut psi = Complex64::default();
        for &(node, value) in self.levels.iter().rev() {
            let b = (z - node) / (one() - node.conj() * z);
            let w = b * psi;
            psi = (value + w) / (one() + value.conj() * w);
        }
        psi * self.t_scale
    }

    pub fn t_scale(&self) -> f64 {
        self.t_scale
    }

    /// Expanded rational form; well conditioned for modest node counts.
    pub fn to_rational(&self) -> RationalFn {
        let mut num = ComplexPoly::zero();
        let mut den = ComplexPoly::one();
        for &(node, value) in self.levels.iter().rev() {
            let lin_den = ComplexPoly::from_coeffs(vec![one(), -node.conj()]); // 1 - conj(l) z
            let lin_num = ComplexPoly::from_coeffs(vec![-node, one()]); // z - l
            let new_num = den.mul(&lin_den).scale(value).add(&num.mul(&lin_num));
            let new_den = den
                .mul(&lin_den)
                .add(&num.mul(&lin_num).scale(value.conj()));
            num = new_num;
            den = new_den;
        }
        RationalFn::new_unchecked(num, den).scale(Complex64::new(self.t_scale, 0.0))
    }

    pub fn sup_boundary(&self, grid: usize) -> f64 {
        let mut sup: f64 = 0.0;
        for i in 0..grid {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / grid as f64;
            sup = sup.max(self.eval(Complex64::from_polar(1.0, theta)).norm());
        }
        sup
    }
}

/// Norm-minimal bounded interpolant.
#[derive(Clone, Debug)]
pub struct NpSolution {
    /// Minimal feasible level, to relative accuracy `PICK_BISECT_REL`.
    pub t_star: f64,
    /// Rational solution built at `t_star (1 + PICK_LIFT)`.
    pub f: RationalFn,
    pub chain: SchurChain,
}

/// Solve the bounded interpolation problem: bisect for the minimal `t` with
/// a positive semidefinite Pick matrix, then run the Schur recursion at a
/// level lifted by `PICK_LIFT`.
pub fn np_solve(nodes: &DiskSequence, targets: &[Complex64]) -> Result<NpSolution> {
    if nodes.len() != targets.len() {
        return Err(Error::SizeMismatch(format!(
            "{} nodes vs {} targets",
            nodes.len(),
            targets.len()
        )));
    }
    let n = nodes.len();
    let w_max = targets.iter().map(|w| w.norm()).fold(0.0f64, f64::max);
    if n == 0 || w_max == 0.0 {
        let chain = SchurChain {
            t_scale: 0.0,
            levels: Vec::new(),
        };
        return Ok(NpSolution {
            t_star: 0.0,
            f: RationalFn::from_poly(ComplexPoly::zero()),
            chain,
        });
    }

    let feasible = |t: f64| -> Result<bool> {
        pick_feasible(&PickProblem::new(nodes.clone(), targets.to_vec(), t)?)
    };

    // t >= max |w| is necessary (diagonal entries); bracket upward from it.
    let t_star = if feasible(w_max)? {
        w_max
    } else {
        let mut lo = w_max;
        let mut hi = w_max * 2.0;
        let mut bracketed = false;
        for _ in 0..80 {
            if feasible(hi)? {
                bracketed = true;
                break;
            }
            lo = hi;
            hi *= 2.0;
        }
        if !bracketed {
            return Err(Error::PickNonBracketing);
        }
        while hi - lo > tol::PICK_BISECT_REL * hi {
            let mid = 0.5 * (lo + hi);
            if feasible(mid)? {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    };

    // Run the recursion at the lifted level. The PSD test clamps pivots at
    // PSD_PIVOT_TOL * scale, so the bisected level can sit slightly on the
    // infeasible side for ill-conditioned problems; escalate the lift within
    // the certificate slack (boundary sup stays <= t_star * (1 + 1e-5)).
    let pts = nodes.values();
    let mut lift = tol::PICK_LIFT;
    loop {
        let t_run = t_star * (1.0 + lift);
        match schur_recursion(&pts, targets, t_run) {
            Ok(levels) => {
                let chain = SchurChain {
                    t_scale: t_run,
                    levels,
                };
                let f = chain.to_rational();
                return Ok(NpSolution { t_star, f, chain });
            }
            Err(e) => {
                if lift >= 10.0 * tol::PICK_LIFT {
                    return Err(e);
                }
                lift = (lift * 2.0).min(10.0 * tol::PICK_LIFT);
            }
        }
    }
}

fn schur_recursion(
    pts: &[Complex64],
    targets: &[Complex64],
    t_run: f64,
) -> Result<Vec<(Complex64, Complex64)>> {
    let mut rem_nodes: Vec<Complex64> = pts.to_vec();
    let mut rem_values: Vec<Complex64> = targets.iter().map(|w| w / t_run).collect();
    let mut levels = Vec::with_capacity(pts.len());
    while !rem_nodes.is_empty() {
        // Consume the extremal value first; reducing at the largest |v|
        // keeps the Mobius quotients of the remaining values away from the
        // boundary, which the plain left-to-right order does not.
        let pivot = rem_values
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().partial_cmp(&b.1.norm()).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let node = rem_nodes.swap_remove(pivot);
        let value = rem_values.swap_remove(pivot);
        if value.norm() >= 1.0 - 1e-13 {
            return Err(Error::SchurDegenerate {
                modulus: value.norm(),
            });
        }
        levels.push((node, value));
        for i in 0..rem_nodes.len() {
            let li = rem_nodes[i];
            let vi = rem_values[i];
            let b = (li - node) / (one() - node.conj() * li);
            rem_values[i] = (vi - value) / (one() - value.conj() * vi) / b;
        }
    }
    Ok(levels)
}
