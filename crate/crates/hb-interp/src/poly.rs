//! Complex polynomials in ascending coefficient order, with the root finder
//! used by the spectral factorization.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Polynomial `c[0] + c[1] z + ... + c[d] z^d`. The empty coefficient list is
/// the zero polynomial; otherwise the leading coefficient is nonzero after
/// trimming.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl ComplexPoly {
    pub fn zero() -> Self {
        ComplexPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ComplexPoly::constant(c(1.0, 0.0))
    }

    pub fn constant(value: Complex64) -> Self {
        ComplexPoly::from_coeffs(vec![value])
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Complex64::default(); k + 1];
        coeffs[k] = c(1.0, 0.0);
        ComplexPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        let mut p = ComplexPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_real_coeffs(coeffs: &[f64]) -> Self {
        ComplexPoly::from_coeffs(coeffs.iter().map(|&x| c(x, 0.0)).collect())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut p = ComplexPoly::one();
        for &r in roots {
            p = p.mul(&ComplexPoly::from_coeffs(vec![-r, c(1.0, 0.0)]));
        }
        p
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if last.norm() == 0.0 {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Max coefficient magnitude; 0 for the zero polynomial.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::default();
        for &ck in self.coeffs.iter().rev() {
            acc = acc * z + ck;
        }
        acc
    }

    pub fn derivative(&self) -> ComplexPoly {
        if self.coeffs.len() <= 1 {
            return ComplexPoly::zero();
        }
        ComplexPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &ck)| ck * ((i + 1) as f64))
                .collect(),
        )
    }

    pub fn add(&self, other: &ComplexPoly) -> ComplexPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Complex64::default(); n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.coeff(i) + other.coeff(i);
        }
        ComplexPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &ComplexPoly) -> ComplexPoly {
        self.add(&other.scale(c(-1.0, 0.0)))
    }

    pub fn scale(&self, k: Complex64) -> ComplexPoly {
        ComplexPoly::from_coeffs(self.coeffs.iter().map(|&ck| ck * k).collect())
    }

    pub fn mul(&self, other: &ComplexPoly) -> ComplexPoly {
        if self.is_zero() || other.is_zero() {
            return ComplexPoly::zero();
        }
        let mut out = vec![Complex64::default(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ComplexPoly::from_coeffs(out)
    }

    /// Coefficients of `p(center + t)` in powers of `t` (Taylor shift).
    pub fn shift(&self, center: Complex64) -> ComplexPoly {
        let mut coeffs = self.coeffs.clone();
        let n = coeffs.len();
        // Repeated synthetic division by (z - center).
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let next = coeffs[j + 1];
                coeffs[j] += next * center;
            }
        }
        ComplexPoly::from_coeffs(coeffs)
    }

    /// Synthetic division by `(z - root)`: returns `(quotient, remainder)`.
    pub fn divide_linear(&self, root: Complex64) -> (ComplexPoly, Complex64) {
        if self.is_zero() {
            return (ComplexPoly::zero(), Complex64::default());
        }
        let n = self.coeffs.len();
        let mut q = vec![Complex64::default(); n - 1];
        let mut acc = *self.coeffs.last().unwrap();
        for k in (0..n - 1).rev() {
            q[k] = acc;
            acc = self.coeffs[k] + acc * root;
        }
        (ComplexPoly::from_coeffs(q), acc)
    }

    /// `z^d conj(p(1/conj(z)))`: reflects roots through the unit circle and
    /// conjugates coefficients in reverse order.
    pub fn conj_reversed(&self) -> ComplexPoly {
        ComplexPoly::from_coeffs(self.coeffs.iter().rev().map(|ck| ck.conj()).collect())
    }

    pub fn conj_coeffs(&self) -> ComplexPoly {
        ComplexPoly::from_coeffs(self.coeffs.iter().map(|ck| ck.conj()).collect())
    }

    /// l2 norm of the coefficients (the Hardy-space norm of a polynomial).
    pub fn h2_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Laurent coefficients `c_0..c_d` of `|p|^2` on the circle:
    /// `c_k = sum_j p_{j+k} conj(p_j)`; negative indices follow by symmetry.
    pub fn boundary_autocorrelation(&self) -> Vec<Complex64> {
        let n = self.coeffs.len();
        if n == 0 {
            return vec![Complex64::default()];
        }
        let mut out = vec![Complex64::default(); n];
        for (k, slot) in out.iter_mut().enumerate() {
            let mut acc = Complex64::default();
            for j in 0..n - k {
                acc += self.coeffs[j + k] * self.coeffs[j].conj();
            }
            *slot = acc;
        }
        out
    }

    pub fn sup_boundary(&self, grid: usize) -> f64 {
        let mut sup: f64 = 0.0;
        for i in 0..grid {
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / (grid as f64);
            let z = Complex64::from_polar(1.0, theta);
            sup = sup.max(self.eval(z).norm());
        }
        sup
    }
}

/// Raw simultaneous-iteration roots, unclustered. Zero roots are factored out
/// first; degrees 1 and 2 use closed forms.
pub fn aberth_roots(p: &ComplexPoly) -> Result<Vec<Complex64>> {
    let deg = p.degree().ok_or(Error::DegreeTooSmall)?;
    if deg < 1 {
        return Err(Error::DegreeTooSmall);
    }
    if p.coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(Error::NonFinite("polynomial coefficients".into()));
    }

    let scale = p.coeff_scale();
    let mut coeffs = p.coeffs.clone();
    let mut roots: Vec<Complex64> = Vec::with_capacity(deg);

    // Factor out roots at the origin.
    while coeffs.len() > 1 && coeffs[0].norm() <= 1e-15 * scale {
        roots.push(Complex64::default());
        coeffs.remove(0);
    }
    let q = ComplexPoly::from_coeffs(coeffs);
    let d = match q.degree() {
        None | Some(0) => return Ok(roots),
        Some(d) => d,
    };

    if d == 1 {
        roots.push(-q.coeffs[0] / q.coeffs[1]);
        return Ok(roots);
    }
    if d == 2 {
        let (a, b, cc) = (q.coeffs[2], q.coeffs[1], q.coeffs[0]);
        let disc = (b * b - 4.0 * a * cc).sqrt();
        // Pick the sign that avoids cancellation in -b +/- disc.
        let s = if (b + disc).norm() >= (b - disc).norm() {
            b + disc
        } else {
            b - disc
        };
        if s.norm() == 0.0 {
            roots.push(Complex64::default());
            roots.push(Complex64::default());
        } else {
            let r1 = -s / (2.0 * a);
            let r2 = -2.0 * cc / s;
            roots.push(r1);
            roots.push(r2);
        }
        return Ok(roots);
    }

    // Initial guesses on a circle of radius (|c0|/|cd|)^(1/d), angles offset
    // to break symmetry.
    let lead = q.coeffs[d];
    let r0 = (q.coeffs[0].norm() / lead.norm()).powf(1.0 / d as f64).max(1e-8);
    let dq = q.derivative();
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (d as f64) + 0.4;
            Complex64::from_polar(r0, theta)
        })
        .collect();

    let mut converged = false;
    for _ in 0..tol::ROOT_MAX_ITER {
        let mut max_step: f64 = 0.0;
        for i in 0..d {
            let pz = q.eval(z[i]);
            if pz.norm() == 0.0 {
                continue;
            }
            let dpz = dq.eval(z[i]);
            let newton = if dpz.norm() == 0.0 {
                // Nudge off a critical point.
                c(1e-12, 1e-12)
            } else {
                pz / dpz
            };
            let mut repulsion = Complex64::default();
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    let diff = z[i] - zj;
                    if diff.norm() > 0.0 {
                        repulsion += 1.0 / diff;
                    }
                }
            }
            let denom = c(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() < 1e-300 {
                newton
            } else {
                newton / denom
            };
            z[i] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
        }
        if max_step <= 1e-14 {
            converged = true;
            break;
        }
    }
    if !converged {
        // Accept anyway if the residuals already meet the contract.
        let ok = z
            .iter()
            .all(|&zi| q.eval(zi).norm() <= tol::ROOT_RESIDUAL_TOL * scale * (1.0 + zi.norm().powi(d as i32)));
        if !ok {
            return Err(Error::RootsNonConvergence {
                iterations: tol::ROOT_MAX_ITER,
            });
        }
    }
    roots.extend(z);
    Ok(roots)
}

/// All roots with multiplicities recovered by clustering at radius
/// `ROOT_CLUSTER_RADIUS`; cluster centroids are reported.
pub fn poly_roots(p: &ComplexPoly) -> Result<Vec<(Complex64, usize)>> {
    let raw = aberth_roots(p)?;
    Ok(cluster_roots(&raw, tol::ROOT_CLUSTER_RADIUS))
}

/// Greedy agglomerative clustering; centroid of each cluster is returned with
/// the cluster size as multiplicity.
pub fn cluster_roots(raw: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    let mut used = vec![false; raw.len()];
    let mut out = Vec::new();
    for i in 0..raw.len() {
        if used[i] {
            continue;
        }
        let mut members = vec![raw[i]];
        used[i] = true;
        let mut centroid = raw[i];
        let mut changed = true;
        while changed {
            changed = false;
            for j in 0..raw.len() {
                if !used[j] && (raw[j] - centroid).norm() <= radius {
                    used[j] = true;
                    members.push(raw[j]);
                    centroid = members.iter().sum::<Complex64>() / members.len() as f64;
                    changed = true;
                }
            }
        }
        out.push((centroid, members.len()));
    }
    out
}
