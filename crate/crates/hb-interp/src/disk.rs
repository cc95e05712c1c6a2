//! Exact disk geometry: pseudohyperbolic distance, Blaschke factors and
//! finite Blaschke products, their derivatives and boundary Taylor data.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::random::SequenceFamily;
use crate::tol;

/// Point of the open unit disk, `|z| < 1 - EPS_DISK`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitDiskPoint(Complex64);

impl UnitDiskPoint {
    pub fn new(z: Complex64) -> Result<Self> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::NonFinite("disk point".into()));
        }
        let m = z.norm();
        if m >= 1.0 - tol::EPS_DISK {
            return Err(Error::NotInterior { modulus: m });
        }
        Ok(UnitDiskPoint(z))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }
}

/// Point of the unit circle, `| |z| - 1 | <= EPS_CIRCLE`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitCirclePoint(Complex64);

impl UnitCirclePoint {
    pub fn new(z: Complex64) -> Result<Self> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::NonFinite("circle point".into()));
        }
        let m = z.norm();
        if (m - 1.0).abs() > tol::EPS_CIRCLE {
            return Err(Error::NotOnCircle { modulus: m });
        }
        Ok(UnitCirclePoint(z))
    }

    pub fn from_angle(theta: f64) -> Self {
        UnitCirclePoint(Complex64::from_polar(1.0, theta))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }
}

/// How a sequence of disk points came to be.
#[derive(Clone, Debug)]
pub enum Provenance {
    Explicit,
    Family(SequenceFamily),
}

/// Finite ordered sequence of interior points, optionally carrying the
/// parametric family it was generated from.
#[derive(Clone, Debug)]
pub struct DiskSequence {
    points: Vec<UnitDiskPoint>,
    provenance: Provenance,
}

impl DiskSequence {
    pub fn new(points: Vec<UnitDiskPoint>) -> Self {
        DiskSequence {
            points,
            provenance: Provenance::Explicit,
        }
    }

    pub fn from_values(values: &[Complex64]) -> Result<Self> {
        let points = values
            .iter()
            .map(|&z| UnitDiskPoint::new(z))
            .collect::<Result<Vec<_>>>()?;
        Ok(DiskSequence::new(points))
    }

    /// Used by the family samplers; the descriptor reproduces the points.
    pub(crate) fn with_family(points: Vec<UnitDiskPoint>, family: SequenceFamily) -> Self {
        DiskSequence {
            points,
            provenance: Provenance::Family(family),
        }
    }

    pub fn points(&self) -> &[UnitDiskPoint] {
        &self.points
    }

    pub fn values(&self) -> Vec<Complex64> {
        self.points.iter().map(|p| p.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// First `n` points, keeping the family descriptor (with count adjusted)
    /// when present.
    pub fn truncated(&self, n: usize) -> DiskSequence {
        let points = self.points.iter().take(n).cloned().collect();
        match &self.provenance {
            Provenance::Explicit => DiskSequence::new(points),
            Provenance::Family(f) => DiskSequence::with_family(points, f.truncated(n)),
        }
    }
}

/// Pseudohyperbolic distance `|(z - w) / (1 - conj(w) z)|`.
pub fn rho(z: &UnitDiskPoint, w: &UnitDiskPoint) -> f64 {
    let (z, w) = (z.value(), w.value());
    ((z - w) / (Complex64::new(1.0, 0.0) - w.conj() * z)).norm()
}

fn pole_guard(lambda: Complex64, z: Complex64, eps: f64) -> Result<Complex64> {
    let d = Complex64::new(1.0, 0.0) - lambda.conj() * z;
    if d.norm() < eps {
        Err(Error::PoleProximity { distance: d.norm() })
    } else {
        Ok(d)
    }
}

fn cpow(z: Complex64, k: usize) -> Complex64 {
    if k == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        z.powu(k as u32)
    }
}

/// Elementary Blaschke factor `phi_lambda(z) = (z - lambda)/(1 - conj(lambda) z)`.
pub fn blaschke_factor_eval(lambda: &UnitDiskPoint, z: Complex64) -> Result<Complex64> {
    let l = lambda.value();
    let d = pole_guard(l, z, tol::EPS_POLE)?;
    Ok((z - l) / d)
}

/// Closed-form j-th derivative of the elementary factor,
/// `j! conj(lambda)^(j-1) (1 - |lambda|^2) / (1 - conj(lambda) z)^(j+1)`.
pub fn blaschke_factor_deriv(lambda: &UnitDiskPoint, z: Complex64, j: usize) -> Result<Complex64> {
    assert!(j >= 1, "derivative order must be >= 1");
    let l = lambda.value();
    let d = pole_guard(l, z, tol::EPS_POLE)?;
    let mut fact = 1.0;
    for k in 2..=j {
        fact *= k as f64;
    }
    Ok(fact * cpow(l.conj(), j - 1) * (1.0 - l.norm_sqr()) / cpow(d, j + 1))
}

/// Szego kernel `k_lambda(z) = 1/(1 - conj(lambda) z)`.
pub fn szego_kernel(lambda: &UnitDiskPoint, z: Complex64) -> Result<Complex64> {
    let d = pole_guard(lambda.value(), z, tol::EPS_POLE)?;
    Ok(1.0 / d)
}

/// Finite Blaschke product with the classical normalization: a zero at the
/// origin contributes the factor `z`; a zero `lambda != 0` contributes
/// `(|lambda|/lambda) (lambda - z)/(1 - conj(lambda) z)`, so each factor is
/// positive at the origin.
#[derive(Clone, Debug)]
pub struct BlaschkeProduct {
    zeros: DiskSequence,
}

impl BlaschkeProduct {
    pub fn new(zeros: DiskSequence) -> Self {
        BlaschkeProduct { zeros }
    }

    pub fn zeros(&self) -> &DiskSequence {
        &self.zeros
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// Product over the first `n` zeros.
    pub fn partial(&self, n: usize) -> BlaschkeProduct {
        BlaschkeProduct::new(self.zeros.truncated(n))
    }

    /// Numerator and denominator polynomials of the product as a rational
    /// function; the denominator is `prod (1 - conj(lambda_k) z)`.
    pub fn rational_parts(&self) -> (ComplexPoly, ComplexPoly) {
        let one = Complex64::new(1.0, 0.0);
        let mut num = ComplexPoly::one();
        let mut den = ComplexPoly::one();
        for p in self.zeros.points() {
            let l = p.value();
            if l.norm() == 0.0 {
                num = num.mul(&ComplexPoly::from_coeffs(vec![Complex64::default(), one]));
            } else {
                // (|l|/l)(l - z) = |l| - (|l|/l) z
                let phase = Complex64::new(l.norm(), 0.0) / l;
                num = num.mul(&ComplexPoly::from_coeffs(vec![
                    Complex64::new(l.norm(), 0.0),
                    -phase,
                ]));
                den = den.mul(&ComplexPoly::from_coeffs(vec![one, -l.conj()]));
            }
        }
        (num, den)
    }

    /// Order-`order` Taylor coefficients of one factor at `z0`.
    fn factor_taylor(lambda: Complex64, z0: Complex64, order: usize, eps: f64) -> Result<Vec<Complex64>> {
        let mut out = vec![Complex64::default(); order + 1];
        if lambda.norm() == 0.0 {
            out[0] = z0;
            if order >= 1 {
                out[1] = Complex64::new(1.0, 0.0);
            }
            return Ok(out);
        }
        let d = pole_guard(lambda, z0, eps)?;
        let norm_factor = Complex64::new(lambda.norm(), 0.0) / lambda;
        let a = norm_factor / d;
        let w = lambda.conj() / d;
        out[0] = a * (lambda - z0);
        let mut wpow = Complex64::new(1.0, 0.0); // w^(j-1)
        for j in 1..=order {
            out[j] = a * ((lambda - z0) * wpow * w - wpow);
            wpow *= w;
        }
        Ok(out)
    }
}

/// Value of the product at `z`.
pub fn blaschke_eval(b: &BlaschkeProduct, z: Complex64) -> Result<Complex64> {
    let mut acc = Complex64::new(1.0, 0.0);
    for p in b.zeros().points() {
        let l = p.value();
        if l.norm() == 0.0 {
            acc *= z;
        } else {
            let d = pole_guard(l, z, tol::EPS_POLE)?;
            acc *= Complex64::new(l.norm(), 0.0) / l * (l - z) / d;
        }
    }
    Ok(acc)
}

/// Ahern-Clark sum `sum_n (1 - |lambda_n|) / |zeta - lambda_n|^(N+1)`.
pub fn ahern_clark_sum(seq: &DiskSequence, zeta: &UnitCirclePoint, order: usize) -> f64 {
    let zv = zeta.value();
    seq.points()
        .iter()
        .map(|p| {
            let l = p.value();
            (1.0 - l.norm()) / (zv - l).norm().powi(order as i32 + 1)
        })
        .sum()
}

/// Taylor coefficients `c_0..c_N` of the product at the boundary point, so
/// `c_j = B^(j)(zeta)/j!`. Exact for finite products: each factor is analytic
/// at `zeta`, and the expansions are convolved to order `N`.
pub fn blaschke_taylor_at_boundary(
    b: &BlaschkeProduct,
    zeta: &UnitCirclePoint,
    order: usize,
) -> Result<Vec<Complex64>> {
    taylor_at_point(b, zeta.value(), order, tol::EPS_POLE_BOUNDARY)
}

fn taylor_at_point(
    b: &BlaschkeProduct,
    z0: Complex64,
    order: usize,
    eps: f64,
) -> Result<Vec<Complex64>> {
    let mut acc = vec![Complex64::default(); order + 1];
    acc[0] = Complex64::new(1.0, 0.0);
    for p in b.zeros().points() {
        let f = BlaschkeProduct::factor_taylor(p.value(), z0, order, eps)?;
        let mut next = vec![Complex64::default(); order + 1];
        for (i, &ai) in acc.iter().enumerate() {
            for (j, &fj) in f.iter().enumerate() {
                if i + j <= order {
                    next[i + j] += ai * fj;
                }
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// `B^(j)(r zeta)` for each radius in `r_grid`, by exact differentiation of
/// the finite product (factor-wise local Taylor data).
pub fn blaschke_radial_derivatives(
    b: &BlaschkeProduct,
    zeta: &UnitCirclePoint,
    j: usize,
    r_grid: &[f64],
) -> Result<Vec<Complex64>> {
    let mut fact = 1.0;
    for k in 2..=j {
        fact *= k as f64;
    }
    let mut out = Vec::with_capacity(r_grid.len());
    for &r in r_grid {
        let z0 = zeta.value() * r;
        let coeffs = taylor_at_point(b, z0, j, tol::EPS_POLE_BOUNDARY)?;
        out.push(coeffs[j] * fact);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn dp(re: f64, im: f64) -> UnitDiskPoint {
        UnitDiskPoint::new(c(re, im)).unwrap()
    }

    #[test]
    fn disk_point_validation() {
        assert!(UnitDiskPoint::new(c(0.999, 0.0)).is_ok());
        assert!(UnitDiskPoint::new(c(1.0, 0.0)).is_err());
        assert!(UnitDiskPoint::new(c(f64::NAN, 0.0)).is_err());
        assert!(UnitCirclePoint::new(c(1.0, 0.0)).is_ok());
        assert!(UnitCirclePoint::new(c(0.5, 0.0)).is_err());
    }

    #[test]
    fn rho_basic_values() {
        assert_relative_eq!(rho(&dp(0.0, 0.0), &dp(0.3, 0.4)), 0.5, epsilon = 1e-15);
        assert_relative_eq!(rho(&dp(0.2, -0.1), &dp(0.2, -0.1)), 0.0);
        // (0.5, -0.5) -> |1| / |1 + 0.25| = 0.8
        assert_relative_eq!(rho(&dp(0.5, 0.0), &dp(-0.5, 0.0)), 0.8, epsilon = 1e-15);
    }

    #[test]
    fn factor_values() {
        let l = dp(0.5, 0.0);
        assert_relative_eq!(
            blaschke_factor_eval(&l, c(0.5, 0.0)).unwrap().norm(),
            0.0
        );
        let z = c(0.3, 0.2);
        let origin = dp(0.0, 0.0);
        let v = blaschke_factor_eval(&origin, z).unwrap();
        assert_relative_eq!(v.re, z.re);
        assert_relative_eq!(v.im, z.im);
        // (0.5, 1) -> (1 - 0.5)/(1 - 0.5) = 1
        let v = blaschke_factor_eval(&l, c(1.0, 0.0)).unwrap();
        assert_relative_eq!(v.re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn factor_derivative_closed_form() {
        let l = dp(0.5, 0.0);
        // (0.5, 1, 1) -> 0.75/0.25 = 3
        let v = blaschke_factor_deriv(&l, c(1.0, 0.0), 1).unwrap();
        assert_relative_eq!(v.re, 3.0, epsilon = 1e-14);
        // (0, z, 1) -> 1
        let v = blaschke_factor_deriv(&dp(0.0, 0.0), c(0.3, 0.1), 1).unwrap();
        assert_relative_eq!(v.re, 1.0);
        assert_relative_eq!(v.im, 0.0);
        // (0.5, 0, 2) -> 2 * 0.5 * 0.75 = 0.75
        let v = blaschke_factor_deriv(&l, c(0.0, 0.0), 2).unwrap();
        assert_relative_eq!(v.re, 0.75, epsilon = 1e-14);
    }

    #[test]
    fn factor_derivative_matches_finite_differences() {
        let l = dp(0.4, -0.3);
        let z = c(0.2, 0.5);
        let h = 1e-5;
        let fd = (blaschke_factor_eval(&l, z + c(h, 0.0)).unwrap()
            - blaschke_factor_eval(&l, z - c(h, 0.0)).unwrap())
            / (2.0 * h);
        let exact = blaschke_factor_deriv(&l, z, 1).unwrap();
        assert!((fd - exact).norm() / exact.norm() < 1e-6);
    }

    #[test]
    fn product_values() {
        // Single origin zero: B(z) = z.
        let b = BlaschkeProduct::new(DiskSequence::new(vec![dp(0.0, 0.0)]));
        let z = c(0.3, -0.2);
        let v = blaschke_eval(&b, z).unwrap();
        assert_relative_eq!(v.re, z.re);
        assert_relative_eq!(v.im, z.im);

        // B vanishes at its zeros.
        let b = BlaschkeProduct::new(DiskSequence::new(vec![dp(0.4, 0.2)]));
        assert!(blaschke_eval(&b, c(0.4, 0.2)).unwrap().norm() < 1e-15);

        // {0.5, -0.5} at 0: each normalized factor equals |lambda| there.
        let b = BlaschkeProduct::new(DiskSequence::new(vec![dp(0.5, 0.0), dp(-0.5, 0.0)]));
        let v = blaschke_eval(&b, Complex64::default()).unwrap();
        assert_relative_eq!(v.re, 0.25, epsilon = 1e-15);
        assert_relative_eq!(v.im, 0.0);
    }

    #[test]
    fn rational_parts_agree_with_eval() {
        let b = BlaschkeProduct::new(DiskSequence::new(vec![
            dp(0.5, 0.1),
            dp(0.0, 0.0),
            dp(-0.3, 0.6),
        ]));
        let (num, den) = b.rational_parts();
        for &z in &[c(0.1, 0.2), c(-0.7, 0.1), c(0.9, 0.0)] {
            let direct = blaschke_eval(&b, z).unwrap();
            let rational = num.eval(z) / den.eval(z);
            assert!((direct - rational).norm() < 1e-14);
        }
    }

    #[test]
    fn ahern_clark_values() {
        let zeta = UnitCirclePoint::from_angle(0.0);
        let seq = DiskSequence::new(vec![dp(0.0, 0.0)]);
        assert_relative_eq!(ahern_clark_sum(&seq, &zeta, 0), 1.0);
        let seq = DiskSequence::new(vec![dp(0.5, 0.0)]);
        assert_relative_eq!(ahern_clark_sum(&seq, &zeta, 1), 2.0, epsilon = 1e-14);

        // Radii 1 - 2^-n toward 1, evaluated at -1: terms approach 2^-n / 4.
        let zeta = UnitCirclePoint::new(c(-1.0, 0.0)).unwrap();
        for n in 5..=10u32 {
            let r = 1.0 - 0.5f64.powi(n as i32);
            let term = (1.0 - r) / (c(-1.0, 0.0) - c(r, 0.0)).norm().powi(2);
            let approx_term = 0.5f64.powi(n as i32) / 4.0;
            assert!((term / approx_term - 1.0).abs() < 0.05, "n = {n}");
            let single = DiskSequence::new(vec![dp(r, 0.0)]);
            assert_relative_eq!(ahern_clark_sum(&single, &zeta, 1), term, epsilon = 1e-14);
        }
    }

    #[test]
    fn taylor_at_boundary_values() {
        let zeta = UnitCirclePoint::from_angle(0.0);
        // B(z) = z: coefficients [1, 1, 0].
        let b = BlaschkeProduct::new(DiskSequence::new(vec![dp(0.0, 0.0)]));
        let t = blaschke_taylor_at_boundary(&b, &zeta, 2).unwrap();
        assert_relative_eq!(t[0].re, 1.0);
        assert_relative_eq!(t[1].re, 1.0);
        assert!(t[2].norm() < 1e-15);

        // Single zero 0.5 with the positive-at-origin normalization: the
        // factor is -(z - 0.5)/(1 - 0.5 z), so value -1 and derivative -3.
        let b = BlaschkeProduct::new(DiskSequence::new(vec![dp(0.5, 0.0)]));
        let t = blaschke_taylor_at_boundary(&b, &zeta, 1).unwrap();
        assert_relative_eq!(t[0].re, -1.0, epsilon = 1e-14);
        assert_relative_eq!(t[1].re, -3.0, epsilon = 1e-14);

        // Order 0 coefficient is the product value, unimodular on the circle.
        let b = BlaschkeProduct::new(DiskSequence::new(vec![dp(0.3, -0.4), dp(0.0, 0.0)]));
        let zeta = UnitCirclePoint::from_angle(1.1);
        let t = blaschke_taylor_at_boundary(&b, &zeta, 0).unwrap();
        assert_relative_eq!(t[0].norm(), 1.0, epsilon = 1e-13);
        let direct = blaschke_eval(&b, zeta.value()).unwrap();
        assert!((t[0] - direct).norm() < 1e-13);
    }

    #[test]
    fn taylor_reproduces_values_near_boundary() {
        // |B(zeta(1-h)) - sum c_j (zeta(1-h) - zeta)^j| = O(h^(N+1)):
        // log-log slope across h = 1e-2..1e-4 should be at least N + 0.8.
        let zeta = UnitCirclePoint::from_angle(0.7);
        let b = BlaschkeProduct::new(DiskSequence::new(vec![
            dp(0.5, 0.0),
            dp(0.2, 0.3),
            dp(-0.1, -0.6),
        ]));
        for order in 1..=3usize {
            let t = blaschke_taylor_at_boundary(&b, &zeta, order).unwrap();
            let hs = [1e-2, 1e-3, 1e-4];
            let mut pts = Vec::new();
            for &h in &hs {
                let z = zeta.value() * (1.0 - h);
                let dz = z - zeta.value();
                let mut approx = Complex64::default();
                let mut pw = Complex64::new(1.0, 0.0);
                for &cj in &t {
                    approx += cj * pw;
                    pw *= dz;
                }
                let err = (blaschke_eval(&b, z).unwrap() - approx).norm();
                // Keep points above the f64 floor; order 3 at h = 1e-4 sits
                // at rounding level.
                if err > 1e-14 {
                    pts.push((h.ln(), err.ln()));
                }
            }
            assert!(pts.len() >= 2, "order {order}: all errors at the floor");
            // Least-squares slope of the log-log fit.
            let n = pts.len() as f64;
            let (sx, sy): (f64, f64) = pts.iter().fold((0.0, 0.0), |a, p| (a.0 + p.0, a.1 + p.1));
            let (sxx, sxy): (f64, f64) = pts
                .iter()
                .fold((0.0, 0.0), |a, p| (a.0 + p.0 * p.0, a.1 + p.0 * p.1));
            let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
            assert!(
                slope >= order as f64 + 0.8,
                "order {order}: slope {slope}, pts {pts:?}"
            );
        }
    }

    #[test]
    fn radial_derivatives_basic() {
        let zeta = UnitCirclePoint::from_angle(0.0);
        let b = BlaschkeProduct::new(DiskSequence::new(vec![dp(0.0, 0.0)]));
        let v = blaschke_radial_derivatives(&b, &zeta, 1, &[0.0, 0.5, 1.0]).unwrap();
        for x in v {
            assert_relative_eq!(x.re, 1.0);
            assert!(x.im.abs() < 1e-15);
        }
        let b = BlaschkeProduct::new(DiskSequence::new(vec![dp(0.5, 0.0)]));
        let v = blaschke_radial_derivatives(&b, &zeta, 0, &[1.0]).unwrap();
        assert_relative_eq!(v[0].norm(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn partial_product_taylor_coefficients_stabilize() {
        // Ahern-Clark sequence accumulating at -1; Taylor data at 1 is
        // Cauchy in the truncation order.
        let zeta = UnitCirclePoint::from_angle(0.0);
        let points: Vec<UnitDiskPoint> = (1..=40)
            .map(|k| dp(-(1.0 - 0.5f64.powi(k)), 0.0))
            .collect();
        let b = BlaschkeProduct::new(DiskSequence::new(points));
        let order = 2;
        let mut diffs = Vec::new();
        let mut prev = blaschke_taylor_at_boundary(&b.partial(5), &zeta, order).unwrap();
        for n in 6..=40 {
            let cur = blaschke_taylor_at_boundary(&b.partial(n), &zeta, order).unwrap();
            let d = cur
                .iter()
                .zip(&prev)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0f64, f64::max);
            diffs.push(d);
            prev = cur;
        }
        // Tail differences decrease and drop below 1e-8.
        for w in diffs.windows(2).skip(5) {
            assert!(w[1] <= w[0] * 1.01);
        }
        assert!(*diffs.last().unwrap() < 1e-8);
    }

    proptest! {
        #[test]
        fn rho_symmetry(zre in -0.9f64..0.9, zim in -0.3f64..0.3,
                        wre in -0.9f64..0.9, wim in -0.3f64..0.3) {
            prop_assume!((zre * zre + zim * zim).sqrt() < 0.98);
            prop_assume!((wre * wre + wim * wim).sqrt() < 0.98);
            let z = dp(zre, zim);
            let w = dp(wre, wim);
            prop_assert!((rho(&z, &w) - rho(&w, &z)).abs() <= 1e-15);
        }

        #[test]
        fn rho_moebius_invariance(are in -0.7f64..0.7, aim in -0.3f64..0.3,
                                  zre in -0.7f64..0.7, zim in -0.3f64..0.3,
                                  wre in -0.7f64..0.7, wim in -0.3f64..0.3) {
            prop_assume!((are * are + aim * aim).sqrt() < 0.8);
            prop_assume!((zre * zre + zim * zim).sqrt() < 0.8);
            prop_assume!((wre * wre + wim * wim).sqrt() < 0.8);
            let a = dp(are, aim);
            let z = dp(zre, zim);
            let w = dp(wre, wim);
            let fz = UnitDiskPoint::new(blaschke_factor_eval(&a, z.value()).unwrap()).unwrap();
            let fw = UnitDiskPoint::new(blaschke_factor_eval(&a, w.value()).unwrap()).unwrap();
            prop_assert!((rho(&fz, &fw) - rho(&z, &w)).abs() <= 1e-12);
        }

        #[test]
        fn product_unimodular_on_circle(l1 in -0.8f64..0.8, l2 in -0.8f64..0.8,
                                        theta in 0.0f64..6.283) {
            let b = BlaschkeProduct::new(DiskSequence::new(vec![
                dp(l1, 0.2 * l2), dp(0.3 * l2, l1 * 0.5), dp(0.0, 0.0),
            ]));
            let z = Complex64::from_polar(1.0, theta);
            let v = blaschke_eval(&b, z).unwrap();
            prop_assert!((v.norm() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn unimodular_on_full_grid() {
        let b = BlaschkeProduct::new(DiskSequence::new(vec![
            dp(0.5, 0.0),
            dp(-0.2, 0.7),
            dp(0.0, 0.0),
            dp(0.1, -0.85),
        ]));
        for i in 0..1024 {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / 1024.0;
            let v = blaschke_eval(&b, Complex64::from_polar(1.0, theta)).unwrap();
            assert!((v.norm() - 1.0).abs() <= 1e-12);
        }
    }
}
