//! Rational functions with poles off the closed disk, Fejer-Riesz spectral
//! factorization, and the Pythagorean pair `(a, b)` with its boundary zero
//! set.

use num_complex::Complex64;

use crate::disk::UnitCirclePoint;
use crate::error::{Error, Result};
use crate::poly::{aberth_roots, ComplexPoly};
use crate::tol;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// `num/den` with all roots of `den` strictly outside the closed unit disk;
/// the denominator is normalized so `den(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFn {
    num: ComplexPoly,
    den: ComplexPoly,
}

impl RationalFn {
    pub fn new(num: ComplexPoly, den: ComplexPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        if den.degree() != Some(0) {
            for r in aberth_roots(&den)? {
                if r.norm() < 1.0 + tol::POLE_OUTSIDE_MARGIN {
                    return Err(Error::PoleInsideDisk { modulus: r.norm() });
                }
            }
        }
        Ok(Self::new_unchecked(num, den))
    }

    /// Internal constructor for expressions built from already-validated
    /// denominators (products, sums, derivatives).
    pub(crate) fn new_unchecked(num: ComplexPoly, den: ComplexPoly) -> Self {
        let d0 = den.coeff(0);
        if d0.norm() > 0.0 && (d0 - one()).norm() > 0.0 {
            RationalFn {
                num: num.scale(1.0 / d0),
                den: den.scale(1.0 / d0),
            }
        } else {
            RationalFn { num, den }
        }
    }

    pub fn from_poly(p: ComplexPoly) -> Self {
        RationalFn {
            num: p,
            den: ComplexPoly::one(),
        }
    }

    pub fn constant(c: Complex64) -> Self {
        RationalFn::from_poly(ComplexPoly::constant(c))
    }

    pub fn num(&self) -> &ComplexPoly {
        &self.num
    }

    pub fn den(&self) -> &ComplexPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.num.eval(z) / self.den.eval(z)
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new_unchecked(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &ComplexPoly) -> RationalFn {
        RationalFn::new_unchecked(self.num.mul(p), self.den.clone())
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new_unchecked(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RationalFn) -> RationalFn {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, k: Complex64) -> RationalFn {
        RationalFn {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    pub fn derivative(&self) -> RationalFn {
        RationalFn::new_unchecked(
            self.num
                .derivative()
                .mul(&self.den)
                .sub(&self.num.mul(&self.den.derivative())),
            self.den.mul(&self.den),
        )
    }

    /// `f(rot z)` for unimodular `rot`.
    pub fn compose_rotation(&self, rot: Complex64) -> RationalFn {
        let twist = |p: &ComplexPoly| {
            let mut w = one();
            let coeffs = p
                .coeffs()
                .iter()
                .map(|&c| {
                    let out = c * w;
                    w *= rot;
                    out
                })
                .collect();
            ComplexPoly::from_coeffs(coeffs)
        };
        RationalFn::new_unchecked(twist(&self.num), twist(&self.den))
    }

    /// Taylor coefficients `f(center + t) = sum_j out[j] t^j` to the given
    /// order; requires `den(center) != 0`.
    pub fn taylor_at(&self, center: Complex64, order: usize) -> Result<Vec<Complex64>> {
        let ns = self.num.shift(center);
        let ds = self.den.shift(center);
        let d0 = ds.coeff(0);
        if d0.norm() < tol::EPS_POLE_BOUNDARY * self.den.coeff_scale().max(1e-300) {
            return Err(Error::SingularAtBoundary {
                location: format!("{center}"),
            });
        }
        let mut out = vec![Complex64::default(); order + 1];
        for j in 0..=order {
            let mut acc = ns.coeff(j);
            for m in 1..=j {
                acc -= ds.coeff(m) * out[j - m];
            }
            out[j] = acc / d0;
        }
        Ok(out)
    }

    /// Power-series coefficients at the origin, fixed length.
    pub fn series_coeffs(&self, len: usize) -> Vec<Complex64> {
        let d0 = self.den.coeff(0);
        let mut out = vec![Complex64::default(); len];
        for k in 0..len {
            let mut acc = self.num.coeff(k);
            for m in 1..=k.min(self.den.coeffs().len().saturating_sub(1)) {
                acc -= self.den.coeff(m) * out[k - m];
            }
            out[k] = acc / d0;
        }
        out
    }

    /// Smallest pole modulus, or `None` for polynomials.
    pub fn min_pole_modulus(&self) -> Result<Option<f64>> {
        if self.is_polynomial() {
            return Ok(None);
        }
        let roots = aberth_roots(&self.den)?;
        Ok(roots.iter().map(|r| r.norm()).min_by(|a, b| a.partial_cmp(b).unwrap()))
    }

    /// Series coefficients together with a bound on the l2 norm of the
    /// discarded tail, extending adaptively until the bound meets the
    /// relative target (or the hard cap).
    pub fn series_with_tail(&self, target_rel: f64) -> Result<(Vec<Complex64>, f64)> {
        if self.is_polynomial() {
            let coeffs = self.num.coeffs().to_vec();
            return Ok((coeffs.iter().map(|c| c / self.den.coeff(0)).collect(), 0.0));
        }
        let rho = self.min_pole_modulus()?.expect("non-polynomial");
        // Evaluate on a circle strictly between 1 and the nearest pole.
        let radius = 0.5 * (1.0 + rho);
        let mut m_bound: f64 = 0.0;
        for i in 0..512 {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / 512.0;
            m_bound = m_bound.max(self.eval(Complex64::from_polar(radius, theta)).norm());
        }
        m_bound *= 1.25;
        let tail_after = |k: usize| -> f64 {
            m_bound * radius.powi(-(k as i32)) / (1.0 - radius.powi(-2)).sqrt()
        };
        let mut len = 64usize;
        loop {
            let tail = tail_after(len);
            if tail.is_nan() || len >= tol::SERIES_MAX_LEN {
                return Ok((self.series_coeffs(len), tail));
            }
            let coeffs = self.series_coeffs(len);
            let norm = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if tail <= target_rel * norm.max(1.0) {
                return Ok((coeffs, tail));
            }
            len *= 2;
        }
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

/// Zeros of the mate on the circle with multiplicities; pairwise distinct.
#[derive(Clone, Debug)]
pub struct BoundaryZeroSet {
    zeros: Vec<(UnitCirclePoint, usize)>,
}

impl BoundaryZeroSet {
    pub fn new(zeros: Vec<(UnitCirclePoint, usize)>) -> Result<Self> {
        for (i, (zi, mi)) in zeros.iter().enumerate() {
            if *mi == 0 {
                return Err(Error::InvalidInput("zero multiplicity".into()));
            }
            for (zj, _) in zeros.iter().skip(i + 1) {
                let d = (zi.value() - zj.value()).norm();
                if d <= tol::ZERO_SEPARATION {
                    return Err(Error::ZerosTooClose { distance: d });
                }
            }
        }
        if zeros.is_empty() {
            return Err(Error::EmptyInput("boundary zero set".into()));
        }
        Ok(BoundaryZeroSet { zeros })
    }

    pub fn zeros(&self) -> &[(UnitCirclePoint, usize)] {
        &self.zeros
    }

    /// `N = sum of multiplicities`.
    pub fn total(&self) -> usize {
        self.zeros.iter().map(|(_, m)| m).sum()
    }

    /// `M = max multiplicity`.
    pub fn max_multiplicity(&self) -> usize {
        self.zeros.iter().map(|(_, m)| *m).max().unwrap_or(0)
    }

    /// Monic `prod (z - zeta_j)^(m_j)`.
    pub fn monic_product(&self) -> ComplexPoly {
        let mut p = ComplexPoly::one();
        for (z, m) in &self.zeros {
            for _ in 0..*m {
                p = p.mul(&ComplexPoly::from_coeffs(vec![-z.value(), one()]));
            }
        }
        p
    }
}

/// Validated Pythagorean pair `(a, b)` with the boundary zero set of `a`.
#[derive(Clone, Debug)]
pub struct RationalPair {
    b: RationalFn,
    a: RationalFn,
    zeros: BoundaryZeroSet,
}

impl RationalPair {
    pub fn new(b: RationalFn, a: RationalFn, zeros: BoundaryZeroSet) -> Result<Self> {
        // |a|^2 + |b|^2 = 1 on the circle.
        let mut max_res: f64 = 0.0;
        for i in 0..tol::BOUNDARY_GRID {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / tol::BOUNDARY_GRID as f64;
            let z = Complex64::from_polar(1.0, theta);
            let v = a.eval(z).norm_sqr() + b.eval(z).norm_sqr();
            max_res = max_res.max((v - 1.0).abs());
        }
        if max_res > tol::PAIR_IDENTITY_TOL {
            return Err(Error::PairInvariant(format!(
                "|a|^2 + |b|^2 deviates from 1 by {max_res}"
            )));
        }
        // a outer: numerator roots not strictly inside the disk.
        if a.num().degree().unwrap_or(0) >= 1 {
            for r in aberth_roots(a.num())? {
                if r.norm() < 1.0 - tol::POLE_OUTSIDE_MARGIN - tol::BOUNDARY_ROOT_TOL {
                    return Err(Error::PairInvariant(format!(
                        "a has an interior zero of modulus {}",
                        r.norm()
                    )));
                }
            }
        }
        // a(0) real and positive.
        let a0 = a.eval(Complex64::default());
        if !(a0.re > 0.0 && a0.im.abs() <= 1e-10 * a0.re.max(1e-300)) {
            return Err(Error::PairInvariant(format!("a(0) = {a0} is not positive")));
        }
        Ok(RationalPair { b, a, zeros })
    }

    pub fn b(&self) -> &RationalFn {
        &self.b
    }

    pub fn a(&self) -> &RationalFn {
        &self.a
    }

    pub fn zeros(&self) -> &BoundaryZeroSet {
        &self.zeros
    }

    /// `N`, the total boundary multiplicity.
    pub fn n_total(&self) -> usize {
        self.zeros.total()
    }

    /// `M`, the maximal boundary multiplicity.
    pub fn m_max(&self) -> usize {
        self.zeros.max_multiplicity()
    }

    /// Monic boundary factor `a_0 = prod (z - zeta_j)^(m_j)`.
    pub fn a0(&self) -> ComplexPoly {
        self.zeros.monic_product()
    }
}

fn laurent_eval(coeffs_half: &[Complex64], theta: f64) -> f64 {
    // coeffs_half = c_0..c_d; R = c_0 + 2 Re sum c_k e^(ik theta).
    let mut acc = coeffs_half[0].re;
    let w = Complex64::from_polar(1.0, theta);
    let mut wk = one();
    for ck in coeffs_half.iter().skip(1) {
        wk *= w;
        acc += 2.0 * (ck * wk).re;
    }
    acc
}

fn laurent_deriv(coeffs_half: &[Complex64], theta: f64) -> f64 {
    let w = Complex64::from_polar(1.0, theta);
    let mut wk = one();
    let mut acc = 0.0;
    for (k, ck) in coeffs_half.iter().enumerate().skip(1) {
        wk *= w;
        acc += -2.0 * k as f64 * (ck * wk).im;
    }
    acc
}

struct Factorization {
    outer: ComplexPoly,
    boundary: Vec<(Complex64, usize)>, // (zeta, half multiplicity)
}

/// Core of the Fejer-Riesz factorization. Boundary zeros of the density are
/// located by bisection on the derivative of the trig polynomial and deflated
/// before root classification, which keeps double roots on the circle from
/// splitting across the boundary band.
fn fejer_riesz_impl(laurent: &[Complex64]) -> Result<Factorization> {
    if laurent.is_empty() || laurent.len() % 2 == 0 {
        return Err(Error::InvalidInput(
            "Laurent coefficients must have odd length c_-d..c_d".into(),
        ));
    }
    let d = laurent.len() / 2;
    let scale = laurent.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::InvalidInput("zero trigonometric polynomial".into()));
    }
    for k in 0..=d {
        let diff = (laurent[d - k] - laurent[d + k].conj()).norm();
        if diff > 1e-10 * scale {
            return Err(Error::NotHermitian(format!(
                "c_-{k} vs conj(c_{k}) differ by {diff}"
            )));
        }
    }

    // Effective degree after trimming negligible top coefficients.
    let mut d_eff = d;
    while d_eff > 0 && laurent[d + d_eff].norm() <= 1e-14 * scale {
        d_eff -= 1;
    }
    let half: Vec<Complex64> = (0..=d_eff).map(|k| laurent[d + k]).collect();

    // Nonnegativity on the grid.
    let grid = tol::BOUNDARY_GRID.max(64 * d_eff.max(1));
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut min_val = f64::INFINITY;
    let mut max_val: f64 = 0.0;
    let values: Vec<f64> = (0..grid)
        .map(|i| laurent_eval(&half, two_pi * i as f64 / grid as f64))
        .collect();
    for &v in &values {
        min_val = min_val.min(v);
        max_val = max_val.max(v.abs());
    }
    if min_val < -tol::FR_NEGATIVITY_TOL * max_val.max(1.0) {
        return Err(Error::NegativeDensity { min: min_val });
    }

    if d_eff == 0 {
        return Ok(Factorization {
            outer: ComplexPoly::constant(Complex64::new(half[0].re.max(0.0).sqrt(), 0.0)),
            boundary: Vec::new(),
        });
    }

    // Locate boundary zeros: grid minima that dip low, refined by bisection
    // on R' and confirmed at the refined point.
    let mut boundary: Vec<(f64, usize)> = Vec::new(); // (theta, full multiplicity 2m)
    let detect = 1e-4 * max_val.max(1e-300);
    let confirm = 1e-10 * max_val.max(1e-300);
    let h = two_pi / grid as f64;
    let mut candidates: Vec<f64> = Vec::new();
    for i in 0..grid {
        let prev = values[(i + grid - 1) % grid];
        let next = values[(i + 1) % grid];
        if values[i] <= prev && values[i] <= next && values[i] < detect {
            // Bisect R' on the bracketing interval.
            let mut lo = two_pi * i as f64 / grid as f64 - h;
            let mut hi = lo + 2.0 * h;
            let mut flo = laurent_deriv(&half, lo);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let fm = laurent_deriv(&half, mid);
                if (fm > 0.0) == (flo > 0.0) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
                if hi - lo < 1e-15 {
                    break;
                }
            }
            let theta = 0.5 * (lo + hi);
            if laurent_eval(&half, theta) <= confirm {
                candidates.push(theta);
            }
        }
    }
    candidates.sort_by(|a, b| a.partial_cmp(b).unwrap());
    candidates.dedup_by(|a, b| (*a - *b).abs() < 1e-9);

    // Multiplicity from the local growth exponent.
    let min_sep = candidates
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(two_pi, f64::min);
    let delta = (min_sep / 8.0).min(2e-2).max(1e-5);
    for &theta in &candidates {
        let probe = |s: f64| laurent_eval(&half, theta + s).abs().max(1e-300);
        let slope_right = (probe(2.0 * delta) / probe(delta)).ln() / 2f64.ln();
        let slope_left = (probe(-2.0 * delta) / probe(-delta)).ln() / 2f64.ln();
        let slope = 0.5 * (slope_right + slope_left);
        let mult = slope.round();
        if (slope - mult).abs() > 0.4 || mult < 1.0 {
            return Err(Error::InvalidInput(format!(
                "could not resolve boundary zero multiplicity at angle {theta} (exponent {slope})"
            )));
        }
        let mult = mult as usize;
        if mult % 2 == 1 {
            return Err(Error::OddBoundaryMultiplicity {
                multiplicity: mult,
                location: format!("angle {theta}"),
            });
        }
        boundary.push((theta, mult));
    }
    let boundary_total: usize = boundary.iter().map(|(_, m)| m).sum();
    if boundary_total > 2 * d_eff {
        return Err(Error::InvalidInput(
            "boundary multiplicities exceed the degree".into(),
        ));
    }

    // Deflate P(z) = sum c_k z^(k+d) by the boundary factors and classify
    // the remaining roots.
    let mut p_coeffs = vec![Complex64::default(); 2 * d_eff + 1];
    for k in 0..=2 * d_eff {
        p_coeffs[k] = laurent[d + k - d_eff];
    }
    let mut p = ComplexPoly::from_coeffs(p_coeffs);
    let boundary_pts: Vec<(Complex64, usize)> = boundary
        .iter()
        .map(|&(theta, m)| (Complex64::from_polar(1.0, theta), m / 2))
        .collect();
    for &(zeta, m_half) in &boundary_pts {
        for _ in 0..2 * m_half {
            let (q, _rem) = p.divide_linear(zeta);
            p = q;
        }
    }

    let mut interior = 0usize;
    let mut exterior: Vec<Complex64> = Vec::new();
    if p.degree().unwrap_or(0) >= 1 {
        for r in aberth_roots(&p)? {
            let m = r.norm();
            if m < 1.0 - tol::BOUNDARY_ROOT_TOL {
                interior += 1;
            } else if m > 1.0 + tol::BOUNDARY_ROOT_TOL {
                exterior.push(r);
            } else {
                return Err(Error::InvalidInput(format!(
                    "unresolved near-boundary root of modulus {m}"
                )));
            }
        }
    }
    if interior != exterior.len() {
        return Err(Error::InvalidInput(format!(
            "root reflection mismatch: {interior} interior vs {} exterior",
            exterior.len()
        )));
    }

    // Assemble s up to the positive constant.
    let mut s = ComplexPoly::one();
    for &(zeta, m_half) in &boundary_pts {
        for _ in 0..m_half {
            s = s.mul(&ComplexPoly::from_coeffs(vec![-zeta, one()]));
        }
    }
    for &r in &exterior {
        s = s.mul(&ComplexPoly::from_coeffs(vec![-r, one()]));
    }

    // |gamma|^2 from the ratio of grid sums, exact for a true factorization.
    let mut num_sum = 0.0;
    let mut den_sum = 0.0;
    for i in 0..grid {
        let theta = two_pi * i as f64 / grid as f64;
        num_sum += values[i].max(0.0);
        den_sum += s.eval(Complex64::from_polar(1.0, theta)).norm_sqr();
    }
    if den_sum == 0.0 {
        return Err(Error::InvalidInput("degenerate factor".into()));
    }
    let gamma = (num_sum / den_sum).sqrt();
    s = s.scale(Complex64::new(gamma, 0.0));

    // Fix the unimodular phase: leading coefficient real and positive.
    let lead = *s.coeffs().last().unwrap();
    s = s.scale(lead.conj() / lead.norm());

    // Validate against the density (sup-relative).
    let mut max_err: f64 = 0.0;
    for i in 0..grid {
        let theta = two_pi * i as f64 / grid as f64;
        let v = s.eval(Complex64::from_polar(1.0, theta)).norm_sqr();
        max_err = max_err.max((v - values[i]).abs());
    }
    if max_err > tol::FR_MATCH_TOL * max_val.max(1e-300) {
        return Err(Error::FactorizationResidual {
            residual: max_err / max_val.max(1e-300),
        });
    }

    Ok(Factorization {
        outer: s,
        boundary: boundary_pts,
    })
}

/// Fejer-Riesz spectral factor: given Laurent coefficients `c_-d..c_d` of a
/// nonnegative trigonometric polynomial `R`, returns the outer polynomial `s`
/// of degree `d` with `|s|^2 = R` on the circle, no roots inside the disk,
/// boundary roots at half their (even) multiplicity, and real positive
/// leading coefficient.
pub fn fejer_riesz(laurent: &[Complex64]) -> Result<ComplexPoly> {
    Ok(fejer_riesz_impl(laurent)?.outer)
}

/// Pythagorean mate: the outer rational `a` with `|a|^2 + |b|^2 = 1` on the
/// circle and `a(0) > 0`, together with the boundary zero set of `a`.
pub fn pythagorean_mate(b: &RationalFn) -> Result<RationalPair> {
    let sup = b.sup_boundary(tol::BOUNDARY_GRID);
    if (sup - 1.0).abs() > tol::SUP_NORM_TOL {
        return Err(Error::SupNormNotOne { sup });
    }

    // Laurent coefficients of |q|^2 - |p|^2 on the circle.
    let acq = b.den().boundary_autocorrelation();
    let acp = b.num().boundary_autocorrelation();
    let d = acq.len().max(acp.len()) - 1;
    let get = |v: &[Complex64], k: usize| v.get(k).copied().unwrap_or_default();
    let half: Vec<Complex64> = (0..=d).map(|k| get(&acq, k) - get(&acp, k)).collect();
    let scale = acq.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if half.iter().all(|c| c.norm() <= 1e-12 * scale.max(1e-300)) {
        return Err(Error::InnerFunction);
    }
    let mut laurent = vec![Complex64::default(); 2 * d + 1];
    for k in 0..=d {
        laurent[d + k] = half[k];
        laurent[d - k] = half[k].conj();
    }

    let fact = fejer_riesz_impl(&laurent)?;
    if fact.boundary.is_empty() {
        return Err(Error::InvalidInput(
            "b does not attain modulus 1 on the circle (no boundary zeros of the mate)".into(),
        ));
    }

    // Phase: a(0) > 0.
    let mut s = fact.outer;
    let a00 = s.eval(Complex64::default()) / b.den().eval(Complex64::default());
    if a00.norm() == 0.0 {
        return Err(Error::PairInvariant("mate vanishes at the origin".into()));
    }
    s = s.scale(a00.conj() / a00.norm());
    let a = RationalFn::new_unchecked(s, b.den().clone());

    let zeros = BoundaryZeroSet::new(
        fact.boundary
            .into_iter()
            .map(|(z, m)| Ok((UnitCirclePoint::new(z)?, m)))
            .collect::<Result<Vec<_>>>()?,
    )?;
    RationalPair::new(b.clone(), a, zeros)
}

/// Residual report of the defining identity plus outerness and phase checks.
#[derive(Clone, Debug)]
pub struct PairReport {
    pub grid_size: usize,
    pub tolerance: f64,
    pub max_residual: f64,
    /// Smallest modulus among the zeros of `num(a)`, if any.
    pub min_zero_modulus: Option<f64>,
    pub a0_positive: bool,
    pub sup_a: f64,
    pub identity_ok: bool,
    pub outer_ok: bool,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.identity_ok && self.outer_ok && self.a0_positive
    }
}

pub fn verify_pair(pair: &RationalPair, grid_size: usize, tolerance: f64) -> Result<PairReport> {
    if grid_size < 16 {
        return Err(Error::InvalidInput("grid size must be at least 16".into()));
    }
    let mut max_residual: f64 = 0.0;
    for i in 0..grid_size {
        let theta = 2.0 * std::f64::consts::PI * i as f64 / grid_size as f64;
        let z = Complex64::from_polar(1.0, theta);
        let v = pair.a().eval(z).norm_sqr() + pair.b().eval(z).norm_sqr();
        max_residual = max_residual.max((v - 1.0).abs());
    }
    let min_zero_modulus = if pair.a().num().degree().unwrap_or(0) >= 1 {
        let roots = aberth_roots(pair.a().num())?;
        roots.iter().map(|r| r.norm()).min_by(|x, y| x.partial_cmp(y).unwrap())
    } else {
        None
    };
    let outer_ok = min_zero_modulus
        .map(|m| m >= 1.0 - tol::POLE_OUTSIDE_MARGIN - tol::BOUNDARY_ROOT_TOL)
        .unwrap_or(true);
    let a0 = pair.a().eval(Complex64::default());
    Ok(PairReport {
        grid_size,
        tolerance,
        max_residual,
        min_zero_modulus,
        a0_positive: a0.re > 0.0 && a0.im.abs() <= 1e-10 * a0.re.max(1e-300),
        sup_a: pair.a().sup_boundary(grid_size),
        identity_ok: max_residual <= tolerance,
        outer_ok,
    })
}

/// Radial-angular grid for interior sampling.
#[derive(Clone, Copy, Debug)]
pub struct DiskGridSpec {
    pub radial: usize,
    pub angular: usize,
    pub max_radius: f64,
}

impl Default for DiskGridSpec {
    fn default() -> Self {
        DiskGridSpec {
            radial: 64,
            angular: 64,
            max_radius: 1.0 - 1e-4,
        }
    }
}

/// `min |a|^2 + |b|^2` over the sampled disk; for rational pairs this stays
/// bounded away from 0 (the corona property).
pub fn corona_lower_bound(pair: &RationalPair, grid: &DiskGridSpec) -> f64 {
    let mut min_val = f64::INFINITY;
    for i in 0..grid.radial {
        let r = grid.max_radius * i as f64 / (grid.radial.saturating_sub(1).max(1)) as f64;
        for j in 0..grid.angular {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / grid.angular as f64;
            let z = Complex64::from_polar(r, theta);
            let v = pair.a().eval(z).norm_sqr() + pair.b().eval(z).norm_sqr();
            min_val = min_val.min(v);
        }
    }
    min_val
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// b(z) = (1+z)/2.
    fn b_half_plus() -> RationalFn {
        RationalFn::from_poly(ComplexPoly::from_real_coeffs(&[0.5, 0.5]))
    }

    /// b(z) = (1-z)^2/4, the worked mate example.
    fn b_square() -> RationalFn {
        RationalFn::from_poly(ComplexPoly::from_real_coeffs(&[0.25, -0.5, 0.25]))
    }

    #[test]
    fn rational_validation() {
        // Pole at 0.5 inside the disk: rejected.
        let den = ComplexPoly::from_real_coeffs(&[1.0, -2.0]); // 1 - 2z, root 0.5
        assert!(RationalFn::new(ComplexPoly::one(), den).is_err());
        // Pole at 2: fine.
        let den = ComplexPoly::from_real_coeffs(&[1.0, -0.5]);
        let f = RationalFn::new(ComplexPoly::one(), den).unwrap();
        assert_relative_eq!(f.eval(c(0.0, 0.0)).re, 1.0);
    }

    #[test]
    fn series_coeffs_of_szego_kernel() {
        // 1/(1 - 0.5 z): coefficients 0.5^k.
        let f = RationalFn::new(
            ComplexPoly::one(),
            ComplexPoly::from_real_coeffs(&[1.0, -0.5]),
        )
        .unwrap();
        let (coeffs, tail) = f.series_with_tail(1e-13).unwrap();
        for (k, ck) in coeffs.iter().enumerate().take(30) {
            assert_relative_eq!(ck.re, 0.5f64.powi(k as i32), epsilon = 1e-12);
        }
        assert!(tail < 1e-10);
    }

    #[test]
    fn taylor_at_matches_derivatives() {
        let f = RationalFn::new(
            ComplexPoly::from_real_coeffs(&[1.0, 2.0]),
            ComplexPoly::from_real_coeffs(&[1.0, -0.25]),
        )
        .unwrap();
        let z0 = c(1.0, 0.0);
        let jets = f.taylor_at(z0, 2).unwrap();
        assert_relative_eq!(jets[0].re, f.eval(z0).re, epsilon = 1e-12);
        let h = 1e-6;
        let fd = (f.eval(z0 + c(h, 0.0)) - f.eval(z0 - c(h, 0.0))) / (2.0 * h);
        assert!((jets[1] - fd).norm() < 1e-7);
    }

    #[test]
    fn fejer_riesz_constant() {
        let s = fejer_riesz(&[c(1.0, 0.0)]).unwrap();
        assert_eq!(s.degree(), Some(0));
        assert_relative_eq!(s.coeff(0).re, 1.0);
    }

    #[test]
    fn fejer_riesz_boundary_double_root() {
        // R = 2 - 2 cos(theta) = |z - 1|^2: s = z - 1 up to phase;
        // the convention fixes the leading coefficient positive.
        let s = fejer_riesz(&[c(-1.0, 0.0), c(2.0, 0.0), c(-1.0, 0.0)]).unwrap();
        assert_eq!(s.degree(), Some(1));
        assert_relative_eq!(s.coeff(1).re, 1.0, epsilon = 1e-7);
        assert_relative_eq!(s.coeff(0).re, -1.0, epsilon = 1e-7);
    }

    #[test]
    fn fejer_riesz_reflected_root() {
        // R = (3 - cos theta)/2: interior root 3 - 2 sqrt(2) reflected to
        // 3 + 2 sqrt(2); |gamma| = 1/(2 sqrt(3 + 2 sqrt 2)), confirmed by the
        // grid identity below.
        let s = fejer_riesz(&[c(-0.25, 0.0), c(1.5, 0.0), c(-0.25, 0.0)]).unwrap();
        assert_eq!(s.degree(), Some(1));
        let root = -s.coeff(0) / s.coeff(1);
        let s2 = std::f64::consts::SQRT_2;
        assert_relative_eq!(root.re, 3.0 + 2.0 * s2, epsilon = 1e-9);
        assert!(root.im.abs() < 1e-9);
        let gamma = s.coeff(1).norm();
        assert_relative_eq!(gamma, 0.5 / (3.0 + 2.0 * s2).sqrt(), epsilon = 1e-9);
        for i in 0..256 {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / 256.0;
            let r = (3.0 - theta.cos()) / 2.0;
            let v = s.eval(Complex64::from_polar(1.0, theta)).norm_sqr();
            assert_relative_eq!(v, r, max_relative = 1e-9);
        }
    }

    #[test]
    fn fejer_riesz_rejects_negative() {
        // R = cos(theta) dips negative.
        let err = fejer_riesz(&[c(0.5, 0.0), c(0.0, 0.0), c(0.5, 0.0)]);
        assert!(matches!(err, Err(Error::NegativeDensity { .. })));
    }

    #[test]
    fn fejer_riesz_quadruple_boundary_root() {
        // R = |z - 1|^4 = (2 - 2cos)^2 = 6 - 8cos + 2cos(2theta):
        // c_0 = 6, c_1 = -4, c_2 = 1. s = (z-1)^2.
        let s = fejer_riesz(&[c(1.0, 0.0), c(-4.0, 0.0), c(6.0, 0.0), c(-4.0, 0.0), c(1.0, 0.0)])
            .unwrap();
        assert_eq!(s.degree(), Some(2));
        for i in 0..128 {
            let theta = 2.0 * std::f64::consts::PI * i as f64 / 128.0;
            let z = Complex64::from_polar(1.0, theta);
            let r = (2.0 - 2.0 * theta.cos()).powi(2);
            assert_relative_eq!(s.eval(z).norm_sqr(), r, epsilon = 1e-7 * 16.0);
        }
    }

    #[test]
    fn mate_of_half_plus() {
        // b = (1+z)/2 -> a = (1-z)/2, zero set {(1, 1)}.
        let pair = pythagorean_mate(&b_half_plus()).unwrap();
        let a = pair.a();
        assert_relative_eq!(a.eval(c(0.0, 0.0)).re, 0.5, epsilon = 1e-10);
        assert_relative_eq!(a.eval(c(1.0, 0.0)).norm(), 0.0, epsilon = 1e-9);
        assert_eq!(pair.n_total(), 1);
        assert_eq!(pair.m_max(), 1);
        let z0 = pair.zeros().zeros()[0].0.value();
        assert_relative_eq!(z0.re, 1.0, epsilon = 1e-10);
        assert!(z0.im.abs() < 1e-10);
    }

    #[test]
    fn mate_of_paper_example() {
        // b = (1-z)^2/4 -> a = c (1+z)(z - (3 + 2 sqrt 2)) with
        // c = -1/(4 + 4 sqrt 2); zero set {(-1, 1)}.
        let pair = pythagorean_mate(&b_square()).unwrap();
        let a = pair.a();
        let s2 = std::f64::consts::SQRT_2;
        let mut roots: Vec<Complex64> =
            aberth_roots(a.num()).unwrap().into_iter().collect();
        roots.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap());
        assert_eq!(roots.len(), 2);
        assert!((roots[0] - c(-1.0, 0.0)).norm() < 1e-7);
        assert!((roots[1] - c(3.0 + 2.0 * s2, 0.0)).norm() < 1e-7);
        // Leading coefficient is the constant from the worked example, with
        // the sign fixed by a(0) > 0.
        let lead = a.num().coeff(2);
        assert_relative_eq!(lead.re, -1.0 / (4.0 + 4.0 * s2), epsilon = 1e-9);
        assert!(lead.im.abs() < 1e-9);
        assert_eq!(pair.n_total(), 1);
        let rep = verify_pair(&pair, 4096, 1e-9).unwrap();
        assert!(rep.max_residual < 1e-10, "residual {}", rep.max_residual);
        assert!(rep.passed());
    }

    #[test]
    fn mate_rejects_degenerate() {
        let zero = RationalFn::from_poly(ComplexPoly::zero());
        assert!(matches!(
            pythagorean_mate(&zero),
            Err(Error::SupNormNotOne { .. })
        ));
        // Inner function b(z) = z.
        let inner = RationalFn::from_poly(ComplexPoly::monomial(1));
        assert!(matches!(pythagorean_mate(&inner), Err(Error::InnerFunction)));
    }

    #[test]
    fn mate_determinism() {
        let p1 = pythagorean_mate(&b_square()).unwrap();
        let p2 = pythagorean_mate(&b_square()).unwrap();
        assert_eq!(p1.a().num().coeffs(), p2.a().num().coeffs());
    }

    #[test]
    fn verify_pair_flags_perturbation() {
        let pair = pythagorean_mate(&b_half_plus()).unwrap();
        let rep = verify_pair(&pair, 4096, 1e-9).unwrap();
        assert!(rep.identity_ok);
        // Perturb a by 1e-3: residual at the 1e-3 scale, fails at 1e-9.
        let a_pert = RationalFn::from_poly(
            pair.a()
                .num()
                .add(&ComplexPoly::constant(c(1e-3, 0.0))),
        );
        let bad = RationalPair {
            b: pair.b().clone(),
            a: a_pert,
            zeros: pair.zeros().clone(),
        };
        let rep = verify_pair(&bad, 4096, 1e-9).unwrap();
        assert!(!rep.identity_ok);
        assert!(rep.max_residual > 1e-4);
    }

    #[test]
    fn explicit_pair_residual_is_machine_zero() {
        // (a, b) = ((1-z)/2, (1+z)/2): |1-z|^2 + |1+z|^2 = 4 exactly on T.
        let a = RationalFn::from_poly(ComplexPoly::from_real_coeffs(&[0.5, -0.5]));
        let b = b_half_plus();
        let zeros = BoundaryZeroSet::new(vec![(
            UnitCirclePoint::new(c(1.0, 0.0)).unwrap(),
            1,
        )])
        .unwrap();
        let pair = RationalPair::new(b, a, zeros).unwrap();
        let rep = verify_pair(&pair, 4096, 1e-9).unwrap();
        assert!(rep.max_residual < 1e-14);
    }

    #[test]
    fn corona_bound_values() {
        let a = RationalFn::from_poly(ComplexPoly::from_real_coeffs(&[0.5, -0.5]));
        let b = b_half_plus();
        let zeros =
            BoundaryZeroSet::new(vec![(UnitCirclePoint::new(c(1.0, 0.0)).unwrap(), 1)]).unwrap();
        let pair = RationalPair::new(b, a, zeros).unwrap();
        // |1-z|^2 + |1+z|^2 = 2 + 2|z|^2: minimum 1/2 at z = 0.
        let v = corona_lower_bound(&pair, &DiskGridSpec::default());
        assert_relative_eq!(v, 0.5, epsilon = 1e-6);

        // Paper pair: strictly positive and stable under grid refinement.
        let pair = pythagorean_mate(&b_square()).unwrap();
        let v64 = corona_lower_bound(
            &pair,
            &DiskGridSpec { radial: 64, angular: 64, max_radius: 1.0 - 1e-4 },
        );
        let v128 = corona_lower_bound(
            &pair,
            &DiskGridSpec { radial: 128, angular: 128, max_radius: 1.0 - 1e-4 },
        );
        assert!(v64 > 0.0);
        assert!((v64 - v128).abs() / v64 < 0.05);
    }

    #[test]
    fn boundary_zero_set_validation() {
        let z1 = UnitCirclePoint::new(c(1.0, 0.0)).unwrap();
        let close = UnitCirclePoint::from_angle(1e-12);
        assert!(BoundaryZeroSet::new(vec![(z1, 1), (close, 1)]).is_err());
        assert!(BoundaryZeroSet::new(vec![]).is_err());
    }
}
