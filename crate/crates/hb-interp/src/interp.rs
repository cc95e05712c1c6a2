//! The decision procedure for interpolating sequences (Carleson constant plus
//! the boundary sum condition) and the constructive multiplier interpolant.

use num_complex::Complex64;

use crate::disk::{blaschke_eval, rho, BlaschkeProduct, DiskSequence, Provenance, UnitDiskPoint};
use crate::error::{Error, Result};
use crate::pick::{np_solve, SchurChain};
use crate::poly::{poly_roots, ComplexPoly};
use crate::quad::compensated_sum;
use crate::random::{
    classify_power_exponent, classify_radii_power_sum, AngleLaw, RadiiKind, SequenceFamily,
    SeriesClass,
};
use crate::rational::{BoundaryZeroSet, RationalFn, RationalPair};
use crate::space::{decompose, AnalyticSeries, HbDecomposition};
use crate::tol;

/// Carleson condition diagnostics for a finite sequence.
#[derive(Clone, Debug)]
pub struct CarlesonReport {
    /// `inf_n prod_(k != n) rho(lambda_n, lambda_k)`; 1 for singletons.
    pub delta: f64,
    /// `inf` over pairs of the pseudohyperbolic distance.
    pub separation: f64,
    /// Index attaining `delta`.
    pub argmin_index: usize,
}

pub fn carleson_delta(seq: &DiskSequence) -> Result<CarlesonReport> {
    let n = seq.len();
    if n == 0 {
        return Err(Error::EmptyInput("carleson of empty sequence".into()));
    }
    let pts = seq.points();
    let mut separation = 1.0f64;
    for i in 0..n {
        for j in i + 1..n {
            let r = rho(&pts[i], &pts[j]);
            if r <= tol::SEPARATION_MIN_RHO {
                return Err(Error::DuplicatePoints { i, j });
            }
            separation = separation.min(r);
        }
    }
    let mut delta = 1.0f64;
    let mut argmin_index = 0usize;
    for i in 0..n {
        let mut prod = 1.0f64;
        for (j, pj) in pts.iter().enumerate() {
            if j != i {
                prod *= rho(&pts[i], pj);
            }
        }
        if prod < delta {
            delta = prod;
            argmin_index = i;
        }
    }
    Ok(CarlesonReport {
        delta,
        separation,
        argmin_index,
    })
}

/// Partial sums of `sum_n (1-|lambda_n|^2)/|zeta_j - lambda_n|^(2 m_j)` per
/// boundary zero, at doubling truncations.
#[derive(Clone, Debug)]
pub struct ZeroSumDiagnostics {
    pub zeta: Complex64,
    pub multiplicity: usize,
    pub truncations: Vec<usize>,
    pub partial_sums: Vec<f64>,
    /// Closed-form class when the sequence came from a parametric family.
    pub classification: Option<SeriesClass>,
}

#[derive(Clone, Debug)]
pub struct SumConditionReport {
    pub per_zero: Vec<ZeroSumDiagnostics>,
}

/// Closed-form class of the sum at one boundary zero for a family-generated
/// sequence.
fn classify_zero_sum(family: &SequenceFamily, zeta: Complex64, m: usize) -> SeriesClass {
    match &family.angles {
        AngleLaw::Steinhaus { .. } => {
            classify_radii_power_sum(&family.radii, 1.0 / (2.0 * m as f64))
        }
        AngleLaw::Fixed(values) => {
            let rays: Vec<f64> = if values.is_empty() {
                vec![0.0]
            } else {
                values.clone()
            };
            let hits = rays
                .iter()
                .any(|&t| (Complex64::from_polar(1.0, t) - zeta).norm() < 1e-9);
            match family.radii.kind() {
                RadiiKind::Power { beta, .. } => {
                    if hits {
                        SeriesClass::Divergent
                    } else {
                        // Away from the accumulation rays the terms reduce to
                        // the Blaschke sum, with terms ~ n^(-beta).
                        classify_power_exponent(*beta)
                    }
                }
                RadiiKind::Geometric { .. } => {
                    if hits {
                        SeriesClass::Divergent
                    } else {
                        SeriesClass::Convergent
                    }
                }
                RadiiKind::Explicit(_) => SeriesClass::Indeterminate,
            }
        }
    }
}

/// Almost-sure (or deterministic) Carleson class for a family.
fn classify_family_carleson(family: &SequenceFamily) -> SeriesClass {
    match (family.radii.kind(), &family.angles) {
        (RadiiKind::Explicit(_), _) => SeriesClass::Indeterminate,
        // Geometric radii: separated on rays, and with random angles the
        // annulus counts are bounded, so sum N_k^2 2^-k converges.
        (RadiiKind::Geometric { .. }, _) => SeriesClass::Convergent,
        (RadiiKind::Power { beta, .. }, AngleLaw::Steinhaus { .. }) => {
            // N_k ~ 2^(k/beta): sum N_k^2 2^-k is geometric with ratio
            // 2^(2/beta - 1).
            if (beta - 2.0).abs() <= 1e-12 {
                SeriesClass::DivergentBoundary
            } else if *beta > 2.0 {
                SeriesClass::Convergent
            } else {
                SeriesClass::Divergent
            }
        }
        // Power radii on finitely many fixed rays: consecutive points on a
        // ray are not pseudohyperbolically separated.
        (RadiiKind::Power { .. }, AngleLaw::Fixed(_)) => SeriesClass::Divergent,
    }
}

pub fn sum_condition(seq: &DiskSequence, zeros: &BoundaryZeroSet) -> SumConditionReport {
    let family = match seq.provenance() {
        Provenance::Family(f) => Some(f),
        Provenance::Explicit => None,
    };
    let per_zero = zeros
        .zeros()
        .iter()
        .map(|(zeta, m)| {
            let zv = zeta.value();
            let terms: Vec<f64> = seq
                .points()
                .iter()
                .map(|p| {
                    let l = p.value();
                    (1.0 - l.norm_sqr()) / (zv - l).norm().powi(2 * *m as i32)
                })
                .collect();
            let mut truncations = Vec::new();
            let mut t = 2usize;
            while t < terms.len() {
                truncations.push(t);
                t *= 2;
            }
            truncations.push(terms.len());
            let partial_sums = truncations
                .iter()
                .map(|&k| compensated_sum(terms[..k].iter().copied()))
                .collect();
            ZeroSumDiagnostics {
                zeta: zv,
                multiplicity: *m,
                truncations,
                partial_sums,
                classification: family.map(|f| classify_zero_sum(f, zv, *m)),
            }
        })
        .collect();
    SumConditionReport { per_zero }
}

/// Decision outcome. Finite explicit sequences are always interpolating;
/// the verdict concerns the limit behavior of parametric families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    InterpolatingFinite,
    Interpolating,
    NotInterpolating,
    Indeterminate,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::InterpolatingFinite => "interpolating (finite)",
            Verdict::Interpolating => "interpolating",
            Verdict::NotInterpolating => "not interpolating",
            Verdict::Indeterminate => "indeterminate at truncation",
        }
    }
}

#[derive(Clone, Debug)]
pub struct DecisionReport {
    pub carleson: CarlesonReport,
    pub sums: SumConditionReport,
    pub verdict: Verdict,
    pub reason: String,
}

/// Bundle the Carleson diagnostics with the boundary sums and, for
/// family-generated sequences, the closed-form verdict.
pub fn decide(pair: &RationalPair, seq: &DiskSequence) -> Result<DecisionReport> {
    let carleson = carleson_delta(seq)?;
    let sums = sum_condition(seq, pair.zeros());
    let (verdict, reason) = match seq.provenance() {
        Provenance::Explicit => (
            Verdict::InterpolatingFinite,
            "finite explicit sequences are interpolating; no family to classify".to_string(),
        ),
        Provenance::Family(f) => {
            let carleson_class = classify_family_carleson(f);
            let zero_classes: Vec<(Complex64, SeriesClass)> = sums
                .per_zero
                .iter()
                .map(|z| (z.zeta, z.classification.unwrap_or(SeriesClass::Indeterminate)))
                .collect();
            let diverges = |c: SeriesClass| {
                matches!(c, SeriesClass::Divergent | SeriesClass::DivergentBoundary)
            };
            if diverges(carleson_class) {
                (
                    Verdict::NotInterpolating,
                    format!(
                        "Carleson condition fails in the limit ({})",
                        carleson_class.label()
                    ),
                )
            } else if let Some((z, c)) = zero_classes.iter().find(|(_, c)| diverges(*c)) {
                (
                    Verdict::NotInterpolating,
                    format!(
                        "boundary sum at {:.6}{:+.6}i is {}",
                        z.re,
                        z.im,
                        c.label()
                    ),
                )
            } else if carleson_class == SeriesClass::Convergent
                && zero_classes.iter().all(|(_, c)| *c == SeriesClass::Convergent)
            {
                (
                    Verdict::Interpolating,
                    "Carleson condition and all boundary sums convergent".to_string(),
                )
            } else {
                (
                    Verdict::Indeterminate,
                    "no closed-form classification for this family".to_string(),
                )
            }
        }
    };
    Ok(DecisionReport {
        carleson,
        sums,
        verdict,
        reason,
    })
}

/// Constructed multiplier interpolant with its certificates.
#[derive(Clone, Debug)]
pub struct InterpolantCertificate {
    pub f: RationalFn,
    pub boundary_sup: f64,
    pub value_residuals: Vec<f64>,
    pub decomposition: HbDecomposition,
}

/// Stable evaluator for the assembled interpolant: products of unimodular
/// factors, Schur chains, and low-degree polynomials, never the expanded
/// numerator.
struct Assembly<'a> {
    pair: &'a RationalPair,
    b_full: BlaschkeProduct,
    b_lambda1: BlaschkeProduct,
    p_n: ComplexPoly,
    f1: SchurChain,
    h1: SchurChain,
    corrections: Vec<(Complex64, BlaschkeProduct)>,
}

impl Assembly<'_> {
    fn eval(&self, z: Complex64) -> Result<Complex64> {
        let b1 = blaschke_eval(&self.b_lambda1, z)?;
        let b = blaschke_eval(&self.b_full, z)?;
        let base = b1 * (b - self.p_n.eval(z)) * self.f1.eval(z)
            + self.pair.a().eval(z) * self.h1.eval(z);
        let mut acc = base;
        for (coeff, bs) in &self.corrections {
            acc += *coeff * self.pair.a().eval(z) * blaschke_eval(bs, z)?;
        }
        Ok(acc)
    }
}

/// Execute the constructive proof at finite scale: decompose the Blaschke
/// product over the sequence, split the sequence around the boundary zeros
/// of its polynomial part, solve the two bounded interpolation problems, and
/// assemble `F = B_(Lambda_1) f + h` (plus one-point corrections for points
/// sitting on zeros of `p_N`).
pub fn construct_multiplier(
    pair: &RationalPair,
    seq: &DiskSequence,
    values: &[Complex64],
) -> Result<InterpolantCertificate> {
    let n = seq.len();
    if n == 0 {
        return Err(Error::EmptyInput("empty interpolation sequence".into()));
    }
    if values.len() != n {
        return Err(Error::SizeMismatch(format!(
            "{} points vs {} values",
            n,
            values.len()
        )));
    }
    for v in values {
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::NonFinite("target values".into()));
        }
    }

    // Decompose B over the full sequence: B = a0 g + p_N.
    let b_full = BlaschkeProduct::new(seq.clone());
    let b_series = AnalyticSeries::from_blaschke(&b_full)?;
    let b_decomp = decompose(&b_series, pair)?;
    let p_n = b_decomp.p.clone();
    for (zeta, _) in pair.zeros().zeros() {
        let v = p_n.eval(zeta.value()).norm();
        if (v - 1.0).abs() > tol::PN_UNIMODULAR_TOL {
            return Err(Error::PnNotUnimodular {
                location: format!("{}", zeta.value()),
                value: v,
            });
        }
    }

    // Zeros of p_N: boundary ones drive the splitting radius; points of the
    // sequence sitting on any zero are deferred to the add-a-point step.
    let pn_roots: Vec<Complex64> = if p_n.degree().unwrap_or(0) >= 1 {
        poly_roots(&p_n)?.into_iter().map(|(z, _)| z).collect()
    } else {
        Vec::new()
    };
    let eta: Vec<Complex64> = pn_roots
        .iter()
        .copied()
        .filter(|r| (r.norm() - 1.0).abs() <= tol::BOUNDARY_ROOT_TOL)
        .collect();
    let delta = eta
        .iter()
        .flat_map(|e| {
            pair.zeros()
                .zeros()
                .iter()
                .map(move |(z, _)| (e - z.value()).norm())
        })
        .fold(f64::INFINITY, f64::min);

    let pts = seq.points();
    let mut idx0 = Vec::new(); // on zeros of p_N
    let mut idx1 = Vec::new(); // within delta/2 of a boundary zero of p_N
    let mut idx2 = Vec::new(); // the rest
    for (i, p) in pts.iter().enumerate() {
        let z = p.value();
        if pn_roots.iter().any(|r| (z - r).norm() <= tol::BOUNDARY_ROOT_TOL) {
            idx0.push(i);
        } else if eta.iter().any(|e| (z - e).norm() <= delta / 2.0) {
            idx1.push(i);
        } else {
            idx2.push(i);
        }
    }

    // Lambda_1 problem: h = a h_1 with h_1(lambda) = v/a(lambda).
    let seq1 = DiskSequence::new(idx1.iter().map(|&i| pts[i]).collect());
    let targets1: Vec<Complex64> = idx1
        .iter()
        .map(|&i| values[i] / pair.a().eval(pts[i].value()))
        .collect();
    let sol1 = np_solve(&seq1, &targets1)?;
    let b_lambda1 = BlaschkeProduct::new(seq1.clone());

    // Lambda_2 problem: u_n = -(v_n - h(l_n)) / (B_(Lambda_1)(l_n) p_N(l_n)).
    let seq2 = DiskSequence::new(idx2.iter().map(|&i| pts[i]).collect());
    let mut targets2 = Vec::with_capacity(idx2.len());
    for &i in &idx2 {
        let z = pts[i].value();
        let h_val = pair.a().eval(z) * sol1.chain.eval(z);
        let denom = blaschke_eval(&b_lambda1, z)? * p_n.eval(z);
        if denom.norm() < tol::ADD_POINT_GUARD {
            return Err(Error::AddPointDegenerate { value: denom.norm() });
        }
        targets2.push(-(values[i] - h_val) / denom);
    }
    let sol2 = np_solve(&seq2, &targets2)?;

    let mut assembly = Assembly {
        pair,
        b_full: b_full.clone(),
        b_lambda1: b_lambda1.clone(),
        p_n: p_n.clone(),
        f1: sol2.chain.clone(),
        h1: sol1.chain.clone(),
        corrections: Vec::new(),
    };

    // Rational form of the same assembly.
    let (bn, bd) = b_full.rational_parts();
    let b_rat = RationalFn::new_unchecked(bn, bd);
    let (b1n, b1d) = b_lambda1.rational_parts();
    let b1_rat = RationalFn::new_unchecked(b1n, b1d);
    let f_part = b_rat.sub(&RationalFn::from_poly(p_n.clone())).mul(&sol2.f);
    let mut f_rat = b1_rat.mul(&f_part).add(&pair.a().mul(&sol1.f));

    // Deferred points: add one at a time against the product over the points
    // already interpolated.
    let mut covered: Vec<UnitDiskPoint> =
        idx1.iter().chain(idx2.iter()).map(|&i| pts[i]).collect();
    for &i in &idx0 {
        let lambda0 = pts[i];
        let b_s = BlaschkeProduct::new(DiskSequence::new(covered.clone()));
        let f_at = assembly.eval(lambda0.value())?;
        let denom = pair.a().eval(lambda0.value()) * blaschke_eval(&b_s, lambda0.value())?;
        if denom.norm() < tol::ADD_POINT_GUARD {
            return Err(Error::AddPointDegenerate { value: denom.norm() });
        }
        let coeff = (values[i] - f_at) / denom;
        assembly.corrections.push((coeff, b_s.clone()));
        let (bsn, bsd) = b_s.rational_parts();
        let corr = pair
            .a()
            .mul(&RationalFn::new_unchecked(bsn, bsd))
            .scale(coeff);
        f_rat = f_rat.add(&corr);
        covered.push(lambda0);
    }

    // Certificates: residuals at the nodes, boundary sup, and the
    // decomposition witnessing membership in a H2 + P_(N-1).
    let mut value_residuals = Vec::with_capacity(n);
    for (p, v) in pts.iter().zip(values) {
        value_residuals.push((assembly.eval(p.value())? - v).norm());
    }
    let mut boundary_sup: f64 = 0.0;
    for i in 0..tol::BOUNDARY_GRID {
        let theta = 2.0 * std::f64::consts::PI * i as f64 / tol::BOUNDARY_GRID as f64;
        boundary_sup = boundary_sup.max(assembly.eval(Complex64::from_polar(1.0, theta))?.norm());
    }
    let decomposition = decompose(&AnalyticSeries::from_rational(&f_rat)?, pair)?;

    Ok(InterpolantCertificate {
        f: f_rat,
        boundary_sup,
        value_residuals,
        decomposition,
    })
}

/// One-point extension: `f = F + [a B / (a(l0) B(l0))] (v0 - F(l0))`, which
/// keeps the values on the zero set of `B` and hits `v0` at `l0`.
pub fn add_point(
    f_prev: &RationalFn,
    pair: &RationalPair,
    b: &BlaschkeProduct,
    lambda0: &UnitDiskPoint,
    v0: Complex64,
) -> Result<RationalFn> {
    let z0 = lambda0.value();
    let denom = pair.a().eval(z0) * blaschke_eval(b, z0)?;
    if denom.norm() < tol::ADD_POINT_GUARD {
        return Err(Error::AddPointDegenerate { value: denom.norm() });
    }
    let (bn, bd) = b.rational_parts();
    let correction = pair
        .a()
        .mul(&RationalFn::new_unchecked(bn, bd))
        .scale((v0 - f_prev.eval(z0)) / denom);
    Ok(f_prev.add(&correction))
}
