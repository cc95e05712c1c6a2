//! Steinhaus random sequences: counter-based sampling, the exact exceedance
//! probability and truncated moments, three-series diagnostics, dyadic
//! counts, and the zero-one law experiment.

use num_complex::Complex64;

use crate::disk::{DiskSequence, UnitDiskPoint};
use crate::error::{Error, Result};
use crate::quad;
use crate::tol;

/// Parametric radii families. Power radii are `r_n = 1 - c n^(-beta)`,
/// geometric radii are `r_n = 1 - c q^n`, both clamped at 0 and indexed from
/// `n = 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum RadiiKind {
    Power { c: f64, beta: f64 },
    Geometric { c: f64, q: f64 },
    Explicit(Vec<f64>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadiiFamily {
    kind: RadiiKind,
    count: usize,
}

impl RadiiFamily {
    pub fn power(c: f64, beta: f64, count: usize) -> Result<Self> {
        if !(c > 0.0 && c.is_finite() && beta > 0.0 && beta.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "power family needs c > 0 and beta > 0, got c = {c}, beta = {beta}"
            )));
        }
        Ok(RadiiFamily {
            kind: RadiiKind::Power { c, beta },
            count,
        })
    }

    pub fn geometric(c: f64, q: f64, count: usize) -> Result<Self> {
        if !(c > 0.0 && c.is_finite() && q > 0.0 && q < 1.0) {
            return Err(Error::InvalidInput(format!(
                "geometric family needs c > 0 and 0 < q < 1, got c = {c}, q = {q}"
            )));
        }
        Ok(RadiiFamily {
            kind: RadiiKind::Geometric { c, q },
            count,
        })
    }

    pub fn explicit(radii: Vec<f64>) -> Result<Self> {
        for &r in &radii {
            if !(0.0..1.0).contains(&r) {
                return Err(Error::InvalidInput(format!(
                    "explicit radius {r} outside [0, 1)"
                )));
            }
        }
        let count = radii.len();
        Ok(RadiiFamily {
            kind: RadiiKind::Explicit(radii),
            count,
        })
    }

    pub fn kind(&self) -> &RadiiKind {
        &self.kind
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Radius at 1-based index `n`.
    pub fn radius_at(&self, n: usize) -> f64 {
        match &self.kind {
            RadiiKind::Power { c, beta } => (1.0 - c * (n as f64).powf(-beta)).max(0.0),
            RadiiKind::Geometric { c, q } => (1.0 - c * q.powi(n as i32)).max(0.0),
            RadiiKind::Explicit(v) => v[n - 1],
        }
    }

    pub fn radii(&self) -> Vec<f64> {
        (1..=self.count).map(|n| self.radius_at(n)).collect()
    }

    /// Same family, re-counted. Explicit lists are truncated (never grown).
    pub fn with_count(&self, count: usize) -> Result<RadiiFamily> {
        match &self.kind {
            RadiiKind::Explicit(v) => {
                if count > v.len() {
                    return Err(Error::InvalidInput(format!(
                        "explicit family has {} radii, cannot extend to {count}",
                        v.len()
                    )));
                }
                Ok(RadiiFamily {
                    kind: RadiiKind::Explicit(v[..count].to_vec()),
                    count,
                })
            }
            kind => Ok(RadiiFamily {
                kind: kind.clone(),
                count,
            }),
        }
    }
}

/// Angular law of a sequence family.
#[derive(Clone, Debug, PartialEq)]
pub enum AngleLaw {
    /// Independent uniform angles from the counter-based generator.
    Steinhaus { seed: u64 },
    /// Fixed angles, cycled to cover the count.
    Fixed(Vec<f64>),
}

/// Full descriptor of a parametric point family: radii plus angular law.
#[derive(Clone, Debug, PartialEq)]
pub struct SequenceFamily {
    pub radii: RadiiFamily,
    pub angles: AngleLaw,
}

impl SequenceFamily {
    pub fn truncated(&self, n: usize) -> SequenceFamily {
        SequenceFamily {
            radii: self.radii.with_count(n).unwrap_or_else(|_| self.radii.clone()),
            angles: self.angles.clone(),
        }
    }

    pub fn angle_at(&self, n: usize) -> f64 {
        match &self.angles {
            AngleLaw::Steinhaus { seed } => steinhaus_angle(*seed, n as u64),
            AngleLaw::Fixed(values) => {
                if values.is_empty() {
                    0.0
                } else {
                    values[(n - 1) % values.len()]
                }
            }
        }
    }

    /// Materialize the points `r_n e^(i theta_n)`.
    pub fn generate(&self) -> Result<DiskSequence> {
        let mut points = Vec::with_capacity(self.radii.count());
        for n in 1..=self.radii.count() {
            let r = self.radii.radius_at(n);
            let theta = self.angle_at(n);
            points.push(UnitDiskPoint::new(Complex64::from_polar(r, theta))?);
        }
        Ok(DiskSequence::with_family(points, self.clone()))
    }
}

// ---------------------------------------------------------------------------
// Counter-based generator: value at (seed, index) is a pure function of both,
// so parallel evaluation order cannot change any sample.

fn fmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x ^= x >> 30;
    x = x.wrapping_mul(0xBF58476D1CE4E5B9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94D049BB133111EB);
    x ^= x >> 31;
    x
}

fn counter_u64(seed: u64, index: u64) -> u64 {
    fmix64(fmix64(seed) ^ fmix64(index ^ 0xA5A5_A5A5_5A5A_5A5A))
}

/// Uniform in [0, 1) from the top 53 bits.
fn unit_f64(h: u64) -> f64 {
    (h >> 11) as f64 * (1.0 / 9007199254740992.0)
}

/// Angle of point `n` (1-based) under seed `seed`.
pub fn steinhaus_angle(seed: u64, n: u64) -> f64 {
    2.0 * std::f64::consts::PI * unit_f64(counter_u64(seed, n))
}

/// Seed of trial `t` derived from a master seed.
pub fn trial_seed(master_seed: u64, trial: u64) -> u64 {
    counter_u64(master_seed, trial ^ 0x517C_C1B7_2722_0A95)
}

// ---------------------------------------------------------------------------

/// A sampled Steinhaus sequence; `(family, seed)` reproduces the points.
#[derive(Clone, Debug)]
pub struct SteinhausSample {
    pub family: RadiiFamily,
    pub seed: u64,
    pub points: DiskSequence,
}

pub fn sample_steinhaus(family: &RadiiFamily, seed: u64) -> Result<SteinhausSample> {
    let descriptor = SequenceFamily {
        radii: family.clone(),
        angles: AngleLaw::Steinhaus { seed },
    };
    Ok(SteinhausSample {
        family: family.clone(),
        seed,
        points: descriptor.generate()?,
    })
}

/// `u_n = (1 + r^2 - (1 - r^2)^(1/M)) / (2r)`, the cosine threshold of the
/// exceedance event `X_n > 1`.
fn cosine_threshold(r: f64, m_order: u32) -> f64 {
    (1.0 + r * r - (1.0 - r * r).powf(1.0 / m_order as f64)) / (2.0 * r)
}

/// `P(X > 1) = arccos(u)/pi` for `X = (1 - r^2)/|1 - r e^(i theta)|^(2M)`
/// with a uniform angle. At `r = 0` the variable is identically 1 and the
/// probability is 0.
pub fn exceedance_prob(r: f64, m_order: u32) -> f64 {
    assert!(m_order >= 1, "order must be positive");
    assert!((0.0..1.0).contains(&r), "radius must be in [0, 1)");
    if r == 0.0 {
        return 0.0;
    }
    let u = cosine_threshold(r, m_order).clamp(-1.0, 1.0);
    u.acos() / std::f64::consts::PI
}

/// `X(theta)` for radius `r` at angular distance `theta` from the boundary
/// point, order `M`. The squared distance is evaluated as
/// `(1-r)^2 + 4r sin^2(theta/2)`, which stays accurate for radii within
/// rounding of the circle.
fn x_value(r: f64, theta: f64, m_order: u32) -> f64 {
    let s = (0.5 * theta).sin();
    let dist_sq = (1.0 - r) * (1.0 - r) + 4.0 * r * s * s;
    (1.0 - r * r) / dist_sq.powi(m_order as i32)
}

/// Mean and variance of the truncated variable `Y = X 1_(X <= 1)`.
pub fn truncated_moments(r: f64, m_order: u32) -> Result<(f64, f64)> {
    assert!(m_order >= 1);
    assert!((0.0..1.0).contains(&r));
    if r == 0.0 {
        // X is identically 1; the exceedance set is empty.
        return Ok((1.0, 0.0));
    }
    let theta_star = cosine_threshold(r, m_order).clamp(-1.0, 1.0).acos();
    let pi = std::f64::consts::PI;
    // The integrand is even in theta and bounded by 1 on [theta_star, pi],
    // but decays over the scale theta_star near the left endpoint when r is
    // close to 1. Integrating in u = ln(theta) flattens that spike.
    let integrate = |power: i32| -> Result<f64> {
        quad::adaptive_simpson(
            &mut |u: f64| {
                let theta = u.exp();
                x_value(r, theta, m_order).powi(power) * theta
            },
            theta_star.ln(),
            pi.ln(),
            1e-13,
            tol::QUAD_MAX_PANELS,
        )
    };
    let mean = integrate(1)? / pi;
    let second = integrate(2)? / pi;
    Ok((mean, (second - mean * mean).max(0.0)))
}

/// Convergence classification of a series from the closed-form family tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesClass {
    Convergent,
    Divergent,
    /// Boundary exponent (terms like 1/n): divergent, but logarithmically,
    /// which no desk-scale truncation can exhibit.
    DivergentBoundary,
    Indeterminate,
}

impl SeriesClass {
    pub fn label(&self) -> &'static str {
        match self {
            SeriesClass::Convergent => "convergent",
            SeriesClass::Divergent => "divergent",
            SeriesClass::DivergentBoundary => "divergent (boundary)",
            SeriesClass::Indeterminate => "indeterminate",
        }
    }
}

/// Classify `sum n^(-p)`.
pub(crate) fn classify_power_exponent(p: f64) -> SeriesClass {
    if (p - 1.0).abs() <= 1e-12 {
        SeriesClass::DivergentBoundary
    } else if p > 1.0 {
        SeriesClass::Convergent
    } else {
        SeriesClass::Divergent
    }
}

/// Closed-form class of `sum (1 - r_n^2)^e` for a radii family (`e > 0`).
pub(crate) fn classify_radii_power_sum(family: &RadiiFamily, e: f64) -> SeriesClass {
    match family.kind() {
        RadiiKind::Power { beta, .. } => classify_power_exponent(beta * e),
        RadiiKind::Geometric { .. } => SeriesClass::Convergent,
        RadiiKind::Explicit(_) => SeriesClass::Indeterminate,
    }
}

/// Per-term data and partial sums of the Kolmogorov three series at c = 1.
#[derive(Clone, Debug)]
pub struct ThreeSeriesReport {
    pub m_order: u32,
    pub prob_exceed: Vec<f64>,
    pub mean_truncated: Vec<f64>,
    pub var_truncated: Vec<f64>,
    pub partial_prob: Vec<f64>,
    pub partial_mean: Vec<f64>,
    pub partial_var: Vec<f64>,
    pub classification: [SeriesClass; 3],
}

pub fn three_series(family: &RadiiFamily, m_order: u32) -> Result<ThreeSeriesReport> {
    let radii = family.radii();
    let n = radii.len();
    let mut prob = Vec::with_capacity(n);
    let mut mean = Vec::with_capacity(n);
    let mut var = Vec::with_capacity(n);
    for &r in &radii {
        prob.push(exceedance_prob(r, m_order));
        let (m, v) = truncated_moments(r, m_order)?;
        mean.push(m);
        var.push(v);
    }
    let cumulative = |v: &[f64]| {
        let mut acc = 0.0;
        v.iter()
            .map(|x| {
                acc += x;
                acc
            })
            .collect::<Vec<f64>>()
    };
    // All three series share the closed-form class: the exceedance terms and
    // the truncated means are both comparable to (1 - r_n^2)^(1/2M), and the
    // variances are dominated by the means.
    let class = classify_radii_power_sum(family, 1.0 / (2.0 * m_order as f64));
    Ok(ThreeSeriesReport {
        m_order,
        partial_prob: cumulative(&prob),
        partial_mean: cumulative(&mean),
        partial_var: cumulative(&var),
        prob_exceed: prob,
        mean_truncated: mean,
        var_truncated: var,
        classification: [class, class, class],
    })
}

/// Annulus counts `N_k = #{n : 1 - 2^-k <= r_n < 1 - 2^-(k+1)}` and the two
/// diagnostic sums built on them.
#[derive(Clone, Debug)]
pub struct DyadicReport {
    pub m_order: u32,
    pub counts: Vec<(u32, usize)>,
    /// `sum N_k^2 2^-k` (almost-sure Carleson test).
    pub sum_carleson: f64,
    /// `sum N_k 2^(-k/(2M))` (interpolation test at order `M`).
    pub sum_interp: f64,
}

pub fn dyadic_counts(family: &RadiiFamily, m_order: u32) -> DyadicReport {
    assert!(m_order >= 1);
    let mut counts: Vec<usize> = Vec::new();
    for r in family.radii() {
        let k = if r == 0.0 {
            0
        } else {
            (-(1.0 - r).log2()).floor().max(0.0) as usize
        };
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    let sum_carleson = quad::compensated_sum(
        counts
            .iter()
            .enumerate()
            .map(|(k, &nk)| (nk * nk) as f64 * 0.5f64.powi(k as i32)),
    );
    let sum_interp = quad::compensated_sum(
        counts
            .iter()
            .enumerate()
            .map(|(k, &nk)| nk as f64 * 2.0f64.powf(-(k as f64) / (2.0 * m_order as f64))),
    );
    DyadicReport {
        m_order,
        counts: counts
            .into_iter()
            .enumerate()
            .map(|(k, nk)| (k as u32, nk))
            .collect(),
        sum_carleson,
        sum_interp,
    }
}

/// Outcome of the zero-one law experiment.
#[derive(Clone, Debug)]
pub struct ExperimentReport {
    pub m_order: u32,
    pub trials: usize,
    pub truncations: [usize; 3],
    pub threshold: f64,
    pub master_seed: u64,
    /// Fraction of trials whose truncated sum exceeds the threshold, at each
    /// reported truncation.
    pub exceed_fractions: [f64; 3],
    /// Median over trials of the truncated sums.
    pub median_sums: [f64; 3],
    /// Median over trials of `|S_T - S_(T/2)| / S_T`.
    pub median_rel_change: f64,
    /// Closed-form regime of `sum (1 - r_n^2)^(1/2M)` for context.
    pub regime: SeriesClass,
}

pub fn zero_one_experiment(
    family: &RadiiFamily,
    m_order: u32,
    trials: usize,
    truncation: usize,
    threshold: f64,
    master_seed: u64,
) -> Result<ExperimentReport> {
    zero_one_experiment_rotated(family, m_order, trials, truncation, threshold, master_seed, 0.0, 0.0)
}

/// Same experiment with the sample rotated by `rotation` and the sum taken at
/// the boundary point `e^(i zeta_angle)`. Only the difference
/// `rotation - zeta_angle` enters, so rotating sample and boundary point
/// together reproduces the statistics bit for bit.
#[allow(clippy::too_many_arguments)]
pub fn zero_one_experiment_rotated(
    family: &RadiiFamily,
    m_order: u32,
    trials: usize,
    truncation: usize,
    threshold: f64,
    master_seed: u64,
    rotation: f64,
    zeta_angle: f64,
) -> Result<ExperimentReport> {
    if trials == 0 {
        return Err(Error::EmptyInput("zero trials".into()));
    }
    if truncation == 0 {
        return Err(Error::EmptyInput("zero truncation".into()));
    }
    let family = family.with_count(truncation)?;
    let radii = family.radii();
    let offset = rotation - zeta_angle;
    let t_quarter = (truncation / 4).max(1);
    let t_half = (truncation / 2).max(1);

    let run_trial = |t: usize| -> [f64; 3] {
        let seed = trial_seed(master_seed, t as u64);
        let mut s = 0.0f64;
        let mut comp = 0.0f64;
        let mut out = [0.0f64; 3];
        for (i, &r) in radii.iter().enumerate() {
            let n = i + 1;
            let theta = steinhaus_angle(seed, n as u64) + offset;
            let x = x_value(r, theta, m_order);
            // Neumaier step keeps the running sum deterministic and accurate.
            let t2 = s + x;
            if s.abs() >= x.abs() {
                comp += (s - t2) + x;
            } else {
                comp += (x - t2) + s;
            }
            s = t2;
            if n == t_quarter {
                out[0] = s + comp;
            }
            if n == t_half {
                out[1] = s + comp;
            }
        }
        out[2] = s + comp;
        out
    };

    let mut sums = vec![[0.0f64; 3]; trials];
    let workers = worker_count().min(trials.max(1));
    if workers <= 1 {
        for (t, slot) in sums.iter_mut().enumerate() {
            *slot = run_trial(t);
        }
    } else {
        let chunk = trials.div_ceil(workers);
        std::thread::scope(|scope| {
            for (w, slice) in sums.chunks_mut(chunk).enumerate() {
                let run_trial = &run_trial;
                scope.spawn(move || {
                    for (off, slot) in slice.iter_mut().enumerate() {
                        *slot = run_trial(w * chunk + off);
                    }
                });
            }
        });
    }

    let median = |mut v: Vec<f64>| -> f64 {
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let n = v.len();
        if n % 2 == 1 {
            v[n / 2]
        } else {
            0.5 * (v[n / 2 - 1] + v[n / 2])
        }
    };

    let mut exceed = [0usize; 3];
    for s in &sums {
        for (i, &si) in s.iter().enumerate() {
            if si > threshold {
                exceed[i] += 1;
            }
        }
    }
    let exceed_fractions = [
        exceed[0] as f64 / trials as f64,
        exceed[1] as f64 / trials as f64,
        exceed[2] as f64 / trials as f64,
    ];
    let median_sums = [
        median(sums.iter().map(|s| s[0]).collect()),
        median(sums.iter().map(|s| s[1]).collect()),
        median(sums.iter().map(|s| s[2]).collect()),
    ];
    let median_rel_change = median(
        sums.iter()
            .map(|s| (s[2] - s[1]).abs() / s[2].abs().max(1e-300))
            .collect(),
    );

    Ok(ExperimentReport {
        m_order,
        trials,
        truncations: [t_quarter, t_half, truncation],
        threshold,
        master_seed,
        exceed_fractions,
        median_sums,
        median_rel_change,
        regime: classify_radii_power_sum(&family, 1.0 / (2.0 * m_order as f64)),
    })
}

/// Worker cap: `HB_THREADS` if set, otherwise hardware parallelism.
pub fn worker_count() -> usize {
    if let Ok(v) = std::env::var("HB_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            return n.max(1);
        }
    }
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn radii_families() {
        let f = RadiiFamily::geometric(1.0, 0.5, 5).unwrap();
        assert_eq!(f.radii(), vec![0.5, 0.75, 0.875, 0.9375, 0.96875]);
        let f = RadiiFamily::power(1.0, 1.0, 3).unwrap();
        assert_eq!(f.radii(), vec![0.0, 0.5, 1.0 - 1.0 / 3.0]);
        assert!(RadiiFamily::geometric(1.0, 1.5, 3).is_err());
        assert!(RadiiFamily::explicit(vec![0.5, 1.0]).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let f = RadiiFamily::geometric(1.0, 0.5, 32).unwrap();
        let a = sample_steinhaus(&f, 7).unwrap();
        let b = sample_steinhaus(&f, 7).unwrap();
        assert_eq!(a.points.values(), b.points.values());
        let c = sample_steinhaus(&f, 8).unwrap();
        assert_ne!(a.points.values(), c.points.values());
    }

    #[test]
    fn explicit_zero_radius_point_is_origin() {
        let f = RadiiFamily::explicit(vec![0.0]).unwrap();
        let s = sample_steinhaus(&f, 12345).unwrap();
        assert_eq!(s.points.values()[0], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn angles_pass_ks_test() {
        // Kolmogorov-Smirnov statistic against the uniform law, 1% level.
        let n = 10_000usize;
        for seed in [1u64, 99] {
            let mut u: Vec<f64> = (1..=n)
                .map(|k| steinhaus_angle(seed, k as u64) / (2.0 * std::f64::consts::PI))
                .collect();
            u.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut d: f64 = 0.0;
            for (i, &x) in u.iter().enumerate() {
                let lo = i as f64 / n as f64;
                let hi = (i + 1) as f64 / n as f64;
                d = d.max((x - lo).abs()).max((hi - x).abs());
            }
            assert!(d < 1.63 / (n as f64).sqrt(), "seed {seed}: KS = {d}");
        }
    }

    #[test]
    fn exceedance_closed_forms() {
        assert_eq!(exceedance_prob(0.0, 1), 0.0);
        assert_eq!(exceedance_prob(0.0, 3), 0.0);
        // M = 1: u simplifies to r.
        assert_relative_eq!(exceedance_prob(0.5, 1), 1.0 / 3.0, epsilon = 1e-14);
        for k in 0..100 {
            let r = 0.005 + 0.989 * (k as f64) / 99.0;
            assert_relative_eq!(
                exceedance_prob(r, 1),
                r.acos() / std::f64::consts::PI,
                epsilon = 1e-13
            );
        }
    }

    #[test]
    fn exceedance_asymptote() {
        // P(X > 1) ~ (1 - r^2)^(1/2M) / pi as r -> 1.
        let r: f64 = 1.0 - 1e-8;
        let m = 2u32;
        let asym = (1.0 - r * r).powf(1.0 / (2.0 * m as f64)) / std::f64::consts::PI;
        let ratio = exceedance_prob(r, m) / asym;
        assert!((0.99..=1.01).contains(&ratio), "ratio = {ratio}");
    }

    #[test]
    fn monte_carlo_matches_exact() {
        let n = 100_000usize;
        for &(r, m) in &[(0.5, 1u32), (0.9, 2), (0.999, 3)] {
            let p = exceedance_prob(r, m);
            let mut hits = 0usize;
            for k in 1..=n {
                let theta = steinhaus_angle(0xC0FFEE, k as u64);
                if x_value(r, theta, m) > 1.0 {
                    hits += 1;
                }
            }
            let freq = hits as f64 / n as f64;
            let sigma = (p * (1.0 - p) / n as f64).sqrt();
            assert!(
                (freq - p).abs() <= 4.0 * sigma,
                "(r, M) = ({r}, {m}): freq {freq} vs p {p}"
            );
        }
    }

    #[test]
    fn truncated_moment_values() {
        let (m0, v0) = truncated_moments(0.0, 1).unwrap();
        assert_eq!((m0, v0), (1.0, 0.0));
        // var <= mean <= 1 across a grid (E[Y^2] <= E[Y] since Y <= 1).
        for &r in &[0.1, 0.5, 0.9, 0.999] {
            for m in 1..=3u32 {
                let (mean, var) = truncated_moments(r, m).unwrap();
                assert!(mean <= 1.0 + 1e-12);
                assert!(var <= mean + 1e-12);
                assert!(var >= 0.0);
            }
        }
    }

    #[test]
    fn truncated_mean_asymptote() {
        // For M = 1 the mean behaves like (1 - r^2)^(1/2); the ratio should
        // drift by less than 10% across two decades of 1 - r.
        let ratio = |r: f64| {
            let (mean, _) = truncated_moments(r, 1).unwrap();
            mean / (1.0 - r * r).sqrt()
        };
        let a = ratio(1.0 - 1e-5);
        let b = ratio(1.0 - 1e-6);
        let c = ratio(1.0 - 1e-7);
        assert!((a / b - 1.0).abs() < 0.1, "{a} vs {b}");
        assert!((b / c - 1.0).abs() < 0.1, "{b} vs {c}");
    }

    #[test]
    fn three_series_classification() {
        // Geometric radii: all three series convergent.
        let f = RadiiFamily::geometric(1.0, 0.5, 24).unwrap();
        let rep = three_series(&f, 1).unwrap();
        assert_eq!(rep.classification, [SeriesClass::Convergent; 3]);
        // Power with beta = 2M: boundary case.
        let f = RadiiFamily::power(1.0, 4.0, 16).unwrap();
        let rep = three_series(&f, 2).unwrap();
        assert_eq!(rep.classification, [SeriesClass::DivergentBoundary; 3]);
        // Power with beta < 2M: divergent.
        let f = RadiiFamily::power(1.0, 1.0, 16).unwrap();
        let rep = three_series(&f, 1).unwrap();
        assert_eq!(rep.classification, [SeriesClass::Divergent; 3]);
        // Explicit zeros: terms are (0, 1, 0).
        let f = RadiiFamily::explicit(vec![0.0, 0.0, 0.0]).unwrap();
        let rep = three_series(&f, 1).unwrap();
        assert_eq!(rep.partial_prob.last(), Some(&0.0));
        assert_relative_eq!(*rep.partial_mean.last().unwrap(), 3.0);
        assert_eq!(rep.partial_var.last(), Some(&0.0));
        assert_eq!(rep.classification, [SeriesClass::Indeterminate; 3]);
    }

    #[test]
    fn dyadic_count_values() {
        // r_n = 1 - 2^-n for n = 1..10: one point per annulus k = 1..10.
        let f = RadiiFamily::geometric(1.0, 0.5, 10).unwrap();
        let rep = dyadic_counts(&f, 1);
        for (k, nk) in &rep.counts {
            let expected = if (1..=10).contains(k) { 1 } else { 0 };
            assert_eq!(*nk, expected, "k = {k}");
        }
        // All radii zero: everything in annulus 0.
        let f = RadiiFamily::explicit(vec![0.0; 7]).unwrap();
        let rep = dyadic_counts(&f, 1);
        assert_eq!(rep.counts[0], (0, 7));
    }

    #[test]
    fn dyadic_sum_equivalence_with_radii_sum() {
        // sum (1 - r_n)^(1/2M) and sum N_k 2^(-k/2M) converge or diverge
        // together: their growth ratios across a truncation doubling fall on
        // the same side, over beta in {M, 2M, 3M}.
        let m = 1u32;
        let e = 1.0 / (2.0 * m as f64);
        for mult in [1.0, 2.0, 3.0] {
            let beta = mult * m as f64;
            let f = RadiiFamily::power(1.0, beta, 4096).unwrap();
            let direct = |count: usize| {
                quad::compensated_sum(
                    f.with_count(count).unwrap().radii().iter().map(|&r| (1.0 - r).powf(e)),
                )
            };
            let dyadic = |count: usize| dyadic_counts(&f.with_count(count).unwrap(), m).sum_interp;
            let direct_ratio = direct(4096) / direct(2048);
            let dyadic_ratio = dyadic(4096) / dyadic(2048);
            assert_eq!(
                direct_ratio < 1.05,
                dyadic_ratio < 1.05,
                "beta = {beta}: direct {direct_ratio}, dyadic {dyadic_ratio}"
            );
            let class = classify_radii_power_sum(&f, e);
            match class {
                SeriesClass::Convergent => assert!(dyadic_ratio < 1.05),
                _ => assert!(dyadic_ratio > 1.05),
            }
        }
    }

    #[test]
    fn experiment_is_deterministic_across_worker_counts() {
        let f = RadiiFamily::geometric(1.0, 0.5, 64).unwrap();
        std::env::set_var("HB_THREADS", "1");
        let a = zero_one_experiment(&f, 1, 17, 64, 10.0, 99).unwrap();
        std::env::set_var("HB_THREADS", "4");
        let b = zero_one_experiment(&f, 1, 17, 64, 10.0, 99).unwrap();
        std::env::remove_var("HB_THREADS");
        assert_eq!(a.median_sums, b.median_sums);
        assert_eq!(a.exceed_fractions, b.exceed_fractions);
        assert_eq!(a.median_rel_change, b.median_rel_change);
    }

    #[test]
    fn experiment_trivial_case() {
        let f = RadiiFamily::explicit(vec![0.0]).unwrap();
        let rep = zero_one_experiment(&f, 1, 1, 1, 10.0, 5).unwrap();
        assert_eq!(rep.median_sums[2], 1.0);
        assert_eq!(rep.exceed_fractions[2], 0.0);
    }

    #[test]
    fn experiment_rotation_invariance_is_exact() {
        let f = RadiiFamily::geometric(1.0, 0.5, 128).unwrap();
        let base = zero_one_experiment(&f, 1, 25, 128, 5.0, 321).unwrap();
        let phi = 2.0345;
        let rotated =
            zero_one_experiment_rotated(&f, 1, 25, 128, 5.0, 321, phi, phi).unwrap();
        assert_eq!(base.median_sums, rotated.median_sums);
        assert_eq!(base.exceed_fractions, rotated.exceed_fractions);
        assert_eq!(base.median_rel_change, rotated.median_rel_change);
    }

    #[test]
    fn experiment_regimes() {
        // Convergent regime: sums stabilize.
        let f = RadiiFamily::geometric(1.0, 0.5, 1024).unwrap();
        let rep = zero_one_experiment(&f, 1, 50, 1024, 1e9, 7).unwrap();
        assert_eq!(rep.regime, SeriesClass::Convergent);
        assert!(rep.median_rel_change < 1e-2, "{}", rep.median_rel_change);
        // Divergent regime: exceedance fractions do not decrease and reach 1.
        let f = RadiiFamily::power(1.0, 1.0, 1024).unwrap();
        let rep = zero_one_experiment(&f, 1, 50, 1024, 30.0, 7).unwrap();
        assert_eq!(rep.regime, SeriesClass::Divergent);
        assert!(rep.exceed_fractions[0] <= rep.exceed_fractions[1] + 1e-12);
        assert!(rep.exceed_fractions[1] <= rep.exceed_fractions[2] + 1e-12);
        assert!(rep.exceed_fractions[2] >= 0.9);
    }
}
