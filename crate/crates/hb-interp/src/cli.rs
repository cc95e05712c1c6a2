//! Batch command-line surface. Every subcommand reads JSON inputs, runs one
//! library operation, and writes a single JSON (or CSV) report.
//!
//! Exit codes: 0 success, 2 input/validation error, 3 numerical
//! non-convergence.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::disk::{
    blaschke_radial_derivatives, blaschke_taylor_at_boundary, BlaschkeProduct, DiskSequence,
    UnitCirclePoint, UnitDiskPoint,
};
use crate::error::{Error, Result};
use crate::interp;
use crate::io::{
    a2c, c2a, FunctionRepr, NpProblemRepr, PairRepr, RationalRepr, SeqRepr, ValuesRepr,
};
use crate::pick;
use crate::random::{self, RadiiFamily};
use crate::rational::{pythagorean_mate, verify_pair, RationalPair};
use crate::space::{gram, hb_norm};
use crate::{dirichlet, tol};

#[derive(Parser, Debug)]
#[command(
    name = "hb",
    version,
    about = "Interpolating sequences for de Branges-Rovnyak spaces: batch jobs"
)]
struct Cli {
    /// Output path; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Pythagorean mate of b, with the identity residual report.
    Mate {
        /// JSON file with the rational function b ({"num": ..., "den": ...}).
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value_t = tol::BOUNDARY_GRID)]
        grid: usize,
        #[arg(long, default_value_t = tol::PAIR_IDENTITY_TOL)]
        tol: f64,
    },
    /// Re-validate a stored pair.
    VerifyPair {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long, default_value_t = tol::BOUNDARY_GRID)]
        grid: usize,
        #[arg(long, default_value_t = tol::PAIR_IDENTITY_TOL)]
        tol: f64,
    },
    /// Carleson + boundary-sum diagnostics and, for families, the verdict.
    Decide {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        seq: PathBuf,
    },
    /// Carleson constant of a sequence.
    Carleson {
        #[arg(long)]
        seq: PathBuf,
    },
    /// Local Dirichlet energy D_zeta^N of a function.
    Dnorm {
        /// Function file ({"kind": "poly"|"rational"|"blaschke", ...}).
        #[arg(long)]
        f: PathBuf,
        /// Boundary point, "re,im" or "re".
        #[arg(long)]
        zeta: String,
        #[arg(long)]
        order: usize,
        /// For Blaschke functions, also run the quadrature route.
        #[arg(long, default_value_t = false)]
        quadrature: bool,
        /// Starting panel count of the quadrature.
        #[arg(long, default_value_t = 64)]
        grid: usize,
    },
    /// Boundary Taylor data and radial derivatives of a Blaschke product.
    Blaschke {
        /// Sequence file with the zeros.
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        zeta: String,
        /// Highest derivative order.
        #[arg(long)]
        derivs: usize,
        #[arg(long, default_value_t = 65)]
        radial_samples: usize,
    },
    /// Normalized kernel Gram matrix with eigenvalue extremes.
    Gram {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        seq: PathBuf,
    },
    /// Minimal-norm bounded interpolation.
    NpSolve {
        /// JSON file {"nodes": [[re,im],...], "targets": [[re,im],...]}.
        #[arg(long)]
        nodes: PathBuf,
        #[arg(long, default_value_t = tol::BOUNDARY_GRID)]
        grid: usize,
    },
    /// Constructive multiplier interpolant with certificates.
    Construct {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        seq: PathBuf,
        /// JSON file {"values": [[re,im],...]}.
        #[arg(long)]
        values: PathBuf,
    },
    /// One-point extension of an interpolant.
    AddPoint {
        /// Rational function file for F.
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        pair: PathBuf,
        /// Zeros of the Blaschke product B.
        #[arg(long)]
        seq: PathBuf,
        #[arg(long)]
        lambda0: String,
        #[arg(long)]
        v0: String,
    },
    /// Zero-one law experiment over Steinhaus samples.
    Simulate {
        /// Inline family, e.g. "power:c=1,beta=1" or "geometric:c=1,q=0.5".
        #[arg(long)]
        family: String,
        #[arg(long = "M", default_value_t = 1)]
        m_order: u32,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long = "truncate", default_value_t = 4096)]
        truncation: usize,
        #[arg(long, default_value_t = 100.0)]
        threshold: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Kolmogorov three-series diagnostics at c = 1.
    ThreeSeries {
        #[arg(long)]
        family: String,
        #[arg(long = "M", default_value_t = 1)]
        m_order: u32,
        #[arg(long, default_value_t = 64)]
        count: usize,
    },
    /// Dyadic annulus counts and the two diagnostic sums.
    Dyadic {
        #[arg(long)]
        family: String,
        #[arg(long = "M", default_value_t = 1)]
        m_order: u32,
        #[arg(long, default_value_t = 64)]
        count: usize,
    },
}

/// Run the CLI on the given argument list; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn load_pair(path: &Path) -> Result<RationalPair> {
    let repr: PairRepr = read_json(path)?;
    repr.to_pair()
}

fn load_seq(path: &Path) -> Result<DiskSequence> {
    let repr: SeqRepr = read_json(path)?;
    repr.to_sequence()
}

fn parse_complex(s: &str) -> Result<Complex64> {
    let parts: Vec<&str> = s.split(',').collect();
    let parse = |t: &str| -> Result<f64> {
        t.trim()
            .parse::<f64>()
            .map_err(|_| Error::InvalidInput(format!("cannot parse number `{t}`")))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(parse(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(parse(re)?, parse(im)?)),
        _ => Err(Error::InvalidInput(format!("cannot parse complex `{s}`"))),
    }
}

fn parse_circle(s: &str) -> Result<UnitCirclePoint> {
    UnitCirclePoint::new(parse_complex(s)?)
}

/// Inline family grammar: `kind:key=value,...` (or `explicit:r1,r2,...`).
fn parse_family_arg(s: &str, count: usize) -> Result<RadiiFamily> {
    let (kind, rest) = s
        .split_once(':')
        .ok_or_else(|| Error::InvalidInput(format!("family `{s}` missing `kind:`")))?;
    match kind {
        "power" | "geometric" => {
            let mut c = None;
            let mut beta = None;
            let mut q = None;
            for kv in rest.split(',') {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::InvalidInput(format!("bad family parameter `{kv}`")))?;
                let v: f64 = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad number in `{kv}`")))?;
                match k.trim() {
                    "c" => c = Some(v),
                    "beta" => beta = Some(v),
                    "q" => q = Some(v),
                    other => {
                        return Err(Error::InvalidInput(format!("unknown parameter `{other}`")))
                    }
                }
            }
            let c = c.ok_or_else(|| Error::InvalidInput("family needs c".into()))?;
            if kind == "power" {
                RadiiFamily::power(
                    c,
                    beta.ok_or_else(|| Error::InvalidInput("power family needs beta".into()))?,
                    count,
                )
            } else {
                RadiiFamily::geometric(
                    c,
                    q.ok_or_else(|| Error::InvalidInput("geometric family needs q".into()))?,
                    count,
                )
            }
        }
        "explicit" => {
            let radii: Vec<f64> = rest
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::InvalidInput(format!("bad radius `{t}`")))
                })
                .collect::<Result<_>>()?;
            RadiiFamily::explicit(radii)
        }
        other => Err(Error::InvalidInput(format!("unknown family kind `{other}`"))),
    }
}

fn emit(cli: &Cli, json: String, csv: Option<String>) -> Result<()> {
    let payload = match cli.format {
        Format::Json => json,
        Format::Csv => csv.ok_or_else(|| {
            Error::InvalidInput("this subcommand has no CSV representation".into())
        })?,
    };
    match &cli.out {
        Some(path) => std::fs::write(path, payload)?,
        None => println!("{payload}"),
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct PairVerifyRepr {
    grid: usize,
    tolerance: f64,
    max_residual: f64,
    min_zero_modulus: Option<f64>,
    a0_positive: bool,
    sup_a: f64,
    identity_ok: bool,
    outer_ok: bool,
    passed: bool,
}

impl PairVerifyRepr {
    fn from_report(r: &crate::rational::PairReport) -> Self {
        PairVerifyRepr {
            grid: r.grid_size,
            tolerance: r.tolerance,
            max_residual: r.max_residual,
            min_zero_modulus: r.min_zero_modulus,
            a0_positive: r.a0_positive,
            sup_a: r.sup_a,
            identity_ok: r.identity_ok,
            outer_ok: r.outer_ok,
            passed: r.passed(),
        }
    }
}

#[derive(Serialize)]
struct MateReport {
    pair: PairRepr,
    report: PairVerifyRepr,
}

#[derive(Serialize)]
struct ZeroSumRepr {
    zeta: [f64; 2],
    multiplicity: usize,
    truncations: Vec<usize>,
    partial_sums: Vec<f64>,
    classification: Option<String>,
}

#[derive(Serialize)]
struct DecideReport {
    verdict: String,
    reason: String,
    delta: f64,
    separation: f64,
    argmin_index: usize,
    sums: Vec<ZeroSumRepr>,
}

#[derive(Serialize)]
struct CarlesonRepr {
    delta: f64,
    separation: f64,
    argmin_index: usize,
}

#[derive(Serialize)]
struct DnormReport {
    order: usize,
    zeta: [f64; 2],
    coefficient_route: Option<f64>,
    quadrature_route: Option<f64>,
}

#[derive(Serialize)]
struct RadialRow {
    r: f64,
    values: Vec<[f64; 2]>,
}

#[derive(Serialize)]
struct BlaschkeReport {
    zeta: [f64; 2],
    ahern_clark_sums: Vec<f64>,
    taylor_coeffs: Vec<[f64; 2]>,
    radial: Vec<RadialRow>,
}

#[derive(Serialize)]
struct GramJsonReport {
    min_eig: f64,
    max_eig: f64,
    diag_norms: Vec<f64>,
    matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
struct NpReport {
    t_star: f64,
    f: RationalRepr,
    residual_max: f64,
    boundary_sup: f64,
}

#[derive(Serialize)]
struct ConstructReport {
    f: RationalRepr,
    boundary_sup: f64,
    value_residuals: Vec<f64>,
    max_residual: f64,
    hb_norm: f64,
    p_part: Vec<[f64; 2]>,
}

#[derive(Serialize)]
struct AddPointReport {
    f: RationalRepr,
    value_at_lambda0: [f64; 2],
}

#[derive(Serialize)]
struct SimulateReport {
    #[serde(rename = "M")]
    m_order: u32,
    trials: usize,
    truncations: [usize; 3],
    threshold: f64,
    seed: u64,
    exceed_fractions: [f64; 3],
    median_sums: [f64; 3],
    median_rel_change: f64,
    regime: String,
}

#[derive(Serialize)]
struct ThreeSeriesRepr {
    #[serde(rename = "M")]
    m_order: u32,
    classification: [String; 3],
    prob_exceed: Vec<f64>,
    mean_truncated: Vec<f64>,
    var_truncated: Vec<f64>,
    partial_prob: Vec<f64>,
    partial_mean: Vec<f64>,
    partial_var: Vec<f64>,
}

#[derive(Serialize)]
struct DyadicRepr {
    #[serde(rename = "M")]
    m_order: u32,
    counts: Vec<(u32, usize)>,
    sum_carleson: f64,
    sum_interp: f64,
}

fn execute(cli: &Cli) -> Result<()> {
    match &cli.cmd {
        Cmd::Mate { b, grid, tol } => {
            let b_repr: RationalRepr = read_json(b)?;
            let pair = pythagorean_mate(&b_repr.to_fn()?)?;
            let report = verify_pair(&pair, *grid, *tol)?;
            let out = MateReport {
                pair: PairRepr::from_pair(&pair),
                report: PairVerifyRepr::from_report(&report),
            };
            emit(cli, to_json(&out)?, None)
        }
        Cmd::VerifyPair { pair, grid, tol } => {
            let pair = load_pair(pair)?;
            let report = verify_pair(&pair, *grid, *tol)?;
            emit(cli, to_json(&PairVerifyRepr::from_report(&report))?, None)
        }
        Cmd::Decide { pair, seq } => {
            let pair = load_pair(pair)?;
            let seq = load_seq(seq)?;
            let rep = interp::decide(&pair, &seq)?;
            let sums: Vec<ZeroSumRepr> = rep
                .sums
                .per_zero
                .iter()
                .map(|z| ZeroSumRepr {
                    zeta: c2a(z.zeta),
                    multiplicity: z.multiplicity,
                    truncations: z.truncations.clone(),
                    partial_sums: z.partial_sums.clone(),
                    classification: z.classification.map(|c| c.label().to_string()),
                })
                .collect();
            let csv = decide_csv(&rep);
            let out = DecideReport {
                verdict: rep.verdict.label().to_string(),
                reason: rep.reason,
                delta: rep.carleson.delta,
                separation: rep.carleson.separation,
                argmin_index: rep.carleson.argmin_index,
                sums,
            };
            emit(cli, to_json(&out)?, Some(csv))
        }
        Cmd::Carleson { seq } => {
            let seq = load_seq(seq)?;
            let rep = interp::carleson_delta(&seq)?;
            let out = CarlesonRepr {
                delta: rep.delta,
                separation: rep.separation,
                argmin_index: rep.argmin_index,
            };
            emit(cli, to_json(&out)?, None)
        }
        Cmd::Dnorm {
            f,
            zeta,
            order,
            quadrature,
            grid,
        } => {
            if *order == 0 {
                return Err(Error::InvalidInput("order must be positive".into()));
            }
            let f_repr: FunctionRepr = read_json(f)?;
            let zeta = parse_circle(zeta)?;
            let series = f_repr.to_series()?;
            let coefficient_route = Some(dirichlet::local_dirichlet_norm(&series, &zeta, *order)?);
            let quadrature_route = if *quadrature {
                match &f_repr {
                    FunctionRepr::Blaschke { zeros } => {
                        let seq = DiskSequence::from_values(
                            &zeros.iter().map(|&z| a2c(z)).collect::<Vec<_>>(),
                        )?;
                        Some(dirichlet::dirichlet_blaschke_quadrature(
                            &BlaschkeProduct::new(seq),
                            &zeta,
                            *order,
                            *grid,
                        )?)
                    }
                    _ => {
                        return Err(Error::InvalidInput(
                            "--quadrature requires a blaschke function".into(),
                        ))
                    }
                }
            } else {
                None
            };
            let out = DnormReport {
                order: *order,
                zeta: c2a(zeta.value()),
                coefficient_route,
                quadrature_route,
            };
            emit(cli, to_json(&out)?, None)
        }
        Cmd::Blaschke {
            seq,
            zeta,
            derivs,
            radial_samples,
        } => {
            let seq = load_seq(seq)?;
            let zeta = parse_circle(zeta)?;
            let b = BlaschkeProduct::new(seq);
            let taylor = blaschke_taylor_at_boundary(&b, &zeta, *derivs)?;
            let ac: Vec<f64> = (0..=*derivs)
                .map(|n| crate::disk::ahern_clark_sum(b.zeros(), &zeta, n))
                .collect();
            let r_grid: Vec<f64> = (0..*radial_samples)
                .map(|i| i as f64 / (radial_samples.saturating_sub(1).max(1)) as f64)
                .collect();
            let mut radial = Vec::with_capacity(r_grid.len());
            let mut per_order = Vec::with_capacity(*derivs + 1);
            for j in 0..=*derivs {
                per_order.push(blaschke_radial_derivatives(&b, &zeta, j, &r_grid)?);
            }
            for (i, &r) in r_grid.iter().enumerate() {
                radial.push(RadialRow {
                    r,
                    values: per_order.iter().map(|col| c2a(col[i])).collect(),
                });
            }
            let csv = blaschke_csv(&radial);
            let out = BlaschkeReport {
                zeta: c2a(zeta.value()),
                ahern_clark_sums: ac,
                taylor_coeffs: taylor.iter().map(|&c| c2a(c)).collect(),
                radial,
            };
            emit(cli, to_json(&out)?, Some(csv))
        }
        Cmd::Gram { pair, seq } => {
            let pair = load_pair(pair)?;
            let seq = load_seq(seq)?;
            let rep = gram(&pair, &seq)?;
            let out = GramJsonReport {
                min_eig: rep.min_eig,
                max_eig: rep.max_eig,
                diag_norms: rep.diag_norms,
                matrix: rep
                    .matrix
                    .iter()
                    .map(|row| row.iter().map(|&c| c2a(c)).collect())
                    .collect(),
            };
            emit(cli, to_json(&out)?, None)
        }
        Cmd::NpSolve { nodes, grid } => {
            let repr: NpProblemRepr = read_json(nodes)?;
            let seq = DiskSequence::from_values(
                &repr.nodes.iter().map(|&p| a2c(p)).collect::<Vec<_>>(),
            )?;
            let targets: Vec<Complex64> = repr.targets.iter().map(|&t| a2c(t)).collect();
            let sol = pick::np_solve(&seq, &targets)?;
            let residual_max = seq
                .points()
                .iter()
                .zip(&targets)
                .map(|(p, t)| (sol.chain.eval(p.value()) - t).norm())
                .fold(0.0f64, f64::max);
            let out = NpReport {
                t_star: sol.t_star,
                f: RationalRepr::from_fn(&sol.f),
                residual_max,
                boundary_sup: sol.chain.sup_boundary(*grid),
            };
            emit(cli, to_json(&out)?, None)
        }
        Cmd::Construct { pair, seq, values } => {
            let pair = load_pair(pair)?;
            let seq = load_seq(seq)?;
            let values_repr: ValuesRepr = read_json(values)?;
            let values: Vec<Complex64> = values_repr.values.iter().map(|&v| a2c(v)).collect();
            let cert = interp::construct_multiplier(&pair, &seq, &values)?;
            let max_residual = cert.value_residuals.iter().copied().fold(0.0f64, f64::max);
            let out = ConstructReport {
                f: RationalRepr::from_fn(&cert.f),
                boundary_sup: cert.boundary_sup,
                value_residuals: cert.value_residuals.clone(),
                max_residual,
                hb_norm: hb_norm(&cert.decomposition),
                p_part: cert
                    .decomposition
                    .p
                    .coeffs()
                    .iter()
                    .map(|&c| c2a(c))
                    .collect(),
            };
            emit(cli, to_json(&out)?, None)
        }
        Cmd::AddPoint {
            f,
            pair,
            seq,
            lambda0,
            v0,
        } => {
            let f_repr: RationalRepr = read_json(f)?;
            let pair = load_pair(pair)?;
            let seq = load_seq(seq)?;
            let lambda0 = UnitDiskPoint::new(parse_complex(lambda0)?)?;
            let v0 = parse_complex(v0)?;
            let b = BlaschkeProduct::new(seq);
            let extended = interp::add_point(&f_repr.to_fn()?, &pair, &b, &lambda0, v0)?;
            let out = AddPointReport {
                f: RationalRepr::from_fn(&extended),
                value_at_lambda0: c2a(extended.eval(lambda0.value())),
            };
            emit(cli, to_json(&out)?, None)
        }
        Cmd::Simulate {
            family,
            m_order,
            trials,
            truncation,
            threshold,
            seed,
        } => {
            let fam = parse_family_arg(family, *truncation)?;
            let rep = random::zero_one_experiment(
                &fam,
                *m_order,
                *trials,
                *truncation,
                *threshold,
                *seed,
            )?;
            let csv = simulate_csv(&rep);
            let out = SimulateReport {
                m_order: rep.m_order,
                trials: rep.trials,
                truncations: rep.truncations,
                threshold: rep.threshold,
                seed: rep.master_seed,
                exceed_fractions: rep.exceed_fractions,
                median_sums: rep.median_sums,
                median_rel_change: rep.median_rel_change,
                regime: rep.regime.label().to_string(),
            };
            emit(cli, to_json(&out)?, Some(csv))
        }
        Cmd::ThreeSeries {
            family,
            m_order,
            count,
        } => {
            let fam = parse_family_arg(family, *count)?;
            let rep = random::three_series(&fam, *m_order)?;
            let csv = three_series_csv(&rep);
            let out = ThreeSeriesRepr {
                m_order: rep.m_order,
                classification: [
                    rep.classification[0].label().to_string(),
                    rep.classification[1].label().to_string(),
                    rep.classification[2].label().to_string(),
                ],
                prob_exceed: rep.prob_exceed,
                mean_truncated: rep.mean_truncated,
                var_truncated: rep.var_truncated,
                partial_prob: rep.partial_prob,
                partial_mean: rep.partial_mean,
                partial_var: rep.partial_var,
            };
            emit(cli, to_json(&out)?, Some(csv))
        }
        Cmd::Dyadic {
            family,
            m_order,
            count,
        } => {
            let fam = parse_family_arg(family, *count)?;
            let rep = random::dyadic_counts(&fam, *m_order);
            let csv = dyadic_csv(&rep);
            let out = DyadicRepr {
                m_order: rep.m_order,
                counts: rep.counts,
                sum_carleson: rep.sum_carleson,
                sum_interp: rep.sum_interp,
            };
            emit(cli, to_json(&out)?, Some(csv))
        }
    }
}

fn decide_csv(rep: &interp::DecisionReport) -> String {
    let mut out = String::from("truncation");
    for z in &rep.sums.per_zero {
        out.push_str(&format!(",sum_at_{}_{}", z.zeta.re, z.zeta.im));
    }
    out.push('\n');
    if let Some(first) = rep.sums.per_zero.first() {
        for (i, t) in first.truncations.iter().enumerate() {
            out.push_str(&format!("{t}"));
            for z in &rep.sums.per_zero {
                out.push_str(&format!(",{}", z.partial_sums[i]));
            }
            out.push('\n');
        }
    }
    out
}

fn blaschke_csv(radial: &[RadialRow]) -> String {
    let orders = radial.first().map(|r| r.values.len()).unwrap_or(0);
    let mut out = String::from("r");
    for j in 0..orders {
        out.push_str(&format!(",abs_deriv_{j}"));
    }
    out.push('\n');
    for row in radial {
        out.push_str(&format!("{}", row.r));
        for v in &row.values {
            out.push_str(&format!(",{}", (v[0] * v[0] + v[1] * v[1]).sqrt()));
        }
        out.push('\n');
    }
    out
}

fn simulate_csv(rep: &random::ExperimentReport) -> String {
    let mut out = String::from("truncation,exceed_fraction,median_sum\n");
    for i in 0..3 {
        out.push_str(&format!(
            "{},{},{}\n",
            rep.truncations[i], rep.exceed_fractions[i], rep.median_sums[i]
        ));
    }
    out
}

fn three_series_csv(rep: &random::ThreeSeriesReport) -> String {
    let mut out =
        String::from("n,prob_exceed,mean_truncated,var_truncated,partial_prob,partial_mean,partial_var\n");
    for i in 0..rep.prob_exceed.len() {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            i + 1,
            rep.prob_exceed[i],
            rep.mean_truncated[i],
            rep.var_truncated[i],
            rep.partial_prob[i],
            rep.partial_mean[i],
            rep.partial_var[i]
        ));
    }
    out
}

fn dyadic_csv(rep: &random::DyadicReport) -> String {
    let mut out = String::from("k,N_k\n");
    for (k, nk) in &rep.counts {
        out.push_str(&format!("{k},{nk}\n"));
    }
    out
}
