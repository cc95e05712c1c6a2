//! The space H(b) for a rational pair: the decomposition `f = a0 g + p`, the
//! equivalent norm, reproducing kernels, and Gram diagnostics.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::disk::{BlaschkeProduct, DiskSequence, UnitDiskPoint};
use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::rational::{BoundaryZeroSet, RationalFn, RationalPair};
use crate::tol;

/// Where a power series came from. Exact boundary jets are available for
/// polynomial, rational, and (finite) Blaschke sources.
#[derive(Clone, Debug)]
pub enum SeriesSource {
    Polynomial(ComplexPoly),
    Rational(RationalFn),
    Blaschke(BlaschkeProduct),
    Explicit,
}

/// Truncated Taylor series at the origin with an l2 bound on the discarded
/// tail.
#[derive(Clone, Debug)]
pub struct AnalyticSeries {
    coeffs: Vec<Complex64>,
    tail_bound: f64,
    source: SeriesSource,
}

impl AnalyticSeries {
    pub fn from_poly(p: ComplexPoly) -> Self {
        AnalyticSeries {
            coeffs: p.coeffs().to_vec(),
            tail_bound: 0.0,
            source: SeriesSource::Polynomial(p),
        }
    }

    pub fn from_rational(f: &RationalFn) -> Result<Self> {
        if f.is_polynomial() {
            let p = ComplexPoly::from_coeffs(
                f.num().coeffs().iter().map(|c| c / f.den().coeff(0)).collect(),
            );
            return Ok(AnalyticSeries::from_poly(p));
        }
        let (coeffs, tail_bound) = f.series_with_tail(tol::SERIES_TAIL_REL)?;
        Ok(AnalyticSeries {
            coeffs,
            tail_bound,
            source: SeriesSource::Rational(f.clone()),
        })
    }

    pub fn from_blaschke(b: &BlaschkeProduct) -> Result<Self> {
        let (num, den) = b.rational_parts();
        let f = RationalFn::new_unchecked(num, den);
        let (coeffs, tail_bound) = f.series_with_tail(tol::SERIES_TAIL_REL)?;
        Ok(AnalyticSeries {
            coeffs,
            tail_bound,
            source: SeriesSource::Blaschke(b.clone()),
        })
    }

    pub fn from_coeffs(coeffs: Vec<Complex64>, tail_bound: f64) -> Self {
        AnalyticSeries {
            coeffs,
            tail_bound,
            source: SeriesSource::Explicit,
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    pub fn source(&self) -> &SeriesSource {
        &self.source
    }

    /// The underlying function in rational form, when the source admits one.
    pub fn as_rational(&self) -> Option<RationalFn> {
        match &self.source {
            SeriesSource::Polynomial(p) => Some(RationalFn::from_poly(p.clone())),
            SeriesSource::Rational(f) => Some(f.clone()),
            SeriesSource::Blaschke(b) => {
                let (num, den) = b.rational_parts();
                Some(RationalFn::new_unchecked(num, den))
            }
            SeriesSource::Explicit => None,
        }
    }

    /// l2 norm of the stored coefficients.
    pub fn h2_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Reproducing kernel `k_w^b(z) = (1 - conj(b(w)) b(z)) / (1 - conj(w) z)`.
pub fn kernel_kb(pair: &RationalPair, w: &UnitDiskPoint, z: &UnitDiskPoint) -> Complex64 {
    let bw = pair.b().eval(w.value());
    let bz = pair.b().eval(z.value());
    (Complex64::new(1.0, 0.0) - bw.conj() * bz)
        / (Complex64::new(1.0, 0.0) - w.value().conj() * z.value())
}

/// The unique polynomial of degree < N matching the jets of `f` of order
/// `m_j` at each boundary zero, by confluent Newton divided differences.
pub fn hermite_poly(f: &AnalyticSeries, zeros: &BoundaryZeroSet) -> Result<ComplexPoly> {
    let rat = f.as_rational().ok_or(Error::UnsupportedSource)?;
    // Nodes with repetitions, plus the Taylor data per distinct node.
    let mut nodes: Vec<Complex64> = Vec::new();
    let mut jets: Vec<Vec<Complex64>> = Vec::new();
    let mut node_block: Vec<usize> = Vec::new(); // block index per node slot
    for (zeta, m) in zeros.zeros() {
        let t = rat
            .taylor_at(zeta.value(), m - 1)
            .map_err(|_| Error::SingularAtBoundary {
                location: format!("{}", zeta.value()),
            })?;
        let block = jets.len();
        jets.push(t);
        for _ in 0..*m {
            nodes.push(zeta.value());
            node_block.push(block);
        }
    }
    let n = nodes.len();
    // dd[j] holds the order-j column of the divided-difference table.
    let mut table: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let col0: Vec<Complex64> = (0..n).map(|i| jets[node_block[i]][0]).collect();
    table.push(col0);
    for j in 1..n {
        let mut col = Vec::with_capacity(n - j);
        for i in 0..n - j {
            if nodes[i + j] == nodes[i] {
                // Same block: confluent entry is the Taylor coefficient.
                col.push(jets[node_block[i]][j]);
            } else {
                let prev = &table[j - 1];
                col.push((prev[i + 1] - prev[i]) / (nodes[i + j] - nodes[i]));
            }
        }
        table.push(col);
    }
    // Expand the Newton form.
    let mut p = ComplexPoly::zero();
    let mut basis = ComplexPoly::one();
    for (j, col) in table.iter().enumerate() {
        p = p.add(&basis.scale(col[0]));
        if j + 1 < n {
            basis = basis.mul(&ComplexPoly::from_coeffs(vec![
                -nodes[j],
                Complex64::new(1.0, 0.0),
            ]));
        }
    }
    Ok(p)
}

/// The decomposition `f = a0 g + p` with `p` of degree < N and `g` in H2.
#[derive(Clone, Debug)]
pub struct HbDecomposition {
    pub g: AnalyticSeries,
    pub p: ComplexPoly,
    pub a0: ComplexPoly,
}

/// Decompose `f` along the boundary zeros of the pair. The polynomial part
/// is the jet interpolant; the quotient is carried out on the rational
/// numerator, where each division is exact because the numerator vanishes to
/// the right order at the zero.
pub fn decompose(f: &AnalyticSeries, pair: &RationalPair) -> Result<HbDecomposition> {
    let rat = f.as_rational().ok_or(Error::UnsupportedSource)?;
    let p = hermite_poly(f, pair.zeros())?;
    let mut num = rat.num().sub(&p.mul(rat.den()));
    let scale = num.coeff_scale().max(rat.num().coeff_scale()).max(1e-300);
    for (zeta, m) in pair.zeros().zeros() {
        for _ in 0..*m {
            let (q, rem) = num.divide_linear(zeta.value());
            if rem.norm() > tol::JET_RESIDUAL_TOL * scale {
                return Err(Error::JetMismatch {
                    residual: rem.norm() / scale,
                    location: format!("{}", zeta.value()),
                });
            }
            num = q;
        }
    }
    let g_rat = RationalFn::new_unchecked(num, rat.den().clone());
    let g = AnalyticSeries::from_rational(&g_rat)?;
    Ok(HbDecomposition {
        g,
        p,
        a0: pair.a0(),
    })
}

/// `sqrt(|g|_H2^2 + |p|_H2^2)`, the equivalent H(b) norm of the decomposed
/// function.
pub fn hb_norm(d: &HbDecomposition) -> f64 {
    (d.g.h2_norm().powi(2) + d.p.h2_norm().powi(2)).sqrt()
}

/// Bound on how much the truncated tail of `g` can move `hb_norm`.
pub fn hb_norm_error(d: &HbDecomposition) -> f64 {
    let with_tail = ((d.g.h2_norm() + d.g.tail_bound()).powi(2) + d.p.h2_norm().powi(2)).sqrt();
    with_tail - hb_norm(d)
}

/// Normalized kernel Gram matrix with its eigenvalue range.
#[derive(Clone, Debug)]
pub struct GramReport {
    pub matrix: Vec<Vec<Complex64>>,
    pub min_eig: f64,
    pub max_eig: f64,
    /// Kernel norms `|k_i| = sqrt(k^b(lambda_i, lambda_i))`.
    pub diag_norms: Vec<f64>,
}

/// Gram matrix `G_ij = k^b(lambda_j, lambda_i) / (|k_i| |k_j|)` with
/// eigenvalue extremes from a dense Hermitian solver.
pub fn gram(pair: &RationalPair, seq: &DiskSequence) -> Result<GramReport> {
    let n = seq.len();
    if n == 0 {
        return Err(Error::EmptyInput("gram of empty sequence".into()));
    }
    let pts = seq.points();
    let norms: Vec<f64> = pts
        .iter()
        .map(|p| kernel_kb(pair, p, p).re.max(0.0).sqrt())
        .collect();
    if norms.iter().any(|&x| x == 0.0) {
        return Err(Error::InvalidInput(
            "kernel norm vanishes at a sequence point".into(),
        ));
    }
    let mut matrix = vec![vec![Complex64::default(); n]; n];
    for i in 0..n {
        for j in 0..n {
            // <k_j, k_i> = k^b_{lambda_j}(lambda_i).
            matrix[i][j] = kernel_kb(pair, &pts[j], &pts[i]) / (norms[i] * norms[j]);
        }
    }
    let m = DMatrix::from_fn(n, n, |i, j| matrix[i][j]);
    // Hermitian by construction; enforce exactly to keep the solver honest.
    let m = (m.clone() + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eigs = m.symmetric_eigen().eigenvalues;
    let min_eig = eigs.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_eig = eigs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(GramReport {
        matrix,
        min_eig,
        max_eig,
        diag_norms: norms,
    })
}
