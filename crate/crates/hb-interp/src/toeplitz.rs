//! Toeplitz action with anti-analytic polynomial symbol and the range-norm
//! membership residual for `M(conj(a)) = T_(conj a) H2`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::space::AnalyticSeries;

/// `T_(conj a) g`: coefficient `k` of the result is
/// `sum_j conj(a_j) g_(k+j)`, exact for a polynomial symbol and a truncated
/// series.
pub fn toeplitz_apply(a: &ComplexPoly, g: &AnalyticSeries) -> AnalyticSeries {
    let d = a.coeffs().len();
    let n = g.coeffs().len();
    let mut out = vec![Complex64::default(); n];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut acc = Complex64::default();
        for j in 0..d {
            if k + j < n {
                acc += a.coeff(j).conj() * g.coeff(k + j);
            }
        }
        *slot = acc;
    }
    // The operator norm is at most sup |a| <= sum |a_j|.
    let a_l1: f64 = a.coeffs().iter().map(|c| c.norm()).sum();
    AnalyticSeries::from_coeffs(out, a_l1 * g.tail_bound())
}

/// Outcome of the least-squares membership probe.
#[derive(Clone, Debug)]
pub struct MembershipResidual {
    pub truncation: usize,
    pub residual: f64,
    /// Set when the symbol vanishes at the origin to some order, leaving
    /// free coordinates in the normal system.
    pub rank_deficient: bool,
}

/// `min_g |T_(conj a) g - f|` over `g` supported on coefficients
/// `0..=truncation`.
///
/// The anti-analytic symbol makes the truncated system upper triangular with
/// bandwidth `deg a`: rows `0..=truncation - s` (with `s` the valuation of
/// `a`) are solved exactly by back-substitution, and everything of `f` above
/// that is orthogonal to the truncated range. The residual is therefore the
/// l2 mass of `f` beyond row `truncation - s` plus the series tail bound.
pub fn range_membership_residual(
    a: &ComplexPoly,
    f: &AnalyticSeries,
    truncation: usize,
) -> Result<MembershipResidual> {
    let deg = a.degree().ok_or_else(|| Error::InvalidInput("zero symbol".into()))?;
    if truncation < deg + 1 {
        return Err(Error::InvalidInput(format!(
            "truncation {truncation} below deg a + 1 = {}",
            deg + 1
        )));
    }
    let scale = a.coeff_scale();
    let valuation = a
        .coeffs()
        .iter()
        .position(|c| c.norm() > 1e-12 * scale)
        .unwrap_or(0);
    let solvable_rows = truncation - valuation;
    let mut tail_sq = 0.0f64;
    for (k, c) in f.coeffs().iter().enumerate() {
        if k > solvable_rows {
            tail_sq += c.norm_sqr();
        }
    }
    let residual = (tail_sq + f.tail_bound().powi(2)).sqrt();
    Ok(MembershipResidual {
        truncation,
        residual,
        rank_deficient: valuation > 0,
    })
}

/// The minimal-support preimage that realizes the residual above: solves the
/// triangular system for `g` on `0..=truncation`.
pub fn range_preimage(
    a: &ComplexPoly,
    f: &AnalyticSeries,
    truncation: usize,
) -> Result<Vec<Complex64>> {
    let deg = a.degree().ok_or_else(|| Error::InvalidInput("zero symbol".into()))?;
    if truncation < deg + 1 {
        return Err(Error::InvalidInput("truncation below symbol degree".into()));
    }
    let scale = a.coeff_scale();
    let valuation = a
        .coeffs()
        .iter()
        .position(|c| c.norm() > 1e-12 * scale)
        .unwrap_or(0);
    let pivot = a.coeff(valuation).conj();
    let mut g = vec![Complex64::default(); truncation + 1];
    // Row k determines g_(k + valuation); solve from the top row down.
    for k in (0..=truncation - valuation).rev() {
        let mut acc = f.coeff(k);
        for j in valuation + 1..=deg {
            if k + j <= truncation {
                acc -= a.coeff(j).conj() * g[k + j];
            }
        }
        g[k + valuation] = acc / pivot;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn series(coeffs: &[f64]) -> AnalyticSeries {
        AnalyticSeries::from_coeffs(coeffs.iter().map(|&x| c(x, 0.0)).collect(), 0.0)
    }

    #[test]
    fn identity_symbol() {
        let g = series(&[1.0, 2.0, 3.0]);
        let out = toeplitz_apply(&ComplexPoly::one(), &g);
        assert_eq!(out.coeffs(), g.coeffs());
    }

    #[test]
    fn constant_from_affine_symbol() {
        // a = (z-1)/2: (T_conj(a) 1)_0 = conj(a_0) = -1/2.
        let a = ComplexPoly::from_real_coeffs(&[-0.5, 0.5]);
        let out = toeplitz_apply(&a, &series(&[1.0]));
        assert_relative_eq!(out.coeff(0).re, -0.5);
    }

    #[test]
    fn shift_symbol_shifts_down() {
        // a = z: T_(conj z)(1 + z) = 1.
        let a = ComplexPoly::monomial(1);
        let out = toeplitz_apply(&a, &series(&[1.0, 1.0]));
        assert_relative_eq!(out.coeff(0).re, 1.0);
        assert!(out.coeff(1).norm() < 1e-15);
    }

    #[test]
    fn exact_preimage_has_zero_residual() {
        let a = ComplexPoly::from_real_coeffs(&[-0.5, 0.5]);
        let g = series(&[1.0, -2.0, 0.5, 3.0]);
        let f = toeplitz_apply(&a, &g);
        let r = range_membership_residual(&a, &f, 16).unwrap();
        assert!(r.residual < 1e-12);
        assert!(!r.rank_deficient);
        // The reconstructed preimage reproduces f.
        let gg = range_preimage(&a, &f, 16).unwrap();
        let back = toeplitz_apply(&a, &AnalyticSeries::from_coeffs(gg, 0.0));
        for k in 0..4 {
            assert!((back.coeff(k) - f.coeff(k)).norm() < 1e-12);
        }
    }

    #[test]
    fn constant_function_is_member() {
        // 1 = (z-1)*0 + 1 sits in M(conj a) for a = (z-1)/2; the preimage is
        // the polynomial -2.
        let a = ComplexPoly::from_real_coeffs(&[-0.5, 0.5]);
        let f = series(&[1.0]);
        for truncation in [2usize, 4, 8] {
            let r = range_membership_residual(&a, &f, truncation).unwrap();
            assert!(r.residual < 1e-14, "truncation {truncation}");
        }
        let g = range_preimage(&a, &f, 8).unwrap();
        // g should be -2 (then zeros): conj(a0) g0 + conj(a1) g1 = 1.
        assert_relative_eq!(g[0].re, -2.0, epsilon = 1e-12);
    }

    #[test]
    fn slow_tail_floors_the_residual() {
        // f with coefficients 1/k has l2 tail ~ 1/sqrt(T) past any
        // truncation T; the residual cannot drop below it.
        let coeffs: Vec<Complex64> = (0..2048)
            .map(|k| c(if k == 0 { 0.0 } else { 1.0 / k as f64 }, 0.0))
            .collect();
        let f = AnalyticSeries::from_coeffs(coeffs, 0.0);
        let a = ComplexPoly::from_real_coeffs(&[-0.5, 0.5]);
        let r512 = range_membership_residual(&a, &f, 512).unwrap();
        let r1024 = range_membership_residual(&a, &f, 1024).unwrap();
        assert!(r512.residual > 1e-3);
        assert!(r1024.residual < r512.residual);
    }

    #[test]
    fn rank_deficiency_flagged() {
        let a = ComplexPoly::monomial(1);
        let f = series(&[1.0, 1.0]);
        let r = range_membership_residual(&a, &f, 8).unwrap();
        assert!(r.rank_deficient);
    }
}
