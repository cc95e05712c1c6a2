//! Higher-order local Dirichlet energies `D_zeta^N`: the coefficient route
//! through synthetic division, the independent quadrature route for Blaschke
//! products, and the exact product identity for `D_1^N(phi_lambda f)`.

use num_complex::Complex64;

use crate::disk::{BlaschkeProduct, UnitCirclePoint, UnitDiskPoint};
use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::quad;
use crate::rational::RationalFn;
use crate::space::AnalyticSeries;
use crate::tol;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn cpow(z: Complex64, k: usize) -> Complex64 {
    if k == 0 {
        one()
    } else {
        z.powu(k as u32)
    }
}

/// Coefficient route for a rational function: subtract the order-(N-1)
/// Taylor jet at `zeta`, divide the numerator by `(z - zeta)` N times, and
/// take the squared H2 norm of the quotient series.
pub(crate) fn local_dirichlet_rational(
    f: &RationalFn,
    zeta: Complex64,
    order: usize,
) -> Result<f64> {
    assert!(order >= 1, "Dirichlet order must be positive");
    let jets = f.taylor_at(zeta, order - 1)?;
    // Taylor polynomial in the monomial basis.
    let mut t = ComplexPoly::zero();
    let mut basis = ComplexPoly::one();
    let lin = ComplexPoly::from_coeffs(vec![-zeta, one()]);
    for &cj in &jets {
        t = t.add(&basis.scale(cj));
        basis = basis.mul(&lin);
    }
    let mut num = f.num().sub(&t.mul(f.den()));
    let scale = num.coeff_scale().max(f.num().coeff_scale()).max(1e-300);
    for _ in 0..order {
        let (q, rem) = num.divide_linear(zeta);
        if rem.norm() > tol::JET_RESIDUAL_TOL * scale {
            return Err(Error::JetMismatch {
                residual: rem.norm() / scale,
                location: format!("{zeta}"),
            });
        }
        num = q;
    }
    let h = RationalFn::new_unchecked(num, f.den().clone());
    let (coeffs, _tail) = h.series_with_tail(tol::SERIES_TAIL_REL)?;
    Ok(coeffs.iter().map(|c| c.norm_sqr()).sum())
}

/// `D_zeta^N(f)`: the squared quantity, matching the convention of the
/// closed forms it is checked against. Requires a source with exact boundary
/// jets (polynomial, rational, or finite Blaschke product).
pub fn local_dirichlet_norm(
    f: &AnalyticSeries,
    zeta: &UnitCirclePoint,
    order: usize,
) -> Result<f64> {
    let rat = f.as_rational().ok_or(Error::UnsupportedSource)?;
    local_dirichlet_rational(&rat, zeta.value(), order)
}

/// Quadrature route for Blaschke products:
/// `int |(B - T_(N-1)(B, zeta)) / (omega - zeta)^N|^2 dm(omega)` by the
/// doubling trapezoid rule. Near `zeta` the integrand switches to the local
/// Taylor series of `B`, which kills the catastrophic cancellation in
/// `B - T` where the quotient is removable.
pub fn dirichlet_blaschke_quadrature(
    b: &BlaschkeProduct,
    zeta: &UnitCirclePoint,
    order: usize,
    start_grid: usize,
) -> Result<f64> {
    assert!(order >= 1);
    let zv = zeta.value();
    let extra = 48usize;
    let coeffs = crate::disk::blaschke_taylor_at_boundary(b, zeta, order + extra)?;

    // Distance from zeta to the nearest pole 1/conj(lambda) bounds the local
    // series radius.
    let mut d_pole = f64::INFINITY;
    for p in b.zeros().points() {
        let l = p.value();
        if l.norm() > 0.0 {
            d_pole = d_pole.min((one() / l.conj() - zv).norm());
        }
    }
    let r_loc = (d_pole / 3.0).min(0.5);

    let zeros: Vec<Complex64> = b.zeros().values();
    let eval_b = |omega: Complex64| -> Complex64 {
        let mut acc = one();
        for &l in &zeros {
            if l.norm() == 0.0 {
                acc *= omega;
            } else {
                acc *= Complex64::new(l.norm(), 0.0) / l * (l - omega)
                    / (one() - l.conj() * omega);
            }
        }
        acc
    };

    let integrand = |phi: f64| -> f64 {
        let w_rel = Complex64::from_polar(1.0, phi);
        let omega = zv * w_rel;
        let t = omega - zv;
        if t.norm() < r_loc {
            // (B - T)/(omega - zeta)^N = sum_j c_(N+j) t^j.
            let mut acc = Complex64::default();
            let mut pw = one();
            for j in 0..=extra {
                acc += coeffs[order + j] * pw;
                pw *= t;
            }
            acc.norm_sqr()
        } else {
            let mut tval = Complex64::default();
            let mut pw = one();
            for &cj in coeffs.iter().take(order) {
                tval += cj * pw;
                pw *= t;
            }
            ((eval_b(omega) - tval) / cpow(t, order)).norm_sqr()
        }
    };

    quad::circle_mean_from(integrand, tol::QUAD_REL_TOL, start_grid.max(16), tol::QUAD_MAX_PANELS)
}

/// Both sides of the exact identity
/// `D_zeta^N(phi_lambda f) = (1-|lambda|^2)/|zeta-lambda|^(2N)
///   |sum_(j<N) f^(j)(zeta)/j! (zeta-conj-rotated factors)|^2 + D_zeta^N(f)`,
/// computed independently after rotating `zeta` to 1.
pub fn dirichlet_product_identity(
    f: &AnalyticSeries,
    lambda: &UnitDiskPoint,
    zeta: &UnitCirclePoint,
    order: usize,
) -> Result<(f64, f64)> {
    assert!(order >= 1);
    let rat = f.as_rational().ok_or(Error::UnsupportedSource)?;
    let zv = zeta.value();
    // Rotate so the boundary point is 1: g(w) = f(zeta w), mu = lambda/zeta.
    let g = rat.compose_rotation(zv);
    let mu = lambda.value() * zv.conj();

    // Left side: coefficient route on phi_mu * g.
    let phi = RationalFn::new_unchecked(
        ComplexPoly::from_coeffs(vec![-mu, one()]),
        ComplexPoly::from_coeffs(vec![one(), -mu.conj()]),
    );
    let lhs = local_dirichlet_rational(&phi.mul(&g), one(), order)?;

    // Right side: closed form plus D_1^N(g).
    let jets = g.taylor_at(one(), order - 1)?;
    let mut s = Complex64::default();
    for (j, &tj) in jets.iter().enumerate() {
        s += tj * cpow(one() - mu.conj(), j) * cpow(mu.conj(), order - 1 - j);
    }
    let lead = (1.0 - mu.norm_sqr()) / (one() - mu).norm().powi(2 * order as i32);
    let rhs = lead * s.norm_sqr() + local_dirichlet_rational(&g, one(), order)?;
    Ok((lhs, rhs))
}

/// Closed form `D_1^N(phi_lambda) = (1-|l|^2) |l|^(2(N-1)) / |1-l|^(2N)`.
pub fn dirichlet_factor_closed_form(lambda: Complex64, order: usize) -> f64 {
    (1.0 - lambda.norm_sqr()) * lambda.norm().powi(2 * (order as i32 - 1))
        / (one() - lambda).norm().powi(2 * order as i32)
}
