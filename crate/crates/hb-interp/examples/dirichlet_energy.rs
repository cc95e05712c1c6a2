//! Local Dirichlet energies by three routes: the closed form for elementary
//! factors, synthetic division on coefficients, and circle quadrature.
//!
//! Run with: cargo run --example dirichlet_energy

use hb_interp::*;
use num_complex::Complex64;

fn main() {
    let zeta = UnitCirclePoint::from_angle(0.0);
    let lambda = Complex64::new(0.5, 0.2);

    println!("single factor at lambda = {:.2} + {:.2}i:", lambda.re, lambda.im);
    for order in 1..=3usize {
        let closed = dirichlet_factor_closed_form(lambda, order);
        let phi = RationalFn::new(
            ComplexPoly::from_coeffs(vec![-lambda, Complex64::new(1.0, 0.0)]),
            ComplexPoly::from_coeffs(vec![Complex64::new(1.0, 0.0), -lambda.conj()]),
        )
        .unwrap();
        let coeff =
            local_dirichlet_norm(&AnalyticSeries::from_rational(&phi).unwrap(), &zeta, order)
                .unwrap();
        let b = BlaschkeProduct::new(DiskSequence::from_values(&[lambda]).unwrap());
        let quad = dirichlet_blaschke_quadrature(&b, &zeta, order, 64).unwrap();
        println!(
            "  N = {order}: closed form {closed:.12}, coefficients {coeff:.12}, quadrature {quad:.12}"
        );
    }

    // The exact identity for the energy of a product phi_lambda * f.
    let f = AnalyticSeries::from_poly(ComplexPoly::from_real_coeffs(&[1.0, -0.5, 0.25]));
    let l = UnitDiskPoint::new(Complex64::new(0.3, -0.4)).unwrap();
    for order in 1..=3usize {
        let (lhs, rhs) = dirichlet_product_identity(&f, &l, &zeta, order).unwrap();
        println!(
            "product identity, N = {order}: lhs {lhs:.12} vs rhs {rhs:.12} (gap {:.2e})",
            (lhs - rhs).abs()
        );
    }
}
