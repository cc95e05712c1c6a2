//! The constructive multiplier interpolant: decompose the Blaschke product
//! over the sequence, solve the two bounded problems, assemble F, and extend
//! by one more point.
//!
//! Run with: cargo run --example construct_interpolant

use hb_interp::*;
use num_complex::Complex64;

fn main() {
    let b = RationalFn::from_poly(ComplexPoly::from_real_coeffs(&[0.5, 0.5]));
    let pair = pythagorean_mate(&b).unwrap();

    let seq = DiskSequence::from_values(&[
        Complex64::new(0.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(-0.4, 0.3),
        Complex64::new(0.1, -0.7),
    ])
    .unwrap();
    let values = vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.5, -0.5),
        Complex64::new(-0.25, 0.0),
    ];

    let cert = construct_multiplier(&pair, &seq, &values).expect("construction");
    println!("value residuals: {:?}", cert.value_residuals);
    println!("boundary sup |F|: {:.6}", cert.boundary_sup);
    println!(
        "F in H(b): decomposition norm {:.6}, polynomial part {:?}",
        hb_norm(&cert.decomposition),
        cert.decomposition.p.coeffs()
    );

    // Extend the interpolant by one more point with the one-point formula.
    let lambda0 = UnitDiskPoint::new(Complex64::new(-0.2, -0.2)).unwrap();
    let v0 = Complex64::new(0.75, 0.0);
    let b_seq = BlaschkeProduct::new(seq.clone());
    let extended = add_point(&cert.f, &pair, &b_seq, &lambda0, v0).expect("extension");
    println!(
        "after add_point: F({:+.2}{:+.2}i) = {:.9} {:+.9}i (target {v0})",
        lambda0.value().re,
        lambda0.value().im,
        extended.eval(lambda0.value()).re,
        extended.eval(lambda0.value()).im
    );
    for (p, w) in seq.points().iter().zip(&values) {
        let err = (extended.eval(p.value()) - w).norm();
        println!(
            "  original node {:+.2}{:+.2}i preserved to {err:.2e}",
            p.value().re,
            p.value().im
        );
    }
}
