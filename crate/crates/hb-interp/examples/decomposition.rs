//! The decomposition f = a0 g + p of a function in H(b), its norm, and the
//! kernel Gram diagnostics.
//!
//! Run with: cargo run --example decomposition

use hb_interp::*;
use num_complex::Complex64;

fn main() {
    let b = RationalFn::from_poly(ComplexPoly::from_real_coeffs(&[0.5, 0.5]));
    let pair = pythagorean_mate(&b).unwrap();
    println!(
        "pair: b = (1+z)/2, a = (1-z)/2, boundary zero at 1 of multiplicity {}",
        pair.m_max()
    );

    // A rational function with poles away from the closed disk.
    let f = RationalFn::new(
        ComplexPoly::from_real_coeffs(&[1.0, 2.0]),
        ComplexPoly::from_real_coeffs(&[1.0, -0.3]),
    )
    .unwrap();
    let series = AnalyticSeries::from_rational(&f).unwrap();
    let d = decompose(&series, &pair).expect("decomposition");
    println!("p part (degree < N): {:?}", d.p.coeffs());
    println!(
        "g series: {} coefficients, tail bound {:.2e}",
        d.g.coeffs().len(),
        d.g.tail_bound()
    );
    println!("norm: {:.12} (+/- {:.2e})", hb_norm(&d), hb_norm_error(&d));

    // Reconstruction check on a few interior points.
    let g = d.g.as_rational().unwrap();
    for &z in &[Complex64::new(0.2, 0.1), Complex64::new(-0.6, 0.4)] {
        let recon = d.a0.eval(z) * g.eval(z) + d.p.eval(z);
        println!(
            "reconstruction at {:+.2}{:+.2}i: |error| = {:.2e}",
            z.re,
            z.im,
            (recon - f.eval(z)).norm()
        );
    }

    // Kernel values and the normalized Gram of a small sequence.
    let points = DiskSequence::from_values(&[
        Complex64::new(0.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(-0.2, 0.6),
    ])
    .unwrap();
    let rep = gram(&pair, &points).unwrap();
    println!(
        "gram over 3 points: min_eig {:.6}, max_eig {:.6}, kernel norms {:?}",
        rep.min_eig, rep.max_eig, rep.diag_norms
    );
}
