//! Construct the Pythagorean mate of a rational b and verify the pair.
//!
//! Run with: cargo run --example pythagorean_mate

use hb_interp::*;

fn main() {
    // b(z) = (1 - z)^2 / 4: contractive on the disk, |b| = 1 exactly at -1.
    let b = RationalFn::from_poly(ComplexPoly::from_real_coeffs(&[0.25, -0.5, 0.25]));
    let pair = pythagorean_mate(&b).expect("mate construction");

    println!("a numerator coefficients (ascending):");
    for (k, c) in pair.a().num().coeffs().iter().enumerate() {
        println!("  z^{k}: {:+.12} {:+.12}i", c.re, c.im);
    }
    println!("boundary zeros of a:");
    for (zeta, m) in pair.zeros().zeros() {
        println!(
            "  zeta = {:+.6} {:+.6}i  multiplicity {m}",
            zeta.value().re,
            zeta.value().im
        );
    }
    println!("N = {}, M = {}", pair.n_total(), pair.m_max());

    let report = verify_pair(&pair, 4096, 1e-9).expect("verification");
    println!(
        "identity max residual on 4096-point grid: {:.3e}",
        report.max_residual
    );
    println!(
        "outer: {}, a(0) > 0: {}, sup |a| on the circle: {:.12}",
        report.outer_ok, report.a0_positive, report.sup_a
    );

    let corona = corona_lower_bound(&pair, &DiskGridSpec::default());
    println!("corona lower bound min (|a|^2 + |b|^2) over the disk: {corona:.6}");
}
