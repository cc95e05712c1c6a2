//! Boundary behavior of a finite Blaschke product under the Ahern-Clark
//! condition: Taylor data at a boundary point and stability of the radial
//! derivatives as zeros are appended.
//!
//! Run with: cargo run --example blaschke_boundary

use hb_interp::*;
use num_complex::Complex64;

fn main() {
    // Zeros accumulating at -1 geometrically; evaluated at zeta = +1 the
    // Ahern-Clark sums of every order stay finite.
    let zeros: Vec<Complex64> = (1..=64)
        .map(|k| Complex64::new(-(1.0 - 0.5 * 0.62f64.powi(k)), 0.0))
        .collect();
    let seq = DiskSequence::from_values(&zeros).expect("interior points");
    let zeta = UnitCirclePoint::from_angle(0.0);
    let order = 2;

    for n in [0usize, 1, 2] {
        println!(
            "Ahern-Clark sum, order {n}: {:.6}",
            ahern_clark_sum(&seq, &zeta, n)
        );
    }

    let b = BlaschkeProduct::new(seq);
    let taylor = blaschke_taylor_at_boundary(&b, &zeta, order).expect("taylor data");
    println!("Taylor coefficients of B at zeta = 1:");
    for (j, c) in taylor.iter().enumerate() {
        println!("  c_{j} = {:+.10} {:+.10}i  (|c_{j}| = {:.10})", c.re, c.im, c.norm());
    }

    // Radial derivative profiles stabilize as the zero count doubles.
    let r_grid: Vec<f64> = (0..65).map(|i| i as f64 / 64.0).collect();
    for j in 0..=order {
        let d32 = blaschke_radial_derivatives(&b.partial(32), &zeta, j, &r_grid).unwrap();
        let d64 = blaschke_radial_derivatives(&b, &zeta, j, &r_grid).unwrap();
        let sup: f64 = d64.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let change: f64 = d32
            .iter()
            .zip(&d64)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        println!(
            "order {j}: sup_r |B^({j})(r)| = {sup:.6}, change from 32 to 64 zeros = {change:.3e}"
        );
    }
}
