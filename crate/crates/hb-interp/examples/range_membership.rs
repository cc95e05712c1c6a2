//! Toeplitz-range membership: residual curves across doubling truncations
//! separate fast (member) functions from boundary-singular (non-member)
//! ones, and certify the intersection-of-ranges identity.
//!
//! Run with: cargo run --example range_membership

use hb_interp::*;
use num_complex::Complex64;

fn main() {
    let a1 = ComplexPoly::from_real_coeffs(&[-0.5, 0.5]); // (z-1)/2
    let a2 = ComplexPoly::from_real_coeffs(&[0.5, 0.5]); // (z+1)/2
    let a12 = a1.mul(&a2);

    // Member: product times a function analytic across the circle.
    let szego = RationalFn::new(
        ComplexPoly::one(),
        ComplexPoly::from_real_coeffs(&[1.0, -0.3]),
    )
    .unwrap();
    let member = AnalyticSeries::from_rational(
        &RationalFn::from_poly(a12.clone())
            .mul(&szego)
            .add(&RationalFn::from_poly(ComplexPoly::from_real_coeffs(&[1.0, 2.0]))),
    )
    .unwrap();

    // Non-member: series with a logarithmic boundary singularity at 1.
    let len = 20_000usize;
    let singular = AnalyticSeries::from_coeffs(
        (0..len)
            .map(|k| {
                if k == 0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    Complex64::new(1.0 / k as f64, 0.0)
                }
            })
            .collect(),
        (1.0 / len as f64).sqrt(),
    );

    for (name, f) in [("member", &member), ("singular-at-1", &singular)] {
        println!("{name}: residual across doubling truncations");
        for (sym, a) in [("conj(a1)", &a1), ("conj(a2)", &a2), ("conj(a1 a2)", &a12)] {
            let mut row = format!("  {sym}:");
            for t in [64usize, 128, 256, 512] {
                let r = range_membership_residual(a, f, t).unwrap();
                row.push_str(&format!(" {:.3e}", r.residual));
            }
            println!("{row}");
        }
    }

    // The Toeplitz action itself: T with symbol conj(a) applied to a preimage
    // reproduces the target exactly.
    let g = AnalyticSeries::from_coeffs(
        vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(-2.0, 0.5),
            Complex64::new(0.5, 0.0),
        ],
        0.0,
    );
    let f = toeplitz_apply(&a1, &g);
    let back = range_membership_residual(&a1, &f, 32).unwrap();
    println!(
        "toeplitz_apply followed by the membership probe: residual {:.2e}, rank deficient: {}",
        back.residual, back.rank_deficient
    );
}
