//! The decision procedure: Carleson constant, boundary sums, and the verdict
//! for parametric families.
//!
//! Run with: cargo run --example decide_families

use hb_interp::*;

fn main() {
    let b = RationalFn::from_poly(ComplexPoly::from_real_coeffs(&[0.5, 0.5]));
    let pair = pythagorean_mate(&b).unwrap();

    let families = [
        (
            "geometric radii on the ray into the zero",
            SequenceFamily {
                radii: RadiiFamily::geometric(1.0, 0.5, 32).unwrap(),
                angles: AngleLaw::Fixed(vec![0.0]),
            },
        ),
        (
            "same radii rotated to the opposite ray",
            SequenceFamily {
                radii: RadiiFamily::geometric(1.0, 0.5, 32).unwrap(),
                angles: AngleLaw::Fixed(vec![std::f64::consts::PI]),
            },
        ),
        (
            "same radii with random angles (seed 42)",
            SequenceFamily {
                radii: RadiiFamily::geometric(1.0, 0.5, 32).unwrap(),
                angles: AngleLaw::Steinhaus { seed: 42 },
            },
        ),
        (
            "power radii, beta = 1, random angles",
            SequenceFamily {
                radii: RadiiFamily::power(1.0, 1.0, 32).unwrap(),
                angles: AngleLaw::Steinhaus { seed: 42 },
            },
        ),
    ];

    for (name, fam) in families {
        let seq = fam.generate().unwrap();
        let rep = decide(&pair, &seq).unwrap();
        println!("{name}:");
        println!(
            "  carleson delta {:.4e} (separation {:.4e})",
            rep.carleson.delta, rep.carleson.separation
        );
        for z in &rep.sums.per_zero {
            println!(
                "  sum at {:+.2}{:+.2}i (m = {}): last partial {:.4e}, class {:?}",
                z.zeta.re,
                z.zeta.im,
                z.multiplicity,
                z.partial_sums.last().unwrap(),
                z.classification.map(|c| c.label())
            );
        }
        println!("  verdict: {} ({})", rep.verdict.label(), rep.reason);
    }
}
