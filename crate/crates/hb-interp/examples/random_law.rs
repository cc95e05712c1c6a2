//! Steinhaus sequences with prescribed radii: exact exceedance
//! probabilities, three-series diagnostics, dyadic counts, and the zero-one
//! law experiment.
//!
//! Run with: cargo run --example random_law

use hb_interp::*;

fn main() {
    // Exact exceedance probability of X = (1-r^2)/|1 - r e^(i theta)|^(2M).
    println!("P(X > 1) = arccos(u)/pi:");
    for &(r, m) in &[(0.5, 1u32), (0.9, 2), (0.999, 3)] {
        println!("  r = {r}, M = {m}: {:.8}", exceedance_prob(r, m));
    }
    let (mean, var) = truncated_moments(0.9, 2).unwrap();
    println!("truncated moments at r = 0.9, M = 2: mean {mean:.8}, var {var:.8}");

    // Three-series diagnostics for a convergent and a boundary family.
    for (name, fam) in [
        ("geometric q = 1/2", RadiiFamily::geometric(1.0, 0.5, 32).unwrap()),
        ("power beta = 2M", RadiiFamily::power(1.0, 2.0, 32).unwrap()),
    ] {
        let rep = three_series(&fam, 1).unwrap();
        println!(
            "{name}: classes {:?}, partial sums ({:.4}, {:.4}, {:.4})",
            rep.classification.map(|c| c.label()),
            rep.partial_prob.last().unwrap(),
            rep.partial_mean.last().unwrap(),
            rep.partial_var.last().unwrap()
        );
    }

    // Dyadic annulus counts.
    let fam = RadiiFamily::geometric(1.0, 0.5, 10).unwrap();
    let rep = dyadic_counts(&fam, 1);
    println!(
        "dyadic counts (one per annulus for r_n = 1 - 2^-n): {:?}",
        rep.counts
    );
    println!(
        "  sum N_k^2 2^-k = {:.6}, sum N_k 2^(-k/2M) = {:.6}",
        rep.sum_carleson, rep.sum_interp
    );

    // The zero-one law at desk scale: convergent vs divergent radii.
    let conv = RadiiFamily::power(1.0, 4.0, 1 << 12).unwrap();
    let rep = zero_one_experiment(&conv, 1, 100, 1 << 12, 100.0, 42).unwrap();
    println!(
        "beta = 4 (convergent, {}): median sums {:?}, median change {:.2e}",
        rep.regime.label(),
        rep.median_sums,
        rep.median_rel_change
    );
    let div = RadiiFamily::power(1.0, 1.0, 1 << 12).unwrap();
    let rep = zero_one_experiment(&div, 1, 100, 1 << 12, 100.0, 42).unwrap();
    println!(
        "beta = 1 (divergent, {}): exceedance fractions {:?}",
        rep.regime.label(),
        rep.exceed_fractions
    );
}
