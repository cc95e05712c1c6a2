//! Minimal-norm bounded interpolation: the Pick level by bisection and a
//! rational solution from the Schur recursion.
//!
//! Run with: cargo run --example pick_solver

use hb_interp::*;
use num_complex::Complex64;

fn main() {
    let nodes = DiskSequence::from_values(&[
        Complex64::new(0.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(-0.3, 0.4),
        Complex64::new(0.2, -0.6),
    ])
    .unwrap();
    let targets = vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.5),
        Complex64::new(-0.5, 0.0),
        Complex64::new(0.25, 0.25),
    ];

    let sol = np_solve(&nodes, &targets).expect("solver");
    println!("minimal level t* = {:.12}", sol.t_star);
    println!("interpolation residuals:");
    for (p, w) in nodes.points().iter().zip(&targets) {
        let err = (sol.chain.eval(p.value()) - w).norm();
        println!(
            "  f({:+.2}{:+.2}i) - target: {err:.2e}",
            p.value().re,
            p.value().im
        );
    }
    println!(
        "boundary sup on a 4096 grid: {:.12} (certified <= t*(1+1e-5) = {:.12})",
        sol.chain.sup_boundary(4096),
        sol.t_star * (1.0 + 1e-5)
    );
    println!(
        "rational solution degree: num {}, den {}",
        sol.f.num().degree().unwrap_or(0),
        sol.f.den().degree().unwrap_or(0)
    );

    // Sharpness: the Pick matrix flips feasibility across t*.
    for factor in [1.0 - 1e-6, 1.0 + 1e-6] {
        let p = PickProblem::new(nodes.clone(), targets.clone(), sol.t_star * factor).unwrap();
        println!(
            "feasible at t* x {factor}: {}",
            pick_feasible(&p).unwrap()
        );
    }
}
