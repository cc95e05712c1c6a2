//! Quadrature and summation helpers.

use crate::error::{Error, Result};
use crate::tol;

/// Kahan-Neumaier compensated sum.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut s = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = s + v;
        if s.abs() >= v.abs() {
            comp += (s - t) + v;
        } else {
            comp += (v - t) + s;
        }
        s = t;
    }
    s + comp
}

/// Mean value of `f` over the circle, `(1/2pi) int f(theta) dtheta`, by the
/// periodic trapezoid rule with panel doubling. The grid carries a fixed
/// small offset so that doublings reuse all previous evaluations and no node
/// hits `theta = 0`.
pub fn circle_mean<F: FnMut(f64) -> f64>(
    f: F,
    rel_tol: f64,
    max_panels: usize,
) -> Result<f64> {
    circle_mean_from(f, rel_tol, 64, max_panels)
}

/// `circle_mean` with an explicit starting panel count.
pub fn circle_mean_from<F: FnMut(f64) -> f64>(
    mut f: F,
    rel_tol: f64,
    start_panels: usize,
    max_panels: usize,
) -> Result<f64> {
    let offset = std::f64::consts::PI / (2.0 * max_panels as f64);
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut n: usize = start_panels.next_power_of_two().max(16);
    let mut total = compensated_sum((0..n).map(|j| f(offset + two_pi * j as f64 / n as f64)));
    let mut prev_mean = total / n as f64;
    loop {
        // New nodes are the midpoints of the current grid.
        let add = compensated_sum(
            (0..n).map(|j| f(offset + two_pi * (j as f64 + 0.5) / n as f64)),
        );
        total += add;
        n *= 2;
        let mean = total / n as f64;
        if (mean - prev_mean).abs() <= rel_tol * mean.abs().max(1e-300) {
            return Ok(mean);
        }
        if n >= max_panels {
            return Err(Error::QuadratureNonConvergence {
                prev: prev_mean,
                last: mean,
            });
        }
        prev_mean = mean;
    }
}

/// Adaptive Simpson integration of `f` on `[a, b]` with an evaluation budget.
pub fn adaptive_simpson<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    abs_tol: f64,
    budget: usize,
) -> Result<f64> {
    fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }

    struct State<'a, F> {
        f: &'a mut F,
        evals: usize,
        budget: usize,
    }

    impl<F: FnMut(f64) -> f64> State<'_, F> {
        fn eval(&mut self, x: f64) -> Result<f64> {
            self.evals += 1;
            if self.evals > self.budget {
                return Err(Error::QuadratureNonConvergence {
                    prev: f64::NAN,
                    last: f64::NAN,
                });
            }
            Ok((self.f)(x))
        }

        #[allow(clippy::too_many_arguments)]
        fn recurse(
            &mut self,
            a: f64,
            b: f64,
            fa: f64,
            fm: f64,
            fb: f64,
            whole: f64,
            tol_here: f64,
            depth: usize,
        ) -> Result<f64> {
            let m = 0.5 * (a + b);
            let lm = 0.5 * (a + m);
            let rm = 0.5 * (m + b);
            let flm = self.eval(lm)?;
            let frm = self.eval(rm)?;
            let left = simpson(fa, flm, fm, m - a);
            let right = simpson(fm, frm, fb, b - m);
            let delta = left + right - whole;
            if depth == 0 || delta.abs() <= 15.0 * tol_here {
                return Ok(left + right + delta / 15.0);
            }
            let l = self.recurse(a, m, fa, flm, fm, left, 0.5 * tol_here, depth - 1)?;
            let r = self.recurse(m, b, fm, frm, fb, right, 0.5 * tol_here, depth - 1)?;
            Ok(l + r)
        }
    }

    if a == b {
        return Ok(0.0);
    }
    let mut st = State { f, evals: 0, budget };
    let fa = st.eval(a)?;
    let m = 0.5 * (a + b);
    let fm = st.eval(m)?;
    let fb = st.eval(b)?;
    let whole = simpson(fa, fm, fb, b - a);
    st.recurse(a, b, fa, fm, fb, whole, abs_tol, 48)
}

/// Default circle quadrature with crate tolerances.
pub fn circle_mean_default<F: FnMut(f64) -> f64>(f: F) -> Result<f64> {
    circle_mean(f, tol::QUAD_REL_TOL, tol::QUAD_MAX_PANELS)
}
