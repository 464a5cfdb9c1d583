//! Limited-memory BFGS with Armijo backtracking.
//!
//! Deterministic full-batch minimizer for smooth convex objectives. The line
//! search only ever accepts a strict sufficient decrease, so the objective
//! value is non-increasing across iterations; the stopping rule is the
//! max-norm of the gradient.

use std::collections::VecDeque;

pub struct LbfgsOptions {
    /// Number of (s, y) correction pairs kept.
    pub memory: usize,
    /// Convergence threshold on the gradient max-norm.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for LbfgsOptions {
    fn default() -> Self {
        LbfgsOptions {
            memory: 10,
            tolerance: 1e-4,
            max_iterations: 200_000,
        }
    }
}

pub struct LbfgsOutcome {
    pub x: Vec<f64>,
    pub value: f64,
    pub gradient_max_norm: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Objective value at the end of every accepted iteration.
    pub trace: Vec<f64>,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

/// Minimizes `eval`, which must return the objective value and fill the
/// gradient buffer for the given point.
pub fn minimize<F>(mut eval: F, x0: Vec<f64>, opts: &LbfgsOptions) -> LbfgsOutcome
where
    F: FnMut(&[f64], &mut [f64]) -> f64,
{
    let n = x0.len();
    let mut x = x0;
    let mut g = vec![0.0; n];
    let mut f = eval(&x, &mut g);

    let mut s_hist: VecDeque<Vec<f64>> = VecDeque::new();
    let mut y_hist: VecDeque<Vec<f64>> = VecDeque::new();
    let mut rho_hist: VecDeque<f64> = VecDeque::new();

    let mut iterations = 0;
    let mut trace = Vec::new();
    let mut x_new = vec![0.0; n];
    let mut g_new = vec![0.0; n];

    while max_abs(&g) > opts.tolerance && iterations < opts.max_iterations {
        let mut direction = two_loop(&g, &s_hist, &y_hist, &rho_hist);
        let mut descent = dot(&direction, &g);
        if !descent.is_finite() || descent >= 0.0 {
            // fall back to steepest descent if the approximation degenerates
            direction = g.iter().map(|v| -v).collect();
            descent = -dot(&g, &g);
        }

        let mut alpha = if s_hist.is_empty() {
            (1.0 / max_abs(&g).max(1.0)).min(1.0)
        } else {
            1.0
        };
        const C1: f64 = 1e-4;
        let mut accepted = false;
        let mut f_new = f;
        for _ in 0..60 {
            for i in 0..n {
                x_new[i] = x[i] + alpha * direction[i];
            }
            f_new = eval(&x_new, &mut g_new);
            if f_new.is_finite() && f_new <= f + C1 * alpha * descent {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if !accepted {
            // no representable step decreases the objective any further
            break;
        }

        let s: Vec<f64> = (0..n).map(|i| x_new[i] - x[i]).collect();
        let y: Vec<f64> = (0..n).map(|i| g_new[i] - g[i]).collect();
        let sy = dot(&s, &y);
        if sy > 1e-12 {
            if s_hist.len() == opts.memory {
                s_hist.pop_front();
                y_hist.pop_front();
                rho_hist.pop_front();
            }
            s_hist.push_back(s);
            y_hist.push_back(y);
            rho_hist.push_back(1.0 / sy);
        }

        std::mem::swap(&mut x, &mut x_new);
        std::mem::swap(&mut g, &mut g_new);
        f = f_new;
        iterations += 1;
        trace.push(f);
    }

    let gradient_max_norm = max_abs(&g);
    LbfgsOutcome {
        converged: gradient_max_norm <= opts.tolerance,
        x,
        value: f,
        gradient_max_norm,
        iterations,
        trace,
    }
}

/// Two-loop recursion: returns `-H g` where `H` approximates the inverse
/// Hessian from the stored correction pairs.
fn two_loop(
    g: &[f64],
    s_hist: &VecDeque<Vec<f64>>,
    y_hist: &VecDeque<Vec<f64>>,
    rho_hist: &VecDeque<f64>,
) -> Vec<f64> {
    let mut q: Vec<f64> = g.to_vec();
    let k = s_hist.len();
    let mut alphas = vec![0.0; k];
    for i in (0..k).rev() {
        let alpha = rho_hist[i] * dot(&s_hist[i], &q);
        alphas[i] = alpha;
        for (qj, yj) in q.iter_mut().zip(&y_hist[i]) {
            *qj -= alpha * yj;
        }
    }
    if let (Some(s), Some(y)) = (s_hist.back(), y_hist.back()) {
        let gamma = dot(s, y) / dot(y, y);
        if gamma.is_finite() && gamma > 0.0 {
            for qj in q.iter_mut() {
                *qj *= gamma;
            }
        }
    }
    for i in 0..k {
        let beta = rho_hist[i] * dot(&y_hist[i], &q);
        for (qj, sj) in q.iter_mut().zip(&s_hist[i]) {
            *qj += (alphas[i] - beta) * sj;
        }
    }
    for qj in q.iter_mut() {
        *qj = -*qj;
    }
    q
}
