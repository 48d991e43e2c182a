//! Gauss-Legendre quadrature with graded panels and deterministic reduction.

use crate::cplx::{r, C};
use crate::error::{Error, Result};
use std::sync::OnceLock;

type Rule = (Vec<f64>, Vec<f64>);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> &'static Rule {
    static CACHE: OnceLock<Vec<OnceLock<Rule>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| (0..64).map(|_| OnceLock::new()).collect());
    cache[n].get_or_init(|| compute_gl(n))
}

fn compute_gl(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Chebyshev-based initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Value and derivative of the Legendre polynomial P_n at x.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Sum in a fixed pairwise tree order, independent of how the values
/// were produced (deterministic under thread scheduling).
pub fn tree_sum(values: &[C]) -> C {
    match values.len() {
        0 => r(0.0),
        1 => values[0],
        n => {
            let mid = n / 2;
            tree_sum(&values[..mid]) + tree_sum(&values[mid..])
        }
    }
}

/// Panel edges on [a, b], geometrically refined toward `a` so that
/// algebraic endpoint singularities converge at full Gauss order.
pub fn graded_edges(a: f64, b: f64, levels: usize) -> Vec<f64> {
    let mut edges = Vec::with_capacity(levels + 2);
    edges.push(a);
    for k in (0..=levels).rev() {
        edges.push(a + (b - a) * 0.5f64.powi(k as i32));
    }
    edges
}

/// Uniform panel edges of width at most `h`.
pub fn uniform_edges(a: f64, b: f64, h: f64) -> Vec<f64> {
    let n = ((b - a) / h).ceil().max(1.0) as usize;
    (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect()
}

/// Integrate a complex-valued function over consecutive panels with the
/// `m`-point Gauss rule on each. Panels evaluate in parallel; the final
/// reduction is a fixed pairwise tree, so the result does not depend on
/// scheduling.
pub fn integrate_panels<F>(f: &F, edges: &[f64], m: usize) -> Result<C>
where
    F: Fn(f64) -> Result<C> + Sync,
{
    use rayon::prelude::*;
    let (xs, ws) = gauss_legendre(m);
    let panels: Vec<(f64, f64)> = edges.windows(2).map(|p| (p[0], p[1])).collect();
    let vals: Vec<C> = panels
        .par_iter()
        .map(|&(a, b)| {
            let mid = 0.5 * (a + b);
            let half = 0.5 * (b - a);
            let mut acc = r(0.0);
            for (x, w) in xs.iter().zip(ws) {
                acc += f(mid + half * x)? * *w;
            }
            Ok(acc * half)
        })
        .collect::<Result<Vec<C>>>()?;
    Ok(tree_sum(&vals))
}

/// Integrate with one global refinement pass as the error certificate:
/// the result of doubled panels must agree to `rel_tol`.
pub fn integrate_certified<F>(f: &F, edges: &[f64], m: usize, rel_tol: f64) -> Result<C>
where
    F: Fn(f64) -> Result<C> + Sync,
{
    let coarse = integrate_panels(f, edges, m)?;
    let mut fine_edges = Vec::with_capacity(edges.len() * 2);
    for pair in edges.windows(2) {
        fine_edges.push(pair[0]);
        fine_edges.push(0.5 * (pair[0] + pair[1]));
    }
    fine_edges.push(*edges.last().unwrap());
    let fine = integrate_panels(f, &fine_edges, m)?;
    let scale = fine.norm().max(1e-300);
    if (fine - coarse).norm() > rel_tol * scale {
        return Err(Error::QuadratureFailure(format!(
            "refinement changed the value by {:.3e} (relative), above {rel_tol:.1e}",
            (fine - coarse).norm() / scale
        )));
    }
    Ok(fine)
}
