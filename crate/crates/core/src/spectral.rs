//! The matrix `A_alpha(G)` in floating point, its spectral radius and its
//! Perron vector.
//!
//! The eigensolver runs a short shifted power iteration to land near the
//! Perron vector, then polishes with Rayleigh quotient iteration. A positive
//! final eigenvector certifies that the eigenvalue found is the spectral
//! radius; otherwise the solver falls back to plain shifted power iteration.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::alpha::check_alpha;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{rational, to_f64, Rational};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITERS: usize = 100_000;

/// `A_alpha(G)` with exact alpha and floating-point entries.
#[derive(Clone, Debug)]
pub struct AlphaMatrix {
    pub alpha: Rational,
    pub entries: DMatrix<f64>,
}

impl AlphaMatrix {
    pub fn order(&self) -> usize {
        self.entries.nrows()
    }
}

pub fn alpha_matrix(g: &Graph, alpha: &Rational) -> Result<AlphaMatrix> {
    check_alpha(alpha)?;
    let a = to_f64(alpha);
    let n = g.order();
    let mut entries = DMatrix::zeros(n, n);
    for v in 0..n {
        entries[(v, v)] = a * g.degree(v) as f64;
        for &w in g.neighbors(v) {
            entries[(v, w)] = 1.0 - a;
        }
    }
    Ok(AlphaMatrix { alpha: alpha.clone(), entries })
}

#[derive(Clone, Copy, Debug)]
pub struct SpectralOptions {
    pub tol: f64,
    pub max_iters: usize,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions { tol: DEFAULT_TOL, max_iters: DEFAULT_MAX_ITERS }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralResult {
    pub radius: f64,
    /// Positive unit eigenvector indexed by vertex.
    pub perron: Vec<f64>,
    pub iterations: usize,
    /// `max_v |(A x - radius x)_v|`.
    pub residual: f64,
}

impl SpectralResult {
    /// Bound on `|radius - rho|` for a symmetric matrix: the 2-norm of the
    /// residual vector, which is at most `sqrt(n)` times its max-norm.
    pub fn error_bound(&self) -> f64 {
        (self.perron.len() as f64).sqrt() * self.residual
    }
}

pub fn spectral_radius(g: &Graph, alpha: &Rational, tol: f64) -> Result<SpectralResult> {
    spectral_radius_with(g, alpha, SpectralOptions { tol, ..SpectralOptions::default() })
}

pub fn spectral_radius_with(g: &Graph, alpha: &Rational, opts: SpectralOptions) -> Result<SpectralResult> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let m = alpha_matrix(g, alpha)?.entries;
    let n = m.nrows();
    if n == 1 {
        return Ok(SpectralResult { radius: m[(0, 0)], perron: vec![1.0], iterations: 0, residual: 0.0 });
    }
    let shift = n as f64;
    let mut x = DVector::from_element(n, 1.0 / (n as f64).sqrt());
    let mut iterations = 0;

    // warm start: a few shifted power steps
    for _ in 0..50 {
        x = normalize(&m * &x + &x * shift);
        iterations += 1;
    }
    if let Some(res) = rayleigh_polish(&m, &x, opts, &mut iterations) {
        return Ok(res);
    }

    while iterations < opts.max_iters {
        x = normalize(&m * &x + &x * shift);
        iterations += 1;
        if iterations % 16 == 0 {
            let (rho, residual) = rayleigh_and_residual(&m, &x);
            if residual <= opts.tol {
                return Ok(finish(x, rho, residual, iterations));
            }
        }
    }
    Err(Error::NoConvergence(opts.max_iters))
}

fn normalize(v: DVector<f64>) -> DVector<f64> {
    let norm = v.norm();
    v / norm
}

fn rayleigh_and_residual(m: &DMatrix<f64>, x: &DVector<f64>) -> (f64, f64) {
    let mx = m * x;
    let rho = x.dot(&mx);
    let residual = (mx - x * rho).amax();
    (rho, residual)
}

/// Rayleigh quotient iteration from a positive start; `None` when it wanders
/// off to a non-Perron eigenvector or fails to converge quickly.
fn rayleigh_polish(m: &DMatrix<f64>, start: &DVector<f64>, opts: SpectralOptions, iterations: &mut usize) -> Option<SpectralResult> {
    let n = m.nrows();
    let mut x = start.clone();
    let (mut rho, mut residual) = rayleigh_and_residual(m, &x);
    for _ in 0..50 {
        if residual <= opts.tol * 1e-3 {
            break;
        }
        let shifted = m - DMatrix::identity(n, n) * rho;
        let Some(y) = shifted.lu().solve(&x) else { break };
        if !y.iter().all(|v| v.is_finite()) {
            break;
        }
        x = normalize(y);
        if x.sum() < 0.0 {
            x = -x;
        }
        *iterations += 1;
        let (r, res) = rayleigh_and_residual(m, &x);
        rho = r;
        residual = res;
    }
    let positive = x.iter().all(|&v| v > 0.0) || (-&x).iter().all(|&v| v > 0.0);
    (positive && residual <= opts.tol).then(|| finish(x, rho, residual, *iterations))
}

fn finish(x: DVector<f64>, radius: f64, residual: f64, iterations: usize) -> SpectralResult {
    let x = if x.sum() < 0.0 { -x } else { x };
    SpectralResult { radius, perron: x.iter().copied().collect(), iterations, residual }
}

/// `rho_Q(G) = 2 rho_(1/2)(G)`.
pub fn signless_laplacian_radius(g: &Graph, tol: f64) -> Result<f64> {
    Ok(2.0 * spectral_radius(g, &rational(1, 2), tol)?.radius)
}

/// `x^T A_alpha x` evaluated as the edge sum
/// `sum_(uv in E) alpha (x_u^2 + x_v^2) + 2 (1 - alpha) x_u x_v`.
pub fn rayleigh_quotient(g: &Graph, alpha: &Rational, x: &[f64]) -> Result<f64> {
    check_alpha(alpha)?;
    if x.len() != g.order() {
        return Err(Error::DimensionMismatch { expected: g.order(), got: x.len() });
    }
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::NotUnitVector(norm));
    }
    let a = to_f64(alpha);
    Ok(g
        .edges()
        .into_iter()
        .map(|(u, v)| a * (x[u] * x[u] + x[v] * x[v]) + 2.0 * (1.0 - a) * x[u] * x[v])
        .sum())
}

/// Largest `rho_alpha` over the components of a possibly disconnected graph.
pub fn spectral_radius_any(g: &Graph, alpha: &Rational, tol: f64) -> Result<f64> {
    let mut best = 0.0f64;
    for comp in g.components() {
        let h = g.induced_subgraph(&comp);
        best = best.max(spectral_radius(&h, alpha, tol)?.radius);
    }
    Ok(best)
}
