use crate::error::{Error, Result};
use crate::graph::Graph;

/// Stopping rule for the shifted power iteration.
#[derive(Debug, Clone, Copy)]
pub struct PowerIteration {
    /// Stop once successive Rayleigh quotients differ by less than this.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PowerIteration {
    fn default() -> Self {
        PowerIteration {
            tolerance: 1e-12,
            max_iterations: 1_000_000,
        }
    }
}

/// Largest adjacency eigenvalue.
pub fn spectral_radius(g: &Graph) -> Result<f64> {
    spectral_radius_with(g, PowerIteration::default())
}

/// Power iteration on `A + I` from the normalized all-ones vector.
///
/// The shift keeps the dominant eigenvalue strictly ahead of `-λ` on
/// bipartite graphs, where plain iteration on `A` oscillates.
pub fn spectral_radius_with(g: &Graph, params: PowerIteration) -> Result<f64> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.size() == 0 {
        return Ok(0.0);
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut previous = f64::NAN;
    for _ in 0..params.max_iterations {
        for v in 0..n {
            y[v] = x[v] + g.neighbors(v).iter().map(|&w| x[w]).sum::<f64>();
        }
        // x is unit length, so x.y is the Rayleigh quotient of A + I
        let rayleigh: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        if (rayleigh - previous).abs() < params.tolerance {
            return Ok(rayleigh - 1.0);
        }
        previous = rayleigh;
    }
    Err(Error::NoConvergence {
        iterations: params.max_iterations,
    })
}

/// Collatz–Sinogowitz irregularity `λ(G) - d̄(G)`.
pub fn cs_irregularity(g: &Graph) -> Result<f64> {
    let lambda = spectral_radius(g)?;
    Ok(lambda - 2.0 * g.size() as f64 / g.order() as f64)
}
