//! Bound expressions and extremal values evaluated on a graph or an order.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{albertson_irr, zagreb_m2};

/// `((Δ - δ) / sqrt(Δδ)) * sqrt(|E| * M2)`, an upper bound on irr for
/// connected graphs.
pub fn albertson_upper_bound(g: &Graph) -> Result<f64> {
    let (lo, hi) = lemma3_preconditions(g)?;
    // one square root of the exact ratio keeps perfect-square cases exact
    let gap = (hi - lo) as u128;
    let numer = gap * gap * g.size() as u128 * zagreb_m2(g) as u128;
    let denom = (hi * lo) as u128;
    Ok((numer as f64 / denom as f64).sqrt())
}

/// Whether irr is within [`albertson_upper_bound`], decided exactly on the
/// squared inequality `irr^2 * Δδ <= (Δ - δ)^2 * |E| * M2`.
pub fn lemma3_holds(g: &Graph) -> Result<bool> {
    let (lo, hi) = lemma3_preconditions(g)?;
    let irr = albertson_irr(g) as u128;
    let lhs = irr * irr * (hi as u128) * (lo as u128);
    let gap = (hi - lo) as u128;
    let rhs = gap * gap * g.size() as u128 * zagreb_m2(g) as u128;
    Ok(lhs <= rhs)
}

fn lemma3_preconditions(g: &Graph) -> Result<(usize, usize)> {
    if g.order() < 2 {
        return Err(Error::invalid("bound needs at least two vertices"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (lo, hi, _) = g.min_max_mean_degree()?;
    if lo == 0 {
        return Err(Error::Degenerate);
    }
    Ok((lo, hi))
}

/// Upper bound on total sigma for connected graphs of order `n >= 3`.
pub fn sigma_t_upper_bound(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(Error::invalid(format!(
            "total sigma bound needs n >= 3, got {n}"
        )));
    }
    let n = n as u64;
    let (a, b) = match n % 4 {
        0 | 3 => (n.div_ceil(4), 3 * n / 4),
        _ => (n / 4, (3 * n).div_ceil(4)),
    };
    Ok(a * b * (n - 1 - a).pow(2))
}

/// Maximum of `λ - d̄` over all graphs of order `n`:
/// `n/4 - 1/2`, plus `1/(4n)` for odd `n`.
pub fn bell_max_cs(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::invalid(format!("needs n >= 2, got {n}")));
    }
    let nf = n as f64;
    let base = nf / 4.0 - 0.5;
    Ok(if n.is_multiple_of(2) {
        base
    } else {
        base + 1.0 / (4.0 * nf)
    })
}

/// Maximum number of edges of a graph with `n` vertices and `c` components:
/// `(n - c)(n - c + 1) / 2`.
pub fn max_edges(n: usize, c: usize) -> Result<u64> {
    if c < 1 || c > n {
        return Err(Error::invalid(format!(
            "component count must lie in [1, n], got n={n}, c={c}"
        )));
    }
    let k = (n - c) as u64;
    Ok(k * (k + 1) / 2)
}
