//! Definition-level index computation. Everything here is computed straight
//! from the graph and serves as ground truth for the closed forms.

mod bounds;
mod spectral;

pub use bounds::{
    albertson_upper_bound, bell_max_cs, lemma3_holds, max_edges, sigma_t_upper_bound,
};
pub use spectral::{cs_irregularity, spectral_radius, spectral_radius_with, PowerIteration};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Albertson irregularity: `sum over edges |d_u - d_v|`.
pub fn albertson_irr(g: &Graph) -> u64 {
    let d = g.degrees();
    g.edges()
        .iter()
        .map(|&(u, v)| d[u].abs_diff(d[v]) as u64)
        .sum()
}

/// Sigma index: `sum over edges (d_u - d_v)^2`.
pub fn sigma(g: &Graph) -> u64 {
    let d = g.degrees();
    g.edges()
        .iter()
        .map(|&(u, v)| (d[u].abs_diff(d[v]) as u64).pow(2))
        .sum()
}

pub fn zagreb_m1(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d as u64).pow(2)).sum()
}

pub fn zagreb_m2(g: &Graph) -> u64 {
    let d = g.degrees();
    g.edges()
        .iter()
        .map(|&(u, v)| d[u] as u64 * d[v] as u64)
        .sum()
}

/// `|d_u - d_v|` over all unordered vertex pairs, adjacent or not.
pub fn total_irregularity(g: &Graph) -> u64 {
    pairwise_sum(g, |x| x)
}

/// `(d_u - d_v)^2` over all unordered vertex pairs.
pub fn total_sigma(g: &Graph) -> u64 {
    pairwise_sum(g, |x| x * x)
}

fn pairwise_sum(g: &Graph, f: impl Fn(u64) -> u64) -> u64 {
    let d = g.degrees();
    let mut total = 0;
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            total += f(d[i].abs_diff(d[j]) as u64);
        }
    }
    total
}

/// Szekeres–Wilf number: the largest minimum degree over all subgraphs.
///
/// Repeatedly deletes a vertex of minimum remaining degree; the answer is
/// the largest minimum seen along the way.
pub fn szekeres_wilf(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut degree = g.degrees();
    let mut alive = vec![true; n];
    let mut best = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| degree[v])
            .expect("a vertex remains");
        best = best.max(degree[v]);
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
    }
    Ok(best)
}

/// All indices of one graph. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexBundle {
    pub irr: u64,
    pub sigma: u64,
    pub m1: u64,
    pub m2: u64,
    pub irr_total: u64,
    pub sigma_total: u64,
    pub szekeres_wilf: usize,
    pub spectral_radius: f64,
    pub cs_irregularity: f64,
}

impl IndexBundle {
    pub const FIELDS: [&'static str; 9] = [
        "irr",
        "sigma",
        "m1",
        "m2",
        "irr_total",
        "sigma_total",
        "szekeres_wilf",
        "spectral_radius",
        "cs_irregularity",
    ];

    pub fn compute(g: &Graph) -> Result<IndexBundle> {
        let lambda = spectral_radius(g)?;
        let (_, _, mean) = g.min_max_mean_degree()?;
        Ok(IndexBundle {
            irr: albertson_irr(g),
            sigma: sigma(g),
            m1: zagreb_m1(g),
            m2: zagreb_m2(g),
            irr_total: total_irregularity(g),
            sigma_total: total_sigma(g),
            szekeres_wilf: szekeres_wilf(g)?,
            spectral_radius: lambda,
            cs_irregularity: lambda - *mean.numer() as f64 / *mean.denom() as f64,
        })
    }

    /// Values as strings in field order; reals use 12 significant digits.
    pub fn values(&self) -> [String; 9] {
        [
            self.irr.to_string(),
            self.sigma.to_string(),
            self.m1.to_string(),
            self.m2.to_string(),
            self.irr_total.to_string(),
            self.sigma_total.to_string(),
            self.szekeres_wilf.to_string(),
            crate::format::real(self.spectral_radius),
            crate::format::real(self.cs_irregularity),
        ]
    }
}
