//! Exhaustive searches: extremal trees and spine arrangements.

use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::ClaimId;
use crate::error::{Error, Result};
use crate::generators::{
    caterpillar_from_spine, labeled_tree_by_rank, labeled_tree_count, SpineSequence,
};
use crate::graph::{DegreeSequence, Graph};
use crate::indices::{albertson_irr, sigma};

use super::record::{ClaimRecord, Params, Value};

pub const MAX_EXTREMAL_N: usize = 9;
pub const MAX_HY1_LEN: usize = 8;

/// Extremal irr and sigma over all labeled trees of one order, each with the
/// sorted degree sequence of the lowest-ranked tree attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalTrees {
    pub n: usize,
    pub trees: u64,
    pub max_irr: u64,
    pub argmax_irr_degseq: Vec<usize>,
    pub min_irr: u64,
    pub argmin_irr_degseq: Vec<usize>,
    pub max_sigma: u64,
    pub argmax_sigma_degseq: Vec<usize>,
    pub min_sigma: u64,
    pub argmin_sigma_degseq: Vec<usize>,
}

/// Running extrema as `(value, rank)`; ties resolve to the lowest rank so
/// the parallel reduction is order independent.
#[derive(Clone, Copy)]
struct Extremes {
    max: (u64, u64),
    min: (u64, u64),
}

impl Extremes {
    fn single(value: u64, rank: u64) -> Self {
        Extremes {
            max: (value, rank),
            min: (value, rank),
        }
    }

    fn merge(self, other: Self) -> Self {
        let max = if other.max.0 > self.max.0
            || (other.max.0 == self.max.0 && other.max.1 < self.max.1)
        {
            other.max
        } else {
            self.max
        };
        let min = if other.min.0 < self.min.0
            || (other.min.0 == self.min.0 && other.min.1 < self.min.1)
        {
            other.min
        } else {
            self.min
        };
        Extremes { max, min }
    }
}

pub fn extremal_trees(n: usize) -> Result<ExtremalTrees> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "extremal search needs n >= 2, got {n}"
        )));
    }
    if n > MAX_EXTREMAL_N {
        return Err(Error::CapExceeded {
            what: "extremal tree order",
            cap: MAX_EXTREMAL_N,
            got: n,
        });
    }
    let trees = labeled_tree_count(n);
    let (irr, sig) = (0..trees)
        .into_par_iter()
        .map(|rank| {
            let t = labeled_tree_by_rank(n, rank).expect("rank in range");
            (
                Extremes::single(albertson_irr(&t), rank),
                Extremes::single(sigma(&t), rank),
            )
        })
        .reduce_with(|a, b| (a.0.merge(b.0), a.1.merge(b.1)))
        .expect("at least one tree");

    let degseq = |rank: u64| -> Vec<usize> {
        labeled_tree_by_rank(n, rank)
            .expect("rank in range")
            .degree_sequence()
            .sorted_desc()
            .0
    };
    Ok(ExtremalTrees {
        n,
        trees,
        max_irr: irr.max.0,
        argmax_irr_degseq: degseq(irr.max.1),
        min_irr: irr.min.0,
        argmin_irr_degseq: degseq(irr.min.1),
        max_sigma: sig.max.0,
        argmax_sigma_degseq: degseq(sig.max.1),
        min_sigma: sig.min.0,
        argmin_sigma_degseq: degseq(sig.min.1),
    })
}

/// Rearranges `v` into the next lexicographic permutation; false after the last.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Distinct arrangements of `values` in lexicographic order.
pub fn distinct_permutations(values: &[usize]) -> Vec<Vec<usize>> {
    let mut current = values.to_vec();
    current.sort_unstable();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

/// Direct irr of the caterpillar with spine degrees `arrangement`, or `None`
/// when the arrangement is not realizable.
pub fn spine_irr(arrangement: &[usize]) -> Option<u64> {
    let seq = SpineSequence::new(arrangement.to_vec()).ok()?;
    Some(albertson_irr(&caterpillar_from_spine(&seq)))
}

pub fn spine_sigma(arrangement: &[usize]) -> Option<u64> {
    let seq = SpineSequence::new(arrangement.to_vec()).ok()?;
    Some(sigma(&caterpillar_from_spine(&seq)))
}

/// Min and max direct irr over the realizable arrangements of a multiset,
/// each with the first arrangement (lexicographically) attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementExtremes {
    pub min: u64,
    pub argmin: Vec<usize>,
    pub max: u64,
    pub argmax: Vec<usize>,
    pub realizable: usize,
}

pub fn arrangement_extremes(values: &[usize]) -> Option<ArrangementExtremes> {
    let mut best: Option<ArrangementExtremes> = None;
    for p in distinct_permutations(values) {
        let Some(irr) = spine_irr(&p) else { continue };
        match &mut best {
            None => {
                best = Some(ArrangementExtremes {
                    min: irr,
                    argmin: p.clone(),
                    max: irr,
                    argmax: p,
                    realizable: 1,
                })
            }
            Some(b) => {
                b.realizable += 1;
                if irr < b.min {
                    b.min = irr;
                    b.argmin = p.clone();
                }
                if irr > b.max {
                    b.max = irr;
                    b.argmax = p;
                }
            }
        }
    }
    best
}

/// The end-placement pattern `d_n > d_1 > ... > d_2 > d_{n-1}`: largest at
/// the last position, second largest at the first, the two smallest at
/// positions 2 and n-1, the rest descending from position 3.
pub fn hy1_pattern(values: &[usize]) -> Vec<usize> {
    let mut s = values.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    let k = s.len();
    match k {
        0 | 1 => s,
        2 => vec![s[1], s[0]],
        // positions 2 and n-1 coincide
        3 => vec![s[1], s[2], s[0]],
        _ => {
            let mut p = vec![0; k];
            p[k - 1] = s[0];
            p[0] = s[1];
            p[1] = s[k - 2];
            p[k - 2] = s[k - 1];
            for (offset, &v) in s[2..k - 2].iter().enumerate() {
                p[2 + offset] = v;
            }
            p
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Hy1Outcome {
    pub record: ClaimRecord,
    pub pattern: Vec<usize>,
    pub pattern_irr: Option<u64>,
    pub max_irr: u64,
    /// First arrangement (lexicographically) attaining the maximum.
    pub argmax: Vec<usize>,
    pub realizable: usize,
}

const SPINE_NAMES: [&str; MAX_HY1_LEN] = ["d1", "d2", "d3", "d4", "d5", "d6", "d7", "d8"];

/// Whether the end-placement pattern maximizes irr among all realizable
/// arrangements of the spine-degree multiset `values`.
pub fn check_hy1(values: &[usize]) -> Result<Hy1Outcome> {
    if values.len() < 2 {
        return Err(Error::invalid(
            "hypothesis check needs at least two spine degrees",
        ));
    }
    if values.len() > MAX_HY1_LEN {
        return Err(Error::CapExceeded {
            what: "spine length for arrangement search",
            cap: MAX_HY1_LEN,
            got: values.len(),
        });
    }
    let extremes = arrangement_extremes(values)
        .ok_or_else(|| Error::invalid("no arrangement of the spine degrees is realizable"))?;
    let pattern = hy1_pattern(values);
    let pattern_irr = spine_irr(&pattern);

    let sorted = DegreeSequence(values.to_vec()).sorted_desc();
    let params = Params(
        sorted
            .values()
            .iter()
            .enumerate()
            .map(|(i, &d)| (SPINE_NAMES[i], d as i64))
            .collect(),
    );
    let record = match pattern_irr {
        Some(irr) => ClaimRecord::exact(ClaimId::Hy1Order, params, irr as i64, extremes.max as i64),
        None => ClaimRecord::unverifiable(
            ClaimId::Hy1Order,
            params,
            Value::Missing,
            Value::Int(extremes.max as i64),
        ),
    };
    Ok(Hy1Outcome {
        record,
        pattern,
        pattern_irr,
        max_irr: extremes.max,
        argmax: extremes.argmax,
        realizable: extremes.realizable,
    })
}

/// Rebuilds the witness tree for a rank, for callers that want the graph.
pub fn tree_for_rank(n: usize, rank: u64) -> Result<Graph> {
    labeled_tree_by_rank(n, rank)
}
