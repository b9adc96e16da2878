//! Published closed forms and hypotheses, transcribed as stated.
//!
//! Nothing here is corrected. Several expressions disagree with the direct
//! computation in [`crate::indices`]; the verify engine records where.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::SpineSequence;

/// Stable identifier of one claim. The string form keys the report schema.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    IrrCat,
    SigCat,
    SigKmn,
    SigDstar,
    IrrStar,
    SigTreeMax,
    SigTreeMin,
    IrrSpine,
    Hy1Order,
    HySig3,
    HySig4,
    IrrSeq4PyMax,
    IrrSeq4PyMin,
    IrrSeq4Hyp,
    IrrCnn,
    MaxCat,
    BellMax,
    SigtBound,
    IrrtGhal,
    Lem3Bound,
    MaxEdges,
    SigEx4,
    SigTreeProse,
    SigtTreeProse,
}

/// What the adjudication is expected to find for a claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    /// Every record must match.
    Exact,
    /// An inequality; every record must hold.
    Bound,
    /// Known to disagree with direct computation on part of its grid.
    Refuted,
    /// A conjecture under test; no outcome is assumed.
    Open,
    /// A stated constant with nothing to compute it from.
    Unverifiable,
}

impl ClaimId {
    pub const ALL: [ClaimId; 24] = [
        ClaimId::IrrCat,
        ClaimId::SigCat,
        ClaimId::SigKmn,
        ClaimId::SigDstar,
        ClaimId::IrrStar,
        ClaimId::SigTreeMax,
        ClaimId::SigTreeMin,
        ClaimId::IrrSpine,
        ClaimId::Hy1Order,
        ClaimId::HySig3,
        ClaimId::HySig4,
        ClaimId::IrrSeq4PyMax,
        ClaimId::IrrSeq4PyMin,
        ClaimId::IrrSeq4Hyp,
        ClaimId::IrrCnn,
        ClaimId::MaxCat,
        ClaimId::BellMax,
        ClaimId::SigtBound,
        ClaimId::IrrtGhal,
        ClaimId::Lem3Bound,
        ClaimId::MaxEdges,
        ClaimId::SigEx4,
        ClaimId::SigTreeProse,
        ClaimId::SigtTreeProse,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::IrrCat => "IRR-CAT",
            ClaimId::SigCat => "SIG-CAT",
            ClaimId::SigKmn => "SIG-KMN",
            ClaimId::SigDstar => "SIG-DSTAR",
            ClaimId::IrrStar => "IRR-STAR",
            ClaimId::SigTreeMax => "SIG-TREE-MAX",
            ClaimId::SigTreeMin => "SIG-TREE-MIN",
            ClaimId::IrrSpine => "IRR-SPINE",
            ClaimId::Hy1Order => "HY1-ORDER",
            ClaimId::HySig3 => "HY-SIG3",
            ClaimId::HySig4 => "HY-SIG4",
            ClaimId::IrrSeq4PyMax => "IRR-SEQ4-PY-MAX",
            ClaimId::IrrSeq4PyMin => "IRR-SEQ4-PY-MIN",
            ClaimId::IrrSeq4Hyp => "IRR-SEQ4-HYP",
            ClaimId::IrrCnn => "IRR-CNN",
            ClaimId::MaxCat => "MAX-CAT",
            ClaimId::BellMax => "BELL-MAX",
            ClaimId::SigtBound => "SIGT-BOUND",
            ClaimId::IrrtGhal => "IRRT-GHAL",
            ClaimId::Lem3Bound => "LEM3-BOUND",
            ClaimId::MaxEdges => "MAXEDGES",
            ClaimId::SigEx4 => "SIG-EX4",
            ClaimId::SigTreeProse => "SIG-TREE-PROSE",
            ClaimId::SigtTreeProse => "SIGT-TREE-PROSE",
        }
    }

    pub fn expectation(self) -> Expectation {
        use ClaimId::*;
        match self {
            IrrCat | SigKmn | SigDstar | IrrStar | SigTreeMin | IrrSpine | IrrSeq4PyMin
            | IrrSeq4Hyp | IrrCnn | BellMax | MaxEdges => Expectation::Exact,
            SigtBound | IrrtGhal | Lem3Bound => Expectation::Bound,
            SigCat | SigTreeMax | HySig3 | HySig4 | IrrSeq4PyMax | MaxCat => Expectation::Refuted,
            Hy1Order => Expectation::Open,
            SigEx4 | SigTreeProse | SigtTreeProse => Expectation::Unverifiable,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for ClaimId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

fn int(x: usize) -> i64 {
    x as i64
}

/// irr of the star `S_n`: `(n - 2)(n - 1)`.
pub fn irr_star_claimed(n: usize) -> Result<i64> {
    if n < 2 {
        return Err(Error::invalid(format!("star needs n >= 2, got {n}")));
    }
    Ok(int(n - 2) * int(n - 1))
}

/// irr of `C(n, m)`: `m(m+1)n - 2m + 2` for `n >= 3`, `m(m+1)n - 2m` for
/// `n` in `{1, 2}`.
pub fn irr_caterpillar_claimed(n: usize, m: usize) -> Result<i64> {
    if n < 1 || m < 1 {
        return Err(Error::invalid(format!(
            "caterpillar needs n >= 1 and m >= 1, got n={n}, m={m}"
        )));
    }
    let (n, m) = (int(n), int(m));
    let base = m * (m + 1) * n - 2 * m;
    Ok(if n >= 3 { base + 2 } else { base })
}

/// sigma of `C(n, m)`: `2m^3` for `n = 2`, `2m^3 + m - 2` for `n >= 3`.
pub fn sigma_caterpillar_claimed(n: usize, m: usize) -> Result<i64> {
    if n < 2 || m < 1 {
        return Err(Error::invalid(format!(
            "caterpillar sigma form needs n >= 2 and m >= 1, got n={n}, m={m}"
        )));
    }
    let m = int(m);
    Ok(if n == 2 {
        2 * m.pow(3)
    } else {
        2 * m.pow(3) + m - 2
    })
}

/// sigma of `K_{m,n}`: `mn(n - m)^2`.
pub fn sigma_complete_bipartite_claimed(m: usize, n: usize) -> Result<i64> {
    if m < 1 || n < 1 {
        return Err(Error::invalid(format!(
            "complete bipartite graph needs m, n >= 1, got ({m},{n})"
        )));
    }
    let (m, n) = (int(m), int(n));
    Ok(m * n * (n - m).pow(2))
}

/// sigma of the double star `S_{r,k}`: `(k-1)^3 + k^2 + (r-1)^3 + r^2 - 2kr`.
pub fn sigma_double_star_claimed(r: usize, k: usize) -> Result<i64> {
    if r < 1 || k < 2 {
        return Err(Error::invalid(format!(
            "double star needs r >= 1 and k >= 2, got r={r}, k={k}"
        )));
    }
    let (r, k) = (int(r), int(k));
    Ok((k - 1).pow(3) + k * k + (r - 1).pow(3) + r * r - 2 * k * r)
}

/// irr of a caterpillar with spine degrees `d_1..d_n`:
/// `(d_n-1)^2 + (d_1-1)^2 + sum_{i=2}^{n-1} (d_i-1)(d_i-2) + sum |d_i - d_{i+1}|`.
pub fn irr_spine_claimed(seq: &SpineSequence) -> Result<i64> {
    let d: Vec<i64> = seq.degrees().iter().map(|&x| int(x)).collect();
    let k = d.len();
    if k < 2 {
        return Err(Error::invalid(
            "spine formula needs at least two spine vertices",
        ));
    }
    let ends = (d[k - 1] - 1).pow(2) + (d[0] - 1).pow(2);
    let interior: i64 = d[1..k - 1].iter().map(|&x| (x - 1) * (x - 2)).sum();
    let steps: i64 = d.windows(2).map(|w| (w[0] - w[1]).abs()).sum();
    Ok(ends + interior + steps)
}

/// Three-term sigma hypothesis, evaluated on any triple:
/// `(d_1-1)^3 + sum_{i=1}^{3} (d_i-1)(d_i-2) + (d_3-1)^3`.
pub fn sigma_spine3_expr(d1: i64, d2: i64, d3: i64) -> i64 {
    let middle: i64 = [d1, d2, d3].iter().map(|&x| (x - 1) * (x - 2)).sum();
    (d1 - 1).pow(3) + middle + (d3 - 1).pow(3)
}

/// [`sigma_spine3_expr`] restricted to its stated domain `d3 >= d2 >= d1 >= 1`.
pub fn sigma_spine3_claimed(d1: i64, d2: i64, d3: i64) -> Result<i64> {
    if !(d1 >= 1 && d2 >= d1 && d3 >= d2) {
        return Err(Error::invalid(format!(
            "expected d3 >= d2 >= d1 >= 1, got ({d1},{d2},{d3})"
        )));
    }
    Ok(sigma_spine3_expr(d1, d2, d3))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seq4Sigma {
    pub value: i64,
    /// `d_1 > 0` and each term exceeds the previous by exactly one.
    pub condition_held: bool,
}

/// Four-term sigma hypothesis:
/// `sum d_i^3 + 2 sum d_i^2 + sum d_i - 2 sum_{i=1}^{3} d_i d_{i+1}`.
pub fn sigma_seq4_claimed(d: [i64; 4]) -> Seq4Sigma {
    let cubes: i64 = d.iter().map(|x| x.pow(3)).sum();
    let squares: i64 = d.iter().map(|x| x * x).sum();
    let linear: i64 = d.iter().sum();
    let products: i64 = d.windows(2).map(|w| w[0] * w[1]).sum();
    Seq4Sigma {
        value: cubes + 2 * squares + linear - 2 * products,
        condition_held: d[0] > 0 && d.windows(2).all(|w| w[1] == w[0] + 1),
    }
}

fn squared_offsets(values: &[i64]) -> i64 {
    values.iter().map(|x| (x - 1).pow(2)).sum()
}

/// `irr_sigma_max(a,b,c,d)` from the published script.
pub fn irr_seq4_py_max(a: i64, b: i64, c: i64, d: i64) -> i64 {
    squared_offsets(&[a, b, c, d]) + (a + b - c - 3 * d + 2)
}

/// `irr_sigma_min(a,b,c,d)` from the published script.
pub fn irr_seq4_py_min(a: i64, b: i64, c: i64, d: i64) -> i64 {
    squared_offsets(&[a, b, c, d]) + (a - b - c - d + 2)
}

/// Four-term irr hypothesis for `d > a >= b >= c >= 1`:
/// `(a-1)^2 + (b-1)^2 + (c-1)^2 + (d-a) + (d-b) + (d-c) + (d-1)(d-3)`.
pub fn irr_seq4_hyp(a: i64, b: i64, c: i64, d: i64) -> Result<i64> {
    if !(d > a && a >= b && b >= c && c >= 1) {
        return Err(Error::invalid(format!(
            "expected d > a >= b >= c >= 1, got a={a}, b={b}, c={c}, d={d}"
        )));
    }
    Ok(squared_offsets(&[a, b, c]) + (d - a) + (d - b) + (d - c) + (d - 1) * (d - 3))
}

/// irr of `C(n, n)`: `n^3 + n^2 - 2n + 2`.
pub fn irr_caterpillar_nn_claimed(n: usize) -> Result<i64> {
    if n < 3 {
        return Err(Error::invalid(format!("needs n >= 3, got {n}")));
    }
    let n = int(n);
    Ok(n.pow(3) + n * n - 2 * n + 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeSigmaExtremes {
    pub max: Option<i64>,
    pub min: Option<i64>,
}

/// Tree sigma extremes as stated: `max = (n-1)(n-2)` for `n >= 3`,
/// `min = 0` at `n = 2`.
pub fn sigma_tree_extremes_claimed(n: usize) -> Result<TreeSigmaExtremes> {
    match n {
        0 | 1 => Err(Error::invalid(format!("needs n >= 2, got {n}"))),
        2 => Ok(TreeSigmaExtremes {
            max: None,
            min: Some(0),
        }),
        _ => Ok(TreeSigmaExtremes {
            max: Some(int(n - 1) * int(n - 2)),
            min: None,
        }),
    }
}
