//! Individual verification suites. Each returns unsorted records; the report
//! imposes canonical order.

use std::cmp::Ordering;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::closed_forms::{
    irr_caterpillar_claimed, irr_caterpillar_nn_claimed, irr_seq4_hyp, irr_seq4_py_max,
    irr_seq4_py_min, irr_spine_claimed, irr_star_claimed, sigma_caterpillar_claimed,
    sigma_complete_bipartite_claimed, sigma_double_star_claimed, sigma_seq4_claimed,
    sigma_spine3_claimed, sigma_spine3_expr, sigma_tree_extremes_claimed, ClaimId,
};
use crate::error::{Error, Result};
use crate::generators::{
    all_graphs, caterpillar_from_spine, caterpillar_uniform, complete_bipartite, double_star,
    graph_from_mask, labeled_tree_by_rank, labeled_tree_count, star, CaterpillarSpec,
    SpineSequence, MAX_ENUM_GRAPH_N,
};
use crate::graph::Graph;
use crate::indices::{
    albertson_irr, albertson_upper_bound, bell_max_cs, cs_irregularity, lemma3_holds, max_edges,
    sigma, sigma_t_upper_bound, total_irregularity, total_sigma,
};

use super::record::{ClaimRecord, Params, Value};
use super::search::{arrangement_extremes, extremal_trees, spine_sigma, MAX_EXTREMAL_N};

/// Largest caterpillar order `n(m+1)` a grid cell may request.
pub const MAX_CATERPILLAR_ORDER: usize = 200;
/// Tree order cap inside suites; [`extremal_trees`] alone goes one further.
pub const MAX_SUITE_TREE_N: usize = 8;
pub const BELL_TOLERANCE: f64 = 1e-6;

fn int(x: usize) -> i64 {
    x as i64
}

fn check_range(
    what: &'static str,
    range: &RangeInclusive<usize>,
    lo: usize,
    hi: usize,
) -> Result<()> {
    if *range.start() < lo {
        return Err(Error::invalid(format!(
            "{what} range must start at {lo} or above, got {}",
            range.start()
        )));
    }
    if *range.end() > hi {
        return Err(Error::CapExceeded {
            what,
            cap: hi,
            got: *range.end(),
        });
    }
    Ok(())
}

/// IRR-CAT on every cell and SIG-CAT on every cell with `n >= 2`.
pub fn check_caterpillar_grid(
    n_range: RangeInclusive<usize>,
    m_range: RangeInclusive<usize>,
) -> Result<Vec<ClaimRecord>> {
    let mut records = Vec::new();
    for n in n_range.clone() {
        for m in m_range.clone() {
            let spec = CaterpillarSpec::new(n, m)?;
            if spec.order() > MAX_CATERPILLAR_ORDER {
                return Err(Error::CapExceeded {
                    what: "caterpillar order n(m+1)",
                    cap: MAX_CATERPILLAR_ORDER,
                    got: spec.order(),
                });
            }
            let g = caterpillar_uniform(spec);
            let params = Params::new(&[("n", int(n)), ("m", int(m))]);
            records.push(ClaimRecord::exact(
                ClaimId::IrrCat,
                params.clone(),
                irr_caterpillar_claimed(n, m)?,
                albertson_irr(&g) as i64,
            ));
            if n >= 2 {
                records.push(ClaimRecord::exact(
                    ClaimId::SigCat,
                    params,
                    sigma_caterpillar_claimed(n, m)?,
                    sigma(&g) as i64,
                ));
            }
        }
    }
    Ok(records)
}

pub fn check_star(n_range: RangeInclusive<usize>) -> Result<Vec<ClaimRecord>> {
    n_range
        .map(|n| {
            Ok(ClaimRecord::exact(
                ClaimId::IrrStar,
                Params::new(&[("n", int(n))]),
                irr_star_claimed(n)?,
                albertson_irr(&star(n)?) as i64,
            ))
        })
        .collect()
}

pub fn check_double_star(
    r_range: RangeInclusive<usize>,
    k_range: RangeInclusive<usize>,
) -> Result<Vec<ClaimRecord>> {
    let mut records = Vec::new();
    for r in r_range {
        for k in k_range.clone() {
            records.push(ClaimRecord::exact(
                ClaimId::SigDstar,
                Params::new(&[("r", int(r)), ("k", int(k))]),
                sigma_double_star_claimed(r, k)?,
                sigma(&double_star(r, k)?) as i64,
            ));
        }
    }
    Ok(records)
}

pub fn check_complete_bipartite(
    m_range: RangeInclusive<usize>,
    n_range: RangeInclusive<usize>,
) -> Result<Vec<ClaimRecord>> {
    let mut records = Vec::new();
    for m in m_range {
        for n in n_range.clone() {
            records.push(ClaimRecord::exact(
                ClaimId::SigKmn,
                Params::new(&[("m", int(m)), ("n", int(n))]),
                sigma_complete_bipartite_claimed(m, n)?,
                sigma(&complete_bipartite(m, n)?) as i64,
            ));
        }
    }
    Ok(records)
}

const SPINE_PARAM: [&str; 8] = ["d1", "d2", "d3", "d4", "d5", "d6", "d7", "d8"];

fn spine_params(degrees: &[usize]) -> Params {
    Params(
        degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| (SPINE_PARAM[i], int(d)))
            .collect(),
    )
}

/// Every realizable spine sequence with length in `len_range` and entries
/// in `1..=max_degree`.
fn realizable_sequences(len_range: RangeInclusive<usize>, max_degree: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for len in len_range {
        let total = max_degree.pow(len as u32);
        for code in 0..total {
            // base-`max_degree` digits, most significant first
            let mut seq = vec![0usize; len];
            let mut rest = code;
            for slot in seq.iter_mut().rev() {
                *slot = rest % max_degree + 1;
                rest /= max_degree;
            }
            if SpineSequence::is_realizable(&seq) {
                out.push(seq);
            }
        }
    }
    out
}

/// IRR-SPINE over every realizable spine sequence in the grid.
pub fn check_spine_irr(
    len_range: RangeInclusive<usize>,
    max_degree: usize,
) -> Result<Vec<ClaimRecord>> {
    check_range("spine length", &len_range, 2, SPINE_PARAM.len())?;
    realizable_sequences(len_range, max_degree)
        .into_par_iter()
        .map(|degrees| {
            let seq = SpineSequence::new(degrees)?;
            Ok(ClaimRecord::exact(
                ClaimId::IrrSpine,
                spine_params(seq.degrees()),
                irr_spine_claimed(&seq)?,
                albertson_irr(&caterpillar_from_spine(&seq)) as i64,
            ))
        })
        .collect()
}

pub fn check_caterpillar_nn(n_range: RangeInclusive<usize>) -> Result<Vec<ClaimRecord>> {
    n_range
        .map(|n| {
            let g = caterpillar_uniform(CaterpillarSpec::new(n, n)?);
            Ok(ClaimRecord::exact(
                ClaimId::IrrCnn,
                Params::new(&[("n", int(n))]),
                irr_caterpillar_nn_claimed(n)?,
                albertson_irr(&g) as i64,
            ))
        })
        .collect()
}

/// HY-SIG3 on every sorted triple `d1 <= d2 <= d3 <= max_degree` with an
/// interior degree of at least 2, plus the `C(3,3)` arrangement `(4,5,4)`
/// that falls outside the stated ordering.
pub fn check_hy_sig3(max_degree: usize) -> Result<Vec<ClaimRecord>> {
    let mut records = Vec::new();
    for d1 in 1..=max_degree {
        for d2 in d1.max(2)..=max_degree {
            for d3 in d2..=max_degree {
                let (a, b, c) = (int(d1), int(d2), int(d3));
                let direct = spine_sigma(&[d1, d2, d3]).expect("interior degree >= 2");
                records.push(ClaimRecord::exact(
                    ClaimId::HySig3,
                    spine_params(&[d1, d2, d3]),
                    sigma_spine3_claimed(a, b, c)?,
                    direct as i64,
                ));
            }
        }
    }
    let direct = spine_sigma(&[4, 5, 4]).expect("realizable");
    records.push(ClaimRecord::exact(
        ClaimId::HySig3,
        spine_params(&[4, 5, 4]),
        sigma_spine3_expr(4, 5, 4),
        direct as i64,
    ));
    Ok(records)
}

/// HY-SIG4 on the consecutive sequences `(a, a+1, a+2, a+3)`.
pub fn check_hy_sig4(a_range: RangeInclusive<usize>) -> Result<Vec<ClaimRecord>> {
    check_range("consecutive sequence start", &a_range, 1, usize::MAX)?;
    Ok(a_range
        .map(|a| {
            let degrees = [a, a + 1, a + 2, a + 3];
            let claimed = sigma_seq4_claimed(degrees.map(int));
            debug_assert!(claimed.condition_held);
            let direct = spine_sigma(&degrees).expect("interior degrees >= 2");
            ClaimRecord::exact(
                ClaimId::HySig4,
                Params::new(&[("a", int(a))]),
                claimed.value,
                direct as i64,
            )
        })
        .collect())
}

fn abcd(a: usize, b: usize, c: usize, d: usize) -> Params {
    Params::new(&[("a", int(a)), ("b", int(b)), ("c", int(c)), ("d", int(d))])
}

/// The two script formulas against the extreme direct irr over realizable
/// arrangements of `{a, b, c, d}`, for every `a >= b >= c >= d >= 1` up to
/// `max_degree`.
pub fn check_seq4_script(max_degree: usize) -> Result<Vec<ClaimRecord>> {
    let mut records = Vec::new();
    for a in 1..=max_degree {
        for b in 1..=a {
            for c in 1..=b {
                for d in 1..=c {
                    let (ia, ib, ic, id) = (int(a), int(b), int(c), int(d));
                    let claimed_max = irr_seq4_py_max(ia, ib, ic, id);
                    let claimed_min = irr_seq4_py_min(ia, ib, ic, id);
                    let params = abcd(a, b, c, d);
                    match arrangement_extremes(&[a, b, c, d]) {
                        Some(ext) => {
                            records.push(ClaimRecord::exact(
                                ClaimId::IrrSeq4PyMax,
                                params.clone(),
                                claimed_max,
                                ext.max as i64,
                            ));
                            records.push(ClaimRecord::exact(
                                ClaimId::IrrSeq4PyMin,
                                params,
                                claimed_min,
                                ext.min as i64,
                            ));
                        }
                        None => {
                            for (claim, v) in [
                                (ClaimId::IrrSeq4PyMax, claimed_max),
                                (ClaimId::IrrSeq4PyMin, claimed_min),
                            ] {
                                records.push(ClaimRecord::unverifiable(
                                    claim,
                                    params.clone(),
                                    Value::Int(v),
                                    Value::Missing,
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(records)
}

/// IRR-SEQ4-HYP against the minimum direct irr over arrangements, on every
/// `d > a >= b >= c >= 1` with `d <= max_d`.
pub fn check_seq4_hyp(max_d: usize) -> Result<Vec<ClaimRecord>> {
    let mut records = Vec::new();
    for d in 2..=max_d {
        for a in 1..d {
            for b in 1..=a {
                for c in 1..=b {
                    let claimed = irr_seq4_hyp(int(a), int(b), int(c), int(d))?;
                    let params = abcd(a, b, c, d);
                    records.push(match arrangement_extremes(&[a, b, c, d]) {
                        Some(ext) => {
                            ClaimRecord::exact(ClaimId::IrrSeq4Hyp, params, claimed, ext.min as i64)
                        }
                        None => ClaimRecord::unverifiable(
                            ClaimId::IrrSeq4Hyp,
                            params,
                            Value::Int(claimed),
                            Value::Missing,
                        ),
                    });
                }
            }
        }
    }
    Ok(records)
}

/// Which index the `max(irr, sigma)` corollary names for `C(n, m)`, if any.
pub fn max_cat_case(n: usize, m: usize) -> Option<&'static str> {
    if m >= n {
        Some("sigma")
    } else if (n >= 5 && m == 3) || ((n == 7 || n == 9) && (m == 4 || m == 5)) {
        Some("irr")
    } else {
        None
    }
}

/// MAX-CAT on `n, m` in `3..=10`: the named index against the true maximum.
pub fn check_max_cat() -> Result<Vec<ClaimRecord>> {
    let mut records = Vec::new();
    for n in 3..=10 {
        for m in 3..=10 {
            let Some(case) = max_cat_case(n, m) else {
                continue;
            };
            let g = caterpillar_uniform(CaterpillarSpec::new(n, m)?);
            let (irr, sig) = (albertson_irr(&g) as i64, sigma(&g) as i64);
            let named = if case == "irr" { irr } else { sig };
            records.push(ClaimRecord::exact(
                ClaimId::MaxCat,
                Params::new(&[("n", int(n)), ("m", int(m))]),
                named,
                irr.max(sig),
            ));
        }
    }
    Ok(records)
}

/// MAXEDGES for every `1 <= c <= n <= max_graph_n`, against the largest
/// edge count found among all graphs with exactly `c` components.
pub fn check_max_edges(max_graph_n: usize) -> Result<Vec<ClaimRecord>> {
    let mut records = Vec::new();
    for n in 1..=max_graph_n {
        let graphs = all_graphs(n, false)?;
        let best = (0..graphs.mask_count())
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask);
                let mut best = vec![0usize; n + 1];
                best[g.component_count()] = g.size();
                best
            })
            .reduce(
                || vec![0usize; n + 1],
                |a, b| a.iter().zip(&b).map(|(x, y)| *x.max(y)).collect(),
            );
        for (c, &found) in best.iter().enumerate().skip(1) {
            records.push(ClaimRecord::exact(
                ClaimId::MaxEdges,
                Params::new(&[("n", int(n)), ("c", int(c))]),
                max_edges(n, c)? as i64,
                found as i64,
            ));
        }
    }
    Ok(records)
}

/// The four sigma constants quoted for arrangements of `{10, 8, 3, 2}`,
/// which have no stated formula. The direct sigma is shown for reference.
pub fn sig_ex4_records() -> Vec<ClaimRecord> {
    const QUOTED: [([usize; 4], i64); 4] = [
        ([10, 8, 3, 2], 1036),
        ([8, 10, 3, 2], 1048),
        ([3, 10, 8, 2], 1148),
        ([2, 10, 8, 3], 1156),
    ];
    QUOTED
        .iter()
        .map(|(degrees, quoted)| {
            let direct = spine_sigma(degrees).map_or(Value::Missing, |s| Value::Int(s as i64));
            ClaimRecord::unverifiable(
                ClaimId::SigEx4,
                spine_params(degrees),
                Value::Int(*quoted),
                direct,
            )
        })
        .collect()
}

/// All closed-form cross-checks on their default grids.
pub fn check_claims(max_graph_n: usize) -> Result<Vec<ClaimRecord>> {
    let mut records = Vec::new();
    records.extend(check_star(2..=20)?);
    records.extend(check_double_star(1..=10, 2..=10)?);
    records.extend(check_complete_bipartite(1..=10, 1..=10)?);
    records.extend(check_spine_irr(2..=6, 7)?);
    records.extend(check_caterpillar_nn(3..=12)?);
    records.extend(check_hy_sig3(6)?);
    records.extend(check_hy_sig4(1..=8)?);
    records.extend(check_seq4_script(7)?);
    records.extend(check_seq4_hyp(9)?);
    records.extend(check_max_cat()?);
    records.extend(check_max_edges(max_graph_n)?);
    records.extend(sig_ex4_records());
    Ok(records)
}

/// The graph that decides an aggregated bound record: any violation first,
/// then the smallest slack, then the smallest index.
#[derive(Debug, Clone, Copy)]
struct Witness {
    violated: bool,
    slack: f64,
    index: u64,
    bound: Value,
    value: Value,
}

impl Witness {
    fn priority(&self, other: &Self) -> Ordering {
        other
            .violated
            .cmp(&self.violated)
            .then(self.slack.total_cmp(&other.slack))
            .then(self.index.cmp(&other.index))
    }

    fn pick(self, other: Self) -> Self {
        if other.priority(&self) == Ordering::Less {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Trees,
    ConnectedGraphs,
}

impl Family {
    fn count_name(self) -> &'static str {
        match self {
            Family::Trees => "trees",
            Family::ConnectedGraphs => "graphs",
        }
    }

    fn members(self, n: usize) -> Vec<u64> {
        match self {
            Family::Trees => (0..labeled_tree_count(n)).collect(),
            Family::ConnectedGraphs => {
                let total = 1u64 << (n * (n - 1) / 2);
                (0..total)
                    .into_par_iter()
                    .filter(|&mask| graph_from_mask(n, mask).is_connected())
                    .collect()
            }
        }
    }

    fn graph(self, n: usize, index: u64) -> Graph {
        match self {
            Family::Trees => labeled_tree_by_rank(n, index).expect("rank in range"),
            Family::ConnectedGraphs => graph_from_mask(n, index),
        }
    }
}

type BoundEval = fn(&Graph) -> Result<(bool, f64, Value, Value)>;

fn lemma3_eval(g: &Graph) -> Result<(bool, f64, Value, Value)> {
    let holds = lemma3_holds(g)?;
    let bound = albertson_upper_bound(g)?;
    let irr = albertson_irr(g);
    Ok((
        holds,
        bound - irr as f64,
        Value::Real(bound),
        Value::Int(irr as i64),
    ))
}

fn sigma_t_eval(g: &Graph) -> Result<(bool, f64, Value, Value)> {
    let bound = sigma_t_upper_bound(g.order())?;
    let value = total_sigma(g);
    Ok((
        value <= bound,
        bound as f64 - value as f64,
        Value::Int(bound as i64),
        Value::Int(value as i64),
    ))
}

fn ghalavand_linear_eval(g: &Graph) -> Result<(bool, f64, Value, Value)> {
    let bound = (g.order() as u64 - 2) * albertson_irr(g);
    let value = total_irregularity(g);
    Ok((
        value <= bound,
        bound as f64 - value as f64,
        Value::Int(bound as i64),
        Value::Int(value as i64),
    ))
}

fn ghalavand_quadratic_eval(g: &Graph) -> Result<(bool, f64, Value, Value)> {
    let n2 = (g.order() * g.order()) as u64;
    let irr = albertson_irr(g);
    let value = total_irregularity(g);
    let bound = n2 as f64 * irr as f64 / 4.0;
    Ok((
        4 * value <= n2 * irr,
        bound - value as f64,
        Value::Real(bound),
        Value::Int(value as i64),
    ))
}

fn aggregate_bound(
    claim: ClaimId,
    family: Family,
    n: usize,
    members: &[u64],
    leading: &[(&'static str, i64)],
    eval: BoundEval,
) -> Result<ClaimRecord> {
    let witness = members
        .par_iter()
        .map(|&index| {
            let g = family.graph(n, index);
            let (holds, slack, bound, value) = eval(&g)?;
            Ok::<_, Error>(Witness {
                violated: !holds,
                slack,
                index,
                bound,
                value,
            })
        })
        .try_reduce_with(|a, b| Ok(a.pick(b)))
        .ok_or_else(|| Error::invalid(format!("no {} of order {n}", family.count_name())))??;

    let mut params = leading.to_vec();
    params.extend([
        ("n", int(n)),
        (family.count_name(), members.len() as i64),
        ("witness", witness.index as i64),
    ]);
    Ok(ClaimRecord::bound(
        claim,
        Params(params),
        witness.bound,
        witness.value,
        !witness.violated,
    ))
}

/// LEM3-BOUND and SIGT-BOUND over every labeled tree with `2 <= n <=
/// max_tree_n` and every connected labeled graph with `2 <= n <=
/// max_graph_n`; IRRT-GHAL in both forms over the trees. One record per
/// (claim, family, order), showing the tightest graph.
pub fn check_bounds_suite(max_tree_n: usize, max_graph_n: usize) -> Result<Vec<ClaimRecord>> {
    if max_tree_n > MAX_SUITE_TREE_N {
        return Err(Error::CapExceeded {
            what: "bounds suite tree order",
            cap: MAX_SUITE_TREE_N,
            got: max_tree_n,
        });
    }
    if max_graph_n > MAX_ENUM_GRAPH_N {
        return Err(Error::CapExceeded {
            what: "bounds suite graph order",
            cap: MAX_ENUM_GRAPH_N,
            got: max_graph_n,
        });
    }
    let mut records = Vec::new();
    let families = [
        (Family::Trees, max_tree_n),
        (Family::ConnectedGraphs, max_graph_n),
    ];
    for (family, max_n) in families {
        for n in 2..=max_n {
            let members = family.members(n);
            records.push(aggregate_bound(
                ClaimId::Lem3Bound,
                family,
                n,
                &members,
                &[],
                lemma3_eval,
            )?);
            if n >= 3 {
                records.push(aggregate_bound(
                    ClaimId::SigtBound,
                    family,
                    n,
                    &members,
                    &[],
                    sigma_t_eval,
                )?);
            }
            if family == Family::Trees {
                records.push(aggregate_bound(
                    ClaimId::IrrtGhal,
                    family,
                    n,
                    &members,
                    &[("form", 1)],
                    ghalavand_linear_eval,
                )?);
                records.push(aggregate_bound(
                    ClaimId::IrrtGhal,
                    family,
                    n,
                    &members,
                    &[("form", 2)],
                    ghalavand_quadratic_eval,
                )?);
            }
        }
    }
    Ok(records)
}

/// Tree sigma extremes against exhaustive enumeration, plus the prose
/// constants around them as unverifiable rows.
pub fn check_lemma2(n_range: RangeInclusive<usize>) -> Result<Vec<ClaimRecord>> {
    check_range("tree order", &n_range, 2, MAX_EXTREMAL_N)?;
    let mut records = Vec::new();
    for n in n_range {
        let ext = extremal_trees(n)?;
        let claimed = sigma_tree_extremes_claimed(n)?;
        let params = Params::new(&[("n", int(n))]);
        if let Some(max) = claimed.max {
            records.push(ClaimRecord::exact(
                ClaimId::SigTreeMax,
                params.clone(),
                max,
                ext.max_sigma as i64,
            ));
        }
        if let Some(min) = claimed.min {
            records.push(ClaimRecord::exact(
                ClaimId::SigTreeMin,
                params.clone(),
                min,
                ext.min_sigma as i64,
            ));
        }
        let max_total_sigma = (0..labeled_tree_count(n))
            .into_par_iter()
            .map(|rank| total_sigma(&labeled_tree_by_rank(n, rank).expect("rank in range")))
            .max()
            .unwrap_or(0);
        records.push(ClaimRecord::unverifiable(
            ClaimId::SigTreeProse,
            params.clone(),
            Value::Int(int(n) - 2),
            Value::Int(ext.max_sigma as i64),
        ));
        records.push(ClaimRecord::unverifiable(
            ClaimId::SigtTreeProse,
            params,
            Value::Int((int(n) - 1) * (int(n) - 2).pow(2)),
            Value::Int(max_total_sigma as i64),
        ));
    }
    Ok(records)
}

/// Largest `λ - d̄` over all labeled graphs on `n` vertices and the lowest
/// mask attaining it.
pub fn bell_maximizer(n: usize) -> Result<(f64, u64)> {
    let graphs = all_graphs(n, false)?;
    (0..graphs.mask_count())
        .into_par_iter()
        .map(|mask| Ok((cs_irregularity(&graph_from_mask(n, mask))?, mask)))
        .try_reduce_with(|a, b| {
            Ok(match a.0.total_cmp(&b.0).then(b.1.cmp(&a.1)) {
                Ordering::Less => b,
                _ => a,
            })
        })
        .expect("at least one graph")
}

pub fn check_bell(n_range: RangeInclusive<usize>) -> Result<Vec<ClaimRecord>> {
    check_range("graph order", &n_range, 2, MAX_ENUM_GRAPH_N)?;
    n_range
        .map(|n| {
            let (best, _) = bell_maximizer(n)?;
            Ok(ClaimRecord::approx(
                ClaimId::BellMax,
                Params::new(&[("n", int(n))]),
                bell_max_cs(n)?,
                best,
                BELL_TOLERANCE,
            ))
        })
        .collect()
}
