//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails or overruns its time limit.
//!
//! Run alone with `cargo test -p irrlab --test acceptance`.

// `ensure!(x <= y)` negates float comparisons on purpose so that NaN fails.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use irrlab::closed_forms::{
    irr_caterpillar_claimed, irr_caterpillar_nn_claimed, irr_seq4_py_max, irr_seq4_py_min,
    irr_spine_claimed, irr_star_claimed, sigma_caterpillar_claimed,
    sigma_complete_bipartite_claimed, sigma_double_star_claimed, ClaimId,
};
use irrlab::generators::{
    all_graphs, all_labeled_trees, caterpillar_from_spine, caterpillar_uniform, complete_bipartite,
    double_star, graph_from_mask, path, prufer_roundtrip, star, CaterpillarSpec, SpineSequence,
};
use irrlab::indices::{albertson_irr, albertson_upper_bound, sigma, spectral_radius, total_sigma};
use irrlab::verify::{
    arrangement_extremes, bell_maximizer, check_bell, check_bounds_suite, check_lemma2,
    extremal_trees, run_all, Report, Status, VerifyConfig, BELL_TOLERANCE,
};
use irrlab::Graph;

use common::Dense;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !($cond) {
            return Err(format!($($msg)+));
        }
    };
}

const BIN: &str = env!("CARGO_BIN_EXE_irrlab");
const FIXTURE: &str = include_str!("fixtures/table1_published.csv");

fn cli(args: &[&str]) -> Result<std::process::Output, String> {
    Command::new(BIN)
        .args(args)
        .output()
        .map_err(|e| format!("cannot run {BIN}: {e}"))
}

// 1. Table reproduction against the published values, through the CLI.
fn table1_reproduction() -> Outcome {
    let out = cli(&["table1", "--format", "csv"])?;
    ensure!(out.status.success(), "table1 exited with {}", out.status);
    let csv = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let produced: Vec<String> = csv
        .lines()
        .map(|line| line.split(',').take(6).collect::<Vec<_>>().join(","))
        .collect();
    let expected: Vec<&str> = FIXTURE.lines().collect();
    ensure!(
        produced.len() == 41,
        "expected header + 40 rows, got {} lines",
        produced.len()
    );
    ensure!(
        produced[0] == "n,m,irr,sigma,sigma_minus_irr,max",
        "unexpected header {}",
        produced[0]
    );
    for (got, want) in produced.iter().zip(&expected).skip(1) {
        ensure!(got == want, "row differs: produced {got}, published {want}");
    }
    ensure!(
        csv.lines().any(|l| l == "3,3,32,55,23,55,32,104"),
        "audit columns for (3,3) missing"
    );
    ensure!(
        produced.iter().any(|l| l == "10,10,1082,2008,926,2008"),
        "row (10,10) missing"
    );
    Ok("40 rows byte-exact".into())
}

// 2. Caterpillar irr closed form, zero tolerance.
fn caterpillar_irr_exact() -> Outcome {
    for n in 1..=12 {
        for m in 1..=12 {
            let claimed = irr_caterpillar_claimed(n, m).map_err(|e| e.to_string())?;
            let g = caterpillar_uniform(CaterpillarSpec::new(n, m).unwrap());
            let library = albertson_irr(&g) as i64;
            let oracle = common::caterpillar(n, m).irr();
            ensure!(
                claimed == library && library == oracle,
                "C({n},{m}): claimed {claimed}, library {library}, oracle {oracle}"
            );
        }
    }
    Ok("144 cells, claimed = library = oracle".into())
}

/// Every mismatch the full report is expected to contain, derived from
/// exhaustive scratch enumeration and frozen here.
fn expected_mismatches() -> BTreeSet<String> {
    let mut set = BTreeSet::new();
    for n in 3..=12 {
        for m in 1..=12 {
            set.insert(format!("SIG-CAT,n={n};m={m}"));
        }
    }
    for n in 4..=8 {
        set.insert(format!("SIG-TREE-MAX,n={n}"));
    }
    let hy_sig3_matches = [(1, 2, 3), (2, 2, 2), (2, 4, 6), (3, 4, 5), (4, 4, 4)];
    for d1 in 1..=6 {
        for d2 in usize::max(d1, 2)..=6 {
            for d3 in d2..=6 {
                if !hy_sig3_matches.contains(&(d1, d2, d3)) {
                    set.insert(format!("HY-SIG3,d1={d1};d2={d2};d3={d3}"));
                }
            }
        }
    }
    set.insert("HY-SIG3,d1=4;d2=5;d3=4".into());
    for a in 1..=8 {
        set.insert(format!("HY-SIG4,a={a}"));
    }
    // the max script formula fails exactly when a degree-1 end is available
    for a in 2..=7 {
        for b in 2..=a {
            for c in 1..=b {
                set.insert(format!("IRR-SEQ4-PY-MAX,a={a};b={b};c={c};d=1"));
            }
        }
    }
    for n in 3..=10 {
        for m in 3..n {
            if (n >= 5 && m == 3) || ((n == 7 || n == 9) && (m == 4 || m == 5)) {
                set.insert(format!("MAX-CAT,n={n};m={m}"));
            }
        }
    }
    set.insert("HY1-ORDER,d1=8;d2=7;d3=6;d4=5;d5=4;d6=3;d7=2".into());
    set
}

fn default_report() -> Result<Report, String> {
    run_all(&VerifyConfig::default()).map_err(|e| e.to_string())
}

// 3. Caterpillar sigma discrepancy, and the complete expected-mismatch set.
fn caterpillar_sigma_discrepancy() -> Outcome {
    ensure!(
        common::caterpillar(3, 3).sigma() == 104
            && sigma_caterpillar_claimed(3, 3).ok() == Some(55),
        "C(3,3): oracle sigma {} vs claimed {:?}",
        common::caterpillar(3, 3).sigma(),
        sigma_caterpillar_claimed(3, 3).ok()
    );
    for m in 1..=12 {
        let claimed = sigma_caterpillar_claimed(2, m).unwrap();
        ensure!(
            claimed == common::caterpillar(2, m).sigma(),
            "n=2, m={m}: claimed {claimed} differs from direct"
        );
    }
    let report = default_report()?;
    let mismatches: BTreeSet<String> = report
        .records
        .iter()
        .filter(|r| r.status == Status::Mismatch)
        .map(|r| format!("{},{}", r.claim, r.params))
        .collect();
    let expected = expected_mismatches();
    let missing: Vec<_> = expected.difference(&mismatches).take(5).collect();
    let extra: Vec<_> = mismatches.difference(&expected).take(5).collect();
    ensure!(
        missing.is_empty() && extra.is_empty(),
        "mismatch set differs; missing {missing:?}, unexpected {extra:?}"
    );
    let sig_cat_matches: Vec<_> = report
        .records_for(ClaimId::SigCat)
        .filter(|r| r.status == Status::Match)
        .map(|r| r.params.get("n"))
        .collect();
    ensure!(
        sig_cat_matches.len() == 12 && sig_cat_matches.iter().all(|&n| n == Some(2)),
        "SIG-CAT matches outside n = 2: {sig_cat_matches:?}"
    );
    Ok(format!(
        "direct 104 vs claimed 55; {} expected mismatches, no others",
        expected.len()
    ))
}

// 4. Closed forms that hold exactly, against both routes.
fn exact_closed_forms() -> Outcome {
    let mut checked = 0usize;
    for n in 2..=20 {
        let claimed = irr_star_claimed(n).unwrap();
        let library = albertson_irr(&star(n).unwrap()) as i64;
        let oracle = common::star(n).irr();
        ensure!(
            claimed == library && library == oracle,
            "star {n}: {claimed}/{library}/{oracle}"
        );
        checked += 1;
    }
    for r in 1..=10 {
        for k in 2..=10 {
            let claimed = sigma_double_star_claimed(r, k).unwrap();
            let library = sigma(&double_star(r, k).unwrap()) as i64;
            let oracle = common::double_star(r, k).sigma();
            ensure!(
                claimed == library && library == oracle,
                "double star ({r},{k}): {claimed}/{library}/{oracle}"
            );
            checked += 1;
        }
    }
    for m in 1..=10 {
        for n in 1..=10 {
            let claimed = sigma_complete_bipartite_claimed(m, n).unwrap();
            let library = sigma(&complete_bipartite(m, n).unwrap()) as i64;
            let oracle = common::complete_bipartite(m, n).sigma();
            ensure!(
                claimed == library && library == oracle,
                "K({m},{n}): {claimed}/{library}/{oracle}"
            );
            checked += 1;
        }
    }
    for len in 2..=6u32 {
        for code in 0..7usize.pow(len) {
            let mut rest = code;
            let degrees: Vec<usize> = (0..len)
                .map(|_| {
                    let d = rest % 7 + 1;
                    rest /= 7;
                    d
                })
                .collect();
            let Ok(seq) = SpineSequence::new(degrees.clone()) else {
                continue;
            };
            let claimed = irr_spine_claimed(&seq).unwrap();
            let library = albertson_irr(&caterpillar_from_spine(&seq)) as i64;
            let oracle = common::spine_caterpillar(&degrees).irr();
            ensure!(
                claimed == library && library == oracle,
                "spine {degrees:?}: {claimed}/{library}/{oracle}"
            );
            checked += 1;
        }
    }
    for n in 3..=12 {
        let claimed = irr_caterpillar_nn_claimed(n).unwrap();
        let oracle = common::caterpillar(n, n).irr();
        ensure!(
            claimed == oracle,
            "C({n},{n}): claimed {claimed}, oracle {oracle}"
        );
        checked += 1;
    }
    Ok(format!("{checked} cells exact"))
}

// 5. Extremal trees by exhaustive enumeration.
fn extremal_enumeration() -> Outcome {
    for n in 3..=8usize {
        let e = extremal_trees(n).map_err(|e| e.to_string())?;
        let (n1, n2) = ((n - 1) as u64, (n - 2) as u64);
        let mut star_seq = vec![1; n];
        star_seq[0] = n - 1;
        ensure!(e.max_irr == n1 * n2, "n={n}: max irr {}", e.max_irr);
        ensure!(
            e.argmax_irr_degseq == star_seq,
            "n={n}: irr witness {:?}",
            e.argmax_irr_degseq
        );
        ensure!(
            e.max_sigma == n1 * n2 * n2,
            "n={n}: max sigma {}",
            e.max_sigma
        );
        ensure!(
            e.argmax_sigma_degseq == star_seq,
            "n={n}: sigma witness {:?}",
            e.argmax_sigma_degseq
        );
        // second route over the oracle's own tree enumeration
        let (mut irr_max, mut sigma_max) = (0, 0);
        common::for_each_tree(n, |_, t| {
            irr_max = irr_max.max(t.irr());
            sigma_max = sigma_max.max(t.sigma());
        });
        ensure!(
            irr_max as u64 == e.max_irr && sigma_max as u64 == e.max_sigma,
            "n={n}: oracle maxima {irr_max}/{sigma_max}"
        );
    }
    let records = check_lemma2(3..=8).map_err(|e| e.to_string())?;
    for r in records.iter().filter(|r| r.claim == ClaimId::SigTreeMax) {
        let n = r.params.get("n").unwrap();
        let want = if n == 3 {
            Status::Match
        } else {
            Status::Mismatch
        };
        ensure!(r.status == want, "SIG-TREE-MAX n={n}: {}", r.csv_line());
    }
    Ok("max irr (n-1)(n-2), max sigma (n-1)(n-2)^2 at the star for n = 3..8".into())
}

/// Bound checks on one graph, through the oracle only. Returns violations.
fn oracle_bounds(d: &Dense, is_tree: bool) -> Option<String> {
    let n = d.n() as i64;
    let deg = d.degrees();
    let (lo, hi) = (*deg.iter().min().unwrap(), *deg.iter().max().unwrap());
    let irr = d.irr();
    if irr * irr * hi * lo > (hi - lo).pow(2) * d.edge_count() * d.m2() {
        return Some(format!("Lemma 3 fails on {:?}", d.a));
    }
    if n >= 3 {
        let nn = n as u64;
        let (a, b) = match nn % 4 {
            0 | 3 => (nn.div_ceil(4), 3 * nn / 4),
            _ => (nn / 4, (3 * nn).div_ceil(4)),
        };
        let bound = (a * b * (nn - 1 - a).pow(2)) as i64;
        if d.sigma_total() > bound {
            return Some(format!("sigma_t bound fails on {:?}", d.a));
        }
    }
    if is_tree {
        let it = d.irr_total();
        if it > (n - 2) * irr || 4 * it > n * n * irr {
            return Some(format!("total irregularity bound fails on {:?}", d.a));
        }
    }
    None
}

// 6. Bounds hold everywhere, with the tight cases attained.
fn bounds_never_violated() -> Outcome {
    let records = check_bounds_suite(8, 6).map_err(|e| e.to_string())?;
    let violated: Vec<_> = records
        .iter()
        .filter(|r| r.status != Status::BoundHolds)
        .map(|r| r.csv_line())
        .collect();
    ensure!(
        violated.is_empty(),
        "library reports violations: {violated:?}"
    );

    let p3 = path(3).unwrap();
    let bound = albertson_upper_bound(&p3).map_err(|e| e.to_string())?;
    ensure!(
        bound == 2.0 && albertson_irr(&p3) == 2,
        "P3 not tight: irr {} vs bound {bound}",
        albertson_irr(&p3)
    );
    let s4 = star(4).unwrap();
    ensure!(
        total_sigma(&s4) == 12,
        "star(4) sigma_t {}",
        total_sigma(&s4)
    );
    let s4_record = records
        .iter()
        .find(|r| {
            r.claim == ClaimId::SigtBound
                && r.params.get("n") == Some(4)
                && r.params.get("trees").is_some()
        })
        .ok_or("no SIGT-BOUND record for trees of order 4")?;
    ensure!(
        s4_record.delta.to_string() == "0",
        "SIGT-BOUND n=4 not tight: {}",
        s4_record.csv_line()
    );

    let mut checked = 0usize;
    let mut failure = None;
    for n in 2..=8 {
        common::for_each_tree(n, |_, t| {
            checked += 1;
            if failure.is_none() {
                failure = oracle_bounds(t, true);
            }
        });
    }
    for n in 2..=6 {
        for g in common::all_graphs(n).iter().filter(|g| g.is_connected()) {
            checked += 1;
            if failure.is_none() {
                failure = oracle_bounds(g, false);
            }
        }
    }
    if let Some(f) = failure {
        return Err(f);
    }
    Ok(format!(
        "{} aggregate records hold; oracle re-checked {checked} graphs; P3 and star(4) tight",
        records.len()
    ))
}

// 7. Largest spectral irregularity over all graphs.
fn bell_maximum() -> Outcome {
    let records = check_bell(4..=6).map_err(|e| e.to_string())?;
    for r in &records {
        ensure!(r.status == Status::Match, "{}", r.csv_line());
    }
    let (best, mask) = bell_maximizer(4).map_err(|e| e.to_string())?;
    let g = graph_from_mask(4, mask);
    let mut degrees = g.degree_sequence().sorted_desc().0;
    degrees.dedup();
    ensure!(
        (best - 0.5).abs() <= BELL_TOLERANCE
            && g.size() == 3
            && g.component_count() == 2
            && degrees == [2, 0],
        "n=4 maximizer {:?} with value {best}",
        g.edges()
    );
    // second route: full eigendecomposition of every graph on 4 and 5 vertices
    for (n, want) in [(4usize, 0.5), (5, 0.8)] {
        let best = common::all_graphs(n)
            .iter()
            .map(|d| d.spectral_radius() - d.mean_degree())
            .fold(f64::NEG_INFINITY, f64::max);
        ensure!(
            (best - want).abs() <= BELL_TOLERANCE,
            "oracle n={n}: {best}"
        );
    }
    Ok("n = 4, 5, 6 within 1e-6; n = 4 maximizer K3 + K1 at 0.5".into())
}

// 8. The script formulas reproduce the worked example values.
fn sequence_formula_fidelity() -> Outcome {
    let cases = [((10, 8, 3, 2), (146, 134)), ((8, 5, 3, 2), (76, 70))];
    for ((a, b, c, d), (max, min)) in cases {
        let got = (irr_seq4_py_max(a, b, c, d), irr_seq4_py_min(a, b, c, d));
        ensure!(
            got == (max, min),
            "({a},{b},{c},{d}): {got:?}, want ({max}, {min})"
        );
        let ext = arrangement_extremes(&[a, b, c, d].map(|x| x as usize)).ok_or("unrealizable")?;
        ensure!(
            (ext.max as i64, ext.min as i64) == (max, min),
            "direct extremes for ({a},{b},{c},{d}): {}/{}",
            ext.max,
            ext.min
        );
    }
    Ok("146/134 and 76/70 reproduced and confirmed by enumeration".into())
}

fn graph_properties(g: &Graph, spectral: bool) -> Result<(), String> {
    let degree_sum: usize = g.degree_sequence().0.iter().sum();
    ensure!(
        degree_sum == 2 * g.size(),
        "handshake fails on {:?}",
        g.edges()
    );
    let (irr, sig) = (albertson_irr(g), sigma(g));
    ensure!(
        sig >= irr && (sig - irr) % 2 == 0,
        "sigma {sig} vs irr {irr} on {:?}",
        g.edges()
    );
    if spectral && g.order() > 0 {
        let lambda = spectral_radius(g).map_err(|e| e.to_string())?;
        let mean = degree_sum as f64 / g.order() as f64;
        ensure!(
            lambda >= mean - 1e-9,
            "lambda {lambda} below mean {mean} on {:?}",
            g.edges()
        );
    }
    Ok(())
}

// 9. Property suites over every generated and enumerated graph.
fn property_suites() -> Outcome {
    let mut touched = 0usize;
    for n in 1..=8 {
        for t in all_labeled_trees(n).map_err(|e| e.to_string())? {
            graph_properties(&t, n <= 7)?;
            touched += 1;
        }
    }
    for n in 1..=6 {
        for g in all_graphs(n, false).map_err(|e| e.to_string())? {
            graph_properties(&g, true)?;
            touched += 1;
        }
    }
    let mut families = Vec::new();
    for n in 1..=12 {
        for m in 1..=12 {
            families.push(caterpillar_uniform(CaterpillarSpec::new(n, m).unwrap()));
        }
    }
    for n in 1..=20 {
        families.push(path(n).unwrap());
        families.push(star(n.max(2)).unwrap());
    }
    for r in 1..=10 {
        for k in 2..=10 {
            families.push(double_star(r, k).unwrap());
            families.push(complete_bipartite(r, k).unwrap());
        }
    }
    for g in &families {
        graph_properties(g, true)?;
        touched += 1;
    }

    let mut codes = 0usize;
    for n in 2..=6usize {
        let len = n - 2;
        for rank in 0..n.pow(len as u32) {
            let mut rest = rank;
            let code: Vec<usize> = (0..len)
                .map(|_| {
                    let v = rest % n;
                    rest /= n;
                    v
                })
                .collect();
            let back = prufer_roundtrip(&code).map_err(|e| e.to_string())?;
            ensure!(back == code, "Prüfer round trip {code:?} -> {back:?}");
            codes += 1;
        }
    }
    Ok(format!(
        "{touched} graphs, {codes} Prüfer codes, zero failures"
    ))
}

// 10. Two full runs give identical bytes, each inside the time budget.
fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    let mut slowest = Duration::ZERO;
    for i in 0..2 {
        let path = dir.path().join(format!("report{i}.csv"));
        let start = Instant::now();
        let out = cli(&["verify", "--suite", "all", "--out", path.to_str().unwrap()])?;
        slowest = slowest.max(start.elapsed());
        ensure!(out.status.success(), "verify exited with {}", out.status);
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure!(outputs[0] == outputs[1], "reports differ between runs");
    ensure!(
        slowest < Duration::from_secs(120),
        "a full run took {slowest:?}"
    );
    Ok(format!(
        "{} bytes identical; slowest run {:.2}s",
        outputs[0].len(),
        slowest.as_secs_f64()
    ))
}

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            id: 1,
            name: "table reproduction",
            limit: secs(1),
            run: table1_reproduction,
        },
        Criterion {
            id: 2,
            name: "caterpillar irr exact",
            limit: secs(1),
            run: caterpillar_irr_exact,
        },
        Criterion {
            id: 3,
            name: "caterpillar sigma discrepancy",
            limit: None,
            run: caterpillar_sigma_discrepancy,
        },
        Criterion {
            id: 4,
            name: "exact closed forms",
            limit: secs(30),
            run: exact_closed_forms,
        },
        Criterion {
            id: 5,
            name: "extremal enumeration",
            limit: secs(60),
            run: extremal_enumeration,
        },
        Criterion {
            id: 6,
            name: "bounds never violated",
            limit: secs(60),
            run: bounds_never_violated,
        },
        Criterion {
            id: 7,
            name: "spectral irregularity maximum",
            limit: secs(60),
            run: bell_maximum,
        },
        Criterion {
            id: 8,
            name: "sequence formula fidelity",
            limit: None,
            run: sequence_formula_fidelity,
        },
        Criterion {
            id: 9,
            name: "property suites",
            limit: None,
            run: property_suites,
        },
        Criterion {
            id: 10,
            name: "determinism",
            limit: None,
            run: determinism,
        },
    ];

    let _ = irrlab::init_thread_pool_from_env();
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!(
                "took {:.2}s, limit {}s",
                elapsed.as_secs_f64(),
                limit.as_secs()
            )),
            (r, _) => r,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {:>2} {tag} {} ({:.2}s): {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
