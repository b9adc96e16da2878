//! Claim adjudication: every closed form is run against direct computation
//! and the outcome is recorded as data.

mod record;
mod search;
mod suites;
mod table1;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generators::MAX_ENUM_GRAPH_N;

pub use record::{ClaimRecord, Params, Provenance, Report, Status, Summary, Value, CSV_HEADER};
pub use search::{
    arrangement_extremes, check_hy1, distinct_permutations, extremal_trees, hy1_pattern, spine_irr,
    spine_sigma, tree_for_rank, ArrangementExtremes, ExtremalTrees, Hy1Outcome, MAX_EXTREMAL_N,
    MAX_HY1_LEN,
};
pub use suites::{
    bell_maximizer, check_bell, check_bounds_suite, check_caterpillar_grid, check_caterpillar_nn,
    check_claims, check_complete_bipartite, check_double_star, check_hy_sig3, check_hy_sig4,
    check_lemma2, check_max_cat, check_max_edges, check_seq4_hyp, check_seq4_script,
    check_spine_irr, check_star, max_cat_case, sig_ex4_records, BELL_TOLERANCE,
    MAX_CATERPILLAR_ORDER, MAX_SUITE_TREE_N,
};
pub use table1::{reproduce_table1, Table1, Table1Row, REFERENCE_TABLE, TABLE1_CSV_HEADER};

/// Spine-degree multisets checked by the `hy1` suite. `{2,...,8}` is the
/// shortest run of distinct degrees on which the end-placement pattern is
/// not optimal.
pub const HY1_PRESETS: [&[usize]; 9] = [
    &[4, 5],
    &[3, 4, 5],
    &[2, 3, 4, 5],
    &[10, 8, 3, 2],
    &[8, 5, 3, 2],
    &[2, 3, 4, 5, 6],
    &[2, 3, 4, 5, 6, 7],
    &[2, 3, 4, 5, 6, 7, 8],
    &[3, 3, 4, 6, 7, 9],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Grid,
    Table1,
    Bounds,
    Lemma2,
    Bell,
    Hy1,
    Claims,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Grid,
        Suite::Table1,
        Suite::Bounds,
        Suite::Lemma2,
        Suite::Bell,
        Suite::Hy1,
        Suite::Claims,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Grid => "grid",
            Suite::Table1 => "table1",
            Suite::Bounds => "bounds",
            Suite::Lemma2 => "lemma2",
            Suite::Bell => "bell",
            Suite::Hy1 => "hy1",
            Suite::Claims => "claims",
        }
    }

    /// Parses a suite name; `all` expands to every suite.
    pub fn parse_selection(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        name.parse().map(|s| vec![s])
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown suite '{s}' (expected all, grid, table1, bounds, lemma2, bell, hy1 or claims)"
                ))
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub suites: Vec<Suite>,
    pub max_tree_n: usize,
    pub max_graph_n: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suites: Suite::ALL.to_vec(),
            max_tree_n: MAX_SUITE_TREE_N,
            max_graph_n: MAX_ENUM_GRAPH_N,
        }
    }
}

impl VerifyConfig {
    fn validate(&self) -> Result<()> {
        if self.max_tree_n > MAX_SUITE_TREE_N {
            return Err(Error::CapExceeded {
                what: "suite tree order",
                cap: MAX_SUITE_TREE_N,
                got: self.max_tree_n,
            });
        }
        if self.max_graph_n > MAX_ENUM_GRAPH_N {
            return Err(Error::CapExceeded {
                what: "suite graph order",
                cap: MAX_ENUM_GRAPH_N,
                got: self.max_graph_n,
            });
        }
        if self.max_tree_n < 3 || self.max_graph_n < 2 {
            return Err(Error::invalid(format!(
                "caps too small: max_tree_n={} (min 3), max_graph_n={} (min 2)",
                self.max_tree_n, self.max_graph_n
            )));
        }
        Ok(())
    }
}

struct SuiteOutput {
    records: Vec<ClaimRecord>,
    table1_exact: Option<bool>,
}

fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<SuiteOutput> {
    let records = match suite {
        Suite::Grid => check_caterpillar_grid(1..=12, 1..=12)?,
        Suite::Table1 => {
            let table = reproduce_table1();
            let mut records = Vec::new();
            for row in &table.rows {
                records.extend(check_caterpillar_grid(row.n..=row.n, row.m..=row.m)?);
            }
            return Ok(SuiteOutput {
                records,
                table1_exact: Some(table.exact),
            });
        }
        Suite::Bounds => check_bounds_suite(config.max_tree_n, config.max_graph_n)?,
        Suite::Lemma2 => check_lemma2(2..=config.max_tree_n)?,
        Suite::Bell => check_bell(2..=config.max_graph_n)?,
        Suite::Hy1 => HY1_PRESETS
            .iter()
            .map(|preset| check_hy1(preset).map(|o| o.record))
            .collect::<Result<_>>()?,
        Suite::Claims => check_claims(config.max_graph_n)?,
    };
    Ok(SuiteOutput {
        records,
        table1_exact: None,
    })
}

/// Runs the selected suites and assembles one report in canonical order.
/// Suites run concurrently; output bytes do not depend on scheduling.
pub fn run_all(config: &VerifyConfig) -> Result<Report> {
    config.validate()?;
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();

    let outputs = suites
        .par_iter()
        .map(|&suite| {
            run_suite(suite, config).map_err(|e| Error::Suite {
                suite: suite.as_str(),
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut table1_exact = None;
    let mut records = Vec::new();
    for out in outputs {
        table1_exact = table1_exact.or(out.table1_exact);
        records.extend(out.records);
    }
    // table1 and grid share cells; identical checks appear once
    record::sort_records(&mut records);
    records.dedup_by(|a, b| a.claim == b.claim && a.params == b.params);

    let provenance = Provenance {
        tool: "irrlab",
        version: env!("CARGO_PKG_VERSION"),
        suites: suites.iter().map(|s| s.as_str().to_string()).collect(),
        max_tree_n: config.max_tree_n,
        max_graph_n: config.max_graph_n,
    };
    Ok(Report::new(records, table1_exact, provenance))
}
