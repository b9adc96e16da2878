use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;
use serde_json::json;

use crate::closed_forms::{ClaimId, Expectation};
use crate::format;

/// A claimed or computed quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Int(i64),
    Real(f64),
    Missing,
}

impl Value {
    fn as_f64(self) -> Option<f64> {
        match self {
            Value::Int(v) => Some(v as f64),
            Value::Real(v) => Some(v),
            Value::Missing => None,
        }
    }

    /// `self - other`; exact when both sides are integers.
    pub fn minus(self, other: Value) -> Value {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a - b),
            (a, b) => match (a.as_f64(), b.as_f64()) {
                (Some(a), Some(b)) => Value::Real(a - b),
                _ => Value::Missing,
            },
        }
    }

    fn to_json(self) -> serde_json::Value {
        match self {
            Value::Int(v) => json!(v),
            // round-trip through the 12-digit text so JSON and CSV agree
            Value::Real(v) => json!(format::real(v).parse::<f64>().unwrap_or(v)),
            Value::Missing => serde_json::Value::Null,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Real(v) => f.write_str(&format::real(*v)),
            Value::Missing => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    Mismatch,
    BoundHolds,
    BoundViolated,
    Unverifiable,
}

impl Status {
    pub const ALL: [Status; 5] = [
        Status::Match,
        Status::Mismatch,
        Status::BoundHolds,
        Status::BoundViolated,
        Status::Unverifiable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::BoundHolds => "bound_holds",
            Status::BoundViolated => "bound_violated",
            Status::Unverifiable => "unverifiable",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Named integer parameters of one check, e.g. `n=3;m=3`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Params(pub Vec<(&'static str, i64)>);

impl Params {
    pub fn new(pairs: &[(&'static str, i64)]) -> Params {
        Params(pairs.to_vec())
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// Outcome of checking one claim at one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct ClaimRecord {
    pub claim: ClaimId,
    pub params: Params,
    pub claimed: Value,
    pub computed: Value,
    pub delta: Value,
    pub status: Status,
}

impl ClaimRecord {
    pub fn exact(claim: ClaimId, params: Params, claimed: i64, computed: i64) -> Self {
        let status = if claimed == computed {
            Status::Match
        } else {
            Status::Mismatch
        };
        ClaimRecord {
            claim,
            params,
            claimed: Value::Int(claimed),
            computed: Value::Int(computed),
            delta: Value::Int(computed - claimed),
            status,
        }
    }

    pub fn approx(claim: ClaimId, params: Params, claimed: f64, computed: f64, tol: f64) -> Self {
        let delta = computed - claimed;
        let status = if delta.abs() <= tol {
            Status::Match
        } else {
            Status::Mismatch
        };
        ClaimRecord {
            claim,
            params,
            claimed: Value::Real(claimed),
            computed: Value::Real(computed),
            delta: Value::Real(delta),
            status,
        }
    }

    /// `bound` is the claimed upper bound, `value` the computed quantity.
    pub fn bound(claim: ClaimId, params: Params, bound: Value, value: Value, holds: bool) -> Self {
        ClaimRecord {
            claim,
            params,
            claimed: bound,
            computed: value,
            delta: value.minus(bound),
            status: if holds {
                Status::BoundHolds
            } else {
                Status::BoundViolated
            },
        }
    }

    pub fn unverifiable(claim: ClaimId, params: Params, claimed: Value, computed: Value) -> Self {
        ClaimRecord {
            claim,
            params,
            claimed,
            computed,
            delta: Value::Missing,
            status: Status::Unverifiable,
        }
    }

    /// A failure under `--strict`: a violated bound, or a mismatch on a
    /// claim expected to be exact.
    pub fn is_strict_failure(&self) -> bool {
        self.status == Status::BoundViolated
            || (self.status == Status::Mismatch && self.claim.expectation() == Expectation::Exact)
    }

    fn sort_key(&self) -> (&'static str, &Params) {
        (self.claim.as_str(), &self.params)
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.claim, self.params, self.claimed, self.computed, self.delta, self.status
        )
    }

    fn to_json(&self) -> serde_json::Value {
        json!({
            "claim": self.claim.as_str(),
            "params": self.params.to_string(),
            "claimed": self.claimed.to_json(),
            "computed": self.computed.to_json(),
            "delta": self.delta.to_json(),
            "status": self.status.as_str(),
        })
    }
}

pub(crate) fn sort_records(records: &mut [ClaimRecord]) {
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()).then(Ordering::Equal));
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub suites: Vec<String>,
    pub max_tree_n: usize,
    pub max_graph_n: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub counts: BTreeMap<Status, usize>,
    /// Set when the Table 1 suite ran.
    pub table1_exact: Option<bool>,
    pub strict_failures: usize,
}

/// Records in canonical order plus summary and provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub records: Vec<ClaimRecord>,
    pub summary: Summary,
    pub provenance: Provenance,
}

pub const CSV_HEADER: &str = "claim,params,claimed,computed,delta,status";

impl Report {
    pub fn new(
        mut records: Vec<ClaimRecord>,
        table1_exact: Option<bool>,
        provenance: Provenance,
    ) -> Self {
        sort_records(&mut records);
        let mut counts: BTreeMap<Status, usize> = Status::ALL.iter().map(|&s| (s, 0)).collect();
        for r in &records {
            *counts.entry(r.status).or_default() += 1;
        }
        let strict_failures = records.iter().filter(|r| r.is_strict_failure()).count();
        Report {
            records,
            summary: Summary {
                counts,
                table1_exact,
                strict_failures,
            },
            provenance,
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.summary.counts.get(&status).copied().unwrap_or(0)
    }

    pub fn records_for(&self, claim: ClaimId) -> impl Iterator<Item = &ClaimRecord> {
        self.records.iter().filter(move |r| r.claim == claim)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.records.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            out.push_str(&r.csv_line());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let counts: serde_json::Map<String, serde_json::Value> = self
            .summary
            .counts
            .iter()
            .map(|(s, c)| (s.as_str().to_string(), json!(c)))
            .collect();
        let mut summary = json!({
            "counts": counts,
            "strict_failures": self.summary.strict_failures,
        });
        if let Some(exact) = self.summary.table1_exact {
            summary["table1_exact"] = json!(exact);
        }
        let doc = json!({
            "records": self.records.iter().map(ClaimRecord::to_json).collect::<Vec<_>>(),
            "summary": summary,
            "provenance": self.provenance,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("report is valid JSON");
        text.push('\n');
        text
    }

    /// Per-claim tallies in a fixed-width table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<16} {:<12} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
            "claim", "expect", "records", "match", "mismatch", "holds", "violated", "unverif"
        );
        for claim in ClaimId::ALL {
            let mut tally = [0usize; 5];
            for r in self.records_for(claim) {
                tally[Status::ALL.iter().position(|&s| s == r.status).unwrap()] += 1;
            }
            let total: usize = tally.iter().sum();
            if total == 0 {
                continue;
            }
            let expect = serde_json::to_value(claim.expectation()).unwrap();
            let _ = writeln!(
                out,
                "{:<16} {:<12} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
                claim.as_str(),
                expect.as_str().unwrap_or(""),
                total,
                tally[0],
                tally[1],
                tally[2],
                tally[3],
                tally[4]
            );
        }
        let _ = writeln!(out);
        for (status, count) in &self.summary.counts {
            let _ = writeln!(out, "{:<16} {count}", status.as_str());
        }
        if let Some(exact) = self.summary.table1_exact {
            let _ = writeln!(out, "{:<16} {exact}", "table1_exact");
        }
        let _ = writeln!(
            out,
            "{:<16} {}",
            "strict_failures", self.summary.strict_failures
        );
        out
    }
}
