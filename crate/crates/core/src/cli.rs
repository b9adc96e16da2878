//! The `irrlab` command line: argument parsing, dispatch and exit codes.
//!
//! Exit codes are 0 on success, 1 when `verify --strict` finds a failure,
//! 2 for usage errors and violated preconditions, and 3 when the spectral
//! iteration does not converge.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{IsTerminal, Read as _, Write as _};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::generators::{
    caterpillar_from_spine, caterpillar_uniform, complete_bipartite, double_star, path, star,
    CaterpillarSpec, SpineSequence,
};
use crate::graph::{DegreeSequence, Graph};
use crate::indices::IndexBundle;
use crate::verify::{extremal_trees, reproduce_table1, run_all, Suite, VerifyConfig};
use crate::{edgelist, init_thread_pool_from_env};

pub const EXIT_OK: i32 = 0;
pub const EXIT_STRICT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "irrlab",
    version,
    about = "Irregularity indices and closed-form claim checker"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph as an edge list
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute every index of one graph
    Indices {
        /// Edge-list file to read instead of generating a family (`-` for stdin)
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the caterpillar comparison table with audit columns
    Table1 {
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites and write the claim report
    Verify {
        /// Suite to run (repeatable): all, grid, table1, bounds, lemma2, bell, hy1, claims
        #[arg(long = "suite", default_value = "all")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 8)]
        max_tree_n: usize,
        #[arg(long, default_value_t = 6)]
        max_graph_n: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit 1 on a violated bound or a mismatch of a claim expected to hold
        #[arg(long)]
        strict: bool,
    },
    /// Extremal irr and sigma over all labeled trees of one order
    Extremal {
        #[arg(long)]
        n: usize,
        /// Restrict output to one index
        #[arg(long, value_enum)]
        index: Option<IndexKind>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Star,
    DoubleStar,
    CompleteBipartite,
    Caterpillar,
    SpineCaterpillar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IndexKind {
    Irr,
    Sigma,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Comma-separated spine degrees, e.g. 4,5,4
    #[arg(long, value_delimiter = ',')]
    pub spine: Option<Vec<usize>>,
}

fn required(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| Error::invalid(format!("family {family} requires --{flag}")))
}

impl FamilyArgs {
    pub fn build(&self) -> Result<Graph> {
        let family = self
            .family
            .ok_or_else(|| Error::invalid("--family is required"))?;
        match family {
            Family::Path => path(required(self.n, "n", "path")?),
            Family::Star => star(required(self.n, "n", "star")?),
            Family::DoubleStar => double_star(
                required(self.r, "r", "double-star")?,
                required(self.k, "k", "double-star")?,
            ),
            Family::CompleteBipartite => complete_bipartite(
                required(self.m, "m", "complete-bipartite")?,
                required(self.n, "n", "complete-bipartite")?,
            ),
            Family::Caterpillar => Ok(caterpillar_uniform(CaterpillarSpec::new(
                required(self.n, "n", "caterpillar")?,
                required(self.m, "m", "caterpillar")?,
            )?)),
            Family::SpineCaterpillar => {
                let spine = self
                    .spine
                    .clone()
                    .ok_or_else(|| Error::invalid("family spine-caterpillar requires --spine"))?;
                Ok(caterpillar_from_spine(&SpineSequence::new(spine)?))
            }
        }
    }
}

/// Text when writing to a terminal, CSV for files and pipes.
fn resolve_format(format: Option<Format>, out: Option<&Path>) -> Format {
    format.unwrap_or(if out.is_none() && std::io::stdout().is_terminal() {
        Format::Text
    } else {
        Format::Csv
    })
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn render_bundle(bundle: &IndexBundle, format: Format) -> String {
    let values = bundle.values();
    match format {
        Format::Csv => format!("{}\n{}\n", IndexBundle::FIELDS.join(","), values.join(",")),
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (name, value) in IndexBundle::FIELDS.iter().zip(&values) {
                let number: serde_json::Value =
                    serde_json::from_str(value).expect("index values are numeric");
                map.insert(name.to_string(), number);
            }
            let mut text = serde_json::to_string_pretty(&map).expect("valid JSON");
            text.push('\n');
            text
        }
        Format::Text => {
            let mut text = String::new();
            for (name, value) in IndexBundle::FIELDS.iter().zip(&values) {
                let _ = writeln!(text, "{name:<16} {value}");
            }
            text
        }
    }
}

fn degseq(values: &[usize]) -> String {
    DegreeSequence(values.to_vec()).to_string()
}

/// Index name, max, argmax degree sequence, min, argmin degree sequence.
type ExtremalRow<'a> = (&'a str, u64, &'a [usize], u64, &'a [usize]);

fn render_extremal(n: usize, index: Option<IndexKind>, format: Format) -> Result<String> {
    let e = extremal_trees(n)?;
    let rows: Vec<ExtremalRow> = [
        (
            IndexKind::Irr,
            "irr",
            e.max_irr,
            &e.argmax_irr_degseq,
            e.min_irr,
            &e.argmin_irr_degseq,
        ),
        (
            IndexKind::Sigma,
            "sigma",
            e.max_sigma,
            &e.argmax_sigma_degseq,
            e.min_sigma,
            &e.argmin_sigma_degseq,
        ),
    ]
    .into_iter()
    .filter(|row| index.is_none_or(|k| k == row.0))
    .map(|(_, name, max, argmax, min, argmin)| {
        (name, max, argmax.as_slice(), min, argmin.as_slice())
    })
    .collect();

    let mut text = String::new();
    match format {
        Format::Csv => {
            text.push_str("n,trees,index,max,argmax_degseq,min,argmin_degseq\n");
            for (name, max, argmax, min, argmin) in rows {
                let _ = writeln!(
                    text,
                    "{n},{},{name},{max},\"{}\",{min},\"{}\"",
                    e.trees,
                    degseq(argmax),
                    degseq(argmin)
                );
            }
        }
        Format::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert("n".into(), json!(n));
            doc.insert("trees".into(), json!(e.trees));
            for (name, max, argmax, min, argmin) in rows {
                doc.insert(
                    name.into(),
                    json!({ "max": max, "argmax_degseq": argmax, "min": min, "argmin_degseq": argmin }),
                );
            }
            text = serde_json::to_string_pretty(&doc).expect("valid JSON");
            text.push('\n');
        }
        Format::Text => {
            let _ = writeln!(text, "n = {n}, {} labeled trees", e.trees);
            for (name, max, argmax, min, argmin) in rows {
                let _ = writeln!(text, "max_{name:<6} {max:>8}  witness {}", degseq(argmax));
                let _ = writeln!(text, "min_{name:<6} {min:>8}  witness {}", degseq(argmin));
            }
        }
    }
    Ok(text)
}

/// Executes a parsed command, returning the exit code on success.
fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

pub fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Gen { family, out } => {
            let g = family.build()?;
            emit(&edgelist::write(&g), out.as_deref())?;
        }
        Command::Indices {
            input,
            family,
            format,
            out,
        } => {
            let g = match (input, family.family) {
                (Some(_), Some(_)) => {
                    return Err(Error::invalid(
                        "--input and --family are mutually exclusive",
                    ))
                }
                (Some(path), None) => edgelist::parse(&read_input(&path)?)?,
                (None, _) => family.build()?,
            };
            let bundle = IndexBundle::compute(&g)?;
            let format = resolve_format(format, out.as_deref());
            emit(&render_bundle(&bundle, format), out.as_deref())?;
        }
        Command::Table1 { format, out } => {
            let table = reproduce_table1();
            let text = match resolve_format(format, out.as_deref()) {
                Format::Csv => table.to_csv(),
                Format::Json => table.to_json(),
                Format::Text => table.to_text(),
            };
            emit(&text, out.as_deref())?;
        }
        Command::Verify {
            suites,
            max_tree_n,
            max_graph_n,
            format,
            out,
            strict,
        } => {
            let mut selected = Vec::new();
            for name in &suites {
                selected.extend(Suite::parse_selection(name)?);
            }
            let config = VerifyConfig {
                suites: selected,
                max_tree_n,
                max_graph_n,
            };
            let report = run_all(&config)?;
            let text = match resolve_format(format, out.as_deref()) {
                Format::Csv => report.to_csv(),
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            emit(&text, out.as_deref())?;
            if strict && report.summary.strict_failures > 0 {
                eprintln!(
                    "irrlab: {} strict failure(s) in the report",
                    report.summary.strict_failures
                );
                return Ok(EXIT_STRICT_FAILURE);
            }
        }
        Command::Extremal {
            n,
            index,
            format,
            out,
        } => {
            let format = resolve_format(format, out.as_deref());
            emit(&render_extremal(n, index, format)?, out.as_deref())?;
        }
    }
    Ok(EXIT_OK)
}

/// Exit code for an error from [`execute`].
pub fn exit_code(error: &Error) -> i32 {
    match error.root() {
        Error::NoConvergence { .. } => EXIT_NUMERICAL,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first), runs the command and reports errors
/// on stderr. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if let Err(e) = init_thread_pool_from_env() {
        eprintln!("irrlab: {e}");
        return EXIT_USAGE;
    }
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("irrlab: {e}");
            exit_code(&e)
        }
    }
}
