//! The `aziscan` command line.
//!
//! [`run`] parses an argument vector, executes one subcommand and writes the
//! formatted result. Exit status is 0 on success, 1 when a verification
//! check fails, and 2 for usage and input errors.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use aziscan::transform::ClimbStep;
use aziscan::verify::{
    round6, verify_f_monotone, verify_max_claims, verify_theorem1, verify_theorem2, CheckReport,
};
use aziscan::{
    abc, azi, bid_index, canonical_form, check_conjecture, construct, graph6, hill_climb_max_azi,
    scan, to_f64, ClimbSeed, ClimbTrace, ConjectureVerdict, Direction, EnumSpec, ExtremalReport,
    FamilySpec, Graph, IndexError, IndexKernel, ScanConfig,
};
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "aziscan",
    version,
    about = "Exact AZI/ABC computation, tree and cactus enumeration, extremal checks"
)]
struct Cli {
    /// Output format; the default depends on the subcommand.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Maximum parallel scan workers [default: available parallelism].
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexArg {
    Azi,
    Abc,
}

impl IndexArg {
    fn kernel(self) -> IndexKernel {
        match self {
            IndexArg::Azi => IndexKernel::azi(),
            IndexArg::Abc => IndexKernel::abc(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    Min,
    Max,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct GraphInput {
    /// Read graph6 records from PATH, or stdin for `-`.
    #[arg(long, value_name = "PATH")]
    graph6: Option<String>,
    /// A family member such as star:7, path:10, cycle:5, g0:9,3, tplus:12.
    #[arg(long, value_name = "SPEC")]
    family: Option<FamilySpec>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an index on each input graph.
    Compute {
        #[arg(long, value_enum)]
        index: IndexArg,
        #[command(flatten)]
        input: GraphInput,
    },
    /// List the connected cacti with n vertices and k cycles, one per class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Minimum or maximum of an index over a class, with every optimum.
    Extremal {
        #[arg(long, value_enum)]
        index: IndexArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, value_enum)]
        direction: DirectionArg,
    },
    /// Run one of the verification tables.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Compare maximum-AZI trees with minimum-ABC trees.
    Conjecture {
        /// A single order; conflicts with --nmax.
        #[arg(long, conflicts_with = "nmax")]
        n: Option<usize>,
        /// Every order from 3 to NMAX.
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Hill-climb toward a large AZI tree.
    Climb {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        input: GraphInput,
        /// Seed for the random start tree used when no graph is given.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        max_steps: usize,
    },
    /// Build a family member.
    Family {
        #[arg(long, value_name = "SPEC")]
        family: FamilySpec,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Minimum AZI over every feasible class equals the closed-form bound, uniquely.
    Theorem1 {
        /// Largest order for classes with cycles.
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        /// Largest order for trees [default: NMAX].
        #[arg(long)]
        tree_nmax: Option<usize>,
    },
    /// Path structure of the maximum-AZI trees, n >= 10.
    Theorem2 {
        #[arg(long, conflicts_with = "nmax")]
        n: Option<usize>,
        /// Every order from 10 to NMAX.
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// The maximum-AZI trees for 4 <= n <= 9.
    Maxclaims {
        /// A single order [default: all of 4..=9].
        #[arg(long)]
        n: Option<usize>,
    },
    /// The closed-form bound is strictly increasing in k.
    Fmonotone {
        #[arg(long, default_value_t = 1000)]
        nmax: usize,
    },
}

/// The value of one index on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValueRow {
    pub graph6: String,
    pub index: String,
    pub value_exact: Option<String>,
    pub value_float: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphList {
    pub n: usize,
    pub k: usize,
    pub count: usize,
    pub graphs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyRow {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    pub canonical: String,
    pub azi_exact: Option<String>,
    pub azi_float: Option<f64>,
    pub abc: f64,
}

/// Everything a subcommand can print.
#[derive(Debug, Clone)]
pub enum Report {
    Values(Vec<ValueRow>),
    Graphs(GraphList),
    Extremal(ExtremalReport),
    Checks(CheckReport),
    /// One verdict per order; a single `--n` run prints a bare object.
    Conjecture(Vec<ConjectureVerdict>, bool),
    Climb(ClimbTrace),
    Family(FamilyRow),
}

impl Report {
    fn default_format(&self) -> Format {
        match self {
            Report::Graphs(_) | Report::Family(_) => Format::Graph6,
            _ => Format::Json,
        }
    }

    fn failed(&self) -> bool {
        matches!(self, Report::Checks(c) if !c.passed())
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Renders a report. Field order is fixed; rationals appear as `p/q`
/// strings next to a float rounded to six places.
pub fn format_report(report: &Report, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let mut out = match report {
                Report::Values(v) => serde_json::to_vec_pretty(v),
                Report::Graphs(g) => serde_json::to_vec_pretty(g),
                Report::Extremal(r) => serde_json::to_vec_pretty(r),
                Report::Checks(c) => serde_json::to_vec_pretty(c),
                Report::Conjecture(v, true) if v.len() == 1 => serde_json::to_vec_pretty(&v[0]),
                Report::Conjecture(v, _) => serde_json::to_vec_pretty(v),
                Report::Climb(t) => serde_json::to_vec_pretty(t),
                Report::Family(f) => serde_json::to_vec_pretty(f),
            }
            .map_err(std::io::Error::from)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => csv_report(report),
        Format::Graph6 => {
            let lines: Vec<String> = match report {
                Report::Graphs(g) => g.graphs.clone(),
                Report::Extremal(r) => r.attaining.clone(),
                Report::Climb(t) => std::iter::once(t.seed_graph6.clone())
                    .chain(t.steps.iter().map(|s| s.graph6.clone()))
                    .collect(),
                Report::Family(f) => vec![f.graph6.clone()],
                _ => return Err(usage("graph6 output is only available for graph reports")),
            };
            Ok(lines
                .iter()
                .flat_map(|l| format!("{l}\n").into_bytes())
                .collect())
        }
    }
}

fn csv_report(report: &Report) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    match report {
        Report::Values(rows) => {
            w.write_record(["graph6", "index", "value_exact", "value_float"])?;
            for r in rows {
                w.write_record([
                    r.graph6.as_str(),
                    &r.index,
                    r.value_exact.as_deref().unwrap_or(""),
                    &r.value_float.to_string(),
                ])?;
            }
        }
        Report::Graphs(g) => {
            w.write_record(["graph6"])?;
            for code in &g.graphs {
                w.write_record([code])?;
            }
        }
        Report::Extremal(r) => {
            w.write_record([
                "n",
                "k",
                "index",
                "direction",
                "value_exact",
                "value_float",
                "graph6",
                "class_size",
            ])?;
            let exact = r
                .value_exact
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default();
            for code in &r.attaining {
                w.write_record([
                    r.n.to_string(),
                    r.k.to_string(),
                    r.index.clone(),
                    format!("{:?}", r.direction),
                    exact.clone(),
                    round6(r.value_float).to_string(),
                    code.clone(),
                    r.class_size.to_string(),
                ])?;
            }
        }
        Report::Checks(c) => {
            for row in &c.rows {
                w.serialize(row)?;
            }
        }
        Report::Conjecture(verdicts, _) => {
            w.write_record([
                "n",
                "verdict",
                "max_azi_value",
                "max_azi_set",
                "min_abc_value",
                "min_abc_set",
                "abc_near_ties",
                "class_size",
                "outside_hypotheses",
            ])?;
            for v in verdicts {
                w.write_record([
                    v.n.to_string(),
                    format!("{:?}", v.verdict),
                    v.max_azi_value.to_string(),
                    v.max_azi_set.join(" "),
                    round6(v.min_abc_value).to_string(),
                    v.min_abc_set.join(" "),
                    v.abc_near_ties.join(" "),
                    v.class_size.to_string(),
                    v.outside_hypotheses.to_string(),
                ])?;
            }
        }
        Report::Climb(t) => {
            w.write_record(["step", "description", "azi", "azi_float", "graph6"])?;
            let seed = ClimbStep {
                description: "seed".into(),
                azi: t.seed_azi.clone(),
                graph6: t.seed_graph6.clone(),
            };
            for (i, s) in std::iter::once(&seed).chain(&t.steps).enumerate() {
                w.write_record([
                    i.to_string(),
                    s.description.clone(),
                    s.azi.to_string(),
                    round6(to_f64(&s.azi)).to_string(),
                    s.graph6.clone(),
                ])?;
            }
        }
        Report::Family(f) => w.serialize(f)?,
    }
    w.into_inner().map_err(|e| CliError::Io(e.into_error()))
}

fn read_graphs(input: &GraphInput, stdin: &mut dyn Read) -> Result<Vec<Graph>, CliError> {
    if let Some(spec) = &input.family {
        return Ok(vec![construct(spec).map_err(usage)?]);
    }
    let Some(source) = &input.graph6 else {
        return Err(usage("give --graph6 <path|-> or --family <spec>"));
    };
    let text = if source == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(source).map_err(|e| usage(format!("{source}: {e}")))?
    };
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| graph6::decode(l.trim()).map_err(|e| usage(format!("line {}: {e}", i + 1))))
        .collect()
}

fn compute(index: IndexArg, graphs: &[Graph]) -> Result<Report, CliError> {
    let kernel = index.kernel();
    let mut rows = Vec::with_capacity(graphs.len());
    for g in graphs {
        if !g.is_connected() {
            return Err(usage(IndexError::UnsupportedGraph(
                "graph is not connected",
            )));
        }
        let (exact, float) = match index {
            IndexArg::Azi => {
                let v = azi(g).map_err(usage)?;
                (Some(v.to_string()), to_f64(&v))
            }
            IndexArg::Abc => {
                let v = bid_index(g, &kernel).map_err(usage)?;
                (None, v.value)
            }
        };
        rows.push(ValueRow {
            graph6: graph6::encode(g),
            index: kernel.name().to_string(),
            value_exact: exact,
            value_float: round6(float),
        });
    }
    Ok(Report::Values(rows))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Report, CliError> {
    let config = cli
        .workers
        .map_or_else(ScanConfig::default, |w| ScanConfig::new(w as usize));
    Ok(match &cli.command {
        Command::Compute { index, input } => compute(*index, &read_graphs(input, stdin)?)?,
        Command::Enumerate { n, k } => {
            let spec = EnumSpec::new(*n, *k);
            spec.validate().map_err(usage)?;
            let graphs: Vec<String> = spec
                .stream()
                .map(|g| canonical_form(&g).as_str().to_string())
                .collect();
            Report::Graphs(GraphList {
                n: *n,
                k: *k,
                count: graphs.len(),
                graphs,
            })
        }
        Command::Extremal {
            index,
            n,
            k,
            direction,
        } => {
            let direction = match direction {
                DirectionArg::Min => Direction::Min,
                DirectionArg::Max => Direction::Max,
            };
            Report::Extremal(
                scan(&EnumSpec::new(*n, *k), &index.kernel(), direction, &config).map_err(usage)?,
            )
        }
        Command::Verify { check } => Report::Checks(match check {
            VerifyCommand::Theorem1 { nmax, tree_nmax } => {
                verify_theorem1(*nmax, tree_nmax.unwrap_or(*nmax), &config).map_err(usage)?
            }
            VerifyCommand::Theorem2 { n, nmax } => {
                let orders = match (n, nmax) {
                    (Some(n), _) => *n..=*n,
                    (None, Some(m)) => 10..=*m,
                    (None, None) => 10..=10,
                };
                let rows = orders
                    .map(|n| verify_theorem2(n, &config))
                    .collect::<Result<_, _>>()
                    .map_err(usage)?;
                CheckReport { rows }
            }
            VerifyCommand::Maxclaims { n } => {
                let orders = n.map_or(4..=9, |n| n..=n);
                let rows = orders
                    .map(|n| verify_max_claims(n, &config))
                    .collect::<Result<_, _>>()
                    .map_err(usage)?;
                CheckReport { rows }
            }
            VerifyCommand::Fmonotone { nmax } => CheckReport {
                rows: vec![verify_f_monotone(*nmax).map_err(usage)?],
            },
        }),
        Command::Conjecture { n, nmax } => {
            let orders = match (n, nmax) {
                (Some(n), _) => *n..=*n,
                (None, Some(m)) => 3..=*m,
                (None, None) => return Err(usage("give --n or --nmax")),
            };
            Report::Conjecture(
                orders
                    .map(|n| check_conjecture(n, &config))
                    .collect::<Result<_, _>>()
                    .map_err(usage)?,
                n.is_some(),
            )
        }
        Command::Climb {
            n,
            input,
            seed,
            max_steps,
        } => {
            let start = if input.family.is_some() || input.graph6.is_some() {
                let mut graphs = read_graphs(input, stdin)?;
                if graphs.len() != 1 {
                    return Err(usage("climb takes exactly one seed graph"));
                }
                ClimbSeed::Graph(graphs.remove(0))
            } else {
                ClimbSeed::Random
            };
            Report::Climb(hill_climb_max_azi(*n, start, *max_steps, *seed).map_err(usage)?)
        }
        Command::Family { family } => {
            let g = construct(family).map_err(usage)?;
            let value = azi(&g).ok();
            Report::Family(FamilyRow {
                family: family.to_string(),
                n: g.vertex_count(),
                m: g.edge_count(),
                graph6: graph6::encode(&g),
                canonical: canonical_form(&g).as_str().to_string(),
                azi_float: value.as_ref().map(|v| round6(to_f64(v))),
                azi_exact: value.map(|v| v.to_string()),
                abc: round6(abc(&g).map_err(usage)?),
            })
        }
    })
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = stderr.write_all(text.as_bytes());
                    2
                }
                _ => {
                    let help = Cli::command().render_help().to_string();
                    let _ = write!(stderr, "{text}\n{help}");
                    2
                }
            };
        }
    };
    let result = execute(&cli, stdin).and_then(|report| {
        let format = cli.format.unwrap_or_else(|| report.default_format());
        Ok((format_report(&report, format)?, report.failed()))
    });
    match result {
        Ok((bytes, failed)) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &bytes),
                None => stdout.write_all(&bytes).and_then(|_| stdout.flush()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            if failed {
                let _ = writeln!(stderr, "verification failed");
                1
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
