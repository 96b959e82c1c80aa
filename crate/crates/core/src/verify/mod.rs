//! Extremal scans over enumerated classes and the checks built on them.
//!
//! A scan pulls graphs from a [`GraphStream`] in batches, evaluates each
//! batch on a worker pool, and folds per-batch partial results with an
//! order-independent merge. Exact kernels keep only exact ties. Floating
//! kernels keep everything within [`NEAR_TIE_BAND`] of the running extreme
//! and split it into ties (within [`TIE_TOLERANCE`]) and near ties at the
//! end.

mod checks;
mod conjecture;

pub use checks::{
    verify_f_monotone, verify_max_claims, verify_theorem1, verify_theorem2, CheckKind, CheckReport,
    CheckRow,
};
pub use conjecture::{check_conjecture, ConjectureVerdict, Verdict};

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::canon::canonical_form;
use crate::enumerate::{EnumError, EnumSpec, GraphStream};
use crate::graph::Graph;
use crate::indices::{bid_index, to_f64, IndexError, IndexKernel, Rational};

/// Relative tolerance under which two floating index values count as equal.
pub const TIE_TOLERANCE: f64 = 1e-9;
/// Relative band in which non-tied floating values are reported as near ties.
pub const NEAR_TIE_BAND: f64 = 1e-6;

const BATCH: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("the requested family is empty")]
    EmptyDomain,
    #[error("theorem violation in {check}: witness {witness}")]
    TheoremViolation { check: String, witness: String },
    #[error("claim violation in {check}: {detail}")]
    ClaimViolation { check: String, detail: String },
    #[error("refused: {0}")]
    RefusedOutOfHypothesis(String),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Enum(#[from] EnumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    Min,
    Max,
}

impl std::str::FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "min" => Ok(Direction::Min),
            "max" => Ok(Direction::Max),
            other => Err(format!("unknown direction `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub workers: usize,
}

impl ScanConfig {
    pub fn new(workers: usize) -> Self {
        ScanConfig {
            workers: workers.max(1),
        }
    }
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig::new(std::thread::available_parallelism().map_or(1, |n| n.get()))
    }
}

/// The outcome of one scan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    pub index: String,
    pub direction: Direction,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub value_exact: Option<Rational>,
    #[serde(serialize_with = "serialize_f64_6")]
    pub value_float: f64,
    /// Canonical graph6 codes of every optimum, sorted.
    pub attaining: Vec<String>,
    pub class_size: usize,
    /// Floating scans only: graphs inside the flag band but not tied.
    pub near_ties: Vec<String>,
    /// Set for classes below four vertices.
    pub outside_hypotheses: bool,
}

impl ExtremalReport {
    pub fn attaining_graphs(&self) -> Vec<Graph> {
        self.attaining
            .iter()
            .map(|s| crate::graph6::decode(s).expect("reports hold valid graph6"))
            .collect()
    }
}

pub fn serialize_rational<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub(crate) fn serialize_opt_rational<S: Serializer>(
    value: &Option<Rational>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

pub(crate) fn serialize_f64_6<S: Serializer>(value: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round6(*value))
}

pub fn round6(value: f64) -> f64 {
    (value * 1e6).round() / 1e6
}

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Exact(Rational),
    Float(f64),
}

impl Value {
    fn as_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => to_f64(r),
            Value::Float(f) => *f,
        }
    }

    /// `Greater` means `self` is more extreme in `direction`.
    fn compare(&self, other: &Value, direction: Direction) -> Ordering {
        let ord = match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a.cmp(b),
            _ => self.as_f64().total_cmp(&other.as_f64()),
        };
        match direction {
            Direction::Max => ord,
            Direction::Min => ord.reverse(),
        }
    }

    fn within(&self, best: &Value, tolerance: f64) -> bool {
        match (self, best) {
            (Value::Exact(a), Value::Exact(b)) => a == b,
            _ => {
                let (a, b) = (self.as_f64(), best.as_f64());
                (a - b).abs() <= tolerance * b.abs()
            }
        }
    }
}

#[derive(Debug, Clone, Default)]
struct Partial {
    candidates: Vec<(Graph, Value)>,
    best: Option<Value>,
    count: usize,
}

impl Partial {
    fn single(g: Graph, value: Value) -> Self {
        Partial {
            best: Some(value.clone()),
            candidates: vec![(g, value)],
            count: 1,
        }
    }

    fn merge(mut self, other: Partial, direction: Direction) -> Partial {
        self.count += other.count;
        let best = match (self.best.take(), other.best) {
            (Some(a), Some(b)) => Some(if b.compare(&a, direction) == Ordering::Greater {
                b
            } else {
                a
            }),
            (a, b) => a.or(b),
        };
        self.candidates.extend(other.candidates);
        if let Some(b) = &best {
            self.candidates.retain(|(_, v)| v.within(b, NEAR_TIE_BAND));
        }
        self.best = best;
        self
    }
}

fn evaluate(g: &Graph, kernel: &IndexKernel) -> Result<Value, IndexError> {
    if !g.is_connected() {
        return Err(IndexError::UnsupportedGraph("graph is not connected"));
    }
    let v = bid_index(g, kernel)?;
    Ok(match v.exact {
        Some(r) => Value::Exact(r),
        None => Value::Float(v.value),
    })
}

/// Scans a class. Infeasible or empty classes give `EmptyDomain`.
pub fn scan(
    spec: &EnumSpec,
    kernel: &IndexKernel,
    direction: Direction,
    config: &ScanConfig,
) -> Result<ExtremalReport, VerifyError> {
    if !spec.is_feasible() {
        return Err(VerifyError::EmptyDomain);
    }
    scan_stream(spec.stream(), spec.n, spec.k, kernel, direction, config)
}

pub fn scan_stream(
    mut stream: GraphStream,
    n: usize,
    k: usize,
    kernel: &IndexKernel,
    direction: Direction,
    config: &ScanConfig,
) -> Result<ExtremalReport, VerifyError> {
    if stream.is_empty_domain() {
        return Err(VerifyError::EmptyDomain);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .expect("thread pool");
    let mut acc = Partial::default();
    loop {
        let batch = stream.next_batch(BATCH);
        if batch.is_empty() {
            break;
        }
        let part = pool.install(|| {
            batch
                .into_par_iter()
                .map(|g| {
                    let value = evaluate(&g, kernel)?;
                    Ok::<_, IndexError>(Partial::single(g, value))
                })
                .try_reduce(Partial::default, |a, b| Ok(a.merge(b, direction)))
        })?;
        acc = acc.merge(part, direction);
    }
    let Some(best) = acc.best.clone() else {
        return Err(VerifyError::EmptyDomain);
    };
    let mut attaining = Vec::new();
    let mut near_ties = Vec::new();
    for (g, v) in &acc.candidates {
        let code = canonical_form(g).as_str().to_string();
        if v.within(&best, TIE_TOLERANCE) {
            attaining.push(code);
        } else {
            near_ties.push(code);
        }
    }
    attaining.sort();
    attaining.dedup();
    near_ties.sort();
    near_ties.dedup();
    Ok(ExtremalReport {
        n,
        k,
        index: kernel.name().to_string(),
        direction,
        value_float: best.as_f64(),
        value_exact: match best {
            Value::Exact(r) => Some(r),
            Value::Float(_) => None,
        },
        attaining,
        class_size: acc.count,
        near_ties,
        outside_hypotheses: n < 4,
    })
}
