use serde::Serialize;

use super::{scan, Direction, ScanConfig, VerifyError};
use crate::enumerate::EnumSpec;
use crate::indices::{IndexKernel, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Agree,
    Disagree,
    /// The sets differ and some tree lies in the ABC flag band.
    NearTie,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureVerdict {
    pub n: usize,
    #[serde(serialize_with = "super::serialize_rational")]
    pub max_azi_value: Rational,
    pub max_azi_set: Vec<String>,
    #[serde(serialize_with = "super::serialize_f64_6")]
    pub min_abc_value: f64,
    pub min_abc_set: Vec<String>,
    pub abc_near_ties: Vec<String>,
    pub verdict: Verdict,
    pub class_size: usize,
    pub outside_hypotheses: bool,
}

/// Compares the maximum-AZI trees on `n` vertices with the minimum-ABC trees.
/// The sets are compared for equality.
pub fn check_conjecture(n: usize, config: &ScanConfig) -> Result<ConjectureVerdict, VerifyError> {
    if n < 3 {
        return Err(VerifyError::RefusedOutOfHypothesis(format!(
            "trees on {n} vertices have no defined AZI"
        )));
    }
    let spec = EnumSpec::trees(n);
    let azi = scan(&spec, &IndexKernel::azi(), Direction::Max, config)?;
    let abc = scan(&spec, &IndexKernel::abc(), Direction::Min, config)?;
    let verdict = if azi.attaining == abc.attaining {
        Verdict::Agree
    } else if !abc.near_ties.is_empty() {
        Verdict::NearTie
    } else {
        Verdict::Disagree
    };
    Ok(ConjectureVerdict {
        n,
        max_azi_value: azi.value_exact.expect("AZI is exact"),
        max_azi_set: azi.attaining,
        min_abc_value: abc.value_float,
        min_abc_set: abc.attaining,
        abc_near_ties: abc.near_ties,
        verdict,
        class_size: azi.class_size,
        outside_hypotheses: n < 4,
    })
}
