//! JSON reports. Field order is fixed, so equal inputs give byte-identical
//! output.

use qmatrix_core::oracle::OracleReport;
use qmatrix_core::{AlgorithmResult, GateStats, StageRecord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::format::matrix_to_json;
use crate::{Algorithm, CliError};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sampling {
    pub shots: u64,
    pub seed: u64,
    pub successes: u64,
    pub frequency: f64,
}

impl Sampling {
    /// Simulates `shots` independent runs of the final measurement.
    pub fn draw(probability: f64, shots: u64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let successes = (0..shots)
            .filter(|_| rng.random::<f64>() < probability)
            .count() as u64;
        let frequency = if shots == 0 {
            0.0
        } else {
            successes as f64 / shots as f64
        };
        Sampling {
            shots,
            seed,
            successes,
            frequency,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub algorithm: &'static str,
    pub decoded_matrix: Value,
    /// Multiplier that turns `decoded_matrix` into the result on the raw inputs.
    pub scale: f64,
    pub success_probability: f64,
    pub gate_stats: GateStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<StageRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampling: Option<Sampling>,
}

impl Report {
    pub fn new(
        algorithm: Algorithm,
        result: &AlgorithmResult,
        trace: bool,
        sampling: Option<Sampling>,
    ) -> Result<Self, CliError> {
        Ok(Report {
            algorithm: algorithm.label(),
            decoded_matrix: matrix_to_json(&result.output.decode()?),
            scale: result.output.scale,
            success_probability: round_significant(result.success_probability),
            gate_stats: result.stats,
            trace: trace.then(|| result.stage_trace.clone()),
            sampling,
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn verify_json(algorithm: Algorithm, report: &OracleReport) -> String {
    let body = json!({
        "algorithm": algorithm.label(),
        "expected": matrix_to_json(&report.expected),
        "rescale_factor": report.rescale_factor,
        "max_abs_diff": report.max_abs_diff,
        "probability_expected": round_significant(report.probability_expected),
        "probability_observed": round_significant(report.probability_observed),
        "passed": report.passed(),
    });
    let mut s = serde_json::to_string_pretty(&body).expect("report serializes");
    s.push('\n');
    s
}

/// Rounds to 15 significant digits.
pub fn round_significant(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.14e}").parse().expect("formatted float parses")
}
