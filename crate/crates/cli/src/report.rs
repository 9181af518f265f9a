//! Verification reports: the machine-readable output of `cover`,
//! `inscribe`, `check`, and `sigma`.
//!
//! Reports serialize with a fixed field order (struct declaration order;
//! absent optional sections are omitted) and are byte-identical across
//! runs with the same inputs and seeds, except for the `timing_ms` field,
//! which is always the last line.

use nonsep_core::covering::TheoremTag;
use nonsep_core::geometry::Vector;
use nonsep_core::separability::{ModeTag, SeparationVerdict, VerdictStatus};
use serde::Serialize;

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub instance: InstanceSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<HypothesisReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<RatioReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<SigmaReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    pub timing_ms: f64,
}

#[derive(Serialize)]
pub struct InstanceSummary {
    pub dimension: usize,
    pub members: usize,
    pub total_scale: f64,
}

#[derive(Serialize)]
pub struct HypothesisReport {
    /// "nonseparable" or "depth_at_most_k".
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub mode: String,
    /// "satisfied", "violated", or "satisfied_probabilistic".
    pub status: String,
    pub directions_tested: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

/// A separating (or depth-violating) hyperplane `{x : <x, direction> = offset}`.
#[derive(Serialize)]
pub struct WitnessReport {
    pub direction: Vec<f64>,
    pub offset: f64,
}

#[derive(Serialize)]
pub struct ConstructionReport {
    pub translation: Vec<f64>,
    pub scale: f64,
    /// The origin shift the construction normalized the body by.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalization: Option<Vec<f64>>,
    /// How the inscribed result was verified ("exact_vertex" or
    /// "sampled_support").
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<String>,
}

#[derive(Serialize)]
pub struct RatioReport {
    /// Minimal covering scale divided by the total member scale, from the
    /// minimal-cover solver.
    pub computed: f64,
    /// Exact ratio carried by the instance metadata, when present.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

#[derive(Serialize)]
pub struct SigmaReport {
    pub sigma: f64,
    pub center: Vec<f64>,
    pub iterations: usize,
    pub certified_gap: f64,
}

pub fn theorem_name(tag: TheoremTag) -> &'static str {
    match tag {
        TheoremTag::Balls => "balls",
        TheoremTag::Symmetric => "symmetric",
        TheoremTag::GeneralSigma => "general",
        TheoremTag::DimensionBound => "dimension",
        TheoremTag::SimplexFacetParallel => "simplex",
    }
}

pub fn status_name(status: VerdictStatus) -> &'static str {
    match status {
        VerdictStatus::Satisfied => "satisfied",
        VerdictStatus::Violated => "violated",
        VerdictStatus::SatisfiedProbabilistic => "satisfied_probabilistic",
    }
}

pub fn mode_name(mode: ModeTag) -> &'static str {
    match mode {
        ModeTag::Exact2d => "exact2d",
        ModeTag::Restricted => "restricted",
        ModeTag::Sampled => "sampled",
    }
}

pub fn coords(v: &Vector) -> Vec<f64> {
    v.coords().to_vec()
}

/// Builds the hypothesis section from a separability verdict.
pub fn hypothesis_from_verdict(
    verdict: &SeparationVerdict,
    check: &str,
    k: Option<usize>,
) -> HypothesisReport {
    HypothesisReport {
        check: check.to_string(),
        k,
        mode: mode_name(verdict.mode).to_string(),
        status: status_name(verdict.status).to_string(),
        directions_tested: verdict.directions_tested,
        witness: verdict.witness.as_ref().map(|(u, c)| WitnessReport {
            direction: coords(u),
            offset: *c,
        }),
    }
}

/// Renders the report as pretty JSON with a trailing newline.
pub fn emit(report: &Report) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}
