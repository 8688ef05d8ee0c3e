//! Machine-readable output: one JSON record per line.  Payloads are
//! deterministic for fixed inputs and flags (timestamps and durations stay
//! on stderr).

use inflogic::semantics::{CandidateRecord, StableModelReport};
use inflogic::Interpretation;
use serde::Serialize;

#[derive(Serialize)]
pub struct RunRecord<'a> {
    pub record: &'static str,
    pub verb: &'a str,
    pub inputs_digest: &'a str,
    pub outcome: &'a str,
}

impl<'a> RunRecord<'a> {
    pub fn new(verb: &'a str, inputs_digest: &'a str, outcome: &'a str) -> Self {
        RunRecord {
            record: "run",
            verb,
            inputs_digest,
            outcome,
        }
    }
}

#[derive(Serialize)]
pub struct CandidateOut {
    pub record: &'static str,
    pub atoms: Vec<String>,
    pub satisfies_reduct: bool,
    pub minimal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct SummaryOut {
    pub record: &'static str,
    pub models: Vec<Vec<String>>,
    pub candidates_examined: usize,
}

#[derive(Serialize)]
pub struct TextOut<'a> {
    pub record: &'static str,
    pub text: &'a str,
}

#[derive(Serialize)]
pub struct SignatureOut {
    pub record: &'static str,
    pub atoms: Vec<String>,
}

#[derive(Serialize)]
pub struct DiagnosticOut<'a> {
    pub record: &'static str,
    pub message: &'a str,
}

pub fn atom_names(i: &Interpretation) -> Vec<String> {
    i.iter().map(|a| a.as_str().to_string()).collect()
}

pub fn candidate_out(c: &CandidateRecord) -> CandidateOut {
    CandidateOut {
        record: "candidate",
        atoms: atom_names(&c.atoms),
        satisfies_reduct: c.satisfies_reduct,
        minimal: c.minimal,
        witness: c.witness.as_ref().map(atom_names),
    }
}

pub fn summary_out(report: &StableModelReport) -> SummaryOut {
    SummaryOut {
        record: "summary",
        models: report.models.iter().map(atom_names).collect(),
        candidates_examined: report.candidates_examined,
    }
}

pub fn line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}
