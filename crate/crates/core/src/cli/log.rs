//! JSON Lines run logs and summaries.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::engines::{EngineRun, Event};
use crate::harness::Convergence;
use crate::Example;

/// One engine iteration, as written to `run.jsonl`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IterationRecordLine {
    pub iter: usize,
    /// `null` for ⊥.
    pub trace_entry: Option<Example>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace_entry_decoded: Option<(i64, i64)>,
    pub candidate: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<Example>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe_decoded: Option<(i64, i64)>,
    pub cex: Option<Example>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cex_decoded: Option<(i64, i64)>,
    pub event: Event,
}

pub fn record_lines(run: &EngineRun) -> Vec<IterationRecordLine> {
    let decode = |x: Option<Example>| x.and_then(|x| run.family.decode(x));
    run.records
        .iter()
        .map(|r| IterationRecordLine {
            iter: r.iter,
            trace_entry: r.entry.value(),
            trace_entry_decoded: decode(r.entry.value()),
            candidate: r.candidate.to_string(),
            probe: r.probe,
            probe_decoded: decode(r.probe),
            cex: r.verdict.cex(),
            cex_decoded: decode(r.verdict.cex()),
            event: r.event,
        })
        .collect()
}

/// One JSON document per line, each line newline-terminated.
pub fn to_jsonl<T: Serialize>(items: &[T]) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item).expect("log lines serialize"));
        out.push('\n');
    }
    out
}

/// The iteration log of `run` in JSON Lines form.
pub fn run_jsonl(run: &EngineRun) -> String {
    to_jsonl(&record_lines(run))
}

/// Lowercase hex SHA-256 of `text`.
pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Contents of `summary.json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunSummary {
    pub family: String,
    pub target: String,
    pub engine: String,
    pub generalizer: String,
    pub strategy: String,
    pub verdict: String,
    pub converged_at: Option<usize>,
    #[serde(rename = "final")]
    pub final_program: String,
    pub semantic_match: bool,
    /// Verifier calls; equals the log lines whose event is a conjecture or
    /// a probe.
    pub queries: usize,
    /// Iterations executed, i.e. log lines other than the freeze line.
    pub iterations: usize,
    pub counterexamples: usize,
}

impl RunSummary {
    pub fn new(run: &EngineRun, target: &str, strategy: &str, verdict: &Convergence) -> Self {
        RunSummary {
            family: run.family.name().to_string(),
            target: target.to_string(),
            engine: run.variant.name().to_string(),
            generalizer: run.generalizer.name().to_string(),
            strategy: strategy.to_string(),
            verdict: verdict.status.name().to_string(),
            converged_at: verdict.status.converged_at(),
            final_program: run.final_program.to_string(),
            semantic_match: verdict.semantic_match,
            queries: run.queries(),
            iterations: run
                .records
                .iter()
                .filter(|r| r.event != Event::Freeze)
                .count(),
            counterexamples: run.counterexamples(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_shape() {
        let line = IterationRecordLine {
            iter: 3,
            trace_entry: None,
            trace_entry_decoded: None,
            candidate: "L_2".into(),
            probe: None,
            probe_decoded: None,
            cex: Some(6),
            cex_decoded: None,
            event: Event::Conjecture,
        };
        let text = to_jsonl(std::slice::from_ref(&line));
        assert_eq!(
            text,
            "{\"iter\":3,\"trace_entry\":null,\"candidate\":\"L_2\",\"cex\":6,\"event\":\"conjecture\"}\n"
        );
        let back: IterationRecordLine = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(back, line);
    }

    #[test]
    fn digest_of_empty_text() {
        assert_eq!(
            sha256_hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
