//! Demo reports: rows, derived checks, Markdown and JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cli::log::{run_jsonl, sha256_hex};
use crate::engines::{EngineRun, Event};

use super::Convergence;

/// Outcome of one engine run inside a demo.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRow {
    pub family: String,
    pub target: String,
    pub engine: String,
    pub seed: Option<u64>,
    pub status: String,
    pub converged_at: Option<usize>,
    pub semantic_match: bool,
    pub queries: usize,
    pub counterexamples: usize,
    pub iterations: usize,
    #[serde(rename = "final")]
    pub final_program: String,
    /// SHA-256 of the run's iteration log.
    pub log_sha256: String,
}

impl RunRow {
    pub fn new(run: &EngineRun, target: &str, seed: Option<u64>, verdict: &Convergence) -> Self {
        RunRow {
            family: run.family.name().to_string(),
            target: target.to_string(),
            engine: run.variant.name().to_string(),
            seed,
            status: verdict.status.name().to_string(),
            converged_at: verdict.status.converged_at(),
            semantic_match: verdict.semantic_match,
            queries: run.queries(),
            counterexamples: run.counterexamples(),
            iterations: run
                .records
                .iter()
                .filter(|r| r.event != Event::Freeze)
                .count(),
            final_program: run.final_program.to_string(),
            log_sha256: sha256_hex(&run_jsonl(run)),
        }
    }
}

/// Two runs compared against each other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub label: String,
    /// Row indices of the two runs; absent when the pair was skipped.
    pub left: Option<usize>,
    pub right: Option<usize>,
    /// Final programs agree on `[0, B]`.
    pub equal_final: bool,
    pub status_match: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub logs_identical: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// A demo's rows together with the checks and conclusion derived from them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationReport {
    pub demo: String,
    pub family: String,
    pub rows: Vec<RunRow>,
    pub pairs: Vec<PairRow>,
    pub checks: Vec<Check>,
    pub conclusion: String,
    pub passed: bool,
}

impl SeparationReport {
    pub fn new(
        demo: &str,
        family: &str,
        rows: Vec<RunRow>,
        pairs: Vec<PairRow>,
        checks: Vec<Check>,
        conclusion: String,
    ) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        SeparationReport {
            demo: demo.to_string(),
            family: family.to_string(),
            rows,
            pairs,
            checks,
            conclusion,
            passed,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// One JSON line per run row.
    pub fn to_jsonl(&self) -> String {
        crate::cli::log::to_jsonl(&self.rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_markdown(&self) -> String {
        let mut md = String::new();
        let _ = writeln!(md, "# {} ({})\n", self.demo, self.family);
        let _ = writeln!(md, "**{}**\n", self.conclusion);
        md.push_str("| check | result | detail |\n|---|---|---|\n");
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            let _ = writeln!(md, "| {} | {} | {} |", c.name, mark, c.detail);
        }
        if !self.pairs.is_empty() {
            md.push_str(
                "\n| pair | left | right | equal final | status match | logs identical | note |\n",
            );
            md.push_str("|---|---|---|---|---|---|---|\n");
            for p in &self.pairs {
                let _ = writeln!(
                    md,
                    "| {} | {} | {} | {} | {} | {} | {} |",
                    p.label,
                    p.left.map_or("-".into(), |k| k.to_string()),
                    p.right.map_or("-".into(), |k| k.to_string()),
                    p.equal_final,
                    p.status_match,
                    p.logs_identical.map_or("-".into(), |b| b.to_string()),
                    p.note.as_deref().unwrap_or(""),
                );
            }
        }
        md.push_str("\n| # | target | engine | seed | status | match | queries | cex | final |\n");
        md.push_str("|---|---|---|---|---|---|---|---|---|\n");
        for (k, r) in self.rows.iter().enumerate() {
            let status = match r.converged_at {
                Some(at) => format!("{}@{at}", r.status),
                None => r.status.clone(),
            };
            let _ = writeln!(
                md,
                "| {k} | {} | {} | {} | {} | {} | {} | {} | {} |",
                r.target,
                r.engine,
                r.seed.map_or("-".into(), |s| s.to_string()),
                status,
                r.semantic_match,
                r.queries,
                r.counterexamples,
                r.final_program,
            );
        }
        md
    }
}
