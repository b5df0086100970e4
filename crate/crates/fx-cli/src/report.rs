//! Report serialization: the JSON schema consumed by CI, plus the text
//! rendering.
//!
//! JSON shape:
//!
//! ```json
//! {"suite": "...", "seed": 42,
//!  "checks": [{"name": "...", "paper_anchor": "...", "cases": 12,
//!              "counterexamples": ["..."]}],
//!  "passed": true}
//! ```
//!
//! Field order is fixed and all collections are emitted in deterministic
//! order, so output under a fixed seed is byte-identical across runs.

use serde::Serialize;

use fx_core::harness::LawReport;

#[derive(Serialize)]
struct JsonReport<'a> {
    suite: &'a str,
    seed: u64,
    checks: Vec<JsonCheck<'a>>,
    passed: bool,
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    name: &'a str,
    paper_anchor: &'a str,
    cases: u64,
    counterexamples: &'a [String],
}

/// Serialize a report to one newline-terminated JSON document.
pub fn to_json(report: &LawReport, seed: u64) -> String {
    let doc = JsonReport {
        suite: &report.suite,
        seed,
        checks: report
            .checks
            .iter()
            .map(|c| JsonCheck {
                name: &c.name,
                paper_anchor: &c.anchor,
                cases: c.cases,
                counterexamples: &c.counterexamples,
            })
            .collect(),
        passed: report.passed(),
    };
    let mut out = serde_json::to_string(&doc).expect("report serializes");
    out.push('\n');
    out
}

/// Human-readable rendering: one line per check, counterexamples indented.
pub fn to_text(report: &LawReport) -> String {
    let mut out = String::new();
    for check in &report.checks {
        if check.passed() {
            out.push_str(&format!("PASS {} ({} cases)\n", check.name, check.cases));
        } else {
            out.push_str(&format!(
                "FAIL {} ({} cases, {} failures)\n",
                check.name,
                check.cases,
                check.failures()
            ));
            for cx in &check.counterexamples {
                out.push_str(&format!("     counterexample: {cx}\n"));
            }
        }
    }
    let failed = report.checks.iter().filter(|c| !c.passed()).count();
    out.push_str(&format!(
        "suite {}: {} checks, {} failed, {} cases\n",
        report.suite,
        report.checks.len(),
        failed,
        report.total_cases(),
    ));
    out
}
