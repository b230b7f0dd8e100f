use cartier::{Field, VerificationReport};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

pub fn emit_report<F: Field>(report: &VerificationReport<F>, format: ReportFormat, color: bool) -> String {
    match format {
        ReportFormat::Text => text(report, color),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&to_value(report)).expect("values serialize");
            s.push('\n');
            s
        }
    }
}

fn text<F: Field>(report: &VerificationReport<F>, color: bool) -> String {
    let (green, red, reset) = if color {
        ("\x1b[32m", "\x1b[31m", "\x1b[0m")
    } else {
        ("", "", "")
    };
    let mut out = String::new();
    for line in report.to_string().lines() {
        match line.split_once(' ') {
            Some(("PASS", rest)) => out.push_str(&format!("{green}PASS{reset} {rest}\n")),
            Some(("FAIL", rest)) => out.push_str(&format!("{red}FAIL{reset} {rest}\n")),
            _ => {
                out.push_str(line);
                out.push('\n');
            }
        }
    }
    let failed = report.failures().count();
    out.push_str(&format!(
        "{} of {} checks passed over {}\n",
        report.entries.len() - failed,
        report.entries.len(),
        F::descriptor()
    ));
    out
}

/// Object keys are sorted; coefficients are canonical scalar strings.
pub fn to_value<F: Field>(report: &VerificationReport<F>) -> Value {
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            let witness = e.witness.as_ref().map(|w| {
                json!({
                    "input": w.input,
                    "residual": w.residual.iter().map(|(label, c)| json!({
                        "basis": label,
                        "coefficient": c.canonical(),
                    })).collect::<Vec<_>>(),
                })
            });
            json!({
                "axiom": e.axiom,
                "group": e.group.name(),
                "status": if e.passed() { "PASS" } else { "FAIL" },
                "witness": witness,
                "error": e.error,
            })
        })
        .collect();
    let failed = report.failures().count();
    json!({
        "field": F::descriptor(),
        "all_pass": failed == 0,
        "passed": report.entries.len() - failed,
        "failed": failed,
        "entries": entries,
    })
}
