use std::fmt::Write as _;
use std::time::Instant;

use levelone_core::Error;
use serde::Serialize;
use serde_json::{json, Value};

use crate::execute::{execute, Options};
use crate::request::{ingest_batch, Request};

/// Version of the report layout documented in `docs/report-schema.md`.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub version: Value,
    pub request: Value,
    pub results: Vec<Value>,
    pub warnings: Vec<Value>,
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Usage = 1,
    Disagreement = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    fn worst(self, other: ExitStatus) -> ExitStatus {
        if other.code() > self.code() {
            other
        } else {
            self
        }
    }
}

/// A run that could not produce a report at all.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Engine(#[from] Error),
    #[error("batch line {line}: {message}")]
    Batch { line: usize, message: String },
}

impl RunError {
    pub fn status(&self) -> ExitStatus {
        match self {
            RunError::Engine(Error::RouteDisagreement { .. } | Error::Consistency(_)) => {
                ExitStatus::Disagreement
            }
            _ => ExitStatus::Usage,
        }
    }
}

fn version() -> Value {
    json!({
        "tool": env!("CARGO_PKG_VERSION"),
        "schema": SCHEMA_VERSION,
        "claims": levelone_core::cover::CLAIMS_VERSION,
    })
}

fn elapsed(start: Instant, opts: &Options) -> Option<u64> {
    opts.timing.then(|| start.elapsed().as_millis() as u64)
}

pub fn run_single(req: &Request, opts: &Options) -> Result<(Report, ExitStatus), RunError> {
    let start = Instant::now();
    let out = execute(req, opts)?;
    let status = if out.failed {
        ExitStatus::Disagreement
    } else {
        ExitStatus::Success
    };
    let report = Report {
        version: version(),
        request: serde_json::to_value(req).expect("request serializes"),
        results: vec![out.result],
        warnings: out.warnings,
        elapsed_ms: elapsed(start, opts),
    };
    Ok((report, status))
}

/// Runs every line of a batch in input order. Malformed lines and failing
/// requests abort in strict mode and become warnings otherwise.
pub fn run_batch(
    source: &str,
    text: &str,
    opts: &Options,
) -> Result<(Report, ExitStatus), RunError> {
    let start = Instant::now();
    let mut results = Vec::new();
    let mut warnings = Vec::new();
    let mut status = ExitStatus::Success;
    let lines = ingest_batch(text);
    let total = lines.len();
    for (line, parsed) in lines {
        let req = match parsed {
            Ok(req) => req,
            Err(e) if opts.strict => {
                return Err(RunError::Batch {
                    line: e.line,
                    message: e.message,
                })
            }
            Err(e) => {
                warnings.push(json!({"kind": "batch_error", "line": e.line, "message": e.message}));
                continue;
            }
        };
        match execute(&req, opts) {
            Ok(out) => {
                if out.failed {
                    status = status.worst(ExitStatus::Disagreement);
                }
                let mut result = out.result;
                result["line"] = json!(line);
                results.push(result);
                for mut w in out.warnings {
                    w["line"] = json!(line);
                    warnings.push(w);
                }
            }
            Err(e) => {
                let err = RunError::Engine(e);
                if opts.strict || err.status() == ExitStatus::Disagreement {
                    status = status.worst(err.status());
                }
                if opts.strict {
                    return Err(RunError::Batch {
                        line,
                        message: err.to_string(),
                    });
                }
                warnings.push(
                    json!({"kind": "request_error", "line": line, "message": err.to_string()}),
                );
            }
        }
    }
    let report = Report {
        version: version(),
        request: json!({"command": "batch", "source": source, "lines": total}),
        results,
        warnings,
        elapsed_ms: elapsed(start, opts),
    };
    Ok((report, status))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render_json(report: &Report) -> String {
    let value = serde_json::to_value(report).expect("report serializes");
    let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
    s.push('\n');
    s
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn render_diamond(out: &mut String, rows: &[Value]) {
    // h^{p,q} with p + q = k on row k, centred
    let n = rows.len().saturating_sub(1);
    let cell = |p: usize, q: usize| rows[p][q].as_u64().unwrap_or(0).to_string();
    let width = (0..=n)
        .flat_map(|p| (0..=n).map(move |q| (p, q)))
        .map(|(p, q)| cell(p, q).len())
        .max()
        .unwrap_or(1)
        .max(1);
    for k in 0..=2 * n {
        let lo = k.saturating_sub(n);
        let hi = k.min(n);
        let entries: Vec<String> = (lo..=hi)
            .rev()
            .map(|p| format!("{:>width$}", cell(p, k - p)))
            .collect();
        let pad = (n - (hi - lo)) * (width + 2) / 2;
        let _ = writeln!(out, "    {}{}", " ".repeat(pad), entries.join("  "));
    }
}

/// Human-readable rendering; carries no stability promise.
pub fn render_table(report: &Report) -> String {
    let mut out = String::new();
    for result in &report.results {
        let Some(obj) = result.as_object() else {
            continue;
        };
        let kind = obj.get("kind").map(scalar).unwrap_or_default();
        let title = obj
            .get("variety")
            .map(scalar)
            .unwrap_or_else(|| kind.clone());
        let _ = writeln!(out, "[{kind}] {title}");
        for (key, value) in obj {
            match key.as_str() {
                "kind" | "variety" => {}
                "hodge_diamond" => {
                    let _ = writeln!(out, "  {key}:");
                    render_diamond(&mut out, value.as_array().map(Vec::as_slice).unwrap_or(&[]));
                }
                "found" | "checks" | "routes" | "closed_forms" => {
                    let _ = writeln!(out, "  {key}:");
                    for item in value.as_array().into_iter().flatten() {
                        let _ = writeln!(out, "    {}", row(item));
                    }
                }
                _ => {
                    let _ = writeln!(out, "  {key:<22} {}", scalar(value));
                }
            }
        }
    }
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {}", row(w));
    }
    out
}

fn row(v: &Value) -> String {
    match v.as_object() {
        Some(obj) => obj
            .iter()
            .map(|(k, x)| format!("{k}={}", scalar(x)))
            .collect::<Vec<_>>()
            .join("  "),
        None => scalar(v),
    }
}
