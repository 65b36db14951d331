use serde::{Deserialize, Serialize};

fn two() -> u32 {
    2
}

fn two_usize() -> usize {
    2
}

fn default_suite() -> String {
    "default".to_string()
}

/// One unit of work. In batch files each line is one of these, tagged by
/// `"command"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase", deny_unknown_fields)]
pub enum Request {
    Ci {
        dim: usize,
        degrees: Vec<u32>,
        #[serde(default)]
        jacobian: bool,
    },
    Cover {
        n: usize,
        #[serde(default = "two")]
        m: u32,
        b: u32,
    },
    Wps {
        weights: Vec<u32>,
        degree: u32,
    },
    Fano {
        n: usize,
        d: usize,
        r: usize,
        #[serde(default = "two_usize")]
        m: usize,
        #[serde(default)]
        class: bool,
    },
    Classify {
        max_dim: usize,
        max_degree_sum: u32,
    },
    Check {
        #[serde(default = "default_suite")]
        suite: String,
    },
}

impl Request {
    pub fn command(&self) -> &'static str {
        match self {
            Request::Ci { .. } => "ci",
            Request::Cover { .. } => "cover",
            Request::Wps { .. } => "wps",
            Request::Fano { .. } => "fano",
            Request::Classify { .. } => "classify",
            Request::Check { .. } => "check",
        }
    }
}

/// A batch line that could not be parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    /// 1-based line number in the batch file
    pub line: usize,
    pub message: String,
}

/// Parses newline-delimited JSON requests. Blank lines are skipped; every
/// other line yields either a request or a diagnostic, in input order.
pub fn ingest_batch(text: &str) -> Vec<(usize, Result<Request, LineError>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let line = i + 1;
            let parsed = serde_json::from_str::<Request>(l).map_err(|e| LineError {
                line,
                message: e.to_string(),
            });
            (line, parsed)
        })
        .collect()
}
