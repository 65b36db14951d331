//! Front end for the `levelone` binary: request parsing, batch ingestion,
//! report assembly and rendering.

pub mod check;
pub mod cli;
pub mod execute;
pub mod report;
pub mod request;

pub use execute::{execute, Options, Outcome};
pub use report::{render_json, render_table, run_batch, run_single, ExitStatus, Report, RunError};
pub use request::{ingest_batch, LineError, Request};
