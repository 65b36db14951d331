use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::execute::Options;
use crate::report::{render_json, render_table, run_batch, run_single, ExitStatus};
use crate::request::Request;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// Exact invariants of complete intersections, cyclic covers and Fano
/// schemes of planes.
#[derive(Debug, Parser)]
#[command(name = "levelone", version)]
pub struct Cli {
    /// Output format; only JSON has a stable schema
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,

    /// Newline-delimited JSON requests, one per line
    #[arg(long, value_name = "FILE", global = true)]
    pub batch: Option<PathBuf>,

    /// Write the report here instead of stdout
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,

    /// Abort a batch on the first malformed or failing line
    #[arg(long, global = true)]
    pub strict: bool,

    /// Compare computed values with recorded published values
    #[arg(long, global = true)]
    pub compare_paper: bool,

    /// Fill in elapsed_ms (makes output non-reproducible)
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smooth complete intersection of the given dimension and degrees
    Ci {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        degrees: Vec<u32>,
        /// Report the dimension of the middle intermediate Jacobian
        #[arg(long)]
        jacobian: bool,
    },
    /// m-fold cyclic cover of P^n branched along a hypersurface of degree b
    Cover {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long)]
        b: u32,
    },
    /// Quasi-smooth hypersurface in weighted projective space
    Wps {
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        weights: Vec<u32>,
        #[arg(long)]
        degree: u32,
    },
    /// r-planes in a cover of P^n branched in degree m*d
    Fano {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Include the class of the Fano scheme
        #[arg(long)]
        class: bool,
    },
    /// Level-one complete intersections in a search window
    Classify {
        #[arg(long)]
        max_dim: usize,
        #[arg(long)]
        max_degree_sum: u32,
    },
    /// Run a consistency suite
    Check {
        #[arg(long, default_value = "default")]
        suite: String,
    },
}

impl From<Command> for Request {
    fn from(c: Command) -> Self {
        match c {
            Command::Ci {
                dim,
                degrees,
                jacobian,
            } => Request::Ci {
                dim,
                degrees,
                jacobian,
            },
            Command::Cover { n, m, b } => Request::Cover { n, m, b },
            Command::Wps { weights, degree } => Request::Wps { weights, degree },
            Command::Fano { n, d, r, m, class } => Request::Fano { n, d, r, m, class },
            Command::Classify {
                max_dim,
                max_degree_sum,
            } => Request::Classify {
                max_dim,
                max_degree_sum,
            },
            Command::Check { suite } => Request::Check { suite },
        }
    }
}

/// Everything a process needs to finish: text for stdout and stderr, and
/// the exit code.
#[derive(Debug, Default)]
pub struct Completed {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn usage(message: String) -> Completed {
    Completed {
        stderr: message,
        code: ExitStatus::Usage.code(),
        ..Completed::default()
    }
}

pub fn main_with_args<I, T>(args: I) -> Completed
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                usage(text)
            } else {
                Completed {
                    stdout: text,
                    ..Completed::default()
                }
            };
        }
    };
    let opts = Options {
        compare_paper: cli.compare_paper,
        strict: cli.strict,
        timing: cli.timing,
    };
    let outcome = match (&cli.batch, cli.command) {
        (Some(_), Some(_)) => {
            return usage("error: --batch cannot be combined with a subcommand\n".into())
        }
        (None, None) => return usage("error: a subcommand or --batch FILE is required\n".into()),
        (Some(path), None) => match fs::read_to_string(path) {
            Ok(text) => run_batch(&path.display().to_string(), &text, &opts),
            Err(e) => return usage(format!("error: cannot read {}: {e}\n", path.display())),
        },
        (None, Some(command)) => run_single(&Request::from(command), &opts),
    };
    let (report, status) = match outcome {
        Ok(x) => x,
        Err(e) => {
            return Completed {
                stderr: format!("error: {e}\n"),
                code: e.status().code(),
                ..Completed::default()
            }
        }
    };
    let text = match cli.format {
        Format::Json => render_json(&report),
        Format::Table => render_table(&report),
    };
    let mut done = Completed {
        code: status.code(),
        ..Completed::default()
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                return usage(format!("error: cannot write {}: {e}\n", path.display()));
            }
        }
        None => done.stdout = text,
    }
    done
}
