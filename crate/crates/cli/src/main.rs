use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let done = levelone_cli::cli::main_with_args(std::env::args_os());
    let _ = std::io::stdout().write_all(done.stdout.as_bytes());
    let _ = std::io::stderr().write_all(done.stderr.as_bytes());
    ExitCode::from(done.code as u8)
}
