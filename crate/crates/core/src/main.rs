use std::io::Write;
use std::process::ExitCode;

use ncgraph::cli::{run, Env};

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = run(
        std::env::args_os(),
        &Env::from_process(),
        &mut out,
        &mut err,
    );
    let _ = out.flush();
    ExitCode::from(code as u8)
}
