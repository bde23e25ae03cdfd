use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let env = std::env::var("QUOTDT_THREADS").ok();
    let (code, out, err) = quotdt_cli::main_with(std::env::args_os(), env.as_deref());
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    ExitCode::from(code as u8)
}
