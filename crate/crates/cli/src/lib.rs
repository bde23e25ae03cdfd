//! Command-line front end: config resolution, the five subcommands, and the
//! table/JSON renderers.

mod commands;
pub mod config;
pub mod report;

use std::time::Instant;

use thiserror::Error;

pub use commands::execute;
pub use config::{Cli, Command, Format, RunConfig};
pub use report::{Report, Verdict};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Config { path: String, message: String },
    #[error(transparent)]
    Core(#[from] quotdt_core::Error),
}

impl CliError {
    /// 1 for bad input, 2 when a computation breaks an invariant.
    pub fn exit_code(&self) -> i32 {
        use quotdt_core::Error as E;
        match self {
            Self::Usage(_) | Self::Config { .. } => 1,
            Self::Core(
                E::ParameterDependence { .. }
                | E::NonIntegral { .. }
                | E::NonzeroFixedPart { .. }
                | E::ParametersExhausted { .. }
                | E::SingularBasisMatrix { .. }
                | E::ZeroWeight { .. }
                | E::NonUnitConstant(_),
            ) => 2,
            Self::Core(_) => 1,
        }
    }
}

/// A finished run: the report, its rendering and the process exit code.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub text: String,
    pub code: i32,
}

/// Resolves the configuration and runs the command on a pool of the
/// requested size.
pub fn run(cli: &Cli, env_threads: Option<&str>) -> Result<Outcome, CliError> {
    let file = match &cli.config {
        Some(path) => Some(std::fs::read_to_string(path).map_err(|e| CliError::Config {
            path: path.display().to_string(),
            message: e.to_string(),
        })?),
        None => None,
    };
    let cfg = RunConfig::resolve(cli, file.as_deref(), env_threads)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.threads {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let start = Instant::now();
    let mut report = pool.install(|| execute(&cfg))?;
    if cfg.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    let text = report.render(cfg.format);
    let code = report.exit_code();
    Ok(Outcome { report, text, code })
}

/// Parses `args` and runs; returns the exit code with stdout and stderr text.
pub fn main_with<I, T>(args: I, env_threads: Option<&str>) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (1, String::new(), text) };
        }
    };
    match run(&cli, env_threads) {
        Ok(out) => (out.code, out.text, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}
