use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::CliError;

#[derive(Parser, Debug, Clone, Default)]
#[command(name = "quotdt", version, about = "Exact degree-zero DT invariants of Quot schemes on toric 3-folds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    /// key=value file; flags given on the command line win
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// worker threads (falls back to QUOTDT_THREADS)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// independent parameter points, at least 2
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    #[arg(long, global = true)]
    pub nmax: Option<usize>,
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// built-in space or ring name
    #[arg(long, global = true)]
    pub space: Option<String>,
    /// summands such as `O,O1,O(1,-1)`
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub bundle: Option<String>,
    /// inline chart `a,b,c;d,e,f;g,h,i` (repeatable)
    #[arg(long = "chart", global = true, allow_hyphen_values = true)]
    pub charts: Vec<String>,
    /// per-chart characters `a,b,c;...` of one summand (repeatable)
    #[arg(long = "line", global = true, allow_hyphen_values = true)]
    pub lines: Vec<String>,
    /// built-in double point relation
    #[arg(long, global = true)]
    pub builtin: Option<String>,
    /// chart used by `vertex`
    #[arg(long, global = true)]
    pub chart_index: Option<usize>,
    /// report wall-clock time in `elapsed_ms`
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// DT series by localization against the closed formula
    Toric,
    /// Virtual tangent characters and chart contributions
    Vertex,
    /// Chern numbers of a built-in 3-fold
    Chern,
    /// Cobordism basis, decompositions and double point relations
    Cobordism,
    /// MacMahon function coefficients
    Macmahon,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Self::Toric => "toric",
            Self::Vertex => "vertex",
            Self::Chern => "chern",
            Self::Cobordism => "cobordism",
            Self::Macmahon => "macmahon",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Table,
    Json,
}

/// One summand of a bundle descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Summand {
    Trivial,
    /// `O<d>`: degree `d` in every generator.
    Uniform(i64),
    /// `O(a,b,...)`
    Degrees(Vec<i64>),
}

impl Summand {
    pub fn degrees(&self, generators: usize) -> Vec<i64> {
        match self {
            Self::Trivial => vec![0; generators],
            Self::Uniform(d) => vec![*d; generators],
            Self::Degrees(v) => v.clone(),
        }
    }
}

impl std::fmt::Display for Summand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Trivial => write!(f, "O"),
            Self::Uniform(d) => write!(f, "O{d}"),
            Self::Degrees(v) => {
                let s: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "O({})", s.join(","))
            }
        }
    }
}

/// Fully resolved run settings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub space: Option<String>,
    pub charts: Vec<[[i64; 3]; 3]>,
    pub bundle: Option<Vec<Summand>>,
    pub lines: Vec<Vec<[i64; 3]>>,
    pub rank: Option<usize>,
    pub nmax: Option<usize>,
    pub seed: u64,
    pub trials: usize,
    pub format: Format,
    pub threads: Option<usize>,
    pub builtin: Option<String>,
    pub chart_index: usize,
    pub timing: bool,
}

const KEYS: &[&str] = &[
    "space", "bundle", "chart", "line", "nmax", "rank", "seed", "trials", "format", "threads", "builtin",
    "chart_index", "timing",
];

/// Parses `key=value` lines; blank lines and `#` comments are skipped and
/// repeated keys accumulate.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, Vec<String>>, CliError> {
    let mut out: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value", i + 1)))?;
        let k = k.trim();
        if !KEYS.contains(&k) {
            return Err(CliError::Usage(format!("config line {}: unknown key `{k}`", i + 1)));
        }
        out.entry(k.to_string()).or_default().push(v.trim().to_string());
    }
    Ok(out)
}

fn last(file: &BTreeMap<String, Vec<String>>, key: &str) -> Option<String> {
    file.get(key).and_then(|v| v.last().cloned())
}

fn parse_num<T: std::str::FromStr>(key: &str, s: &str) -> Result<T, CliError> {
    s.trim().parse().map_err(|_| CliError::Usage(format!("invalid value `{s}` for {key}")))
}

fn pick<T: std::str::FromStr>(
    flag: Option<T>,
    file: &BTreeMap<String, Vec<String>>,
    key: &str,
) -> Result<Option<T>, CliError> {
    match flag {
        Some(v) => Ok(Some(v)),
        None => last(file, key).map(|s| parse_num(key, &s)).transpose(),
    }
}

fn parse_triple(s: &str) -> Result<[i64; 3], CliError> {
    let v: Vec<i64> = s.split(',').map(|x| parse_num("character", x)).collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| CliError::Usage(format!("expected three integers, got `{s}`")))
}

/// `a,b,c;d,e,f;g,h,i`
pub fn parse_chart(s: &str) -> Result<[[i64; 3]; 3], CliError> {
    let rows: Vec<[i64; 3]> = s.split(';').map(parse_triple).collect::<Result<_, _>>()?;
    rows.try_into().map_err(|_| CliError::Usage(format!("a chart has three characters, got `{s}`")))
}

/// `a,b,c;...`, one character per chart.
pub fn parse_line(s: &str) -> Result<Vec<[i64; 3]>, CliError> {
    s.split(';').map(parse_triple).collect()
}

/// `O`, `O2`, `O-1`, `O(1,0)`, comma separated.
pub fn parse_bundle(s: &str) -> Result<Vec<Summand>, CliError> {
    let mut parts = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            parts.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    parts.push(cur);
    parts
        .iter()
        .map(|p| {
            let p = p.trim();
            let rest = p.strip_prefix('O').ok_or_else(|| CliError::Usage(format!("bad bundle summand `{p}`")))?;
            if rest.is_empty() {
                Ok(Summand::Trivial)
            } else if let Some(inner) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                let v: Vec<i64> = inner.split(',').map(|x| parse_num("bundle", x)).collect::<Result<_, _>>()?;
                if inner.split(',').count() == 1 {
                    Ok(Summand::Uniform(v[0]))
                } else {
                    Ok(Summand::Degrees(v))
                }
            } else {
                Ok(Summand::Uniform(parse_num("bundle", rest)?))
            }
        })
        .collect()
}

impl RunConfig {
    /// Merges flags over the config file; `env_threads` is the value of
    /// `QUOTDT_THREADS`, used only when neither sets `threads`.
    pub fn resolve(cli: &Cli, file_text: Option<&str>, env_threads: Option<&str>) -> Result<Self, CliError> {
        let command = cli.command.ok_or_else(|| CliError::Usage("missing subcommand".into()))?;
        let file = match file_text {
            Some(t) => parse_config_file(t)?,
            None => BTreeMap::new(),
        };
        let space = cli.space.clone().or_else(|| last(&file, "space"));
        let chart_src: Vec<String> =
            if cli.charts.is_empty() { file.get("chart").cloned().unwrap_or_default() } else { cli.charts.clone() };
        let charts = chart_src.iter().map(|s| parse_chart(s)).collect::<Result<Vec<_>, _>>()?;
        let line_src: Vec<String> =
            if cli.lines.is_empty() { file.get("line").cloned().unwrap_or_default() } else { cli.lines.clone() };
        let lines = line_src.iter().map(|s| parse_line(s)).collect::<Result<Vec<_>, _>>()?;
        let bundle_src = cli.bundle.clone().or_else(|| file.get("bundle").map(|v| v.join(",")));
        let bundle = bundle_src.as_deref().map(parse_bundle).transpose()?;
        let format = match cli.format {
            Some(f) => f,
            None => match last(&file, "format").as_deref() {
                None | Some("table") => Format::Table,
                Some("json") => Format::Json,
                Some(other) => return Err(CliError::Usage(format!("unknown format `{other}`"))),
            },
        };
        let threads = match pick(cli.threads, &file, "threads")? {
            Some(t) => Some(t),
            None => env_threads.map(|s| parse_num("QUOTDT_THREADS", s)).transpose()?,
        };
        if threads == Some(0) {
            return Err(CliError::Usage("threads must be positive".into()));
        }
        let trials = pick(cli.trials, &file, "trials")?.unwrap_or(2);
        if trials < 2 {
            return Err(CliError::Usage(format!("trials must be at least 2, got {trials}")));
        }
        let timing = cli.timing
            || match last(&file, "timing").as_deref() {
                None | Some("false") => false,
                Some("true") => true,
                Some(other) => return Err(CliError::Usage(format!("invalid value `{other}` for timing"))),
            };
        if space.is_some() && !charts.is_empty() {
            return Err(CliError::Usage("give either a space name or inline charts, not both".into()));
        }
        if bundle.is_some() && !lines.is_empty() {
            return Err(CliError::Usage("give either a bundle descriptor or explicit lines, not both".into()));
        }
        Ok(Self {
            command,
            space,
            charts,
            bundle,
            lines,
            rank: pick(cli.rank, &file, "rank")?,
            nmax: pick(cli.nmax, &file, "nmax")?,
            seed: pick(cli.seed, &file, "seed")?.unwrap_or(0),
            trials,
            format,
            threads,
            builtin: cli.builtin.clone().or_else(|| last(&file, "builtin")),
            chart_index: pick(cli.chart_index, &file, "chart_index")?.unwrap_or(0),
            timing,
        })
    }

    /// Bundle summands, checked against `--rank`.
    pub fn summands(&self) -> Result<Vec<Summand>, CliError> {
        let summands = match &self.bundle {
            Some(b) => b.clone(),
            None => vec![Summand::Trivial; self.rank.unwrap_or(1)],
        };
        if let Some(r) = self.rank {
            if r != summands.len() {
                return Err(CliError::Usage(format!("rank {r} but the bundle has {} summands", summands.len())));
            }
        }
        if summands.is_empty() {
            return Err(CliError::Usage("rank must be positive".into()));
        }
        Ok(summands)
    }
}
