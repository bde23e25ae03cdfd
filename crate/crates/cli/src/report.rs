use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::Value;

use crate::config::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Match,
    Mismatch,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::Match => "MATCH",
            Self::Mismatch => "MISMATCH",
        }
    }

    pub fn check(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn compare(ok: bool) -> Self {
        if ok {
            Self::Match
        } else {
            Self::Mismatch
        }
    }
}

/// Output of one command. Serializes to the documented JSON schema.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub seed: u64,
    pub values: Value,
    pub verdicts: BTreeMap<String, &'static str>,
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, seed: u64) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            seed,
            values: Value::Object(Default::default()),
            verdicts: BTreeMap::new(),
            elapsed_ms: None,
        }
    }

    pub fn value(&mut self, key: &str, v: Value) {
        if let Value::Object(m) = &mut self.values {
            m.insert(key.to_string(), v);
        }
    }

    pub fn verdict(&mut self, key: &str, v: Verdict) {
        self.verdicts.insert(key.to_string(), v.as_str());
    }

    pub fn has(&self, v: Verdict) -> bool {
        self.verdicts.values().any(|x| *x == v.as_str())
    }

    /// 3 on an oracle mismatch, 2 on any other failed verdict, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.has(Verdict::Mismatch) {
            3
        } else if self.has(Verdict::Fail) {
            2
        } else {
            0
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Table => self.table(),
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}  (seed {})", self.command, self.seed);
        if let Value::Object(m) = &self.inputs {
            for (k, v) in m {
                let _ = writeln!(out, "  {k:<12} {}", inline(v));
            }
        }
        if let Value::Object(m) = &self.values {
            for (k, v) in m {
                write_value(&mut out, k, v, 0);
            }
        }
        for (k, v) in &self.verdicts {
            let _ = writeln!(out, "{v:<9} {k}");
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed {ms} ms");
        }
        out
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) if a.iter().all(is_scalar) => a.iter().map(inline).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn write_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, x) in m {
                write_value(out, k, x, depth + 1);
            }
        }
        Value::Array(a) if !a.iter().all(is_scalar) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (i, x) in a.iter().enumerate() {
                write_value(out, &i.to_string(), x, depth + 1);
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{key:<12} {}", inline(v));
        }
    }
}

pub fn rat(x: &BigRational) -> Value {
    Value::String(x.to_string())
}

pub fn int(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn rats<'a>(xs: impl IntoIterator<Item = &'a BigRational>) -> Value {
    Value::Array(xs.into_iter().map(rat).collect())
}
