//! Job configuration documents.
//!
//! A job is a TOML document (schema version 1):
//!
//! ```toml
//! schema_version = 1
//! type = "A"            # root system type: A, B, C or D
//! rank = 3
//! lambda = [0, 1, 0]    # dominant weight, fundamental-weight coordinates
//! w = [3, 1, 2]         # reduced word of a minimal coset representative
//! a = [-2, -1, -4]      # a_j = alpha_j(a), the circle direction
//! r0 = "2"              # level, exact rational "p" or "p/q"
//! degree_bound = 6      # optional; polynomial degree, default 2 * len(w)
//!
//! [output]              # optional
//! dot = "graph.dot"
//! report = "report.json"
//! ```

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;
use toml::{Table, Value};

use crate::lie::RootType;
use crate::rational::{parse_q, Q};

pub const CONFIG_SCHEMA_VERSION: i64 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub root_type: RootType,
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub w: Vec<usize>,
    pub a_vals: Vec<i64>,
    pub r0: Q,
    pub degree_bound: Option<u32>,
    pub dot_path: Option<PathBuf>,
    pub report_path: Option<PathBuf>,
}

impl JobConfig {
    /// The degree bound in force: explicit, or twice the length of `w`.
    pub fn effective_degree_bound(&self) -> u32 {
        self.degree_bound.unwrap_or(2 * self.w.len() as u32)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldError {
    pub field: String,
    pub message: String,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid configuration:\n{}", .errors.iter().map(|e| format!("  - {e}")).collect::<Vec<_>>().join("\n"))]
pub struct ConfigError {
    pub errors: Vec<FieldError>,
}

impl ConfigError {
    pub fn fields(&self) -> Vec<&str> {
        self.errors.iter().map(|e| e.field.as_str()).collect()
    }
}

struct Collector {
    errors: Vec<FieldError>,
}

impl Collector {
    fn push(&mut self, field: &str, message: impl Into<String>) {
        self.errors.push(FieldError { field: field.to_string(), message: message.into() });
    }

    fn int_list(&mut self, table: &Table, field: &str) -> Option<Vec<i64>> {
        match table.get(field) {
            None => {
                self.push(field, "missing");
                None
            }
            Some(Value::Array(items)) => {
                let ints: Option<Vec<i64>> = items.iter().map(Value::as_integer).collect();
                if ints.is_none() {
                    self.push(field, "expected an array of integers");
                }
                ints
            }
            Some(_) => {
                self.push(field, "expected an array of integers");
                None
            }
        }
    }
}

pub fn parse_config(text: &str) -> Result<JobConfig, ConfigError> {
    let table: Table = text.parse().map_err(|e: toml::de::Error| ConfigError {
        errors: vec![FieldError { field: "document".into(), message: e.message().to_string() }],
    })?;
    let mut c = Collector { errors: Vec::new() };

    if let Some(v) = table.get("schema_version") {
        if v.as_integer() != Some(CONFIG_SCHEMA_VERSION) {
            c.push("schema_version", format!("unsupported version {v}, expected {CONFIG_SCHEMA_VERSION}"));
        }
    }

    let root_type = match table.get("type") {
        None => {
            c.push("type", "missing");
            None
        }
        Some(Value::String(s)) => match s.parse::<RootType>() {
            Ok(t) => Some(t),
            Err(e) => {
                c.push("type", e.to_string());
                None
            }
        },
        Some(_) => {
            c.push("type", "expected a string");
            None
        }
    };

    let rank = match table.get("rank") {
        None => {
            c.push("rank", "missing");
            None
        }
        Some(v) => match v.as_integer() {
            Some(r) if r >= 1 => Some(r as usize),
            _ => {
                c.push("rank", "expected a positive integer");
                None
            }
        },
    };

    let lambda = c.int_list(&table, "lambda");
    if let Some(l) = &lambda {
        if l.iter().any(|&x| x < 0) {
            c.push("lambda", "entries must be non-negative");
        } else if l.iter().all(|&x| x == 0) {
            c.push("lambda", "must not be the zero weight");
        }
        if rank.is_some_and(|r| r != l.len()) {
            c.push("lambda", format!("expected {} entries, got {}", rank.unwrap(), l.len()));
        }
    }

    let w = c.int_list(&table, "w");
    if let (Some(word), Some(r)) = (&w, rank) {
        if let Some(bad) = word.iter().find(|&&i| i < 1 || i as usize > r) {
            c.push("w", format!("index {bad} outside 1..={r}"));
        }
    }

    let a_vals = c.int_list(&table, "a");
    if let (Some(a), Some(r)) = (&a_vals, rank) {
        if a.len() != r {
            c.push("a", format!("expected {r} entries, got {}", a.len()));
        }
    }

    let r0 = match table.get("r0") {
        None => {
            c.push("r0", "missing");
            None
        }
        Some(Value::Integer(i)) => Some(Q::from_integer((*i).into())),
        Some(Value::String(s)) => {
            let parsed = parse_q(s);
            if parsed.is_none() {
                c.push("r0", format!("{s:?} is not a rational p/q with q != 0"));
            }
            parsed
        }
        Some(_) => {
            c.push("r0", "expected an integer or a string \"p/q\"");
            None
        }
    };

    let degree_bound = match table.get("degree_bound") {
        None => None,
        Some(v) => match v.as_integer() {
            Some(d) if (0..=64).contains(&d) => Some(d as u32),
            _ => {
                c.push("degree_bound", "expected an integer in 0..=64");
                None
            }
        },
    };

    let mut dot_path = None;
    let mut report_path = None;
    match table.get("output") {
        None => {}
        Some(Value::Table(out)) => {
            for (key, slot) in [("dot", &mut dot_path), ("report", &mut report_path)] {
                match out.get(key) {
                    None => {}
                    Some(Value::String(p)) => *slot = Some(PathBuf::from(p)),
                    Some(_) => c.push(&format!("output.{key}"), "expected a path string"),
                }
            }
        }
        Some(_) => c.push("output", "expected a table"),
    }

    if !c.errors.is_empty() {
        return Err(ConfigError { errors: c.errors });
    }
    Ok(JobConfig {
        root_type: root_type.unwrap(),
        rank: rank.unwrap(),
        lambda: lambda.unwrap(),
        w: w.unwrap().into_iter().map(|i| i as usize).collect(),
        a_vals: a_vals.unwrap(),
        r0: r0.unwrap(),
        degree_bound,
        dot_path,
        report_path,
    })
}
