use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, Write};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use hardedge::verify::Check;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    pub achieved: String,
    pub required: String,
    pub passed: bool,
}

impl From<&Check> for CheckRecord {
    fn from(c: &Check) -> Self {
        Self {
            suite: c.suite.to_string(),
            name: c.name.clone(),
            achieved: decimal(c.achieved),
            required: decimal(c.required),
            passed: c.passed,
        }
    }
}

/// One result: the echoed query, named values as strings, and diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub command: String,
    pub query: BTreeMap<String, String>,
    pub values: BTreeMap<String, String>,
    pub method: Option<String>,
    pub error_bound: Option<String>,
    pub stderr: Option<String>,
    pub elapsed_ms: Option<f64>,
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub passed: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckRecord>,
}

impl Record {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            query: BTreeMap::new(),
            values: BTreeMap::new(),
            method: None,
            error_bound: None,
            stderr: None,
            elapsed_ms: None,
            seed: None,
            passed: None,
            checks: Vec::new(),
        }
    }

    pub fn query(mut self, key: &str, value: impl ToString) -> Self {
        self.query.insert(key.to_string(), value.to_string());
        self
    }

    pub fn value(&mut self, key: &str, value: impl Into<String>) {
        self.values.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let query: Vec<String> = self.query.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "{} {}", self.command, query.join(" ")).unwrap();
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "  {mark} [{}] {}: achieved {}, required {}", c.suite, c.name, c.achieved, c.required).unwrap();
        }
        for (k, v) in &self.values {
            writeln!(out, "  {k} = {v}").unwrap();
        }
        let extras = [
            ("method", self.method.clone()),
            ("error_bound", self.error_bound.clone()),
            ("stderr", self.stderr.clone()),
            ("seed", self.seed.map(|s| s.to_string())),
            ("elapsed_ms", self.elapsed_ms.map(|t| format!("{t:.3}"))),
        ];
        for (k, v) in extras {
            if let Some(v) = v {
                writeln!(out, "  {k} = {v}").unwrap();
            }
        }
        out
    }

    /// Header plus one row; verification records emit one row per check instead.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        if !self.checks.is_empty() {
            writer.write_record(["suite", "name", "achieved", "required", "passed"]).unwrap();
            for c in &self.checks {
                let passed = c.passed.to_string();
                writer.write_record([&c.suite, &c.name, &c.achieved, &c.required, &passed]).unwrap();
            }
        } else {
            let mut header = vec!["command".to_string()];
            let mut row = vec![self.command.clone()];
            for (k, v) in &self.query {
                header.push(format!("query.{k}"));
                row.push(v.clone());
            }
            for (k, v) in &self.values {
                header.push(format!("values.{k}"));
                row.push(v.clone());
            }
            let tail = [
                ("method", self.method.clone()),
                ("error_bound", self.error_bound.clone()),
                ("stderr", self.stderr.clone()),
                ("elapsed_ms", self.elapsed_ms.map(|t| t.to_string())),
                ("seed", self.seed.map(|s| s.to_string())),
            ];
            for (k, v) in tail {
                header.push(k.to_string());
                row.push(v.unwrap_or_default());
            }
            writer.write_record(&header).unwrap();
            writer.write_record(&row).unwrap();
        }
        String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("utf-8 csv")
    }

    pub fn emit(&self, format: Format) -> io::Result<()> {
        let text = match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json() + "\n",
            Format::Csv => self.to_csv(),
        };
        let mut stdout = io::stdout().lock();
        stdout.write_all(text.as_bytes())?;
        stdout.flush()
    }
}

/// Seventeen significant digits, positional for moderate magnitudes.
pub fn decimal(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exponent) = sci.split_once('e').expect("scientific form");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if !(-5..=16).contains(&exponent) {
        return sci;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = exponent + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if point as usize >= digits.len() {
        format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
    } else {
        let (int, frac) = digits.split_at(point as usize);
        format!("{int}.{frac}")
    };
    format!("{sign}{body}")
}
