//! Run reports and their two renderings: aligned text tables and a single
//! self-describing JSON document.
//!
//! Integers are always printed as exact decimals and reals with 15
//! significant digits, in both formats. Nothing time- or machine-dependent
//! goes into a report, so reruns are byte-identical.

use std::fmt::Write as _;
use std::str::FromStr;

use hookbias_core::analytic::LogReal;
use num_bigint::BigInt;
use serde_json::{Map, Number, Value as Json};

/// Tool version written into every structured report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// A single report cell or parameter value.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(BigInt),
    Real(f64),
    /// A real that may lie outside the binary64 range.
    Wide(LogReal),
    Text(String),
    Bool(bool),
    List(Vec<Value>),
    Null,
}

impl Value {
    pub fn int(v: impl Into<BigInt>) -> Self {
        Value::Int(v.into())
    }

    pub fn text(v: impl Into<String>) -> Self {
        Value::Text(v.into())
    }

    pub fn ints<T: Into<BigInt> + Copy>(values: &[T]) -> Self {
        Value::List(values.iter().map(|&v| Value::Int(v.into())).collect())
    }

    /// Plain-text rendering used by the table format.
    pub fn render(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Real(v) => format_real(*v),
            Value::Wide(v) => format_wide(*v),
            Value::Text(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::List(items) => {
                let inner: Vec<String> = items.iter().map(Value::render).collect();
                format!("[{}]", inner.join(", "))
            }
            Value::Null => "none".into(),
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Value::Int(v) => number(&v.to_string()),
            Value::Real(v) if v.is_finite() => number(&format_real(*v)),
            Value::Real(v) => Json::String(v.to_string()),
            Value::Wide(v) => number(&format_wide(*v)),
            Value::Text(s) => Json::String(s.clone()),
            Value::Bool(b) => Json::Bool(*b),
            Value::List(items) => Json::Array(items.iter().map(Value::to_json).collect()),
            Value::Null => Json::Null,
        }
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.into())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Real(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v.into())
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v.into())
    }
}

impl From<BigInt> for Value {
    fn from(v: BigInt) -> Self {
        Value::Int(v)
    }
}

impl From<LogReal> for Value {
    fn from(v: LogReal) -> Self {
        Value::Wide(v)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::Null, Into::into)
    }
}

fn number(text: &str) -> Json {
    Number::from_str(text).map_or_else(|_| Json::String(text.into()), Json::Number)
}

fn trim_mantissa(m: &str) -> &str {
    if m.contains('.') {
        m.trim_end_matches('0').trim_end_matches('.')
    } else {
        m
    }
}

/// `x` with 15 significant digits, positional for moderate magnitudes and
/// scientific otherwise, trailing zeros removed.
pub fn format_real(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        let fixed = format!("{x:.decimals$}");
        trim_mantissa(&fixed).to_string()
    } else {
        format!("{}e{exp}", trim_mantissa(mantissa))
    }
}

/// A [`LogReal`] with 15 significant digits.
pub fn format_wide(x: LogReal) -> String {
    let ln = x.ln_abs().abs();
    if x.is_zero() || ln < 700.0 {
        return format_real(x.to_f64());
    }
    let sci = format!("{x:.14}");
    match sci.split_once('e') {
        Some((m, e)) => format!("{}e{e}", trim_mantissa(m)),
        None => sci,
    }
}

/// Strength of the statement a check verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backing {
    /// A proved statement; failure means a bug or a wrong input.
    Theorem,
    /// Stated without proof; failure is reported but tolerated.
    Claim,
    /// Open; the check only reports consistency.
    Conjecture,
}

impl Backing {
    pub fn name(self) -> &'static str {
        match self {
            Backing::Theorem => "theorem",
            Backing::Claim => "claim",
            Backing::Conjecture => "conjecture",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub label: String,
    pub backing: Backing,
    pub passed: bool,
    pub detail: String,
}

/// A titled table.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Section {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Section {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Everything one command produced.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub command: String,
    pub params: Vec<(String, Value)>,
    /// A single answer; the table format prints only this when present
    /// and there are no sections.
    pub result: Option<Value>,
    pub summary: Vec<(String, Value)>,
    pub sections: Vec<Section>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            ..Self::default()
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.push((key.into(), value.into()));
        self
    }

    pub fn summary(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.summary.push((key.into(), value.into()));
        self
    }

    pub fn check(
        &mut self,
        label: impl Into<String>,
        backing: Backing,
        passed: bool,
        detail: impl Into<String>,
    ) -> &mut Self {
        self.checks.push(Check {
            label: label.into(),
            backing,
            passed,
            detail: detail.into(),
        });
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    /// Whether every theorem-backed check passed.
    pub fn theorems_hold(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.passed || c.backing != Backing::Theorem)
    }

    pub fn to_table(&self) -> String {
        if let (Some(result), true) = (&self.result, self.sections.is_empty()) {
            return format!("{}\n", result.render());
        }
        let mut out = String::new();
        let _ = writeln!(out, "hookbias {} {}", VERSION, self.command);
        for (k, v) in &self.params {
            let _ = writeln!(out, "  {k}: {}", v.render());
        }
        if let Some(result) = &self.result {
            let _ = writeln!(out, "result: {}", result.render());
        }
        if !self.summary.is_empty() {
            out.push('\n');
            let width = self.summary.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in &self.summary {
                let _ = writeln!(out, "{k:<width$}  {}", v.render());
            }
        }
        for section in &self.sections {
            out.push('\n');
            let _ = writeln!(out, "{}", section.title);
            let cells: Vec<Vec<String>> = section
                .rows
                .iter()
                .map(|r| r.iter().map(Value::render).collect())
                .collect();
            let widths: Vec<usize> = section
                .columns
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    cells
                        .iter()
                        .map(|r| r[i].len())
                        .chain([c.len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |row: &[String]| {
                let padded: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:>w$}"))
                    .collect();
                padded.join("  ")
            };
            let _ = writeln!(out, "{}", line(&section.columns));
            for row in &cells {
                let _ = writeln!(out, "{}", line(row));
            }
        }
        if !self.checks.is_empty() {
            out.push('\n');
            for c in &self.checks {
                let status = if c.passed { "ok  " } else { "FAIL" };
                let _ = write!(out, "{status}  [{}] {}", c.backing.name(), c.label);
                if !c.detail.is_empty() {
                    let _ = write!(out, " ({})", c.detail);
                }
                out.push('\n');
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }

    pub fn to_json(&self) -> Json {
        let pairs = |items: &[(String, Value)]| {
            Json::Object(
                items
                    .iter()
                    .map(|(k, v)| (k.clone(), v.to_json()))
                    .collect::<Map<_, _>>(),
            )
        };
        let mut doc = Map::new();
        doc.insert("tool".into(), "hookbias".into());
        doc.insert("version".into(), VERSION.into());
        doc.insert("command".into(), self.command.clone().into());
        doc.insert("params".into(), pairs(&self.params));
        if let Some(r) = &self.result {
            doc.insert("result".into(), r.to_json());
        }
        doc.insert("summary".into(), pairs(&self.summary));
        let sections = self
            .sections
            .iter()
            .map(|s| {
                let mut m = Map::new();
                m.insert("title".into(), s.title.clone().into());
                m.insert(
                    "columns".into(),
                    Json::Array(s.columns.iter().map(|c| c.clone().into()).collect()),
                );
                m.insert(
                    "rows".into(),
                    Json::Array(
                        s.rows
                            .iter()
                            .map(|r| Json::Array(r.iter().map(Value::to_json).collect()))
                            .collect(),
                    ),
                );
                Json::Object(m)
            })
            .collect();
        doc.insert("sections".into(), Json::Array(sections));
        let checks = self
            .checks
            .iter()
            .map(|c| {
                let mut m = Map::new();
                m.insert("label".into(), c.label.clone().into());
                m.insert("backing".into(), c.backing.name().into());
                m.insert("passed".into(), c.passed.into());
                m.insert("detail".into(), c.detail.clone().into());
                Json::Object(m)
            })
            .collect();
        doc.insert("checks".into(), Json::Array(checks));
        doc.insert(
            "notes".into(),
            Json::Array(self.notes.iter().map(|n| n.clone().into()).collect()),
        );
        Json::Object(doc)
    }

    pub fn to_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }
}
