//! Machine-readable run reports: versioned JSON (deterministic field
//! order) and a flat CSV rendering with `_re`/`_im` suffixes.

use crate::cplx::C;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

/// Where a number came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    Quadrature,
    Extrapolation,
    Oracle,
    Series,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValueEntry {
    pub name: String,
    pub re: f64,
    pub im: f64,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stderr: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AssertionEntry {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub seed: u64,
    /// Inputs echoed back; BTreeMap keeps the key order deterministic.
    pub inputs: BTreeMap<String, String>,
    pub values: Vec<ValueEntry>,
    pub assertions: Vec<AssertionEntry>,
    /// Present only when timing was requested; omitted by default so
    /// identical runs emit identical bytes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            seed,
            inputs: BTreeMap::new(),
            values: Vec::new(),
            assertions: Vec::new(),
            wall_time_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn value(&mut self, name: &str, v: C, provenance: Provenance) -> &mut Self {
        self.values.push(ValueEntry {
            name: name.to_string(),
            re: v.re,
            im: v.im,
            provenance,
            stderr: None,
        });
        self
    }

    pub fn value_with_stderr(
        &mut self,
        name: &str,
        v: C,
        stderr: f64,
        provenance: Provenance,
    ) -> &mut Self {
        self.values.push(ValueEntry {
            name: name.to_string(),
            re: v.re,
            im: v.im,
            provenance,
            stderr: Some(stderr),
        });
        self
    }

    pub fn assertion(&mut self, name: &str, pass: bool, detail: impl ToString) -> &mut Self {
        self.assertions.push(AssertionEntry {
            name: name.to_string(),
            pass,
            detail: detail.to_string(),
        });
        self
    }

    pub fn all_pass(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// Serialize the report; JSON keeps the struct field order, CSV flattens
/// each value into `name_re`, `name_im` columns on a single data row.
pub fn emit(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            serde_json::to_string_pretty(report).map_err(|e| Error::Io(e.to_string()))
        }
        Format::Csv => {
            let mut header = Vec::new();
            let mut row = Vec::new();
            for v in &report.values {
                header.push(format!("{}_re", v.name));
                header.push(format!("{}_im", v.name));
                row.push(format!("{:.17e}", v.re));
                row.push(format!("{:.17e}", v.im));
                if let Some(se) = v.stderr {
                    header.push(format!("{}_stderr", v.name));
                    row.push(format!("{se:.17e}"));
                }
            }
            for a in &report.assertions {
                header.push(format!("pass_{}", a.name));
                row.push(if a.pass { "1" } else { "0" }.to_string());
            }
            let mut out = header.join(",");
            out.push('\n');
            if !row.is_empty() {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cplx::c;

    #[test]
    fn json_roundtrip_and_determinism() {
        let mut rep = Report::new("coeff", 42);
        rep.input("case", "zero").input("n", 2);
        rep.value("closed_form", c(1.5, -0.25), Provenance::ClosedForm);
        rep.value_with_stderr("oracle", c(1.49, -0.24), 0.02, Provenance::Oracle);
        rep.assertion("agreement", true, "within 3 sigma");
        let a = emit(&rep, Format::Json).unwrap();
        let b = emit(&rep, Format::Json).unwrap();
        assert_eq!(a, b);
        let back: Report = serde_json::from_str(&a).unwrap();
        assert_eq!(back.schema, SCHEMA_VERSION);
        assert_eq!(back.values.len(), 2);
        assert_eq!(back.values[1].stderr, Some(0.02));
        assert!(back.all_pass());
        // wall time stays out of the bytes unless requested
        assert!(!a.contains("wall_time_ms"));
    }

    #[test]
    fn csv_flattens_and_headers_only_when_empty() {
        let mut rep = Report::new("sweep", 1);
        rep.value("v", c(1.0, 2.0), Provenance::Series);
        let out = emit(&rep, Format::Csv).unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), "v_re,v_im");
        assert!(lines.next().unwrap().starts_with("1.0"));
        let empty = Report::new("sweep", 1);
        let out = emit(&empty, Format::Csv).unwrap();
        assert_eq!(out, "\n");
    }
}
