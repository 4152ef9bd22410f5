//! Machine-readable verification reports.

use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

/// Crate version, with the `git describe` string when the build saw one.
pub fn version_string() -> String {
    match option_env!("FSQ_GIT_DESCRIBE") {
        Some(desc) if !desc.is_empty() => format!("{} ({desc})", env!("CARGO_PKG_VERSION")),
        _ => env!("CARGO_PKG_VERSION").to_string(),
    }
}

/// Shortest round-trip decimal, switching to exponent notation for very
/// small or large magnitudes.
pub fn csv_number(v: f64) -> String {
    if v == 0.0 || !v.is_finite() || (1e-4..1e15).contains(&v.abs()) {
        v.to_string()
    } else {
        format!("{v:e}")
    }
}

/// One checked quantity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub n: usize,
    pub point: Vec<f64>,
    /// `null` in JSON when the evaluation failed.
    pub residual: Option<f64>,
    pub tol: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub version: String,
    pub config: Value,
    pub cases: Vec<Case>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, config: Value) -> Self {
        Self {
            suite: suite.into(),
            version: version_string(),
            config,
            cases: Vec::new(),
            pass: true,
        }
    }

    /// Records `residual < tol`; a non-finite residual fails.
    pub fn check(&mut self, name: impl Into<String>, n: usize, point: Vec<f64>, residual: f64, tol: f64) -> bool {
        let pass = residual.is_finite() && residual < tol;
        self.cases.push(Case {
            name: name.into(),
            n,
            point,
            residual: residual.is_finite().then_some(residual),
            tol,
            pass,
        });
        self.pass &= pass;
        pass
    }

    /// Records an evaluation that returned an error; always a failure.
    pub fn failure(&mut self, name: impl Into<String>, n: usize, point: Vec<f64>, tol: f64) {
        self.cases.push(Case {
            name: name.into(),
            n,
            point,
            residual: None,
            tol,
            pass: false,
        });
        self.pass = false;
    }

    /// Appends the cases of `other`, prefixing their names with its suite.
    pub fn absorb(&mut self, other: VerificationReport) {
        for mut case in other.cases {
            case.name = format!("{}/{}", other.suite, case.name);
            self.pass &= case.pass;
            self.cases.push(case);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn worst_ratio(&self) -> f64 {
        self.cases
            .iter()
            .map(|c| c.residual.map_or(f64::INFINITY, |r| r / c.tol))
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut out, self)?;
        writeln!(out)?;
        Ok(())
    }

    /// One row per case: `suite,name,n,point,residual,tol,pass`, with the
    /// point coordinates joined by spaces.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["suite", "name", "n", "point", "residual", "tol", "pass"])?;
        for c in &self.cases {
            let point: Vec<String> = c.point.iter().map(|v| format!("{v:e}")).collect();
            w.write_record([
                self.suite.clone(),
                c.name.clone(),
                c.n.to_string(),
                point.join(" "),
                c.residual.map_or("NaN".to_string(), |r| format!("{r:e}")),
                format!("{:e}", c.tol),
                c.pass.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}
