//! Report structure shared by the JSON and text output paths.
//!
//! JSON serialization is deterministic: field order follows the struct
//! declarations and every collection is ordered, so identical queries give
//! byte-identical output. The text renderer prints graded dimensions as an
//! aligned degree table.

use serde::{Deserialize, Serialize};

use tautcoh_core::formulas::{Decomposition, KernelReport, TwistedBounds};
use tautcoh_core::checker::CheckOutcome;
use tautcoh_core::GradedDim;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub conjectural: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel: Option<KernelSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<ResidualReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<ChecksReport>,
}

impl Report {
    pub fn new(mode: impl Into<String>) -> Self {
        Report {
            mode: mode.into(),
            surface: None,
            n: None,
            k: None,
            conjectural: false,
            decomposition: None,
            kernel: None,
            residual: None,
            checks: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub provenance: String,
    pub total: Vec<usize>,
    pub summands: Vec<SummandReport>,
}

impl From<&Decomposition> for DecompositionReport {
    fn from(d: &Decomposition) -> Self {
        DecompositionReport {
            provenance: d.provenance().to_string(),
            total: d.total().dims().to_vec(),
            summands: d
                .summands()
                .iter()
                .map(|s| SummandReport { label: s.label.clone(), dims: s.dims.dims().to_vec() })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandReport {
    pub label: String,
    pub dims: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelSummary {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
}

impl From<&KernelReport> for KernelSummary {
    fn from(r: &KernelReport) -> Self {
        KernelSummary {
            domain_dim: r.domain_dim,
            codomain_dim: r.codomain_dim,
            rank: r.rank,
            kernel_dim: r.kernel_dim,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub euler: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_bounds: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<usize>>,
}

impl From<&TwistedBounds> for ResidualReport {
    fn from(b: &TwistedBounds) -> Self {
        ResidualReport {
            euler: b.residual_euler,
            upper_bounds: Some(b.residual_bounds.dims().to_vec()),
            exact: b.residual_exact.as_ref().map(|e| e.dims().to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksReport {
    pub suite: String,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<CheckLine>,
}

impl ChecksReport {
    pub fn new(suite: impl Into<String>, outcomes: &[CheckOutcome]) -> Self {
        let failed: Vec<CheckLine> = outcomes
            .iter()
            .filter(|o| !o.passed)
            .map(|o| CheckLine { name: o.name.clone(), details: o.details.clone() })
            .collect();
        ChecksReport {
            suite: suite.into(),
            total: outcomes.len(),
            passed: outcomes.len() - failed.len(),
            failed: failed.len(),
            failures: failed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub details: String,
}

/// Deterministic pretty JSON, newline terminated.
pub fn render_json(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

/// Aligned plain-text rendering.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("mode: {}\n", report.mode));
    if let Some(surface) = &report.surface {
        out.push_str(&format!("surface: {surface}\n"));
    }
    if let Some(n) = report.n {
        out.push_str(&format!("n: {n}\n"));
    }
    if let Some(k) = report.k {
        out.push_str(&format!("k: {k}\n"));
    }
    if report.conjectural {
        out.push_str("CONJECTURAL: this decomposition is extrapolated, not proved, for this n\n");
    }
    if let Some(d) = &report.decomposition {
        out.push('\n');
        let mut rows: Vec<(String, Vec<usize>)> = d
            .summands
            .iter()
            .map(|s| (s.label.clone(), s.dims.clone()))
            .collect();
        rows.push(("total".to_string(), d.total.clone()));
        out.push_str(&dims_table(&rows));
    }
    if let Some(kernel) = &report.kernel {
        out.push('\n');
        out.push_str("kernel of the polarized multiplication map:\n");
        out.push_str(&format!("  domain dimension:   {}\n", kernel.domain_dim));
        out.push_str(&format!("  codomain dimension: {}\n", kernel.codomain_dim));
        out.push_str(&format!("  rank:               {}\n", kernel.rank));
        out.push_str(&format!("  kernel dimension:   {}\n", kernel.kernel_dim));
    }
    if let Some(residual) = &report.residual {
        out.push('\n');
        out.push_str("residual term K*:\n");
        out.push_str(&format!("  Euler characteristic: {}\n", residual.euler));
        if let Some(bounds) = &residual.upper_bounds {
            out.push_str(&format!(
                "  degreewise upper bounds: {}\n",
                GradedDim::new(bounds.clone())
            ));
        }
        match &residual.exact {
            Some(exact) => out.push_str(&format!(
                "  exact dims: {}\n",
                GradedDim::new(exact.clone())
            )),
            None if residual.upper_bounds.is_some() => {
                out.push_str("  exact dims: not forced at dimension level\n")
            }
            None => {}
        }
    }
    if let Some(checks) = &report.checks {
        out.push('\n');
        out.push_str(&format!("suite: {}\n", checks.suite));
        out.push_str(&format!(
            "outcomes: {} checks, {} passed, {} failed\n",
            checks.total, checks.passed, checks.failed
        ));
        for f in &checks.failures {
            out.push_str(&format!("FAIL {}: {}\n", f.name, f.details));
        }
    }
    out
}

/// Rows of `(label, dims)` as a degree table, labels left-aligned, numbers
/// right-aligned, every row padded to the widest degree range.
fn dims_table(rows: &[(String, Vec<usize>)]) -> String {
    let degrees = rows.iter().map(|(_, dims)| dims.len()).max().unwrap_or(0);
    let label_width = rows
        .iter()
        .map(|(label, _)| label.chars().count())
        .max()
        .unwrap_or(0)
        .max("degree".len());
    let cell_width = rows
        .iter()
        .flat_map(|(_, dims)| dims.iter())
        .map(|d| d.to_string().len())
        .chain(degrees.checked_sub(1).map(|d| d.to_string().len()))
        .max()
        .unwrap_or(1)
        + 2;

    let mut out = String::new();
    let pad = |s: &str, out: &mut String| {
        out.push_str(s);
        for _ in s.chars().count()..label_width {
            out.push(' ');
        }
    };
    pad("degree", &mut out);
    for i in 0..degrees {
        out.push_str(&format!("{i:>cell_width$}"));
    }
    out.push('\n');
    for (label, dims) in rows {
        pad(label, &mut out);
        for i in 0..degrees {
            let value = dims.get(i).copied().unwrap_or(0);
            out.push_str(&format!("{value:>cell_width$}"));
        }
        out.push('\n');
    }
    out
}
