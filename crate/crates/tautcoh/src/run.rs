//! Query dispatch: a mode plus parameters against a surface, producing a
//! [`Report`]. All parameter validation happens here so the library's
//! documented panics are unreachable from the binary.

use anyhow::{anyhow, bail, Context, Result};

use tautcoh_core::checker;
use tautcoh_core::formulas::{
    sym2_cohomology_conjectural, sym2_cohomology_n2, sym2_cohomology_n3, sym_power_cohomology,
    twisted_cohomology_bounds, twisted_residual_euler, twisted_sections,
};
use tautcoh_core::{GradedDim, Slot, SurfaceData};

use crate::report::{ChecksReport, DecompositionReport, KernelSummary, Report, ResidualReport};

/// Query modes, named as they appear in configs and `--mode`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    SkTaut,
    S2N2,
    S2N3,
    S2Conjecture,
    SectionsTwisted,
    EulerK,
    TwistedBounds,
    Check,
}

impl Mode {
    pub const ALL: [Mode; 8] = [
        Mode::SkTaut,
        Mode::S2N2,
        Mode::S2N3,
        Mode::S2Conjecture,
        Mode::SectionsTwisted,
        Mode::EulerK,
        Mode::TwistedBounds,
        Mode::Check,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::SkTaut => "sk_taut",
            Mode::S2N2 => "s2_n2",
            Mode::S2N3 => "s2_n3",
            Mode::S2Conjecture => "s2_conjecture",
            Mode::SectionsTwisted => "sections_twisted",
            Mode::EulerK => "euler_K",
            Mode::TwistedBounds => "twisted_bounds",
            Mode::Check => "check",
        }
    }

    pub fn parse(s: &str) -> Result<Mode> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Mode::ALL.iter().map(|m| m.as_str()).collect();
                anyhow!("unknown mode {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// Check suite sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Suite {
    #[default]
    Default,
    Full,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Default => "default",
            Suite::Full => "full",
        }
    }

    pub fn parse(s: &str) -> Result<Suite> {
        match s {
            "default" => Ok(Suite::Default),
            "full" => Ok(Suite::Full),
            _ => bail!("unknown suite {s:?}; expected default or full"),
        }
    }
}

/// 0 when nothing failed, 2 when the report carries failed checks.
pub fn exit_code_for(report: &Report) -> i32 {
    match &report.checks {
        Some(checks) if checks.failed > 0 => 2,
        _ => 0,
    }
}

fn require_n(n: Option<usize>) -> Result<usize> {
    n.context("this mode needs n (set query.n or pass --n)")
}

fn require_surface(mode: Mode, surface: Option<&SurfaceData>) -> Result<&SurfaceData> {
    surface.with_context(|| {
        format!("mode {} needs a surface section in the config", mode.as_str())
    })
}

/// Dims for the k <= 1 formula: explicit twist slots when present, the
/// untwisted specialization (A = O, LA = L) otherwise.
fn sk_taut_inputs(surface: &SurfaceData, k: usize) -> Result<(GradedDim, GradedDim)> {
    let h_a = match surface.dims(Slot::A) {
        Ok(h) => h.clone(),
        Err(_) => surface.dims(Slot::O)?.clone(),
    };
    let h_la = match surface.dims(Slot::LA) {
        Ok(h) => Ok(h.clone()),
        Err(_) => match surface.dims(Slot::L) {
            Ok(h) => Ok(h.clone()),
            // S^0 ignores the twisted bundle entirely.
            Err(_) if k == 0 => Ok(GradedDim::scalar()),
            Err(e) => Err(e),
        },
    }?;
    Ok((h_a, h_la))
}

/// Evaluates one query. Errors here are config or usage problems.
pub fn evaluate(
    mode: Mode,
    n: Option<usize>,
    k: Option<usize>,
    suite: Suite,
    surface: Option<&SurfaceData>,
) -> Result<Report> {
    let mut report = Report::new(mode.as_str());
    report.surface = surface.map(|s| s.name().to_string());
    match mode {
        Mode::SkTaut => {
            let n = require_n(n)?;
            if n == 0 {
                bail!("sk_taut needs n >= 1");
            }
            let k = k.unwrap_or(1);
            if k > 1 {
                bail!("sk_taut covers k = 0 and k = 1 only; no formula is implemented beyond that");
            }
            let surface = require_surface(mode, surface)?;
            let (h_a, h_la) = sk_taut_inputs(surface, k)?;
            let d = sym_power_cohomology(n, k, &h_a, &h_la)?;
            report.n = Some(n);
            report.k = Some(k);
            report.decomposition = Some(DecompositionReport::from(&d));
        }
        Mode::S2N2 | Mode::S2N3 => {
            let surface = require_surface(mode, surface)?;
            let h_o = surface.dims(Slot::O)?;
            let h_l = surface.dims(Slot::L)?;
            let h_l2 = surface.dims(Slot::L2)?;
            let d = match mode {
                Mode::S2N2 => sym2_cohomology_n2(h_o, h_l, h_l2)?,
                _ => sym2_cohomology_n3(h_o, h_l, h_l2)?,
            };
            report.n = Some(if mode == Mode::S2N2 { 2 } else { 3 });
            report.decomposition = Some(DecompositionReport::from(&d));
        }
        Mode::S2Conjecture => {
            let n = require_n(n)?;
            if n < 2 {
                bail!("s2_conjecture needs n >= 2");
            }
            let surface = require_surface(mode, surface)?;
            let d = sym2_cohomology_conjectural(
                n,
                surface.dims(Slot::O)?,
                surface.dims(Slot::L)?,
                surface.dims(Slot::L2)?,
            )?;
            report.n = Some(n);
            report.conjectural = d.conjectural();
            report.decomposition = Some(DecompositionReport::from(&d));
        }
        Mode::SectionsTwisted => {
            let n = require_n(n)?;
            if n < 2 {
                bail!("sections_twisted needs n >= 2");
            }
            let surface = require_surface(mode, surface)?;
            let s = twisted_sections(n, surface)?;
            report.n = Some(n);
            report.decomposition = Some(DecompositionReport::from(&s.decomposition));
            report.kernel = Some(KernelSummary::from(&s.kernel));
        }
        Mode::EulerK => {
            let n = require_n(n)?;
            if n != 2 && n != 3 {
                bail!("euler_K is defined for n = 2 and n = 3");
            }
            let surface = require_surface(mode, surface)?;
            let euler = twisted_residual_euler(
                n,
                surface.dims(Slot::A)?,
                surface.dims(Slot::L2A)?,
                surface.dims(Slot::L2A2)?,
            );
            report.n = Some(n);
            report.residual = Some(ResidualReport { euler, upper_bounds: None, exact: None });
        }
        Mode::TwistedBounds => {
            let n = require_n(n)?;
            if n != 2 && n != 3 {
                bail!("twisted_bounds is defined for n = 2 and n = 3");
            }
            let surface = require_surface(mode, surface)?;
            let b = twisted_cohomology_bounds(n, surface)?;
            report.n = Some(n);
            report.decomposition = Some(DecompositionReport::from(&b.canonical));
            report.residual = Some(ResidualReport::from(&b));
        }
        Mode::Check => {
            let outcomes = match suite {
                Suite::Default => checker::default_suite(),
                Suite::Full => checker::full_suite(),
            };
            report.checks = Some(ChecksReport::new(suite.as_str(), &outcomes));
        }
    }
    Ok(report)
}
