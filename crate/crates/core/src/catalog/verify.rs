//! Closed form against quadrature over a grid of parameter points.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::Result;
use crate::special::Complex;

use super::{catalog, format_complex, CatalogEntry, ParamSet};

/// Points whose absolute error is below this pass regardless of tolerance.
pub const ABS_FLOOR: f64 = 1e-13;

/// Oracle tolerance used for a requested comparison tolerance.
pub fn oracle_tolerance(tol: f64) -> f64 {
    (tol * 1e-2).clamp(1e-13, 1e-10)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointStatus {
    Pass,
    Fail,
    Skip,
}

impl PointStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            PointStatus::Pass => "pass",
            PointStatus::Fail => "fail",
            PointStatus::Skip => "skip",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointRecord {
    pub params: ParamSet,
    pub status: PointStatus,
    pub closed: Option<Complex>,
    pub oracle: Option<Complex>,
    pub oracle_error: Option<f64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    /// Why a point was skipped or failed without numbers.
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub entry: String,
    pub grid: String,
    pub tolerance: f64,
    pub points: Vec<PointRecord>,
}

impl VerificationReport {
    fn count(&self, s: PointStatus) -> usize {
        self.points.iter().filter(|p| p.status == s).count()
    }

    pub fn pass_count(&self) -> usize {
        self.count(PointStatus::Pass)
    }

    pub fn fail_count(&self) -> usize {
        self.count(PointStatus::Fail)
    }

    pub fn skip_count(&self) -> usize {
        self.count(PointStatus::Skip)
    }

    /// Largest relative error over compared points.
    pub fn max_rel_error(&self) -> Option<f64> {
        self.points.iter().filter_map(|p| p.rel_err).fold(None, |m, e| Some(m.map_or(e, |m: f64| m.max(e))))
    }

    pub fn all_passed(&self) -> bool {
        self.fail_count() == 0
    }

    /// Header line then one JSON object per point.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{{\"entry\":{},\"grid\":{},\"tolerance\":{},\"version\":{}}}",
            json_str(&self.entry),
            json_str(&self.grid),
            json_num(Some(self.tolerance)),
            json_str(env!("CARGO_PKG_VERSION"))
        );
        for p in &self.points {
            let params: Vec<String> =
                p.params.iter().map(|(n, v)| format!("{}:{}", json_str(n), json_str(&format_complex(v)))).collect();
            let _ = writeln!(
                out,
                "{{\"params\":{{{}}},\"closed_re\":{},\"closed_im\":{},\"oracle_re\":{},\"oracle_im\":{},\"oracle_err\":{},\"abs_err\":{},\"rel_err\":{},\"status\":{},\"note\":{}}}",
                params.join(","),
                json_num(p.closed.map(|c| c.re)),
                json_num(p.closed.map(|c| c.im)),
                json_num(p.oracle.map(|c| c.re)),
                json_num(p.oracle.map(|c| c.im)),
                json_num(p.oracle_error),
                json_num(p.abs_err),
                json_num(p.rel_err),
                json_str(p.status.as_str()),
                p.note.as_deref().map_or("null".to_string(), json_str),
            );
        }
        out
    }

    /// Human-readable summary table.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}  (tol {:e})", self.entry, self.tolerance);
        for p in &self.points {
            let num = |v: Option<Complex>| v.map_or("-".to_string(), |c| format!("{:.12e}{:+.3e}i", c.re, c.im));
            let _ = writeln!(
                out,
                "  {:<4} {:<40} closed {:<30} oracle {:<30} rel {}{}",
                p.status.as_str(),
                p.params.to_string(),
                num(p.closed),
                num(p.oracle),
                p.rel_err.map_or("-".to_string(), |e| format!("{e:.2e}")),
                p.note.as_ref().map_or(String::new(), |n| format!("  ({n})")),
            );
        }
        let _ = writeln!(
            out,
            "  {} pass, {} fail, {} skip; max rel err {}",
            self.pass_count(),
            self.fail_count(),
            self.skip_count(),
            self.max_rel_error().map_or("-".to_string(), |e| format!("{e:.2e}"))
        );
        out
    }
}

fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn json_num(x: Option<f64>) -> String {
    match x {
        Some(v) if v.is_finite() => format!("{v:.16e}"),
        _ => "null".to_string(),
    }
}

fn check_point(entry: &CatalogEntry, p: &ParamSet, tol: f64) -> PointRecord {
    let mut rec = PointRecord {
        params: p.clone(),
        status: PointStatus::Skip,
        closed: None,
        oracle: None,
        oracle_error: None,
        abs_err: None,
        rel_err: None,
        note: None,
    };
    let verdicts = match entry.check(p) {
        Ok(v) => v,
        Err(e) => {
            rec.note = Some(e.to_string());
            return rec;
        }
    };
    let violated: Vec<_> = verdicts.iter().filter(|v| v.enforced && !v.holds).map(|v| v.text.as_str()).collect();
    if !violated.is_empty() {
        rec.note = Some(format!("violates {}", violated.join("; ")));
        return rec;
    }
    rec.status = PointStatus::Fail;
    let closed = entry.evaluate(p);
    let oracle = entry.oracle(p, oracle_tolerance(tol));
    match (&closed, &oracle) {
        (Ok(c), Ok(o)) => {
            let abs = (c - o.value).norm();
            let rel = abs / o.value.norm();
            rec.closed = Some(*c);
            rec.oracle = Some(o.value);
            rec.oracle_error = Some(o.error_estimate);
            rec.abs_err = Some(abs);
            rec.rel_err = Some(rel);
            if rel <= tol || abs <= ABS_FLOOR {
                rec.status = PointStatus::Pass;
            }
        }
        _ => {
            rec.closed = closed.as_ref().ok().copied();
            rec.oracle = oracle.as_ref().ok().map(|o| o.value);
            let errs: Vec<String> = [closed.err(), oracle.err()].into_iter().flatten().map(|e| e.to_string()).collect();
            rec.note = Some(errs.join("; "));
        }
    }
    rec
}

/// Compares closed form and oracle at each point, in parallel, keeping grid order.
pub fn verify_points(entry: &CatalogEntry, grid: &[ParamSet], tol: f64, grid_text: &str) -> VerificationReport {
    let points = grid.par_iter().map(|p| check_point(entry, p, tol)).collect();
    VerificationReport { entry: entry.id.clone(), grid: grid_text.to_string(), tolerance: tol, points }
}

/// Looks up `id` and verifies it over `grid`.
pub fn verify_entry(id: &str, grid: &[ParamSet], tol: f64) -> Result<VerificationReport> {
    let entry = catalog().get(id)?;
    let text = grid.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" | ");
    Ok(verify_points(entry, grid, tol, &text))
}

/// Verifies an entry over its built-in grid.
pub fn verify_default(entry: &CatalogEntry, tol: f64) -> VerificationReport {
    verify_points(entry, entry.default_grid(), tol, "default")
}
