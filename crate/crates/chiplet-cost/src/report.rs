//! Deterministic CSV / JSON emission and atomic output writing.
//!
//! Floats are rendered with Rust's shortest round-trip formatting, so
//! identical inputs produce byte-identical artifacts.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::Result;
use crate::explorer::SweepResult;
use crate::reuse::ScenarioAnalysis;
use crate::system::CostBreakdown;
use crate::yield_model::CurvePoint;

/// Header of the recurring-cost breakdown table.
pub const RE_CSV_HEADER: &str = "system,raw_chips,chip_defects,raw_package,package_defects,wasted_kgd";
/// Header of the curve table.
pub const CURVE_CSV_HEADER: &str = "area_mm2,yield,normalized_cost";

fn f(x: f64) -> String {
    // Display gives the shortest string that parses back to the same f64.
    format!("{x}")
}

/// Recurring-cost components only, one row per system.
pub fn re_breakdown_csv(rows: &[(String, CostBreakdown)]) -> String {
    let mut out = String::from(RE_CSV_HEADER);
    out.push('\n');
    for (name, b) in rows {
        let _ = writeln!(
            out,
            "{name},{},{},{},{},{}",
            f(b.raw_chips),
            f(b.chip_defects),
            f(b.raw_package),
            f(b.package_defects),
            f(b.wasted_kgd),
        );
    }
    out
}

/// Full breakdown with the amortized NRE columns appended.
pub fn breakdown_csv(rows: &[(String, CostBreakdown)]) -> String {
    let mut out = String::from(RE_CSV_HEADER);
    out.push_str(",nre_modules,nre_chips,nre_packages,nre_d2d,total\n");
    for (name, b) in rows {
        let _ = writeln!(
            out,
            "{name},{},{},{},{},{},{},{},{},{},{}",
            f(b.raw_chips),
            f(b.chip_defects),
            f(b.raw_package),
            f(b.package_defects),
            f(b.wasted_kgd),
            f(b.nre_modules),
            f(b.nre_chips),
            f(b.nre_packages),
            f(b.nre_d2d),
            f(b.total),
        );
    }
    out
}

pub fn curve_csv(points: &[CurvePoint]) -> String {
    let mut out = String::from(CURVE_CSV_HEADER);
    out.push('\n');
    for p in points {
        let _ = writeln!(out, "{},{},{}", f(p.area_mm2), f(p.die_yield), f(p.normalized_cost));
    }
    out
}

pub fn sweep_csv(sweep: &SweepResult) -> String {
    let mut out = String::from(
        "chiplet_count,tech,raw_chips,chip_defects,raw_package,package_defects,wasted_kgd,total,normalized_total,overhead_share",
    );
    out.push('\n');
    for r in &sweep.rows {
        let b = &r.breakdown;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.chiplet_count,
            r.tech,
            f(b.raw_chips),
            f(b.chip_defects),
            f(b.raw_package),
            f(b.package_defects),
            f(b.wasted_kgd),
            f(b.total),
            f(r.normalized_total),
            f(r.overhead_share),
        );
    }
    out
}

/// Per-system scenario table: quantity plus the full breakdown columns and a
/// column normalized to `reference` (a per-unit total, e.g. the largest
/// system's).
pub fn scenario_csv(analysis: &ScenarioAnalysis, reference: f64) -> String {
    let mut out = String::from(RE_CSV_HEADER);
    out.push_str(",nre_modules,nre_chips,nre_packages,nre_d2d,total,normalized_total,quantity\n");
    for s in &analysis.systems {
        let b = &s.breakdown;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            s.system,
            f(b.raw_chips),
            f(b.chip_defects),
            f(b.raw_package),
            f(b.package_defects),
            f(b.wasted_kgd),
            f(b.nre_modules),
            f(b.nre_chips),
            f(b.nre_packages),
            f(b.nre_d2d),
            f(b.total),
            f(b.total / reference),
            s.quantity,
        );
    }
    out
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Write `bytes` to `dir/name` atomically: a temp file in the same
/// directory, flushed, then renamed over the target.
pub fn atomic_write(dir: &Path, name: &str, bytes: &[u8]) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let target = dir.join(name);
    let tmp = dir.join(format!(".tmp.{name}"));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, &target)?;
    Ok(target)
}
