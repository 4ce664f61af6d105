//! Design-space sweeps and decision procedures: partition-granularity sweeps,
//! monolithic-vs-multichip comparison and break-even-quantity search.

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{IntegrationTech, ProcessNode, TechKind};
use crate::error::{Error, Result};
use crate::nre_cost::{group_nre_multichip, group_nre_soc};
use crate::re_cost::{d2d_die_cost, system_re_cost};
use crate::system::{build_system, ChipletSpec, CostBreakdown, ModuleSpec, SystemSpec};

/// Split `total_module_area` into `count` equal modules, one distinct chiplet
/// per module. A single-slice split carries no D2D interface.
///
/// Every slice is its own design (own masks); equal-area partitioning is the
/// sweep methodology, arbitrary assignments go through [`build_system`].
pub fn equal_split_multichip(
    name: &str,
    total_module_area: f64,
    count: u32,
    node: &ProcessNode,
    tech: &IntegrationTech,
    d2d_fraction: f64,
    quantity: u64,
) -> Result<SystemSpec> {
    if count == 0 {
        return Err(Error::invariant("sweep.counts", "chiplet count must be >= 1"));
    }
    let fraction = if count == 1 { 0.0 } else { d2d_fraction };
    let slice = total_module_area / f64::from(count);
    let chiplets = (0..count)
        .map(|i| {
            let module = ModuleSpec::new(format!("{name}-m{i}"), slice, node.clone())?;
            Ok((
                ChipletSpec::new(format!("{name}-p{i}"), vec![module], fraction)?,
                1u32,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    build_system(name, chiplets, tech, quantity, None, None)
}

/// The monolithic counterpart of [`equal_split_multichip`]: the same
/// `count` modules on a single die with no D2D area.
pub fn equal_split_monolithic(
    name: &str,
    total_module_area: f64,
    module_count: u32,
    node: &ProcessNode,
    tech: &IntegrationTech,
    quantity: u64,
) -> Result<SystemSpec> {
    let slice = total_module_area / f64::from(module_count);
    let modules = (0..module_count)
        .map(|i| ModuleSpec::new(format!("{name}-m{i}"), slice, node.clone()))
        .collect::<Result<Vec<_>>>()?;
    let die = ChipletSpec::new(format!("{name}-die"), modules, 0.0)?;
    build_system(name, vec![(die, 1)], tech, quantity, None, None)
}

/// One sweep cell: a (chiplet count, integration tech) variant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub chiplet_count: u32,
    pub tech: String,
    pub breakdown: CostBreakdown,
    /// Total relative to the 100 mm2 monolithic reference.
    pub normalized_total: f64,
    /// (packaging + D2D die cost) share of the recurring total.
    pub overhead_share: f64,
}

/// Result of a partition sweep; rows are sorted by chiplet count, then tech.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub axis: String,
    pub rows: Vec<SweepRow>,
}

/// Recurring cost of dividing one monolithic chip into different numbers of
/// equal chiplets under each integration tech.
///
/// Monolithic techs appear only at count 1 (the baseline row). All totals are
/// normalized to a 100 mm2 single-die system on `baseline_tech`.
pub fn partition_sweep(
    total_module_area: f64,
    chiplet_counts: &[u32],
    techs: &[IntegrationTech],
    node: &ProcessNode,
    d2d_fraction: f64,
    baseline_tech: &IntegrationTech,
) -> Result<SweepResult> {
    if chiplet_counts.is_empty() {
        return Err(Error::EmptyCounts);
    }
    let reference =
        system_re_cost(&equal_split_monolithic("ref-100", 100.0, 1, node, baseline_tech, 1)?)?
            .re_total();
    let mut counts = chiplet_counts.to_vec();
    counts.sort_unstable();
    counts.dedup();
    let mut cells: Vec<(u32, &IntegrationTech)> = Vec::new();
    for &count in &counts {
        for tech in techs {
            if tech.kind == TechKind::Monolithic && count != 1 {
                continue;
            }
            cells.push((count, tech));
        }
    }
    let rows = cells
        .par_iter()
        .map(|&(count, tech)| {
            let label = format!("{}-{}x", tech.name, count);
            let system = if tech.kind == TechKind::Monolithic {
                equal_split_monolithic(&label, total_module_area, count, node, tech, 1)?
            } else {
                equal_split_multichip(&label, total_module_area, count, node, tech, d2d_fraction, 1)?
            };
            let breakdown = system_re_cost(&system)?;
            let overhead = breakdown.packaging_total() + d2d_die_cost(&system)?;
            Ok(SweepRow {
                chiplet_count: count,
                tech: tech.name.clone(),
                normalized_total: breakdown.total / reference,
                overhead_share: overhead / breakdown.total,
                breakdown,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult {
        axis: "chiplet_count".into(),
        rows,
    })
}

/// Outcome of a break-even search over production quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome", content = "quantity")]
pub enum BreakEven {
    /// Smallest quantity at which the multi-chip system is no more expensive.
    Quantity(u64),
    /// The multi-chip system never catches up: its NRE burden is not higher,
    /// so the gap cannot close with volume.
    NoCrossover,
    /// No crossover inside the range, but the cost gap still shrinks with
    /// quantity; a larger upper bound may contain one.
    RangeExhausted,
}

fn per_unit_totals(soc: &SystemSpec, multi: &SystemSpec) -> Result<(f64, f64, f64, f64)> {
    let soc_re = system_re_cost(soc)?.re_total();
    let multi_re = system_re_cost(multi)?.re_total();
    let soc_nre = group_nre_soc(std::slice::from_ref(soc))?.total();
    let multi_nre = group_nre_multichip(std::slice::from_ref(multi)).total();
    Ok((soc_re, soc_nre, multi_re, multi_nre))
}

/// Smallest quantity in `[min_quantity, max_quantity]` at which the
/// amortized total of `multi` stops exceeding the amortized total of `soc`.
///
/// Each side amortizes its own single-system NRE over the probed quantity.
/// The per-unit difference is `dRE + dNRE/q`, monotone in `q`, so bisection
/// over the integer range is exact.
pub fn break_even_quantity(
    soc: &SystemSpec,
    multi: &SystemSpec,
    min_quantity: u64,
    max_quantity: u64,
) -> Result<BreakEven> {
    if min_quantity == 0 || min_quantity > max_quantity {
        return Err(Error::invariant(
            "break_even.range",
            "need 1 <= min_quantity <= max_quantity",
        ));
    }
    let a = soc.module_area_sum();
    let b = multi.module_area_sum();
    if (a - b).abs() > 1e-9 * a.max(b) {
        return Err(Error::invariant(
            "break_even",
            format!("systems implement different module areas ({a:.3} vs {b:.3} mm2)"),
        ));
    }
    let (soc_re, soc_nre, multi_re, multi_nre) = per_unit_totals(soc, multi)?;
    let gap = |q: u64| (multi_re - soc_re) + (multi_nre - soc_nre) / q as f64;
    if gap(min_quantity) <= 0.0 {
        return Ok(BreakEven::Quantity(min_quantity));
    }
    if gap(max_quantity) > 0.0 {
        // still positive at the top of the range: decide whether more volume
        // could ever flip it
        return if multi_nre > soc_nre && multi_re < soc_re {
            Ok(BreakEven::RangeExhausted)
        } else {
            Ok(BreakEven::NoCrossover)
        };
    }
    let (mut lo, mut hi) = (min_quantity, max_quantity);
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if gap(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(BreakEven::Quantity(hi))
}

/// One step of the granularity series: what splitting one level finer saves
/// in chip-defect cost.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GranularityStep {
    pub chiplet_count: u32,
    /// Chip-defect cost at `chiplet_count - 1` minus at `chiplet_count`.
    pub defect_saving: f64,
    /// The saving relative to the single-chip system's recurring total.
    pub share_of_baseline: f64,
}

/// Marginal defect-cost savings of moving from `count - 1` to `count`
/// chiplets, for counts 2..=max_count. On a defect-free process every entry
/// is zero: splitting then only adds overhead.
pub fn granularity_marginal_series(
    total_module_area: f64,
    max_count: u32,
    tech: &IntegrationTech,
    node: &ProcessNode,
    d2d_fraction: f64,
) -> Result<Vec<GranularityStep>> {
    if max_count < 2 {
        return Err(Error::invariant(
            "granularity.max_count",
            "max_count must be >= 2",
        ));
    }
    let defects: Vec<f64> = (1..=max_count)
        .map(|count| {
            let system = equal_split_multichip(
                &format!("g-{count}"),
                total_module_area,
                count,
                node,
                tech,
                d2d_fraction,
                1,
            )?;
            Ok(system_re_cost(&system)?.chip_defects)
        })
        .collect::<Result<Vec<_>>>()?;
    let baseline = system_re_cost(&equal_split_multichip(
        "g-1",
        total_module_area,
        1,
        node,
        tech,
        d2d_fraction,
        1,
    )?)?
    .re_total();
    Ok((2..=max_count)
        .map(|count| {
            let saving = defects[count as usize - 2] - defects[count as usize - 1];
            GranularityStep {
                chiplet_count: count,
                defect_saving: saving,
                share_of_baseline: saving / baseline,
            }
        })
        .collect())
}
