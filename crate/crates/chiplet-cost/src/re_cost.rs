//! Recurring engineering cost: the five-part decomposition of what one
//! produced unit costs to fabricate.
//!
//! The five parts are raw chips, chip defects, raw package, package defects
//! and wasted known good dies (KGDs) destroyed by packaging failures. The
//! packaging terms follow
//!
//! ```text
//! cost = raw_package
//!      + interposer * (1/(y1 * y2^n * y3) - 1)
//!      + substrate  * (1/y3 - 1)
//!      + kgd        * (1/(y2^n * y3) - 1)
//! ```
//!
//! with y1 the interposer die yield, y2 the per-chip bond yield, y3 the
//! substrate / interposer-attach yield and n the chip count. Non-interposer
//! techs degenerate to y1 = 1 with zero interposer cost.

use crate::catalog::TechKind;
use crate::error::{Error, Result};
use crate::system::{ChipletSpec, CostBreakdown, SystemSpec};
use crate::yield_model::{die_cost, die_yield, DieCost};

/// The yields entering one package-assembly evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PackagingYields {
    /// y1: interposer die yield (1 for substrate-only techs).
    pub interposer: f64,
    /// y2: per-chip bond yield.
    pub chip_bond: f64,
    /// y3: substrate / interposer-attach yield.
    pub substrate: f64,
    /// n: number of dies bonded into the package.
    pub chip_count: u32,
}

impl PackagingYields {
    pub fn new(interposer: f64, chip_bond: f64, substrate: f64, chip_count: u32) -> Result<Self> {
        for y in [interposer, chip_bond, substrate] {
            if !(y > 0.0 && y <= 1.0) {
                return Err(Error::ZeroYield(y));
            }
        }
        if chip_count == 0 {
            return Err(Error::EmptySystem);
        }
        Ok(PackagingYields {
            interposer,
            chip_bond,
            substrate,
            chip_count,
        })
    }

    /// Derive the yields of `system`, evaluating the interposer through the
    /// die-yield model when the tech carries one.
    pub fn for_system(system: &SystemSpec) -> Result<Self> {
        let interposer = match &system.tech.interposer_node {
            Some(node) => die_yield(system.package_area, node)?,
            None => 1.0,
        };
        // A monolithic package still bonds its single die.
        let n = if system.is_monolithic() { 1 } else { system.chip_count() };
        PackagingYields::new(
            interposer,
            system.tech.chip_bond_yield,
            system.tech.substrate_yield,
            n,
        )
    }

    fn bond_all(&self) -> f64 {
        self.chip_bond.powi(self.chip_count as i32)
    }
}

/// Raw + defect cost of one chiplet instance; the D2D slice is part of the
/// die area and pays its share of silicon and yield loss.
pub fn chip_re_cost(chiplet: &ChipletSpec) -> Result<DieCost> {
    die_cost(chiplet.total_area(), chiplet.node())
}

/// The three packaging-side components of the recurring cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PackagingCost {
    /// Substrate + interposer + bonding at unit yield.
    pub raw_package: f64,
    /// Interposer and substrate units lost to assembly defects.
    pub package_defects: f64,
    /// Good dies destroyed by packaging failures.
    pub wasted_kgd: f64,
}

impl PackagingCost {
    pub fn total(&self) -> f64 {
        self.raw_package + self.package_defects + self.wasted_kgd
    }
}

fn substrate_cost(system: &SystemSpec) -> f64 {
    system.package_area * system.tech.substrate_cost_per_area * system.tech.substrate_growth_factor
}

fn interposer_raw_cost(system: &SystemSpec) -> Result<f64> {
    match &system.tech.interposer_node {
        // Same code path as any die at the interposer node.
        Some(node) => Ok(die_cost(system.package_area, node)?.raw),
        None => Ok(0.0),
    }
}

/// Summed good-die cost of every chip instance in the package.
pub fn kgd_cost(system: &SystemSpec) -> Result<f64> {
    let mut total = 0.0;
    for (chiplet, count) in &system.chiplets {
        total += chip_re_cost(chiplet)?.good() * f64::from(*count);
    }
    Ok(total)
}

/// Packaging cost of `system`: raw package, package defects and wasted KGDs.
pub fn packaging_cost(system: &SystemSpec) -> Result<PackagingCost> {
    let yields = PackagingYields::for_system(system)?;
    let substrate = substrate_cost(system);
    let interposer = interposer_raw_cost(system)?;
    let bond = system.tech.bond_cost_per_chip * f64::from(yields.chip_count);
    let y2n = yields.bond_all();
    let package_defects = interposer * (1.0 / (yields.interposer * y2n * yields.substrate) - 1.0)
        + substrate * (1.0 / yields.substrate - 1.0);
    let wasted_kgd = kgd_cost(system)? * (1.0 / (y2n * yields.substrate) - 1.0);
    Ok(PackagingCost {
        raw_package: substrate + interposer + bond,
        package_defects,
        wasted_kgd,
    })
}

/// Assembly process order for fan-out style packaging.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssemblyFlow {
    /// Dies placed first, package formed on top; a package defect scraps the
    /// dies with it.
    ChipFirst,
    /// Package fabricated and yielded first, dies bonded after.
    ChipLast,
}

impl AssemblyFlow {
    fn as_str(self) -> &'static str {
        match self {
            AssemblyFlow::ChipFirst => "chip-first",
            AssemblyFlow::ChipLast => "chip-last",
        }
    }
}

/// Expected cost of one assembled unit under the chosen flow.
///
/// ```text
/// chip-first = (sum(C_chip / Y_chip) + C_package) / Y_package
/// chip-last  = (C_package / Y_package + sum(C_chip / Y_chip + C_bond)) / Y_bond^n
/// ```
///
/// `Y_package` is the package fabrication + attach yield `y1 * y3` and
/// `Y_bond` the per-chip bond yield `y2`. In the chip-last flow the
/// pre-yielded package cost is divided by the bonding yield along with
/// everything else; an alternative reading exempts it, and with the division
/// in place the two flows coincide only at unit yields (see README).
///
/// InFO supports both flows; MCM, 2.5D and monolithic packages are evaluated
/// as chip-last.
pub fn assembly_cost(system: &SystemSpec, flow: AssemblyFlow) -> Result<f64> {
    let info = matches!(
        system.tech.kind,
        TechKind::InfoChipFirst | TechKind::InfoChipLast
    );
    if flow == AssemblyFlow::ChipFirst && !info {
        return Err(Error::FlowNotSupported {
            flow: flow.as_str().into(),
            tech: system.tech.name.clone(),
        });
    }
    let yields = PackagingYields::for_system(system)?;
    let mut chips = 0.0;
    for (chiplet, count) in &system.chiplets {
        let cost = chip_re_cost(chiplet)?;
        let y = die_yield(chiplet.total_area(), chiplet.node())?;
        chips += cost.raw / y * f64::from(*count);
    }
    let package = substrate_cost(system) + interposer_raw_cost(system)?;
    let y_package = yields.interposer * yields.substrate;
    match flow {
        AssemblyFlow::ChipFirst => Ok((chips + package) / y_package),
        AssemblyFlow::ChipLast => {
            let bond = system.tech.bond_cost_per_chip * f64::from(yields.chip_count);
            Ok((package / y_package + chips + bond) / yields.bond_all())
        }
    }
}

/// Full recurring cost of one produced unit, itemized. NRE fields are zero;
/// [`crate::nre_cost::amortize`] fills them for a production group.
pub fn system_re_cost(system: &SystemSpec) -> Result<CostBreakdown> {
    let mut raw_chips = 0.0;
    let mut chip_defects = 0.0;
    for (chiplet, count) in &system.chiplets {
        let cost = chip_re_cost(chiplet)?;
        raw_chips += cost.raw * f64::from(*count);
        chip_defects += cost.defect * f64::from(*count);
    }
    let packaging = packaging_cost(system)?;
    Ok(CostBreakdown::new(
        raw_chips,
        chip_defects,
        packaging.raw_package,
        packaging.package_defects,
        packaging.wasted_kgd,
        0.0,
        0.0,
        0.0,
        0.0,
    ))
}

/// Good-die cost tied up in D2D interface area, the interconnect overhead
/// slice of the chip bars.
pub fn d2d_die_cost(system: &SystemSpec) -> Result<f64> {
    let mut total = 0.0;
    for (chiplet, count) in &system.chiplets {
        total += chip_re_cost(chiplet)?.good() * chiplet.d2d_area_fraction * f64::from(*count);
    }
    Ok(total)
}
