//! The module / chip / package abstraction.
//!
//! A system is a package of chiplets; a chiplet is an indivisible set of
//! modules on one node plus a D2D interface slice. All types are immutable
//! after construction and safe to share across concurrent evaluations.

use serde::Serialize;

use crate::catalog::{IntegrationTech, ProcessNode, TechKind};
use crate::error::{Error, Result};

/// An indivisible group of functional units assigned to exactly one chiplet.
///
/// The D2D interface is a distinguished per-node module and is never listed
/// here; it enters through [`ChipletSpec::d2d_area_fraction`].
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleSpec {
    pub name: String,
    /// Silicon area in mm2.
    pub area: f64,
    pub node: ProcessNode,
}

impl ModuleSpec {
    pub fn new(name: impl Into<String>, area: f64, node: ProcessNode) -> Result<ModuleSpec> {
        let name = name.into();
        if !area.is_finite() || area <= 0.0 {
            return Err(Error::invariant(
                format!("modules.{name}.area"),
                "module area must be > 0",
            ));
        }
        Ok(ModuleSpec { name, area, node })
    }
}

/// A die: a set of modules on one node plus a D2D area fraction.
#[derive(Debug, Clone, PartialEq)]
pub struct ChipletSpec {
    pub name: String,
    pub modules: Vec<ModuleSpec>,
    /// Fraction of the total die area consumed by the D2D interface, in [0, 1).
    pub d2d_area_fraction: f64,
}

impl ChipletSpec {
    pub fn new(
        name: impl Into<String>,
        modules: Vec<ModuleSpec>,
        d2d_area_fraction: f64,
    ) -> Result<ChipletSpec> {
        let name = name.into();
        if modules.is_empty() {
            return Err(Error::invariant(
                format!("chiplets.{name}"),
                "chiplet must contain at least one module",
            ));
        }
        if !(0.0..1.0).contains(&d2d_area_fraction) {
            return Err(Error::invariant(
                format!("chiplets.{name}.d2d_area_fraction"),
                "D2D area fraction must lie in [0, 1)",
            ));
        }
        let first = &modules[0].node.name;
        if let Some(m) = modules.iter().find(|m| &m.node.name != first) {
            return Err(Error::NodeMismatchWithinChiplet {
                chiplet: name,
                first: first.clone(),
                second: m.node.name.clone(),
            });
        }
        Ok(ChipletSpec {
            name,
            modules,
            d2d_area_fraction,
        })
    }

    /// Summed functional-module area, excluding D2D.
    pub fn module_area(&self) -> f64 {
        self.modules.iter().map(|m| m.area).sum()
    }

    /// Total die area S including the D2D slice:
    /// `total_area * (1 - d2d_area_fraction) = module_area`.
    pub fn total_area(&self) -> f64 {
        self.module_area() / (1.0 - self.d2d_area_fraction)
    }

    /// Die area occupied by the D2D interface.
    pub fn d2d_area(&self) -> f64 {
        self.total_area() * self.d2d_area_fraction
    }

    pub fn node(&self) -> &ProcessNode {
        &self.modules[0].node
    }

    /// Same chiplet re-targeted to another node (areas unchanged).
    pub fn on_node(&self, node: &ProcessNode) -> ChipletSpec {
        let mut out = self.clone();
        for m in &mut out.modules {
            m.node = node.clone();
        }
        out
    }
}

/// A named package assembling chiplets under one integration tech.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemSpec {
    pub name: String,
    /// Chiplets with their multiplicity inside the package.
    pub chiplets: Vec<(ChipletSpec, u32)>,
    pub tech: IntegrationTech,
    /// Package (and interposer) area in mm2.
    pub package_area: f64,
    /// Units to produce; amortizes the NRE share.
    pub quantity: u64,
    /// Identity of the package design. Systems sharing this string share one
    /// package NRE (package reuse); defaults to the system name.
    pub package_design: String,
}

impl SystemSpec {
    /// Total number of dies in the package.
    pub fn chip_count(&self) -> u32 {
        self.chiplets.iter().map(|(_, n)| n).sum()
    }

    /// Summed die footprint (each instance counted).
    pub fn chip_area_sum(&self) -> f64 {
        self.chiplets
            .iter()
            .map(|(c, n)| c.total_area() * f64::from(*n))
            .sum()
    }

    /// Summed functional module area across all instances.
    pub fn module_area_sum(&self) -> f64 {
        self.chiplets
            .iter()
            .map(|(c, n)| c.module_area() * f64::from(*n))
            .sum()
    }

    pub fn is_monolithic(&self) -> bool {
        self.tech.kind == TechKind::Monolithic
    }
}

/// Validate and assemble a [`SystemSpec`], deriving the package area when
/// absent as `interposer_area_factor * sum of chip areas`.
pub fn build_system(
    name: impl Into<String>,
    chiplets: Vec<(ChipletSpec, u32)>,
    tech: &IntegrationTech,
    quantity: u64,
    package_area: Option<f64>,
    package_design: Option<String>,
) -> Result<SystemSpec> {
    let name = name.into();
    if chiplets.is_empty() {
        return Err(Error::EmptySystem);
    }
    if quantity == 0 {
        return Err(Error::ZeroQuantity);
    }
    if let Some((c, _)) = chiplets.iter().find(|(_, n)| *n == 0) {
        return Err(Error::invariant(
            format!("systems.{name}.chiplets.{}", c.name),
            "chiplet count must be >= 1",
        ));
    }
    if tech.kind == TechKind::Monolithic {
        let single = chiplets.len() == 1 && chiplets[0].1 == 1;
        if !single || chiplets[0].0.d2d_area_fraction != 0.0 {
            return Err(Error::MonolithicWithD2D(name));
        }
    }
    let chip_area_sum: f64 = chiplets
        .iter()
        .map(|(c, n)| c.total_area() * f64::from(*n))
        .sum();
    let package_area = match package_area {
        Some(a) if a > 0.0 => a,
        Some(_) => {
            return Err(Error::invariant(
                format!("systems.{name}.package_area"),
                "package area must be > 0",
            ))
        }
        None => tech.interposer_area_factor * chip_area_sum,
    };
    let package_design = package_design.unwrap_or_else(|| name.clone());
    Ok(SystemSpec {
        name,
        chiplets,
        tech: tech.clone(),
        package_area,
        quantity,
        package_design,
    })
}

/// Itemized per-unit cost of one system: the five recurring components plus
/// the four amortized NRE components.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct CostBreakdown {
    pub raw_chips: f64,
    pub chip_defects: f64,
    pub raw_package: f64,
    pub package_defects: f64,
    pub wasted_kgd: f64,
    pub nre_modules: f64,
    pub nre_chips: f64,
    pub nre_packages: f64,
    pub nre_d2d: f64,
    /// Sum of all nine components.
    pub total: f64,
}

impl CostBreakdown {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        raw_chips: f64,
        chip_defects: f64,
        raw_package: f64,
        package_defects: f64,
        wasted_kgd: f64,
        nre_modules: f64,
        nre_chips: f64,
        nre_packages: f64,
        nre_d2d: f64,
    ) -> CostBreakdown {
        let total = raw_chips
            + chip_defects
            + raw_package
            + package_defects
            + wasted_kgd
            + nre_modules
            + nre_chips
            + nre_packages
            + nre_d2d;
        CostBreakdown {
            raw_chips,
            chip_defects,
            raw_package,
            package_defects,
            wasted_kgd,
            nre_modules,
            nre_chips,
            nre_packages,
            nre_d2d,
            total,
        }
    }

    /// Recurring (fabrication) part.
    pub fn re_total(&self) -> f64 {
        self.raw_chips + self.chip_defects + self.raw_package + self.package_defects + self.wasted_kgd
    }

    /// Amortized one-time part.
    pub fn nre_total(&self) -> f64 {
        self.nre_modules + self.nre_chips + self.nre_packages + self.nre_d2d
    }

    /// Raw package + package defects + wasted KGDs, the packaging bar of the
    /// stacked-cost decomposition.
    pub fn packaging_total(&self) -> f64 {
        self.raw_package + self.package_defects + self.wasted_kgd
    }

    /// Replace the NRE components, recomputing the total.
    pub fn with_nre(mut self, modules: f64, chips: f64, packages: f64, d2d: f64) -> CostBreakdown {
        self.nre_modules = modules;
        self.nre_chips = chips;
        self.nre_packages = packages;
        self.nre_d2d = d2d;
        self.total = self.re_total() + self.nre_total();
        self
    }
}
