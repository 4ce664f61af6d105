//! One-time design cost of chips, SoC groups and multi-chip groups, with
//! per-unit amortization over production quantities.
//!
//! Chip NRE is `K_c*S_c + sum(K_m*S_m) + C`: an area term for system
//! verification and physical design over the whole die (D2D slice included),
//! per-module design terms (D2D excluded; its design cost is the per-node
//! `d2d_nre_cost`), and a fixed mask/IP term. In a group ledger each distinct
//! module, chip design, package design and D2D interface appears exactly
//! once, no matter how many systems use it.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::system::{ChipletSpec, SystemSpec};

/// One-time costs of a production group, itemized by what gets designed.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct NreLedger {
    /// Module design + block verification, keyed by module name.
    pub module_nre: BTreeMap<String, f64>,
    /// Chip-level verification, physical design and masks/IP. Keyed by
    /// chiplet name in multi-chip groups and by system name in SoC groups
    /// (every SoC die is its own design).
    pub chip_nre: BTreeMap<String, f64>,
    /// Package design, keyed by package-design identity.
    pub package_nre: BTreeMap<String, f64>,
    /// D2D interface design, keyed by node name.
    pub d2d_nre: BTreeMap<String, f64>,
}

impl NreLedger {
    pub fn total(&self) -> f64 {
        self.module_nre.values().sum::<f64>()
            + self.chip_nre.values().sum::<f64>()
            + self.package_nre.values().sum::<f64>()
            + self.d2d_nre.values().sum::<f64>()
    }
}

/// Full design cost of one chiplet: `K_c*S_c + sum(K_m*S_m) + C`.
///
/// `S_c` is the total die area including the D2D slice; the module sum
/// excludes the D2D interface.
pub fn chip_nre(chiplet: &ChipletSpec) -> f64 {
    chip_design_nre(chiplet) + module_nre_sum(chiplet)
}

/// The chip-level part only: `K_c*S_c + C`.
fn chip_design_nre(chiplet: &ChipletSpec) -> f64 {
    let node = chiplet.node();
    node.nre_chip_factor * chiplet.total_area() + node.fixed_chip_nre
}

fn module_nre_sum(chiplet: &ChipletSpec) -> f64 {
    chiplet
        .modules
        .iter()
        .map(|m| m.node.nre_module_factor * m.area)
        .sum()
}

fn package_nre(system: &SystemSpec) -> f64 {
    system.tech.package_nre_factor * system.package_area + system.tech.package_fixed_nre
}

fn add_modules(ledger: &mut NreLedger, chiplet: &ChipletSpec) {
    for m in &chiplet.modules {
        ledger
            .module_nre
            .entry(m.name.clone())
            .or_insert(m.node.nre_module_factor * m.area);
    }
}

/// Group NRE when every system is a monolithic SoC.
///
/// Modules are designed once across the group; every system's die and
/// package are designed individually. SoC dies carry no D2D interface.
pub fn group_nre_soc(systems: &[SystemSpec]) -> Result<NreLedger> {
    let mut ledger = NreLedger::default();
    for system in systems {
        if !system.is_monolithic() {
            return Err(Error::NonMonolithicInSoCGroup(system.name.clone()));
        }
        let (chip, _) = &system.chiplets[0];
        add_modules(&mut ledger, chip);
        ledger
            .chip_nre
            .entry(system.name.clone())
            .or_insert(chip_design_nre(chip));
        ledger
            .package_nre
            .entry(system.package_design.clone())
            .or_insert(package_nre(system));
    }
    Ok(ledger)
}

/// Group NRE for multi-chip (or mixed) systems.
///
/// Each distinct chiplet is designed once, each distinct package once, and
/// each node used by a packaged multi-chip system pays its D2D design once.
pub fn group_nre_multichip(systems: &[SystemSpec]) -> NreLedger {
    let mut ledger = NreLedger::default();
    for system in systems {
        for (chiplet, _) in &system.chiplets {
            add_modules(&mut ledger, chiplet);
            ledger
                .chip_nre
                .entry(chiplet.name.clone())
                .or_insert_with(|| chip_design_nre(chiplet));
            if !system.is_monolithic() {
                let node = chiplet.node();
                ledger
                    .d2d_nre
                    .entry(node.name.clone())
                    .or_insert(node.d2d_nre_cost);
            }
        }
        ledger
            .package_nre
            .entry(system.package_design.clone())
            .or_insert(package_nre(system));
    }
    ledger
}

/// Per-unit amortized NRE of one system within a group.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerUnitNre {
    pub system: String,
    pub nre_modules: f64,
    pub nre_chips: f64,
    pub nre_packages: f64,
    pub nre_d2d: f64,
}

impl PerUnitNre {
    pub fn total(&self) -> f64 {
        self.nre_modules + self.nre_chips + self.nre_packages + self.nre_d2d
    }
}

fn uses_module(system: &SystemSpec, name: &str) -> bool {
    system
        .chiplets
        .iter()
        .any(|(c, _)| c.modules.iter().any(|m| m.name == name))
}

fn uses_chip(system: &SystemSpec, key: &str) -> bool {
    // SoC ledgers key chips by system name, multi-chip ledgers by chiplet name.
    system.name == key || system.chiplets.iter().any(|(c, _)| c.name == key)
}

fn uses_d2d_node(system: &SystemSpec, node: &str) -> bool {
    !system.is_monolithic() && system.chiplets.iter().any(|(c, _)| c.node().name == node)
}

/// Split every ledger item over all units of all systems using it.
///
/// A shared item's cost divides by the summed quantity of its users, so each
/// system's share is proportional to its unit volume. The returned rows are
/// ordered like `systems`.
pub fn amortize(ledger: &NreLedger, systems: &[SystemSpec]) -> Result<Vec<PerUnitNre>> {
    if systems.iter().any(|s| s.quantity == 0) {
        return Err(Error::ZeroQuantity);
    }
    let mut rows: Vec<PerUnitNre> = systems
        .iter()
        .map(|s| PerUnitNre {
            system: s.name.clone(),
            nre_modules: 0.0,
            nre_chips: 0.0,
            nre_packages: 0.0,
            nre_d2d: 0.0,
        })
        .collect();
    let mut split = |cost: f64, select: &dyn Fn(&SystemSpec) -> bool, field: fn(&mut PerUnitNre) -> &mut f64| {
        let user_quantity: u64 = systems
            .iter()
            .filter(|s| select(s))
            .map(|s| s.quantity)
            .sum();
        if user_quantity == 0 {
            return; // item not used by this group
        }
        let share = cost / user_quantity as f64;
        for (row, system) in rows.iter_mut().zip(systems) {
            if select(system) {
                *field(row) += share;
            }
        }
    };
    for (name, &cost) in &ledger.module_nre {
        split(cost, &|s| uses_module(s, name), |r| &mut r.nre_modules);
    }
    for (name, &cost) in &ledger.chip_nre {
        split(cost, &|s| uses_chip(s, name), |r| &mut r.nre_chips);
    }
    for (name, &cost) in &ledger.package_nre {
        split(cost, &|s| s.package_design == *name, |r| &mut r.nre_packages);
    }
    for (name, &cost) in &ledger.d2d_nre {
        split(cost, &|s| uses_d2d_node(s, name), |r| &mut r.nre_d2d);
    }
    Ok(rows)
}
