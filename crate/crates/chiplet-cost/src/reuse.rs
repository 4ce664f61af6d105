//! Chiplet-reuse scheme builders and scenario analysis.
//!
//! Three schemes are modeled: a single chiplet replicated into systems of
//! different grades (SCMS), a reused center die surrounded by extension dies
//! (OCME), and a fixed socket count filled with every multiset collocation of
//! a few chiplet kinds (FSMC).

use serde::Serialize;

use crate::catalog::{IntegrationTech, ProcessNode};
use crate::error::{Error, Result};
use crate::nre_cost::{amortize, group_nre_multichip, NreLedger};
use crate::re_cost::system_re_cost;
use crate::system::{build_system, ChipletSpec, CostBreakdown, SystemSpec};

/// A family of systems analyzed as one production group.
#[derive(Debug, Clone, PartialEq)]
pub struct ReuseScenario {
    pub systems: Vec<SystemSpec>,
    /// When set, all systems mount on one shared package design.
    pub package_reuse: bool,
    /// Footprint of the shared package (the largest member), mm2.
    pub shared_package_area: Option<f64>,
}

const SHARED_PACKAGE: &str = "shared-package";

fn footprint_matches(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs())
}

/// Single Chiplet Multiple Systems: one chiplet design builds one system per
/// entry of `counts` (1x, 2x, ... grades), each produced `quantity_each`
/// times.
///
/// With `package_reuse` every grade mounts on the package sized for the
/// largest count: small systems overpay substrate, the shared package design
/// is amortized across all grades.
pub fn scms(
    chiplet: &ChipletSpec,
    counts: &[u32],
    tech: &IntegrationTech,
    quantity_each: u64,
    package_reuse: bool,
) -> Result<ReuseScenario> {
    if counts.is_empty() {
        return Err(Error::EmptyCounts);
    }
    if counts.contains(&0) {
        return Err(Error::invariant("scms.counts", "counts must be >= 1"));
    }
    let mut seen = std::collections::BTreeSet::new();
    for &c in counts {
        if !seen.insert(c) {
            return Err(Error::invariant("scms.counts", "counts must be distinct"));
        }
    }
    let max_count = *counts.iter().max().expect("non-empty");
    let shared_area = tech.interposer_area_factor * chiplet.total_area() * f64::from(max_count);
    let systems = counts
        .iter()
        .map(|&count| {
            let (area, design) = if package_reuse {
                (Some(shared_area), Some(SHARED_PACKAGE.to_string()))
            } else {
                (None, None)
            };
            build_system(
                format!("{count}x"),
                vec![(chiplet.clone(), count)],
                tech,
                quantity_each,
                area,
                design,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReuseScenario {
        systems,
        package_reuse,
        shared_package_area: package_reuse.then_some(shared_area),
    })
}

/// One Center Multiple Extensions: a reused center die plus extension dies of
/// one shared footprint, filling a `sockets`-socket package.
///
/// The system set is the center alone, the center with each single extension,
/// and the center with every extension, remaining sockets filled with repeats
/// of the last extension. `center_node_override` re-targets the center die
/// (areas unchanged) to model a heterogeneous center on a mature node.
pub fn ocme(
    center: &ChipletSpec,
    extensions: &[ChipletSpec],
    sockets: u32,
    tech: &IntegrationTech,
    quantity_each: u64,
    package_reuse: bool,
    center_node_override: Option<&ProcessNode>,
) -> Result<ReuseScenario> {
    if sockets == 0 {
        return Err(Error::invariant("ocme.sockets", "sockets must be >= 1"));
    }
    // the full configuration must fit: center + all extensions
    if extensions.len() as u32 + 1 > sockets {
        return Err(Error::invariant(
            "ocme.sockets",
            "center plus all extensions exceed the socket count",
        ));
    }
    if let Some(first) = extensions.first() {
        let want = first.total_area();
        for e in extensions {
            if !footprint_matches(e.total_area(), want) {
                return Err(Error::FootprintMismatch {
                    chiplet: e.name.clone(),
                    got: e.total_area(),
                    want,
                });
            }
        }
    }
    let center = match center_node_override {
        Some(node) => center.on_node(node),
        None => center.clone(),
    };
    let socket_footprint = extensions
        .first()
        .map(|e| e.total_area())
        .unwrap_or_else(|| center.total_area())
        .max(center.total_area());
    let shared_area = tech.interposer_area_factor * socket_footprint * f64::from(sockets);

    let mut configs: Vec<(String, Vec<(ChipletSpec, u32)>)> = Vec::new();
    configs.push((center.name.clone(), vec![(center.clone(), 1)]));
    for e in extensions {
        configs.push((
            format!("{}+{}", center.name, e.name),
            vec![(center.clone(), 1), (e.clone(), 1)],
        ));
    }
    if extensions.len() > 1 {
        // full configuration: everything mounted, spare sockets filled with
        // repeats of the last extension
        let mut chiplets = vec![(center.clone(), 1)];
        let spare = sockets - 1 - extensions.len() as u32;
        for (i, e) in extensions.iter().enumerate() {
            let count = if i + 1 == extensions.len() { 1 + spare } else { 1 };
            chiplets.push((e.clone(), count));
        }
        let label = chiplets
            .iter()
            .flat_map(|(c, n)| std::iter::repeat_n(c.name.as_str(), *n as usize))
            .collect::<Vec<_>>()
            .join("+");
        configs.push((label, chiplets));
    }

    let systems = configs
        .into_iter()
        .map(|(name, chiplets)| {
            let (area, design) = if package_reuse {
                (Some(shared_area), Some(SHARED_PACKAGE.to_string()))
            } else {
                (None, None)
            };
            build_system(name, chiplets, tech, quantity_each, area, design)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReuseScenario {
        systems,
        package_reuse,
        shared_package_area: package_reuse.then_some(shared_area),
    })
}

fn binomial_u128(n: u64, k: u64) -> Result<u128> {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::CountOverflow { kinds: n, sockets: k })?;
        acc /= (i + 1) as u128;
    }
    Ok(acc)
}

/// Number of distinct systems buildable from `kinds` chiplet kinds and a
/// package with `sockets` sockets: the multisets of sizes 1 through k,
/// `sum_{i=1..k} C(kinds+i-1, i)`, in exact integer arithmetic.
///
/// For six chiplet kinds and four sockets the sum is 209 systems (6 + 21 +
/// 56 + 126). A figure of 119 is sometimes quoted for that configuration;
/// it does not satisfy the closed form, and this implementation reports the
/// formula value.
pub fn fsmc_count(kinds: u64, sockets: u64) -> Result<u128> {
    if kinds == 0 || sockets == 0 {
        return Err(Error::invariant(
            "fsmc",
            "kinds and sockets must be >= 1",
        ));
    }
    let mut total: u128 = 0;
    for i in 1..=sockets {
        let c = binomial_u128(kinds + i - 1, i)?;
        total = total
            .checked_add(c)
            .ok_or(Error::CountOverflow { kinds, sockets })?;
    }
    Ok(total)
}

/// Enumerate every multiset collocation of `chiplets` into a shared
/// `sockets`-socket package, one system per multiset of size 1..=sockets, in
/// lexicographic order of kind indices.
///
/// All systems mount the single shared package design (that is the point of
/// the scheme), so the scenario carries `package_reuse = true`.
pub fn fsmc_enumerate(
    chiplets: &[ChipletSpec],
    sockets: u32,
    tech: &IntegrationTech,
    quantity_each: u64,
) -> Result<ReuseScenario> {
    if chiplets.is_empty() || sockets == 0 {
        return Err(Error::invariant(
            "fsmc",
            "need at least one chiplet kind and one socket",
        ));
    }
    let footprint = chiplets[0].total_area();
    for c in chiplets {
        if !footprint_matches(c.total_area(), footprint) {
            return Err(Error::FootprintMismatch {
                chiplet: c.name.clone(),
                got: c.total_area(),
                want: footprint,
            });
        }
    }
    let shared_area = tech.interposer_area_factor * footprint * f64::from(sockets);

    struct Enumeration<'a> {
        chiplets: &'a [ChipletSpec],
        tech: &'a IntegrationTech,
        quantity_each: u64,
        shared_area: f64,
        sockets: usize,
    }

    impl Enumeration<'_> {
        // non-decreasing index sequences of lengths 1..=sockets
        fn descend(
            &self,
            start: usize,
            combo: &mut Vec<usize>,
            out: &mut Vec<SystemSpec>,
        ) -> Result<()> {
            if !combo.is_empty() {
                let mut counts: Vec<(ChipletSpec, u32)> = Vec::new();
                for &i in combo.iter() {
                    match counts.iter_mut().find(|(c, _)| c.name == self.chiplets[i].name) {
                        Some((_, n)) => *n += 1,
                        None => counts.push((self.chiplets[i].clone(), 1)),
                    }
                }
                let name = combo
                    .iter()
                    .map(|&i| self.chiplets[i].name.as_str())
                    .collect::<Vec<_>>()
                    .join("+");
                out.push(build_system(
                    name,
                    counts,
                    self.tech,
                    self.quantity_each,
                    Some(self.shared_area),
                    Some(SHARED_PACKAGE.to_string()),
                )?);
            }
            if combo.len() == self.sockets {
                return Ok(());
            }
            for i in start..self.chiplets.len() {
                combo.push(i);
                self.descend(i, combo, out)?;
                combo.pop();
            }
            Ok(())
        }
    }

    let mut systems = Vec::new();
    Enumeration {
        chiplets,
        tech,
        quantity_each,
        shared_area,
        sockets: sockets as usize,
    }
    .descend(0, &mut Vec::new(), &mut systems)?;
    // depth-first emission orders by prefix; re-order to size-major
    // lexicographic so 1-socket systems come first.
    systems.sort_by_key(|s| (s.chip_count(), s.name.clone()));
    Ok(ReuseScenario {
        systems,
        package_reuse: true,
        shared_package_area: Some(shared_area),
    })
}

/// Per-system cost plus the group ledger and scenario-level aggregates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioAnalysis {
    pub systems: Vec<SystemCost>,
    pub ledger: NreLedger,
    /// Quantity-weighted mean per-unit total cost.
    pub aggregate_per_unit: f64,
    /// Total spend over the whole group (all units, RE + NRE).
    pub total_spend: f64,
    pub re_spend: f64,
    pub nre_spend: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SystemCost {
    pub system: String,
    pub quantity: u64,
    pub breakdown: CostBreakdown,
}

/// Cost every system of the scenario: recurring cost per system, one shared
/// NRE ledger amortized across the whole group.
pub fn analyze(scenario: &ReuseScenario) -> Result<ScenarioAnalysis> {
    analyze_systems(&scenario.systems)
}

/// [`analyze`] over a plain system list (one production group).
pub fn analyze_systems(systems: &[SystemSpec]) -> Result<ScenarioAnalysis> {
    use rayon::prelude::*;
    let ledger = group_nre_multichip(systems);
    let nre_rows = amortize(&ledger, systems)?;
    let re_rows: Vec<CostBreakdown> = systems
        .par_iter()
        .map(system_re_cost)
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::with_capacity(systems.len());
    let mut total_spend = 0.0;
    let mut re_spend = 0.0;
    let mut units: u128 = 0;
    for ((system, re), nre) in systems.iter().zip(re_rows).zip(nre_rows) {
        let breakdown = re.with_nre(
            nre.nre_modules,
            nre.nre_chips,
            nre.nre_packages,
            nre.nre_d2d,
        );
        total_spend += breakdown.total * system.quantity as f64;
        re_spend += breakdown.re_total() * system.quantity as f64;
        units += u128::from(system.quantity);
        out.push(SystemCost {
            system: system.name.clone(),
            quantity: system.quantity,
            breakdown,
        });
    }
    Ok(ScenarioAnalysis {
        aggregate_per_unit: total_spend / units as f64,
        nre_spend: total_spend - re_spend,
        re_spend,
        total_spend,
        systems: out,
        ledger,
    })
}
