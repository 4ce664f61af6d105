//! The system / scenario specification document.
//!
//! One JSON document can declare chiplets and systems (for `analyze`,
//! `compare` and `break-even`), a partition sweep, a reuse scenario and a
//! curve request. References are by name against the catalog and the
//! document's own chiplet list; every resolution error carries the offending
//! path.

use serde::{Deserialize, Serialize};

use crate::catalog::{AppliedDefault, Catalog, DefaultsLedger, DEFAULT_D2D_AREA_FRACTION};
use crate::error::{Error, Result};
use crate::reuse::{fsmc_enumerate, ocme, scms, ReuseScenario};
use crate::system::{build_system, ChipletSpec, ModuleSpec, SystemSpec};

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chiplets: Vec<ChipletDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub systems: Vec<SystemDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scenario: Option<ScenarioDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curves: Option<CurvesDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub break_even: Option<BreakEvenDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub name: String,
    pub area: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChipletDoc {
    pub name: String,
    pub node: String,
    /// Defaults to 0.10 when omitted; the applied default is recorded.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d2d_area_fraction: Option<f64>,
    pub modules: Vec<ModuleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemChipletRef {
    pub chiplet: String,
    #[serde(default = "one")]
    pub count: u32,
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDoc {
    pub name: String,
    pub tech: String,
    pub quantity: u64,
    pub chiplets: Vec<SystemChipletRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub package_area: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub package_design: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepDoc {
    pub total_module_area: f64,
    pub chiplet_counts: Vec<u32>,
    pub techs: Vec<String>,
    pub node: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d2d_area_fraction: Option<f64>,
    /// Monolithic tech supplying the 100 mm2 normalization reference;
    /// defaults to `mono`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub baseline_tech: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, tag = "scheme", rename_all = "snake_case")]
pub enum ScenarioDoc {
    Scms {
        chiplet: String,
        counts: Vec<u32>,
        tech: String,
        quantity_each: u64,
        #[serde(default)]
        package_reuse: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        notes: Option<String>,
    },
    Ocme {
        center: String,
        extensions: Vec<String>,
        sockets: u32,
        tech: String,
        quantity_each: u64,
        #[serde(default)]
        package_reuse: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        center_node_override: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        notes: Option<String>,
    },
    Fsmc {
        chiplets: Vec<String>,
        sockets: u32,
        tech: String,
        quantity_each: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        notes: Option<String>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurvesDoc {
    pub nodes: Vec<String>,
    pub area_min: f64,
    pub area_max: f64,
    pub step: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BreakEvenDoc {
    /// Name of the monolithic system in this document's system list.
    pub soc: String,
    /// Name of the multi-chip system to compare against.
    pub multi: String,
    pub min_quantity: u64,
    pub max_quantity: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

/// Parse a spec document, naming the bad key on failure.
pub fn parse_spec(source: &str) -> Result<SpecDoc> {
    serde_json::from_str(source).map_err(|e| Error::Parse {
        path: "spec".into(),
        message: e.to_string(),
    })
}

/// Resolved chiplets and systems of a document plus applied defaults.
#[derive(Debug, Clone)]
pub struct ResolvedSpec {
    pub chiplets: Vec<ChipletSpec>,
    pub systems: Vec<SystemSpec>,
    pub defaults: DefaultsLedger,
}

pub fn resolve_chiplets(doc: &SpecDoc, catalog: &Catalog) -> Result<(Vec<ChipletSpec>, DefaultsLedger)> {
    let mut defaults = DefaultsLedger::new();
    let mut out = Vec::with_capacity(doc.chiplets.len());
    for cd in &doc.chiplets {
        let node = catalog
            .node(&cd.node)
            .map_err(|_| Error::UnknownNodeReference {
                path: format!("chiplets.{}.node", cd.name),
                name: cd.node.clone(),
            })?;
        let fraction = match cd.d2d_area_fraction {
            Some(f) => f,
            None => {
                defaults.push(AppliedDefault {
                    path: format!("chiplets.{}.d2d_area_fraction", cd.name),
                    value: serde_json::json!(DEFAULT_D2D_AREA_FRACTION),
                });
                DEFAULT_D2D_AREA_FRACTION
            }
        };
        let modules = cd
            .modules
            .iter()
            .map(|m| ModuleSpec::new(&m.name, m.area, node.clone()))
            .collect::<Result<Vec<_>>>()?;
        if out.iter().any(|c: &ChipletSpec| c.name == cd.name) {
            return Err(Error::invariant(
                format!("chiplets.{}", cd.name),
                "duplicate chiplet name",
            ));
        }
        out.push(ChipletSpec::new(&cd.name, modules, fraction)?);
    }
    Ok((out, defaults))
}

/// Resolve the document's chiplets and systems against `catalog`.
pub fn resolve_spec(doc: &SpecDoc, catalog: &Catalog) -> Result<ResolvedSpec> {
    let (chiplets, defaults) = resolve_chiplets(doc, catalog)?;
    let mut systems = Vec::with_capacity(doc.systems.len());
    for sd in &doc.systems {
        let tech = catalog
            .tech(&sd.tech)
            .map_err(|_| Error::UnknownTechReference {
                path: format!("systems.{}.tech", sd.name),
                name: sd.tech.clone(),
            })?;
        let refs = sd
            .chiplets
            .iter()
            .map(|r| {
                let chiplet = chiplets
                    .iter()
                    .find(|c| c.name == r.chiplet)
                    .ok_or_else(|| Error::UnknownChipletReference {
                        path: format!("systems.{}.chiplets", sd.name),
                        name: r.chiplet.clone(),
                    })?;
                Ok((chiplet.clone(), r.count))
            })
            .collect::<Result<Vec<_>>>()?;
        if systems.iter().any(|s: &SystemSpec| s.name == sd.name) {
            return Err(Error::invariant(
                format!("systems.{}", sd.name),
                "duplicate system name",
            ));
        }
        systems.push(build_system(
            &sd.name,
            refs,
            tech,
            sd.quantity,
            sd.package_area,
            sd.package_design.clone(),
        )?);
    }
    Ok(ResolvedSpec {
        chiplets,
        systems,
        defaults,
    })
}

fn find_chiplet<'a>(chiplets: &'a [ChipletSpec], name: &str, path: &str) -> Result<&'a ChipletSpec> {
    chiplets
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownChipletReference {
            path: path.into(),
            name: name.into(),
        })
}

/// Build the document's reuse scenario.
pub fn resolve_scenario(doc: &SpecDoc, catalog: &Catalog) -> Result<ReuseScenario> {
    let scenario = doc.scenario.as_ref().ok_or_else(|| Error::invariant(
        "scenario",
        "document has no scenario section",
    ))?;
    let (chiplets, _) = resolve_chiplets(doc, catalog)?;
    match scenario {
        ScenarioDoc::Scms {
            chiplet,
            counts,
            tech,
            quantity_each,
            package_reuse,
            ..
        } => {
            let c = find_chiplet(&chiplets, chiplet, "scenario.chiplet")?;
            let t = catalog.tech(tech)?;
            scms(c, counts, t, *quantity_each, *package_reuse)
        }
        ScenarioDoc::Ocme {
            center,
            extensions,
            sockets,
            tech,
            quantity_each,
            package_reuse,
            center_node_override,
            ..
        } => {
            let c = find_chiplet(&chiplets, center, "scenario.center")?;
            let exts = extensions
                .iter()
                .map(|e| find_chiplet(&chiplets, e, "scenario.extensions").cloned())
                .collect::<Result<Vec<_>>>()?;
            let t = catalog.tech(tech)?;
            let node_override = center_node_override
                .as_ref()
                .map(|n| catalog.node(n))
                .transpose()?;
            ocme(
                c,
                &exts,
                *sockets,
                t,
                *quantity_each,
                *package_reuse,
                node_override,
            )
        }
        ScenarioDoc::Fsmc {
            chiplets: names,
            sockets,
            tech,
            quantity_each,
            ..
        } => {
            let kinds = names
                .iter()
                .map(|n| find_chiplet(&chiplets, n, "scenario.chiplets").cloned())
                .collect::<Result<Vec<_>>>()?;
            let t = catalog.tech(tech)?;
            fsmc_enumerate(&kinds, *sockets, t, *quantity_each)
        }
    }
}

/// Look up a named system within a resolved spec.
pub fn find_system<'a>(systems: &'a [SystemSpec], name: &str, path: &str) -> Result<&'a SystemSpec> {
    systems
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSystemReference {
            path: path.into(),
            name: name.into(),
        })
}
