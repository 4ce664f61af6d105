//! Process-node and integration-technology catalog.
//!
//! A catalog is loaded from a human-editable JSON document. Defect densities
//! are given in the industry-conventional defects/cm2 and exposed internally
//! per mm2. Omitted optional fields receive documented defaults; every applied
//! default is reported in a [`DefaultsLedger`] so emitted results stay
//! traceable to their inputs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default Negative Binomial cluster parameter when a node omits it.
pub const DEFAULT_CLUSTER_PARAM: f64 = 3.0;
/// Default wafer diameter in mm.
pub const DEFAULT_WAFER_DIAMETER: f64 = 300.0;
/// Default wafer edge exclusion in mm.
pub const DEFAULT_EDGE_EXCLUSION: f64 = 3.0;
/// Default D2D area fraction for chiplets that omit it.
pub const DEFAULT_D2D_AREA_FRACTION: f64 = 0.10;

/// A fabrication node: defect statistics, wafer economics and NRE factors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProcessNode {
    pub name: String,
    /// Defect density in defects/cm2 (catalog unit; see [`Self::defect_density`]).
    pub defect_density_per_cm2: f64,
    /// Cluster parameter `c` of the Negative Binomial yield model.
    pub cluster_param: f64,
    /// Cost of one raw wafer.
    pub wafer_cost: f64,
    pub wafer_diameter_mm: f64,
    pub edge_exclusion_mm: f64,
    /// K_m: module design + block verification cost per mm2.
    pub nre_module_factor: f64,
    /// K_c: system verification + chip physical design cost per mm2.
    pub nre_chip_factor: f64,
    /// C: fixed per-chip NRE (full mask set, IP licensing).
    pub fixed_chip_nre: f64,
    /// One-time cost of designing this node's D2D interface.
    pub d2d_nre_cost: f64,
    /// Per-die adder folding in wafer sort, bumping and test.
    pub per_die_overhead: f64,
}

impl ProcessNode {
    /// Defect density in defects/mm2, the unit used by the yield model.
    pub fn defect_density(&self) -> f64 {
        self.defect_density_per_cm2 / 100.0
    }

    /// Radius of the wafer region usable for dies, in mm.
    pub fn usable_radius(&self) -> f64 {
        self.wafer_diameter_mm / 2.0 - self.edge_exclusion_mm
    }

    /// Area of the usable wafer region, in mm2.
    pub fn usable_area(&self) -> f64 {
        let r = self.usable_radius();
        std::f64::consts::PI * r * r
    }

    /// Cost per mm2 of the raw (full) wafer; the Fig-2-style normalizer.
    pub fn raw_wafer_cost_per_mm2(&self) -> f64 {
        let r = self.wafer_diameter_mm / 2.0;
        self.wafer_cost / (std::f64::consts::PI * r * r)
    }

    fn validate(&self) -> Result<()> {
        let path = format!("nodes.{}", self.name);
        if self.name.is_empty() {
            return Err(Error::invariant("nodes", "node name must not be empty"));
        }
        if !self.defect_density_per_cm2.is_finite() || self.defect_density_per_cm2 < 0.0 {
            return Err(Error::invariant(path, "defect_density_per_cm2 must be >= 0"));
        }
        if !self.cluster_param.is_finite() || self.cluster_param <= 0.0 {
            return Err(Error::invariant(path, "cluster_param must be > 0"));
        }
        if !self.wafer_diameter_mm.is_finite()
            || self.wafer_diameter_mm <= 2.0 * self.edge_exclusion_mm
            || self.edge_exclusion_mm < 0.0
        {
            return Err(Error::invariant(
                path,
                "wafer_diameter_mm must exceed twice the edge exclusion",
            ));
        }
        for (field, v) in [
            ("wafer_cost", self.wafer_cost),
            ("nre_module_factor", self.nre_module_factor),
            ("nre_chip_factor", self.nre_chip_factor),
            ("fixed_chip_nre", self.fixed_chip_nre),
            ("d2d_nre_cost", self.d2d_nre_cost),
            ("per_die_overhead", self.per_die_overhead),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::invariant(
                    format!("{path}.{field}"),
                    "cost must be a finite value >= 0",
                ));
            }
        }
        Ok(())
    }
}

/// How a system is integrated into one package.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TechKind {
    Monolithic,
    Mcm,
    InfoChipFirst,
    InfoChipLast,
    #[serde(rename = "interposer_2p5d")]
    Interposer2p5d,
}

impl TechKind {
    /// InFO and 2.5D route chip interconnect through an RDL or silicon
    /// interposer that is costed like a die at `interposer_node`.
    pub fn uses_interposer(self) -> bool {
        matches!(
            self,
            TechKind::InfoChipFirst | TechKind::InfoChipLast | TechKind::Interposer2p5d
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TechKind::Monolithic => "monolithic",
            TechKind::Mcm => "mcm",
            TechKind::InfoChipFirst => "info_chip_first",
            TechKind::InfoChipLast => "info_chip_last",
            TechKind::Interposer2p5d => "interposer_2p5d",
        }
    }
}

/// An integration technology with its packaging yields and cost parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntegrationTech {
    pub name: String,
    pub kind: TechKind,
    /// Organic substrate cost per mm2 of package area.
    pub substrate_cost_per_area: f64,
    /// Extra-routing-layer growth factor on substrate cost (MCM).
    pub substrate_growth_factor: f64,
    /// y3: substrate (or interposer-attach) yield.
    pub substrate_yield: f64,
    /// y2: per-chip bond yield.
    pub chip_bond_yield: f64,
    /// C_bond: bonding cost per chip placement.
    pub bond_cost_per_chip: f64,
    /// Node used to cost the interposer / RDL (InFO and 2.5D only).
    pub interposer_node: Option<ProcessNode>,
    /// Package (and interposer) area over the summed chip footprint.
    pub interposer_area_factor: f64,
    /// K_p: package design cost per mm2 of package area.
    pub package_nre_factor: f64,
    /// C_p: fixed package NRE.
    pub package_fixed_nre: f64,
}

impl IntegrationTech {
    fn validate(&self) -> Result<()> {
        let path = format!("techs.{}", self.name);
        for (field, y) in [
            ("substrate_yield", self.substrate_yield),
            ("chip_bond_yield", self.chip_bond_yield),
        ] {
            if !(y > 0.0 && y <= 1.0) {
                return Err(Error::invariant(
                    format!("{path}.{field}"),
                    "yield must lie in (0, 1]",
                ));
            }
        }
        for (field, v) in [
            ("substrate_growth_factor", self.substrate_growth_factor),
            ("interposer_area_factor", self.interposer_area_factor),
        ] {
            if !v.is_finite() || v < 1.0 {
                return Err(Error::invariant(
                    format!("{path}.{field}"),
                    "factor must be >= 1",
                ));
            }
        }
        for (field, v) in [
            ("substrate_cost_per_area", self.substrate_cost_per_area),
            ("bond_cost_per_chip", self.bond_cost_per_chip),
            ("package_nre_factor", self.package_nre_factor),
            ("package_fixed_nre", self.package_fixed_nre),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::invariant(
                    format!("{path}.{field}"),
                    "cost must be a finite value >= 0",
                ));
            }
        }
        if self.kind.uses_interposer() && self.interposer_node.is_none() {
            return Err(Error::invariant(
                format!("{path}.interposer_node"),
                "interposer-based techs must name an interposer node",
            ));
        }
        if !self.kind.uses_interposer() && self.interposer_node.is_some() {
            return Err(Error::invariant(
                format!("{path}.interposer_node"),
                "only InFO / 2.5D techs take an interposer node",
            ));
        }
        Ok(())
    }
}

/// One default applied while resolving a document, for the provenance trail.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AppliedDefault {
    /// Dotted path of the field, e.g. `nodes.7nm.cluster_param`.
    pub path: String,
    /// The value that was filled in, rendered as JSON.
    pub value: serde_json::Value,
}

/// Record of every default applied while loading a document.
pub type DefaultsLedger = Vec<AppliedDefault>;

fn record(ledger: &mut DefaultsLedger, path: String, value: impl Into<serde_json::Value>) {
    ledger.push(AppliedDefault {
        path,
        value: value.into(),
    });
}

/// The resolved, validated catalog. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    nodes: BTreeMap<String, ProcessNode>,
    techs: BTreeMap<String, IntegrationTech>,
}

impl Catalog {
    /// The catalog shipped with the crate (see `data/PROVENANCE.md`).
    pub fn builtin_default() -> Catalog {
        static DOC: &str = include_str!("../data/default-catalog.json");
        let loaded = load_catalog(DOC).expect("bundled default catalog must load");
        debug_assert!(loaded.defaults.is_empty(), "bundled catalog is fully explicit");
        loaded.catalog
    }

    pub fn node(&self, name: &str) -> Result<&ProcessNode> {
        self.nodes.get(name).ok_or_else(|| Error::UnknownNodeReference {
            path: "nodes".into(),
            name: name.into(),
        })
    }

    pub fn tech(&self, name: &str) -> Result<&IntegrationTech> {
        self.techs.get(name).ok_or_else(|| Error::UnknownTechReference {
            path: "techs".into(),
            name: name.into(),
        })
    }

    pub fn nodes(&self) -> impl Iterator<Item = &ProcessNode> {
        self.nodes.values()
    }

    pub fn techs(&self) -> impl Iterator<Item = &IntegrationTech> {
        self.techs.values()
    }

    /// Serialize back to the document schema. Reloading the result yields an
    /// identical catalog.
    pub fn to_doc(&self) -> CatalogDoc {
        CatalogDoc {
            notes: None,
            nodes: self.nodes.values().map(NodeDoc::from_node).collect(),
            techs: self.techs.values().map(TechDoc::from_tech).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("catalog serializes")
    }

    /// Scale every monetary parameter by `lambda`. Yields, geometry and
    /// defect statistics are untouched, so every cost-breakdown component
    /// scales by exactly `lambda` and no comparison decision can flip.
    pub fn scale_costs(&self, lambda: f64) -> Catalog {
        let mut out = self.clone();
        for node in out.nodes.values_mut() {
            node.wafer_cost *= lambda;
            node.nre_module_factor *= lambda;
            node.nre_chip_factor *= lambda;
            node.fixed_chip_nre *= lambda;
            node.d2d_nre_cost *= lambda;
            node.per_die_overhead *= lambda;
        }
        for tech in out.techs.values_mut() {
            tech.substrate_cost_per_area *= lambda;
            tech.bond_cost_per_chip *= lambda;
            tech.package_nre_factor *= lambda;
            tech.package_fixed_nre *= lambda;
            if let Some(node) = tech.interposer_node.as_mut() {
                node.wafer_cost *= lambda;
                node.nre_module_factor *= lambda;
                node.nre_chip_factor *= lambda;
                node.fixed_chip_nre *= lambda;
                node.d2d_nre_cost *= lambda;
                node.per_die_overhead *= lambda;
            }
        }
        out
    }
}

/// A loaded catalog plus the ledger of defaults that were applied.
#[derive(Debug, Clone)]
pub struct LoadedCatalog {
    pub catalog: Catalog,
    pub defaults: DefaultsLedger,
}

/// Raw catalog document as written by users.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    pub nodes: Vec<NodeDoc>,
    pub techs: Vec<TechDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeDoc {
    pub name: String,
    pub defect_density_per_cm2: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cluster_param: Option<f64>,
    pub wafer_cost: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wafer_diameter_mm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_exclusion_mm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nre_module_factor: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nre_chip_factor: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_chip_nre: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d2d_nre_cost: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub per_die_overhead: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

impl NodeDoc {
    fn from_node(n: &ProcessNode) -> NodeDoc {
        NodeDoc {
            name: n.name.clone(),
            defect_density_per_cm2: n.defect_density_per_cm2,
            cluster_param: Some(n.cluster_param),
            wafer_cost: n.wafer_cost,
            wafer_diameter_mm: Some(n.wafer_diameter_mm),
            edge_exclusion_mm: Some(n.edge_exclusion_mm),
            nre_module_factor: Some(n.nre_module_factor),
            nre_chip_factor: Some(n.nre_chip_factor),
            fixed_chip_nre: Some(n.fixed_chip_nre),
            d2d_nre_cost: Some(n.d2d_nre_cost),
            per_die_overhead: Some(n.per_die_overhead),
            notes: None,
        }
    }

    fn resolve(&self, ledger: &mut DefaultsLedger) -> ProcessNode {
        let p = |field: &str| format!("nodes.{}.{field}", self.name);
        let mut pick = |field: &str, value: Option<f64>, default: f64| match value {
            Some(v) => v,
            None => {
                record(ledger, p(field), default);
                default
            }
        };
        ProcessNode {
            name: self.name.clone(),
            defect_density_per_cm2: self.defect_density_per_cm2,
            cluster_param: pick("cluster_param", self.cluster_param, DEFAULT_CLUSTER_PARAM),
            wafer_cost: self.wafer_cost,
            wafer_diameter_mm: pick(
                "wafer_diameter_mm",
                self.wafer_diameter_mm,
                DEFAULT_WAFER_DIAMETER,
            ),
            edge_exclusion_mm: pick(
                "edge_exclusion_mm",
                self.edge_exclusion_mm,
                DEFAULT_EDGE_EXCLUSION,
            ),
            nre_module_factor: pick("nre_module_factor", self.nre_module_factor, 0.0),
            nre_chip_factor: pick("nre_chip_factor", self.nre_chip_factor, 0.0),
            fixed_chip_nre: pick("fixed_chip_nre", self.fixed_chip_nre, 0.0),
            d2d_nre_cost: pick("d2d_nre_cost", self.d2d_nre_cost, 0.0),
            per_die_overhead: pick("per_die_overhead", self.per_die_overhead, 0.0),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TechDoc {
    pub name: String,
    pub kind: TechKind,
    pub substrate_cost_per_area: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub substrate_growth_factor: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub substrate_yield: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chip_bond_yield: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bond_cost_per_chip: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interposer_node: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interposer_area_factor: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub package_nre_factor: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub package_fixed_nre: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

impl TechDoc {
    fn from_tech(t: &IntegrationTech) -> TechDoc {
        TechDoc {
            name: t.name.clone(),
            kind: t.kind,
            substrate_cost_per_area: t.substrate_cost_per_area,
            substrate_growth_factor: Some(t.substrate_growth_factor),
            substrate_yield: Some(t.substrate_yield),
            chip_bond_yield: Some(t.chip_bond_yield),
            bond_cost_per_chip: Some(t.bond_cost_per_chip),
            interposer_node: t.interposer_node.as_ref().map(|n| n.name.clone()),
            interposer_area_factor: Some(t.interposer_area_factor),
            package_nre_factor: Some(t.package_nre_factor),
            package_fixed_nre: Some(t.package_fixed_nre),
            notes: None,
        }
    }

    fn resolve(
        &self,
        nodes: &BTreeMap<String, ProcessNode>,
        ledger: &mut DefaultsLedger,
    ) -> Result<IntegrationTech> {
        let p = |field: &str| format!("techs.{}.{field}", self.name);
        let mut pick = |field: &str, value: Option<f64>, default: f64| match value {
            Some(v) => v,
            None => {
                record(ledger, p(field), default);
                default
            }
        };
        // MCM substrates need extra routing layers, hence the larger default.
        let growth_default = if self.kind == TechKind::Mcm { 1.5 } else { 1.0 };
        let interposer_node = match (&self.interposer_node, self.kind.uses_interposer()) {
            (Some(name), _) => Some(
                nodes
                    .get(name)
                    .ok_or_else(|| Error::UnknownNodeReference {
                        path: p("interposer_node"),
                        name: name.clone(),
                    })?
                    .clone(),
            ),
            (None, _) => None,
        };
        Ok(IntegrationTech {
            name: self.name.clone(),
            kind: self.kind,
            substrate_cost_per_area: self.substrate_cost_per_area,
            substrate_growth_factor: pick(
                "substrate_growth_factor",
                self.substrate_growth_factor,
                growth_default,
            ),
            substrate_yield: pick("substrate_yield", self.substrate_yield, 0.98),
            chip_bond_yield: pick("chip_bond_yield", self.chip_bond_yield, 0.99),
            bond_cost_per_chip: pick("bond_cost_per_chip", self.bond_cost_per_chip, 0.5),
            interposer_node,
            interposer_area_factor: pick(
                "interposer_area_factor",
                self.interposer_area_factor,
                1.1,
            ),
            package_nre_factor: pick("package_nre_factor", self.package_nre_factor, 0.0),
            package_fixed_nre: pick("package_fixed_nre", self.package_fixed_nre, 0.0),
        })
    }
}

/// Parse and resolve a catalog document.
///
/// Fails on malformed JSON, unknown keys, unresolved node references and any
/// invariant violation. An empty document is an error, never an empty catalog.
pub fn load_catalog(source: &str) -> Result<LoadedCatalog> {
    let doc: CatalogDoc = serde_json::from_str(source).map_err(|e| Error::Parse {
        path: "catalog".into(),
        message: e.to_string(),
    })?;
    resolve_catalog(&doc)
}

/// Resolve an already-parsed catalog document.
pub fn resolve_catalog(doc: &CatalogDoc) -> Result<LoadedCatalog> {
    if doc.nodes.is_empty() {
        return Err(Error::invariant("nodes", "catalog defines no process nodes"));
    }
    if doc.techs.is_empty() {
        return Err(Error::invariant(
            "techs",
            "catalog defines no integration techs",
        ));
    }
    let mut ledger = DefaultsLedger::new();
    let mut nodes = BTreeMap::new();
    for nd in &doc.nodes {
        let node = nd.resolve(&mut ledger);
        node.validate()?;
        if nodes.insert(node.name.clone(), node).is_some() {
            return Err(Error::invariant(
                format!("nodes.{}", nd.name),
                "duplicate node name",
            ));
        }
    }
    let mut techs = BTreeMap::new();
    for td in &doc.techs {
        let tech = td.resolve(&nodes, &mut ledger)?;
        tech.validate()?;
        if techs.insert(tech.name.clone(), tech).is_some() {
            return Err(Error::invariant(
                format!("techs.{}", td.name),
                "duplicate tech name",
            ));
        }
    }
    Ok(LoadedCatalog {
        catalog: Catalog { nodes, techs },
        defaults: ledger,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_catalog_loads_with_no_defaults_applied() {
        let cat = Catalog::builtin_default();
        assert!(cat.node("7nm").is_ok());
        assert!(cat.tech("mcm").is_ok());
    }

    #[test]
    fn defect_density_converts_per_cm2_to_per_mm2() {
        let cat = Catalog::builtin_default();
        let n7 = cat.node("7nm").unwrap();
        assert_eq!(n7.defect_density_per_cm2, 0.13);
        assert!((n7.defect_density() - 0.0013).abs() < 1e-18);
    }

    #[test]
    fn empty_document_is_an_error() {
        assert!(load_catalog("").is_err());
        let err = load_catalog(r#"{"nodes": [], "techs": []}"#).unwrap_err();
        assert_eq!(err.kind(), "invariant_violation");
    }

    #[test]
    fn omitted_cluster_param_defaults_and_is_recorded() {
        let doc = r#"{
            "nodes": [{"name": "x", "defect_density_per_cm2": 0.1, "wafer_cost": 1000,
                       "nre_module_factor": 0, "nre_chip_factor": 0, "fixed_chip_nre": 0,
                       "d2d_nre_cost": 0, "per_die_overhead": 0,
                       "wafer_diameter_mm": 300, "edge_exclusion_mm": 3}],
            "techs": [{"name": "m", "kind": "monolithic", "substrate_cost_per_area": 0.03,
                       "substrate_growth_factor": 1, "substrate_yield": 1, "chip_bond_yield": 1,
                       "bond_cost_per_chip": 0, "interposer_area_factor": 1.1,
                       "package_nre_factor": 0, "package_fixed_nre": 0}]
        }"#;
        let loaded = load_catalog(doc).unwrap();
        assert_eq!(loaded.catalog.node("x").unwrap().cluster_param, 3.0);
        let entry = loaded
            .defaults
            .iter()
            .find(|d| d.path == "nodes.x.cluster_param")
            .expect("default recorded");
        assert_eq!(entry.value, serde_json::json!(3.0));
    }

    #[test]
    fn negative_cost_is_rejected() {
        let doc = r#"{
            "nodes": [{"name": "x", "defect_density_per_cm2": 0.1, "wafer_cost": -5}],
            "techs": [{"name": "m", "kind": "monolithic", "substrate_cost_per_area": 0.03}]
        }"#;
        let err = load_catalog(doc).unwrap_err();
        assert_eq!(err.kind(), "invariant_violation");
        assert!(err.path().unwrap().contains("wafer_cost"));
    }

    #[test]
    fn unknown_key_names_the_bad_key() {
        let err = load_catalog(r#"{"nodes": [{"name": "x", "defect_densty": 1}], "techs": []}"#)
            .unwrap_err();
        assert!(err.to_string().contains("defect_densty"));
    }

    #[test]
    fn interposer_node_required_for_2p5d() {
        let doc = r#"{
            "nodes": [{"name": "x", "defect_density_per_cm2": 0.1, "wafer_cost": 1000}],
            "techs": [{"name": "i", "kind": "interposer_2p5d", "substrate_cost_per_area": 0.03}]
        }"#;
        let err = load_catalog(doc).unwrap_err();
        assert!(err.path().unwrap().contains("interposer_node"));
    }

    #[test]
    fn round_trip_preserves_catalog_identity() {
        let cat = Catalog::builtin_default();
        let reloaded = load_catalog(&cat.to_json()).unwrap();
        assert_eq!(cat, reloaded.catalog);
        assert!(reloaded.defaults.is_empty());
    }

    #[test]
    fn scale_costs_scales_only_money() {
        let cat = Catalog::builtin_default();
        let scaled = cat.scale_costs(2.0);
        let a = cat.node("7nm").unwrap();
        let b = scaled.node("7nm").unwrap();
        assert_eq!(b.wafer_cost, 2.0 * a.wafer_cost);
        assert_eq!(b.defect_density_per_cm2, a.defect_density_per_cm2);
        let ta = cat.tech("2.5d").unwrap();
        let tb = scaled.tech("2.5d").unwrap();
        assert_eq!(tb.substrate_yield, ta.substrate_yield);
        assert_eq!(
            tb.interposer_node.as_ref().unwrap().wafer_cost,
            2.0 * ta.interposer_node.as_ref().unwrap().wafer_cost
        );
    }
}
