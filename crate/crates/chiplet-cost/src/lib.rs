//! Cost modeling for monolithic SoC versus multi-chip VLSI systems.
//!
//! The model abstracts a system as modules grouped into chiplets assembled
//! into one package, and prices each produced unit as recurring fabrication
//! cost (dies, packaging, yield losses) plus one-time design cost (modules,
//! chips, packages, D2D interfaces) amortized over production quantity.
//! On top of the single-system view sit reuse-scheme builders, design-space
//! sweeps and a break-even search.
//!
//! Entry points:
//! - [`catalog::Catalog`]: process nodes and integration techs, loadable
//!   from JSON with a provenance trail of applied defaults.
//! - [`yield_model`]: die yield, dies per wafer, die cost, curve families.
//! - [`re_cost::system_re_cost`]: the five-part recurring cost of a system.
//! - [`nre_cost`]: group design-cost ledgers and per-unit amortization.
//! - [`reuse`]: SCMS / OCME / FSMC scenario builders and analysis.
//! - [`explorer`]: partition sweeps, granularity series, break-even search.
//! - [`cli`]: the `chiplet-cost` command-line tool.

pub mod catalog;
pub mod chart;
pub mod cli;
pub mod config;
pub mod error;
pub mod explorer;
pub mod nre_cost;
pub mod re_cost;
pub mod report;
pub mod reuse;
pub mod system;
pub mod yield_model;

pub use catalog::{Catalog, IntegrationTech, ProcessNode, TechKind};
pub use error::{Error, Result};
pub use explorer::{break_even_quantity, partition_sweep, BreakEven, SweepResult};
pub use nre_cost::{amortize, chip_nre, group_nre_multichip, group_nre_soc, NreLedger};
pub use re_cost::{assembly_cost, chip_re_cost, packaging_cost, system_re_cost, AssemblyFlow, PackagingYields};
pub use reuse::{analyze, fsmc_count, fsmc_enumerate, ocme, scms, ReuseScenario, ScenarioAnalysis};
pub use system::{build_system, ChipletSpec, CostBreakdown, ModuleSpec, SystemSpec};
pub use yield_model::{cost_yield_curve, die_cost, die_yield, dies_per_wafer, overall_serial_yield, CurvePoint, DieCost};
