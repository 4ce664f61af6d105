//! Command-line entry point: configuration ingestion, evaluation and
//! report/chart emission.
//!
//! Every run writes its artifacts atomically into `--out` together with a
//! `manifest.json` pinning the resolved catalog and every applied default,
//! so each emitted number is traceable to its inputs.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{load_catalog, Catalog, CatalogDoc, DefaultsLedger};
use crate::chart;
use crate::config::{self, SpecDoc};
use crate::error::{Error, Result};
use crate::explorer::{break_even_quantity, partition_sweep};
use crate::nre_cost::{amortize, group_nre_multichip, group_nre_soc};
use crate::re_cost::system_re_cost;
use crate::report;
use crate::reuse::analyze_systems;
use crate::system::CostBreakdown;
use crate::yield_model::cost_yield_curve;

#[derive(Debug, Parser)]
#[command(
    name = "chiplet-cost",
    about = "Recurring + amortized one-time cost modeling for monolithic vs multi-chip systems",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Catalog document; the built-in default catalog when omitted.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    /// System / scenario specification document.
    #[arg(long)]
    pub spec: PathBuf,
    /// Output directory for reports and the run manifest.
    #[arg(long)]
    pub out: PathBuf,
    /// Normalize comparison tables to this system (default: first system).
    #[arg(long)]
    pub normalize: Option<String>,
    /// Also emit SVG charts.
    #[arg(long)]
    pub charts: bool,
    /// Bound internal parallelism to this many threads.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cost every system in the spec as one production group.
    Analyze(CommonArgs),
    /// Cost each system independently and tabulate against a reference.
    Compare(CommonArgs),
    /// Partition-granularity sweep across integration techs.
    Sweep(CommonArgs),
    /// Analyze the spec's reuse scenario (scms / ocme / fsmc).
    Reuse(CommonArgs),
    /// Yield / normalized-cost vs area curves per node.
    Curves(CommonArgs),
    /// Smallest quantity at which the multi-chip system pays back.
    BreakEven(CommonArgs),
}

impl Command {
    fn common(&self) -> &CommonArgs {
        match self {
            Command::Analyze(a)
            | Command::Compare(a)
            | Command::Sweep(a)
            | Command::Reuse(a)
            | Command::Curves(a)
            | Command::BreakEven(a) => a,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Analyze(_) => "analyze",
            Command::Compare(_) => "compare",
            Command::Sweep(_) => "sweep",
            Command::Reuse(_) => "reuse",
            Command::Curves(_) => "curves",
            Command::BreakEven(_) => "break-even",
        }
    }
}

/// Resolved run description, emitted beside the results.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub catalog_path: Option<String>,
    pub spec_path: String,
    pub output_dir: String,
    pub normalize: Option<String>,
    pub charts: bool,
    pub jobs: Option<usize>,
    /// The catalog actually used, with all defaults applied.
    pub resolved_catalog: CatalogDoc,
    /// Every default filled in while loading the catalog and the spec.
    pub applied_defaults: DefaultsLedger,
}

struct Run {
    catalog: Catalog,
    doc: SpecDoc,
    manifest: RunManifest,
    args: CommonArgs,
}

fn load(command: &Command) -> Result<Run> {
    let args = command.common().clone();
    let (catalog, mut defaults) = match &args.catalog {
        Some(path) => {
            let text = fs::read_to_string(path)?;
            let loaded = load_catalog(&text)?;
            (loaded.catalog, loaded.defaults)
        }
        None => (Catalog::builtin_default(), DefaultsLedger::new()),
    };
    let spec_text = fs::read_to_string(&args.spec)?;
    let doc = config::parse_spec(&spec_text)?;
    // chiplet-level defaults (e.g. D2D fraction) join the provenance trail
    let (_, spec_defaults) = config::resolve_chiplets(&doc, &catalog)?;
    defaults.extend(spec_defaults);
    let manifest = RunManifest {
        command: command.name().into(),
        catalog_path: args.catalog.as_ref().map(|p| p.display().to_string()),
        spec_path: args.spec.display().to_string(),
        output_dir: args.out.display().to_string(),
        normalize: args.normalize.clone(),
        charts: args.charts,
        jobs: args.jobs,
        resolved_catalog: catalog.to_doc(),
        applied_defaults: defaults,
    };
    Ok(Run {
        catalog,
        doc,
        manifest,
        args,
    })
}

fn emit(run: &Run, name: &str, bytes: &[u8]) -> Result<()> {
    report::atomic_write(&run.args.out, name, bytes)?;
    Ok(())
}

fn emit_manifest(run: &Run) -> Result<()> {
    emit(run, "manifest.json", report::to_pretty_json(&run.manifest).as_bytes())
}

fn breakdown_bars(rows: &[(String, CostBreakdown)]) -> Vec<(String, Vec<f64>)> {
    rows.iter()
        .map(|(name, b)| (name.clone(), chart::breakdown_values(b)))
        .collect()
}

fn run_analyze(run: &Run) -> Result<()> {
    let resolved = config::resolve_spec(&run.doc, &run.catalog)?;
    if resolved.systems.is_empty() {
        return Err(Error::invariant("systems", "spec declares no systems"));
    }
    let analysis = analyze_systems(&resolved.systems)?;
    let rows: Vec<(String, CostBreakdown)> = analysis
        .systems
        .iter()
        .map(|s| (s.system.clone(), s.breakdown))
        .collect();
    emit(run, "breakdown.csv", report::breakdown_csv(&rows).as_bytes())?;
    emit(run, "re_breakdown.csv", report::re_breakdown_csv(&rows).as_bytes())?;
    emit(run, "breakdowns.json", report::to_pretty_json(&analysis).as_bytes())?;
    if run.args.charts {
        let svg = chart::stacked_bar_chart(
            "Per-unit cost breakdown",
            &chart::BREAKDOWN_COMPONENTS,
            &breakdown_bars(&rows),
        );
        emit(run, "analyze.svg", svg.as_bytes())?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct CompareRow {
    system: String,
    re_total: f64,
    nre_per_unit: f64,
    total: f64,
    normalized_total: f64,
}

fn run_compare(run: &Run) -> Result<()> {
    let resolved = config::resolve_spec(&run.doc, &run.catalog)?;
    if resolved.systems.is_empty() {
        return Err(Error::invariant("systems", "spec declares no systems"));
    }
    // each system amortizes its own design alone: the single-system view
    let mut rows: Vec<(String, CostBreakdown)> = Vec::new();
    for system in &resolved.systems {
        let single = std::slice::from_ref(system);
        let ledger = if system.is_monolithic() {
            group_nre_soc(single)?
        } else {
            group_nre_multichip(single)
        };
        let nre = &amortize(&ledger, single)?[0];
        let breakdown = system_re_cost(system)?.with_nre(
            nre.nre_modules,
            nre.nre_chips,
            nre.nre_packages,
            nre.nre_d2d,
        );
        rows.push((system.name.clone(), breakdown));
    }
    let reference = match &run.args.normalize {
        Some(name) => {
            rows.iter()
                .find(|(n, _)| n == name)
                .ok_or_else(|| Error::UnknownSystemReference {
                    path: "--normalize".into(),
                    name: name.clone(),
                })?
                .1
                .total
        }
        None => rows[0].1.total,
    };
    let table: Vec<CompareRow> = rows
        .iter()
        .map(|(name, b)| CompareRow {
            system: name.clone(),
            re_total: b.re_total(),
            nre_per_unit: b.nre_total(),
            total: b.total,
            normalized_total: b.total / reference,
        })
        .collect();
    let mut csv = String::from("system,re_total,nre_per_unit,total,normalized_total\n");
    for r in &table {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            r.system, r.re_total, r.nre_per_unit, r.total, r.normalized_total
        ));
    }
    emit(run, "compare.csv", csv.as_bytes())?;
    emit(run, "re_breakdown.csv", report::re_breakdown_csv(&rows).as_bytes())?;
    emit(run, "compare.json", report::to_pretty_json(&table).as_bytes())?;
    if run.args.charts {
        let svg = chart::stacked_bar_chart(
            "Single-system cost comparison",
            &chart::BREAKDOWN_COMPONENTS,
            &breakdown_bars(&rows),
        );
        emit(run, "compare.svg", svg.as_bytes())?;
    }
    Ok(())
}

fn run_sweep(run: &Run) -> Result<()> {
    let sweep_doc = run
        .doc
        .sweep
        .as_ref()
        .ok_or_else(|| Error::invariant("sweep", "document has no sweep section"))?;
    let node = run.catalog.node(&sweep_doc.node)?;
    let techs = sweep_doc
        .techs
        .iter()
        .map(|t| run.catalog.tech(t).cloned())
        .collect::<Result<Vec<_>>>()?;
    let baseline = run
        .catalog
        .tech(sweep_doc.baseline_tech.as_deref().unwrap_or("mono"))?;
    let result = partition_sweep(
        sweep_doc.total_module_area,
        &sweep_doc.chiplet_counts,
        &techs,
        node,
        sweep_doc
            .d2d_area_fraction
            .unwrap_or(crate::catalog::DEFAULT_D2D_AREA_FRACTION),
        baseline,
    )?;
    emit(run, "sweep.csv", report::sweep_csv(&result).as_bytes())?;
    emit(run, "sweep.json", report::to_pretty_json(&result).as_bytes())?;
    if run.args.charts {
        let bars: Vec<(String, Vec<f64>)> = result
            .rows
            .iter()
            .map(|r| {
                (
                    format!("{}-{}x", r.tech, r.chiplet_count),
                    chart::breakdown_values(&r.breakdown),
                )
            })
            .collect();
        let svg = chart::stacked_bar_chart(
            "Partition sweep (recurring cost)",
            &chart::BREAKDOWN_COMPONENTS,
            &bars,
        );
        emit(run, "sweep.svg", svg.as_bytes())?;
    }
    Ok(())
}

fn run_reuse(run: &Run) -> Result<()> {
    let scenario = config::resolve_scenario(&run.doc, &run.catalog)?;
    let analysis = crate::reuse::analyze(&scenario)?;
    // normalize to the requested system, or to the last (largest) one
    let reference = match &run.args.normalize {
        Some(name) => {
            analysis
                .systems
                .iter()
                .find(|s| &s.system == name)
                .ok_or_else(|| Error::UnknownSystemReference {
                    path: "--normalize".into(),
                    name: name.clone(),
                })?
                .breakdown
                .total
        }
        None => analysis.systems.last().expect("non-empty scenario").breakdown.total,
    };
    emit(run, "scenario.csv", report::scenario_csv(&analysis, reference).as_bytes())?;
    emit(
        run,
        "scenario_summary.json",
        report::to_pretty_json(&analysis).as_bytes(),
    )?;
    if run.args.charts {
        let rows: Vec<(String, CostBreakdown)> = analysis
            .systems
            .iter()
            .map(|s| (s.system.clone(), s.breakdown))
            .collect();
        let svg = chart::stacked_bar_chart(
            "Reuse scenario per-unit cost",
            &chart::BREAKDOWN_COMPONENTS,
            &breakdown_bars(&rows),
        );
        emit(run, "reuse.svg", svg.as_bytes())?;
    }
    Ok(())
}

fn run_curves(run: &Run) -> Result<()> {
    let curves_doc = run
        .doc
        .curves
        .as_ref()
        .ok_or_else(|| Error::invariant("curves", "document has no curves section"))?;
    let mut yield_series = Vec::new();
    let mut cost_series = Vec::new();
    for name in &curves_doc.nodes {
        let node = run.catalog.node(name)?;
        let points = cost_yield_curve(node, curves_doc.area_min, curves_doc.area_max, curves_doc.step)?;
        emit(
            run,
            &format!("curves-{name}.csv"),
            report::curve_csv(&points).as_bytes(),
        )?;
        yield_series.push((
            name.clone(),
            points.iter().map(|p| (p.area_mm2, p.die_yield)).collect(),
        ));
        cost_series.push((
            name.clone(),
            points.iter().map(|p| (p.area_mm2, p.normalized_cost)).collect(),
        ));
    }
    if run.args.charts {
        emit(
            run,
            "curves-yield.svg",
            chart::line_chart("Die yield vs area", "area (mm2)", &yield_series).as_bytes(),
        )?;
        emit(
            run,
            "curves-cost.svg",
            chart::line_chart("Normalized good-die cost vs area", "area (mm2)", &cost_series)
                .as_bytes(),
        )?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct BreakEvenReport {
    soc: String,
    multi: String,
    min_quantity: u64,
    max_quantity: u64,
    #[serde(flatten)]
    result: crate::explorer::BreakEven,
}

fn run_break_even(run: &Run) -> Result<()> {
    let be = run
        .doc
        .break_even
        .as_ref()
        .ok_or_else(|| Error::invariant("break_even", "document has no break_even section"))?;
    let resolved = config::resolve_spec(&run.doc, &run.catalog)?;
    let soc = config::find_system(&resolved.systems, &be.soc, "break_even.soc")?;
    let multi = config::find_system(&resolved.systems, &be.multi, "break_even.multi")?;
    let result = break_even_quantity(soc, multi, be.min_quantity, be.max_quantity)?;
    let report_obj = BreakEvenReport {
        soc: be.soc.clone(),
        multi: be.multi.clone(),
        min_quantity: be.min_quantity,
        max_quantity: be.max_quantity,
        result,
    };
    emit(run, "break_even.json", report::to_pretty_json(&report_obj).as_bytes())?;
    Ok(())
}

fn dispatch(command: &Command) -> Result<()> {
    let run = load(command)?;
    let body = || -> Result<()> {
        match command {
            Command::Analyze(_) => run_analyze(&run),
            Command::Compare(_) => run_compare(&run),
            Command::Sweep(_) => run_sweep(&run),
            Command::Reuse(_) => run_reuse(&run),
            Command::Curves(_) => run_curves(&run),
            Command::BreakEven(_) => run_break_even(&run),
        }?;
        emit_manifest(&run)
    };
    match run.args.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::invariant("--jobs", e.to_string()))?
            .install(body),
        None => body(),
    }
}

#[derive(Serialize)]
struct ErrorObject<'a> {
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<&'a str>,
}

/// Parse arguments, run, and report failures as a JSON object on stderr.
pub fn main_entry() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let obj = ErrorObject {
                error: ErrorBody {
                    kind: err.kind(),
                    message: err.to_string(),
                    path: err.path(),
                },
            };
            eprintln!("{}", serde_json::to_string(&obj).expect("error serializes"));
            ExitCode::FAILURE
        }
    }
}
