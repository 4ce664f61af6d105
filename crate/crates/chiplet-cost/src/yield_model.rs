//! Die yield, dies-per-wafer, per-die cost and serial overall yield.
//!
//! Yield follows the Negative Binomial / critical-level form
//! `Y = (1 + D*S/c)^-c` with defect density `D` per mm2, die area `S` and
//! cluster parameter `c`. Die counts per wafer use the standard
//! circle-packing approximation `pi*r^2/S - 2*pi*r/sqrt(2*S)` over the
//! usable radius.

use serde::Serialize;

use crate::catalog::ProcessNode;
use crate::error::{Error, Result};

/// Die yield of an `area` mm2 die on `node`.
///
/// Zero area or a zero-defect process yields exactly 1.
pub fn die_yield(area: f64, node: &ProcessNode) -> Result<f64> {
    if area.is_nan() || area < 0.0 {
        return Err(Error::NegativeArea(area));
    }
    let d = node.defect_density();
    if d == 0.0 || area == 0.0 {
        return Ok(1.0);
    }
    let c = node.cluster_param;
    Ok((1.0 + d * area / c).powf(-c))
}

/// Whole dies per wafer by the circle-packing approximation, floored.
///
/// The approximation depends only on die area; `aspect_ratio` (width/height,
/// accepted in [0.2, 5]) is validated for callers that feed the same geometry
/// to placement tools, but does not enter the formula.
pub fn dies_per_wafer(area: f64, node: &ProcessNode, aspect_ratio: f64) -> Result<u64> {
    if !(0.2..=5.0).contains(&aspect_ratio) {
        return Err(Error::AspectRatioOutOfRange(aspect_ratio));
    }
    let v = dies_per_wafer_continuous(area, node)?;
    Ok(v.floor() as u64)
}

/// The packing approximation before flooring. Errors when the value drops
/// below one whole die, so callers never see a silent zero.
pub fn dies_per_wafer_continuous(area: f64, node: &ProcessNode) -> Result<f64> {
    if area.is_nan() || area <= 0.0 {
        return Err(Error::NegativeArea(area));
    }
    let r = node.usable_radius();
    let v = std::f64::consts::PI * r * r / area
        - std::f64::consts::PI * 2.0 * r / (2.0 * area).sqrt();
    if v < 1.0 {
        return Err(Error::DieLargerThanWafer {
            area,
            usable: node.usable_area(),
        });
    }
    Ok(v)
}

/// Raw and defect cost of one die.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DieCost {
    /// Wafer cost split over whole dies, plus the node's per-die overhead.
    pub raw: f64,
    /// `raw * (1/Y - 1)`: the share of scrapped dies carried by each good one.
    pub defect: f64,
}

impl DieCost {
    /// Cost of one known good die.
    pub fn good(&self) -> f64 {
        self.raw + self.defect
    }
}

/// Per-die raw and defect cost on `node`.
pub fn die_cost(area: f64, node: &ProcessNode) -> Result<DieCost> {
    let dpw = dies_per_wafer(area, node, 1.0)?;
    let raw = node.wafer_cost / dpw as f64 + node.per_die_overhead;
    let y = die_yield(area, node)?;
    Ok(DieCost {
        raw,
        defect: raw * (1.0 / y - 1.0),
    })
}

/// Like [`die_cost`] but on the continuous (un-floored) packing value.
///
/// Used for trend curves, where integer die-count steps would put artificial
/// kinks into otherwise smooth cost-area relations.
pub fn die_cost_trend(area: f64, node: &ProcessNode) -> Result<DieCost> {
    let dpw = dies_per_wafer_continuous(area, node)?;
    let raw = node.wafer_cost / dpw + node.per_die_overhead;
    let y = die_yield(area, node)?;
    Ok(DieCost {
        raw,
        defect: raw * (1.0 / y - 1.0),
    })
}

/// Overall yield of a serial production line: the product of stage yields.
pub fn overall_serial_yield(stage_yields: &[f64]) -> Result<f64> {
    for &y in stage_yields {
        if !(y > 0.0 && y <= 1.0) {
            return Err(Error::OutOfRangeYield(y));
        }
    }
    Ok(stage_yields.iter().product())
}

/// One sample of the yield / normalized-cost vs area relation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvePoint {
    pub area_mm2: f64,
    #[serde(rename = "yield")]
    pub die_yield: f64,
    /// Cost per good die divided by the raw wafer's cost per mm2.
    pub normalized_cost: f64,
}

/// Sample the cost/yield-area relation of `node` over `[area_min, area_max]`.
///
/// The range must lie within (0, 900] mm2. Costs use the continuous packing
/// value so the curve is smooth; yields come straight from [`die_yield`].
pub fn cost_yield_curve(
    node: &ProcessNode,
    area_min: f64,
    area_max: f64,
    step: f64,
) -> Result<Vec<CurvePoint>> {
    if area_min.is_nan() || area_max.is_nan() || area_min <= 0.0 || area_min > area_max || area_max > 900.0 {
        return Err(Error::invariant(
            "curves.area_range",
            "area range must satisfy 0 < min <= max <= 900",
        ));
    }
    if step.is_nan() || step <= 0.0 {
        return Err(Error::invariant("curves.step", "step must be > 0"));
    }
    let per_mm2 = node.raw_wafer_cost_per_mm2();
    let mut points = Vec::new();
    let mut i = 0u64;
    loop {
        let area = area_min + i as f64 * step;
        if area > area_max + 1e-9 {
            break;
        }
        let cost = die_cost_trend(area, node)?;
        points.push(CurvePoint {
            area_mm2: area,
            die_yield: die_yield(area, node)?,
            normalized_cost: cost.good() / per_mm2,
        });
        i += 1;
    }
    Ok(points)
}
