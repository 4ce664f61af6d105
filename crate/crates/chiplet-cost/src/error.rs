//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by the cost model and its configuration layer.
///
/// Configuration errors carry the offending document path or key so CLI
/// users can locate the bad entry.
#[derive(Debug, Error)]
pub enum Error {
    #[error("die area must be non-negative, got {0}")]
    NegativeArea(f64),
    #[error("die of {area:.1} mm2 does not fit on the usable wafer ({usable:.1} mm2)")]
    DieLargerThanWafer { area: f64, usable: f64 },
    #[error("aspect ratio {0} outside the supported range [0.2, 5.0]")]
    AspectRatioOutOfRange(f64),
    #[error("stage yield {0} outside (0, 1]")]
    OutOfRangeYield(f64),
    #[error("packaging yield {0} must lie in (0, 1]")]
    ZeroYield(f64),
    #[error("system has no chiplets")]
    EmptySystem,
    #[error("monolithic system {0} must contain exactly one chip with zero D2D area fraction")]
    MonolithicWithD2D(String),
    #[error("chiplet {chiplet}: modules span different nodes ({first} vs {second})")]
    NodeMismatchWithinChiplet {
        chiplet: String,
        first: String,
        second: String,
    },
    #[error("system {0} is not monolithic; SoC-group NRE covers monolithic systems only")]
    NonMonolithicInSoCGroup(String),
    #[error("production quantity must be at least 1")]
    ZeroQuantity,
    #[error("chiplet count list must not be empty")]
    EmptyCounts,
    #[error("chiplet {chiplet}: footprint {got:.3} mm2 differs from the shared socket footprint {want:.3} mm2")]
    FootprintMismatch {
        chiplet: String,
        got: f64,
        want: f64,
    },
    #[error("{flow} assembly flow is not supported for integration tech {tech}")]
    FlowNotSupported { flow: String, tech: String },
    #[error("combination count overflows 128-bit integer arithmetic (kinds={kinds}, sockets={sockets})")]
    CountOverflow { kinds: u64, sockets: u64 },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("{path}: unknown process node `{name}`")]
    UnknownNodeReference { path: String, name: String },
    #[error("{path}: unknown integration tech `{name}`")]
    UnknownTechReference { path: String, name: String },
    #[error("{path}: unknown chiplet `{name}`")]
    UnknownChipletReference { path: String, name: String },
    #[error("{path}: unknown system `{name}`")]
    UnknownSystemReference { path: String, name: String },
    #[error("{path}: {message}")]
    InvariantViolation { path: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable discriminant, used by the CLI error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NegativeArea(_) => "negative_area",
            Error::DieLargerThanWafer { .. } => "die_larger_than_wafer",
            Error::AspectRatioOutOfRange(_) => "aspect_ratio_out_of_range",
            Error::OutOfRangeYield(_) => "out_of_range_yield",
            Error::ZeroYield(_) => "zero_yield",
            Error::EmptySystem => "empty_system",
            Error::MonolithicWithD2D(_) => "monolithic_with_d2d",
            Error::NodeMismatchWithinChiplet { .. } => "node_mismatch_within_chiplet",
            Error::NonMonolithicInSoCGroup(_) => "non_monolithic_in_soc_group",
            Error::ZeroQuantity => "zero_quantity",
            Error::EmptyCounts => "empty_counts",
            Error::FootprintMismatch { .. } => "footprint_mismatch",
            Error::FlowNotSupported { .. } => "flow_not_supported",
            Error::CountOverflow { .. } => "count_overflow",
            Error::Parse { .. } => "parse_error",
            Error::UnknownNodeReference { .. } => "unknown_node_reference",
            Error::UnknownTechReference { .. } => "unknown_tech_reference",
            Error::UnknownChipletReference { .. } => "unknown_chiplet_reference",
            Error::UnknownSystemReference { .. } => "unknown_system_reference",
            Error::InvariantViolation { .. } => "invariant_violation",
            Error::Io(_) => "io_error",
        }
    }

    /// Offending document path or key, when the error is tied to one.
    pub fn path(&self) -> Option<&str> {
        match self {
            Error::Parse { path, .. }
            | Error::UnknownNodeReference { path, .. }
            | Error::UnknownTechReference { path, .. }
            | Error::UnknownChipletReference { path, .. }
            | Error::UnknownSystemReference { path, .. }
            | Error::InvariantViolation { path, .. } => Some(path),
            _ => None,
        }
    }

    pub(crate) fn invariant(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvariantViolation {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
