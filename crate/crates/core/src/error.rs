//! Error type shared by all kernels in this crate.

use thiserror::Error;

/// Errors produced by configuration validation and the numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter was outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// A point exceeded the disc radius beyond the construction tolerance.
    #[error("point {index} has modulus {modulus} outside radius {radius} (tolerance {tolerance:e})")]
    PointOutsideDisc {
        index: usize,
        modulus: f64,
        radius: f64,
        tolerance: f64,
    },

    /// A factor |1 - conj(z_j) z_k| vanished exactly, so its log is undefined.
    #[error("factor |1 - conj(z_{j}) z_{k}| is exactly zero")]
    DegenerateFactor { j: usize, k: usize },

    /// An evaluation point came too close to the pole 1/conj(z_index).
    #[error("evaluation point within {distance:e} of the pole paired with point {index}")]
    PoleProximity { index: usize, distance: f64 },

    /// Adaptive quadrature hit the node cap before meeting the tolerance.
    #[error(
        "quadrature stalled at {max_nodes} nodes (last delta {last_delta:e}, tolerance {tolerance:e})"
    )]
    NoConvergence {
        tolerance: f64,
        max_nodes: usize,
        last_delta: f64,
    },
}
