//! Gaussian belief arithmetic.
//!
//! Everything here is a pure function of its inputs; values are freely
//! shareable across threads. Dimensions stay small (≤ ~10 per node), so all
//! linear algebra is dense.

mod belief;
mod chi2;
mod jacobian;
mod sut;

pub use belief::{
    condition, default_regularizer, log_density, mahalanobis_sq, GaussianBelief, JointGaussian,
};
pub use chi2::{chi_square_cdf, chi_square_quantile, ln_gamma, regularized_lower_gamma};
pub use jacobian::{fd_jacobian, linear_propagate, FdScheme};
pub use sut::{sigma_points, sut_propagate, SigmaPointSet, SutScaling};

use thiserror::Error;

/// Errors from Gaussian-belief operations.
#[derive(Debug, Error)]
pub enum GaussianError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("numerical degeneracy: {0}")]
    Degeneracy(String),
    #[error("non-finite function value at probe point {probe:?}")]
    PropagationFailure { probe: Vec<f64> },
}
