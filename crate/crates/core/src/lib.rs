//! SE(2) differential-invariant networks.
//!
//! The building blocks: Gaussian-derivative jets ([`scalespace`]), moving-frame
//! differential invariants of the roto-translation group ([`invariants`]), and
//! a residual network assembled from invariant blocks ([`model`]), together
//! with a small reverse-mode tape ([`tape`]) covering exactly the operations
//! the network needs, MNIST/MNIST-rot ingestion ([`data`]), a training loop
//! ([`train`]) and an equivariance verification harness ([`verify`]).

pub mod checkpoint;
pub mod data;
pub mod invariants;
pub mod kernels;
pub mod model;
pub mod ops;
pub mod rng;
pub mod scalar;
pub mod scalespace;
pub mod synth;
pub mod tape;
pub mod tensor;
pub mod train;
pub mod verify;

pub use scalar::Scalar;
pub use tensor::{Padding, Tensor};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),
    #[error("degenerate gradient (norm {norm} <= {eps})")]
    DegenerateGradient { norm: f64, eps: f64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("training diverged at epoch {epoch}, step {step}: {what}")]
    Diverged {
        epoch: usize,
        step: usize,
        what: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
