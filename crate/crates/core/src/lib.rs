//! Multi-lidar sensor fusion with deep Q-learning for a search-and-pick robot.
//!
//! The crate is organized around the training pipeline:
//!
//! - [`sim`] — deterministic 2D arena simulator with three raycast lidar sensors
//! - [`nn`] — minimal dense/conv network engine with analytic gradients,
//!   pseudo-Huber loss and RMSProp
//! - [`arch`] — the six fusion Q-network architectures plus DropPath and
//!   ray-level dropout
//! - [`replay`] — bounded FIFO experience pool with concurrent producers
//! - [`train`] — double-Q DQN trainer, epsilon-greedy actors, and the
//!   DropPath distillation refinement stage
//! - [`eval`] — fixed-suite rollout evaluation and distribution summaries
//! - [`config`] — key=value run configuration and run manifests

pub mod arch;
pub mod config;
pub mod error;
pub mod eval;
pub mod geom;
pub mod nn;
pub mod replay;
pub mod sim;
pub mod train;

mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;
