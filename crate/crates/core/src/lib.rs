//! One-dimensional nonisentropic flow in a duct with a discontinuous
//! cross-section.
//!
//! - [`gas`]: equation of state, characteristic speeds, regions
//! - [`curves`]: rarefaction, shock and contact curves; the `w1`/`w3` wave curves
//! - [`stationary`]: stationary waves across an area jump
//! - [`riemann`]: classical and duct Riemann solvers
//! - [`interaction`]: contact / stationary-wave interaction cases
//! - [`fvm`]: Rusanov finite-volume simulator
//! - [`presets`], [`io`]: the seven reference experiments, JSON configs, CSV output

pub mod curves;
pub mod error;
pub mod fvm;
pub mod gas;
pub mod interaction;
pub mod io;
pub mod presets;
mod root;
pub mod riemann;
pub mod stationary;

pub use curves::WaveFamily;
pub use error::{Error, Result};
pub use fvm::{SimConfig, SimGrid, ThreeStateInit};
pub use gas::{ConservedCell, GasConstants, GasState, Region};
pub use interaction::{InteractionCase, InteractionInput, InteractionResult};
pub use riemann::{Construction, DuctRiemannSolutions, Wave, WaveFan};
pub use stationary::{BranchSelector, StationaryPair};
