//! Simulation and verification of Cucker-Smale flocks confined by repulsive
//! walls, on the half-line `(0, ∞)` and on a bounded interval `(a, b)`.
//!
//! The pipeline is: build a [`ModelSpec`], draw or construct a
//! [`FlockState`], [`integrate`] it into a [`Trajectory`] of sampled
//! [`DiagnosticsRecord`]s, then run [`verify_halfline`] or
//! [`verify_interval`] to turn the long-time behavior into a
//! [`TheoremReport`] of pass/fail claims.

pub mod cli;
pub mod config;
pub mod dynamics;
pub mod error;
pub mod integrator;
pub mod kernels;
pub mod observables;
pub mod output;
pub mod potentials;
mod quadrature;
pub mod scenarios;
pub mod verification;

pub use dynamics::{mean_force, momentum, rhs, FlockState, ModelSpec, PhaseDerivative};
pub use error::{FlockError, Result};
pub use integrator::{
    integrate, propagate_fixed, reference_integrate, step_embedded, StepControl, Trajectory,
};
pub use kernels::CommunicationKernel;
pub use observables::{diagnostics, dissipation_residual, DiagnosticsRecord};
pub use potentials::{ConfinementGeometry, WallPotential};
pub use verification::{verify_halfline, verify_interval, TheoremReport, Thresholds};
