//! Vacuum dynamics of a two-level atom coupled to a single cavity mode,
//! computed without the rotating-wave approximation.
//!
//! The atom's reduced density matrix is propagated along two independent
//! routes that must agree:
//!
//! - [`propagate::propagate_factored`] builds the solution as a scalar
//!   damping prefactor times a linear map whose eight coefficients come from
//!   disentangling the time-ordered generator into a product of exponentials;
//!   the disentangling variables solve Riccati-type ODEs
//!   ([`riccati::integrate_riccati`]).
//! - [`propagate::propagate_direct`] integrates the time-local generator
//!   (superoperators with closed-form time-dependent coefficients) step by
//!   step.
//!
//! Two further references bracket the result: the closed-form
//! rotating-wave-approximation probability ([`jc`]) and exact evolution of
//! the full atom-field Hamiltonian in a truncated Fock basis ([`fock`]).
//!
//! All four routes are exposed behind the [`engine::Engine`] trait and
//! selected by name at runtime through an [`engine::EngineRegistry`].
//! Frequencies are angular, ħ = 1, and conventionally expressed in units of
//! the coupling g (set g = 1).

pub mod analysis;
pub mod atom;
pub mod checks;
pub mod coeffs;
pub mod engine;
pub mod error;
pub mod fock;
pub mod grid;
pub mod jc;
pub mod params;
pub mod presets;
pub mod propagate;
pub mod riccati;

pub use atom::{AtomDensity, AtomState, StatePrep};
pub use coeffs::{evaluate_coefficients, CoefficientSet};
pub use engine::{Engine, EngineRegistry, Scenario};
pub use error::RabiError;
pub use grid::TimeGrid;
pub use params::ModelParams;
pub use propagate::{propagate_direct, propagate_factored, Sample, Trajectory};
