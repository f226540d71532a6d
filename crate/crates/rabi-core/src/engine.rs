//! Propagation engines behind a common trait, registered by name and
//! selected at runtime.
//!
//! Every engine maps the same [`Scenario`] to a [`Trajectory`] on the
//! scenario's grid, so callers can run any subset and compare sample by
//! sample:
//!
//! - `factored`: the disentangled-map route, falling back to the direct
//!   route if the Riccati variables diverge (the fallback is recorded on the
//!   trajectory);
//! - `direct`: literal integration of the generator;
//! - `jc`: the closed-form rotating-wave baseline;
//! - `oracle`: exact evolution of the full Hamiltonian in a truncated Fock
//!   basis, reduced to the atom.

use num_complex::Complex64 as C64;

use crate::atom::{AtomDensity, AtomState};
use crate::error::RabiError;
use crate::fock::{self, CouplingMode, JointState};
use crate::grid::TimeGrid;
use crate::jc::{jc_excited_probability, JcInitial};
use crate::params::ModelParams;
use crate::propagate::{propagate_direct, propagate_factored, Sample, Trajectory};

/// Default Fock-space truncation: vacuum-sector dynamics at g/ω₀ ≤ 0.1
/// populate photon numbers above four below 1e−8.
pub const DEFAULT_N_MAX: usize = 16;

/// Everything an engine needs for one run.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub params: ModelParams,
    pub init: AtomState,
    pub grid: TimeGrid,
    /// Fock truncation for the oracle engine; ignored by the others.
    pub n_max: usize,
}

impl Scenario {
    pub fn new(params: ModelParams, init: AtomState, grid: TimeGrid) -> Self {
        Self {
            params,
            init,
            grid,
            n_max: DEFAULT_N_MAX,
        }
    }

    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }
}

/// One propagation strategy.
pub trait Engine: Send + Sync {
    /// Registry key and output-column label.
    fn name(&self) -> &'static str;

    fn run(&self, scenario: &Scenario) -> Result<Trajectory, RabiError>;
}

/// Disentangled-map route with automatic fallback.
pub struct FactoredEngine;

impl Engine for FactoredEngine {
    fn name(&self) -> &'static str {
        "factored"
    }

    fn run(&self, scenario: &Scenario) -> Result<Trajectory, RabiError> {
        match propagate_factored(&scenario.init, &scenario.params, &scenario.grid) {
            Ok(traj) => Ok(traj),
            Err(RabiError::RiccatiBlowUp { t, .. }) => {
                log::warn!(
                    "factored route diverged at t = {t:.6e}; falling back to direct integration"
                );
                let mut traj =
                    propagate_direct(&scenario.init, &scenario.params, &scenario.grid)?;
                traj.engine = "factored";
                traj.used_fallback = true;
                Ok(traj)
            }
            Err(e) => Err(e),
        }
    }
}

/// Literal generator integration.
pub struct DirectEngine;

impl Engine for DirectEngine {
    fn name(&self) -> &'static str {
        "direct"
    }

    fn run(&self, scenario: &Scenario) -> Result<Trajectory, RabiError> {
        propagate_direct(&scenario.init, &scenario.params, &scenario.grid)
    }
}

/// Closed-form rotating-wave baseline. Only diagonal initial states are
/// supported: the closed form has no coherence dynamics, and populations
/// enter linearly.
pub struct JcEngine;

impl Engine for JcEngine {
    fn name(&self) -> &'static str {
        "jc"
    }

    fn run(&self, scenario: &Scenario) -> Result<Trajectory, RabiError> {
        if scenario.init.rho_eg().norm() > 1e-14 {
            return Err(RabiError::UnsupportedInitial {
                engine: self.name(),
                reason: "the rotating-wave baseline covers diagonal initial states only".into(),
            });
        }
        let weight_excited = scenario.init.rho_ee();
        let times = scenario.grid.times();
        let records = times
            .iter()
            .map(|&t| {
                let pe = weight_excited
                    * jc_excited_probability(&scenario.params, t, JcInitial::Excited).p_excited;
                let rho = AtomDensity {
                    ee: C64::new(pe, 0.0),
                    eg: C64::new(0.0, 0.0),
                    ge: C64::new(0.0, 0.0),
                    gg: C64::new(1.0 - pe, 0.0),
                };
                Sample {
                    rho,
                    pe,
                    map: None,
                    trace_err: 0.0,
                    herm_err: 0.0,
                }
            })
            .collect();
        Ok(Trajectory {
            params: scenario.params,
            times,
            records,
            engine: "jc",
            used_fallback: false,
        })
    }
}

/// Truncated-Fock-space reference (full coupling). Mixed initial states are
/// evolved as weighted pure components, each tensored with the vacuum.
pub struct OracleEngine;

impl Engine for OracleEngine {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn run(&self, scenario: &Scenario) -> Result<Trajectory, RabiError> {
        let times = scenario.grid.times();
        let hamiltonian =
            fock::build_hamiltonian(&scenario.params, scenario.n_max, CouplingMode::Full)?;

        let mut accumulated: Vec<AtomDensity> = vec![AtomDensity::zero(); times.len()];
        for (weight, [ce, cg]) in scenario.init.pure_components() {
            let psi0 = JointState::from_atom_amplitudes(ce, cg, scenario.n_max)?;
            let states = fock::evolve(&psi0, &hamiltonian, &times)?;
            for (acc, psi) in accumulated.iter_mut().zip(&states) {
                *acc = acc.add(&fock::reduced_atom_state(psi).scaled(weight));
            }
        }

        let records = accumulated
            .into_iter()
            .map(|rho| Sample {
                rho,
                pe: rho.pe(),
                map: None,
                trace_err: rho.trace_error(),
                herm_err: rho.hermiticity_error(),
            })
            .collect();
        Ok(Trajectory {
            params: scenario.params,
            times,
            records,
            engine: "oracle",
            used_fallback: false,
        })
    }
}

/// Name-keyed collection of engines.
pub struct EngineRegistry {
    engines: Vec<Box<dyn Engine>>,
}

impl EngineRegistry {
    pub fn empty() -> Self {
        Self {
            engines: Vec::new(),
        }
    }

    /// Registry holding the four built-in engines.
    pub fn builtin() -> Self {
        let mut registry = Self::empty();
        registry.register(Box::new(FactoredEngine));
        registry.register(Box::new(DirectEngine));
        registry.register(Box::new(JcEngine));
        registry.register(Box::new(OracleEngine));
        registry
    }

    pub fn register(&mut self, engine: Box<dyn Engine>) {
        self.engines.push(engine);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Engine> {
        self.engines
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.engines.iter().map(|e| e.name()).collect()
    }

    /// Run the named engines in the given order on one scenario.
    pub fn run_selection(
        &self,
        names: &[String],
        scenario: &Scenario,
    ) -> Result<Vec<Trajectory>, RabiError> {
        names
            .iter()
            .map(|name| {
                let engine = self
                    .get(name)
                    .ok_or_else(|| RabiError::UnknownEngine(name.clone()))?;
                engine.run(scenario)
            })
            .collect()
    }
}

impl Default for EngineRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scenario(omega0: f64, delta: f64, t_max: f64) -> Scenario {
        let params = ModelParams::from_detuning(omega0, delta, 1.0).unwrap();
        let grid = TimeGrid::with_default_step(&params, t_max).unwrap();
        Scenario::new(params, AtomState::excited(), grid)
    }

    #[test]
    fn builtin_names() {
        let reg = EngineRegistry::builtin();
        assert_eq!(reg.names(), vec!["factored", "direct", "jc", "oracle"]);
        assert!(reg.get("factored").is_some());
        assert!(reg.get("nope").is_none());
    }

    #[test]
    fn unknown_engine_is_an_error() {
        let reg = EngineRegistry::builtin();
        let err = reg
            .run_selection(&["warp".to_string()], &scenario(20.0, 2.0, 0.5))
            .unwrap_err();
        assert!(matches!(err, RabiError::UnknownEngine(_)));
    }

    #[test]
    fn all_engines_share_the_grid() {
        let sc = scenario(20.0, 2.0, 0.5);
        let reg = EngineRegistry::builtin();
        let names: Vec<String> = reg.names().iter().map(|s| s.to_string()).collect();
        let runs = reg.run_selection(&names, &sc).unwrap();
        for r in &runs {
            assert_eq!(r.times.len(), sc.grid.n_samples());
            assert_eq!(r.times[0], 0.0);
            assert_eq!(*r.times.last().unwrap(), 0.5);
            // the reference engine reconstructs ρ(0) through V·V†, so it is
            // exact only to machine precision
            assert!((r.records[0].pe - 1.0).abs() < 1e-12, "{}", r.engine);
        }
    }

    #[test]
    fn jc_rejects_coherent_initial_state() {
        let mut sc = scenario(20.0, 2.0, 0.5);
        let rho = AtomDensity {
            ee: C64::new(0.5, 0.0),
            eg: C64::new(0.5, 0.0),
            ge: C64::new(0.5, 0.0),
            gg: C64::new(0.5, 0.0),
        };
        sc.init = AtomState::custom(rho).unwrap();
        let err = JcEngine.run(&sc).unwrap_err();
        assert!(matches!(err, RabiError::UnsupportedInitial { .. }));
    }

    #[test]
    fn oracle_handles_mixed_initial_state() {
        let mut sc = scenario(20.0, 2.0, 0.3);
        let rho = AtomDensity {
            ee: C64::new(0.25, 0.0),
            eg: C64::new(0.0, 0.0),
            ge: C64::new(0.0, 0.0),
            gg: C64::new(0.75, 0.0),
        };
        sc.init = AtomState::custom(rho).unwrap();
        let traj = OracleEngine.run(&sc).unwrap();
        assert!((traj.records[0].pe - 0.25).abs() < 1e-12);
        assert!(traj.max_trace_err() < 1e-12);
    }

    #[test]
    fn oracle_matches_direct_at_short_times() {
        let sc = scenario(20.0, 2.0, 0.3);
        let oracle = OracleEngine.run(&sc).unwrap();
        let direct = DirectEngine.run(&sc).unwrap();
        let worst = oracle
            .pe_series()
            .iter()
            .zip(direct.pe_series())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(worst < 5e-3, "short-time mismatch {worst}");
    }
}
