//! Built-in scenario presets for the five result figures.
//!
//! Frequencies are in units of g (g = 1). Spans are chosen so each preset
//! shows at least three slow-oscillation periods: the detuned presets cover
//! δ·t ∈ [0, 25] and the rest run in g·t directly.

use crate::atom::{make_atom_state, StatePrep};
use crate::engine::Scenario;
use crate::error::RabiError;
use crate::grid::TimeGrid;
use crate::params::ModelParams;

/// One parameter regime tied to a result figure.
#[derive(Debug, Clone, Copy)]
pub struct FigureScenario {
    /// Output label, e.g. "fig4-d02".
    pub label: &'static str,
    /// Atomic frequency in units of g.
    pub omega0: f64,
    /// Detuning in units of g.
    pub delta: f64,
    pub init: StatePrep,
    /// Span in units of 1/g.
    pub t_max: f64,
}

impl FigureScenario {
    pub fn params(&self) -> Result<ModelParams, RabiError> {
        ModelParams::from_detuning(self.omega0, self.delta, 1.0)
    }

    /// Scenario on the default grid.
    pub fn scenario(&self) -> Result<Scenario, RabiError> {
        let params = self.params()?;
        let grid = TimeGrid::with_default_step(&params, self.t_max)?;
        Ok(Scenario::new(params, make_atom_state(self.init)?, grid))
    }
}

const FIG1: FigureScenario = FigureScenario {
    label: "fig1",
    omega0: 10.0,
    delta: 0.0,
    init: StatePrep::Excited,
    t_max: 6.0,
};

const FIG2: FigureScenario = FigureScenario {
    label: "fig2",
    omega0: 20.0,
    delta: 2.0,
    init: StatePrep::Excited,
    t_max: 12.5,
};

const FIG3: FigureScenario = FigureScenario {
    label: "fig3",
    omega0: 50.0,
    delta: 5.0,
    init: StatePrep::Excited,
    t_max: 5.0,
};

const FIG4_D02: FigureScenario = FigureScenario {
    label: "fig4-d02",
    omega0: 10.0,
    delta: 2.0,
    init: StatePrep::Excited,
    t_max: 12.0,
};

const FIG4_D06: FigureScenario = FigureScenario {
    label: "fig4-d06",
    omega0: 10.0,
    delta: 6.0,
    init: StatePrep::Excited,
    t_max: 12.0,
};

const FIG5: FigureScenario = FigureScenario {
    label: "fig5",
    omega0: 20.0,
    delta: 10.0,
    init: StatePrep::Ground,
    t_max: 6.0,
};

/// The scenario(s) behind one figure preset; figure 4 carries two detunings.
pub fn figure_scenarios(figure: u8) -> Result<Vec<FigureScenario>, RabiError> {
    match figure {
        1 => Ok(vec![FIG1]),
        2 => Ok(vec![FIG2]),
        3 => Ok(vec![FIG3]),
        4 => Ok(vec![FIG4_D02, FIG4_D06]),
        5 => Ok(vec![FIG5]),
        other => Err(RabiError::InvalidParameter(format!(
            "figure must be 1..=5 (got {other})"
        ))),
    }
}

/// Engines each figure preset runs.
pub fn figure_engines(figure: u8) -> Result<Vec<&'static str>, RabiError> {
    match figure {
        1 => Ok(vec!["factored", "direct", "jc"]),
        2 => Ok(vec!["factored", "jc", "oracle"]),
        3 => Ok(vec!["factored", "jc"]),
        4 => Ok(vec!["factored", "direct"]),
        5 => Ok(vec!["factored", "direct", "jc"]),
        other => Err(RabiError::InvalidParameter(format!(
            "figure must be 1..=5 (got {other})"
        ))),
    }
}

/// Every distinct parameter regime across the figures, for invariant sweeps.
pub fn all_regimes() -> Vec<FigureScenario> {
    vec![FIG1, FIG2, FIG3, FIG4_D02, FIG4_D06, FIG5]
}
