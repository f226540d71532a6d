//! Verification suites: every release criterion as a runnable check that
//! reports its measured value against a pinned threshold.
//!
//! The same checks back the `check` CLI subcommand and the acceptance test
//! target, so a shipped binary can re-verify itself in place.

use std::f64::consts::PI;

use crate::analysis::{compare_series, envelope_check, find_extrema, EnvelopeModel};
use crate::atom::make_atom_state;
use crate::coeffs::evaluate_coefficients;
use crate::engine::{Engine, FactoredEngine, JcEngine, OracleEngine, Scenario, DEFAULT_N_MAX};
use crate::error::RabiError;
use crate::fock::{self, AtomLevel, CouplingMode, JointState};
use crate::grid::{self, TimeGrid};
use crate::jc::{jc_excited_probability, jc_series, JcInitial};
use crate::params::ModelParams;
use crate::presets::{self, FigureScenario};
use crate::propagate::{propagate_direct, propagate_factored};

/// Trace drift allowed on either propagation route over a span of g·t = 6.
pub const TRACE_TOL: f64 = 1e-8;

/// Element-wise agreement between the factored and direct routes.
pub const SPLIT_TOL: f64 = 1e-6;

/// Minimum improvement of route agreement when the step is halved. A clean
/// fourth-order pair gives 16; the floor leaves room for roundoff.
pub const ORDER_RATIO_MIN: f64 = 11.0;

/// Quadrature consistency of Γ_k against its closed form, relative to
/// 1 + |Γ_k|.
pub const GAMMA_TOL: f64 = 1e-9;

/// rwa-mode reference against the closed-form probability.
pub const JC_ORACLE_TOL: f64 = 1e-8;

/// Residual of the closed form shifted by one Rabi period.
pub const JC_PERIOD_TOL: f64 = 1e-6;

/// Absolute envelope deviation of the prefactored population from
/// exp(−g²t²) over g·t ∈ [0,3]; measured 4.8e−3 on the default grid.
pub const PE_ENVELOPE_TOL: f64 = 0.05;

/// Absolute envelope deviation of raw l from exp(−g²t²/2) over g·t ∈ [0,2],
/// where the Gaussian still dominates the counter-rotating ripple;
/// measured 2.9e−2.
pub const L_ENVELOPE_SHORT_TOL: f64 = 0.05;

/// Same deviation over the full g·t ∈ [0,3]. Removing the e^{−Γ_k}
/// prefactor amplifies the persistent ripple of order 2g²/Δ² by e^{+Γ_k}
/// (about 90 at g·t = 3), so the deviation grows to 0.398 on the default
/// grid; the bound is pinned just above that.
pub const L_ENVELOPE_FULL_TOL: f64 = 0.45;

/// Relative error allowed on the dominant period of the detuned presets.
pub const PERIOD_TOL: f64 = 0.10;

/// Floor on the ground-start oscillation maximum in the fig5 regime; the
/// direct route measures 4.40e−3, consistent with the 4g²/Δ² = 4.44e−3
/// scale of the counter-rotating drive.
pub const GROUND_PE_MIN: f64 = 3.5e-3;

/// Factored-vs-reference agreement for g·t ≤ 0.3 in the fig2 regime;
/// measured 6.4e−4.
pub const ORACLE_SHORT_TOL: f64 = 5e-3;
const ORACLE_SHORT_SPAN: f64 = 0.3;

/// Joint-state norm drift across reference evolution.
pub const NORM_TOL: f64 = 1e-12;

/// Parity drift across full-mode reference evolution.
pub const PARITY_TOL: f64 = 1e-10;

/// Excited-probability shift when the Fock cutoff doubles.
pub const TRUNCATION_TOL: f64 = 1e-6;

/// Options shared by the oracle-side checks.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub n_max: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self { n_max: DEFAULT_N_MAX }
    }
}

/// Outcome of one check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: &'static str,
    pub passed: bool,
    pub measured: f64,
    pub threshold: f64,
    /// Comparison the measurement must satisfy: "<=", ">=" or "<".
    pub requirement: &'static str,
    pub detail: String,
}

impl CheckResult {
    fn error(id: &'static str, err: RabiError) -> Self {
        Self {
            id,
            passed: false,
            measured: f64::NAN,
            threshold: f64::NAN,
            requirement: "<=",
            detail: format!("check aborted: {err}"),
        }
    }

    /// One-line report, e.g.
    /// `PASS identity-trace   measured 4.7e-15 (require <= 1.0e-8) | ...`.
    pub fn line(&self) -> String {
        format!(
            "{} {:<18} measured {:.6e} (require {} {:.3e}) | {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.measured,
            self.requirement,
            self.threshold,
            self.detail
        )
    }
}

fn regime_scenario(fs: &FigureScenario, t_max: f64) -> Result<Scenario, RabiError> {
    let params = fs.params()?;
    let grid = TimeGrid::with_default_step(&params, t_max)?;
    Ok(Scenario::new(params, make_atom_state(fs.init)?, grid))
}

/// Criterion: both routes return ρ(0) exactly and hold |tr ρ − 1| ≤ 1e−8
/// over g·t ∈ [0,6] in every figure regime.
pub fn identity_and_trace() -> CheckResult {
    let inner = || -> Result<CheckResult, RabiError> {
        let mut worst = 0.0f64;
        let mut identity_exact = true;
        for fs in presets::all_regimes() {
            let sc = regime_scenario(&fs, 6.0)?;
            let fac = propagate_factored(&sc.init, &sc.params, &sc.grid)?;
            let dir = propagate_direct(&sc.init, &sc.params, &sc.grid)?;
            let rho0 = sc.init.density();
            identity_exact &= fac.records[0].rho == rho0 && dir.records[0].rho == rho0;
            worst = worst.max(fac.max_trace_err()).max(dir.max_trace_err());
        }
        Ok(CheckResult {
            id: "identity-trace",
            passed: identity_exact && worst <= TRACE_TOL,
            measured: worst,
            threshold: TRACE_TOL,
            requirement: "<=",
            detail: format!(
                "6 regimes, both routes, span g·t ≤ 6; ρ(0) returned exactly: {identity_exact}"
            ),
        })
    };
    inner().unwrap_or_else(|e| CheckResult::error("identity-trace", e))
}

/// Criterion: factored and direct trajectories agree element-wise within
/// 1e−6 in every figure regime.
pub fn splitting_agreement() -> CheckResult {
    let inner = || -> Result<CheckResult, RabiError> {
        let mut worst = 0.0f64;
        for fs in presets::all_regimes() {
            let sc = regime_scenario(&fs, 6.0)?;
            let fac = propagate_factored(&sc.init, &sc.params, &sc.grid)?;
            let dir = propagate_direct(&sc.init, &sc.params, &sc.grid)?;
            worst = worst.max(fac.max_elementwise_diff(&dir)?);
        }
        Ok(CheckResult {
            id: "splitting",
            passed: worst <= SPLIT_TOL,
            measured: worst,
            threshold: SPLIT_TOL,
            requirement: "<=",
            detail: "element-wise factored vs direct, 6 regimes, span g·t ≤ 6".into(),
        })
    };
    inner().unwrap_or_else(|e| CheckResult::error("splitting", e))
}

/// Criterion: halving the step shrinks the route disagreement by at least
/// 11×. The base step is eight times the default so both measurements sit
/// well above the roundoff floor.
pub fn integrator_order() -> CheckResult {
    let inner = || -> Result<CheckResult, RabiError> {
        let fs = presets::figure_scenarios(2)?[0];
        let params = fs.params()?;
        let init = make_atom_state(fs.init)?;
        let coarse = TimeGrid::new(fs.t_max, 8.0 * grid::default_step(&params))?;
        let fine = coarse.halved();
        let disagreement = |g: &TimeGrid| -> Result<f64, RabiError> {
            let fac = propagate_factored(&init, &params, g)?;
            let dir = propagate_direct(&init, &params, g)?;
            fac.max_elementwise_diff(&dir)
        };
        let d_coarse = disagreement(&coarse)?;
        let d_fine = disagreement(&fine)?;
        let ratio = d_coarse / d_fine;
        Ok(CheckResult {
            id: "integrator-order",
            passed: ratio >= ORDER_RATIO_MIN,
            measured: ratio,
            threshold: ORDER_RATIO_MIN,
            requirement: ">=",
            detail: format!(
                "fig2 regime: disagreement {d_coarse:.3e} at dt = {:.3e}, {d_fine:.3e} at dt/2",
                coarse.dt()
            ),
        })
    };
    inner().unwrap_or_else(|e| CheckResult::error("integrator-order", e))
}

/// Criterion: the closed form of Γ_k matches per-interval Simpson
/// quadrature of Γ̇_k = g²(Re α + Re f) within 1e−9·(1 + |Γ_k|).
pub fn gamma_quadrature() -> CheckResult {
    let inner = || -> Result<CheckResult, RabiError> {
        let mut worst = 0.0f64;
        for fs in presets::all_regimes() {
            let params = fs.params()?;
            let g = TimeGrid::with_default_step(&params, 6.0)?;
            let mut acc = 0.0;
            for i in 0..g.n_steps() {
                let t0 = g.time_at(i);
                let t1 = g.time_at(i + 1);
                let f0 = evaluate_coefficients(&params, t0)?.gamma_k_dot;
                let fm = evaluate_coefficients(&params, 0.5 * (t0 + t1))?.gamma_k_dot;
                let c1 = evaluate_coefficients(&params, t1)?;
                acc += g.dt() / 6.0 * (f0 + 4.0 * fm + c1.gamma_k_dot);
                let rel = (acc - c1.gamma_k).abs() / (1.0 + c1.gamma_k.abs());
                worst = worst.max(rel);
            }
        }
        Ok(CheckResult {
            id: "gamma-quadrature",
            passed: worst <= GAMMA_TOL,
            measured: worst,
            threshold: GAMMA_TOL,
            requirement: "<=",
            detail: "cumulative Simpson of Γ̇_k vs closed form, 6 regimes".into(),
        })
    };
    inner().unwrap_or_else(|e| CheckResult::error("gamma-quadrature", e))
}

/// Criterion: the rwa-mode reference reproduces the closed-form probability
/// within 1e−8 at δ = 0 and δ = 2g over g·t ∈ [0,10], and the closed form
/// is periodic with period 2π/Ω within 1e−6.
pub fn jc_baseline(opts: &CheckOptions) -> CheckResult {
    let inner = || -> Result<CheckResult, RabiError> {
        let mut worst_dev = 0.0f64;
        let mut worst_period = 0.0f64;
        for delta in [0.0, 2.0] {
            let params = ModelParams::from_detuning(20.0, delta, 1.0)?;
            let g = TimeGrid::with_default_step(&params, 10.0)?;
            let times = g.times();
            let h = fock::build_hamiltonian(&params, opts.n_max, CouplingMode::Rwa)?;
            let psi0 = JointState::basis_state(AtomLevel::Excited, 0, opts.n_max)?;
            let reference: Vec<f64> = fock::evolve(&psi0, &h, &times)?
                .iter()
                .map(JointState::excited_probability)
                .collect();
            let analytic = jc_series(&params, &times, JcInitial::Excited);
            let diff = compare_series(&times, &reference, &times, &analytic)?;
            worst_dev = worst_dev.max(diff.max_abs_diff);

            let period = 2.0 * PI / params.jc_rabi_frequency();
            let residual = times
                .iter()
                .map(|&t| {
                    let a = jc_excited_probability(&params, t, JcInitial::Excited).p_excited;
                    let b =
                        jc_excited_probability(&params, t + period, JcInitial::Excited).p_excited;
                    (a - b).abs()
                })
                .fold(0.0, f64::max);
            worst_period = worst_period.max(residual);
        }
        Ok(CheckResult {
            id: "jc-baseline",
            passed: worst_dev <= JC_ORACLE_TOL && worst_period <= JC_PERIOD_TOL,
            measured: worst_dev,
            threshold: JC_ORACLE_TOL,
            requirement: "<=",
            detail: format!(
                "rwa reference vs closed form at δ ∈ {{0, 2g}}; period residual {worst_period:.3e} (≤ {JC_PERIOD_TOL:.0e})"
            ),
        })
    };
    inner().unwrap_or_else(|e| CheckResult::error("jc-baseline", e))
}

/// Criterion: resonant decay. Local maxima of P_e never increase, P_e stays
/// within 0.05 of exp(−g²t²) on g·t ∈ [0,3], and raw l stays within 0.05 of
/// exp(−g²t²/2) on g·t ∈ [0,2] and within 0.45 on g·t ∈ [0,3].
pub fn resonant_decay_envelope() -> CheckResult {
    let inner = || -> Result<CheckResult, RabiError> {
        let fs = presets::figure_scenarios(1)?[0];
        let sc = regime_scenario(&fs, 6.0)?;
        let fac = propagate_factored(&sc.init, &sc.params, &sc.grid)?;
        let times = fac.times.clone();
        let pe = fac.pe_series();
        let l = fac
            .raw_l()
            .ok_or_else(|| RabiError::Series("factored route carries no raw l".into()))?;

        let summary = find_extrema(&times, &pe, 1)?;
        let non_increasing = summary
            .local_maxima
            .windows(2)
            .all(|w| w[1].1 <= w[0].1 + 1e-12);

        let upto = |cut: f64| times.iter().take_while(|&&t| t <= cut + 1e-12).count();
        let (i2, i3) = (upto(2.0), upto(3.0));
        let g = sc.params.g();
        let pe_dev = envelope_check(&times[..i3], &pe[..i3], EnvelopeModel::Gaussian, g);
        let l_dev_short = envelope_check(&times[..i2], &l[..i2], EnvelopeModel::GaussianHalf, g);
        let l_dev_full = envelope_check(&times[..i3], &l[..i3], EnvelopeModel::GaussianHalf, g);

        Ok(CheckResult {
            id: "resonant-envelope",
            passed: non_increasing
                && pe_dev <= PE_ENVELOPE_TOL
                && l_dev_short <= L_ENVELOPE_SHORT_TOL
                && l_dev_full <= L_ENVELOPE_FULL_TOL,
            measured: pe_dev,
            threshold: PE_ENVELOPE_TOL,
            requirement: "<=",
            detail: format!(
                "maxima non-increasing: {non_increasing}; raw-l deviation {l_dev_short:.3e} on g·t ≤ 2 (≤ {L_ENVELOPE_SHORT_TOL}), {l_dev_full:.3e} on g·t ≤ 3 (≤ {L_ENVELOPE_FULL_TOL})"
            ),
        })
    };
    inner().unwrap_or_else(|e| CheckResult::error("resonant-envelope", e))
}

/// Criterion: in the fig2 and fig3 regimes the dominant period of the
/// propagated P_e equals 2π/δ within 10% once the counter-rotating ripple is
/// smoothed over one of its periods, while the closed-form baseline's period
/// equals 2π/Ω within two grid steps.
pub fn detuned_period() -> CheckResult {
    let inner = || -> Result<CheckResult, RabiError> {
        let mut worst_rel = 0.0f64;
        let mut jc_ok = true;
        let mut parts = Vec::new();
        for fig in [2u8, 3] {
            let fs = presets::figure_scenarios(fig)?[0];
            let sc = fs.scenario()?;
            let fac = propagate_factored(&sc.init, &sc.params, &sc.grid)?;
            let dt = sc.grid.dt();
            let fast_period = 2.0 * PI / sc.params.sum_frequency();
            let window = ((fast_period / dt).round() as usize).max(1);
            let summary = find_extrema(&fac.times, &fac.pe_series(), window)?;
            let est = summary
                .dominant_period
                .ok_or_else(|| RabiError::Series("no oscillation maxima found".into()))?;
            let target = 2.0 * PI / sc.params.detuning();
            let rel = (est.period - target).abs() / target;
            worst_rel = worst_rel.max(rel);

            let analytic = jc_series(&sc.params, &fac.times, JcInitial::Excited);
            let jc_summary = find_extrema(&fac.times, &analytic, 1)?;
            let jc_est = jc_summary
                .dominant_period
                .ok_or_else(|| RabiError::Series("no baseline maxima found".into()))?;
            let jc_target = 2.0 * PI / sc.params.jc_rabi_frequency();
            jc_ok &= (jc_est.period - jc_target).abs() <= 2.0 * dt;
            parts.push(format!(
                "{}: period {:.4} vs 2π/δ = {:.4} ({:.1}%)",
                fs.label,
                est.period,
                target,
                100.0 * rel
            ));
        }
        Ok(CheckResult {
            id: "detuned-period",
            passed: worst_rel <= PERIOD_TOL && jc_ok,
            measured: worst_rel,
            threshold: PERIOD_TOL,
            requirement: "<=",
            detail: format!("{}; baseline period within 2 grid steps: {jc_ok}", parts.join("; ")),
        })
    };
    inner().unwrap_or_else(|e| CheckResult::error("detuned-period", e))
}

/// Criterion: raising the detuning from 0.2ω₀ to 0.6ω₀ shrinks both the
/// oscillation amplitude and its period.
pub fn detuning_trend() -> CheckResult {
    let inner = || -> Result<CheckResult, RabiError> {
        let list = presets::figure_scenarios(4)?;
        let mut measures = Vec::new();
        for fs in &list {
            let sc = fs.scenario()?;
            let fac = propagate_factored(&sc.init, &sc.params, &sc.grid)?;
            let summary = find_extrema(&fac.times, &fac.pe_series(), 5)?;
            let est = summary
                .dominant_period
                .ok_or_else(|| RabiError::Series("no oscillation maxima found".into()))?;
            measures.push((est.period, summary.peak_to_trough));
        }
        let (period_lo, ptt_lo) = measures[0]; // δ = 0.2 ω₀
        let (period_hi, ptt_hi) = measures[1]; // δ = 0.6 ω₀
        let ratio = period_hi / period_lo;
        Ok(CheckResult {
            id: "detuning-trend",
            passed: period_hi < period_lo && ptt_hi < ptt_lo,
            measured: ratio,
            threshold: 1.0,
            requirement: "<",
            detail: format!(
                "period {period_hi:.3} < {period_lo:.3}; peak-to-trough {ptt_hi:.3} < {ptt_lo:.3}"
            ),
        })
    };
    inner().unwrap_or_else(|e| CheckResult::error("detuning-trend", e))
}

/// Criterion: an initially unexcited atom oscillates. In the fig5 regime the
/// maximum P_e exceeds the pinned floor while the rotating-wave baseline
/// stays identically zero, and halving ω₀/g (stronger relative coupling)
/// raises the maximum.
pub fn ground_oscillation() -> CheckResult {
    let inner = || -> Result<CheckResult, RabiError> {
        let fs = presets::figure_scenarios(5)?[0];
        let sc = regime_scenario(&fs, 6.0)?;
        let dir = propagate_direct(&sc.init, &sc.params, &sc.grid)?;
        let max20 = dir.pe_series().iter().copied().fold(0.0, f64::max);

        let jc = JcEngine.run(&sc)?;
        let jc_zero = jc.pe_series().iter().all(|&p| p == 0.0);

        let stronger = FigureScenario {
            label: "fig5-strong",
            omega0: 10.0,
            delta: 5.0,
            ..fs
        };
        let sc10 = regime_scenario(&stronger, 6.0)?;
        let dir10 = propagate_direct(&sc10.init, &sc10.params, &sc10.grid)?;
        let max10 = dir10.pe_series().iter().copied().fold(0.0, f64::max);

        let scale = {
            let big = sc.params.sum_frequency();
            4.0 / (big * big)
        };
        Ok(CheckResult {
            id: "ground-oscillation",
            passed: max20 >= GROUND_PE_MIN && jc_zero && max10 > max20,
            measured: max20,
            threshold: GROUND_PE_MIN,
            requirement: ">=",
            detail: format!(
                "max P_e {max20:.4e} (scale 4g²/Δ² = {scale:.4e}); baseline identically zero: {jc_zero}; at ω₀ = 10g the maximum rises to {max10:.4e}"
            ),
        })
    };
    inner().unwrap_or_else(|e| CheckResult::error("ground-oscillation", e))
}

/// Criterion: the factored route matches the full-Hamiltonian reference
/// within 5e−3 for g·t ≤ 0.3 in the fig2 regime. The long-time gap is
/// measured and reported here, not asserted: the reduced description is
/// second order in the coupling and departs from the full model at
/// g·t ≳ 1.
pub fn oracle_short_time(opts: &CheckOptions) -> CheckResult {
    let inner = || -> Result<CheckResult, RabiError> {
        let fs = presets::figure_scenarios(2)?[0];
        let sc = fs.scenario()?.with_n_max(opts.n_max);
        let fac = FactoredEngine.run(&sc)?;
        let orc = OracleEngine.run(&sc)?;
        let fac_pe = fac.pe_series();
        let orc_pe = orc.pe_series();
        let mut short = 0.0f64;
        let mut full = 0.0f64;
        let mut t_full = 0.0;
        for ((&t, &a), &b) in fac.times.iter().zip(&fac_pe).zip(&orc_pe) {
            let d = (a - b).abs();
            if t <= ORACLE_SHORT_SPAN + 1e-12 {
                short = short.max(d);
            }
            if d > full {
                full = d;
                t_full = t;
            }
        }
        Ok(CheckResult {
            id: "oracle-short-time",
            passed: short <= ORACLE_SHORT_TOL,
            measured: short,
            threshold: ORACLE_SHORT_TOL,
            requirement: "<=",
            detail: format!(
                "fig2 regime, g·t ≤ {ORACLE_SHORT_SPAN}; long-time gap {full:.3} at g·t = {t_full:.2} is reported, not asserted"
            ),
        })
    };
    inner().unwrap_or_else(|e| CheckResult::error("oracle-short-time", e))
}

/// Criterion: reference internal health. Norm conserved to 1e−12, full-mode
/// parity to 1e−10, and doubling the Fock cutoff moves P_e by at most 1e−6
/// in the weak-coupling regimes.
pub fn oracle_internal(opts: &CheckOptions) -> CheckResult {
    let inner = || -> Result<CheckResult, RabiError> {
        let mut worst_norm = 0.0f64;
        let mut worst_parity = 0.0f64;
        let mut worst_trunc = 0.0f64;
        let base = (opts.n_max / 2).max(1);
        let regimes: Vec<FigureScenario> = presets::all_regimes()
            .into_iter()
            .filter(|fs| fs.omega0 >= 20.0)
            .collect();
        for fs in &regimes {
            let params = fs.params()?;
            let times: Vec<f64> = (0..512).map(|i| 6.0 * i as f64 / 511.0).collect();
            let h = fock::build_hamiltonian(&params, opts.n_max, CouplingMode::Full)?;
            let psi0 = JointState::basis_state(AtomLevel::Excited, 0, opts.n_max)?;
            for s in fock::evolve(&psi0, &h, &times)? {
                worst_norm = worst_norm.max((s.norm() - 1.0).abs());
                worst_parity = worst_parity.max((fock::parity_expectation(&s) + 1.0).abs());
            }
            worst_trunc =
                worst_trunc.max(fock::truncation_check(&params, base, CouplingMode::Full, &times)?);
        }
        Ok(CheckResult {
            id: "oracle-internal",
            passed: worst_norm <= NORM_TOL
                && worst_parity <= PARITY_TOL
                && worst_trunc <= TRUNCATION_TOL,
            measured: worst_trunc,
            threshold: TRUNCATION_TOL,
            requirement: "<=",
            detail: format!(
                "{} weak-coupling regimes: norm drift {worst_norm:.2e} (≤ {NORM_TOL:.0e}), parity drift {worst_parity:.2e} (≤ {PARITY_TOL:.0e}), truncation {base}→{} vs {}→{}",
                regimes.len(),
                2 * base,
                opts.n_max,
                2 * opts.n_max
            ),
        })
    };
    inner().unwrap_or_else(|e| CheckResult::error("oracle-internal", e))
}

/// Which checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Propagation-side checks: trace, splitting, quadrature, and the
    /// regime-level oscillation claims.
    Invariants,
    /// Reference-side checks: rwa baseline, short-time agreement, internal
    /// health.
    Oracle,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "invariants" => Ok(Suite::Invariants),
            "oracle" => Ok(Suite::Oracle),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite '{other}' (expected invariants, oracle, or all)"
            )),
        }
    }
}

/// Run a suite in criterion order.
pub fn run_suite(suite: Suite, opts: &CheckOptions) -> Vec<CheckResult> {
    let invariants = |out: &mut Vec<CheckResult>| {
        out.push(identity_and_trace());
        out.push(splitting_agreement());
        out.push(integrator_order());
        out.push(gamma_quadrature());
        out.push(resonant_decay_envelope());
        out.push(detuned_period());
        out.push(detuning_trend());
        out.push(ground_oscillation());
    };
    let oracle = |out: &mut Vec<CheckResult>| {
        out.push(jc_baseline(opts));
        out.push(oracle_short_time(opts));
        out.push(oracle_internal(opts));
    };
    let mut out = Vec::new();
    match suite {
        Suite::Invariants => invariants(&mut out),
        Suite::Oracle => oracle(&mut out),
        Suite::All => {
            out.push(identity_and_trace());
            out.push(splitting_agreement());
            out.push(integrator_order());
            out.push(gamma_quadrature());
            out.push(jc_baseline(opts));
            out.push(resonant_decay_envelope());
            out.push(detuned_period());
            out.push(detuning_trend());
            out.push(ground_oscillation());
            out.push(oracle_short_time(opts));
            out.push(oracle_internal(opts));
        }
    }
    out
}
