//! Command implementations on top of the engine registry.

use std::f64::consts::PI;
use std::io::Write;
use std::path::{Path, PathBuf};

use rabi_core::analysis::{envelope_check, find_extrema, EnvelopeModel};
use rabi_core::engine::{EngineRegistry, Scenario};
use rabi_core::presets;
use rabi_core::propagate::Trajectory;
use rabi_core::{AtomState, ModelParams, TimeGrid};

use crate::config::{self, ResolvedRun};
use crate::output::{self, OutputFormat};
use crate::{CliError, FigureArgs, SimulateArgs, SweepArgs};

fn run_engines(
    engines: &[String],
    scenario: &Scenario,
) -> Result<Vec<Trajectory>, CliError> {
    let registry = EngineRegistry::builtin();
    log::info!(
        "running engines [{}] on {} samples (dt = {:.6e})",
        engines.join(", "),
        scenario.grid.n_samples(),
        scenario.grid.dt()
    );
    Ok(registry.run_selection(engines, scenario)?)
}

fn emit(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => {
            std::fs::write(p, content)
                .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", p.display())))?;
            println!("wrote {}", p.display());
            Ok(())
        }
        None => {
            std::io::stdout()
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Runtime(format!("cannot write to stdout: {e}")))
        }
    }
}

fn render(resolved: &ResolvedRun, runs: &[Trajectory]) -> String {
    match resolved.format {
        OutputFormat::Csv => output::render_csv(&resolved.scenario, runs),
        OutputFormat::Json => output::render_json(
            &resolved.scenario,
            runs,
            &resolved.engines,
            &resolved.init_label,
        ),
    }
}

pub fn simulate(args: SimulateArgs) -> Result<(), CliError> {
    let resolved = config::resolve(args)?;
    let runs = run_engines(&resolved.engines, &resolved.scenario)?;
    let content = render(&resolved, &runs);
    emit(resolved.out.as_deref(), &content)
}

/// Insert a label suffix before the extension: `figure4.csv` + `d02` gives
/// `figure4-d02.csv`.
fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let ext = path
        .extension()
        .map(|s| format!(".{}", s.to_string_lossy()))
        .unwrap_or_default();
    path.with_file_name(format!("{stem}-{suffix}{ext}"))
}

pub fn figure(args: FigureArgs) -> Result<(), CliError> {
    let scenarios = presets::figure_scenarios(args.number)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let engines: Vec<String> = presets::figure_engines(args.number)
        .map_err(|e| CliError::Usage(e.to_string()))?
        .iter()
        .map(|s| s.to_string())
        .collect();
    let format = match args.format.as_deref() {
        Some(spec) => config::parse_format(spec)?,
        None => OutputFormat::Csv,
    };
    if args.nmax == Some(0) {
        return Err(CliError::Usage("--nmax: must be at least 1".into()));
    }

    let multi = scenarios.len() > 1;
    let base = args.out.clone().unwrap_or_else(|| {
        PathBuf::from(format!("figure{}.{}", args.number, format.extension()))
    });
    for fs in &scenarios {
        let params = fs.params()?;
        let grid = match args.dt {
            Some(dt) => TimeGrid::new(fs.t_max, dt)
                .map_err(|e| CliError::Usage(format!("--dt: {e}")))?,
            None => TimeGrid::with_default_step(&params, fs.t_max)?,
        };
        let init = rabi_core::atom::make_atom_state(fs.init)?;
        let mut scenario = Scenario::new(params, init, grid);
        if let Some(nmax) = args.nmax {
            scenario = scenario.with_n_max(nmax);
        }
        let runs = run_engines(&engines, &scenario)?;
        let init_label = match fs.init {
            rabi_core::StatePrep::Excited => "excited",
            rabi_core::StatePrep::Ground => "ground",
            rabi_core::StatePrep::Custom(_) => "custom",
        };
        let content = match format {
            OutputFormat::Csv => output::render_csv(&scenario, &runs),
            OutputFormat::Json => output::render_json(&scenario, &runs, &engines, init_label),
        };
        let path = if multi {
            // label "fig4-d02" carries the variant after the dash
            let suffix = fs.label.split_once('-').map(|(_, s)| s).unwrap_or(fs.label);
            with_suffix(&base, suffix)
        } else {
            base.clone()
        };
        emit(Some(&path), &content)?;
    }
    Ok(())
}

fn parse_ratio_list(spec: &str, field: &str) -> Result<Vec<f64>, CliError> {
    let values: Result<Vec<f64>, _> = spec
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect();
    let values =
        values.map_err(|_| CliError::Usage(format!("{field}: cannot parse '{spec}'")))?;
    if values.is_empty() {
        return Err(CliError::Usage(format!("{field}: list is empty")));
    }
    Ok(values)
}

const SWEEP_HEADER: &str = "omega0,delta,g,delta_ratio,coupling_ratio,init,max_pe,dominant_period,period_uncertainty,peak_to_trough,envelope_dev";

pub fn sweep(args: SweepArgs) -> Result<(), CliError> {
    let delta_ratios = parse_ratio_list(&args.delta_ratios, "--delta-ratios")?;
    let coupling_ratios = parse_ratio_list(&args.coupling_ratios, "--coupling-ratios")?;
    for &dr in &delta_ratios {
        if !dr.is_finite() || dr >= 1.0 {
            return Err(CliError::Usage(format!(
                "--delta-ratios: ratio {dr} puts the cavity at or below zero frequency"
            )));
        }
    }
    for &cr in &coupling_ratios {
        if !(cr > 0.0 && cr.is_finite()) {
            return Err(CliError::Usage(format!(
                "--coupling-ratios: ratio {cr} must be positive"
            )));
        }
    }
    let init = match args.init.as_str() {
        "excited" => AtomState::excited(),
        "ground" => AtomState::ground(),
        other => {
            return Err(CliError::Usage(format!(
                "--init: expected excited or ground for sweeps (got '{other}')"
            )))
        }
    };
    if !(args.gt_max > 0.0 && args.gt_max.is_finite()) {
        return Err(CliError::Usage(format!(
            "--gt-max: must be positive (got {})",
            args.gt_max
        )));
    }

    let registry = EngineRegistry::builtin();
    let engine = registry.get("factored").expect("factored engine registered");
    let mut out = String::new();
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for &cr in &coupling_ratios {
        for &dr in &delta_ratios {
            let omega0 = 1.0 / cr;
            let delta = dr * omega0;
            let params = ModelParams::from_detuning(omega0, delta, 1.0)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let grid = TimeGrid::with_default_step(&params, args.gt_max)?;
            let scenario = Scenario::new(params, init, grid);
            let traj = engine.run(&scenario)?;
            let pe = traj.pe_series();
            let max_pe = pe.iter().copied().fold(f64::MIN, f64::max);

            let fast_window =
                ((2.0 * PI / params.sum_frequency()) / scenario.grid.dt()).round() as usize;
            let summary = find_extrema(&traj.times, &pe, fast_window.max(1))
                .map_err(|e| CliError::Runtime(e.to_string()))?;
            let (period, period_sd) = match summary.dominant_period {
                Some(est) => (est.period, est.uncertainty),
                None => (f64::NAN, f64::NAN),
            };
            let envelope_dev = if delta == 0.0 && init == AtomState::excited() {
                envelope_check(&traj.times, &pe, EnvelopeModel::Gaussian, params.g())
            } else {
                f64::NAN
            };

            let fmt_opt = |x: f64| {
                if x.is_nan() {
                    String::new()
                } else {
                    format!("{x:.16e}")
                }
            };
            out.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{},{:.16e},{},{},{:.16e},{}\n",
                omega0,
                delta,
                params.g(),
                dr,
                cr,
                args.init,
                max_pe,
                fmt_opt(period),
                fmt_opt(period_sd),
                summary.peak_to_trough,
                fmt_opt(envelope_dev),
            ));
        }
    }
    emit(args.out.as_deref(), &out)
}
