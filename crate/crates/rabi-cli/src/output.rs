//! Machine-readable renderings of a set of engine runs on a shared grid.
//!
//! The CSV column order is fixed:
//! `t,g_t,delta_t,pe_factored,pe_direct,pe_jc,pe_oracle,l_raw,m_raw,gamma_k,trace_err,herm_err,warn`.
//! Engines that were not run leave their fields empty. Floats carry 17
//! significant digits so identical configurations reproduce byte-identical
//! files. The JSON rendering carries the same keys per sample plus a
//! metadata header echoing the configuration.

use rabi_core::coeffs;
use rabi_core::engine::Scenario;
use rabi_core::propagate::Trajectory;

use serde_json::{json, Value};

/// Trace drift above which a row is flagged in the `warn` column.
pub const WARN_TRACE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

pub const CSV_HEADER: &str =
    "t,g_t,delta_t,pe_factored,pe_direct,pe_jc,pe_oracle,l_raw,m_raw,gamma_k,trace_err,herm_err,warn";

const ENGINE_COLUMNS: [&str; 4] = ["factored", "direct", "jc", "oracle"];

fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn by_name<'a>(runs: &'a [Trajectory], name: &str) -> Option<&'a Trajectory> {
    runs.iter().find(|t| t.engine == name)
}

struct Row {
    t: f64,
    g_t: f64,
    delta_t: f64,
    pe: [Option<f64>; 4],
    l_raw: Option<f64>,
    m_raw: Option<f64>,
    gamma_k: f64,
    trace_err: Option<f64>,
    herm_err: Option<f64>,
    warn: bool,
}

fn rows(scenario: &Scenario, runs: &[Trajectory]) -> Vec<Row> {
    let times = scenario.grid.times();
    let g = scenario.params.g();
    let delta = scenario.params.detuning();
    let factored = by_name(runs, "factored");

    times
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            let pe = ENGINE_COLUMNS
                .map(|name| by_name(runs, name).map(|traj| traj.records[i].pe));
            let map = factored.and_then(|traj| traj.records[i].map);
            let gamma_k = map.map(|m| m.gamma_k).unwrap_or_else(|| {
                coeffs::evaluate_coefficients(&scenario.params, t)
                    .map(|c| c.gamma_k)
                    .unwrap_or(f64::NAN)
            });
            let trace_err = runs
                .iter()
                .map(|traj| traj.records[i].trace_err)
                .reduce(f64::max);
            let herm_err = runs
                .iter()
                .map(|traj| traj.records[i].herm_err)
                .reduce(f64::max);
            Row {
                t,
                g_t: g * t,
                delta_t: delta * t,
                pe,
                l_raw: map.map(|m| m.l),
                m_raw: map.map(|m| m.m),
                gamma_k,
                trace_err,
                herm_err,
                warn: trace_err.map(|e| e > WARN_TRACE_TOL).unwrap_or(false),
            }
        })
        .collect()
}

pub fn render_csv(scenario: &Scenario, runs: &[Trajectory]) -> String {
    let mut out = String::with_capacity(scenario.grid.n_samples() * 256);
    out.push_str(CSV_HEADER);
    out.push('\n');
    let opt = |v: Option<f64>| v.map(fmt_float).unwrap_or_default();
    for r in rows(scenario, runs) {
        let fields = [
            fmt_float(r.t),
            fmt_float(r.g_t),
            fmt_float(r.delta_t),
            opt(r.pe[0]),
            opt(r.pe[1]),
            opt(r.pe[2]),
            opt(r.pe[3]),
            opt(r.l_raw),
            opt(r.m_raw),
            fmt_float(r.gamma_k),
            opt(r.trace_err),
            opt(r.herm_err),
            if r.warn { "1".into() } else { "0".to_string() },
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn render_json(
    scenario: &Scenario,
    runs: &[Trajectory],
    engines_requested: &[String],
    init_label: &str,
) -> String {
    let fallback: Vec<&str> = runs
        .iter()
        .filter(|t| t.used_fallback)
        .map(|t| t.engine)
        .collect();
    let meta = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "omega0": scenario.params.omega0(),
        "omega": scenario.params.omega(),
        "delta": scenario.params.detuning(),
        "g": scenario.params.g(),
        "init": init_label,
        "t_max": scenario.grid.t_max(),
        "dt": scenario.grid.dt(),
        "n_samples": scenario.grid.n_samples(),
        "n_max": scenario.n_max,
        "engines": engines_requested,
        "fallback": fallback,
    });
    let samples: Vec<Value> = rows(scenario, runs)
        .into_iter()
        .map(|r| {
            json!({
                "t": r.t,
                "g_t": r.g_t,
                "delta_t": r.delta_t,
                "pe_factored": r.pe[0],
                "pe_direct": r.pe[1],
                "pe_jc": r.pe[2],
                "pe_oracle": r.pe[3],
                "l_raw": r.l_raw,
                "m_raw": r.m_raw,
                "gamma_k": r.gamma_k,
                "trace_err": r.trace_err,
                "herm_err": r.herm_err,
                "warn": r.warn,
            })
        })
        .collect();
    let doc = json!({ "meta": meta, "samples": samples });
    let mut text = serde_json::to_string_pretty(&doc).expect("json rendering cannot fail");
    text.push('\n');
    text
}
