//! Flag validation and key=value config files for `simulate`.
//!
//! Config files hold one `key=value` per line with `#` comments; any key
//! mirrors a flag, and flags override file values.

use std::collections::HashMap;
use std::path::PathBuf;

use num_complex::Complex64 as C64;

use rabi_core::engine::{EngineRegistry, Scenario, DEFAULT_N_MAX};
use rabi_core::{AtomDensity, AtomState, ModelParams, TimeGrid};

use crate::output::OutputFormat;
use crate::{CliError, SimulateArgs};

const CONFIG_KEYS: &[&str] = &[
    "omega0", "omega", "delta", "g", "init", "tmax", "dt", "engines", "nmax", "format", "out",
];

fn parse_config_file(path: &PathBuf) -> Result<HashMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("--config: cannot read {}: {e}", path.display())))?;
    let mut map = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Usage(format!(
                "--config: line {} is not key=value: '{raw}'",
                lineno + 1
            )));
        };
        let key = key.trim();
        if !CONFIG_KEYS.contains(&key) {
            return Err(CliError::Usage(format!(
                "--config: unknown key '{key}' on line {} (known: {})",
                lineno + 1,
                CONFIG_KEYS.join(", ")
            )));
        }
        map.insert(key.to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn parse_field<T: std::str::FromStr>(value: &str, field: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Usage(format!("{field}: cannot parse '{value}'")))
}

/// Everything `simulate` needs after flags and config agree.
pub struct ResolvedRun {
    pub scenario: Scenario,
    pub engines: Vec<String>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub init_label: String,
}

/// Parse the init selector: `excited`, `ground`, or
/// `custom:RHO_EE,RE_COH,IM_COH` (the ground population is 1 − RHO_EE).
pub fn parse_init(spec: &str) -> Result<AtomState, CliError> {
    match spec {
        "excited" => Ok(AtomState::excited()),
        "ground" => Ok(AtomState::ground()),
        custom if custom.starts_with("custom:") => {
            let body = &custom["custom:".len()..];
            let parts: Vec<&str> = body.split(',').collect();
            if parts.len() != 3 {
                return Err(CliError::Usage(format!(
                    "--init: custom needs three comma-separated numbers, got '{body}'"
                )));
            }
            let ee: f64 = parse_field(parts[0], "--init rho_ee")?;
            let re: f64 = parse_field(parts[1], "--init re_coh")?;
            let im: f64 = parse_field(parts[2], "--init im_coh")?;
            let coh = C64::new(re, im);
            let rho = AtomDensity {
                ee: C64::new(ee, 0.0),
                eg: coh,
                ge: coh.conj(),
                gg: C64::new(1.0 - ee, 0.0),
            };
            AtomState::custom(rho).map_err(|e| CliError::Usage(format!("--init: {e}")))
        }
        other => Err(CliError::Usage(format!(
            "--init: expected excited, ground, or custom:... (got '{other}')"
        ))),
    }
}

pub fn parse_format(spec: &str) -> Result<OutputFormat, CliError> {
    match spec {
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        other => Err(CliError::Usage(format!(
            "--format: expected csv or json (got '{other}')"
        ))),
    }
}

pub fn parse_engines(spec: &str) -> Result<Vec<String>, CliError> {
    let names: Vec<String> = spec
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if names.is_empty() {
        return Err(CliError::Usage("--engines: list is empty".into()));
    }
    let registry = EngineRegistry::builtin();
    for name in &names {
        if registry.get(name).is_none() {
            return Err(CliError::Usage(format!(
                "--engines: unknown engine '{name}' (available: {})",
                registry.names().join(", ")
            )));
        }
    }
    Ok(names)
}

/// Merge flags over config-file values and validate the combination.
pub fn resolve(args: SimulateArgs) -> Result<ResolvedRun, CliError> {
    let file = match &args.config {
        Some(path) => parse_config_file(path)?,
        None => HashMap::new(),
    };
    let from_file = |key: &str| file.get(key).cloned();

    let omega0 = match args.omega0 {
        Some(v) => Some(v),
        None => from_file("omega0")
            .map(|v| parse_field::<f64>(&v, "config omega0"))
            .transpose()?,
    };
    let omega = match args.omega {
        Some(v) => Some(v),
        None => from_file("omega")
            .map(|v| parse_field::<f64>(&v, "config omega"))
            .transpose()?,
    };
    let delta = match args.delta {
        Some(v) => Some(v),
        None => from_file("delta")
            .map(|v| parse_field::<f64>(&v, "config delta"))
            .transpose()?,
    };
    let g = match args.g {
        Some(v) => v,
        None => from_file("g")
            .map(|v| parse_field::<f64>(&v, "config g"))
            .transpose()?
            .unwrap_or(1.0),
    };
    let tmax = match args.tmax {
        Some(v) => Some(v),
        None => from_file("tmax")
            .map(|v| parse_field::<f64>(&v, "config tmax"))
            .transpose()?,
    };
    let dt = match args.dt {
        Some(v) => Some(v),
        None => from_file("dt")
            .map(|v| parse_field::<f64>(&v, "config dt"))
            .transpose()?,
    };
    let nmax = match args.nmax {
        Some(v) => v,
        None => from_file("nmax")
            .map(|v| parse_field::<usize>(&v, "config nmax"))
            .transpose()?
            .unwrap_or(DEFAULT_N_MAX),
    };
    let init_spec = args
        .init
        .or_else(|| from_file("init"))
        .unwrap_or_else(|| "excited".to_string());
    let engines_spec = args
        .engines
        .or_else(|| from_file("engines"))
        .unwrap_or_else(|| "factored,jc".to_string());
    let format_spec = args
        .format
        .or_else(|| from_file("format"))
        .unwrap_or_else(|| "csv".to_string());
    let out = args.out.or_else(|| from_file("out").map(PathBuf::from));

    let Some(omega0) = omega0 else {
        return Err(CliError::Usage("--omega0: required".into()));
    };
    let params = match (omega, delta) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "give exactly one of --omega or --delta, not both".into(),
            ))
        }
        (None, None) => {
            return Err(CliError::Usage(
                "give exactly one of --omega or --delta".into(),
            ))
        }
        (Some(omega), None) => ModelParams::new(omega0, omega, g)
            .map_err(|e| CliError::Usage(format!("--omega0/--omega/--g: {e}")))?,
        (None, Some(delta)) => ModelParams::from_detuning(omega0, delta, g)
            .map_err(|e| CliError::Usage(format!("--omega0/--delta/--g: {e}")))?,
    };

    let Some(tmax) = tmax else {
        return Err(CliError::Usage("--tmax: required".into()));
    };
    let grid = match dt {
        Some(dt) => TimeGrid::new(tmax, dt).map_err(|e| CliError::Usage(format!("--tmax/--dt: {e}")))?,
        None => TimeGrid::with_default_step(&params, tmax)
            .map_err(|e| CliError::Usage(format!("--tmax: {e}")))?,
    };
    if nmax == 0 {
        return Err(CliError::Usage("--nmax: must be at least 1".into()));
    }

    let init = parse_init(&init_spec)?;
    let engines = parse_engines(&engines_spec)?;
    let format = parse_format(&format_spec)?;

    Ok(ResolvedRun {
        scenario: Scenario::new(params, init, grid).with_n_max(nmax),
        engines,
        format,
        out,
        init_label: init_spec,
    })
}
