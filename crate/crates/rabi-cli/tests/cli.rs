//! End-to-end checks of the binary: flag contract, output formats,
//! determinism, and exit codes.

use std::process::{Command, Output};

fn rabi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rabi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const HEADER: &str =
    "t,g_t,delta_t,pe_factored,pe_direct,pe_jc,pe_oracle,l_raw,m_raw,gamma_k,trace_err,herm_err,warn";

#[test]
fn simulate_emits_the_documented_csv() {
    let out = rabi(&[
        "simulate", "--omega0", "10", "--delta", "0", "--tmax", "1", "--engines", "factored,jc",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), HEADER);
    let first = lines.next().unwrap();
    let fields: Vec<&str> = first.split(',').collect();
    assert_eq!(fields.len(), 13);
    // t = 0 row: factored and jc populated, direct and oracle empty
    assert_eq!(fields[0].parse::<f64>().unwrap(), 0.0);
    assert_eq!(fields[3].parse::<f64>().unwrap(), 1.0);
    assert_eq!(fields[4], "");
    assert_eq!(fields[5].parse::<f64>().unwrap(), 1.0);
    assert_eq!(fields[6], "");
    assert_eq!(fields[12], "0");
    assert!(text.lines().count() > 100);
}

#[test]
fn identical_configurations_are_byte_identical() {
    let args = [
        "simulate", "--omega0", "20", "--delta", "2", "--tmax", "2", "--engines",
        "factored,direct",
    ];
    let a = rabi(&args);
    let b = rabi(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_two_and_name_the_field() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["simulate", "--delta", "0", "--tmax", "1"],
            "--omega0",
        ),
        (
            &["simulate", "--omega0", "10", "--tmax", "1"],
            "--omega or --delta",
        ),
        (
            &[
                "simulate", "--omega0", "10", "--delta", "0", "--omega", "10", "--tmax", "1",
            ],
            "not both",
        ),
        (
            &["simulate", "--omega0", "10", "--omega", "-1", "--tmax", "1"],
            "omega",
        ),
        (
            &["simulate", "--omega0", "10", "--delta", "0", "--tmax", "1", "--engines", "warp"],
            "unknown engine",
        ),
        (
            &["simulate", "--omega0", "10", "--delta", "0", "--tmax", "1", "--init", "sideways"],
            "--init",
        ),
        (&["figure", "7"], "figure"),
    ];
    for (args, needle) in cases {
        let out = rabi(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        let err = stderr(&out);
        assert!(err.contains(needle), "args {args:?}: stderr {err}");
    }
}

#[test]
fn seed_free_flag_is_rejected() {
    let out = rabi(&[
        "simulate", "--seed-free", "--omega0", "10", "--delta", "0", "--tmax", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("reserved"));
}

#[test]
fn json_format_carries_meta_and_samples() {
    let out = rabi(&[
        "simulate", "--omega0", "10", "--delta", "0", "--tmax", "0.5", "--engines", "factored",
        "--format", "json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["meta"]["omega0"], 10.0);
    assert_eq!(doc["meta"]["delta"], 0.0);
    assert_eq!(doc["meta"]["g"], 1.0);
    assert_eq!(doc["meta"]["engines"][0], "factored");
    let samples = doc["samples"].as_array().unwrap();
    assert_eq!(
        samples.len() as u64,
        doc["meta"]["n_samples"].as_u64().unwrap()
    );
    assert_eq!(samples[0]["pe_factored"], 1.0);
    assert!(samples[0]["pe_oracle"].is_null());
    assert_eq!(samples[0]["warn"], false);
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(
        &cfg,
        "# sample configuration\nomega0 = 10\ndelta = 0\ntmax = 1\nengines = factored\n",
    )
    .unwrap();
    let out = rabi(&[
        "simulate", "--config", cfg.to_str().unwrap(), "--tmax", "0.25", "--format", "json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["meta"]["t_max"], 0.25);
    assert_eq!(doc["meta"]["omega0"], 10.0);

    let bad = dir.path().join("bad.cfg");
    std::fs::write(&bad, "omega0 = 10\nwarp = 9\n").unwrap();
    let out = rabi(&["simulate", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("warp"));
}

#[test]
fn figure_two_writes_oracle_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig2.csv");
    let out = rabi(&["figure", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), HEADER);
    let fields: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert!(!fields[3].is_empty(), "factored populated");
    assert_eq!(fields[4], "", "direct not part of this preset");
    assert!(!fields[5].is_empty(), "jc populated");
    assert!(!fields[6].is_empty(), "oracle populated");
}

#[test]
fn figure_four_writes_both_detunings() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("fig4.csv");
    let out = rabi(&["figure", "4", "--out", base.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(dir.path().join("fig4-d02.csv").exists());
    assert!(dir.path().join("fig4-d06.csv").exists());
}

#[test]
fn check_oracle_passes_on_defaults() {
    let out = rabi(&["check", "oracle"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 3);
    assert!(text.contains("checks passed"));
}

#[test]
fn check_all_passes_on_a_fresh_build() {
    let out = rabi(&["check", "all"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 11);
    assert_eq!(text.matches("FAIL").count(), 0);
    assert!(text.contains("11 checks passed"));
}

#[test]
fn check_oracle_fails_when_under_truncated() {
    let out = rabi(&["check", "oracle", "--nmax", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL oracle-internal"), "{text}");
    assert!(stderr(&out).contains("checks failed"));
}

#[test]
fn sweep_emits_one_summary_row_per_point() {
    let out = rabi(&[
        "sweep", "--delta-ratios", "0,0.5", "--coupling-ratios", "0.1", "--gt-max", "2",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("omega0,delta,g,delta_ratio,coupling_ratio,init,max_pe"));
    assert_eq!(lines.len(), 3);
    // resonant excited row carries an envelope deviation, detuned row does not
    let resonant: Vec<&str> = lines[1].split(',').collect();
    assert!(!resonant[10].is_empty());
    let detuned: Vec<&str> = lines[2].split(',').collect();
    assert!(detuned[10].is_empty());
}

#[test]
fn jc_engine_rejects_coherent_start_at_runtime() {
    let out = rabi(&[
        "simulate", "--omega0", "10", "--delta", "0", "--tmax", "1", "--init",
        "custom:0.5,0.5,0", "--engines", "jc",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("jc"));
}
