//! The `flockwall` binary: exit codes, output files and determinism.

use std::fs;
use std::path::Path;
use std::process::Command;

use flockwall::observables::CSV_HEADER;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_flockwall"))
}

fn run(args: &[&str], config: Option<&Path>, out: &Path) -> i32 {
    let mut cmd = bin();
    cmd.args(args).arg("--quiet").arg("--out").arg(out);
    if let Some(c) = config {
        cmd.arg("--config").arg(c);
    }
    cmd.status().unwrap().code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

const SHORT: &str = "[integrator]\nt_end = 60.0\n";

#[test]
fn verify_passes_on_the_default_flock() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", SHORT);
    assert_eq!(run(&["verify"], Some(&cfg), &dir.path().join("v")), 0);
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("v/report.json")).unwrap()).unwrap();
    assert_eq!(report["geometry"], "halfline");
    assert!(report["final_A"].as_f64().unwrap() < 1e-2);
    assert!(report["min_wall_distance"].as_f64().unwrap() > 0.0);
    assert!(dir.path().join("v/config.toml").exists());
}

#[test]
fn config_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let unknown = write(dir.path(), "u.toml", "[kernel]\nfamily = \"power_law\"\ngamma = 1.0\n");
    assert_eq!(run(&["simulate"], Some(&unknown), &dir.path().join("a")), 2);
    let thin = write(dir.path(), "t.toml", "[kernel]\nbeta = 0.8\n");
    assert_eq!(run(&["verify"], Some(&thin), &dir.path().join("b")), 2);
    let inside = write(dir.path(), "i.toml", "[ic]\nx_low = 0.01\n");
    assert_eq!(run(&["simulate"], Some(&inside), &dir.path().join("c")), 2);
    assert_eq!(run(&["simulate"], Some(&dir.path().join("missing.toml")), &dir.path().join("d")), 2);
}

#[test]
fn failed_claims_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "nowall.toml",
        "[potential]\ntheta = 0.0\n[integrator]\nt_end = 20.0\n[ic]\nv_low = -2.0\nv_high = -1.0\n",
    );
    assert_eq!(run(&["verify"], Some(&cfg), &dir.path().join("v")), 1);
    let report = fs::read_to_string(dir.path().join("v/report.json")).unwrap();
    assert!(report.contains("\"no_collision\""));
}

#[test]
fn integration_failure_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "stiff.toml",
        "[integrator]\ndt_min = 0.05\ndt_init = 0.05\nabs_tol = 1e-14\nrel_tol = 1e-14\nt_end = 5.0\n",
    );
    assert_eq!(run(&["simulate"], Some(&cfg), &dir.path().join("s")), 3);
    assert_eq!(run(&["verify"], Some(&cfg), &dir.path().join("v")), 3);
}

#[test]
fn simulate_writes_full_precision_csv() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", "[integrator]\nt_end = 5.0\n");
    assert_eq!(run(&["simulate"], Some(&cfg), &dir.path().join("s")), 0);
    let text = fs::read_to_string(dir.path().join("s/diagnostics.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 51);
    for row in &rows {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells.len(), CSV_HEADER.len());
        for c in cells {
            let mantissa = c.trim_start_matches('-').split('e').next().unwrap();
            assert_eq!(mantissa.replace('.', "").len(), 17, "{c}");
            c.parse::<f64>().unwrap();
        }
    }
    let last: f64 = rows[50].split(',').next().unwrap().parse().unwrap();
    assert_eq!(last, 5.0);
    let state = fs::read_to_string(dir.path().join("s/final_state.csv")).unwrap();
    assert_eq!(state.lines().count(), 17);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", SHORT);
    for sub in ["simulate", "verify"] {
        for round in ["a", "b"] {
            assert_eq!(run(&[sub], Some(&cfg), &dir.path().join(format!("{sub}-{round}"))), 0);
        }
    }
    for (sub, file) in [
        ("simulate", "diagnostics.csv"),
        ("simulate", "final_state.csv"),
        ("verify", "report.json"),
    ] {
        let a = fs::read(dir.path().join(format!("{sub}-a/{file}"))).unwrap();
        let b = fs::read(dir.path().join(format!("{sub}-b/{file}"))).unwrap();
        assert_eq!(a, b, "{file}");
    }
}

#[test]
fn seed_flag_overrides_the_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", "[integrator]\nt_end = 1.0\n");
    let mut cmd = bin();
    cmd.args(["simulate", "--quiet", "--seed", "9", "--out"])
        .arg(dir.path().join("s9"))
        .arg("--config")
        .arg(&cfg);
    assert_eq!(cmd.status().unwrap().code(), Some(0));
    let written = fs::read_to_string(dir.path().join("s9/config.toml")).unwrap();
    let parsed = flockwall::config::parse_config(&written).unwrap();
    assert_eq!(parsed.ic.seed, 9);
    assert_eq!(run(&["simulate"], Some(&cfg), &dir.path().join("s42")), 0);
    assert_ne!(
        fs::read(dir.path().join("s9/final_state.csv")).unwrap(),
        fs::read(dir.path().join("s42/final_state.csv")).unwrap()
    );
}

#[test]
fn plot_data_has_seven_columns() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", "[integrator]\nt_end = 3.0\n");
    assert_eq!(run(&["plot-data"], Some(&cfg), &dir.path().join("p")), 0);
    let text = fs::read_to_string(dir.path().join("p/plot.dat")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "# t A E K p D F_max");
    for line in lines {
        assert!(!line.starts_with('#'));
        let cols: Vec<f64> = line.split_whitespace().map(|c| c.parse().unwrap()).collect();
        assert_eq!(cols.len(), 7);
    }
    let pos = fs::read_to_string(dir.path().join("p/plot_positions.dat")).unwrap();
    assert!(pos.starts_with("# t x_1"));
}

#[test]
fn single_point_sweep_matches_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", "[kernel]\nbeta = 0.4\n[integrator]\nt_end = 60.0\n");
    let sweep = write(
        dir.path(),
        "s.toml",
        "seeds = [42]\n[base.integrator]\nt_end = 60.0\n[[axes]]\nkey = \"kernel.beta\"\nvalues = [0.4]\n",
    );
    assert_eq!(run(&["verify"], Some(&cfg), &dir.path().join("v")), 0);
    assert_eq!(run(&["sweep"], Some(&sweep), &dir.path().join("s")), 0);
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("v/report.json")).unwrap()).unwrap();
    let csv = fs::read_to_string(dir.path().join("s/sweep.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "kernel.beta,seed,final_A,delta,min_wall_distance,status"
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert!(lines.next().is_none());
    assert_eq!(row[1], "42");
    assert_eq!(row[2].parse::<f64>().unwrap(), report["final_A"].as_f64().unwrap());
    assert_eq!(row[3].parse::<f64>().unwrap(), report["fit"]["delta"].as_f64().unwrap());
    assert_eq!(
        row[4].parse::<f64>().unwrap(),
        report["min_wall_distance"].as_f64().unwrap()
    );
    assert_eq!(row[5], "pass");
}

#[test]
fn sweep_order_ignores_parallelism() {
    let dir = tempfile::tempdir().unwrap();
    let body = "seeds = [5, 2]\n[base.integrator]\nt_end = 20.0\n[[axes]]\nkey = \"potential.theta\"\nvalues = [3.0, 1.0]\n[[axes]]\nkey = \"kernel.beta\"\nvalues = [0.5, 0.1]\n";
    let mut outputs = Vec::new();
    for par in [1, 3] {
        let cfg = write(dir.path(), &format!("s{par}.toml"), &format!("parallelism = {par}\n{body}"));
        let out = dir.path().join(format!("o{par}"));
        run(&["sweep"], Some(&cfg), &out);
        outputs.push(fs::read_to_string(out.join("sweep.csv")).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let keys: Vec<String> = outputs[0]
        .lines()
        .skip(1)
        .map(|l| l.split(',').take(3).collect::<Vec<_>>().join(","))
        .collect();
    assert_eq!(
        keys,
        [
            "1.0,0.1,2", "1.0,0.1,5", "1.0,0.5,2", "1.0,0.5,5", "3.0,0.1,2", "3.0,0.1,5",
            "3.0,0.5,2", "3.0,0.5,5"
        ]
    );
}
