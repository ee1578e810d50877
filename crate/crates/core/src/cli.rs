//! Command-line front end: `simulate`, `verify`, `sweep` and `plot-data`.
//!
//! Exit codes: 0 all applicable claims pass (or the run succeeded), 1 a
//! claim failed or an output could not be written, 2 configuration error,
//! 3 integration failure.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::config::{
    parse_config, parse_sweep_config, sample_initial_conditions, OutputFormat, RunConfig,
    SweepConfig,
};
use crate::error::{FlockError, Result};
use crate::integrator::{integrate, Trajectory};
use crate::output::{
    emit_plot_data, fmt_f64, write_diagnostics_csv, write_final_state_csv, write_report_json,
};
use crate::verification::{verify_halfline, verify_interval, TheoremReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_INTEGRATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "flockwall", version, about = "Confined Cucker-Smale flocks: simulate and verify")]
pub struct Cli {
    /// TOML config (a sweep file for `sweep`); defaults apply when omitted.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Run directory; defaults to `<output.directory>/<command>-seed<seed>`.
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Overrides `ic.seed`.
    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Integrate and write diagnostics and the final state.
    Simulate,
    /// Integrate and check the long-time claims; writes report.json.
    Verify,
    /// Verify every point of a parameter sweep.
    Sweep,
    /// Integrate and write whitespace-separated plot columns.
    PlotData,
}

impl Command {
    fn label(self) -> &'static str {
        match self {
            Command::Simulate => "simulate",
            Command::Verify => "verify",
            Command::Sweep => "sweep",
            Command::PlotData => "plot-data",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub out: Option<PathBuf>,
    pub quiet: bool,
}

fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => Ok(fs::read_to_string(p)?),
        None => Ok(String::new()),
    }
}

pub fn load_run_config(path: Option<&Path>, seed: Option<u64>) -> Result<RunConfig> {
    let mut cfg = parse_config(&read_text(path)?)?;
    if let Some(seed) = seed {
        cfg.ic.seed = seed;
    }
    Ok(cfg)
}

pub fn load_sweep_config(path: Option<&Path>, seed: Option<u64>) -> Result<SweepConfig> {
    let mut cfg = parse_sweep_config(&read_text(path)?)?;
    if let Some(seed) = seed {
        cfg.base.ic.seed = seed;
        cfg.seeds = vec![seed];
    }
    Ok(cfg)
}

fn run_dir(opts: &Options, directory: &str, name: &str) -> Result<PathBuf> {
    let dir = opts
        .out
        .clone()
        .unwrap_or_else(|| Path::new(directory).join(name));
    fs::create_dir_all(&dir)?;
    Ok(dir)
}

fn is_config_error(e: &FlockError) -> bool {
    matches!(
        e,
        FlockError::Config { .. } | FlockError::ConfigSyntax(_) | FlockError::InvalidInput(_)
    )
}

fn report_error(e: &FlockError) -> i32 {
    eprintln!("error: {e}");
    if is_config_error(e) {
        EXIT_CONFIG
    } else {
        EXIT_FAILED
    }
}

fn simulate_trajectory(cfg: &RunConfig) -> std::result::Result<Trajectory, (i32, FlockError)> {
    let model = cfg.model().map_err(|e| (EXIT_CONFIG, e))?;
    let s0 = sample_initial_conditions(cfg).map_err(|e| (EXIT_CONFIG, e))?;
    let p = cfg.plan();
    integrate(&model, &s0, p.t_end, &p.control, p.sample_every).map_err(|e| {
        let code = if is_config_error(&e) {
            EXIT_CONFIG
        } else {
            EXIT_INTEGRATION
        };
        (code, e)
    })
}

fn fail_integration(code: i32, e: FlockError) -> i32 {
    match e.failure_time() {
        Some(t) => eprintln!("integration failed at t = {t}: {e}"),
        None => eprintln!("error: {e}"),
    }
    code
}

pub fn run_simulate(cfg: &RunConfig, opts: &Options) -> i32 {
    let traj = match simulate_trajectory(cfg) {
        Ok(t) => t,
        Err((code, e)) => return fail_integration(code, e),
    };
    let written = (|| -> Result<()> {
        let dir = run_dir(opts, &cfg.output.directory, &format!("simulate-seed{}", cfg.ic.seed))?;
        fs::write(dir.join("config.toml"), cfg.to_toml_string())?;
        if cfg.output.formats.contains(&OutputFormat::Csv) {
            write_diagnostics_csv(fs::File::create(dir.join("diagnostics.csv"))?, &traj)?;
            write_final_state_csv(fs::File::create(dir.join("final_state.csv"))?, traj.last_state())?;
        }
        if cfg.output.formats.contains(&OutputFormat::Plot) {
            emit_plot_data(&traj, &dir.join("plot.dat"))?;
        }
        Ok(())
    })();
    if let Err(e) = written {
        return report_error(&e);
    }
    if !opts.quiet {
        let r = traj.last_record();
        println!(
            "t = {}  A = {:.6e}  E = {:.6e}  min wall distance = {:.6e}",
            r.t,
            r.amplitude,
            r.energy,
            traj.records
                .iter()
                .map(|r| r.x_min_wall)
                .fold(f64::INFINITY, f64::min)
        );
    }
    EXIT_OK
}

/// Runs the verification matching the configured geometry.
pub fn verify_config(cfg: &RunConfig) -> Result<TheoremReport> {
    let model = cfg.model()?;
    let s0 = sample_initial_conditions(cfg)?;
    let plan = cfg.plan();
    if model.geometry.is_interval() {
        verify_interval(&model, &s0, &plan, &cfg.thresholds)
    } else {
        verify_halfline(&model, &s0, &plan, &cfg.thresholds)
    }
}

pub fn report_exit_code(report: &TheoremReport) -> i32 {
    if report.integration_error.is_some() {
        EXIT_INTEGRATION
    } else if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

pub fn run_verify(cfg: &RunConfig, opts: &Options) -> i32 {
    let report = match verify_config(cfg) {
        Ok(r) => r,
        Err(e) => return report_error(&e),
    };
    let written = (|| -> Result<()> {
        let dir = run_dir(opts, &cfg.output.directory, &format!("verify-seed{}", cfg.ic.seed))?;
        fs::write(dir.join("config.toml"), cfg.to_toml_string())?;
        write_report_json(&dir.join("report.json"), &report)
    })();
    if let Err(e) = written {
        return report_error(&e);
    }
    if !opts.quiet {
        for c in &report.claims {
            println!(
                "{:<15} {:<30} value = {:.6e}  threshold = {:.6e}",
                format!("{:?}", c.status).to_lowercase(),
                c.name,
                c.value,
                c.threshold
            );
        }
        if let Some(e) = &report.integration_error {
            eprintln!("integration failed: {e}");
        }
    }
    report_exit_code(&report)
}

/// One aggregated sweep row.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub values: Vec<String>,
    pub seed: u64,
    pub final_amplitude: f64,
    pub delta: Option<f64>,
    pub min_wall_distance: f64,
    pub status: &'static str,
}

fn value_text(v: &toml::Value) -> String {
    match v {
        toml::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Runs every sweep point on a pool of `parallelism` threads. Rows come back
/// in the order of [`SweepConfig::points`].
pub fn sweep_rows(sweep: &SweepConfig) -> Result<Vec<SweepRow>> {
    let points = sweep.points()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(sweep.parallelism)
        .build()
        .map_err(|e| FlockError::InvalidInput(e.to_string()))?;
    Ok(pool.install(|| {
        points
            .par_iter()
            .map(|p| {
                let values = p.values.iter().map(value_text).collect();
                match verify_config(&p.config) {
                    Ok(r) => SweepRow {
                        values,
                        seed: p.seed,
                        final_amplitude: r.final_amplitude,
                        delta: r.fit.map(|f| f.delta),
                        min_wall_distance: r.min_wall_distance,
                        status: match report_exit_code(&r) {
                            EXIT_OK => "pass",
                            EXIT_INTEGRATION => "error",
                            _ => "fail",
                        },
                    },
                    Err(_) => SweepRow {
                        values,
                        seed: p.seed,
                        final_amplitude: f64::NAN,
                        delta: None,
                        min_wall_distance: f64::NAN,
                        status: "error",
                    },
                }
            })
            .collect()
    }))
}

pub fn write_sweep_csv<W: std::io::Write>(out: W, sweep: &SweepConfig, rows: &[SweepRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = sweep.axes.iter().map(|a| a.key.clone()).collect();
    header.extend(
        ["seed", "final_A", "delta", "min_wall_distance", "status"]
            .iter()
            .map(|s| s.to_string()),
    );
    w.write_record(&header)?;
    for r in rows {
        let mut rec = r.values.clone();
        rec.push(r.seed.to_string());
        rec.push(fmt_f64(r.final_amplitude));
        rec.push(r.delta.map(fmt_f64).unwrap_or_default());
        rec.push(fmt_f64(r.min_wall_distance));
        rec.push(r.status.to_string());
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn run_sweep(sweep: &SweepConfig, opts: &Options) -> i32 {
    let rows = match sweep_rows(sweep) {
        Ok(r) => r,
        Err(e) => return report_error(&e),
    };
    let written = (|| -> Result<()> {
        let dir = run_dir(opts, &sweep.base.output.directory, "sweep")?;
        fs::write(
            dir.join("sweep.toml"),
            toml::to_string(sweep).expect("sweep config serializes"),
        )?;
        write_sweep_csv(fs::File::create(dir.join("sweep.csv"))?, sweep, &rows)
    })();
    if let Err(e) = written {
        return report_error(&e);
    }
    let passed = rows.iter().filter(|r| r.status == "pass").count();
    if !opts.quiet {
        println!("{passed}/{} runs passed", rows.len());
    }
    if passed == rows.len() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

pub fn run_plot_data(cfg: &RunConfig, opts: &Options) -> i32 {
    let traj = match simulate_trajectory(cfg) {
        Ok(t) => t,
        Err((code, e)) => return fail_integration(code, e),
    };
    let written = (|| -> Result<PathBuf> {
        let dir = run_dir(opts, &cfg.output.directory, &format!("plot-data-seed{}", cfg.ic.seed))?;
        fs::write(dir.join("config.toml"), cfg.to_toml_string())?;
        let path = dir.join("plot.dat");
        emit_plot_data(&traj, &path)?;
        Ok(path)
    })();
    match written {
        Ok(path) => {
            if !opts.quiet {
                println!("wrote {}", path.display());
            }
            EXIT_OK
        }
        Err(e) => report_error(&e),
    }
}

/// Parses arguments and dispatches; returns the process exit code.
pub fn main_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let opts = Options {
        out: cli.out.clone(),
        quiet: cli.quiet,
    };
    let path = cli.config.as_deref();
    if cli.command == Command::Sweep {
        return match load_sweep_config(path, cli.seed) {
            Ok(s) => run_sweep(&s, &opts),
            Err(e) => report_error_config(&e),
        };
    }
    let cfg = match load_run_config(path, cli.seed) {
        Ok(c) => c,
        Err(e) => return report_error_config(&e),
    };
    log::debug!("running {}", cli.command.label());
    match cli.command {
        Command::Simulate => run_simulate(&cfg, &opts),
        Command::Verify => run_verify(&cfg, &opts),
        Command::PlotData => run_plot_data(&cfg, &opts),
        Command::Sweep => unreachable!("handled above"),
    }
}

fn report_error_config(e: &FlockError) -> i32 {
    eprintln!("config error: {e}");
    EXIT_CONFIG
}
