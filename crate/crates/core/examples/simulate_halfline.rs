//! Integrates the canonical half-line flock and writes its diagnostics.
//!
//!     cargo run --release --example simulate_halfline [out_dir]

use std::fs::File;
use std::path::PathBuf;

use flockwall::output::{write_diagnostics_csv, write_final_state_csv};
use flockwall::{integrate, scenarios};

fn main() -> flockwall::Result<()> {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("flockwall-simulate"));
    std::fs::create_dir_all(&out)?;

    let sc = scenarios::canonical_halfline();
    let model = sc.model()?;
    let s0 = sc.initial_state()?;
    let plan = sc.config.plan();
    let traj = integrate(&model, &s0, plan.t_end, &plan.control, plan.sample_every)?;

    println!("{:>7} {:>11} {:>11} {:>11} {:>11} {:>11}", "t", "A", "D", "E", "p", "F_max");
    for r in traj.records.iter().step_by(traj.len() / 20) {
        println!(
            "{:>7.2} {:>11.3e} {:>11.4} {:>11.6} {:>11.6} {:>11.3e}",
            r.t, r.amplitude, r.diameter, r.energy, r.momentum, r.force_max
        );
    }
    println!("{} accepted steps, {} rejected", traj.stats.accepted, traj.stats.rejected);

    write_diagnostics_csv(File::create(out.join("diagnostics.csv"))?, &traj)?;
    write_final_state_csv(File::create(out.join("final_state.csv"))?, traj.last_state())?;
    println!("wrote {}", out.display());
    Ok(())
}
