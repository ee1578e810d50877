//! Writes gnuplot-ready columns for the interval scenario.
//!
//!     cargo run --release --example plot_data [out_dir]
//!     gnuplot -e "set logscale y; plot 'plot.dat' using 1:2 with lines"

use std::path::PathBuf;

use flockwall::output::{emit_plot_data, positions_path};
use flockwall::{integrate, scenarios};

fn main() -> flockwall::Result<()> {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("flockwall-plot"));
    std::fs::create_dir_all(&out)?;

    let sc = scenarios::canonical_interval();
    let model = sc.model()?;
    let plan = sc.config.plan();
    let traj = integrate(&model, &sc.initial_state()?, plan.t_end, &plan.control, plan.sample_every)?;

    let path = out.join("plot.dat");
    emit_plot_data(&traj, &path)?;
    println!("{}", path.display());
    println!("{}", positions_path(&path).display());
    Ok(())
}
