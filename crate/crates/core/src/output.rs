//! File formats: diagnostics CSV, final-state CSV, JSON report, and
//! whitespace-separated plot columns.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::dynamics::FlockState;
use crate::error::Result;
use crate::integrator::Trajectory;
use crate::observables::CSV_HEADER;
use crate::verification::TheoremReport;

/// 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_diagnostics_csv<W: Write>(out: W, traj: &Trajectory) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in &traj.records {
        w.write_record(r.to_row().iter().map(|&v| fmt_f64(v)))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_final_state_csv<W: Write>(out: W, s: &FlockState) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["i", "x", "v"])?;
    for (i, (x, v)) in s.x.iter().zip(&s.v).enumerate() {
        w.write_record([i.to_string(), fmt_f64(*x), fmt_f64(*v)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_report_json(path: &Path, report: &TheoremReport) -> Result<()> {
    let mut text = report.to_json()?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

/// Path of the per-agent position traces that accompany `plot_path`.
pub fn positions_path(plot_path: &Path) -> PathBuf {
    let stem = plot_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "plot".into());
    let name = match plot_path.extension() {
        Some(ext) => format!("{stem}_positions.{}", ext.to_string_lossy()),
        None => format!("{stem}_positions"),
    };
    plot_path.with_file_name(name)
}

/// Writes `t A E K p D F_max` columns to `path` and `t x_1 … x_N` to
/// [`positions_path`]. Header lines start with `#`.
pub fn emit_plot_data(traj: &Trajectory, path: &Path) -> Result<()> {
    let mut out = String::from("# t A E K p D F_max\n");
    for r in &traj.records {
        let cols = [
            r.t,
            r.amplitude,
            r.energy,
            r.kinetic,
            r.momentum,
            r.diameter,
            r.force_max,
        ];
        out.push_str(&cols.map(fmt_f64).join(" "));
        out.push('\n');
    }
    fs::write(path, out)?;

    let n = traj.states[0].len();
    let mut pos = String::from("# t");
    for i in 1..=n {
        pos.push_str(&format!(" x_{i}"));
    }
    pos.push('\n');
    for s in &traj.states {
        pos.push_str(&fmt_f64(s.t));
        for &x in &s.x {
            pos.push(' ');
            pos.push_str(&fmt_f64(x));
        }
        pos.push('\n');
    }
    fs::write(positions_path(path), pos)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(fmt_f64(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt_f64(0.1).parse::<f64>().unwrap(), 0.1);
        assert_eq!(fmt_f64(-2.5), "-2.5000000000000000e0");
    }

    #[test]
    fn positions_path_naming() {
        assert_eq!(
            positions_path(Path::new("out/plot.dat")),
            PathBuf::from("out/plot_positions.dat")
        );
        assert_eq!(positions_path(Path::new("trace")), PathBuf::from("trace_positions"));
    }
}
