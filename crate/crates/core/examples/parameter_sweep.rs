//! Sweeps the kernel exponent and wall strength over three seeds.
//!
//!     cargo run --release --example parameter_sweep

use flockwall::cli::{sweep_rows, write_sweep_csv};
use flockwall::config::parse_sweep_config;

const SWEEP: &str = r#"
seeds = [1, 2, 3]
parallelism = 4

[base.integrator]
t_end = 100.0

[[axes]]
key = "kernel.beta"
values = [0.1, 0.25, 0.5]

[[axes]]
key = "potential.theta"
values = [0.5, 2.0]
"#;

fn main() -> flockwall::Result<()> {
    let sweep = parse_sweep_config(SWEEP)?;
    let rows = sweep_rows(&sweep)?;
    write_sweep_csv(std::io::stdout().lock(), &sweep, &rows)?;
    let passed = rows.iter().filter(|r| r.status == "pass").count();
    eprintln!("{passed}/{} runs pass", rows.len());
    Ok(())
}
