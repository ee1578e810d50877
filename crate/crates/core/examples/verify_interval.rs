//! Checks the claims for a flock confined to `[0, 10]`.
//!
//!     cargo run --release --example verify_interval

use flockwall::{scenarios, verify_interval};

fn main() -> flockwall::Result<()> {
    let sc = scenarios::canonical_interval();
    let model = sc.model()?;
    let s0 = sc.initial_state()?;
    let report = verify_interval(&model, &s0, &sc.config.plan(), &sc.config.thresholds)?;

    for c in &report.claims {
        println!("{:<15} {:<30} {:>12.4e} / {:.1e}", format!("{:?}", c.status), c.name, c.value, c.threshold);
    }
    println!("min wall distance  {:.4}", report.min_wall_distance);
    println!("int K dt           {:.6}", report.kinetic_integral);
    println!("int sum F^2 dt     {:.6}", report.force_sq_integral);
    let d: Vec<String> = report.final_wall_distances.iter().map(|d| format!("{d:.3}")).collect();
    println!("final wall distances [{}]", d.join(", "));
    Ok(())
}
