//! Fixed-step order of the propagated solution and adaptive-vs-reference
//! agreement.
//!
//!     cargo run --release --example convergence_study

use flockwall::integrator::{propagate_fixed, reference_integrate};
use flockwall::{integrate, scenarios};

fn main() -> flockwall::Result<()> {
    let mut sc = scenarios::canonical_halfline();
    sc.config.ic.n_agents = 8;
    sc.config.potential.theta = 0.0;
    let model = sc.model()?;
    let s0 = sc.initial_state()?;
    let t_end = 2.0;
    let truth = reference_integrate(&model, &s0, t_end, 1e-4, t_end)?;
    let truth = truth.last_state();

    let mut prev: Option<f64> = None;
    println!("{:>8} {:>12} {:>8}", "dt", "error", "order");
    for dt in [0.2, 0.1, 0.05, 0.025, 0.0125] {
        let s = propagate_fixed(&model, &s0, t_end, dt)?;
        let err = s
            .x
            .iter()
            .zip(&truth.x)
            .chain(s.v.iter().zip(&truth.v))
            .fold(0.0f64, |a, (p, q)| a.max((p - q).abs()));
        let order = prev.map(|e| (e / err).log2());
        println!("{dt:>8} {err:>12.3e} {:>8}", order.map(|o| format!("{o:.2}")).unwrap_or_default());
        prev = Some(err);
    }

    let mut sc = scenarios::canonical_halfline();
    sc.config.ic.n_agents = 8;
    let model = sc.model()?;
    let s0 = sc.initial_state()?;
    println!();
    for tol in [1e-6, 1e-8, 1e-10] {
        let mut c = sc.config.step_control();
        c.abs_tol = tol;
        c.rel_tol = tol;
        let adaptive = integrate(&model, &s0, 20.0, &c, 0.1)?;
        let reference = reference_integrate(&model, &s0, 20.0, 5e-4, 0.1)?;
        let mut diff = 0.0f64;
        for (a, b) in adaptive.states.iter().zip(&reference.states) {
            for i in 0..a.len() {
                diff = diff.max((a.x[i] - b.x[i]).abs()).max((a.v[i] - b.v[i]).abs());
            }
        }
        println!(
            "tol {tol:.0e}: {:>5} steps, max deviation from reference {diff:.3e}",
            adaptive.stats.accepted
        );
    }
    Ok(())
}
