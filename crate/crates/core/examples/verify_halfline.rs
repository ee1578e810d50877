//! Checks the half-line claims for a flock moving away from the wall and
//! for one thrown into it.
//!
//!     cargo run --release --example verify_halfline

use flockwall::verification::{ClaimStatus, RunPlan};
use flockwall::{scenarios, verify_halfline};

fn main() -> flockwall::Result<()> {
    for sc in [scenarios::canonical_halfline(), scenarios::halfline_inbound()] {
        let model = sc.model()?;
        let s0 = sc.initial_state()?;
        let plan: RunPlan = sc.config.plan();
        let report = verify_halfline(&model, &s0, &plan, &sc.config.thresholds)?;

        println!("== {} (p0 = {:.4})", sc.name, report.initial_momentum);
        for c in &report.claims {
            let mark = match c.status {
                ClaimStatus::Pass => "ok  ",
                ClaimStatus::Fail => "FAIL",
                ClaimStatus::NotApplicable => "n/a ",
            };
            println!("  {mark} {:<30} {:>12.4e}  ({})", c.name, c.value, c.statement);
        }
        println!("  min wall distance {:.4}", report.min_wall_distance);
        if let Some(t) = report.escape_time {
            println!("  escape time       {t:.2}");
        }
        if let Some(fit) = report.fit {
            println!("  A(t) ~ {:.3} exp(-{:.4} t), r2 = {:.5}", fit.c, fit.delta, fit.r_squared);
        }
        println!("  settlement        {:?}", report.settlement_mode);
    }
    Ok(())
}
