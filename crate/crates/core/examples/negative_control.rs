//! With the wall switched off the flock walks straight through `x = 0`, and
//! the no-collision check fails.
//!
//!     cargo run --release --example negative_control

use flockwall::verification::check_no_collision;
use flockwall::{integrate, scenarios};

fn main() -> flockwall::Result<()> {
    for sc in [scenarios::halfline_inbound(), scenarios::halfline_no_wall()] {
        let model = sc.model()?;
        let s0 = sc.initial_state()?;
        let plan = sc.config.plan();
        let traj = integrate(&model, &s0, plan.t_end, &plan.control, plan.sample_every)?;
        let (passed, min_distance) = check_no_collision(&traj, &model.geometry);
        println!(
            "{:<18} theta = {}  min wall distance = {:>10.4}  no_collision {}",
            sc.name,
            model.wall.theta,
            min_distance,
            if passed { "passes" } else { "FAILS" }
        );
    }
    Ok(())
}
