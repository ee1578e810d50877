//! Named scenarios used by the examples, the test suites and the CLI docs.
//!
//! Each scenario is a [`RunConfig`], so the same runs can be reproduced from
//! a TOML file.

use crate::config::{
    parse_config, sample_initial_conditions, GeometryVariant, RunConfig,
};
use crate::dynamics::{FlockState, ModelSpec};
use crate::error::Result;

#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: &'static str,
    pub config: RunConfig,
}

impl Scenario {
    pub fn model(&self) -> Result<ModelSpec> {
        self.config.model()
    }

    pub fn initial_state(&self) -> Result<FlockState> {
        sample_initial_conditions(&self.config)
    }
}

fn base() -> RunConfig {
    RunConfig::default()
}

/// N = 16 on the half-line, `x₀ ~ U[0.5, 3]`, `v₀ ~ U[−0.5, 1]`, seed 42,
/// `φ = (1 + r²)^(−1/4)`, `ℓ = θ = 1`, horizon 200. Positive initial momentum.
pub fn canonical_halfline() -> Scenario {
    Scenario {
        name: "canonical_halfline",
        config: base(),
    }
}

/// N = 8 heading into the wall (negative initial momentum), horizon 400.
///
/// The velocity window is placed so that the collision with the wall
/// absorbs almost all of the momentum: `p` stays negative over the whole
/// horizon and the flock comes to rest just outside the wall range. Nearby
/// velocity windows bounce off and drift away with a small positive `p`.
pub fn halfline_inbound() -> Scenario {
    let mut c = base();
    c.ic.n_agents = 8;
    c.ic.x_low = 2.0;
    c.ic.x_high = 10.0;
    c.ic.v_low = -3.07;
    c.ic.v_high = -2.07;
    c.ic.seed = 2;
    c.integrator.t_end = 400.0;
    Scenario {
        name: "halfline_inbound",
        config: c,
    }
}

/// N = 16 on `[0, 10]`, mixed velocities `v₀ ~ U[−1, 1]`, seed 7, horizon 400.
pub fn canonical_interval() -> Scenario {
    let mut c = base();
    c.geometry.variant = GeometryVariant::Interval;
    c.geometry.a = Some(0.0);
    c.geometry.b = Some(10.0);
    c.ic.x_low = 1.0;
    c.ic.x_high = 9.0;
    c.ic.v_low = -1.0;
    c.ic.v_high = 1.0;
    c.ic.seed = 7;
    c.integrator.t_end = 400.0;
    Scenario {
        name: "canonical_interval",
        config: c,
    }
}

/// Same flock as [`halfline_inbound`] with the wall switched off (`θ = 0`):
/// agents cross `x = 0`.
pub fn halfline_no_wall() -> Scenario {
    let mut c = halfline_inbound().config;
    c.potential.theta = 0.0;
    c.integrator.t_end = 40.0;
    Scenario {
        name: "halfline_no_wall",
        config: c,
    }
}

/// Two agents in free space with `φ ≡ 1`: `v₂ − v₁ = e^{−t}`.
pub fn free_pair() -> Scenario {
    let text = r#"
[kernel]
family = "constant"
H = 1.0
[potential]
theta = 0.0
[integrator]
t_end = 20.0
[ic]
n_agents = 2
"#;
    Scenario {
        name: "free_pair",
        config: parse_config(text).expect("free pair config is valid"),
    }
}

/// Free pair with fixed initial data `x = (5, 6)`, `v = (0, 1)`.
pub fn free_pair_state() -> FlockState {
    FlockState::new(0.0, vec![5.0, 6.0], vec![0.0, 1.0]).expect("valid state")
}

/// The scenarios with active walls.
pub fn confined() -> Vec<Scenario> {
    vec![canonical_halfline(), halfline_inbound(), canonical_interval()]
}
