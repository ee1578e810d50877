//! Phase state and right-hand side of the confined Cucker-Smale system
//!
//! ```text
//! x_i' = v_i
//! v_i' = (1/N) Σ_j φ(x_i − x_j)(v_j − v_i) + F_i
//! ```
//!
//! with `F_i` the assembled wall force at `x_i`.

use serde::{Deserialize, Serialize};

use crate::error::{FlockError, Result};
use crate::kernels::CommunicationKernel;
use crate::potentials::{ConfinementGeometry, WallPotential};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlockState {
    pub t: f64,
    pub x: Vec<f64>,
    pub v: Vec<f64>,
}

impl FlockState {
    pub fn new(t: f64, x: Vec<f64>, v: Vec<f64>) -> Result<Self> {
        let s = FlockState { t, x, v };
        s.validate()?;
        Ok(s)
    }

    /// Shape and finiteness; domain membership is checked by [`Self::check_domain`].
    pub fn validate(&self) -> Result<()> {
        if self.x.is_empty() {
            return Err(FlockError::InvalidInput("flock needs at least one agent".into()));
        }
        if self.x.len() != self.v.len() {
            return Err(FlockError::InvalidInput(format!(
                "{} positions but {} velocities",
                self.x.len(),
                self.v.len()
            )));
        }
        if !self.t.is_finite() || self.x.iter().chain(&self.v).any(|z| !z.is_finite()) {
            return Err(FlockError::NonFinite { t: self.t });
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn check_domain(&self, m: &ModelSpec) -> Result<()> {
        if m.wall.is_disabled() {
            return Ok(());
        }
        match self.x.iter().find(|&&xi| !m.geometry.contains(xi)) {
            Some(&xi) => Err(FlockError::Domain {
                x: xi,
                domain: format!("{:?}", m.geometry),
            }),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub kernel: CommunicationKernel,
    pub wall: WallPotential,
    pub geometry: ConfinementGeometry,
    pub n_agents: usize,
}

impl ModelSpec {
    pub fn new(
        kernel: CommunicationKernel,
        wall: WallPotential,
        geometry: ConfinementGeometry,
        n_agents: usize,
    ) -> Result<Self> {
        let m = ModelSpec {
            kernel,
            wall,
            geometry,
            n_agents,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_agents == 0 {
            return Err(FlockError::InvalidInput("n_agents must be at least 1".into()));
        }
        self.kernel.validate()?;
        self.wall.validate()?;
        self.geometry.validate()?;
        if let ConfinementGeometry::Interval { a, b } = self.geometry {
            if self.wall.ell > 0.5 * (b - a) {
                log::warn!(
                    "reaction length {} exceeds half the interval width {}; wall ranges overlap",
                    self.wall.ell,
                    0.5 * (b - a)
                );
            }
        }
        Ok(())
    }

    /// Wall force on one agent.
    #[inline]
    pub fn force_at(&self, x: f64) -> Result<f64> {
        self.geometry.force(&self.wall, x)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseDerivative {
    pub dx: Vec<f64>,
    pub dv: Vec<f64>,
}

/// Evaluates the right-hand side into preallocated buffers.
///
/// The interaction sum for agent `i` runs over `j = 0..N` in index order so
/// results are bit-reproducible.
pub(crate) fn rhs_into(
    m: &ModelSpec,
    x: &[f64],
    v: &[f64],
    dx: &mut [f64],
    dv: &mut [f64],
) -> Result<()> {
    let n = x.len();
    let inv_n = 1.0 / n as f64;
    dx.copy_from_slice(v);
    for i in 0..n {
        let (xi, vi) = (x[i], v[i]);
        let mut acc = 0.0;
        for j in 0..n {
            acc += m.kernel.weight(xi - x[j]) * (v[j] - vi);
        }
        dv[i] = acc * inv_n + m.force_at(xi)?;
    }
    Ok(())
}

pub fn rhs(m: &ModelSpec, s: &FlockState) -> Result<PhaseDerivative> {
    s.validate()?;
    let n = s.len();
    let mut d = PhaseDerivative {
        dx: vec![0.0; n],
        dv: vec![0.0; n],
    };
    rhs_into(m, &s.x, &s.v, &mut d.dx, &mut d.dv)?;
    Ok(d)
}

/// `p = (1/N) Σ v_i`.
pub fn momentum(s: &FlockState) -> f64 {
    s.v.iter().sum::<f64>() / s.len() as f64
}

/// `(1/N) Σ F_i`, the rate of change of momentum.
pub fn mean_force(m: &ModelSpec, s: &FlockState) -> Result<f64> {
    let mut total = 0.0;
    for &xi in &s.x {
        total += m.force_at(xi)?;
    }
    Ok(total / s.len() as f64)
}
