//! Scalar diagnostics tracked along a trajectory: energies, momentum,
//! velocity amplitude, diameter, dissipation, the Lyapunov functional
//! `A + Φ(D)`, work of the wall force, and the a priori budgets they obey.

use serde::{Deserialize, Serialize};

use crate::dynamics::{FlockState, ModelSpec};
use crate::error::{FlockError, Result};
use crate::integrator::Trajectory;

/// One sampled row. Field order is the CSV column order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticsRecord {
    pub t: f64,
    /// Kinetic energy `(1/2N) Σ v_i²`.
    #[serde(rename = "K")]
    pub kinetic: f64,
    /// Potential energy `(1/N) Σ U(x_i)`.
    #[serde(rename = "P")]
    pub potential: f64,
    #[serde(rename = "E")]
    pub energy: f64,
    #[serde(rename = "p")]
    pub momentum: f64,
    /// Velocity amplitude `max v − min v`.
    #[serde(rename = "A")]
    pub amplitude: f64,
    /// Diameter `max x − min x`.
    #[serde(rename = "D")]
    pub diameter: f64,
    /// Dissipation `(1/2N²) Σ_ij φ(x_i − x_j)(v_i − v_j)²`, equal to `−dE/dt`.
    #[serde(rename = "I2")]
    pub dissipation: f64,
    /// Lyapunov functional `A + Φ(D)`.
    #[serde(rename = "L")]
    pub lyapunov: f64,
    /// Work of force `Σ v_i U′(x_i)`.
    #[serde(rename = "W")]
    pub work: f64,
    /// `max_i |F_i|`.
    #[serde(rename = "F_max")]
    pub force_max: f64,
    #[serde(rename = "F_mean")]
    pub force_mean: f64,
    /// Signed distance from the closest agent to its nearest wall.
    pub x_min_wall: f64,
    pub v_max: f64,
    pub v_min: f64,
    /// Energy at the start of the run.
    #[serde(rename = "G")]
    pub initial_energy: f64,
}

/// Column names in CSV order.
pub const CSV_HEADER: [&str; 16] = [
    "t", "K", "P", "E", "p", "A", "D", "I2", "L", "W", "F_max", "F_mean", "x_min_wall", "v_max",
    "v_min", "G",
];

impl DiagnosticsRecord {
    pub fn to_row(&self) -> [f64; 16] {
        [
            self.t,
            self.kinetic,
            self.potential,
            self.energy,
            self.momentum,
            self.amplitude,
            self.diameter,
            self.dissipation,
            self.lyapunov,
            self.work,
            self.force_max,
            self.force_mean,
            self.x_min_wall,
            self.v_max,
            self.v_min,
            self.initial_energy,
        ]
    }
}

/// Total energy `K + P` of a state.
pub fn energy(m: &ModelSpec, s: &FlockState) -> Result<f64> {
    let n = s.len() as f64;
    let kinetic = s.v.iter().map(|v| v * v).sum::<f64>() / (2.0 * n);
    let mut potential = 0.0;
    for &x in &s.x {
        potential += m.geometry.potential(&m.wall, x)?;
    }
    Ok(kinetic + potential / n)
}

/// Computes every diagnostic for one state. `initial_energy` is carried
/// through unchanged.
pub fn diagnostics(m: &ModelSpec, s: &FlockState, initial_energy: f64) -> Result<DiagnosticsRecord> {
    s.validate()?;
    let n = s.len();
    let nf = n as f64;

    let mut kinetic = 0.0;
    let mut potential = 0.0;
    let mut momentum = 0.0;
    let mut work = 0.0;
    let mut force_sum = 0.0;
    let mut force_max = 0.0f64;
    let mut x_min_wall = f64::INFINITY;
    let (mut v_max, mut v_min) = (f64::NEG_INFINITY, f64::INFINITY);
    let (mut x_max, mut x_min) = (f64::NEG_INFINITY, f64::INFINITY);

    for (&x, &v) in s.x.iter().zip(&s.v) {
        let f = m.force_at(x)?;
        kinetic += v * v;
        potential += m.geometry.potential(&m.wall, x)?;
        momentum += v;
        // U′ = −F
        work -= v * f;
        force_sum += f;
        force_max = force_max.max(f.abs());
        x_min_wall = x_min_wall.min(m.geometry.wall_distance(x));
        v_max = v_max.max(v);
        v_min = v_min.min(v);
        x_max = x_max.max(x);
        x_min = x_min.min(x);
    }
    kinetic /= 2.0 * nf;
    potential /= nf;

    let mut dissipation = 0.0;
    for i in 0..n {
        for j in 0..n {
            let dv = s.v[i] - s.v[j];
            dissipation += m.kernel.weight(s.x[i] - s.x[j]) * dv * dv;
        }
    }
    dissipation /= 2.0 * nf * nf;

    let amplitude = v_max - v_min;
    let diameter = x_max - x_min;
    let lyapunov = amplitude + m.kernel.primitive(diameter)?;

    Ok(DiagnosticsRecord {
        t: s.t,
        kinetic,
        potential,
        energy: kinetic + potential,
        momentum: momentum / nf,
        amplitude,
        diameter,
        dissipation,
        lyapunov,
        work,
        force_max,
        force_mean: force_sum / nf,
        x_min_wall,
        v_max,
        v_min,
        initial_energy,
    })
}

/// `Σ_i F_i²` for one state.
pub fn force_square_sum(m: &ModelSpec, s: &FlockState) -> Result<f64> {
    let mut total = 0.0;
    for &x in &s.x {
        let f = m.force_at(x)?;
        total += f * f;
    }
    Ok(total)
}

/// Residuals `dE/dt + I₂` at interior samples, with `dE/dt` from central
/// differences on the sample grid.
pub fn dissipation_residual(traj: &Trajectory) -> Result<Vec<f64>> {
    let r = &traj.records;
    if r.len() < 3 {
        return Err(FlockError::InvalidInput(format!(
            "dissipation residual needs at least 3 samples, got {}",
            r.len()
        )));
    }
    Ok(r
        .windows(3)
        .map(|w| (w[2].energy - w[0].energy) / (w[2].t - w[0].t) + w[1].dissipation)
        .collect())
}

/// Cumulative trapezoid integral of `f` over the sample grid, starting at 0.
pub fn cumulative_trapezoid(times: &[f64], values: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(times.len());
    let mut acc = 0.0;
    for k in 0..times.len() {
        if k > 0 {
            acc += 0.5 * (times[k] - times[k - 1]) * (values[k] + values[k - 1]);
        }
        out.push(acc);
    }
    out
}

/// Outcome of an inequality checked at every sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BudgetCheck {
    pub passed: bool,
    /// Largest observed `lhs − rhs` before the tolerance is applied.
    pub worst_excess: f64,
    pub tolerance: f64,
}

impl BudgetCheck {
    fn from_excesses(excesses: impl Iterator<Item = f64>, tolerance: f64) -> Self {
        let worst_excess = excesses.fold(f64::NEG_INFINITY, f64::max);
        BudgetCheck {
            passed: worst_excess <= tolerance,
            worst_excess,
            tolerance,
        }
    }
}

fn scale(x: f64) -> f64 {
    x.abs().max(1.0)
}

/// `E(t_{k+1}) ≤ E(t_k) + 1e−9·max(1, |E(0)|)`.
pub fn energy_monotone(traj: &Trajectory) -> BudgetCheck {
    let r = &traj.records;
    let tol = 1e-9 * scale(r[0].energy);
    BudgetCheck::from_excesses(r.windows(2).map(|w| w[1].energy - w[0].energy), tol)
}

/// `max_i |v_i| ≤ √(2NG)`.
pub fn velocity_bound(traj: &Trajectory) -> BudgetCheck {
    let n = traj.states[0].len() as f64;
    let bound = (2.0 * n * traj.records[0].initial_energy).sqrt();
    BudgetCheck::from_excesses(
        traj.records
            .iter()
            .map(|r| r.v_max.abs().max(r.v_min.abs()) - bound),
        1e-9,
    )
}

/// `D(t) ≤ 2√(2NG)·t + D(0)`.
pub fn diameter_growth(traj: &Trajectory) -> BudgetCheck {
    let n = traj.states[0].len() as f64;
    let r0 = traj.records[0];
    let speed = 2.0 * (2.0 * n * r0.initial_energy).sqrt();
    BudgetCheck::from_excesses(
        traj.records
            .iter()
            .map(|r| r.diameter - (speed * (r.t - r0.t) + r0.diameter)),
        1e-9,
    )
}

/// `L(t) ≤ L(0) + force_factor·∫₀^t F_max ds`, tolerance `rel_tol·max(1, L(0))`.
///
/// On the half-line every wall force is nonnegative and `force_factor = 1`;
/// with two opposing walls the amplitude can be driven by the spread of the
/// forces and the factor is 2.
pub fn lyapunov_budget(traj: &Trajectory, force_factor: f64, rel_tol: f64) -> BudgetCheck {
    let l0 = traj.records[0].lyapunov;
    BudgetCheck::from_excesses(
        traj.records
            .iter()
            .zip(&traj.force_integrals)
            .map(|(r, fi)| r.lyapunov - (l0 + force_factor * fi.max)),
        rel_tol * scale(l0),
    )
}

/// `|p(t) − p(0) − ∫₀^t F_mean ds| ≤ 1e−4·max(1, |p(0)| + 1)`.
pub fn momentum_identity(traj: &Trajectory) -> BudgetCheck {
    let p0 = traj.records[0].momentum;
    BudgetCheck::from_excesses(
        traj.records
            .iter()
            .zip(&traj.force_integrals)
            .map(|(r, fi)| (r.momentum - p0 - fi.mean).abs()),
        1e-4 * scale(p0.abs() + 1.0),
    )
}

/// `p` nondecreasing up to 1e−9 (half-line only).
pub fn momentum_monotone(traj: &Trajectory) -> BudgetCheck {
    BudgetCheck::from_excesses(
        traj.records
            .windows(2)
            .map(|w| w[0].momentum - w[1].momentum),
        1e-9,
    )
}

/// `K ≤ G` at every sample.
pub fn kinetic_below_initial_energy(traj: &Trajectory) -> BudgetCheck {
    let g = traj.records[0].initial_energy;
    BudgetCheck::from_excesses(
        traj.records.iter().map(|r| r.kinetic - g),
        1e-9 * scale(g),
    )
}
