//! Time integration of [`FlockState`].
//!
//! The adaptive integrator uses the Cash-Karp embedded 4(5) pair and
//! advances with the fourth-order solution, whose weights are all
//! nonnegative: on the half-line a step therefore never lowers the momentum,
//! mirroring `dp/dt = F_mean ≥ 0`. Steps whose stages leave the open domain
//! are rejected and retried with half the step. Steps are cut to land on
//! every sample time exactly.
//!
//! [`reference_integrate`] is a plain fixed-step classic RK4 used as an
//! independent cross-check.

use serde::{Deserialize, Serialize};

use crate::dynamics::{rhs_into, FlockState, ModelSpec};
use crate::error::{FlockError, Result};
use crate::observables::{diagnostics, energy, DiagnosticsRecord};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct StepControl {
    pub dt_init: f64,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub dt_min: f64,
    pub dt_max: f64,
    /// Fraction of the wall-crossing time allowed per step.
    pub wall_safety: f64,
}

impl Default for StepControl {
    fn default() -> Self {
        StepControl {
            dt_init: 1e-3,
            abs_tol: 1e-8,
            rel_tol: 1e-8,
            dt_min: 1e-12,
            dt_max: 0.1,
            wall_safety: 0.25,
        }
    }
}

impl StepControl {
    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(FlockError::config(
                    format!("integrator.{name}"),
                    format!("must be positive, got {v}"),
                ))
            }
        };
        positive("dt_init", self.dt_init)?;
        positive("abs_tol", self.abs_tol)?;
        positive("rel_tol", self.rel_tol)?;
        positive("dt_min", self.dt_min)?;
        positive("dt_max", self.dt_max)?;
        if !(self.dt_min <= self.dt_init && self.dt_init <= self.dt_max) {
            return Err(FlockError::config(
                "integrator.dt_init",
                format!(
                    "need dt_min <= dt_init <= dt_max, got {} <= {} <= {}",
                    self.dt_min, self.dt_init, self.dt_max
                ),
            ));
        }
        if !(self.wall_safety > 0.0 && self.wall_safety < 1.0) {
            return Err(FlockError::config(
                "integrator.wall_safety",
                format!("must lie in (0, 1), got {}", self.wall_safety),
            ));
        }
        Ok(())
    }
}

/// Running integrals of the wall force, accumulated by the trapezoid rule
/// over every integrator step (not just over samples).
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct ForceIntegrals {
    /// `∫ F_mean dt`
    pub mean: f64,
    /// `∫ max_i |F_i| dt`
    pub max: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct IntegrationStats {
    pub accepted: usize,
    pub rejected: usize,
    /// Rejections caused by a stage leaving the open domain.
    pub domain_rejections: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub sample_times: Vec<f64>,
    pub states: Vec<FlockState>,
    pub records: Vec<DiagnosticsRecord>,
    /// Cumulative force integrals at each sample time.
    pub force_integrals: Vec<ForceIntegrals>,
    pub stats: IntegrationStats,
}

impl Trajectory {
    fn start(m: &ModelSpec, s0: &FlockState) -> Result<(Self, f64)> {
        let g = energy(m, s0)?;
        let rec = diagnostics(m, s0, g)?;
        Ok((
            Trajectory {
                sample_times: vec![s0.t],
                states: vec![s0.clone()],
                records: vec![rec],
                force_integrals: vec![ForceIntegrals::default()],
                stats: IntegrationStats::default(),
            },
            g,
        ))
    }

    fn push(&mut self, m: &ModelSpec, s: FlockState, g: f64, fi: ForceIntegrals) -> Result<()> {
        let rec = diagnostics(m, &s, g)?;
        self.sample_times.push(s.t);
        self.states.push(s);
        self.records.push(rec);
        self.force_integrals.push(fi);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.sample_times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sample_times.is_empty()
    }

    pub fn last_state(&self) -> &FlockState {
        self.states.last().expect("trajectory holds the initial state")
    }

    pub fn last_record(&self) -> &DiagnosticsRecord {
        self.records.last().expect("trajectory holds the initial record")
    }
}

mod cash_karp {
    // Autonomous system: stage times are not needed outside the tableau check.
    #[allow(dead_code)]
    pub const C: [f64; 6] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 3.0 / 5.0, 1.0, 7.0 / 8.0];
    pub const A: [[f64; 5]; 6] = [
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0],
        [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0],
        [3.0 / 10.0, -9.0 / 10.0, 6.0 / 5.0, 0.0, 0.0],
        [-11.0 / 54.0, 5.0 / 2.0, -70.0 / 27.0, 35.0 / 27.0, 0.0],
        [
            1631.0 / 55296.0,
            175.0 / 512.0,
            575.0 / 13824.0,
            44275.0 / 110592.0,
            253.0 / 4096.0,
        ],
    ];
    /// Fourth-order weights (propagated).
    pub const B4: [f64; 6] = [
        2825.0 / 27648.0,
        0.0,
        18575.0 / 48384.0,
        13525.0 / 55296.0,
        277.0 / 14336.0,
        1.0 / 4.0,
    ];
    /// Fifth-order weights (error estimate only).
    pub const B5: [f64; 6] = [
        37.0 / 378.0,
        0.0,
        250.0 / 621.0,
        125.0 / 594.0,
        0.0,
        512.0 / 1771.0,
    ];
}

/// Scratch buffers for one embedded step.
struct Stepper {
    kx: [Vec<f64>; 6],
    kv: [Vec<f64>; 6],
    xs: Vec<f64>,
    vs: Vec<f64>,
    // Mean and max-abs wall force at each stage.
    forces: [(f64, f64); 6],
}

enum Attempt {
    Done {
        state: FlockState,
        error: Vec<f64>,
        /// Stage quadrature of the mean and max-abs wall force over the step.
        force_increment: ForceIntegrals,
    },
    LeftDomain,
}

impl Stepper {
    fn new(n: usize) -> Self {
        Stepper {
            kx: std::array::from_fn(|_| vec![0.0; n]),
            kv: std::array::from_fn(|_| vec![0.0; n]),
            xs: vec![0.0; n],
            vs: vec![0.0; n],
            forces: [(0.0, 0.0); 6],
        }
    }

    fn stage_inside(m: &ModelSpec, x: &[f64]) -> bool {
        m.wall.is_disabled() || x.iter().all(|&xi| m.geometry.contains(xi))
    }

    /// One Cash-Karp step. `error` holds `y5 − y4` for positions then velocities.
    fn attempt(&mut self, m: &ModelSpec, s: &FlockState, dt: f64) -> Result<Attempt> {
        use cash_karp::{A, B4, B5};
        let n = s.len();
        for stage in 0..6 {
            for i in 0..n {
                let mut dx = 0.0;
                let mut dv = 0.0;
                for (j, &a) in A[stage].iter().enumerate().take(stage) {
                    dx += a * self.kx[j][i];
                    dv += a * self.kv[j][i];
                }
                self.xs[i] = s.x[i] + dt * dx;
                self.vs[i] = s.v[i] + dt * dv;
            }
            if !Self::stage_inside(m, &self.xs) {
                return Ok(Attempt::LeftDomain);
            }
            let (kx, kv) = (&mut self.kx[stage], &mut self.kv[stage]);
            rhs_into(m, &self.xs, &self.vs, kx, kv)?;
            self.forces[stage] = force_summary(m, &self.xs)?;
        }

        let mut x = vec![0.0; n];
        let mut v = vec![0.0; n];
        let mut error = vec![0.0; 2 * n];
        for i in 0..n {
            let (mut dx4, mut dv4, mut ex, mut ev) = (0.0, 0.0, 0.0, 0.0);
            for stage in 0..6 {
                dx4 += B4[stage] * self.kx[stage][i];
                dv4 += B4[stage] * self.kv[stage][i];
                let db = B5[stage] - B4[stage];
                ex += db * self.kx[stage][i];
                ev += db * self.kv[stage][i];
            }
            x[i] = s.x[i] + dt * dx4;
            v[i] = s.v[i] + dt * dv4;
            error[i] = dt * ex;
            error[n + i] = dt * ev;
        }
        if !Self::stage_inside(m, &x) {
            return Ok(Attempt::LeftDomain);
        }
        let mut force_increment = ForceIntegrals::default();
        for (b, f) in B4.iter().zip(&self.forces) {
            force_increment.mean += dt * b * f.0;
            force_increment.max += dt * b * f.1;
        }
        Ok(Attempt::Done {
            state: FlockState { t: s.t + dt, x, v },
            error,
            force_increment,
        })
    }
}

/// Result of a single embedded step.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedStep {
    pub state: FlockState,
    /// Max-norm of the difference between the embedded solutions.
    pub error_estimate: f64,
}

/// Takes one Cash-Karp 4(5) step of size `dt`.
///
/// Returns `Ok(None)` when a stage or the result leaves the open domain: the
/// step is rejected and the caller should retry with a smaller `dt`.
pub fn step_embedded(m: &ModelSpec, s: &FlockState, dt: f64) -> Result<Option<EmbeddedStep>> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(FlockError::InvalidInput(format!("dt must be positive, got {dt}")));
    }
    s.validate()?;
    s.check_domain(m)?;
    match Stepper::new(s.len()).attempt(m, s, dt)? {
        Attempt::LeftDomain => Ok(None),
        Attempt::Done { state, error, .. } => Ok(Some(EmbeddedStep {
            state,
            error_estimate: error.iter().fold(0.0, |a, e| a.max(e.abs())),
        })),
    }
}

/// Advances with fixed embedded steps and no error control; for order studies.
pub fn propagate_fixed(m: &ModelSpec, s0: &FlockState, t_end: f64, dt: f64) -> Result<FlockState> {
    let steps = step_count(s0.t, t_end, dt)?;
    let mut stepper = Stepper::new(s0.len());
    let mut s = s0.clone();
    for k in 1..=steps {
        match stepper.attempt(m, &s, dt)? {
            Attempt::Done { mut state, .. } => {
                state.t = s0.t + k as f64 * dt;
                s = state;
            }
            Attempt::LeftDomain => {
                return Err(FlockError::Domain {
                    x: f64::NAN,
                    domain: format!("{:?} (fixed step at t = {})", m.geometry, s.t),
                })
            }
        }
    }
    Ok(s)
}

fn step_count(t0: f64, t_end: f64, dt: f64) -> Result<usize> {
    if !(dt > 0.0) || !(t_end > t0) {
        return Err(FlockError::InvalidInput(format!(
            "need dt > 0 and t_end > t0, got dt = {dt}, [{t0}, {t_end}]"
        )));
    }
    let ratio = (t_end - t0) / dt;
    let steps = ratio.round();
    if (ratio - steps).abs() > 1e-6 * ratio.max(1.0) {
        return Err(FlockError::InvalidInput(format!(
            "fixed step {dt} does not divide the span {}",
            t_end - t0
        )));
    }
    Ok(steps as usize)
}

/// Sample times after `t0`, ending exactly at `t_end`.
fn sample_grid(t0: f64, t_end: f64, every: f64) -> Vec<f64> {
    let intervals = ((t_end - t0) / every - 1e-9).ceil().max(1.0) as usize;
    (1..=intervals)
        .map(|k| {
            if k == intervals {
                t_end
            } else {
                t0 + k as f64 * every
            }
        })
        .collect()
}

fn force_summary(m: &ModelSpec, x: &[f64]) -> Result<(f64, f64)> {
    let mut sum = 0.0;
    let mut max = 0.0f64;
    for &xi in x {
        let f = m.force_at(xi)?;
        sum += f;
        max = max.max(f.abs());
    }
    Ok((sum / x.len() as f64, max))
}

const SAFETY: f64 = 0.9;
const FAC_MIN: f64 = 0.2;
const FAC_MAX: f64 = 5.0;
// PI controller exponents for an order-4 error estimate.
const ALPHA: f64 = 0.7 / 5.0;
const BETA: f64 = 0.4 / 5.0;

/// Adaptive integration from `s0.t` to `t_end`, sampling diagnostics every
/// `sample_every` time units (plus `t_end`).
pub fn integrate(
    m: &ModelSpec,
    s0: &FlockState,
    t_end: f64,
    c: &StepControl,
    sample_every: f64,
) -> Result<Trajectory> {
    c.validate()?;
    m.validate()?;
    s0.validate()?;
    s0.check_domain(m)?;
    if !(t_end > s0.t && t_end.is_finite()) {
        return Err(FlockError::InvalidInput(format!(
            "t_end must exceed the initial time {}, got {t_end}",
            s0.t
        )));
    }
    if !(sample_every > 0.0 && sample_every.is_finite()) {
        return Err(FlockError::InvalidInput(format!(
            "sample_every must be positive, got {sample_every}"
        )));
    }

    let (mut traj, g) = Trajectory::start(m, s0)?;
    let grid = sample_grid(s0.t, t_end, sample_every);
    let mut stepper = Stepper::new(s0.len());
    let mut s = s0.clone();
    let mut integrals = ForceIntegrals::default();
    let mut dt = c.dt_init;
    let mut err_prev: f64 = 1e-4;
    let mut just_rejected = false;

    for &target in &grid {
        while s.t < target {
            let mut cap = c.dt_max;
            if !m.wall.is_disabled() {
                let dist = s
                    .x
                    .iter()
                    .map(|&x| m.geometry.wall_distance(x))
                    .fold(f64::INFINITY, f64::min);
                let speed = s.v.iter().fold(0.0f64, |a, v| a.max(v.abs()));
                cap = cap.min(c.wall_safety * dist / (speed + 1.0));
            }
            let proposal = dt.min(cap);
            if proposal < c.dt_min {
                return Err(FlockError::Stiffness {
                    t: s.t,
                    dt_min: c.dt_min,
                });
            }
            let remaining = target - s.t;
            let truncated = proposal >= remaining;
            let h = if truncated { remaining } else { proposal };

            match stepper.attempt(m, &s, h)? {
                Attempt::LeftDomain => {
                    traj.stats.rejected += 1;
                    traj.stats.domain_rejections += 1;
                    dt = 0.5 * h;
                    just_rejected = true;
                    if dt < c.dt_min {
                        return Err(FlockError::Stiffness {
                            t: s.t,
                            dt_min: c.dt_min,
                        });
                    }
                }
                Attempt::Done {
                    mut state,
                    error,
                    force_increment,
                } => {
                    let n = s.len();
                    let mut en = 0.0f64;
                    for i in 0..n {
                        let sx = c.abs_tol + c.rel_tol * s.x[i].abs().max(state.x[i].abs());
                        let sv = c.abs_tol + c.rel_tol * s.v[i].abs().max(state.v[i].abs());
                        en = en.max((error[i] / sx).abs()).max((error[n + i] / sv).abs());
                    }
                    if !en.is_finite() {
                        return Err(FlockError::NonFinite { t: s.t + h });
                    }
                    if en <= 1.0 {
                        if truncated {
                            state.t = target;
                        }
                        if state.x.iter().chain(&state.v).any(|z| !z.is_finite()) {
                            return Err(FlockError::NonFinite { t: state.t });
                        }
                        integrals.mean += force_increment.mean;
                        integrals.max += force_increment.max;
                        traj.stats.accepted += 1;

                        let mut fac = if en == 0.0 {
                            FAC_MAX
                        } else {
                            SAFETY * en.powf(-ALPHA) * err_prev.powf(BETA)
                        };
                        fac = fac.clamp(FAC_MIN, FAC_MAX);
                        if just_rejected {
                            fac = fac.min(1.0);
                        }
                        let next = h * fac;
                        dt = if truncated { next.max(dt) } else { next };
                        dt = dt.min(c.dt_max);
                        err_prev = en.max(1e-4);
                        just_rejected = false;
                        s = state;
                    } else {
                        traj.stats.rejected += 1;
                        dt = h * (SAFETY * en.powf(-0.2)).max(FAC_MIN);
                        just_rejected = true;
                        if dt < c.dt_min {
                            return Err(FlockError::Stiffness {
                                t: s.t,
                                dt_min: c.dt_min,
                            });
                        }
                    }
                }
            }
        }
        traj.push(m, s.clone(), g, integrals)?;
    }
    Ok(traj)
}

/// Classic fixed-step RK4, sampling every `sample_every` (a multiple of
/// `dt_fixed`). Any stage outside the domain is fatal.
pub fn reference_integrate(
    m: &ModelSpec,
    s0: &FlockState,
    t_end: f64,
    dt_fixed: f64,
    sample_every: f64,
) -> Result<Trajectory> {
    m.validate()?;
    s0.validate()?;
    s0.check_domain(m)?;
    let steps = step_count(s0.t, t_end, dt_fixed)?;
    let per_sample = step_count(0.0, sample_every, dt_fixed)?.max(1);

    let (mut traj, g) = Trajectory::start(m, s0)?;
    let n = s0.len();
    let mut k: [(Vec<f64>, Vec<f64>); 4] = std::array::from_fn(|_| (vec![0.0; n], vec![0.0; n]));
    let mut xs = vec![0.0; n];
    let mut vs = vec![0.0; n];
    let mut s = s0.clone();
    let mut integrals = ForceIntegrals::default();
    let h = dt_fixed;

    for step in 1..=steps {
        let (k1, rest) = k.split_at_mut(1);
        rhs_into(m, &s.x, &s.v, &mut k1[0].0, &mut k1[0].1)?;
        let mut stage_forces = [force_summary(m, &s.x)?; 4];
        let mut prev = &k1[0];
        for (stage, coef) in [0.5, 0.5, 1.0].into_iter().enumerate() {
            for i in 0..n {
                xs[i] = s.x[i] + coef * h * prev.0[i];
                vs[i] = s.v[i] + coef * h * prev.1[i];
            }
            let (dx, dv) = (&mut rest[stage].0, &mut rest[stage].1);
            rhs_into(m, &xs, &vs, dx, dv)?;
            stage_forces[stage + 1] = force_summary(m, &xs)?;
            prev = &rest[stage];
        }
        for i in 0..n {
            s.x[i] += h / 6.0 * (k[0].0[i] + 2.0 * k[1].0[i] + 2.0 * k[2].0[i] + k[3].0[i]);
            s.v[i] += h / 6.0 * (k[0].1[i] + 2.0 * k[1].1[i] + 2.0 * k[2].1[i] + k[3].1[i]);
        }
        s.t = s0.t + step as f64 * h;
        if s.x.iter().chain(&s.v).any(|z| !z.is_finite()) {
            return Err(FlockError::NonFinite { t: s.t });
        }
        s.check_domain(m)?;
        for (w, f) in [1.0, 2.0, 2.0, 1.0].iter().zip(&stage_forces) {
            integrals.mean += h / 6.0 * w * f.0;
            integrals.max += h / 6.0 * w * f.1;
        }
        traj.stats.accepted += 1;
        if step % per_sample == 0 || step == steps {
            traj.push(m, s.clone(), g, integrals)?;
        }
    }
    Ok(traj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::CommunicationKernel;
    use crate::potentials::{ConfinementGeometry, WallPotential};

    fn halfline(kernel: CommunicationKernel, n: usize) -> ModelSpec {
        ModelSpec::new(kernel, WallPotential::default(), ConfinementGeometry::HalfLine, n).unwrap()
    }

    #[test]
    fn tableau_rows_are_consistent() {
        use cash_karp::*;
        for (row, c) in A.iter().zip(C) {
            assert!((row.iter().sum::<f64>() - c).abs() < 1e-15);
        }
        assert!((B4.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!((B5.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!(B4.iter().all(|&b| b >= 0.0));
    }

    #[test]
    fn free_agent_moves_exactly() {
        let m = halfline(CommunicationKernel::default(), 1);
        let s = FlockState::new(0.0, vec![2.0], vec![1.0]).unwrap();
        let step = step_embedded(&m, &s, 0.1).unwrap().unwrap();
        assert!((step.state.x[0] - 2.1).abs() <= 4.0 * f64::EPSILON);
        assert_eq!(step.state.v[0], 1.0);
        assert!(step.error_estimate < 1e-16);
    }

    #[test]
    fn aligned_pair_keeps_velocities() {
        let m = halfline(CommunicationKernel::default(), 2);
        let s = FlockState::new(0.0, vec![2.0, 3.5], vec![0.4, 0.4]).unwrap();
        let step = step_embedded(&m, &s, 0.05).unwrap().unwrap();
        assert_eq!(step.state.v, vec![0.4, 0.4]);
    }

    #[test]
    fn stage_leaving_domain_rejects() {
        let m = halfline(CommunicationKernel::default(), 1);
        let s = FlockState::new(0.0, vec![0.01], vec![-5.0]).unwrap();
        assert!(step_embedded(&m, &s, 0.1).unwrap().is_none());
    }

    #[test]
    fn constant_kernel_pair_decays_exponentially() {
        let m = ModelSpec::new(
            CommunicationKernel::constant(1.0).unwrap(),
            WallPotential::new(1.0, 0.0).unwrap(),
            ConfinementGeometry::HalfLine,
            2,
        )
        .unwrap();
        let s0 = FlockState::new(0.0, vec![5.0, 6.0], vec![0.0, 1.0]).unwrap();
        let traj = integrate(&m, &s0, 1.0, &StepControl::default(), 0.1).unwrap();
        let end = traj.last_state();
        assert_eq!(end.t, 1.0);
        assert!(((end.v[1] - end.v[0]) - (-1f64).exp()).abs() < 1e-6);
        for (t, s) in traj.sample_times.iter().zip(&traj.states) {
            assert!(((s.v[1] - s.v[0]) - (-t).exp()).abs() < 1e-6);
        }
    }

    #[test]
    fn resting_flock_is_fixed_point() {
        let m = halfline(CommunicationKernel::default(), 3);
        let s0 = FlockState::new(0.0, vec![2.0, 3.0, 5.0], vec![0.0; 3]).unwrap();
        let traj = integrate(&m, &s0, 5.0, &StepControl::default(), 0.5).unwrap();
        assert_eq!(traj.len(), 11);
        assert_eq!(traj.last_state().x, s0.x);
        assert_eq!(traj.last_state().v, s0.v);
    }

    #[test]
    fn sample_grid_ends_at_t_end() {
        let g = sample_grid(0.0, 200.0, 0.05);
        assert_eq!(g.len(), 4000);
        assert_eq!(*g.last().unwrap(), 200.0);
        let g = sample_grid(0.0, 1.05, 0.5);
        assert_eq!(g, vec![0.5, 1.0, 1.05]);
    }

    #[test]
    fn bad_arguments() {
        let m = halfline(CommunicationKernel::default(), 1);
        let s0 = FlockState::new(1.0, vec![2.0], vec![0.0]).unwrap();
        let c = StepControl::default();
        assert!(integrate(&m, &s0, 0.5, &c, 0.1).is_err());
        assert!(integrate(&m, &s0, 2.0, &c, 0.0).is_err());
        let bad = StepControl {
            wall_safety: 1.5,
            ..c
        };
        assert!(integrate(&m, &s0, 2.0, &bad, 0.1).is_err());
        assert!(step_embedded(&m, &s0, -0.1).is_err());
        assert!(reference_integrate(&m, &s0, 2.0, 0.3, 0.3).is_err());
    }

    #[test]
    fn integration_is_deterministic() {
        let m = halfline(CommunicationKernel::default(), 4);
        let s0 = FlockState::new(0.0, vec![0.3, 0.8, 1.5, 2.0], vec![-0.5, 0.2, 0.0, 1.0]).unwrap();
        let a = integrate(&m, &s0, 10.0, &StepControl::default(), 0.1).unwrap();
        let b = integrate(&m, &s0, 10.0, &StepControl::default(), 0.1).unwrap();
        assert_eq!(a, b);
    }
}
