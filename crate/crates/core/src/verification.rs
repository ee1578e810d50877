//! Finite-horizon checks of the long-time behavior of confined flocks.
//!
//! Limits `t → ∞` are replaced by statistics over a tail window (the last
//! `tail_fraction` of the run). Every check reports the measured value next
//! to the threshold it was compared against.

use serde::{Deserialize, Serialize};

use crate::dynamics::{momentum, FlockState, ModelSpec};
use crate::error::{FlockError, Result};
use crate::integrator::{integrate, IntegrationStats, StepControl, Trajectory};
use crate::observables::{self, cumulative_trapezoid, force_square_sum, BudgetCheck};
use crate::potentials::{ConfinementGeometry, WallPotential};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Thresholds {
    /// Pass level for the final velocity amplitude.
    pub align_eps: f64,
    pub settle_eps: f64,
    /// Tail window = last `tail_fraction` of the run.
    pub tail_fraction: f64,
    pub fit_min_points: usize,
    /// Relative tolerance of the Lyapunov budget.
    pub budget_tol: f64,
    /// Minimum coefficient of determination for the exponential fit.
    pub min_r_squared: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            align_eps: 1e-2,
            settle_eps: 1e-2,
            tail_fraction: 0.25,
            fit_min_points: 10,
            budget_tol: 1e-3,
            min_r_squared: 0.99,
        }
    }
}

impl Thresholds {
    pub fn validate(&self) -> Result<()> {
        let positive = |key: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(FlockError::config(
                    format!("thresholds.{key}"),
                    format!("must be positive, got {v}"),
                ))
            }
        };
        positive("align_eps", self.align_eps)?;
        positive("settle_eps", self.settle_eps)?;
        positive("budget_tol", self.budget_tol)?;
        if !(self.tail_fraction > 0.0 && self.tail_fraction < 1.0) {
            return Err(FlockError::config(
                "thresholds.tail_fraction",
                format!("must lie in (0, 1), got {}", self.tail_fraction),
            ));
        }
        if self.fit_min_points < 10 {
            return Err(FlockError::config(
                "thresholds.fit_min_points",
                format!("must be at least 10, got {}", self.fit_min_points),
            ));
        }
        if !(0.0..=1.0).contains(&self.min_r_squared) {
            return Err(FlockError::config(
                "thresholds.min_r_squared",
                format!("must lie in [0, 1], got {}", self.min_r_squared),
            ));
        }
        Ok(())
    }
}

/// Integration horizon for a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunPlan {
    pub control: StepControl,
    pub t_end: f64,
    pub sample_every: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub statement: String,
    pub status: ClaimStatus,
    pub value: f64,
    pub threshold: f64,
}

impl Claim {
    fn new(name: &str, statement: &str, passed: bool, value: f64, threshold: f64) -> Self {
        Claim {
            name: name.to_string(),
            statement: statement.to_string(),
            status: if passed {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            },
            value,
            threshold,
        }
    }

    fn not_applicable(name: &str, statement: &str, value: f64, threshold: f64) -> Self {
        Claim {
            status: ClaimStatus::NotApplicable,
            ..Claim::new(name, statement, false, value, threshold)
        }
    }

    fn from_budget(name: &str, statement: &str, b: BudgetCheck) -> Self {
        Claim::new(name, statement, b.passed, b.worst_excess, b.tolerance)
    }
}

/// Least-squares fit of `A(t) ≈ C e^{−δ t}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    #[serde(rename = "C")]
    pub c: f64,
    pub delta: f64,
    pub r_squared: f64,
    pub window: (f64, f64),
    pub points: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SettlementMode {
    /// Positions converge to fixed values.
    Settled,
    /// Relative positions converge while the flock moves off to the right.
    Drifting,
    Unsettled,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SettlementOutcome {
    /// Every position is constant over the tail and sits at or beyond `ℓ`.
    pub passed: bool,
    pub pairwise_passed: bool,
    pub mode: SettlementMode,
    /// Tail-window mean of each position.
    pub settled_positions: Vec<f64>,
    /// Tail-window mean of `x_i − x_j` for `i < j`, row-major.
    pub pairwise_limits: Vec<f64>,
    pub max_position_variation: f64,
    pub max_pairwise_variation: f64,
    pub min_mean_position: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalDecay {
    pub passed: bool,
    pub final_kinetic: f64,
    pub final_force_max: f64,
    pub kinetic_integral: f64,
    pub kinetic_last_half: f64,
    pub force_sq_integral: f64,
    pub force_sq_last_half: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub geometry: String,
    pub claims: Vec<Claim>,
    pub min_wall_distance: f64,
    #[serde(rename = "final_A")]
    pub final_amplitude: f64,
    pub fit: Option<FitResult>,
    pub settled_positions: Vec<f64>,
    pub pairwise_limits: Vec<f64>,
    pub escape_time: Option<f64>,
    pub kinetic_integral: f64,
    pub force_sq_integral: f64,
    pub initial_momentum: f64,
    pub final_diameter: f64,
    pub final_wall_distances: Vec<f64>,
    pub settlement_mode: Option<SettlementMode>,
    pub max_abs_work: Option<f64>,
    pub integration_error: Option<String>,
    pub stats: IntegrationStats,
}

impl TheoremReport {
    fn failed_integration(geometry: &str, p0: f64, err: &FlockError) -> Self {
        TheoremReport {
            geometry: geometry.to_string(),
            claims: vec![Claim::new(
                "integration",
                "the trajectory integrates to the end of the horizon",
                false,
                err.failure_time().unwrap_or(f64::NAN),
                f64::NAN,
            )],
            min_wall_distance: f64::NAN,
            final_amplitude: f64::NAN,
            fit: None,
            settled_positions: Vec::new(),
            pairwise_limits: Vec::new(),
            escape_time: None,
            kinetic_integral: f64::NAN,
            force_sq_integral: f64::NAN,
            initial_momentum: p0,
            final_diameter: f64::NAN,
            final_wall_distances: Vec::new(),
            settlement_mode: None,
            max_abs_work: None,
            integration_error: Some(err.to_string()),
            stats: IntegrationStats::default(),
        }
    }

    /// All applicable claims pass and the integration completed.
    pub fn all_passed(&self) -> bool {
        self.integration_error.is_none()
            && self.claims.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

fn tail_start_index(traj: &Trajectory, tail_fraction: f64) -> usize {
    let t0 = traj.sample_times[0];
    let t1 = *traj.sample_times.last().unwrap();
    let start = t1 - tail_fraction * (t1 - t0);
    traj.sample_times
        .iter()
        .position(|&t| t >= start)
        .unwrap_or(traj.len() - 1)
}

/// Passes iff every sampled agent stays strictly inside the domain.
/// Returns the smallest wall distance observed.
pub fn check_no_collision(traj: &Trajectory, geometry: &ConfinementGeometry) -> (bool, f64) {
    let min = traj
        .states
        .iter()
        .flat_map(|s| s.x.iter().map(|&x| geometry.wall_distance(x)))
        .fold(f64::INFINITY, f64::min);
    (min > 0.0, min)
}

/// Passes iff `A(T) < align_eps` and `A < 2 align_eps` over the tail window.
pub fn check_alignment(traj: &Trajectory, th: &Thresholds) -> (bool, f64) {
    let final_a = traj.last_record().amplitude;
    let tail_max = traj.records[tail_start_index(traj, th.tail_fraction)..]
        .iter()
        .map(|r| r.amplitude)
        .fold(0.0, f64::max);
    (final_a < th.align_eps && tail_max < 2.0 * th.align_eps, final_a)
}

/// Fits `log y = log C − δ t` by ordinary least squares, dropping samples
/// with `y ≤ 100 ε`.
pub fn fit_log_linear(times: &[f64], values: &[f64], min_points: usize) -> Option<FitResult> {
    let floor = 100.0 * f64::EPSILON;
    let pts: Vec<(f64, f64)> = times
        .iter()
        .zip(values)
        .filter(|(_, &y)| y > floor && y.is_finite())
        .map(|(&t, &y)| (t, y.ln()))
        .collect();
    if pts.len() < min_points.max(2) {
        return None;
    }
    let n = pts.len() as f64;
    let t_mean = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let y_mean = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut stt, mut sty, mut syy) = (0.0, 0.0, 0.0);
    for &(t, y) in &pts {
        stt += (t - t_mean) * (t - t_mean);
        sty += (t - t_mean) * (y - y_mean);
        syy += (y - y_mean) * (y - y_mean);
    }
    if stt == 0.0 {
        return None;
    }
    let slope = sty / stt;
    let intercept = y_mean - slope * t_mean;
    let ss_res: f64 = pts
        .iter()
        .map(|&(t, y)| {
            let r = y - (intercept + slope * t);
            r * r
        })
        .sum();
    let r_squared = if syy == 0.0 { 1.0 } else { (1.0 - ss_res / syy).max(0.0) };
    Some(FitResult {
        c: intercept.exp(),
        delta: -slope,
        r_squared,
        window: (pts[0].0, pts[pts.len() - 1].0),
        points: pts.len(),
    })
}

/// Exponential fit of the amplitude from `window_start` (or the start of the
/// tail window) to the end of the run. `None` when too few usable samples.
pub fn fit_exponential(
    traj: &Trajectory,
    th: &Thresholds,
    window_start: Option<f64>,
) -> Option<FitResult> {
    let first = match window_start {
        Some(t0) => traj.sample_times.iter().position(|&t| t >= t0)?,
        None => tail_start_index(traj, th.tail_fraction),
    };
    let amps: Vec<f64> = traj.records[first..].iter().map(|r| r.amplitude).collect();
    fit_log_linear(&traj.sample_times[first..], &amps, th.fit_min_points)
}

/// Earliest sample time after which every agent stays at or beyond `ℓ`.
/// Half-line only; `None` for other geometries or when the flock never
/// leaves the wall range for good.
pub fn detect_escape(
    traj: &Trajectory,
    geometry: &ConfinementGeometry,
    wall: &WallPotential,
) -> Option<f64> {
    if geometry.is_interval() {
        return None;
    }
    let inside = |s: &FlockState| s.x.iter().any(|&x| x < wall.ell);
    match traj.states.iter().rposition(inside) {
        None => Some(traj.sample_times[0]),
        Some(k) if k + 1 < traj.len() => Some(traj.sample_times[k + 1]),
        Some(_) => None,
    }
}

fn span(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

/// Tail-window settlement: absolute positions and pairwise differences.
pub fn check_settlement(traj: &Trajectory, wall: &WallPotential, th: &Thresholds) -> SettlementOutcome {
    let tail = &traj.states[tail_start_index(traj, th.tail_fraction)..];
    let n = tail[0].len();
    let count = tail.len() as f64;

    let mut settled_positions = Vec::with_capacity(n);
    let mut max_position_variation = 0.0f64;
    for i in 0..n {
        let (lo, hi) = span(tail.iter().map(|s| s.x[i]));
        max_position_variation = max_position_variation.max(hi - lo);
        settled_positions.push(tail.iter().map(|s| s.x[i]).sum::<f64>() / count);
    }
    let min_mean_position = settled_positions.iter().copied().fold(f64::INFINITY, f64::min);

    let mut pairwise_limits = Vec::with_capacity(n * (n - 1) / 2);
    let mut max_pairwise_variation = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            let (lo, hi) = span(tail.iter().map(|s| s.x[i] - s.x[j]));
            max_pairwise_variation = max_pairwise_variation.max(hi - lo);
            pairwise_limits.push(tail.iter().map(|s| s.x[i] - s.x[j]).sum::<f64>() / count);
        }
    }

    let passed = max_position_variation < th.settle_eps
        && min_mean_position >= wall.ell - th.settle_eps;
    let pairwise_passed = max_pairwise_variation < th.settle_eps;
    let drifting_right = momentum(traj.last_state()) > 0.0;
    let mode = if passed {
        SettlementMode::Settled
    } else if pairwise_passed && drifting_right {
        SettlementMode::Drifting
    } else {
        SettlementMode::Unsettled
    };
    SettlementOutcome {
        passed,
        pairwise_passed,
        mode,
        settled_positions,
        pairwise_limits,
        max_position_variation,
        max_pairwise_variation,
        min_mean_position,
    }
}

fn last_half_share(times: &[f64], values: &[f64]) -> (f64, f64) {
    let cumulative = cumulative_trapezoid(times, values);
    let total = *cumulative.last().unwrap();
    let t_half = 0.5 * (times[0] + times[times.len() - 1]);
    let k = times.iter().position(|&t| t >= t_half).unwrap_or(times.len() - 1);
    // Linear interpolation of the cumulative integral at the midpoint.
    let at_half = if k == 0 || times[k] == t_half {
        cumulative[k]
    } else {
        let w = (t_half - times[k - 1]) / (times[k] - times[k - 1]);
        cumulative[k - 1] + w * (cumulative[k] - cumulative[k - 1])
    };
    (total, total - at_half)
}

/// Decay of kinetic energy and wall forces inside an interval.
pub fn check_interval_decay(traj: &Trajectory, m: &ModelSpec, th: &Thresholds) -> Result<IntervalDecay> {
    if !m.geometry.is_interval() {
        return Err(FlockError::InvalidInput(
            "interval decay applies to interval geometry only".into(),
        ));
    }
    let kin: Vec<f64> = traj.records.iter().map(|r| r.kinetic).collect();
    let force_sq = traj
        .states
        .iter()
        .map(|s| force_square_sum(m, s))
        .collect::<Result<Vec<f64>>>()?;
    let (kinetic_integral, kinetic_last_half) = last_half_share(&traj.sample_times, &kin);
    let (force_sq_integral, force_sq_last_half) = last_half_share(&traj.sample_times, &force_sq);
    let leveled = |total: f64, last: f64| total == 0.0 || last < 0.1 * total;
    let last = traj.last_record();
    let passed = last.kinetic < th.align_eps * th.align_eps
        && leveled(kinetic_integral, kinetic_last_half)
        && leveled(force_sq_integral, force_sq_last_half)
        && last.force_max < th.align_eps;
    Ok(IntervalDecay {
        passed,
        final_kinetic: last.kinetic,
        final_force_max: last.force_max,
        kinetic_integral,
        kinetic_last_half,
        force_sq_integral,
        force_sq_last_half,
    })
}

/// Work of force against its Cauchy-Schwarz envelope `N √(2K) max_i |F_i|`
/// at every sample. Returns `(passed, max |W|, max |W| / envelope)`.
pub fn check_work_of_force(traj: &Trajectory) -> (bool, f64, f64) {
    let n = traj.states[0].len() as f64;
    let mut max_w = 0.0f64;
    let mut worst_ratio = 0.0f64;
    let mut ok = true;
    for r in &traj.records {
        let envelope = n * (2.0 * r.kinetic).sqrt() * r.force_max;
        let w = r.work.abs();
        ok &= w.is_finite() && w <= envelope * (1.0 + 1e-12);
        max_w = max_w.max(w);
        if envelope > 0.0 {
            worst_ratio = worst_ratio.max(w / envelope);
        }
    }
    (ok, max_w, worst_ratio)
}

fn common_claims(traj: &Trajectory, m: &ModelSpec, th: &Thresholds, force_factor: f64) -> Vec<Claim> {
    vec![
        Claim::from_budget(
            "energy_monotone",
            "total energy never increases",
            observables::energy_monotone(traj),
        ),
        Claim::from_budget(
            "kinetic_below_initial_energy",
            "kinetic energy stays below the initial energy",
            observables::kinetic_below_initial_energy(traj),
        ),
        Claim::from_budget(
            "velocity_bound",
            "every speed stays below sqrt(2 N G)",
            observables::velocity_bound(traj),
        ),
        Claim::from_budget(
            "diameter_growth",
            "the diameter grows at most linearly",
            observables::diameter_growth(traj),
        ),
        Claim::from_budget(
            "lyapunov_budget",
            "A + Phi(D) grows by at most the integrated maximal wall force",
            observables::lyapunov_budget(traj, force_factor, th.budget_tol),
        ),
        Claim::from_budget(
            "momentum_identity",
            "momentum changes by the integrated mean wall force",
            observables::momentum_identity(traj),
        ),
    ]
    .into_iter()
    .chain(std::iter::once({
        let (ok, min) = check_no_collision(traj, &m.geometry);
        Claim::new("no_collision", "no agent ever reaches a wall", ok, min, 0.0)
    }))
    .collect()
}

fn run(m: &ModelSpec, s0: &FlockState, plan: &RunPlan) -> Result<Trajectory> {
    integrate(m, s0, plan.t_end, &plan.control, plan.sample_every)
}

/// Runs and checks a half-line scenario: no collision, alignment, strong
/// flocking with the flock ending outside the wall range, and, when the
/// initial momentum is positive, escape in finite time followed by
/// exponential alignment.
pub fn verify_halfline(
    m: &ModelSpec,
    s0: &FlockState,
    plan: &RunPlan,
    th: &Thresholds,
) -> Result<TheoremReport> {
    if m.geometry.is_interval() {
        return Err(FlockError::InvalidInput("verify_halfline needs half-line geometry".into()));
    }
    if !m.kernel.is_fat_tail() {
        return Err(FlockError::InvalidInput(
            "half-line verification requires a fat-tailed kernel".into(),
        ));
    }
    th.validate()?;
    let p0 = momentum(s0);
    let traj = match run(m, s0, plan) {
        Ok(t) => t,
        Err(e @ (FlockError::Stiffness { .. } | FlockError::NonFinite { .. })) => {
            return Ok(TheoremReport::failed_integration("halfline", p0, &e))
        }
        Err(e) => return Err(e),
    };
    Ok(halfline_report(m, &traj, th))
}

/// Builds the half-line report from an existing trajectory.
pub fn halfline_report(m: &ModelSpec, traj: &Trajectory, th: &Thresholds) -> TheoremReport {
    let p0 = traj.records[0].momentum;
    let mut claims = common_claims(traj, m, th, 1.0);
    claims.push(Claim::from_budget(
        "momentum_monotone",
        "momentum never decreases",
        observables::momentum_monotone(traj),
    ));

    let (aligned, final_a) = check_alignment(traj, th);
    claims.push(Claim::new(
        "alignment",
        "velocity amplitude decays to zero",
        aligned,
        final_a,
        th.align_eps,
    ));

    let settlement = check_settlement(traj, &m.wall, th);
    claims.push(Claim::new(
        "strong_flocking",
        "pairwise distances converge",
        settlement.pairwise_passed,
        settlement.max_pairwise_variation,
        th.settle_eps,
    ));
    let tail = &traj.states[tail_start_index(traj, th.tail_fraction)..];
    let tail_min = tail
        .iter()
        .flat_map(|s| s.x.iter().copied())
        .fold(f64::INFINITY, f64::min);
    claims.push(Claim::new(
        "outside_wall_range",
        "every agent ends at or beyond the reaction length",
        tail_min >= m.wall.ell - th.settle_eps,
        tail_min,
        m.wall.ell - th.settle_eps,
    ));

    let escape_time = detect_escape(traj, &m.geometry, &m.wall);
    let mut fit = None;
    if p0 > 0.0 {
        claims.push(Claim::new(
            "escape",
            "the flock leaves the wall range in finite time",
            escape_time.is_some(),
            escape_time.unwrap_or(f64::NAN),
            traj.last_record().t,
        ));
        fit = fit_exponential(traj, th, escape_time);
        let ok = matches!(fit, Some(f) if f.delta > 0.0 && f.r_squared >= th.min_r_squared);
        claims.push(Claim::new(
            "exponential_alignment",
            "after escape the amplitude decays exponentially",
            escape_time.is_some() && ok,
            fit.map_or(f64::NAN, |f| f.delta),
            0.0,
        ));
    } else {
        claims.push(Claim::not_applicable(
            "escape",
            "the flock leaves the wall range in finite time (initial momentum > 0 only)",
            escape_time.unwrap_or(f64::NAN),
            traj.last_record().t,
        ));
        claims.push(Claim::not_applicable(
            "exponential_alignment",
            "after escape the amplitude decays exponentially (initial momentum > 0 only)",
            f64::NAN,
            0.0,
        ));
    }

    let last = traj.last_state();
    TheoremReport {
        geometry: "halfline".into(),
        min_wall_distance: check_no_collision(traj, &m.geometry).1,
        final_amplitude: final_a,
        fit,
        settled_positions: settlement.settled_positions,
        pairwise_limits: settlement.pairwise_limits,
        escape_time,
        kinetic_integral: integral_of(traj, |r| r.kinetic),
        force_sq_integral: force_sq_integral(traj, m),
        initial_momentum: p0,
        final_diameter: traj.last_record().diameter,
        final_wall_distances: last.x.iter().map(|&x| m.geometry.wall_distance(x)).collect(),
        settlement_mode: Some(settlement.mode),
        max_abs_work: None,
        integration_error: None,
        stats: traj.stats,
        claims,
    }
}

fn integral_of(traj: &Trajectory, f: impl Fn(&observables::DiagnosticsRecord) -> f64) -> f64 {
    let values: Vec<f64> = traj.records.iter().map(f).collect();
    *cumulative_trapezoid(&traj.sample_times, &values).last().unwrap()
}

fn force_sq_integral(traj: &Trajectory, m: &ModelSpec) -> f64 {
    let values: Vec<f64> = traj
        .states
        .iter()
        .map(|s| force_square_sum(m, s).unwrap_or(f64::NAN))
        .collect();
    *cumulative_trapezoid(&traj.sample_times, &values).last().unwrap()
}

/// Runs and checks an interval scenario: no collision, alignment, decay of
/// kinetic energy and wall forces, and boundedness of the work of force.
/// The diameter is reported without a verdict.
pub fn verify_interval(
    m: &ModelSpec,
    s0: &FlockState,
    plan: &RunPlan,
    th: &Thresholds,
) -> Result<TheoremReport> {
    if !m.geometry.is_interval() {
        return Err(FlockError::InvalidInput("verify_interval needs interval geometry".into()));
    }
    th.validate()?;
    let p0 = momentum(s0);
    let traj = match run(m, s0, plan) {
        Ok(t) => t,
        Err(e @ (FlockError::Stiffness { .. } | FlockError::NonFinite { .. })) => {
            return Ok(TheoremReport::failed_integration("interval", p0, &e))
        }
        Err(e) => return Err(e),
    };
    interval_report(m, &traj, th)
}

/// Builds the interval report from an existing trajectory.
pub fn interval_report(m: &ModelSpec, traj: &Trajectory, th: &Thresholds) -> Result<TheoremReport> {
    let mut claims = common_claims(traj, m, th, 2.0);
    let (aligned, final_a) = check_alignment(traj, th);
    claims.push(Claim::new(
        "alignment",
        "velocity amplitude decays to zero",
        aligned,
        final_a,
        th.align_eps,
    ));
    let decay = check_interval_decay(traj, m, th)?;
    claims.push(Claim::new(
        "kinetic_decay",
        "kinetic energy and wall forces decay with integrable tails",
        decay.passed,
        decay.final_kinetic,
        th.align_eps * th.align_eps,
    ));
    let (work_ok, max_w, work_ratio) = check_work_of_force(traj);
    claims.push(Claim::new(
        "work_of_force_bounded",
        "work of force stays within its Cauchy-Schwarz envelope",
        work_ok,
        work_ratio,
        1.0,
    ));

    let last = traj.last_state();
    Ok(TheoremReport {
        geometry: "interval".into(),
        min_wall_distance: check_no_collision(traj, &m.geometry).1,
        final_amplitude: final_a,
        fit: None,
        settled_positions: last.x.clone(),
        pairwise_limits: Vec::new(),
        escape_time: None,
        kinetic_integral: decay.kinetic_integral,
        force_sq_integral: decay.force_sq_integral,
        initial_momentum: traj.records[0].momentum,
        final_diameter: traj.last_record().diameter,
        final_wall_distances: last.x.iter().map(|&x| m.geometry.wall_distance(x)).collect(),
        settlement_mode: None,
        max_abs_work: Some(max_w),
        integration_error: None,
        stats: traj.stats,
        claims,
    })
}
