//! Run and sweep configuration in TOML, plus seeded initial conditions.
//!
//! Initial conditions come from ChaCha20 (`rand_chacha::ChaCha20Rng`,
//! seeded with `seed_from_u64(seed)`). Each uniform variate is
//! `(next_u64() >> 11) · 2⁻⁵³`; all N positions are drawn first, then all N
//! velocities, and the positions are sorted ascending afterwards.

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::dynamics::{FlockState, ModelSpec};
use crate::error::{FlockError, Result};
use crate::integrator::StepControl;
use crate::kernels::CommunicationKernel;
use crate::potentials::{ConfinementGeometry, WallPotential};
use crate::verification::{RunPlan, Thresholds};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelFamily {
    #[serde(rename = "power_law", alias = "powerlaw")]
    PowerLaw,
    Constant,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct KernelSection {
    pub family: KernelFamily,
    #[serde(rename = "H")]
    pub amplitude: f64,
    pub beta: f64,
}

impl Default for KernelSection {
    fn default() -> Self {
        KernelSection {
            family: KernelFamily::PowerLaw,
            amplitude: 1.0,
            beta: 0.25,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeometryVariant {
    #[serde(rename = "halfline")]
    HalfLine,
    Interval,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GeometrySection {
    pub variant: GeometryVariant,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
}

impl Default for GeometrySection {
    fn default() -> Self {
        GeometrySection {
            variant: GeometryVariant::HalfLine,
            a: None,
            b: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct IntegratorSection {
    pub dt_init: f64,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub dt_min: f64,
    pub dt_max: f64,
    pub wall_safety: f64,
    pub sample_every: f64,
    pub t_end: f64,
}

impl Default for IntegratorSection {
    fn default() -> Self {
        let c = StepControl::default();
        IntegratorSection {
            dt_init: c.dt_init,
            abs_tol: c.abs_tol,
            rel_tol: c.rel_tol,
            dt_min: c.dt_min,
            dt_max: c.dt_max,
            wall_safety: c.wall_safety,
            sample_every: 0.1,
            t_end: 200.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct InitialConditions {
    pub n_agents: usize,
    pub x_low: f64,
    pub x_high: f64,
    pub v_low: f64,
    pub v_high: f64,
    pub seed: u64,
}

impl Default for InitialConditions {
    fn default() -> Self {
        InitialConditions {
            n_agents: 16,
            x_low: 0.5,
            x_high: 3.0,
            v_low: -0.5,
            v_high: 1.0,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Plot,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputSection {
    pub directory: String,
    pub formats: Vec<OutputFormat>,
}

impl Default for OutputSection {
    fn default() -> Self {
        OutputSection {
            directory: "runs".into(),
            formats: vec![OutputFormat::Csv, OutputFormat::Json],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub kernel: KernelSection,
    pub potential: WallPotential,
    pub geometry: GeometrySection,
    pub integrator: IntegratorSection,
    pub thresholds: Thresholds,
    pub ic: InitialConditions,
    pub output: OutputSection,
}

fn syntax_error(e: toml::de::Error) -> FlockError {
    FlockError::ConfigSyntax(e.to_string().trim_end().to_string())
}

/// Parses and validates a run configuration. Missing keys take defaults;
/// unknown keys are rejected.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let cfg: RunConfig = toml::from_str(text).map_err(syntax_error)?;
    cfg.validate()?;
    Ok(cfg)
}

fn reword(key: &str, e: FlockError) -> FlockError {
    match e {
        FlockError::InvalidInput(msg) => FlockError::config(key, msg),
        other => other,
    }
}

impl RunConfig {
    pub fn kernel(&self) -> Result<CommunicationKernel> {
        let k = match self.kernel.family {
            KernelFamily::PowerLaw => {
                CommunicationKernel::power_law(self.kernel.amplitude, self.kernel.beta)
            }
            KernelFamily::Constant => CommunicationKernel::constant(self.kernel.amplitude),
        };
        k.map_err(|e| reword("kernel", e))
    }

    pub fn geometry(&self) -> Result<ConfinementGeometry> {
        match self.geometry.variant {
            GeometryVariant::HalfLine => Ok(ConfinementGeometry::HalfLine),
            GeometryVariant::Interval => {
                let a = self
                    .geometry
                    .a
                    .ok_or_else(|| FlockError::config("geometry.a", "required for interval"))?;
                let b = self
                    .geometry
                    .b
                    .ok_or_else(|| FlockError::config("geometry.b", "required for interval"))?;
                ConfinementGeometry::interval(a, b).map_err(|e| reword("geometry", e))
            }
        }
    }

    pub fn model(&self) -> Result<ModelSpec> {
        ModelSpec::new(
            self.kernel()?,
            self.potential,
            self.geometry()?,
            self.ic.n_agents,
        )
        .map_err(|e| reword("ic.n_agents", e))
    }

    pub fn step_control(&self) -> StepControl {
        let i = &self.integrator;
        StepControl {
            dt_init: i.dt_init,
            abs_tol: i.abs_tol,
            rel_tol: i.rel_tol,
            dt_min: i.dt_min,
            dt_max: i.dt_max,
            wall_safety: i.wall_safety,
        }
    }

    pub fn plan(&self) -> RunPlan {
        RunPlan {
            control: self.step_control(),
            t_end: self.integrator.t_end,
            sample_every: self.integrator.sample_every,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.kernel()?;
        self.potential.validate().map_err(|e| reword("potential", e))?;
        let geometry = self.geometry()?;
        self.model()?;
        self.step_control().validate()?;
        let i = &self.integrator;
        if !(i.sample_every.is_finite() && i.sample_every > 0.0) {
            return Err(FlockError::config("integrator.sample_every", "must be positive"));
        }
        if !(i.t_end.is_finite() && i.t_end > 0.0) {
            return Err(FlockError::config("integrator.t_end", "must be positive"));
        }
        self.thresholds.validate()?;

        let ic = &self.ic;
        for (key, v) in [
            ("ic.x_low", ic.x_low),
            ("ic.x_high", ic.x_high),
            ("ic.v_low", ic.v_low),
            ("ic.v_high", ic.v_high),
        ] {
            if !v.is_finite() {
                return Err(FlockError::config(key, "must be finite"));
            }
        }
        if ic.x_low > ic.x_high {
            return Err(FlockError::config("ic.x_high", "must be >= ic.x_low"));
        }
        if ic.v_low > ic.v_high {
            return Err(FlockError::config("ic.v_high", "must be >= ic.v_low"));
        }
        let margin = 0.05 * self.potential.ell;
        let (lo, hi) = match geometry {
            ConfinementGeometry::HalfLine => (margin, f64::INFINITY),
            ConfinementGeometry::Interval { a, b } => (a + margin, b - margin),
        };
        if ic.x_low < lo {
            return Err(FlockError::config(
                "ic.x_low",
                format!("sampling box must keep a wall margin of {margin}; need x_low >= {lo}"),
            ));
        }
        if ic.x_high > hi {
            return Err(FlockError::config(
                "ic.x_high",
                format!("sampling box must keep a wall margin of {margin}; need x_high <= {hi}"),
            ));
        }
        Ok(())
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("run config serializes")
    }

    /// Returns a copy with one dotted key (e.g. `kernel.beta`) replaced.
    pub fn with_override(&self, key: &str, value: &toml::Value) -> Result<RunConfig> {
        let mut root = toml::Value::try_from(self).expect("run config serializes");
        let (section, field) = key
            .split_once('.')
            .ok_or_else(|| FlockError::config(key, "expected `section.field`"))?;
        let table = root
            .get_mut(section)
            .and_then(|s| s.as_table_mut())
            .ok_or_else(|| FlockError::config(key, "unknown section"))?;
        let value = match (table.get(field), value) {
            (Some(toml::Value::Float(_)), toml::Value::Integer(i)) => toml::Value::Float(*i as f64),
            _ => value.clone(),
        };
        table.insert(field.to_string(), value);
        let cfg: RunConfig = root
            .try_into()
            .map_err(|e: toml::de::Error| FlockError::config(key, e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }
}

fn unit_draw(rng: &mut ChaCha20Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Draws the initial flock at `t = 0` for a validated config.
pub fn sample_initial_conditions(cfg: &RunConfig) -> Result<FlockState> {
    cfg.validate()?;
    let ic = &cfg.ic;
    let mut rng = ChaCha20Rng::seed_from_u64(ic.seed);
    let mut x: Vec<f64> = (0..ic.n_agents)
        .map(|_| ic.x_low + (ic.x_high - ic.x_low) * unit_draw(&mut rng))
        .collect();
    let v: Vec<f64> = (0..ic.n_agents)
        .map(|_| ic.v_low + (ic.v_high - ic.v_low) * unit_draw(&mut rng))
        .collect();
    x.sort_by(f64::total_cmp);
    FlockState::new(0.0, x, v)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepAxis {
    pub key: String,
    pub values: Vec<toml::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default)]
    pub base: RunConfig,
    #[serde(default)]
    pub axes: Vec<SweepAxis>,
    /// Empty means the base seed only.
    #[serde(default)]
    pub seeds: Vec<u64>,
    #[serde(default = "default_parallelism")]
    pub parallelism: usize,
}

fn default_parallelism() -> usize {
    1
}

pub const MAX_SWEEP_RUNS: usize = 10_000;

/// One point of a sweep: the axis values applied and the resolved config.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub values: Vec<toml::Value>,
    pub seed: u64,
    pub config: RunConfig,
}

fn value_order(a: &toml::Value, b: &toml::Value) -> std::cmp::Ordering {
    use toml::Value::*;
    let num = |v: &toml::Value| match v {
        Integer(i) => Some(*i as f64),
        Float(f) => Some(*f),
        _ => None,
    };
    match (num(a), num(b)) {
        (Some(x), Some(y)) => x.total_cmp(&y),
        _ => a.to_string().cmp(&b.to_string()),
    }
}

pub fn parse_sweep_config(text: &str) -> Result<SweepConfig> {
    let cfg: SweepConfig = toml::from_str(text).map_err(syntax_error)?;
    cfg.base.validate()?;
    cfg.points()?;
    Ok(cfg)
}

impl SweepConfig {
    pub fn seeds(&self) -> Vec<u64> {
        if self.seeds.is_empty() {
            vec![self.base.ic.seed]
        } else {
            self.seeds.clone()
        }
    }

    /// Expands the cross product, sorted by axis values then seed.
    pub fn points(&self) -> Result<Vec<SweepPoint>> {
        if self.parallelism == 0 {
            return Err(FlockError::config("parallelism", "must be at least 1"));
        }
        let mut total = self.seeds().len();
        for axis in &self.axes {
            if axis.values.is_empty() {
                return Err(FlockError::config(&axis.key, "sweep axis has no values"));
            }
            total = total.saturating_mul(axis.values.len());
        }
        if total > MAX_SWEEP_RUNS {
            return Err(FlockError::config(
                "axes",
                format!("{total} runs exceed the limit of {MAX_SWEEP_RUNS}"),
            ));
        }

        let mut combos: Vec<Vec<toml::Value>> = vec![Vec::new()];
        for axis in &self.axes {
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    axis.values.iter().map(move |v| {
                        let mut next = c.clone();
                        next.push(v.clone());
                        next
                    })
                })
                .collect();
        }
        let mut points = Vec::with_capacity(total);
        for values in combos {
            let mut cfg = self.base.clone();
            for (axis, v) in self.axes.iter().zip(&values) {
                cfg = cfg.with_override(&axis.key, v)?;
            }
            for seed in self.seeds() {
                let mut c = cfg.clone();
                c.ic.seed = seed;
                points.push(SweepPoint {
                    values: values.clone(),
                    seed,
                    config: c,
                });
            }
        }
        points.sort_by(|a, b| {
            a.values
                .iter()
                .zip(&b.values)
                .map(|(x, y)| value_order(x, y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.seed.cmp(&b.seed))
        });
        Ok(points)
    }
}
