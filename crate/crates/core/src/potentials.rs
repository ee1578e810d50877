//! Repulsive wall potential `U(x) = θ ((ℓ − x)₊)⁴ / x` and its assembly on
//! the half-line `(0, ∞)` and on a bounded interval `(a, b)`.
//!
//! `x` is the distance to the wall. `U` vanishes beyond the reaction length
//! `ℓ` together with its first three derivatives, and blows up as `x → 0⁺`.
//! Evaluating at or behind a wall is a [`FlockError::Domain`] error, never an
//! infinity.

use serde::{Deserialize, Serialize};

use crate::error::{FlockError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct WallPotential {
    /// Reaction length `ℓ`.
    pub ell: f64,
    /// Strength multiplier `θ`. Zero disables the walls entirely.
    pub theta: f64,
}

impl Default for WallPotential {
    fn default() -> Self {
        WallPotential {
            ell: 1.0,
            theta: 1.0,
        }
    }
}

fn wall_domain_error(x: f64) -> FlockError {
    FlockError::Domain {
        x,
        domain: "wall distance > 0".to_string(),
    }
}

impl WallPotential {
    pub fn new(ell: f64, theta: f64) -> Result<Self> {
        let w = WallPotential { ell, theta };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.ell.is_finite() && self.ell > 0.0) {
            return Err(FlockError::InvalidInput(format!(
                "reaction length must be positive, got {}",
                self.ell
            )));
        }
        if !(self.theta.is_finite() && self.theta >= 0.0) {
            return Err(FlockError::InvalidInput(format!(
                "wall strength must be nonnegative, got {}",
                self.theta
            )));
        }
        Ok(())
    }

    /// `θ = 0`: no wall force anywhere, agents may cross the walls.
    pub fn is_disabled(&self) -> bool {
        self.theta == 0.0
    }

    #[inline]
    fn check(&self, x: f64) -> Result<f64> {
        if x > 0.0 && x.is_finite() {
            Ok((self.ell - x).max(0.0))
        } else {
            Err(wall_domain_error(x))
        }
    }

    /// `U(x)`.
    pub fn potential(&self, x: f64) -> Result<f64> {
        let s = self.check(x)?;
        if s == 0.0 {
            return Ok(0.0);
        }
        let s2 = s * s;
        Ok(self.theta * s2 * s2 / x)
    }

    /// `F(x) = −U′(x) = θ (4 s³ x + s⁴) / x²` with `s = (ℓ − x)₊`.
    pub fn force(&self, x: f64) -> Result<f64> {
        let s = self.check(x)?;
        if s == 0.0 {
            return Ok(0.0);
        }
        let s3 = s * s * s;
        Ok(self.theta * (4.0 * s3 * x + s3 * s) / (x * x))
    }

    /// `U″(x) = θ (12 s²/x + 8 s³/x² + 2 s⁴/x³)`.
    pub fn curvature(&self, x: f64) -> Result<f64> {
        let s = self.check(x)?;
        if s == 0.0 {
            return Ok(0.0);
        }
        let s2 = s * s;
        let inv = 1.0 / x;
        Ok(self.theta * inv * (12.0 * s2 + inv * (8.0 * s2 * s + inv * 2.0 * s2 * s2)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "lowercase")]
pub enum ConfinementGeometry {
    /// Single wall at `x = 0`, domain `(0, ∞)`.
    #[serde(rename = "halfline")]
    HalfLine,
    /// Walls at `a` and `b`, domain `(a, b)`.
    Interval { a: f64, b: f64 },
}

impl Default for ConfinementGeometry {
    fn default() -> Self {
        ConfinementGeometry::HalfLine
    }
}

impl ConfinementGeometry {
    pub fn interval(a: f64, b: f64) -> Result<Self> {
        let g = ConfinementGeometry::Interval { a, b };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if let ConfinementGeometry::Interval { a, b } = *self {
            if !(a.is_finite() && b.is_finite() && b - a > 0.0) {
                return Err(FlockError::InvalidInput(format!(
                    "interval needs finite a < b, got [{a}, {b}]"
                )));
            }
        }
        Ok(())
    }

    pub fn is_interval(&self) -> bool {
        matches!(self, ConfinementGeometry::Interval { .. })
    }

    /// Whether `x` lies in the open domain.
    pub fn contains(&self, x: f64) -> bool {
        match *self {
            ConfinementGeometry::HalfLine => x > 0.0 && x.is_finite(),
            ConfinementGeometry::Interval { a, b } => x > a && x < b,
        }
    }

    /// Signed distance from `x` to the nearest wall; negative behind a wall.
    pub fn wall_distance(&self, x: f64) -> f64 {
        match *self {
            ConfinementGeometry::HalfLine => x,
            ConfinementGeometry::Interval { a, b } => (x - a).min(b - x),
        }
    }

    fn domain_error(&self, x: f64) -> FlockError {
        let domain = match *self {
            ConfinementGeometry::HalfLine => "(0, inf)".to_string(),
            ConfinementGeometry::Interval { a, b } => format!("({a}, {b})"),
        };
        FlockError::Domain { x, domain }
    }

    /// Total potential of one agent at `x`.
    pub fn potential(&self, w: &WallPotential, x: f64) -> Result<f64> {
        if w.is_disabled() {
            return Ok(0.0);
        }
        match *self {
            ConfinementGeometry::HalfLine => w.potential(x),
            ConfinementGeometry::Interval { a, b } => {
                if !self.contains(x) {
                    return Err(self.domain_error(x));
                }
                Ok(w.potential(x - a)? + w.potential(b - x)?)
            }
        }
        .map_err(|_| self.domain_error(x))
    }

    /// Net wall force on one agent at `x`; positive pushes right.
    pub fn force(&self, w: &WallPotential, x: f64) -> Result<f64> {
        if w.is_disabled() {
            return Ok(0.0);
        }
        match *self {
            ConfinementGeometry::HalfLine => w.force(x),
            ConfinementGeometry::Interval { a, b } => {
                if !self.contains(x) {
                    return Err(self.domain_error(x));
                }
                Ok(w.force(x - a)? - w.force(b - x)?)
            }
        }
        .map_err(|_| self.domain_error(x))
    }

    /// `d²/dx²` of the assembled potential.
    pub fn curvature(&self, w: &WallPotential, x: f64) -> Result<f64> {
        if w.is_disabled() {
            return Ok(0.0);
        }
        match *self {
            ConfinementGeometry::HalfLine => w.curvature(x),
            ConfinementGeometry::Interval { a, b } => {
                if !self.contains(x) {
                    return Err(self.domain_error(x));
                }
                Ok(w.curvature(x - a)? + w.curvature(b - x)?)
            }
        }
        .map_err(|_| self.domain_error(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> WallPotential {
        WallPotential::new(1.0, 1.0).unwrap()
    }

    #[test]
    fn potential_examples() {
        let w = unit();
        assert_eq!(w.potential(2.0).unwrap(), 0.0);
        assert!((w.potential(0.5).unwrap() - 0.125).abs() < 1e-15);
        let near = w.potential(1e-3).unwrap();
        assert!((near - 0.999f64.powi(4) / 1e-3).abs() < 1e-9);
        assert!((near - 996.006).abs() < 1e-3);
        let nearer = w.potential(1e-6).unwrap();
        assert!((nearer / (1e6 * (1.0 - 1e-6f64).powi(4)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn potential_diverges_at_wall() {
        let w = unit();
        let mut last = 0.0;
        for k in 1..12 {
            let u = w.potential(10f64.powi(-k)).unwrap();
            assert!(u > 5.0 * last);
            last = u;
        }
    }

    #[test]
    fn behind_wall_is_domain_error() {
        let w = unit();
        for x in [0.0, -0.5] {
            assert!(matches!(w.potential(x), Err(FlockError::Domain { .. })));
            assert!(matches!(w.force(x), Err(FlockError::Domain { .. })));
            assert!(matches!(w.curvature(x), Err(FlockError::Domain { .. })));
        }
    }

    #[test]
    fn force_examples() {
        let w = unit();
        assert_eq!(w.force(1.5).unwrap(), 0.0);
        assert!((w.force(0.5).unwrap() - 1.25).abs() < 1e-15);
    }

    #[test]
    fn force_matches_central_difference() {
        let w = unit();
        let (x, h) = (0.5, 1e-6);
        let fd = (w.potential(x - h).unwrap() - w.potential(x + h).unwrap()) / (2.0 * h);
        let f = w.force(x).unwrap();
        assert!(((fd - f) / f).abs() < 1e-6);
    }

    #[test]
    fn curvature_matches_second_difference() {
        let w = unit();
        let (x, h) = (0.5, 1e-4);
        let fd = (w.potential(x + h).unwrap() - 2.0 * w.potential(x).unwrap()
            + w.potential(x - h).unwrap())
            / (h * h);
        let c = w.curvature(x).unwrap();
        assert!(((fd - c) / c).abs() < 1e-5, "{fd} vs {c}");
        assert_eq!(w.curvature(1.0).unwrap(), 0.0);
        assert_eq!(w.curvature(3.0).unwrap(), 0.0);
    }

    #[test]
    fn curvature_positive_inside_range() {
        let w = WallPotential::new(2.0, 0.3).unwrap();
        for k in 1..20 {
            let x = 0.05 * k as f64 * w.ell;
            assert!(w.curvature(x).unwrap() > 0.0);
            assert!(w.force(x).unwrap() > 0.0);
        }
    }

    #[test]
    fn smooth_at_support_edge() {
        let w = unit();
        let h = 1e-3;
        // One-sided values left of ℓ shrink like h⁴, h³, h² respectively.
        assert!(w.potential(1.0 - h).unwrap() < 2.0 * h.powi(4));
        assert!(w.force(1.0 - h).unwrap() < 6.0 * h.powi(3));
        assert!(w.curvature(1.0 - h).unwrap() < 13.0 * h.powi(2));
    }

    #[test]
    fn geometry_force_examples() {
        let w = unit();
        let g = ConfinementGeometry::interval(0.0, 4.0).unwrap();
        assert_eq!(g.force(&w, 2.0).unwrap(), 0.0);
        for x in [0.25, 0.5, 0.875, 1.75, 3.25] {
            assert_eq!(g.force(&w, x).unwrap(), -g.force(&w, 4.0 - x).unwrap());
        }
        assert!(g.force(&w, 0.5).unwrap() > 0.0);
        assert!(g.force(&w, 3.5).unwrap() < 0.0);
        let hl = ConfinementGeometry::HalfLine;
        assert!((hl.force(&w, 0.5).unwrap() - 1.25).abs() < 1e-15);
    }

    #[test]
    fn geometry_domain_errors() {
        let w = unit();
        let g = ConfinementGeometry::interval(-1.0, 1.0).unwrap();
        assert!(g.force(&w, 1.0).is_err());
        assert!(g.potential(&w, -1.5).is_err());
        assert!(ConfinementGeometry::HalfLine.curvature(&w, 0.0).is_err());
        assert!(ConfinementGeometry::interval(1.0, 1.0).is_err());
    }

    #[test]
    fn disabled_walls_are_inert_everywhere() {
        let w = WallPotential::new(1.0, 0.0).unwrap();
        let g = ConfinementGeometry::HalfLine;
        assert_eq!(g.force(&w, -3.0).unwrap(), 0.0);
        assert_eq!(g.potential(&w, 0.0).unwrap(), 0.0);
        assert!(WallPotential::new(1.0, -1.0).is_err());
        assert!(WallPotential::new(0.0, 1.0).is_err());
    }

    #[test]
    fn wall_distance() {
        let g = ConfinementGeometry::interval(0.0, 10.0).unwrap();
        assert_eq!(g.wall_distance(3.0), 3.0);
        assert_eq!(g.wall_distance(8.5), 1.5);
        assert_eq!(ConfinementGeometry::HalfLine.wall_distance(-0.25), -0.25);
    }
}
