//! Communication kernels `φ(r)` weighting the velocity-alignment term.
//!
//! Every kernel is positive, even in `r`, and nonincreasing in `|r|`. The
//! primitive `Φ(D) = ∫₀^D φ` enters the Lyapunov functional `A + Φ(D)`, and
//! the fat-tail flag (`∫₀^∞ φ = ∞`) is what guarantees unconditional flocking.

use serde::{Deserialize, Serialize};

use crate::error::{FlockError, Result};
use crate::quadrature;

/// Relative tolerance for primitives that have no closed form.
pub const PRIMITIVE_REL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum CommunicationKernel {
    /// `φ(r) = H (1 + r²)^(-β)`.
    #[serde(rename = "power_law", alias = "powerlaw")]
    PowerLaw {
        #[serde(rename = "H")]
        amplitude: f64,
        #[serde(rename = "beta")]
        exponent: f64,
    },
    /// `φ(r) = H`.
    Constant {
        #[serde(rename = "H")]
        amplitude: f64,
    },
}

impl Default for CommunicationKernel {
    fn default() -> Self {
        CommunicationKernel::PowerLaw {
            amplitude: 1.0,
            exponent: 0.25,
        }
    }
}

fn check_amplitude(h: f64) -> Result<()> {
    if h.is_finite() && h > 0.0 {
        Ok(())
    } else {
        Err(FlockError::InvalidInput(format!(
            "kernel amplitude must be positive and finite, got {h}"
        )))
    }
}

impl CommunicationKernel {
    pub fn power_law(amplitude: f64, exponent: f64) -> Result<Self> {
        check_amplitude(amplitude)?;
        if !(exponent.is_finite() && exponent >= 0.0) {
            return Err(FlockError::InvalidInput(format!(
                "power-law exponent must be nonnegative and finite, got {exponent}"
            )));
        }
        Ok(CommunicationKernel::PowerLaw {
            amplitude,
            exponent,
        })
    }

    pub fn constant(amplitude: f64) -> Result<Self> {
        check_amplitude(amplitude)?;
        Ok(CommunicationKernel::Constant { amplitude })
    }

    /// Re-checks the parameter invariants, e.g. after deserialization.
    pub fn validate(&self) -> Result<()> {
        match *self {
            CommunicationKernel::PowerLaw {
                amplitude,
                exponent,
            } => Self::power_law(amplitude, exponent).map(|_| ()),
            CommunicationKernel::Constant { amplitude } => check_amplitude(amplitude),
        }
    }

    pub fn amplitude(&self) -> f64 {
        match *self {
            CommunicationKernel::PowerLaw { amplitude, .. }
            | CommunicationKernel::Constant { amplitude } => amplitude,
        }
    }

    /// `φ(r)` without the finiteness check; used on the hot path of the
    /// right-hand side where positions are already validated.
    #[inline]
    pub(crate) fn weight(&self, r: f64) -> f64 {
        match *self {
            CommunicationKernel::PowerLaw {
                amplitude,
                exponent,
            } => {
                if exponent == 0.0 {
                    amplitude
                } else {
                    amplitude * (1.0 + r * r).powf(-exponent)
                }
            }
            CommunicationKernel::Constant { amplitude } => amplitude,
        }
    }

    /// Evaluates `φ(r)`. Depends on `|r|` only.
    pub fn eval(&self, r: f64) -> Result<f64> {
        if !r.is_finite() {
            return Err(FlockError::InvalidInput(format!(
                "kernel argument must be finite, got {r}"
            )));
        }
        Ok(self.weight(r))
    }

    /// `Φ(D) = ∫₀^D φ(r) dr`.
    ///
    /// Closed forms are used for the constant kernel and for power laws with
    /// `β ∈ {0, 1/2, 1}`; every other exponent goes through adaptive
    /// Gauss-Kronrod quadrature at [`PRIMITIVE_REL_TOL`].
    pub fn primitive(&self, d: f64) -> Result<f64> {
        if !(d >= 0.0) {
            return Err(FlockError::InvalidInput(format!(
                "primitive upper limit must be nonnegative, got {d}"
            )));
        }
        if d.is_infinite() {
            return Ok(if self.is_fat_tail() {
                f64::INFINITY
            } else {
                self.tail_integral()
            });
        }
        Ok(match *self {
            CommunicationKernel::Constant { amplitude } => amplitude * d,
            CommunicationKernel::PowerLaw {
                amplitude,
                exponent,
            } => match exponent {
                e if e == 0.0 => amplitude * d,
                e if e == 0.5 => amplitude * d.asinh(),
                e if e == 1.0 => amplitude * d.atan(),
                _ => self.primitive_by_quadrature(d),
            },
        })
    }

    /// `Φ(D)` by adaptive quadrature regardless of family.
    pub fn primitive_by_quadrature(&self, d: f64) -> f64 {
        quadrature::integrate(|r| self.weight(r), 0.0, d, PRIMITIVE_REL_TOL)
    }

    // Finite only for thin-tailed power laws.
    fn tail_integral(&self) -> f64 {
        match *self {
            CommunicationKernel::PowerLaw {
                amplitude,
                exponent,
            } if exponent == 1.0 => amplitude * std::f64::consts::FRAC_PI_2,
            // r = s/(1-s) maps [0, 1) onto [0, ∞).
            _ => quadrature::integrate(
                |s| {
                    if s >= 1.0 {
                        return 0.0;
                    }
                    let r = s / (1.0 - s);
                    self.weight(r) / ((1.0 - s) * (1.0 - s))
                },
                0.0,
                1.0,
                PRIMITIVE_REL_TOL,
            ),
        }
    }

    /// Whether `∫₀^∞ φ = ∞`, decided analytically per family.
    pub fn is_fat_tail(&self) -> bool {
        match *self {
            CommunicationKernel::Constant { .. } => true,
            CommunicationKernel::PowerLaw { exponent, .. } => 2.0 * exponent <= 1.0,
        }
    }

    /// Lower bound `c₀ = φ(R)` of the kernel on `[0, R]`.
    pub fn lower_bound(&self, radius: f64) -> Result<f64> {
        if !(radius >= 0.0) {
            return Err(FlockError::InvalidInput(format!(
                "radius must be nonnegative, got {radius}"
            )));
        }
        self.eval(radius)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pl(h: f64, b: f64) -> CommunicationKernel {
        CommunicationKernel::power_law(h, b).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(pl(1.0, 0.25).eval(0.0).unwrap(), 1.0);
        let k = pl(1.0, 0.5);
        assert_eq!(k.eval(-3.0).unwrap(), k.eval(3.0).unwrap());
        let v = pl(2.0, 0.5).eval(1.0).unwrap();
        assert!((v - 2.0 * 2f64.powf(-0.5)).abs() < 1e-15);
        assert!((v - 1.41421).abs() < 1e-5);
    }

    #[test]
    fn eval_rejects_non_finite() {
        assert!(pl(1.0, 0.25).eval(f64::NAN).is_err());
        assert!(pl(1.0, 0.25).eval(f64::INFINITY).is_err());
    }

    #[test]
    fn construction_validates() {
        assert!(CommunicationKernel::power_law(0.0, 0.25).is_err());
        assert!(CommunicationKernel::power_law(1.0, -0.1).is_err());
        assert!(CommunicationKernel::constant(-1.0).is_err());
    }

    #[test]
    fn primitive_examples() {
        for k in [pl(1.0, 0.25), pl(3.0, 2.0), CommunicationKernel::constant(2.0).unwrap()] {
            assert_eq!(k.primitive(0.0).unwrap(), 0.0);
        }
        let c = CommunicationKernel::constant(0.7).unwrap();
        assert!((c.primitive(3.0).unwrap() - 2.1).abs() < 1e-15);
        let v = pl(1.0, 0.5).primitive(1.0).unwrap();
        assert!((v - 0.881_373_587_019_543).abs() < 1e-12);
        assert!(pl(1.0, 0.5).primitive(-1.0).is_err());
    }

    #[test]
    fn closed_forms_agree_with_quadrature() {
        for k in [pl(1.0, 0.5), pl(2.0, 1.0), pl(1.5, 0.0)] {
            for d in [0.1, 1.0, 10.0, 100.0] {
                let exact = k.primitive(d).unwrap();
                let quad = k.primitive_by_quadrature(d);
                assert!(
                    ((exact - quad) / exact).abs() < 1e-8,
                    "{k:?} D={d}: {exact} vs {quad}"
                );
            }
        }
    }

    #[test]
    fn fat_tail_classification() {
        assert!(pl(1.0, 0.25).is_fat_tail());
        assert!(pl(1.0, 0.5).is_fat_tail());
        assert!(!pl(1.0, 1.0).is_fat_tail());
        assert!(CommunicationKernel::constant(1.0).unwrap().is_fat_tail());
    }

    #[test]
    fn infinite_primitive_follows_tail() {
        assert_eq!(pl(1.0, 0.25).primitive(f64::INFINITY).unwrap(), f64::INFINITY);
        let t = pl(1.0, 1.0).primitive(f64::INFINITY).unwrap();
        assert!((t - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        // ∫₀^∞ (1+r²)^(-2) dr = π/4
        let t2 = pl(1.0, 2.0).primitive(f64::INFINITY).unwrap();
        assert!((t2 - std::f64::consts::FRAC_PI_4).abs() < 1e-9);
    }

    #[test]
    fn lower_bound_examples() {
        let c = CommunicationKernel::constant(1.0).unwrap();
        assert_eq!(c.lower_bound(123.0).unwrap(), 1.0);
        assert_eq!(pl(1.0, 0.5).lower_bound(0.0).unwrap(), 1.0);
        let v = pl(1.0, 0.5).lower_bound(2.0).unwrap();
        assert!((v - 5f64.powf(-0.5)).abs() < 1e-15);
        assert!(pl(1.0, 0.5).lower_bound(-1.0).is_err());
    }
}
