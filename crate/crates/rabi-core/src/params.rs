//! Physical parameters of the atom-cavity model.

use crate::error::RabiError;

/// Atomic transition frequency ω₀, cavity mode frequency ω, and coupling
/// strength g, all angular frequencies with ħ = 1.
///
/// Both frequencies must be positive, so the sum frequency ω₀ + ω is always
/// bounded away from zero; the detuning ω₀ − ω may take any sign and is zero
/// at resonance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    omega0: f64,
    omega: f64,
    g: f64,
}

impl ModelParams {
    pub fn new(omega0: f64, omega: f64, g: f64) -> Result<Self, RabiError> {
        if !omega0.is_finite() || !omega.is_finite() || !g.is_finite() {
            return Err(RabiError::InvalidParameter(
                "omega0, omega, g must all be finite".into(),
            ));
        }
        if omega0 <= 0.0 {
            return Err(RabiError::InvalidParameter(format!(
                "omega0 must be positive (got {omega0})"
            )));
        }
        if omega <= 0.0 {
            return Err(RabiError::InvalidParameter(format!(
                "omega must be positive (got {omega})"
            )));
        }
        if g < 0.0 {
            return Err(RabiError::InvalidParameter(format!(
                "g must be non-negative (got {g})"
            )));
        }
        Ok(Self { omega0, omega, g })
    }

    /// Build from the detuning δ = ω₀ − ω instead of the cavity frequency.
    pub fn from_detuning(omega0: f64, delta: f64, g: f64) -> Result<Self, RabiError> {
        if !delta.is_finite() {
            return Err(RabiError::InvalidParameter("delta must be finite".into()));
        }
        Self::new(omega0, omega0 - delta, g)
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    /// δ = ω₀ − ω.
    pub fn detuning(&self) -> f64 {
        self.omega0 - self.omega
    }

    /// Δ = ω₀ + ω, the frequency of the counter-rotating processes.
    pub fn sum_frequency(&self) -> f64 {
        self.omega0 + self.omega
    }

    /// Ω = √(δ² + 4g²), the rotating-wave vacuum oscillation frequency.
    pub fn jc_rabi_frequency(&self) -> f64 {
        let d = self.detuning();
        (d * d + 4.0 * self.g * self.g).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_frequencies() {
        let p = ModelParams::from_detuning(20.0, 2.0, 1.0).unwrap();
        assert_eq!(p.omega(), 18.0);
        assert_eq!(p.detuning(), 2.0);
        assert_eq!(p.sum_frequency(), 38.0);
        assert!((p.jc_rabi_frequency() - (4.0f64 + 4.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(ModelParams::new(-1.0, 1.0, 1.0).is_err());
        assert!(ModelParams::new(1.0, 0.0, 1.0).is_err());
        assert!(ModelParams::new(1.0, 1.0, -0.5).is_err());
        assert!(ModelParams::new(f64::NAN, 1.0, 1.0).is_err());
        // detuning equal to omega0 would put the cavity at zero frequency
        assert!(ModelParams::from_detuning(10.0, 10.0, 1.0).is_err());
    }

    #[test]
    fn resonance_allowed() {
        let p = ModelParams::from_detuning(10.0, 0.0, 1.0).unwrap();
        assert_eq!(p.detuning(), 0.0);
        assert_eq!(p.sum_frequency(), 20.0);
    }
}
