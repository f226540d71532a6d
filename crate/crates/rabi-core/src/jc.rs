//! Closed-form rotating-wave (Jaynes-Cummings) baseline.
//!
//! In the vacuum one-excitation sector the excited-state probability is
//!
//! ```text
//! P_e(t) = 1 − [2g sin(Ωt/2)/Ω]²,   Ω = √(δ² + 4g²)
//! ```
//!
//! for an initially excited atom, and identically zero for an initially
//! unexcited atom: the rotating-wave coupling cannot excite the atom out of
//! the joint vacuum.

use crate::params::ModelParams;

/// Initial condition for the baseline; the closed form only covers the
/// energy eigenstate pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JcInitial {
    Excited,
    Ground,
}

/// Rabi frequency and excited-state probability at one time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JcResult {
    /// Ω = √(δ² + 4g²).
    pub omega_rabi: f64,
    pub p_excited: f64,
}

/// Evaluate the rotating-wave excited-state probability.
pub fn jc_excited_probability(params: &ModelParams, t: f64, init: JcInitial) -> JcResult {
    let omega_rabi = params.jc_rabi_frequency();
    let p_excited = match init {
        JcInitial::Ground => 0.0,
        JcInitial::Excited => {
            if omega_rabi == 0.0 {
                // g = 0 and δ = 0: nothing moves
                1.0
            } else {
                let s = 2.0 * params.g() * (0.5 * omega_rabi * t).sin() / omega_rabi;
                1.0 - s * s
            }
        }
    };
    JcResult {
        omega_rabi,
        p_excited,
    }
}

/// Convenience: the excited-start probability over a whole grid.
pub fn jc_series(params: &ModelParams, times: &[f64], init: JcInitial) -> Vec<f64> {
    times
        .iter()
        .map(|&t| jc_excited_probability(params, t, init).p_excited)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn starts_at_one() {
        let p = ModelParams::from_detuning(20.0, 2.0, 1.0).unwrap();
        let r = jc_excited_probability(&p, 0.0, JcInitial::Excited);
        assert_eq!(r.p_excited, 1.0);
    }

    #[test]
    fn resonant_full_transfer() {
        // at δ = 0, P = cos²(gt): zero at g·t = π/2
        let p = ModelParams::from_detuning(10.0, 0.0, 1.0).unwrap();
        let r = jc_excited_probability(&p, PI / 2.0, JcInitial::Excited);
        assert!(r.p_excited.abs() < 1e-15);
    }

    #[test]
    fn detuned_minimum_is_half_at_two_g() {
        // δ = 2g gives Ω = 2√2 g and minimum 1 − 4g²/Ω² = 1/2 at Ωt = π
        let p = ModelParams::from_detuning(20.0, 2.0, 1.0).unwrap();
        let omega = p.jc_rabi_frequency();
        let r = jc_excited_probability(&p, PI / omega, JcInitial::Excited);
        assert!((r.p_excited - 0.5).abs() < 1e-12);
    }

    #[test]
    fn ground_start_never_excites() {
        let p = ModelParams::from_detuning(20.0, 10.0, 1.0).unwrap();
        for i in 0..100 {
            let t = i as f64 * 0.17;
            assert_eq!(jc_excited_probability(&p, t, JcInitial::Ground).p_excited, 0.0);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn periodic_and_bounded(
                omega0 in 2.0f64..60.0,
                delta_frac in -0.8f64..0.8,
                t in 0.0f64..50.0,
            ) {
                let p = ModelParams::from_detuning(omega0, delta_frac * omega0, 1.0).unwrap();
                let omega = p.jc_rabi_frequency();
                let period = 2.0 * PI / omega;
                let a = jc_excited_probability(&p, t, JcInitial::Excited).p_excited;
                let b = jc_excited_probability(&p, t + period, JcInitial::Excited).p_excited;
                prop_assert!((a - b).abs() < 1e-9);
                prop_assert!((0.0..=1.0).contains(&a) || a > -1e-15);

                // the floor of the oscillation is δ²/Ω²
                let floor = (p.detuning() / omega).powi(2);
                prop_assert!(a >= floor - 1e-12);
            }

            #[test]
            fn minimum_equals_detuning_ratio(
                omega0 in 2.0f64..60.0,
                delta_frac in 0.05f64..0.8,
            ) {
                let p = ModelParams::from_detuning(omega0, delta_frac * omega0, 1.0).unwrap();
                let omega = p.jc_rabi_frequency();
                // the minimum sits at Ωt = π
                let at_min = jc_excited_probability(&p, PI / omega, JcInitial::Excited).p_excited;
                let floor = (p.detuning() / omega).powi(2);
                prop_assert!((at_min - floor).abs() < 1e-12);
            }
        }
    }
}
