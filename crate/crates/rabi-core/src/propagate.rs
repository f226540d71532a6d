//! The two propagation routes for the atom's reduced density matrix.
//!
//! `propagate_direct` applies the generator literally: the J superoperators
//! act on the coherence entries, the K superoperators on the populations,
//! and the scalar part subtracts Γ̇_k times the state. `propagate_factored`
//! instead advances the disentangling variables and applies the resulting
//! linear map together with the analytic prefactor e^{−Γ_k}; the exponent
//! is never integrated numerically.
//!
//! The two sectors act on disjoint sub-blocks of the 2×2 matrix, so the
//! factored product form is exact and the routes must agree to integration
//! accuracy; the acceptance suite enforces this.

use num_complex::Complex64 as C64;

use crate::atom::{AtomDensity, AtomState};
use crate::coeffs::{evaluate_unchecked, CoefficientSet};
use crate::error::RabiError;
use crate::grid::TimeGrid;
use crate::params::ModelParams;
use crate::riccati::{assemble_map, integrate_riccati, MapCoefficients};

/// Apply the generator to a density matrix at fixed coefficients:
///
/// ```text
/// ∂ρ = (ε₀J₀ + ε₊J₊ + ε₋J₋)ρ − Γ̇_k ρ + (ν₀K₀ + ν₊K₊ + ν₋K₋)ρ
/// ```
///
/// with J₀ρ = [σ_z/4, ρ], J₊ρ = σ₊ρσ₊, J₋ρ = σ₋ρσ₋,
/// K₀ρ = (σ₊σ₋ρ + ρσ₊σ₋ − ρ)/2, K₊ρ = σ₊ρσ₋, K₋ρ = σ₋ρσ₊.
pub fn apply_generator(c: &CoefficientSet, rho: &AtomDensity) -> AtomDensity {
    let gd = c.gamma_k_dot;
    AtomDensity {
        ee: 0.5 * c.nu0 * rho.ee + c.nu_plus * rho.gg - gd * rho.ee,
        gg: -0.5 * c.nu0 * rho.gg + c.nu_minus * rho.ee - gd * rho.gg,
        eg: 0.5 * c.eps0 * rho.eg + c.eps_plus * rho.ge - gd * rho.eg,
        ge: -0.5 * c.eps0 * rho.ge + c.eps_minus * rho.eg - gd * rho.ge,
    }
}

/// One record of a propagated trajectory.
#[derive(Debug, Clone, Copy)]
pub struct Sample {
    pub rho: AtomDensity,
    /// Excited-state population including the damping prefactor.
    pub pe: f64,
    /// Map coefficients; present only on the factored route.
    pub map: Option<MapCoefficients>,
    pub trace_err: f64,
    pub herm_err: f64,
}

impl Sample {
    fn from_rho(rho: AtomDensity, map: Option<MapCoefficients>) -> Self {
        Self {
            rho,
            pe: rho.pe(),
            map,
            trace_err: rho.trace_error(),
            herm_err: rho.hermiticity_error(),
        }
    }
}

/// A propagated time series on a uniform grid.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub params: ModelParams,
    pub times: Vec<f64>,
    pub records: Vec<Sample>,
    /// Name of the route that produced the records.
    pub engine: &'static str,
    /// True when the factored route diverged and the direct route supplied
    /// the records instead.
    pub used_fallback: bool,
}

impl Trajectory {
    /// (t, P_e) pairs; P_e includes the e^{−Γ_k} prefactor.
    pub fn excited_population(&self) -> Vec<(f64, f64)> {
        self.times
            .iter()
            .zip(&self.records)
            .map(|(&t, s)| (t, s.pe))
            .collect()
    }

    pub fn pe_series(&self) -> Vec<f64> {
        self.records.iter().map(|s| s.pe).collect()
    }

    /// Raw l(t) without the damping prefactor; factored route only.
    pub fn raw_l(&self) -> Option<Vec<f64>> {
        self.records
            .iter()
            .map(|s| s.map.map(|m| m.l))
            .collect()
    }

    /// Raw m(t) without the damping prefactor; factored route only.
    pub fn raw_m(&self) -> Option<Vec<f64>> {
        self.records
            .iter()
            .map(|s| s.map.map(|m| m.m))
            .collect()
    }

    pub fn max_trace_err(&self) -> f64 {
        self.records.iter().map(|s| s.trace_err).fold(0.0, f64::max)
    }

    pub fn max_herm_err(&self) -> f64 {
        self.records.iter().map(|s| s.herm_err).fold(0.0, f64::max)
    }

    /// Largest entry-wise difference against another trajectory on the same
    /// grid.
    pub fn max_elementwise_diff(&self, other: &Trajectory) -> Result<f64, RabiError> {
        if self.times.len() != other.times.len() {
            return Err(RabiError::GridMismatch);
        }
        Ok(self
            .records
            .iter()
            .zip(&other.records)
            .map(|(a, b)| a.rho.max_abs_diff(&b.rho))
            .fold(0.0, f64::max))
    }
}

/// Integrate the generator directly with the classical fourth-order scheme,
/// evaluating the closed-form coefficients at every substep time. No step is
/// taken before the first sample, so ρ(0) is returned exactly as given.
pub fn propagate_direct(
    rho0: &AtomState,
    params: &ModelParams,
    grid: &TimeGrid,
) -> Result<Trajectory, RabiError> {
    let h = grid.dt();
    let mut rho = rho0.density();
    let mut records = Vec::with_capacity(grid.n_samples());
    records.push(Sample::from_rho(rho, None));

    for i in 0..grid.n_steps() {
        let t0 = grid.time_at(i);
        let t1 = grid.time_at(i + 1);
        let c0 = evaluate_unchecked(params, t0);
        let cm = evaluate_unchecked(params, 0.5 * (t0 + t1));
        let c1 = evaluate_unchecked(params, t1);

        let k1 = apply_generator(&c0, &rho);
        let k2 = apply_generator(&cm, &rho.add(&k1.scaled(h / 2.0)));
        let k3 = apply_generator(&cm, &rho.add(&k2.scaled(h / 2.0)));
        let k4 = apply_generator(&c1, &rho.add(&k3.scaled(h)));
        rho = rho.add(
            &k1.add(&k2.scaled(2.0))
                .add(&k3.scaled(2.0))
                .add(&k4)
                .scaled(h / 6.0),
        );
        records.push(Sample::from_rho(rho, None));
    }

    Ok(Trajectory {
        params: *params,
        times: grid.times(),
        records,
        engine: "direct",
        used_fallback: false,
    })
}

/// Propagate through the disentangled map: integrate the Riccati system,
/// assemble the map coefficients at each sample, and apply them to the
/// initial state with the analytic e^{−Γ_k} prefactor.
///
/// Fails with [`RabiError::RiccatiBlowUp`] if the disentangling variables
/// diverge; callers wanting automatic recovery should use the factored
/// engine, which falls back to the direct route.
pub fn propagate_factored(
    rho0: &AtomState,
    params: &ModelParams,
    grid: &TimeGrid,
) -> Result<Trajectory, RabiError> {
    let states = integrate_riccati(params, grid)?;
    let ee0 = rho0.rho_ee();
    let gg0 = rho0.rho_gg();
    let eg0 = rho0.rho_eg();
    let ge0 = rho0.rho_ge();

    let mut records = Vec::with_capacity(grid.n_samples());
    for (i, s) in states.iter().enumerate() {
        let t = grid.time_at(i);
        let gamma = evaluate_unchecked(params, t).gamma_k;
        let map = assemble_map(s, gamma);
        let damp = (-gamma).exp();
        let rho = AtomDensity {
            ee: C64::new(damp * (map.l * ee0 + map.m * gg0), 0.0),
            gg: C64::new(damp * (map.n * gg0 + map.p * ee0), 0.0),
            eg: damp * (map.x * eg0 + map.y * ge0),
            ge: damp * (map.q * ge0 + map.r * eg0),
        };
        records.push(Sample::from_rho(rho, Some(map)));
    }

    Ok(Trajectory {
        params: *params,
        times: grid.times(),
        records,
        engine: "factored",
        used_fallback: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(omega0: f64, delta: f64, g: f64) -> ModelParams {
        ModelParams::from_detuning(omega0, delta, g).unwrap()
    }

    #[test]
    fn identity_at_origin_both_paths() {
        let p = params(10.0, 0.0, 1.0);
        let grid = TimeGrid::new(1.0, 0.01).unwrap();
        let rho0 = AtomState::excited();
        let dir = propagate_direct(&rho0, &p, &grid).unwrap();
        let fac = propagate_factored(&rho0, &p, &grid).unwrap();
        assert_eq!(dir.records[0].rho, rho0.density());
        assert_eq!(fac.records[0].rho, rho0.density());
        assert_eq!(dir.records[0].pe, 1.0);
    }

    #[test]
    fn zero_coupling_freezes_populations() {
        let p = params(10.0, 0.0, 0.0);
        let grid = TimeGrid::new(5.0, 0.01).unwrap();
        let dir = propagate_direct(&AtomState::excited(), &p, &grid).unwrap();
        let fac = propagate_factored(&AtomState::excited(), &p, &grid).unwrap();
        for s in dir.records.iter().chain(&fac.records) {
            assert!((s.pe - 1.0).abs() < 1e-12);
        }
        // and a ground atom stays unexcited
        let fac = propagate_factored(&AtomState::ground(), &p, &grid).unwrap();
        for s in &fac.records {
            assert!(s.pe.abs() < 1e-12);
        }
    }

    #[test]
    fn generator_rate_on_ground_state_is_nu_plus() {
        // K₊ maps the ground population onto the excited entry, so the
        // instantaneous growth rate of ρ_ee from diag(0,1) is ν₊ exactly
        let p = params(20.0, 10.0, 1.0);
        let c = evaluate_unchecked(&p, 0.83);
        let d = apply_generator(&c, &AtomState::ground().density());
        assert_eq!(d.ee, C64::new(c.nu_plus, 0.0));
        // and at t = 0 every rate vanishes
        let c0 = evaluate_unchecked(&p, 0.0);
        let d0 = apply_generator(&c0, &AtomState::excited().density());
        assert_eq!(d0.ee, C64::new(0.0, 0.0));
        assert_eq!(d0.gg, C64::new(0.0, 0.0));
    }

    #[test]
    fn sectors_do_not_mix() {
        // populations and coherences evolve in disjoint sub-blocks: a purely
        // diagonal state stays diagonal, a purely off-diagonal part never
        // feeds the diagonal
        let p = params(20.0, 2.0, 1.0);
        let c = evaluate_unchecked(&p, 1.1);
        let diag = AtomDensity {
            ee: C64::new(0.3, 0.0),
            eg: C64::new(0.0, 0.0),
            ge: C64::new(0.0, 0.0),
            gg: C64::new(0.7, 0.0),
        };
        let d = apply_generator(&c, &diag);
        assert_eq!(d.eg, C64::new(0.0, 0.0));
        assert_eq!(d.ge, C64::new(0.0, 0.0));

        let coh = AtomDensity {
            ee: C64::new(0.0, 0.0),
            eg: C64::new(0.5, -0.2),
            ge: C64::new(0.5, 0.2),
            gg: C64::new(0.0, 0.0),
        };
        let d = apply_generator(&c, &coh);
        assert_eq!(d.ee, C64::new(0.0, 0.0));
        assert_eq!(d.gg, C64::new(0.0, 0.0));
    }

    #[test]
    fn routes_agree_on_short_run() {
        let p = params(20.0, 2.0, 1.0);
        let grid = TimeGrid::with_default_step(&p, 2.0).unwrap();
        let rho = AtomDensity {
            ee: C64::new(0.5, 0.0),
            eg: C64::new(0.5, 0.0),
            ge: C64::new(0.5, 0.0),
            gg: C64::new(0.5, 0.0),
        };
        let rho0 = AtomState::custom(rho).unwrap();
        let dir = propagate_direct(&rho0, &p, &grid).unwrap();
        let fac = propagate_factored(&rho0, &p, &grid).unwrap();
        assert!(dir.max_elementwise_diff(&fac).unwrap() < 1e-8);
    }

    #[test]
    fn populations_stay_real_on_factored_route() {
        let p = params(10.0, 2.0, 1.0);
        let grid = TimeGrid::with_default_step(&p, 3.0).unwrap();
        let fac = propagate_factored(&AtomState::excited(), &p, &grid).unwrap();
        for s in &fac.records {
            assert_eq!(s.rho.ee.im, 0.0);
            assert_eq!(s.rho.gg.im, 0.0);
        }
    }

    #[test]
    fn trace_identities_of_the_map() {
        // e^{−Γ}(l+p) and e^{−Γ}(m+n) stay pinned to one
        let p = params(10.0, 0.0, 1.0);
        let grid = TimeGrid::with_default_step(&p, 3.0).unwrap();
        let fac = propagate_factored(&AtomState::excited(), &p, &grid).unwrap();
        for s in &fac.records {
            let m = s.map.unwrap();
            let damp = (-m.gamma_k).exp();
            assert!((damp * (m.l + m.p) - 1.0).abs() < 1e-8);
            assert!((damp * (m.m + m.n) - 1.0).abs() < 1e-8);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn hermitian_state(ee: f64, re: f64, im: f64) -> AtomState {
            // scale the coherence inside the positivity disc
            let gg = 1.0 - ee;
            let cap = (ee * gg).sqrt();
            let raw = C64::new(re, im);
            let eg = if raw.norm() > 1e-12 {
                raw / raw.norm() * cap * 0.9
            } else {
                raw
            };
            AtomState::custom(AtomDensity {
                ee: C64::new(ee, 0.0),
                eg,
                ge: eg.conj(),
                gg: C64::new(gg, 0.0),
            })
            .unwrap()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(16))]

            // the generator preserves Hermiticity: ε₀ is purely imaginary
            // and ε₋ = conj ε₊
            #[test]
            fn hermiticity_preserved(
                ee in 0.05f64..0.95,
                re in -1.0f64..1.0,
                im in -1.0f64..1.0,
            ) {
                let p = params(20.0, 2.0, 1.0);
                let grid = TimeGrid::with_default_step(&p, 2.0).unwrap();
                let rho0 = hermitian_state(ee, re, im);
                let dir = propagate_direct(&rho0, &p, &grid).unwrap();
                let fac = propagate_factored(&rho0, &p, &grid).unwrap();
                prop_assert!(dir.max_herm_err() <= 1e-8);
                prop_assert!(fac.max_herm_err() <= 1e-8);
                prop_assert!(dir.max_trace_err() <= 1e-8);
                prop_assert!(fac.max_trace_err() <= 1e-8);
            }

            // populations never develop an imaginary part
            #[test]
            fn populations_real(ee in 0.0f64..1.0) {
                let p = params(10.0, 6.0, 1.0);
                let grid = TimeGrid::with_default_step(&p, 2.0).unwrap();
                let rho0 = hermitian_state(ee, 0.0, 0.0);
                let dir = propagate_direct(&rho0, &p, &grid).unwrap();
                for s in &dir.records {
                    prop_assert!(s.rho.ee.im.abs() <= 1e-12);
                    prop_assert!(s.rho.gg.im.abs() <= 1e-12);
                }
            }
        }
    }
}
