//! Disentangling variables and the map coefficients built from them.
//!
//! Factoring the time-ordered exponential of each generator sector into
//! exp(X₊·S₊)·exp(X₀·S₀)·exp(X₋·S₋) turns propagation into six scalar ODEs
//!
//! ```text
//! Ẋ₊ = μ₊ − μ₋X₊² + μ₀X₊
//! Ẋ₀ = μ₀ − 2μ₋X₊
//! Ẋ₋ = μ₋·exp(X₀)
//! ```
//!
//! with μ = ε for the coherence (j) sector and μ = ν for the population (k)
//! sector. The ε coefficients are complex and the ν real, so the j variables
//! are complex and the k variables stay real. The first equation is a
//! genuine Riccati equation and can diverge in finite time for some
//! parameter regimes; integration aborts with a diagnostic once a variable
//! passes [`BLOWUP_GUARD`].
//!
//! All six variables start at zero: the factored map at t = 0 must be the
//! identity, which pins the initial data (see [`assemble_map`]).

use num_complex::Complex64 as C64;

use crate::coeffs::{evaluate_unchecked, CoefficientSet};
use crate::error::RabiError;
use crate::grid::TimeGrid;
use crate::params::ModelParams;

/// Divergence guard on |j₊| and |k₊|.
pub const BLOWUP_GUARD: f64 = 1e12;

/// The six disentangling variables at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiccatiState {
    pub j_plus: C64,
    pub j_zero: C64,
    pub j_minus: C64,
    pub k_plus: f64,
    pub k_zero: f64,
    pub k_minus: f64,
}

impl RiccatiState {
    pub fn zero() -> Self {
        let z = C64::new(0.0, 0.0);
        Self {
            j_plus: z,
            j_zero: z,
            j_minus: z,
            k_plus: 0.0,
            k_zero: 0.0,
            k_minus: 0.0,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.j_plus.is_finite()
            && self.j_zero.is_finite()
            && self.j_minus.is_finite()
            && self.k_plus.is_finite()
            && self.k_zero.is_finite()
            && self.k_minus.is_finite()
    }
}

#[derive(Clone, Copy)]
struct JSector([C64; 3]);

#[derive(Clone, Copy)]
struct KSector([f64; 3]);

fn j_rhs(c: &CoefficientSet, y: &JSector) -> JSector {
    let [jp, j0, _] = y.0;
    JSector([
        c.eps_plus - c.eps_minus * jp * jp + c.eps0 * jp,
        c.eps0 - 2.0 * c.eps_minus * jp,
        c.eps_minus * j0.exp(),
    ])
}

fn k_rhs(c: &CoefficientSet, y: &KSector) -> KSector {
    let [kp, k0, _] = y.0;
    KSector([
        c.nu_plus - c.nu_minus * kp * kp + c.nu0 * kp,
        c.nu0 - 2.0 * c.nu_minus * kp,
        c.nu_minus * k0.exp(),
    ])
}

impl JSector {
    fn add_scaled(&self, k: &JSector, h: f64) -> JSector {
        JSector([
            self.0[0] + h * k.0[0],
            self.0[1] + h * k.0[1],
            self.0[2] + h * k.0[2],
        ])
    }
}

impl KSector {
    fn add_scaled(&self, k: &KSector, h: f64) -> KSector {
        KSector([
            self.0[0] + h * k.0[0],
            self.0[1] + h * k.0[1],
            self.0[2] + h * k.0[2],
        ])
    }
}

/// One classical fourth-order step of both sectors. The coefficient sets are
/// the exact closed forms at the step start, midpoint, and end.
fn rk4_step(
    c0: &CoefficientSet,
    cm: &CoefficientSet,
    c1: &CoefficientSet,
    h: f64,
    j: &mut JSector,
    k: &mut KSector,
) {
    let j1 = j_rhs(c0, j);
    let j2 = j_rhs(cm, &j.add_scaled(&j1, h / 2.0));
    let j3 = j_rhs(cm, &j.add_scaled(&j2, h / 2.0));
    let j4 = j_rhs(c1, &j.add_scaled(&j3, h));
    for i in 0..3 {
        j.0[i] += h / 6.0 * (j1.0[i] + 2.0 * j2.0[i] + 2.0 * j3.0[i] + j4.0[i]);
    }

    let k1 = k_rhs(c0, k);
    let k2 = k_rhs(cm, &k.add_scaled(&k1, h / 2.0));
    let k3 = k_rhs(cm, &k.add_scaled(&k2, h / 2.0));
    let k4 = k_rhs(c1, &k.add_scaled(&k3, h));
    for i in 0..3 {
        k.0[i] += h / 6.0 * (k1.0[i] + 2.0 * k2.0[i] + 2.0 * k3.0[i] + k4.0[i]);
    }
}

/// Integrate the six disentangling ODEs over the grid, returning one state
/// per sample (the first is all zeros).
pub fn integrate_riccati(
    params: &ModelParams,
    grid: &TimeGrid,
) -> Result<Vec<RiccatiState>, RabiError> {
    let h = grid.dt();
    let mut j = JSector([C64::new(0.0, 0.0); 3]);
    let mut k = KSector([0.0; 3]);
    let mut out = Vec::with_capacity(grid.n_samples());
    out.push(RiccatiState::zero());

    for i in 0..grid.n_steps() {
        let t0 = grid.time_at(i);
        let t1 = grid.time_at(i + 1);
        let c0 = evaluate_unchecked(params, t0);
        let cm = evaluate_unchecked(params, 0.5 * (t0 + t1));
        let c1 = evaluate_unchecked(params, t1);
        rk4_step(&c0, &cm, &c1, h, &mut j, &mut k);

        let state = RiccatiState {
            j_plus: j.0[0],
            j_zero: j.0[1],
            j_minus: j.0[2],
            k_plus: k.0[0],
            k_zero: k.0[1],
            k_minus: k.0[2],
        };
        if !state.is_finite() || state.j_plus.norm() > BLOWUP_GUARD || state.k_plus.abs() > BLOWUP_GUARD
        {
            return Err(RabiError::RiccatiBlowUp {
                t: t1,
                guard: BLOWUP_GUARD,
            });
        }
        out.push(state);
    }
    Ok(out)
}

/// The eight linear-map coefficients plus the damping exponent.
///
/// At t = 0 (all disentangling variables zero) the map is the identity:
/// l = n = q = x = 1 and m = p = r = y = 0 with Γ_k = 0. Trace preservation
/// of the generator makes e^{−Γ_k}(l + p) and e^{−Γ_k}(m + n) equal one up
/// to integration error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapCoefficients {
    pub l: f64,
    pub m: f64,
    pub n: f64,
    pub p: f64,
    pub q: C64,
    pub r: C64,
    pub x: C64,
    pub y: C64,
    pub gamma_k: f64,
}

/// Build the map coefficients from a disentangling state and the closed-form
/// damping exponent at the same time.
pub fn assemble_map(s: &RiccatiState, gamma_k: f64) -> MapCoefficients {
    let ek = (0.5 * s.k_zero).exp();
    let ek_inv = (-0.5 * s.k_zero).exp();
    let ej = (0.5 * s.j_zero).exp();
    let ej_inv = (-0.5 * s.j_zero).exp();
    MapCoefficients {
        l: ek + ek_inv * s.k_plus * s.k_minus,
        m: ek_inv * s.k_plus,
        n: ek_inv,
        p: ek_inv * s.k_minus,
        q: ej_inv,
        r: ej_inv * s.j_minus,
        x: ej + ej_inv * s.j_plus * s.j_minus,
        y: ej_inv * s.j_plus,
        gamma_k,
    }
}
