//! Atom density matrices: a raw 2×2 complex form used by the integrators and
//! a validated form used for initial conditions.
//!
//! Basis order is (excited, ground) everywhere, so the (0,0) entry is the
//! excited-state population.

use num_complex::Complex64 as C64;

use crate::error::RabiError;

/// Tolerance on the unit-trace check at construction.
pub const TRACE_TOL: f64 = 1e-12;

/// Tolerance on the Hermiticity check at construction.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Raw 2×2 complex matrix in the (excited, ground) basis.
///
/// Carries no invariants: the direct integrator evolves all four entries
/// independently so that trace and Hermiticity drift remain observable
/// diagnostics rather than being enforced away.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomDensity {
    /// ⟨e|ρ|e⟩
    pub ee: C64,
    /// ⟨e|ρ|g⟩
    pub eg: C64,
    /// ⟨g|ρ|e⟩
    pub ge: C64,
    /// ⟨g|ρ|g⟩
    pub gg: C64,
}

impl AtomDensity {
    pub fn zero() -> Self {
        let z = C64::new(0.0, 0.0);
        Self { ee: z, eg: z, ge: z, gg: z }
    }

    pub fn trace(&self) -> C64 {
        self.ee + self.gg
    }

    /// |tr ρ − 1|
    pub fn trace_error(&self) -> f64 {
        (self.trace() - C64::new(1.0, 0.0)).norm()
    }

    /// |ρ_eg − conj(ρ_ge)|
    pub fn hermiticity_error(&self) -> f64 {
        (self.eg - self.ge.conj()).norm()
    }

    /// Excited-state population, Re ⟨e|ρ|e⟩.
    pub fn pe(&self) -> f64 {
        self.ee.re
    }

    pub fn is_finite(&self) -> bool {
        [self.ee, self.eg, self.ge, self.gg]
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub(crate) fn scaled(&self, s: f64) -> Self {
        Self {
            ee: s * self.ee,
            eg: s * self.eg,
            ge: s * self.ge,
            gg: s * self.gg,
        }
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        Self {
            ee: self.ee + other.ee,
            eg: self.eg + other.eg,
            ge: self.ge + other.ge,
            gg: self.gg + other.gg,
        }
    }

    /// Largest entry-wise absolute difference from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            self.ee - other.ee,
            self.eg - other.eg,
            self.ge - other.ge,
            self.gg - other.gg,
        ]
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
    }
}

/// Validated atom state: Hermitian, unit trace, real populations. Used for
/// initial conditions; propagation works on [`AtomDensity`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomState {
    rho_ee: f64,
    rho_gg: f64,
    rho_eg: C64,
}

/// Initial-state selector, including an arbitrary validated matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StatePrep {
    Excited,
    Ground,
    Custom(AtomDensity),
}

/// Build a validated [`AtomState`] from a selector.
pub fn make_atom_state(prep: StatePrep) -> Result<AtomState, RabiError> {
    match prep {
        StatePrep::Excited => Ok(AtomState::excited()),
        StatePrep::Ground => Ok(AtomState::ground()),
        StatePrep::Custom(rho) => AtomState::custom(rho),
    }
}

impl AtomState {
    /// ρ = diag(1, 0).
    pub fn excited() -> Self {
        Self {
            rho_ee: 1.0,
            rho_gg: 0.0,
            rho_eg: C64::new(0.0, 0.0),
        }
    }

    /// ρ = diag(0, 1).
    pub fn ground() -> Self {
        Self {
            rho_ee: 0.0,
            rho_gg: 1.0,
            rho_eg: C64::new(0.0, 0.0),
        }
    }

    /// Validate a caller-supplied matrix. Rejects non-Hermitian or
    /// non-unit-trace input, naming the violated invariant; accepted states
    /// are renormalized so the stored trace is exactly one.
    pub fn custom(rho: AtomDensity) -> Result<Self, RabiError> {
        if !rho.is_finite() {
            return Err(RabiError::InvalidState("entries must be finite".into()));
        }
        if rho.ee.im.abs() > HERMITICITY_TOL || rho.gg.im.abs() > HERMITICITY_TOL {
            return Err(RabiError::InvalidState(format!(
                "Hermiticity violated: populations must be real \
                 (Im ρ_ee = {:.3e}, Im ρ_gg = {:.3e})",
                rho.ee.im, rho.gg.im
            )));
        }
        let herm = rho.hermiticity_error();
        if herm > HERMITICITY_TOL {
            return Err(RabiError::InvalidState(format!(
                "Hermiticity violated: |ρ_eg − conj(ρ_ge)| = {herm:.3e}"
            )));
        }
        let trace = rho.ee.re + rho.gg.re;
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(RabiError::InvalidState(format!(
                "unit trace violated: tr ρ = {trace:.15}"
            )));
        }
        Ok(Self {
            rho_ee: rho.ee.re / trace,
            rho_gg: rho.gg.re / trace,
            rho_eg: rho.eg,
        })
    }

    pub fn rho_ee(&self) -> f64 {
        self.rho_ee
    }

    pub fn rho_gg(&self) -> f64 {
        self.rho_gg
    }

    pub fn rho_eg(&self) -> C64 {
        self.rho_eg
    }

    pub fn rho_ge(&self) -> C64 {
        self.rho_eg.conj()
    }

    pub fn density(&self) -> AtomDensity {
        AtomDensity {
            ee: C64::new(self.rho_ee, 0.0),
            eg: self.rho_eg,
            ge: self.rho_eg.conj(),
            gg: C64::new(self.rho_gg, 0.0),
        }
    }

    /// Spectral decomposition into at most two weighted pure states
    /// (weight, [amplitude on |e⟩, amplitude on |g⟩]). Weights sum to the
    /// trace; negligible components are dropped.
    pub fn pure_components(&self) -> Vec<(f64, [C64; 2])> {
        let b = self.rho_eg;
        if b.norm() < 1e-15 {
            let mut out = Vec::new();
            if self.rho_ee.abs() > 1e-15 {
                out.push((self.rho_ee, [C64::new(1.0, 0.0), C64::new(0.0, 0.0)]));
            }
            if self.rho_gg.abs() > 1e-15 {
                out.push((self.rho_gg, [C64::new(0.0, 0.0), C64::new(1.0, 0.0)]));
            }
            return out;
        }
        let mean = 0.5 * (self.rho_ee + self.rho_gg);
        let half_gap = 0.5 * (self.rho_ee - self.rho_gg);
        let disc = (half_gap * half_gap + b.norm_sqr()).sqrt();
        let mut out = Vec::new();
        for lambda in [mean + disc, mean - disc] {
            // eigenvector of [[ee, b], [conj(b), gg]] for eigenvalue lambda
            let v0 = b;
            let v1 = C64::new(lambda - self.rho_ee, 0.0);
            let norm = (v0.norm_sqr() + v1.norm_sqr()).sqrt();
            if norm < 1e-15 || lambda.abs() < 1e-15 {
                continue;
            }
            out.push((lambda, [v0 / norm, v1 / norm]));
        }
        out
    }
}
