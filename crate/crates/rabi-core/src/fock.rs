//! Brute-force reference: the full atom-field Hamiltonian in a truncated
//! Fock basis, evolved exactly by Hermitian eigendecomposition.
//!
//! Basis order is |e,0⟩ … |e,n_max⟩, |g,0⟩ … |g,n_max⟩. The full coupling
//! g(σ₊+σ₋)(a†+a) keeps both the rotating terms σ₊a, σ₋a† and the
//! counter-rotating terms σ₊a†, σ₋a; `Rwa` mode drops the latter. In full
//! mode the parity exp(iπ(a†a+σ₊σ₋)) commutes with H and serves as an
//! evolution sanity check; in rwa mode the excitation number does.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::atom::AtomDensity;
use crate::error::RabiError;
use crate::params::ModelParams;

/// Which coupling terms the Hamiltonian keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingMode {
    /// g(σ₊+σ₋)(a†+a): rotating and counter-rotating terms.
    Full,
    /// g(σ₊a + σ₋a†): rotating terms only.
    Rwa,
}

/// Atom level of a basis state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomLevel {
    Excited,
    Ground,
}

/// Joint atom-field pure state on the truncated basis.
#[derive(Debug, Clone, PartialEq)]
pub struct JointState {
    amplitudes: DVector<C64>,
    n_max: usize,
}

impl JointState {
    /// |level, n⟩.
    pub fn basis_state(level: AtomLevel, n: usize, n_max: usize) -> Result<Self, RabiError> {
        if n > n_max {
            return Err(RabiError::Fock(format!(
                "photon number {n} exceeds truncation {n_max}"
            )));
        }
        let mut amplitudes = DVector::from_element(2 * (n_max + 1), C64::new(0.0, 0.0));
        let offset = match level {
            AtomLevel::Excited => 0,
            AtomLevel::Ground => n_max + 1,
        };
        amplitudes[offset + n] = C64::new(1.0, 0.0);
        Ok(Self { amplitudes, n_max })
    }

    /// (c_e|e⟩ + c_g|g⟩) ⊗ |0⟩, renormalized.
    pub fn from_atom_amplitudes(ce: C64, cg: C64, n_max: usize) -> Result<Self, RabiError> {
        let norm = (ce.norm_sqr() + cg.norm_sqr()).sqrt();
        if norm < 1e-15 {
            return Err(RabiError::Fock("atom amplitudes are all zero".into()));
        }
        let mut amplitudes = DVector::from_element(2 * (n_max + 1), C64::new(0.0, 0.0));
        amplitudes[0] = ce / norm;
        amplitudes[n_max + 1] = cg / norm;
        Ok(Self { amplitudes, n_max })
    }

    pub fn from_amplitudes(amplitudes: DVector<C64>, n_max: usize) -> Result<Self, RabiError> {
        if amplitudes.len() != 2 * (n_max + 1) {
            return Err(RabiError::Fock(format!(
                "amplitude vector has length {} but the basis needs {}",
                amplitudes.len(),
                2 * (n_max + 1)
            )));
        }
        let state = Self { amplitudes, n_max };
        let norm = state.norm();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(RabiError::Fock(format!(
                "state norm is {norm:.15}, expected 1 within 1e-12"
            )));
        }
        Ok(state)
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn amplitudes(&self) -> &DVector<C64> {
        &self.amplitudes
    }

    pub fn amplitude(&self, level: AtomLevel, n: usize) -> C64 {
        let offset = match level {
            AtomLevel::Excited => 0,
            AtomLevel::Ground => self.n_max + 1,
        };
        self.amplitudes[offset + n]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Σ_n |⟨e,n|ψ⟩|².
    pub fn excited_probability(&self) -> f64 {
        (0..=self.n_max)
            .map(|n| self.amplitude(AtomLevel::Excited, n).norm_sqr())
            .sum()
    }
}

/// Dense Hermitian matrix of the truncated model.
#[derive(Debug, Clone)]
pub struct RabiHamiltonian {
    matrix: DMatrix<C64>,
    n_max: usize,
    mode: CouplingMode,
}

impl RabiHamiltonian {
    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.matrix
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn mode(&self) -> CouplingMode {
        self.mode
    }

    pub fn dim(&self) -> usize {
        2 * (self.n_max + 1)
    }
}

/// Assemble H = ω₀σ_z/2 + ω a†a + coupling with √(n+1) ladder factors.
/// The matrix is Hermitian entry-by-entry by construction.
pub fn build_hamiltonian(
    params: &ModelParams,
    n_max: usize,
    mode: CouplingMode,
) -> Result<RabiHamiltonian, RabiError> {
    if n_max < 1 {
        let why = match mode {
            CouplingMode::Full => {
                "the counter-rotating coupling |g,0⟩↔|e,1⟩ needs at least one photon"
            }
            CouplingMode::Rwa => "the rotating coupling |e,0⟩↔|g,1⟩ needs at least one photon",
        };
        return Err(RabiError::Fock(format!("n_max must be at least 1: {why}")));
    }
    let dim = 2 * (n_max + 1);
    let ie = |n: usize| n;
    let ig = |n: usize| n_max + 1 + n;
    let mut h = DMatrix::from_element(dim, dim, C64::new(0.0, 0.0));

    for n in 0..=n_max {
        h[(ie(n), ie(n))] = C64::new(0.5 * params.omega0() + params.omega() * n as f64, 0.0);
        h[(ig(n), ig(n))] = C64::new(-0.5 * params.omega0() + params.omega() * n as f64, 0.0);
    }
    for n in 0..=n_max {
        // rotating: σ₊a couples |g,n⟩ → |e,n−1⟩ with g√n
        if n >= 1 {
            let v = C64::new(params.g() * (n as f64).sqrt(), 0.0);
            h[(ie(n - 1), ig(n))] += v;
            h[(ig(n), ie(n - 1))] += v;
        }
        // counter-rotating: σ₊a† couples |g,n⟩ → |e,n+1⟩ with g√(n+1)
        if mode == CouplingMode::Full && n < n_max {
            let v = C64::new(params.g() * ((n + 1) as f64).sqrt(), 0.0);
            h[(ie(n + 1), ig(n))] += v;
            h[(ig(n), ie(n + 1))] += v;
        }
    }

    Ok(RabiHamiltonian {
        matrix: h,
        n_max,
        mode,
    })
}

/// Evolve ψ(t) = exp(−iHt)·ψ₀ on every requested time through a single
/// Hermitian eigendecomposition.
pub fn evolve(
    psi0: &JointState,
    hamiltonian: &RabiHamiltonian,
    times: &[f64],
) -> Result<Vec<JointState>, RabiError> {
    if psi0.amplitudes.len() != hamiltonian.dim() {
        return Err(RabiError::Fock(format!(
            "state dimension {} does not match hamiltonian dimension {}",
            psi0.amplitudes.len(),
            hamiltonian.dim()
        )));
    }
    if hamiltonian
        .matrix
        .iter()
        .any(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return Err(RabiError::Fock(
            "hamiltonian contains non-finite entries; eigendecomposition aborted".into(),
        ));
    }

    let eig = hamiltonian.matrix.clone().symmetric_eigen();
    let vectors = &eig.eigenvectors;
    let weights = vectors.adjoint() * &psi0.amplitudes;

    let mut out = Vec::with_capacity(times.len());
    for &t in times {
        let phased = DVector::from_iterator(
            weights.len(),
            weights
                .iter()
                .zip(eig.eigenvalues.iter())
                .map(|(w, &e)| w * C64::new(0.0, -e * t).exp()),
        );
        let amplitudes = vectors * phased;
        out.push(JointState {
            amplitudes,
            n_max: psi0.n_max,
        });
    }
    Ok(out)
}

/// Partial trace over the field mode.
pub fn reduced_atom_state(psi: &JointState) -> AtomDensity {
    let mut ee = 0.0;
    let mut gg = 0.0;
    let mut eg = C64::new(0.0, 0.0);
    for n in 0..=psi.n_max {
        let ae = psi.amplitude(AtomLevel::Excited, n);
        let ag = psi.amplitude(AtomLevel::Ground, n);
        ee += ae.norm_sqr();
        gg += ag.norm_sqr();
        eg += ae * ag.conj();
    }
    AtomDensity {
        ee: C64::new(ee, 0.0),
        eg,
        ge: eg.conj(),
        gg: C64::new(gg, 0.0),
    }
}

/// ⟨ψ|Π|ψ⟩ with Π diagonal, entries (−1)^{n+level} (excited level counts 1).
pub fn parity_expectation(psi: &JointState) -> f64 {
    let mut total = 0.0;
    for n in 0..=psi.n_max {
        let sign_e = if (n + 1) % 2 == 0 { 1.0 } else { -1.0 };
        let sign_g = if n % 2 == 0 { 1.0 } else { -1.0 };
        total += sign_e * psi.amplitude(AtomLevel::Excited, n).norm_sqr();
        total += sign_g * psi.amplitude(AtomLevel::Ground, n).norm_sqr();
    }
    total
}

/// Truncation certificate: max over `times` of the excited-probability shift
/// when the cutoff doubles, starting from |e,0⟩.
pub fn truncation_check(
    params: &ModelParams,
    n_max: usize,
    mode: CouplingMode,
    times: &[f64],
) -> Result<f64, RabiError> {
    let series = |cutoff: usize| -> Result<Vec<f64>, RabiError> {
        let h = build_hamiltonian(params, cutoff, mode)?;
        let psi0 = JointState::basis_state(AtomLevel::Excited, 0, cutoff)?;
        Ok(evolve(&psi0, &h, times)?
            .iter()
            .map(JointState::excited_probability)
            .collect())
    };
    let coarse = series(n_max)?;
    let fine = series(2 * n_max)?;
    Ok(coarse
        .iter()
        .zip(&fine)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}
