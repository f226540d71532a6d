//! Closed-form time-dependent coefficients of the reduced generator.
//!
//! Both memory kernels are one oscillatory primitive evaluated at different
//! frequencies: with k(x, t) = (e^{ixt} − 1)/(ix) and
//! K(x, t) = (1 + ixt − e^{ixt})/x²,
//!
//! - α(t) = k(−Δ, t), α̃(t) = K(−Δ, t) with Δ = ω₀ + ω (counter-rotating),
//! - f(t) = k(δ, t),  F(t) = K(δ, t)  with δ = ω₀ − ω (rotating).
//!
//! Near x·t = 0 both expressions lose digits to cancellation, and at δ = 0
//! they are 0/0, so below [`SERIES_THRESHOLD`] they switch to four-term
//! Taylor forms; the truncation error at the seam is below 1e−16 relative.

use num_complex::Complex64 as C64;

use crate::error::RabiError;
use crate::params::ModelParams;

/// |x·t| below which the kernels use their Taylor forms.
pub const SERIES_THRESHOLD: f64 = 1e-4;

fn kernel_closed(x: f64, t: f64) -> C64 {
    let e = C64::new(0.0, x * t).exp();
    (e - 1.0) / C64::new(0.0, x)
}

fn kernel_series(x: f64, t: f64) -> C64 {
    let u = x * t;
    t * C64::new(1.0 - u * u / 6.0, u / 2.0 - u * u * u / 24.0)
}

fn kernel_integral_closed(x: f64, t: f64) -> C64 {
    let e = C64::new(0.0, x * t).exp();
    (C64::new(1.0, x * t) - e) / (x * x)
}

fn kernel_integral_series(x: f64, t: f64) -> C64 {
    let u = x * t;
    (t * t) * C64::new(0.5 - u * u / 24.0, u / 6.0 - u * u * u / 120.0)
}

/// (e^{ixt} − 1)/(ix), series-protected near x·t = 0.
pub fn phase_kernel(x: f64, t: f64) -> C64 {
    if (x * t).abs() < SERIES_THRESHOLD {
        kernel_series(x, t)
    } else {
        kernel_closed(x, t)
    }
}

/// (1 + ixt − e^{ixt})/x², the running integral of [`phase_kernel`],
/// series-protected near x·t = 0.
pub fn phase_kernel_integral(x: f64, t: f64) -> C64 {
    if (x * t).abs() < SERIES_THRESHOLD {
        kernel_integral_series(x, t)
    } else {
        kernel_integral_closed(x, t)
    }
}

/// Every time-dependent scalar of the reduced generator at one instant.
///
/// The ε coefficients drive the coherence (J) sector, the ν coefficients the
/// population (K) sector, and `gamma_k` is the scalar damping exponent whose
/// derivative `gamma_k_dot = g²(Re α + Re f)` multiplies the identity part of
/// the generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientSet {
    /// Counter-rotating memory kernel α(t).
    pub alpha: C64,
    /// Rotating memory kernel f(t).
    pub f: C64,
    /// α̃(t) = ∫₀ᵗ α dt′.
    pub alpha_tilde: C64,
    /// F(t) = ∫₀ᵗ f dt′.
    pub f_int: C64,
    /// ε₀ = −2i(ω₀ − g² Im α + g² Im f); purely imaginary.
    pub eps0: C64,
    /// ε₊ = g²(α + conj f).
    pub eps_plus: C64,
    /// ε₋ = g²(conj α + f) = conj ε₊.
    pub eps_minus: C64,
    /// ν₀ = 2g²(Re α − Re f).
    pub nu0: f64,
    /// ν₊ = 2g² Re α.
    pub nu_plus: f64,
    /// ν₋ = 2g² Re f.
    pub nu_minus: f64,
    /// Γ_k = g²(Re α̃ + Re F).
    pub gamma_k: f64,
    /// dΓ_k/dt = g²(Re α + Re f).
    pub gamma_k_dot: f64,
}

/// Evaluate all generator coefficients at time `t`.
pub fn evaluate_coefficients(params: &ModelParams, t: f64) -> Result<CoefficientSet, RabiError> {
    if !t.is_finite() {
        return Err(RabiError::InvalidParameter(format!(
            "time must be finite (got {t})"
        )));
    }
    Ok(evaluate_unchecked(params, t))
}

pub(crate) fn evaluate_unchecked(params: &ModelParams, t: f64) -> CoefficientSet {
    let big = params.sum_frequency();
    let delta = params.detuning();
    let g2 = params.g() * params.g();

    let alpha = phase_kernel(-big, t);
    let f = phase_kernel(delta, t);
    let alpha_tilde = phase_kernel_integral(-big, t);
    let f_int = phase_kernel_integral(delta, t);

    CoefficientSet {
        alpha,
        f,
        alpha_tilde,
        f_int,
        eps0: C64::new(0.0, -2.0 * (params.omega0() - g2 * alpha.im + g2 * f.im)),
        eps_plus: g2 * (alpha + f.conj()),
        eps_minus: g2 * (alpha.conj() + f),
        nu0: 2.0 * g2 * (alpha.re - f.re),
        nu_plus: 2.0 * g2 * alpha.re,
        nu_minus: 2.0 * g2 * f.re,
        gamma_k: g2 * (alpha_tilde.re + f_int.re),
        gamma_k_dot: g2 * (alpha.re + f.re),
    }
}
