//! Series estimators for the quantities the result figures discuss:
//! oscillation extrema, dominant periods, and envelope deviations.
//!
//! Periods are estimated from the spacing of local maxima rather than a
//! spectral transform: the series are short and damped, and the claims under
//! test concern the visible oscillation. Smoothing (a centered moving
//! average, off by default) separates a slow oscillation from small rapid
//! ripple when both are present.

use crate::error::RabiError;

/// Minimum number of samples accepted by [`find_extrema`].
pub const MIN_SAMPLES: usize = 16;

/// Period estimate from maxima spacing: mean spacing plus its standard
/// deviation as the uncertainty.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodEstimate {
    pub period: f64,
    pub uncertainty: f64,
}

/// Extrema and derived oscillation measures of one series.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSummary {
    pub local_maxima: Vec<(f64, f64)>,
    pub local_minima: Vec<(f64, f64)>,
    /// Present when at least two maxima exist.
    pub dominant_period: Option<PeriodEstimate>,
    /// Highest maximum minus lowest minimum; zero when either list is empty.
    pub peak_to_trough: f64,
}

fn moving_average(values: &[f64], window: usize) -> Vec<f64> {
    if window <= 1 {
        return values.to_vec();
    }
    let half = window / 2;
    (0..values.len())
        .map(|i| {
            let lo = i.saturating_sub(half);
            let hi = (i + half + 1).min(values.len());
            values[lo..hi].iter().sum::<f64>() / (hi - lo) as f64
        })
        .collect()
}

/// Locate local extrema by slope sign change after optional smoothing.
///
/// Zero differences inherit the previous direction, so maxima and minima
/// strictly alternate and a constant series yields no extrema at all.
pub fn find_extrema(
    times: &[f64],
    values: &[f64],
    smoothing_window: usize,
) -> Result<SeriesSummary, RabiError> {
    if times.len() != values.len() {
        return Err(RabiError::GridMismatch);
    }
    if times.len() < MIN_SAMPLES {
        return Err(RabiError::Series(format!(
            "series too short: {} samples, need at least {MIN_SAMPLES}",
            times.len()
        )));
    }
    let dt = times[1] - times[0];
    if dt <= 0.0 {
        return Err(RabiError::Series("times must be increasing".into()));
    }
    for w in times.windows(2) {
        if ((w[1] - w[0]) - dt).abs() > 1e-6 * dt.abs() {
            return Err(RabiError::Series("grid must be uniform".into()));
        }
    }

    let smoothed = moving_average(values, smoothing_window);
    let mut maxima = Vec::new();
    let mut minima = Vec::new();
    let mut direction = 0i8;
    for i in 1..smoothed.len() {
        let d = smoothed[i] - smoothed[i - 1];
        let new_dir = if d > 0.0 {
            1
        } else if d < 0.0 {
            -1
        } else {
            direction
        };
        if direction == 1 && new_dir == -1 {
            maxima.push((times[i - 1], smoothed[i - 1]));
        } else if direction == -1 && new_dir == 1 {
            minima.push((times[i - 1], smoothed[i - 1]));
        }
        direction = new_dir;
    }

    let dominant_period = if maxima.len() >= 2 {
        let spacings: Vec<f64> = maxima.windows(2).map(|w| w[1].0 - w[0].0).collect();
        let mean = spacings.iter().sum::<f64>() / spacings.len() as f64;
        let var = spacings.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>()
            / spacings.len() as f64;
        Some(PeriodEstimate {
            period: mean,
            uncertainty: var.sqrt(),
        })
    } else {
        None
    };

    let peak_to_trough = match (
        maxima.iter().map(|&(_, v)| v).reduce(f64::max),
        minima.iter().map(|&(_, v)| v).reduce(f64::min),
    ) {
        (Some(hi), Some(lo)) => hi - lo,
        _ => 0.0,
    };

    Ok(SeriesSummary {
        local_maxima: maxima,
        local_minima: minima,
        dominant_period,
        peak_to_trough,
    })
}

/// Reference envelopes for the resonant decay claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnvelopeModel {
    /// exp(−g²t²/2), the decay of the raw l coefficient at resonance.
    GaussianHalf,
    /// exp(−g²t²), the decay of the prefactored excited population.
    Gaussian,
}

impl EnvelopeModel {
    pub fn value(&self, g: f64, t: f64) -> f64 {
        let x = g * g * t * t;
        match self {
            EnvelopeModel::GaussianHalf => (-0.5 * x).exp(),
            EnvelopeModel::Gaussian => (-x).exp(),
        }
    }
}

/// Max absolute deviation of a series from an envelope model. Absolute, not
/// relative: Gaussian tails underflow relative comparisons.
pub fn envelope_check(times: &[f64], values: &[f64], model: EnvelopeModel, g: f64) -> f64 {
    times
        .iter()
        .zip(values)
        .map(|(&t, &v)| (v - model.value(g, t)).abs())
        .fold(0.0, f64::max)
}

/// Element-wise difference statistics between two series on one grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesDiff {
    pub max_abs_diff: f64,
    pub rms_diff: f64,
    /// Time at which the largest difference occurs.
    pub t_of_max: f64,
}

/// Compare two series sample by sample; the grids must match exactly.
pub fn compare_series(
    times_a: &[f64],
    values_a: &[f64],
    times_b: &[f64],
    values_b: &[f64],
) -> Result<SeriesDiff, RabiError> {
    if times_a.len() != times_b.len()
        || times_a.len() != values_a.len()
        || times_b.len() != values_b.len()
        || times_a.iter().zip(times_b).any(|(a, b)| a != b)
    {
        return Err(RabiError::GridMismatch);
    }
    let mut max_abs = 0.0;
    let mut t_of_max = times_a.first().copied().unwrap_or(0.0);
    let mut sum_sq = 0.0;
    for ((&t, &a), &b) in times_a.iter().zip(values_a).zip(values_b) {
        let d = (a - b).abs();
        sum_sq += d * d;
        if d > max_abs {
            max_abs = d;
            t_of_max = t;
        }
    }
    Ok(SeriesDiff {
        max_abs_diff: max_abs,
        rms_diff: (sum_sq / values_a.len() as f64).sqrt(),
        t_of_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn grid(n: usize, dt: f64) -> Vec<f64> {
        (0..n).map(|i| i as f64 * dt).collect()
    }

    #[test]
    fn sinusoid_period_recovered() {
        let period = 2.0;
        let ts = grid(4000, 0.005);
        let ys: Vec<f64> = ts.iter().map(|t| (2.0 * PI * t / period).sin()).collect();
        let s = find_extrema(&ts, &ys, 1).unwrap();
        let est = s.dominant_period.unwrap();
        assert!((est.period - period).abs() <= 0.005, "period {}", est.period);
        assert!(est.uncertainty < 0.01);
        assert!((s.peak_to_trough - 2.0).abs() < 1e-3);
    }

    #[test]
    fn damped_signal_maxima_decrease() {
        let ts = grid(3000, 0.005);
        let ys: Vec<f64> = ts
            .iter()
            .map(|t| (-t * t).exp() * t.cos().powi(2))
            .collect();
        let s = find_extrema(&ts, &ys, 1).unwrap();
        assert!(s.local_maxima.len() >= 2);
        for w in s.local_maxima.windows(2) {
            assert!(w[1].1 <= w[0].1 + 1e-12);
        }
    }

    #[test]
    fn constant_series_has_no_extrema() {
        let ts = grid(64, 0.1);
        let ys = vec![0.7; 64];
        let s = find_extrema(&ts, &ys, 1).unwrap();
        assert!(s.local_maxima.is_empty());
        assert!(s.local_minima.is_empty());
        assert!(s.dominant_period.is_none());
        assert_eq!(s.peak_to_trough, 0.0);
    }

    #[test]
    fn short_series_rejected() {
        let ts = grid(8, 0.1);
        let ys = vec![0.0; 8];
        assert!(find_extrema(&ts, &ys, 1).is_err());
    }

    #[test]
    fn extrema_alternate() {
        let ts = grid(2000, 0.01);
        let ys: Vec<f64> = ts.iter().map(|t| (3.0 * t).sin() + 0.2 * (17.0 * t).sin()).collect();
        let s = find_extrema(&ts, &ys, 1).unwrap();
        let mut events: Vec<(f64, bool)> = s
            .local_maxima
            .iter()
            .map(|&(t, _)| (t, true))
            .chain(s.local_minima.iter().map(|&(t, _)| (t, false)))
            .collect();
        events.sort_by(|a, b| a.0.total_cmp(&b.0));
        for w in events.windows(2) {
            assert_ne!(w[0].1, w[1].1, "extrema must alternate");
        }
    }

    #[test]
    fn smoothing_removes_fast_ripple() {
        // slow sinusoid plus fast ripple: raw detection sees ripple maxima,
        // a window of one ripple period recovers the slow period
        let dt = 0.002;
        let ts = grid(8000, dt);
        let slow = 2.0 * PI / 1.0;
        let fast = 2.0 * PI / 0.05;
        let ys: Vec<f64> = ts
            .iter()
            .map(|t| (slow * t).cos() + 0.01 * (fast * t).cos())
            .collect();
        let window = (0.05 / dt).round() as usize;
        let s = find_extrema(&ts, &ys, window).unwrap();
        let est = s.dominant_period.unwrap();
        assert!((est.period - 1.0).abs() < 0.05, "period {}", est.period);
    }

    #[test]
    fn envelope_zero_on_exact_model() {
        let ts = grid(100, 0.03);
        let g = 1.3;
        let ys: Vec<f64> = ts
            .iter()
            .map(|t| EnvelopeModel::GaussianHalf.value(g, *t))
            .collect();
        assert_eq!(envelope_check(&ts, &ys, EnvelopeModel::GaussianHalf, g), 0.0);
        assert!(envelope_check(&ts, &ys, EnvelopeModel::Gaussian, g) > 0.0);
    }

    #[test]
    fn compare_series_basics() {
        let ts = grid(32, 0.1);
        let a: Vec<f64> = ts.iter().map(|t| t.sin()).collect();
        let d = compare_series(&ts, &a, &ts, &a).unwrap();
        assert_eq!(d.max_abs_diff, 0.0);
        assert_eq!(d.rms_diff, 0.0);

        let b: Vec<f64> = ts.iter().map(|t| t.sin() + 0.1).collect();
        let d = compare_series(&ts, &a, &ts, &b).unwrap();
        assert!((d.max_abs_diff - 0.1).abs() < 1e-12);

        let ts2 = grid(31, 0.1);
        let b2: Vec<f64> = ts2.iter().map(|t| t.sin()).collect();
        assert!(compare_series(&ts, &a, &ts2, &b2).is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // negating a series swaps maxima and minima exactly
            #[test]
            fn negation_swaps_extrema(freq in 0.5f64..5.0, phase in 0.0f64..6.2) {
                let ts: Vec<f64> = (0..1500).map(|i| i as f64 * 0.01).collect();
                let ys: Vec<f64> = ts.iter().map(|t| (freq * t + phase).sin()).collect();
                let neg: Vec<f64> = ys.iter().map(|v| -v).collect();
                let s = find_extrema(&ts, &ys, 1).unwrap();
                let sn = find_extrema(&ts, &neg, 1).unwrap();
                prop_assert_eq!(s.local_maxima.len(), sn.local_minima.len());
                prop_assert_eq!(s.local_minima.len(), sn.local_maxima.len());
                for (a, b) in s.local_maxima.iter().zip(&sn.local_minima) {
                    prop_assert_eq!(a.0, b.0);
                    prop_assert_eq!(a.1, -b.1);
                }
            }

            // the dominant period ignores affine value rescaling
            #[test]
            fn period_affine_invariant(
                scale in 0.1f64..50.0,
                offset in -10.0f64..10.0,
                freq in 0.5f64..5.0,
            ) {
                let ts: Vec<f64> = (0..1500).map(|i| i as f64 * 0.01).collect();
                let ys: Vec<f64> = ts.iter().map(|t| (freq * t).sin()).collect();
                let scaled: Vec<f64> = ys.iter().map(|v| scale * v + offset).collect();
                let a = find_extrema(&ts, &ys, 1).unwrap().dominant_period;
                let b = find_extrema(&ts, &scaled, 1).unwrap().dominant_period;
                match (a, b) {
                    (Some(pa), Some(pb)) => prop_assert!((pa.period - pb.period).abs() < 1e-12),
                    (None, None) => {}
                    _ => prop_assert!(false, "period presence changed under rescaling"),
                }
            }
        }
    }
}
