//! Spectral check of the space-fractional evolution equation
//! ∂u/∂t = D u, where D has Fourier symbol -|γ|^a e^{iπθ/2 sgn γ} under the
//! transform F{f}(γ) = ∫ e^{iγx} f(x) dx.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::density::{subordinated_density_by, EvalMethod, SubordinationParams};
use crate::error::{require_finite, Error, Result};
use crate::grid::GridSpec;
use crate::quadrature::QuadratureConfig;

/// Tuning for [`riesz_feller_spectral_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralConfig {
    /// Step of the fourth-order central difference in t.
    pub delta: f64,
    /// Taper is 1 out to this fraction of the half-width.
    pub taper_start: f64,
    /// Taper reaches 0 at this fraction of the half-width.
    pub taper_end: f64,
    /// Residual is measured on this fraction of the half-width.
    pub core: f64,
    /// Largest spectral energy fraction allowed in the top eighth of the band.
    pub alias_threshold: f64,
    pub quadrature: QuadratureConfig,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        SpectralConfig {
            delta: 1e-4,
            taper_start: 0.6,
            taper_end: 0.95,
            core: 0.5,
            alias_threshold: 1e-12,
            quadrature: QuadratureConfig::default(),
        }
    }
}

impl SpectralConfig {
    pub fn validate(&self) -> Result<()> {
        require_finite("delta", self.delta)?;
        if !(self.delta > 0.0) {
            return Err(Error::param(format!(
                "delta must be positive, got {}",
                self.delta
            )));
        }
        if !(0.0 < self.core
            && self.core <= self.taper_start
            && self.taper_start < self.taper_end
            && self.taper_end <= 1.0)
        {
            return Err(Error::param(
                "need 0 < core <= taper_start < taper_end <= 1".to_string(),
            ));
        }
        if !(self.alias_threshold > 0.0) {
            return Err(Error::param("alias_threshold must be positive".to_string()));
        }
        self.quadrature.validate()
    }
}

/// Fourier symbol of the operator.
pub fn riesz_feller_symbol(order: f64, theta_op: f64, gamma: f64) -> Complex64 {
    if gamma == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    -Complex64::from_polar(
        gamma.abs().powf(order),
        FRAC_PI_2 * theta_op * gamma.signum(),
    )
}

/// Smooth step, 0 for s <= 0 and 1 for s >= 1, with all derivatives
/// vanishing at both ends.
fn smooth_step(s: f64) -> f64 {
    if s <= 0.0 {
        return 0.0;
    }
    if s >= 1.0 {
        return 1.0;
    }
    let a = (-1.0 / s).exp();
    let b = (-1.0 / (1.0 - s)).exp();
    a / (a + b)
}

/// Max-norm residual of ∂u/∂t - D u on the central part of `grid`, where u
/// is the density whose characteristic function is
/// exp(-t|γ|^order e^{iπθ_op/2 sgn γ}).
///
/// The samples are multiplied by a smooth window before the FFT, so the
/// residual is only meaningful where the window is 1; it is reported on the
/// central `core` fraction of the grid. A configuration error is returned
/// when the windowed samples carry noticeable energy near the Nyquist
/// frequency.
pub fn riesz_feller_spectral_check(
    order: f64,
    theta_op: f64,
    t: f64,
    grid: &GridSpec,
    cfg: &SpectralConfig,
) -> Result<f64> {
    require_finite("order", order)?;
    require_finite("theta_op", theta_op)?;
    require_finite("t", t)?;
    grid.validate()?;
    cfg.validate()?;
    if !(order > 1.0) {
        return Err(Error::param(format!("order must exceed 1, got {order}")));
    }
    if !(theta_op > 0.0 && theta_op <= 1.0) {
        return Err(Error::param(format!(
            "theta_op must lie in (0, 1], got {theta_op}"
        )));
    }
    if !(t > 2.0 * cfg.delta) {
        return Err(Error::param(format!("t must exceed 2*delta, got {t}")));
    }
    let n = grid.len();
    if n < 16 {
        return Err(Error::Configuration(format!("grid has only {n} points")));
    }
    let params = SubordinationParams::new(order / theta_op, theta_op)?;
    let h = grid.step;
    let xs: Vec<f64> = grid.points().collect();
    let center = 0.5 * (xs[0] + xs[n - 1]);
    let half = 0.5 * (xs[n - 1] - xs[0]);

    let density = |x: f64, time: f64| {
        subordinated_density_by(&params, x, time, EvalMethod::Auto, &cfg.quadrature)
            .map(|e| e.value)
    };
    let d = cfg.delta;
    // value at t and the fourth-order central difference in t
    let rows: Vec<(f64, f64)> = xs
        .par_iter()
        .map(|&x| {
            let diff = (8.0 * (density(x, t + d)? - density(x, t - d)?)
                - (density(x, t + 2.0 * d)? - density(x, t - 2.0 * d)?))
                / (12.0 * d);
            Ok((density(x, t)?, diff))
        })
        .collect::<Result<_>>()?;

    let window: Vec<f64> = xs
        .iter()
        .map(|&x| {
            let r = (x - center).abs() / half;
            1.0 - smooth_step((r - cfg.taper_start) / (cfg.taper_end - cfg.taper_start))
        })
        .collect();

    let mut buf: Vec<Complex64> = rows
        .iter()
        .zip(&window)
        .map(|(r, w)| Complex64::new(r.0 * w, 0.0))
        .collect();
    let mut planner = FftPlanner::<f64>::new();
    planner.plan_fft_forward(n).process(&mut buf);

    // The forward FFT computes Σ f_j e^{-2πijk/N}, which is the transform at
    // γ_k = -2πk/(N h) with k taken in (-N/2, N/2].
    let total: f64 = buf.iter().map(|c| c.norm_sqr()).sum();
    let band = n / 16;
    let high: f64 = (n / 2 - band..=n / 2 + band)
        .map(|k| buf[k.min(n - 1)].norm_sqr())
        .sum();
    if total > 0.0 && high / total > cfg.alias_threshold {
        return Err(Error::Configuration(format!(
            "grid step {h} does not resolve the density: {:.2e} of the spectral energy \
             lies near the Nyquist frequency",
            high / total
        )));
    }

    let span = n as f64 * h;
    for (k, c) in buf.iter_mut().enumerate() {
        let signed = if 2 * k < n {
            k as f64
        } else {
            k as f64 - n as f64
        };
        if 2 * k == n {
            *c = Complex64::new(0.0, 0.0);
            continue;
        }
        let gamma = -2.0 * std::f64::consts::PI * signed / span;
        *c *= riesz_feller_symbol(order, theta_op, gamma);
    }
    planner.plan_fft_inverse(n).process(&mut buf);

    let mut residual: f64 = 0.0;
    for (i, &x) in xs.iter().enumerate() {
        if (x - center).abs() > cfg.core * half {
            continue;
        }
        let du = buf[i].re / n as f64;
        residual = residual.max((rows[i].1 - du).abs());
    }
    Ok(residual)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_annihilates_constants() {
        assert_eq!(riesz_feller_symbol(2.5, 1.0, 0.0), Complex64::new(0.0, 0.0));
        let s = riesz_feller_symbol(2.0, 0.0, 3.0);
        assert!((s.re + 9.0).abs() < 1e-15 && s.im.abs() < 1e-15);
    }

    #[test]
    fn coarse_grid_order_two() {
        let grid = GridSpec::new(-20.0, 20.0, 40.0 / 1024.0).unwrap();
        let r =
            riesz_feller_spectral_check(2.0, 1.0, 1.0, &grid, &SpectralConfig::default()).unwrap();
        assert!(r < 1e-4, "{r}");
    }

    #[test]
    fn coarse_grid_trips_alias_detector() {
        let grid = GridSpec::new(-40.0, 40.0, 0.5).unwrap();
        let err = riesz_feller_spectral_check(1.7, 1.0, 1.0, &grid, &SpectralConfig::default());
        assert!(matches!(err, Err(Error::Configuration(_))), "{err:?}");
    }
}
