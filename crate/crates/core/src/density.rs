//! Pseudo-densities of the odd-order, fractional and stable-subordinated
//! heat-type pseudo-processes.

use std::f64::consts::PI;

use rand_chacha::ChaCha8Rng;

use crate::airy::{airy_frac, airy_odd, sin_quarter_shift, OrderSpec, AIRY_CONDITION_LIMIT};
use crate::error::{require_finite, Error, Result};
use crate::eval::EvalResult;
use crate::montecarlo::{estimate_mean, MCEstimate};
use crate::oracles::subordinated_fourier_density;
use crate::quadrature::QuadratureConfig;
use crate::special::{gen_gamma_sample, ln_gamma_pos, GenGammaParams};
use crate::summation::{sum_series, SeriesTolerance, Term};

/// Order α of the pseudo-process and stability index θ of the subordinator.
/// θ = 1 means no time change.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubordinationParams {
    pub alpha: f64,
    pub theta: f64,
}

impl SubordinationParams {
    pub fn new(alpha: f64, theta: f64) -> Result<Self> {
        require_finite("alpha", alpha)?;
        require_finite("theta", theta)?;
        if !(alpha > 1.0) {
            return Err(Error::param(format!("alpha must exceed 1, got {alpha}")));
        }
        if !(theta > 0.0 && theta <= 1.0) {
            return Err(Error::param(format!(
                "theta must lie in (0, 1], got {theta}"
            )));
        }
        Ok(Self { alpha, theta })
    }

    /// Stability index ν = αθ of the subordinated law.
    pub fn nu(&self) -> f64 {
        self.alpha * self.theta
    }

    /// Fails unless αθ > 1, the convergence condition of the density series.
    pub fn require_series_convergence(&self) -> Result<()> {
        if self.nu() > 1.0 {
            Ok(())
        } else {
            Err(Error::param(format!(
                "the density series needs alpha*theta > 1, got {} * {} = {}",
                self.alpha,
                self.theta,
                self.nu()
            )))
        }
    }
}

fn check_time(t: f64) -> Result<()> {
    require_finite("t", t)?;
    if t > 0.0 {
        Ok(())
    } else {
        Err(Error::param(format!("t must be positive, got {t}")))
    }
}

/// u_{2n+1}(x, t) = c^{-1} Ai_{2n+1}(x/c), c = ((2n+1)t)^{1/(2n+1)}.
pub fn u_odd(n: u32, x: f64, t: f64) -> Result<EvalResult> {
    check_time(t)?;
    require_finite("x", x)?;
    let alpha = OrderSpec::odd(n)?.effective_alpha();
    let c = (alpha * t).powf(1.0 / alpha);
    Ok(airy_odd(n, x / c)?.scaled(1.0 / c))
}

/// u_α(x, t) = (αt)^{-1/α} Ai_α(x/(αt)^{1/α}).
pub fn u_frac(alpha: f64, x: f64, t: f64) -> Result<EvalResult> {
    OrderSpec::fractional(alpha)?;
    check_time(t)?;
    require_finite("x", x)?;
    let c = (alpha * t).powf(1.0 / alpha);
    Ok(airy_frac(alpha, x / c)?.scaled(1.0 / c))
}

/// Density of the pseudo-process of order α time-changed by a θ-stable
/// subordinator, from the series
///
/// p(x, t) = t^{-1/ν}/π · Σ_{k≥1} sin(kπ(α-1)/(2α)) Γ(1 + k/ν) (-y)^{k-1} / k!,
///
/// with ν = αθ and y = x t^{-1/ν}. θ = 1 is routed to [`u_frac`].
pub fn subordinated_density(params: &SubordinationParams, x: f64, t: f64) -> Result<EvalResult> {
    let params = SubordinationParams::new(params.alpha, params.theta)?;
    check_time(t)?;
    require_finite("x", x)?;
    if params.theta == 1.0 {
        return u_frac(params.alpha, x, t);
    }
    params.require_series_convergence()?;
    let alpha = params.alpha;
    let nu = params.nu();
    let time_scale = t.powf(-1.0 / nu);
    let y = x * time_scale;
    let ay = y.abs();
    let ln_y = ay.ln();
    let scale = ln_gamma_pos(1.0 + 1.0 / nu).exp();
    let sum = sum_series(&SeriesTolerance::default(), scale, |j| {
        let k = j + 1;
        let kf = k as f64;
        let magnitude = if j == 0 {
            scale
        } else if ay == 0.0 {
            0.0
        } else {
            ((kf - 1.0) * ln_y + ln_gamma_pos(1.0 + kf / nu) - ln_gamma_pos(kf + 1.0)).exp()
        };
        // sin(kπ(α-1)/(2α)) = sin(π(k/2 - k/(2α)))
        let sine = sin_quarter_shift(k as u64, -kf / (2.0 * alpha));
        let sign = if y > 0.0 && j % 2 == 1 { -1.0 } else { 1.0 };
        Term {
            value: sign * sine * magnitude,
            magnitude,
            ratio_bound: ay * (1.0 + kf / nu).powf(1.0 / nu) / (kf + 1.0),
        }
    })?;
    Ok(sum
        .within(AIRY_CONDITION_LIMIT)?
        .into_eval()
        .scaled(time_scale / PI))
}

/// How a density is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvalMethod {
    /// Series when its error bound meets the quadrature tolerance, Fourier
    /// quadrature otherwise.
    #[default]
    Auto,
    Series,
    Quadrature,
}

/// [`subordinated_density`] with a choice of method. The quadrature path
/// inverts the characteristic function and also covers αθ <= 1.
pub fn subordinated_density_by(
    params: &SubordinationParams,
    x: f64,
    t: f64,
    method: EvalMethod,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    match method {
        EvalMethod::Series => subordinated_density(params, x, t),
        EvalMethod::Quadrature => subordinated_fourier_density(params, x, t, cfg),
        EvalMethod::Auto => auto_select(subordinated_density(params, x, t), cfg, || {
            subordinated_fourier_density(params, x, t, cfg)
        }),
    }
}

/// Keeps a series result whose bound meets the quadrature tolerance and
/// otherwise evaluates `quadrature`. Errors other than cancellation or
/// convergence failure are passed through.
pub(crate) fn auto_select(
    series: Result<EvalResult>,
    cfg: &QuadratureConfig,
    quadrature: impl FnOnce() -> Result<EvalResult>,
) -> Result<EvalResult> {
    match series {
        Ok(e) if e.err_bound <= cfg.abs_tol.max(cfg.rel_tol * e.value.abs()) => Ok(e),
        Ok(_) | Err(Error::Cancellation { .. } | Error::Convergence { .. }) => quadrature(),
        Err(e) => Err(e),
    }
}

/// Which constant multiplies the oscillation in the Monte Carlo
/// representation
///
/// p(x, t) = 1/(πx) · E[exp(-d x G) sin(ω x G)],  G ~ generalized gamma(ν, 1/t).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OscillationPairing {
    /// ω = cos(π/(2α)), d = sin(π/(2α)). This is the pairing that reproduces
    /// the series for every α, and for α = 2n+1 it is the odd-order form.
    #[default]
    CosineFrequency,
    /// ω = sin(π/(2α)), d = cos(π/(2α)), the constants exactly as printed in
    /// the fractional-order statement of the representation. Kept so the
    /// disagreement with the series can be demonstrated.
    SineFrequency,
}

/// Monte Carlo estimate of [`subordinated_density`] using the damped
/// oscillation representation with G = (E t^{-1})^{1/ν}, E unit exponential.
pub fn mc_subordinated_density(
    params: &SubordinationParams,
    x: f64,
    t: f64,
    n_samples: u64,
    seed: u64,
) -> Result<MCEstimate> {
    mc_subordinated_density_with(params, x, t, n_samples, seed, OscillationPairing::default())
}

pub fn mc_subordinated_density_with(
    params: &SubordinationParams,
    x: f64,
    t: f64,
    n_samples: u64,
    seed: u64,
    pairing: OscillationPairing,
) -> Result<MCEstimate> {
    let params = SubordinationParams::new(params.alpha, params.theta)?;
    check_time(t)?;
    require_finite("x", x)?;
    if x == 0.0 {
        return Err(Error::domain(
            "the Monte Carlo representation divides by x; use the series at x = 0",
        ));
    }
    let nu = params.nu();
    let gg = GenGammaParams::new(nu, 1.0 / t)?;
    let angle = PI / (2.0 * params.alpha);
    let (omega, damping) = match pairing {
        OscillationPairing::CosineFrequency => (angle.cos(), angle.sin()),
        OscillationPairing::SineFrequency => (angle.sin(), angle.cos()),
    };
    let weight = 1.0 / (PI * x);
    let est = estimate_mean(n_samples, seed, |rng: &mut ChaCha8Rng| {
        let g = gen_gamma_sample(&gg, rng);
        (-damping * x * g).exp() * (omega * x * g).sin()
    })?;
    Ok(MCEstimate {
        mean: est.mean * weight,
        stderr: est.stderr * weight.abs(),
        ..est
    })
}
