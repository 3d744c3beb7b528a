//! Quadrature evaluation of the Airy functions and of the unsubordinated
//! pseudo-density, independent of the power series.

use std::f64::consts::PI;

use crate::airy::OrderSpec;
use crate::error::{require_finite, Error, Result};
use crate::eval::EvalResult;
use crate::oracles::contour::{contour_integral, gil_pelaez, plain, Phase};
use crate::quadrature::QuadratureConfig;

/// Ai_α(x) = (1/π) Re ∫_0^∞ exp(i(xs + s^α/α)) ds by contour quadrature.
pub fn airy_frac_quadrature(alpha: f64, x: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    OrderSpec::fractional(alpha)?;
    require_finite("x", x)?;
    let phase = Phase {
        x,
        c: 1.0 / alpha,
        alpha,
    };
    let (v, err, evals) = contour_integral(phase, plain, cfg)?;
    Ok(EvalResult::new(v.re / PI, err / PI, evals))
}

/// Ai_{2n+1}(x) by contour quadrature.
pub fn airy_odd_quadrature(n: u32, x: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    let order = OrderSpec::odd(n)?;
    airy_frac_quadrature(order.effective_alpha(), x, cfg)
}

fn check_time(t: f64) -> Result<()> {
    require_finite("t", t)?;
    if t > 0.0 {
        Ok(())
    } else {
        Err(Error::param(format!("t must be positive, got {t}")))
    }
}

/// u_α(x, t) = (1/π) ∫_0^∞ cos(γx + tγ^α) dγ by contour quadrature.
pub fn fourier_cosine_density(
    alpha: f64,
    x: f64,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    OrderSpec::fractional(alpha)?;
    require_finite("x", x)?;
    check_time(t)?;
    let (v, err, evals) = contour_integral(Phase { x, c: t, alpha }, plain, cfg)?;
    Ok(EvalResult::new(v.re / PI, err / PI, evals))
}

/// ∫_{-∞}^a u_α(x, t) dx (an improper integral on the left) from the
/// characteristic function exp(-it sgn(γ)|γ|^α):
///
/// F(a) = 1/2 + (1/π) ∫_0^∞ sin(aγ + tγ^α)/γ dγ.
pub fn pseudo_cdf(alpha: f64, a: f64, t: f64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    OrderSpec::fractional(alpha)?;
    require_finite("a", a)?;
    check_time(t)?;
    let (v, err, evals) = contour_integral(Phase { x: a, c: t, alpha }, gil_pelaez, cfg)?;
    Ok(EvalResult::new(0.5 + v.im / PI, err / PI, evals))
}
