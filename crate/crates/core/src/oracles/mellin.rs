//! Numerical Mellin transform of W_{-θ,1-θ}(-x).

use crate::error::{require_finite, Error, Result};
use crate::quadrature::{integrate_fallible, QuadratureConfig};
use crate::special::{ln_gamma_pos, subordinator_density, wright_series, WrightParams};
use crate::summation::SeriesTolerance;

/// Split point between the Wright series and the subordinator density.
const SPLIT: f64 = 3.0;

/// Returns (∫_0^∞ W_{-θ,1-θ}(-x) x^{η-1} dx, Γ(η)/Γ(1-θ+θη)).
///
/// On (0, X] the Wright series is integrated after the substitution
/// x = u^{1/η}. Beyond X the integrand is rewritten through the subordinator
/// density, W_{-θ,1-θ}(-s^{-θ}) = s^{θ+1} h_θ(s, 1)/θ, which turns the tail into
/// ∫_0^{X^{-1/θ}} h_θ(s, 1) s^{θ-θη} ds.
pub fn mellin_wright_check(theta: f64, eta: f64, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    require_finite("theta", theta)?;
    require_finite("eta", eta)?;
    cfg.validate()?;
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::param(format!(
            "theta must lie in (0, 1), got {theta}"
        )));
    }
    if !(eta > 0.0) {
        return Err(Error::param(format!("eta must be positive, got {eta}")));
    }
    let shifted = 1.0 - theta + theta * eta;
    if shifted <= 0.0 && shifted == shifted.floor() {
        return Err(Error::param(format!(
            "1 - theta + theta*eta = {shifted} is a pole of the gamma function"
        )));
    }
    let params = WrightParams::new(-theta, 1.0 - theta)?;
    let tol = SeriesTolerance::default();
    let body = integrate_fallible(
        |u: f64| Ok(wright_series(&params, -u.powf(1.0 / eta), &tol)?.value / eta),
        0.0,
        SPLIT.powf(eta),
        cfg.abs_tol,
        cfg.rel_tol,
        cfg.max_subdivisions,
    )?;
    let tail = integrate_fallible(
        |s: f64| {
            if s <= 0.0 {
                return Ok(0.0);
            }
            Ok(subordinator_density(theta, s, 1.0)?.value * s.powf(theta - theta * eta))
        },
        0.0,
        SPLIT.powf(-1.0 / theta),
        cfg.abs_tol,
        cfg.rel_tol,
        cfg.max_subdivisions,
    )?;
    let rhs = (ln_gamma_pos(eta) - ln_gamma_pos(shifted)).exp();
    Ok((body.value + tail.value, rhs))
}
