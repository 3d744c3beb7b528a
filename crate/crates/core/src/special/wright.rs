//! The Wright function W_{a,b}(z) = Σ z^k / (k! Γ(ak + b)) on the negative
//! real axis, and the one-sided stable density built from it.

use std::f64::consts::PI;

use crate::error::{require_finite, Error, Result};
use crate::eval::EvalResult;
use crate::special::gamma::{ln_gamma_pos, rgamma, sin_pi};
use crate::special::subordinator;
use crate::summation::{sum_series, SeriesSum, SeriesTolerance, Term};

/// Largest |z| for which the series is attempted.
pub const WRIGHT_MAX_ABS_Z: f64 = 30.0;

/// Largest admissible cancellation estimate for the Wright series.
pub const WRIGHT_CONDITION_LIMIT: f64 = 1e6;

/// Abscissa of the minimum of Γ on the positive axis.
const GAMMA_ARGMIN: f64 = 1.461_632_144_968_362_3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightParams {
    pub a: f64,
    pub b: f64,
}

impl WrightParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        require_finite("a", a)?;
        require_finite("b", b)?;
        if !(a > -1.0) {
            return Err(Error::param(format!(
                "Wright parameter a must exceed -1, got {a}"
            )));
        }
        Ok(Self { a, b })
    }
}

/// Runs the series without applying the |z| and conditioning policy.
pub(crate) fn wright_series(
    params: &WrightParams,
    z: f64,
    tol: &SeriesTolerance,
) -> Result<SeriesSum> {
    let WrightParams { a, b } = *params;
    if z == 0.0 {
        return Ok(SeriesSum {
            value: rgamma(b),
            err_bound: 0.0,
            terms: 1,
            condition: 1.0,
        });
    }
    let ln_abs_z = z.abs().ln();
    let negative = z < 0.0;
    let abs_a = a.abs();
    let mut ln_p = 0.0; // ln(|z|^k / k!)
    let scale = rgamma(b).abs();
    sum_series(tol, scale, |k| {
        let kf = k as f64;
        if k > 0 {
            ln_p += ln_abs_z - kf.ln();
        }
        let sign = if negative && k % 2 == 1 { -1.0 } else { 1.0 };
        let c = a * kf + b;
        if a < 0.0 && c < 1.0 {
            // 1/Γ(c) = sin(πc) Γ(1-c) / π, so |term| <= |z|^k Γ(1-c) / (π k!)
            let ln_major = ln_p + ln_gamma_pos(1.0 - c) - PI.ln();
            let major = ln_major.exp();
            let value = sign * sin_pi(c) * major;
            let shifted = 1.0 - b + abs_a * kf;
            let decreasing = abs_a * abs_a * (kf + 1.0) < shifted;
            let ratio_bound = if decreasing {
                z.abs() * shifted.powf(abs_a) / (kf + 1.0)
            } else {
                f64::INFINITY
            };
            Term {
                value,
                magnitude: major,
                ratio_bound,
            }
        } else {
            let value = sign * ln_p.exp() * rgamma(c);
            let ratio_bound = if a == 0.0 || (a > 0.0 && c >= GAMMA_ARGMIN) {
                z.abs() / (kf + 1.0)
            } else {
                f64::INFINITY
            };
            Term {
                value,
                magnitude: value.abs(),
                ratio_bound,
            }
        }
    })
}

/// W_{a,b}(z) for z <= 0.
///
/// Fails with a convergence error for |z| > 30, or when cancellation in the
/// alternating series would leave fewer than ~10 correct digits.
pub fn wright(params: &WrightParams, z: f64) -> Result<EvalResult> {
    wright_with(params, z, &SeriesTolerance::default())
}

pub fn wright_with(params: &WrightParams, z: f64, tol: &SeriesTolerance) -> Result<EvalResult> {
    require_finite("z", z)?;
    if z > 0.0 {
        return Err(Error::domain(format!(
            "the Wright series is only supported for z <= 0, got {z}"
        )));
    }
    let params = WrightParams::new(params.a, params.b)?;
    if z.abs() > WRIGHT_MAX_ABS_Z {
        return Err(Error::Convergence {
            partial: f64::NAN,
            terms: 0,
            reason: format!(
                "|z| = {} exceeds the validated bound {WRIGHT_MAX_ABS_Z}",
                z.abs()
            ),
        });
    }
    let sum = wright_series(&params, z, tol)?;
    if sum.condition > WRIGHT_CONDITION_LIMIT {
        return Err(Error::Convergence {
            partial: sum.value,
            terms: sum.terms,
            reason: format!(
                "cancellation estimate {:.3e} exceeds {WRIGHT_CONDITION_LIMIT:.0e}",
                sum.condition
            ),
        });
    }
    Ok(sum.into_eval())
}

/// Relative accuracy below which the series result is replaced by the
/// integral representation.
const DENSITY_REL_ACCURACY: f64 = 1e-10;

/// Density h_θ(x, t) of a stable subordinator with Laplace transform
/// `exp(-t λ^θ)`:
///
/// h_θ(x, t) = θ t x^{-θ-1} W_{-θ,1-θ}(-t x^{-θ}).
///
/// Near the origin the Wright argument is large and the series is replaced by
/// an integral representation evaluated by adaptive quadrature; `terms` then
/// counts integrand evaluations.
pub fn subordinator_density(theta: f64, x: f64, t: f64) -> Result<EvalResult> {
    require_finite("theta", theta)?;
    require_finite("x", x)?;
    require_finite("t", t)?;
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::param(format!(
            "theta must lie in (0, 1), got {theta}"
        )));
    }
    if !(t > 0.0) {
        return Err(Error::param(format!("t must be positive, got {t}")));
    }
    if !(x > 0.0) {
        return Err(Error::domain(format!(
            "the subordinator density is supported on x > 0, got {x}"
        )));
    }
    let z = -t * x.powf(-theta);
    let prefactor = theta * t * x.powf(-theta - 1.0);
    let params = WrightParams {
        a: -theta,
        b: 1.0 - theta,
    };
    if z.abs() <= WRIGHT_MAX_ABS_Z {
        if let Ok(sum) = wright_series(&params, z, &SeriesTolerance::default()) {
            if sum.condition <= WRIGHT_CONDITION_LIMIT
                && sum.err_bound <= DENSITY_REL_ACCURACY * sum.value.abs()
            {
                return Ok(sum.into_eval().scaled(prefactor));
            }
        }
    }
    let (value, err, evals) = subordinator::density_integral(theta, x, t)?;
    Ok(EvalResult::new(value, err, evals))
}
