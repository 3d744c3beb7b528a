//! Correspondence between the subordinated pseudo-process and asymmetric
//! stable laws.
//!
//! Stable laws use the parameterization with characteristic function
//!
//! E[e^{iγX(t)}] = exp(t(-σ^ν|γ|^ν (1 - iβ sgn(γ) tan(πν/2)) + iμγ)),
//!
//! with the exponent linear in t. The subordinated process of order α and
//! subordinator index θ has characteristic function
//! exp(-t|γ|^{αθ} cos(πθ/2)(1 + i tan(πθ/2) sgn γ)), which is of this form with
//! ν = αθ, β = -tan(πθ/2)/tan(πν/2), σ = cos(πθ/2)^{1/ν}, μ = 0.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::density::{
    subordinated_density, subordinated_density_by, EvalMethod, SubordinationParams,
};
use crate::error::{require_finite, Error, Result};
use crate::eval::EvalResult;
use crate::quadrature::QuadratureConfig;

pub type ComplexValue = Complex64;

/// Tolerance for treating ν as 1 or β as ±1.
const BOUNDARY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableParams {
    pub nu: f64,
    pub beta: f64,
    pub sigma: f64,
    pub mu: f64,
}

impl StableParams {
    pub fn new(nu: f64, beta: f64, sigma: f64, mu: f64) -> Result<Self> {
        for (name, v) in [("nu", nu), ("beta", beta), ("sigma", sigma), ("mu", mu)] {
            require_finite(name, v)?;
        }
        if !(nu > 0.0 && nu <= 2.0) {
            return Err(Error::param(format!("nu must lie in (0, 2], got {nu}")));
        }
        if !(-1.0..=1.0).contains(&beta) {
            return Err(Error::param(format!(
                "beta must lie in [-1, 1], got {beta}"
            )));
        }
        if !(sigma > 0.0) {
            return Err(Error::param(format!("sigma must be positive, got {sigma}")));
        }
        Ok(Self {
            nu,
            beta,
            sigma,
            mu,
        })
    }

    fn require_tan_form(&self) -> Result<()> {
        if (self.nu - 1.0).abs() <= BOUNDARY_TOL {
            Err(Error::param(
                "nu = 1 has no tan(pi nu / 2) form; the subordination-induced nu = 1 law is \
                 the Cauchy density (cauchy_pdf)",
            ))
        } else {
            Ok(())
        }
    }

    /// Fails unless 1 < ν < 2 and 0 < |β| < 1, the scope of the density series.
    pub fn require_series_scope(&self) -> Result<()> {
        if !(self.nu > 1.0 && self.nu < 2.0) {
            return Err(Error::param(format!(
                "stable densities are evaluated for 1 < nu < 2, got {}",
                self.nu
            )));
        }
        if !(self.beta.abs() > 0.0 && self.beta.abs() < 1.0) {
            return Err(Error::param(format!(
                "stable densities are evaluated for 0 < |beta| < 1, got {}",
                self.beta
            )));
        }
        Ok(())
    }
}

/// Stable law of the subordinated process at unit time.
pub fn forward_params(params: &SubordinationParams) -> Result<StableParams> {
    let params = SubordinationParams::new(params.alpha, params.theta)?;
    let theta = params.theta;
    if theta >= 1.0 {
        return Err(Error::param(
            "theta = 1 (no subordination) has no stable counterpart",
        ));
    }
    let nu = params.nu();
    if nu >= 2.0 {
        return Err(Error::param(format!(
            "alpha*theta must be below 2 for a stable law, got {nu}"
        )));
    }
    if (nu - 1.0).abs() <= BOUNDARY_TOL {
        return Err(Error::param(
            "alpha*theta = 1 gives the Cauchy law; use cauchy_pdf",
        ));
    }
    if theta * (params.alpha + 1.0) > 2.0 + BOUNDARY_TOL {
        return Err(Error::param(format!(
            "no stable law: theta*(alpha+1) = {} > 2 implies beta > 1",
            theta * (params.alpha + 1.0)
        )));
    }
    let beta = -(FRAC_PI_2 * theta).tan() / (FRAC_PI_2 * nu).tan();
    Ok(StableParams {
        nu,
        beta: beta.clamp(-1.0, 1.0),
        sigma: (FRAC_PI_2 * theta).cos().powf(1.0 / nu),
        mu: 0.0,
    })
}

/// (α, θ) whose subordinated process has stability index ν and skewness β.
pub fn inverse_params(nu: f64, beta: f64) -> Result<SubordinationParams> {
    require_finite("nu", nu)?;
    require_finite("beta", beta)?;
    if !(nu > 1.0 && nu < 2.0) {
        return Err(Error::param(format!("nu must lie in (1, 2), got {nu}")));
    }
    if !(beta > 0.0 && beta <= 1.0) {
        return Err(Error::param(format!("beta must lie in (0, 1], got {beta}")));
    }
    let theta = (beta * (FRAC_PI_2 * nu).tan().abs()).atan() / FRAC_PI_2;
    SubordinationParams::new(nu / theta, theta)
}

/// Characteristic function of the stable law at time t.
pub fn stable_cf(params: &StableParams, t: f64, gamma: f64) -> Result<ComplexValue> {
    let p = StableParams::new(params.nu, params.beta, params.sigma, params.mu)?;
    p.require_tan_form()?;
    check_time(t)?;
    require_finite("gamma", gamma)?;
    if gamma == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let skew = p.beta * gamma.signum() * (FRAC_PI_2 * p.nu).tan();
    let amp = p.sigma.powf(p.nu) * gamma.abs().powf(p.nu);
    let exponent = Complex64::new(-amp, amp * skew + p.mu * gamma) * t;
    Ok(exponent.exp())
}

/// Characteristic function exp(-t|γ|^{αθ} e^{iπθ sgn(γ)/2}) of the
/// subordinated process; θ = 1 gives exp(-it sgn(γ)|γ|^α).
pub fn subordinated_cf(params: &SubordinationParams, t: f64, gamma: f64) -> Result<ComplexValue> {
    let p = SubordinationParams::new(params.alpha, params.theta)?;
    check_time(t)?;
    require_finite("gamma", gamma)?;
    if p.theta < 1.0 && p.nu() >= 2.0 {
        return Err(Error::param(format!(
            "alpha*theta must be below 2, got {}",
            p.nu()
        )));
    }
    if gamma == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let angle = FRAC_PI_2 * p.theta * gamma.signum();
    let rot = if p.theta == 1.0 {
        Complex64::new(0.0, gamma.signum())
    } else {
        Complex64::from_polar(1.0, angle)
    };
    Ok((-rot * (t * gamma.abs().powf(p.nu()))).exp())
}

fn check_time(t: f64) -> Result<()> {
    require_finite("t", t)?;
    if t > 0.0 {
        Ok(())
    } else {
        Err(Error::param(format!("t must be positive, got {t}")))
    }
}

/// Unit-time scale of the subordinated law, σ₀ = (t cos(πθ/2))^{1/ν}.
pub fn subordinated_scale(params: &SubordinationParams, t: f64) -> f64 {
    (t * (FRAC_PI_2 * params.theta).cos()).powf(1.0 / params.nu())
}

/// Affine map from the subordinated law to the stable law: returns
/// (α, θ, factor, z) with pdf(x) = factor · p_{α,θ}(z; t).
pub fn stable_to_subordinated(
    params: &StableParams,
    t: f64,
    x: f64,
) -> Result<(SubordinationParams, f64, f64)> {
    let p = StableParams::new(params.nu, params.beta, params.sigma, params.mu)?;
    p.require_series_scope()?;
    check_time(t)?;
    require_finite("x", x)?;
    let (beta, mu, x) = if p.beta < 0.0 {
        (-p.beta, -p.mu, -x)
    } else {
        (p.beta, p.mu, x)
    };
    let sub = inverse_params(p.nu, beta)?;
    let sigma0 = subordinated_scale(&sub, t);
    let sigma_t = p.sigma * t.powf(1.0 / p.nu);
    let ratio = sigma0 / sigma_t;
    Ok((sub, ratio, (x - mu * t) * ratio))
}

/// Density of the stable law at time t from the subordinated series.
/// β < 0 is evaluated through the reflection pdf_{β,μ}(x) = pdf_{-β,-μ}(-x).
pub fn stable_pdf(params: &StableParams, t: f64, x: f64) -> Result<EvalResult> {
    let (sub, ratio, z) = stable_to_subordinated(params, t, x)?;
    Ok(subordinated_density(&sub, z, t)?.scaled(ratio))
}

/// [`stable_pdf`] with a choice of method; see [`EvalMethod`].
pub fn stable_pdf_by(
    params: &StableParams,
    t: f64,
    x: f64,
    method: EvalMethod,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    let (sub, ratio, z) = stable_to_subordinated(params, t, x)?;
    Ok(subordinated_density_by(&sub, z, t, method, cfg)?.scaled(ratio))
}

/// Cauchy density (1/π) t cos(π/(2α)) / (t² + 2xt sin(π/(2α)) + x²), the
/// law of the subordinated process with θ = 1/α.
pub fn cauchy_pdf(alpha: f64, t: f64, x: f64) -> Result<f64> {
    require_finite("alpha", alpha)?;
    require_finite("x", x)?;
    check_time(t)?;
    if !(alpha > 1.0) {
        return Err(Error::param(format!("alpha must exceed 1, got {alpha}")));
    }
    let a = PI / (2.0 * alpha);
    Ok(t * a.cos() / (PI * (t * t + 2.0 * x * t * a.sin() + x * x)))
}

/// Mode of [`cauchy_pdf`], at -t sin(π/(2α)).
pub fn cauchy_mode(alpha: f64, t: f64) -> f64 {
    -t * (PI / (2.0 * alpha)).sin()
}
