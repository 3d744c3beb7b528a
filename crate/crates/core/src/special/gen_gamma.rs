//! Generalized gamma law with density γ y^{γ-1} τ^{-1} exp(-y^γ / τ) on y > 0.

use rand::Rng;
use rand_distr::{Distribution, Exp1};

use crate::error::{require_finite, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenGammaParams {
    /// Shape exponent γ.
    pub gamma_exp: f64,
    /// Scale τ.
    pub tau: f64,
}

impl GenGammaParams {
    pub fn new(gamma_exp: f64, tau: f64) -> Result<Self> {
        require_finite("gamma_exp", gamma_exp)?;
        require_finite("tau", tau)?;
        if !(gamma_exp > 0.0) || !(tau > 0.0) {
            return Err(Error::param(format!(
                "generalized gamma needs gamma_exp > 0 and tau > 0, got ({gamma_exp}, {tau})"
            )));
        }
        Ok(Self { gamma_exp, tau })
    }

    pub fn cdf(&self, y: f64) -> f64 {
        if y <= 0.0 {
            0.0
        } else {
            -(-y.powf(self.gamma_exp) / self.tau).exp_m1()
        }
    }
}

pub fn gen_gamma_pdf(params: &GenGammaParams, y: f64) -> Result<f64> {
    require_finite("y", y)?;
    if !(y > 0.0) {
        return Err(Error::domain(format!(
            "generalized gamma density is supported on y > 0, got {y}"
        )));
    }
    let GenGammaParams { gamma_exp: g, tau } = *params;
    let yg = y.powf(g);
    Ok(g * yg / (y * tau) * (-yg / tau).exp())
}

/// Draws (τ E)^{1/γ} with E a unit exponential.
pub fn gen_gamma_sample<R: Rng + ?Sized>(params: &GenGammaParams, rng: &mut R) -> f64 {
    let e: f64 = Exp1.sample(rng);
    (params.tau * e).powf(1.0 / params.gamma_exp)
}
