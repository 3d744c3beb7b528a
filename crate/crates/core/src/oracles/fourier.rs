//! Fourier inversion of the subordinated and stable characteristic functions
//! along rotated rays.
//!
//! With φ(γ) = exp(-tγ^ν e^{iπθ/2}) for γ > 0, the density and distribution
//! function are
//!
//! p(x) = (1/π) Re ∫_0^∞ e^{-iγx} φ(γ) dγ,
//! F(x) = 1/2 - (1/π) Im ∫_0^∞ (e^{-iγx} φ(γ) - e^{-γ}) / γ dγ.
//!
//! For x > 0 the ray γ = r e^{-iψ} is admissible for ψ < (π/2)(1+θ)/ν, for
//! x < 0 the ray γ = r e^{iψ} for ψ < (π/2)(1-θ)/ν; half the limit is used.
//! Nothing here needs ν < 2: for ν > 2 the inversion gives the signed
//! pseudo-density. θ = 1 has no room on the negative side and is delegated to the saddle-path
//! contour quadrature.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::bridge::{stable_to_subordinated, StableParams};
use crate::density::SubordinationParams;
use crate::error::{require_finite, Error, Result};
use crate::eval::EvalResult;
use crate::oracles::airy::{fourier_cosine_density, pseudo_cdf};
use crate::oracles::contour::{exp_m1, ray_integral};
use crate::quadrature::QuadratureConfig;

fn validated(params: &SubordinationParams, x: f64, t: f64) -> Result<SubordinationParams> {
    let p = SubordinationParams::new(params.alpha, params.theta)?;
    require_finite("x", x)?;
    require_finite("t", t)?;
    if !(t > 0.0) {
        return Err(Error::param(format!("t must be positive, got {t}")));
    }
    Ok(p)
}

/// Ray direction for evaluation point x.
fn direction(p: &SubordinationParams, x: f64) -> Complex64 {
    let nu = p.nu();
    let psi = if x >= 0.0 {
        -FRAC_PI_4 * (1.0 + p.theta) / nu
    } else {
        FRAC_PI_4 * (1.0 - p.theta) / nu
    };
    Complex64::from_polar(1.0, psi)
}

/// -iγx - tγ^ν e^{iπθ/2}, the log of the inversion integrand.
fn log_integrand(p: &SubordinationParams, x: f64, t: f64, g: Complex64) -> Complex64 {
    let rot = Complex64::from_polar(1.0, FRAC_PI_2 * p.theta);
    Complex64::new(0.0, -x) * g - rot * g.powf(p.nu()) * t
}

/// Density of the subordinated process by Fourier inversion.
pub fn subordinated_fourier_density(
    params: &SubordinationParams,
    x: f64,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    let p = validated(params, x, t)?;
    if p.theta == 1.0 {
        return fourier_cosine_density(p.alpha, x, t, cfg);
    }
    let dir = direction(&p, x);
    let scale = t.powf(-1.0 / p.nu());
    let (v, err, evals) = ray_integral(
        dir,
        scale,
        cfg.tail_cutoff * scale,
        |g| log_integrand(&p, x, t, g).exp(),
        cfg,
    )?;
    Ok(EvalResult::new(v.re / PI, err / PI, evals))
}

/// Distribution function of the subordinated process by Gil-Pelaez
/// inversion. For θ = 1 this is the improper integral of the pseudo-density.
pub fn subordinated_cdf(
    params: &SubordinationParams,
    x: f64,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    let p = validated(params, x, t)?;
    if p.theta == 1.0 {
        return pseudo_cdf(p.alpha, x, t, cfg);
    }
    let dir = direction(&p, x);
    let scale = t.powf(-1.0 / p.nu());
    // e^{-γ} decays like e^{-r cos ψ} along the ray
    let cap = cfg.tail_cutoff * scale.max(1.0) / dir.re;
    let (v, err, evals) = ray_integral(
        dir,
        scale,
        cap,
        |g| (exp_m1(log_integrand(&p, x, t, g)) - exp_m1(-g)) / g,
        cfg,
    )?;
    Ok(EvalResult::new(0.5 - v.im / PI, err / PI, evals))
}

/// Stable density at time t by Fourier inversion, for the same parameter
/// scope as the series.
pub fn stable_pdf_quadrature(
    params: &StableParams,
    t: f64,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    let (sub, ratio, z) = stable_to_subordinated(params, t, x)?;
    Ok(subordinated_fourier_density(&sub, z, t, cfg)?.scaled(ratio))
}

/// Stable distribution function at time t by Gil-Pelaez inversion.
pub fn stable_cdf(
    params: &StableParams,
    t: f64,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    let (sub, _, z) = stable_to_subordinated(params, t, x)?;
    let f = subordinated_cdf(&sub, z, t, cfg)?;
    if params.beta < 0.0 {
        // P(X <= x) = P(-X >= -x) = 1 - F_reflected(-x)
        Ok(EvalResult::new(1.0 - f.value, f.err_bound, f.terms))
    } else {
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bridge::cauchy_pdf;
    use crate::density::subordinated_density;

    #[test]
    fn matches_series_inside_its_domain() {
        let cfg = QuadratureConfig::default();
        for (a, th) in [
            (3.0, 0.9),
            (3.0, 0.5),
            (5.081_868_6, 0.295_167_2),
            (2.5, 1.0),
        ] {
            let p = SubordinationParams::new(a, th).unwrap();
            for x in [-2.0, -0.5, 0.0, 0.7, 2.0] {
                let s = subordinated_density(&p, x, 1.0).unwrap();
                let q = subordinated_fourier_density(&p, x, 1.0, &cfg).unwrap();
                assert!(
                    (s.value - q.value).abs() < 1e-10,
                    "({a},{th}) x={x}: {} vs {}",
                    s.value,
                    q.value
                );
            }
        }
    }

    #[test]
    fn cdf_at_origin() {
        let cfg = QuadratureConfig::default();
        for (a, th) in [(3.0, 0.9), (3.0, 0.5), (5.0, 0.3)] {
            let p = SubordinationParams::new(a, th).unwrap();
            let f = subordinated_cdf(&p, 0.0, 1.0, &cfg).unwrap();
            assert!((f.value - 0.5 - 0.5 / a).abs() < 1e-11);
        }
    }

    #[test]
    fn cdf_derivative_is_density() {
        let cfg = QuadratureConfig::default();
        let p = SubordinationParams::new(3.0, 0.5).unwrap();
        for x in [-3.0, -1.0, 0.5, 2.0] {
            let h = 1e-4;
            let d = (subordinated_cdf(&p, x + h, 1.0, &cfg).unwrap().value
                - subordinated_cdf(&p, x - h, 1.0, &cfg).unwrap().value)
                / (2.0 * h);
            let q = subordinated_fourier_density(&p, x, 1.0, &cfg)
                .unwrap()
                .value;
            assert!((d - q).abs() < 1e-7, "x={x}: {d} vs {q}");
        }
    }

    #[test]
    fn cauchy_inversion() {
        let cfg = QuadratureConfig::default();
        let p = SubordinationParams::new(2.0, 0.5).unwrap();
        for x in [-10.0, -0.7, 0.0, 3.0] {
            let q = subordinated_fourier_density(&p, x, 1.0, &cfg).unwrap();
            assert!((q.value - cauchy_pdf(2.0, 1.0, x).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn stable_cdf_reflection() {
        let cfg = QuadratureConfig::default();
        let p = StableParams::new(1.5, 0.5, 1.0, 0.2).unwrap();
        let m = StableParams::new(1.5, -0.5, 1.0, -0.2).unwrap();
        for x in [-1.0, 0.3, 2.0] {
            let a = stable_cdf(&p, 1.0, x, &cfg).unwrap().value;
            let b = stable_cdf(&m, 1.0, -x, &cfg).unwrap().value;
            assert!((a + b - 1.0).abs() < 1e-11);
        }
    }
}
