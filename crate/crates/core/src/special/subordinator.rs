//! Integral representation of the one-sided stable law with Laplace transform
//! `exp(-t λ^θ)`, used where the Wright series loses its digits.

use std::f64::consts::PI;

use crate::error::Result;
use crate::quadrature::integrate;

/// ln A(φ) for A(φ) = (sin θφ / sin φ)^{1/(1-θ)} · sin((1-θ)φ) / sin θφ,
/// increasing from a positive limit at φ = 0 to +∞ at φ = π.
pub(crate) fn ln_kernel(theta: f64, phi: f64) -> f64 {
    let s_theta = (theta * phi).sin().ln();
    let s_one = phi.sin().ln();
    let s_rest = ((1.0 - theta) * phi).sin().ln();
    (s_theta - s_one) / (1.0 - theta) + s_rest - s_theta
}

/// Kernel value, finite on (0, π).
pub(crate) fn kernel(theta: f64, phi: f64) -> f64 {
    ln_kernel(theta, phi).exp()
}

const REL_TOL: f64 = 1e-12;
const MAX_SPLITS: usize = 2000;

/// Density at unit time, with its quadrature error estimate and evaluation count.
fn unit_density(theta: f64, x: f64) -> Result<(f64, f64, usize)> {
    let q = 1.0 / (1.0 - theta);
    let ln_u = -theta * q * x.ln();
    let u = ln_u.exp();
    let integrand = |phi: f64| {
        let la = ln_kernel(theta, phi);
        let e = la - la.exp() * u;
        if e < -745.0 {
            0.0
        } else {
            e.exp()
        }
    };
    let res = integrate(integrand, 0.0, PI, f64::MIN_POSITIVE, REL_TOL, MAX_SPLITS)?;
    let prefactor = theta * q * (-q * x.ln()).exp() / PI;
    Ok((
        prefactor * res.value,
        prefactor * res.err_estimate,
        res.evaluations,
    ))
}

/// Density of the subordinator at time `t` by quadrature; returns
/// `(value, err_estimate, evaluations)`.
pub(crate) fn density_integral(theta: f64, x: f64, t: f64) -> Result<(f64, f64, usize)> {
    let scale = t.powf(1.0 / theta);
    let (v, e, n) = unit_density(theta, x / scale)?;
    Ok((v / scale, e / scale, n))
}

/// P(S(t) <= x).
pub fn subordinator_cdf(theta: f64, x: f64, t: f64) -> Result<f64> {
    if x <= 0.0 {
        return Ok(0.0);
    }
    let u = (x / t.powf(1.0 / theta)).powf(-theta / (1.0 - theta));
    let res = integrate(
        |phi: f64| (-kernel(theta, phi) * u).exp(),
        0.0,
        PI,
        f64::MIN_POSITIVE,
        REL_TOL,
        MAX_SPLITS,
    )?;
    Ok(res.value / PI)
}

/// P(S(t) > x), accurate in the upper tail.
pub fn subordinator_sf(theta: f64, x: f64, t: f64) -> Result<f64> {
    if x <= 0.0 {
        return Ok(1.0);
    }
    let u = (x / t.powf(1.0 / theta)).powf(-theta / (1.0 - theta));
    let res = integrate(
        |phi: f64| -(-kernel(theta, phi) * u).exp_m1(),
        0.0,
        PI,
        f64::MIN_POSITIVE,
        REL_TOL,
        MAX_SPLITS,
    )?;
    Ok(res.value / PI)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn levy_density(x: f64, t: f64) -> f64 {
        t / (2.0 * PI.sqrt()) * x.powf(-1.5) * (-t * t / (4.0 * x)).exp()
    }

    #[test]
    fn half_kernel_is_closed_form() {
        for phi in [0.1, 1.0, 2.5] {
            let want = 1.0 / (4.0 * (phi / 2.0f64).cos().powi(2));
            assert_relative_eq!(kernel(0.5, phi), want, max_relative = 1e-14);
        }
    }

    #[test]
    fn half_density_matches_levy() {
        for &(x, t) in &[(0.01, 1.0), (0.1, 2.0), (1.0, 1.0), (4.0, 2.0), (50.0, 0.5)] {
            let (v, _, _) = density_integral(0.5, x, t).unwrap();
            assert_relative_eq!(v, levy_density(x, t), max_relative = 1e-10);
        }
    }

    #[test]
    fn half_cdf_matches_levy() {
        // P(S <= x) = erfc(t / (2 sqrt x)); at x = t^2/4 this is erfc(1)
        let erfc1 = 0.157_299_207_050_285_13;
        assert_relative_eq!(
            subordinator_cdf(0.5, 0.25, 1.0).unwrap(),
            erfc1,
            max_relative = 1e-11
        );
        assert_relative_eq!(
            subordinator_sf(0.5, 0.25, 1.0).unwrap(),
            1.0 - erfc1,
            max_relative = 1e-11
        );
        assert_relative_eq!(
            subordinator_cdf(0.5, 1.0, 2.0).unwrap(),
            erfc1,
            max_relative = 1e-11
        );
    }
}
