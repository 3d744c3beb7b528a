//! Power series for the higher-order Airy functions
//! Ai_α(x) = (1/π) ∫_0^∞ cos(xs + s^α/α) ds, α > 1.
//!
//! The series
//!
//! Ai_α(x) = 1/(π α^{(α-1)/α}) Σ_k (α^{1/α} x)^k / k! · Γ((k+1)/α) · sin(π(k+1)(α+1)/(2α))
//!
//! is entire in x but alternates with terms that grow before they decay, so it
//! is only evaluated where the summed term magnitudes stay below
//! [`AIRY_CONDITION_LIMIT`] times the leading term.

use std::f64::consts::PI;

use crate::density::{auto_select, EvalMethod};
use crate::error::{require_finite, Error, Result};
use crate::eval::EvalResult;
use crate::oracles::{airy_frac_quadrature, airy_odd_quadrature};
use crate::quadrature::QuadratureConfig;
use crate::special::{cos_pi, ln_gamma_pos, sin_pi};
use crate::summation::{sum_series, SeriesSum, SeriesTolerance, Term};

/// Largest admissible ratio between Σ|terms| and the leading term.
pub const AIRY_CONDITION_LIMIT: f64 = 1e6;

/// Spatial order of an Airy function: an odd integer 2n+1 or a real α > 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrderSpec {
    /// Order 2n+1 with n >= 1.
    Odd(u32),
    Fractional(f64),
}

impl OrderSpec {
    pub fn odd(n: u32) -> Result<Self> {
        let spec = OrderSpec::Odd(n);
        spec.validate()?;
        Ok(spec)
    }

    pub fn fractional(alpha: f64) -> Result<Self> {
        let spec = OrderSpec::Fractional(alpha);
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            OrderSpec::Odd(n) if n >= 1 => Ok(()),
            OrderSpec::Odd(n) => Err(Error::param(format!("odd order needs n >= 1, got {n}"))),
            OrderSpec::Fractional(a) if a.is_finite() && a > 1.0 => Ok(()),
            OrderSpec::Fractional(a) => Err(Error::param(format!(
                "fractional order must exceed 1, got {a}"
            ))),
        }
    }

    pub fn effective_alpha(&self) -> f64 {
        match *self {
            OrderSpec::Odd(n) => 2.0 * n as f64 + 1.0,
            OrderSpec::Fractional(a) => a,
        }
    }
}

/// sin(π(q/2 + r)) for integer q, with the half-integer part reduced exactly.
pub(crate) fn sin_quarter_shift(q: u64, r: f64) -> f64 {
    match q % 4 {
        0 => sin_pi(r),
        1 => cos_pi(r),
        2 => -sin_pi(r),
        _ => -cos_pi(r),
    }
}

/// Sine factor of the series, sin(π(k+1)(α+1)/(2α)) = sin(π((k+1)/2 + (k+1)/(2α))).
fn sine_fractional(alpha: f64, k: usize) -> f64 {
    let q = k as u64 + 1;
    sin_quarter_shift(q, q as f64 / (2.0 * alpha))
}

/// Same factor for α = 2n+1, reduced in integer arithmetic so that the zero
/// terms vanish exactly: sin(π(k+1)(n+1)/(2n+1)).
fn sine_odd(n: u32, k: usize) -> f64 {
    let order = 2 * n as u64 + 1;
    let m = ((k as u64 + 1) * (n as u64 + 1)) % (2 * order);
    sin_pi(m as f64 / order as f64)
}

/// Sums the `shift`-fold derivative of the series at x, using `sine(k)` for
/// the oscillating factor of the k-th undifferentiated term.
fn airy_series_sum(
    alpha: f64,
    x: f64,
    shift: usize,
    sine: impl Fn(usize) -> f64,
    tol: &SeriesTolerance,
) -> Result<SeriesSum> {
    let ln_c = alpha.ln() / alpha;
    let ln_pref = -PI.ln() - (alpha - 1.0) / alpha * alpha.ln();
    let m = shift as f64;
    let ln_lead = ln_pref + m * ln_c + ln_gamma_pos((m + 1.0) / alpha);
    let scale = ln_lead.exp();
    let ax = x.abs();
    let ln_cx = ln_c + ax.ln();
    let negative = x < 0.0;
    sum_series(tol, scale, |j| {
        let jf = j as f64;
        let magnitude = if j == 0 {
            scale
        } else if ax == 0.0 {
            0.0
        } else {
            (ln_pref + m * ln_c + jf * ln_cx - ln_gamma_pos(jf + 1.0)
                + ln_gamma_pos((jf + m + 1.0) / alpha))
            .exp()
        };
        let sign = if negative && j % 2 == 1 { -1.0 } else { 1.0 };
        Term {
            value: sign * magnitude * sine(j + shift),
            magnitude,
            // Γ(y + 1/α)/Γ(y) <= y^{1/α} with y = (j+m+1)/α
            ratio_bound: ax * (jf + m + 1.0).powf(1.0 / alpha) / (jf + 1.0),
        }
    })
}

fn checked(sum: SeriesSum) -> Result<EvalResult> {
    Ok(sum.within(AIRY_CONDITION_LIMIT)?.into_eval())
}

/// Ai_{2n+1}(x) from its power series.
pub fn airy_odd(n: u32, x: f64) -> Result<EvalResult> {
    airy_odd_derivative(n, 0, x)
}

/// Ai_α(x) from its power series.
pub fn airy_frac(alpha: f64, x: f64) -> Result<EvalResult> {
    airy_frac_with(alpha, x, &SeriesTolerance::default())
}

pub fn airy_frac_with(alpha: f64, x: f64, tol: &SeriesTolerance) -> Result<EvalResult> {
    OrderSpec::fractional(alpha)?;
    require_finite("x", x)?;
    checked(airy_series_sum(
        alpha,
        x,
        0,
        |k| sine_fractional(alpha, k),
        tol,
    )?)
}

/// Dispatches on the order kind.
pub fn airy(order: &OrderSpec, x: f64) -> Result<EvalResult> {
    match *order {
        OrderSpec::Odd(n) => airy_odd(n, x),
        OrderSpec::Fractional(a) => airy_frac(a, x),
    }
}

/// [`airy`] with a choice of method; see [`EvalMethod`].
pub fn airy_by(
    order: &OrderSpec,
    x: f64,
    method: EvalMethod,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    let quadrature = || match *order {
        OrderSpec::Odd(n) => airy_odd_quadrature(n, x, cfg),
        OrderSpec::Fractional(alpha) => airy_frac_quadrature(alpha, x, cfg),
    };
    match method {
        EvalMethod::Series => airy(order, x),
        EvalMethod::Quadrature => {
            order.validate()?;
            quadrature()
        }
        EvalMethod::Auto => auto_select(airy(order, x), cfg, quadrature),
    }
}

/// The `derivative`-th derivative of Ai_{2n+1}, by termwise differentiation.
pub fn airy_odd_derivative(n: u32, derivative: usize, x: f64) -> Result<EvalResult> {
    OrderSpec::odd(n)?;
    require_finite("x", x)?;
    let alpha = 2.0 * n as f64 + 1.0;
    checked(airy_series_sum(
        alpha,
        x,
        derivative,
        |k| sine_odd(n, k),
        &SeriesTolerance::default(),
    )?)
}

/// Cancellation estimate Σ|terms| / |leading term| of the Ai_α series at x.
pub fn airy_condition(alpha: f64, x: f64) -> Result<f64> {
    OrderSpec::fractional(alpha)?;
    require_finite("x", x)?;
    let sum = airy_series_sum(alpha, x, 0, |_| 1.0, &SeriesTolerance::default())?;
    Ok(sum.condition)
}

/// Whether the Ai_α series is evaluated at x rather than refused.
pub fn in_validated_domain(alpha: f64, x: f64) -> bool {
    matches!(airy_condition(alpha, x), Ok(c) if c <= AIRY_CONDITION_LIMIT)
}

/// The classical Airy function from
/// Ai(z) = 2/3^{7/6} Σ_k (z/3^{2/3})^k sin(2π(k+1)/3) / (Γ(k/3+1) Γ((k+2)/3)).
pub fn classical_airy_series(z: f64) -> Result<EvalResult> {
    require_finite("z", z)?;
    let half_root3 = 0.5 * 3f64.sqrt();
    let ln_pref = 2f64.ln() - 7.0 / 6.0 * 3f64.ln();
    let az = z.abs();
    let ln_w = az.ln() - 2.0 / 3.0 * 3f64.ln();
    let scale = (ln_pref - ln_gamma_pos(2.0 / 3.0)).exp();
    let sum = sum_series(&SeriesTolerance::default(), scale, |k| {
        let kf = k as f64;
        let magnitude = if k == 0 {
            scale
        } else if az == 0.0 {
            0.0
        } else {
            (ln_pref + kf * ln_w - ln_gamma_pos(kf / 3.0 + 1.0) - ln_gamma_pos((kf + 2.0) / 3.0))
                .exp()
        };
        let sine = match (k + 1) % 3 {
            0 => 0.0,
            1 => half_root3,
            _ => -half_root3,
        };
        let sign = if z < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
        Term {
            value: sign * sine * magnitude,
            magnitude,
            ratio_bound: az * (kf + 1.0).powf(-2.0 / 3.0),
        }
    })?;
    checked(sum)
}

/// sin(x)/(πx), the large-order limit of the odd-order pseudo-density at t = 1.
pub fn airy_sinc_limit(x: f64) -> f64 {
    if x == 0.0 {
        1.0 / PI
    } else {
        x.sin() / (PI * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const AI0: f64 = 0.355_028_053_887_817_24;
    const AI1: f64 = 0.135_292_416_312_881_42;
    const AI_M2: f64 = 0.227_407_428_201_685_57;
    /// Ai_5(0) = Γ(1/5) sin(3π/5) / (π 5^{4/5})
    const AI5_0: f64 = 0.383_506_701_677_839_4;

    #[test]
    fn values_at_origin() {
        assert_relative_eq!(
            airy_frac(2.0, 0.0).unwrap().value,
            0.5 / PI.sqrt(),
            max_relative = 1e-14
        );
        assert_relative_eq!(
            airy_frac(3.0, 0.0).unwrap().value,
            AI0,
            max_relative = 1e-14
        );
        assert_relative_eq!(airy_odd(1, 0.0).unwrap().value, AI0, max_relative = 1e-14);
        assert_relative_eq!(airy_odd(2, 0.0).unwrap().value, AI5_0, max_relative = 1e-14);
        assert_eq!(airy_odd(1, 0.0).unwrap().terms, 1);
    }

    #[test]
    fn classical_reference_values() {
        for (z, want) in [(0.0, AI0), (1.0, AI1), (-2.0, AI_M2)] {
            let c = classical_airy_series(z).unwrap();
            let o = airy_odd(1, z).unwrap();
            assert!((c.value - want).abs() <= c.err_bound + 1e-15, "z={z}");
            assert!((o.value - want).abs() <= o.err_bound + 1e-15, "z={z}");
        }
    }

    #[test]
    fn odd_and_fractional_agree() {
        for n in 1..=3 {
            let alpha = 2.0 * n as f64 + 1.0;
            for i in -16..=16 {
                let x = i as f64 * 0.25;
                let a = airy_odd(n, x).unwrap();
                let b = airy_frac(alpha, x).unwrap();
                assert!(a.agrees_with(&b, 0.0), "n={n} x={x}: {a:?} {b:?}");
            }
        }
    }

    #[test]
    fn small_order_refuses_large_arguments() {
        assert!(in_validated_domain(1.5, 3.0));
        assert!(!in_validated_domain(1.5, 6.0));
        assert!(matches!(
            airy_frac(1.5, 6.0),
            Err(Error::Cancellation { .. })
        ));
        assert!(in_validated_domain(7.0, -6.0));
    }

    #[test]
    fn order_validation() {
        assert!(OrderSpec::odd(0).is_err());
        assert!(OrderSpec::fractional(1.0).is_err());
        assert!(OrderSpec::fractional(f64::NAN).is_err());
        assert_eq!(OrderSpec::odd(2).unwrap().effective_alpha(), 5.0);
        assert!(airy_frac(0.5, 0.0).is_err());
    }

    #[test]
    fn sinc_limit_values() {
        assert_eq!(airy_sinc_limit(0.0), 1.0 / PI);
        assert!(airy_sinc_limit(PI).abs() < 1e-16);
        assert_relative_eq!(
            airy_sinc_limit(PI / 2.0),
            2.0 / (PI * PI),
            max_relative = 1e-15
        );
    }

    #[test]
    fn method_selection() {
        let cfg = QuadratureConfig::default();
        let order = OrderSpec::fractional(1.5).unwrap();
        assert!(matches!(
            airy(&order, -6.0),
            Err(Error::Cancellation { .. })
        ));
        let auto = airy_by(&order, -6.0, EvalMethod::Auto, &cfg).unwrap();
        let quad = airy_by(&order, -6.0, EvalMethod::Quadrature, &cfg).unwrap();
        assert_eq!(auto, quad);
        let odd = OrderSpec::odd(1).unwrap();
        let s = airy_by(&odd, 0.0, EvalMethod::Auto, &cfg).unwrap();
        assert_eq!(s, airy_odd(1, 0.0).unwrap());
        let q = airy_by(&odd, 1.0, EvalMethod::Quadrature, &cfg).unwrap();
        assert!((q.value - airy_odd(1, 1.0).unwrap().value).abs() < 1e-12);
        assert!(airy_by(
            &OrderSpec::Fractional(0.5),
            0.0,
            EvalMethod::Quadrature,
            &cfg
        )
        .is_err());
    }

    #[test]
    fn airy_ode_residual() {
        // y^{(2n)} + (-1)^n x y = 0
        for n in 1..=2u32 {
            for i in -8..=8 {
                let x = i as f64 * 0.25;
                let y = airy_odd(n, x).unwrap().value;
                let d = airy_odd_derivative(n, 2 * n as usize, x).unwrap().value;
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                assert!((d + sign * x * y).abs() < 1e-12, "n={n} x={x}");
            }
        }
    }

    proptest! {
        #[test]
        fn triplication(z in -4.0f64..4.0) {
            let c = classical_airy_series(z).unwrap();
            let o = airy_odd(1, z).unwrap();
            prop_assert!(c.agrees_with(&o, 0.0));
        }

        #[test]
        fn term_count_monotone(alpha in 1.5f64..8.0, a in 0.0f64..3.0, b in 0.0f64..3.0) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            for s in [1.0, -1.0] {
                let t_lo = airy_frac(alpha, s * lo).unwrap().terms;
                let t_hi = airy_frac(alpha, s * hi).unwrap().terms;
                prop_assert!(t_lo <= t_hi);
            }
        }

        #[test]
        fn condition_monotone(alpha in 1.5f64..8.0, a in 0.0f64..6.0, b in 0.0f64..6.0) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(airy_condition(alpha, lo).unwrap() <= airy_condition(alpha, hi).unwrap());
        }
    }
}
