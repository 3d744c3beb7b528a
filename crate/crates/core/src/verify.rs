//! Acceptance checks shared by the `verify` command and the acceptance tests.
//!
//! Every check produces a [`CheckRow`]; a criterion is a list of rows and
//! passes when all of its rows pass.

use std::cell::RefCell;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::airy::{
    airy_frac, airy_odd, airy_odd_derivative, airy_sinc_limit, classical_airy_series,
    in_validated_domain,
};
use crate::bridge::{
    cauchy_mode, cauchy_pdf, forward_params, inverse_params, stable_cf, stable_pdf,
    stable_to_subordinated, subordinated_cf, StableParams,
};
use crate::density::{
    mc_subordinated_density, subordinated_density, subordinated_density_by, u_odd, EvalMethod,
    SubordinationParams,
};
use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::montecarlo::estimate_mean;
use crate::oracles::{
    airy_frac_quadrature, cms_stable_samples, kanter_subordinator_samples, ks_distance,
    mellin_wright_check, pseudo_cdf, riesz_feller_spectral_check, stable_cdf,
    subordinated_fourier_density, KanterSampler, SpectralConfig, TabulatedCdf,
};
use crate::quadrature::{integrate_fallible, QuadratureConfig};
use crate::special::{gamma, subordinator_cdf, subordinator_density};

/// One verification result.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckRow {
    pub check_id: String,
    pub target: f64,
    pub actual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckRow {
    /// Passes when |actual - target| <= tolerance.
    pub fn close(id: impl Into<String>, target: f64, actual: f64, tolerance: f64) -> Self {
        CheckRow {
            check_id: id.into(),
            target,
            actual,
            tolerance,
            pass: (actual - target).abs() <= tolerance,
        }
    }

    /// Passes when actual <= limit. Reported with target 0.
    pub fn at_most(id: impl Into<String>, actual: f64, limit: f64) -> Self {
        CheckRow {
            check_id: id.into(),
            target: 0.0,
            actual,
            tolerance: limit,
            pass: actual <= limit,
        }
    }

    /// Passes when actual < bound. Reported with the bound as target and
    /// zero tolerance.
    pub fn strictly_below(id: impl Into<String>, actual: f64, bound: f64) -> Self {
        CheckRow {
            check_id: id.into(),
            target: bound,
            actual,
            tolerance: 0.0,
            pass: actual < bound,
        }
    }
}

/// Groups of criteria run together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Airy,
    Density,
    Bridge,
    Mc,
    Pde,
    All,
}

impl Suite {
    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Airy => &[1, 2, 10],
            Suite::Density => &[3, 4],
            Suite::Mc => &[5, 6],
            Suite::Bridge => &[7, 8],
            Suite::Pde => &[9],
            Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "airy" => Ok(Suite::Airy),
            "density" => Ok(Suite::Density),
            "bridge" => Ok(Suite::Bridge),
            "mc" => Ok(Suite::Mc),
            "pde" => Ok(Suite::Pde),
            "all" => Ok(Suite::All),
            other => Err(Error::param(format!(
                "unknown suite '{other}', expected one of airy, density, bridge, mc, pde, all"
            ))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Airy => "airy",
            Suite::Density => "density",
            Suite::Bridge => "bridge",
            Suite::Mc => "mc",
            Suite::Pde => "pde",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

/// Short description of each criterion, indexed from 1.
pub fn criterion_name(n: u8) -> &'static str {
    match n {
        1 => "series agrees with contour quadrature",
        2 => "closed-form anchors and triplication",
        3 => "normalization of the fractional density",
        4 => "Wright function Mellin transform and Levy density",
        5 => "subordinator sampler law",
        6 => "Monte Carlo representation of the density",
        7 => "stable bridge",
        8 => "Cauchy case",
        9 => "space-fractional equation residual",
        10 => "odd-order limits",
        _ => "unknown",
    }
}

/// Runs criterion `n` (1 to 10).
pub fn run_criterion(n: u8) -> Result<Vec<CheckRow>> {
    match n {
        1 => series_vs_quadrature(),
        2 => anchors(),
        3 => normalization(),
        4 => wright_mellin(),
        5 => subordinator_law(),
        6 => monte_carlo(),
        7 => stable_bridge(),
        8 => cauchy(),
        9 => pde_residual(),
        10 => odd_limits(),
        _ => Err(Error::param(format!("no criterion {n}"))),
    }
}

pub fn run_suite(suite: Suite) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for &n in suite.criteria() {
        rows.extend(run_criterion(n)?);
    }
    Ok(rows)
}

fn series_vs_quadrature() -> Result<Vec<CheckRow>> {
    let start = Instant::now();
    let cfg = QuadratureConfig::default();
    let mut rows = Vec::new();
    for alpha in [1.5, 2.0, 2.5, 3.0, 4.0, 7.0] {
        let mut worst: f64 = 0.0;
        for i in -24..=24 {
            let x = i as f64 * 0.25;
            if !in_validated_domain(alpha, x) {
                continue;
            }
            let s = airy_frac(alpha, x)?;
            let q = airy_frac_quadrature(alpha, x, &cfg)?;
            worst = worst.max((s.value - q.value).abs());
        }
        rows.push(CheckRow::at_most(
            format!("A1.max_abs_diff.alpha={alpha}"),
            worst,
            1e-8,
        ));
    }
    rows.push(CheckRow::at_most(
        "A1.runtime_seconds",
        start.elapsed().as_secs_f64(),
        60.0,
    ));
    Ok(rows)
}

fn anchors() -> Result<Vec<CheckRow>> {
    let mut rows = vec![
        CheckRow::close(
            "A2.airy_frac(2,0)",
            0.5 / PI.sqrt(),
            airy_frac(2.0, 0.0)?.value,
            1e-12,
        ),
        CheckRow::close(
            "A2.airy_odd(1,0)",
            3f64.powf(-2.0 / 3.0) / gamma(2.0 / 3.0),
            airy_odd(1, 0.0)?.value,
            1e-12,
        ),
    ];
    // |classical - odd| relative to the sum of both error bounds
    let mut worst: f64 = 0.0;
    for i in -40..=40 {
        let z = i as f64 * 0.1;
        let c = classical_airy_series(z)?;
        let o = airy_odd(1, z)?;
        let bound = c.err_bound + o.err_bound;
        worst = worst.max((c.value - o.value).abs() / bound);
    }
    rows.push(CheckRow::at_most(
        "A2.triplication_diff_over_bounds",
        worst,
        1.0,
    ));
    Ok(rows)
}

/// ∫_{-40}^{40} u_frac(α, x, 1) dx from the density (series where its bound
/// allows, contour quadrature elsewhere) plus both tail masses from the
/// distribution function oracle.
fn normalization() -> Result<Vec<CheckRow>> {
    let cfg = QuadratureConfig::default();
    let mut rows = Vec::new();
    for alpha in [1.5, 2.0, 2.5, 3.0] {
        let params = SubordinationParams::new(alpha, 1.0)?;
        let density =
            |x: f64| Ok(subordinated_density_by(&params, x, 1.0, EvalMethod::Auto, &cfg)?.value);
        let mut body = 0.0;
        for k in -40..40 {
            let a = k as f64;
            body += integrate_fallible(density, a, a + 1.0, 1e-11, 0.0, 2000)?.value;
        }
        let left = pseudo_cdf(alpha, -40.0, 1.0, &cfg)?.value;
        let right = 1.0 - pseudo_cdf(alpha, 40.0, 1.0, &cfg)?.value;
        rows.push(CheckRow::close(
            format!("A3.total_mass.alpha={alpha}"),
            1.0,
            body + left + right,
            1e-3,
        ));
    }
    Ok(rows)
}

fn wright_mellin() -> Result<Vec<CheckRow>> {
    let cfg = QuadratureConfig::default();
    let mut rows = Vec::new();
    for theta in [0.3, 0.5, 0.7] {
        for eta in [0.5, 1.0, 1.5, 2.0, 3.0] {
            let (lhs, rhs) = mellin_wright_check(theta, eta, &cfg)?;
            rows.push(CheckRow::at_most(
                format!("A4.mellin_rel_err.theta={theta}.eta={eta}"),
                (lhs / rhs - 1.0).abs(),
                1e-6,
            ));
        }
    }
    let mut worst: f64 = 0.0;
    for i in 0..=99 {
        let x = 0.1 + i as f64 * 0.1;
        let levy = x.powf(-1.5) * (-0.25 / x).exp() / (2.0 * PI.sqrt());
        let h = subordinator_density(0.5, x, 1.0)?.value;
        worst = worst.max((h / levy - 1.0).abs());
    }
    rows.push(CheckRow::at_most("A4.levy_density_rel_err", worst, 1e-8));
    Ok(rows)
}

fn subordinator_law() -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for (i, (theta, t)) in [(0.5, 1.0), (0.7, 2.0)].into_iter().enumerate() {
        let sampler = KanterSampler::new(theta, t)?;
        for (j, lambda) in [0.25, 0.5, 1.0, 2.0].into_iter().enumerate() {
            let est = estimate_mean(1_000_000, 1000 + 10 * i as u64 + j as u64, |rng| {
                (-lambda * sampler.sample(rng)).exp()
            })?;
            rows.push(CheckRow::close(
                format!("A5.laplace.theta={theta}.t={t}.lambda={lambda}"),
                (-t * lambda.powf(theta)).exp(),
                est.mean,
                4.0 * est.stderr,
            ));
        }
    }
    for (i, theta) in [0.5, 0.7].into_iter().enumerate() {
        let mut samples = kanter_subordinator_samples(theta, 1.0, 100_000, 2000 + i as u64)?;
        samples.sort_by(f64::total_cmp);
        let table = TabulatedCdf::build(
            0.0,
            50.0,
            0.05,
            0.0,
            0.0,
            |x| {
                if x <= 0.0 {
                    Ok(0.0)
                } else {
                    Ok(subordinator_density(theta, x, 1.0)?.value)
                }
            },
            1e-12,
        )?;
        let ks = ks_with_fallback(&samples, &table, |x| subordinator_cdf(theta, x, 1.0))?;
        rows.push(CheckRow::at_most(format!("A5.ks.theta={theta}"), ks, 0.01));
    }
    Ok(rows)
}

/// KS distance against a tabulated CDF, falling back to `outside` beyond
/// the table.
fn ks_with_fallback(
    sorted: &[f64],
    table: &TabulatedCdf,
    outside: impl Fn(f64) -> Result<f64>,
) -> Result<f64> {
    let failure = RefCell::new(None);
    let ks = ks_distance(sorted, |x| match table.eval(x) {
        Some(v) => v,
        None => outside(x).unwrap_or_else(|e| {
            failure.borrow_mut().get_or_insert(e);
            f64::NAN
        }),
    });
    match failure.into_inner() {
        Some(e) => Err(e),
        None => Ok(ks),
    }
}

fn monte_carlo() -> Result<Vec<CheckRow>> {
    let cases = [
        (3.0, 0.9, 1.0),
        (3.0, 0.9, -1.0),
        (3.0, 0.5, 0.5),
        (3.0, 0.5, -0.5),
        (5.0819, 0.29517, 1.0),
        (5.0819, 0.29517, -1.0),
    ];
    let mut rows = Vec::new();
    for (i, (alpha, theta, x)) in cases.into_iter().enumerate() {
        let p = SubordinationParams::new(alpha, theta)?;
        let series = subordinated_density(&p, x, 1.0)?.value;
        let mc = mc_subordinated_density(&p, x, 1.0, 1_000_000, 3000 + i as u64)?;
        rows.push(CheckRow::close(
            format!("A6.mc.alpha={alpha}.theta={theta}.x={x}"),
            series,
            mc.mean,
            4.0 * mc.stderr,
        ));
    }
    Ok(rows)
}

fn stable_bridge() -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    let mut cf_diff: f64 = 0.0;
    let mut round_trip: f64 = 0.0;
    for alpha in [1.2, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 7.0] {
        for k in 1..=20 {
            let theta = k as f64 * 0.05;
            let nu = alpha * theta;
            if theta * (alpha + 1.0) > 2.0 + 1e-12 || nu <= 1.0 + 1e-9 || nu >= 2.0 {
                continue;
            }
            let sub = SubordinationParams::new(alpha, theta)?;
            let stable = forward_params(&sub)?;
            for t in [0.5, 1.0, 2.0] {
                for j in -12..=12 {
                    let g = j as f64 * 0.25;
                    let a = subordinated_cf(&sub, t, g)?;
                    let b = stable_cf(&stable, t, g)?;
                    cf_diff = cf_diff.max((a - b).norm());
                }
            }
            let back = inverse_params(stable.nu, stable.beta)?;
            round_trip = round_trip
                .max((back.alpha / alpha - 1.0).abs())
                .max((back.theta - theta).abs());
        }
    }
    rows.push(CheckRow::at_most("A7.cf_identity_max_diff", cf_diff, 1e-12));
    rows.push(CheckRow::at_most(
        "A7.round_trip_max_diff",
        round_trip,
        1e-12,
    ));

    let cfg = QuadratureConfig::default();
    for (i, (nu, beta)) in [(1.5, 0.5), (1.3, 0.7)].into_iter().enumerate() {
        let params = StableParams::new(nu, beta, 1.0, 0.0)?;
        let (sub, ratio, _) = stable_to_subordinated(&params, 1.0, 0.0)?;
        let density = |x: f64| {
            let z = x * ratio;
            Ok(subordinated_density_by(&sub, z, 1.0, EvalMethod::Auto, &cfg)?.value * ratio)
        };
        // P(X <= 0) of a strictly stable law
        let at_zero = 0.5 - (beta * (PI * nu / 2.0).tan()).atan() / (PI * nu);
        let table = TabulatedCdf::build(-20.0, 20.0, 0.1, 0.0, at_zero, density, 1e-12)?;
        let mut samples = cms_stable_samples(&params, 1.0, 100_000, 4000 + i as u64)?;
        samples.sort_by(f64::total_cmp);
        let ks = ks_with_fallback(&samples, &table, |x| {
            Ok(stable_cdf(&params, 1.0, x, &cfg)?.value)
        })?;
        rows.push(CheckRow::at_most(
            format!("A7.ks.nu={nu}.beta={beta}"),
            ks,
            0.01,
        ));
    }

    let mut reflection: f64 = 0.0;
    for (nu, beta, mu) in [(1.5, 0.5, 0.3), (1.3, 0.7, -0.2), (1.8, 0.2, 0.0)] {
        let p = StableParams::new(nu, beta, 1.0, mu)?;
        let m = StableParams::new(nu, -beta, 1.0, -mu)?;
        for i in -20..=20 {
            let x = i as f64 * 0.1;
            let a = stable_pdf(&p, 1.0, x)?.value;
            let b = stable_pdf(&m, 1.0, -x)?.value;
            reflection = reflection.max((a - b).abs());
        }
    }
    rows.push(CheckRow::at_most(
        "A7.reflection_max_diff",
        reflection,
        1e-14,
    ));
    Ok(rows)
}

fn cauchy() -> Result<Vec<CheckRow>> {
    let cfg = QuadratureConfig::default();
    let mut rows = Vec::new();
    for (alpha, t) in [(2.0, 1.0), (3.0, 0.5)] {
        let sub = SubordinationParams::new(alpha, 1.0 / alpha)?;
        let mut worst: f64 = 0.0;
        for i in -40..=40 {
            let x = i as f64 * 0.25;
            let q = subordinated_fourier_density(&sub, x, t, &cfg)?.value;
            worst = worst.max((cauchy_pdf(alpha, t, x)? - q).abs());
        }
        rows.push(CheckRow::at_most(
            format!("A8.fourier_max_diff.alpha={alpha}.t={t}"),
            worst,
            1e-8,
        ));

        let mode = golden_section_max(
            |x| cauchy_pdf(alpha, t, x).unwrap_or(f64::NAN),
            -3.0 * t,
            3.0 * t,
        );
        rows.push(CheckRow::close(
            format!("A8.mode.alpha={alpha}.t={t}"),
            cauchy_mode(alpha, t),
            mode,
            1e-6,
        ));

        // x = mode + t tan(u) maps (-π/2, π/2) onto the real line
        let center = cauchy_mode(alpha, t);
        let mass = integrate_fallible(
            |u: f64| {
                let c = u.cos();
                Ok(cauchy_pdf(alpha, t, center + t * u.tan())? * t / (c * c))
            },
            -PI / 2.0,
            PI / 2.0,
            1e-13,
            0.0,
            1000,
        )?
        .value;
        rows.push(CheckRow::close(
            format!("A8.mass.alpha={alpha}.t={t}"),
            1.0,
            mass,
            1e-6,
        ));
    }
    Ok(rows)
}

fn golden_section_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    while b - a > 1e-10 {
        let c = b - r * (b - a);
        let d = a + r * (b - a);
        if f(c) > f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    0.5 * (a + b)
}

fn pde_residual() -> Result<Vec<CheckRow>> {
    let grid = GridSpec::new(-40.0, 40.0, 80.0 / 4096.0)?;
    let cfg = SpectralConfig::default();
    let subordinated_theta = inverse_params(1.5, 0.5)?.theta;
    let mut rows = Vec::new();
    for (order, theta_op) in [
        (2.5, 1.0),
        (3.0, 1.0),
        (1.7, 1.0),
        (1.5, subordinated_theta),
    ] {
        let r = riesz_feller_spectral_check(order, theta_op, 1.0, &grid, &cfg)?;
        rows.push(CheckRow::at_most(
            format!("A9.residual.order={order}.theta_op={theta_op:.6}"),
            r,
            1e-4,
        ));
    }
    Ok(rows)
}

fn odd_limits() -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for n in 1..=2u32 {
        // y^{(2n)} + (-1)^n x y = 0
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let mut worst: f64 = 0.0;
        for i in -40..=40 {
            let x = i as f64 * 0.05;
            let y = airy_odd(n, x)?.value;
            let d = airy_odd_derivative(n, 2 * n as usize, x)?.value;
            worst = worst.max((d + sign * x * y).abs());
        }
        rows.push(CheckRow::at_most(
            format!("A10.ode_residual.n={n}"),
            worst,
            1e-6,
        ));
    }
    for x in [0.5, 1.0, 2.0] {
        let limit = airy_sinc_limit(x);
        let d2 = (u_odd(2, x, 1.0)?.value - limit).abs();
        let d32 = (u_odd(32, x, 1.0)?.value - limit).abs();
        rows.push(CheckRow::strictly_below(
            format!("A10.sinc_deviation.x={x}"),
            d32,
            d2,
        ));
    }
    Ok(rows)
}
