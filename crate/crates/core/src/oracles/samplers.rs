//! Exact samplers for stable laws and stable subordinators.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::Rng;
use rand_distr::{Distribution, Exp1};

use crate::bridge::StableParams;
use crate::error::{require_finite, Error, Result};
use crate::montecarlo::sample_batch;
use crate::special::subordinator::kernel;

/// Precomputed Chambers–Mallows–Stuck constants for one stable law.
#[derive(Debug, Clone, Copy)]
pub struct CmsSampler {
    nu: f64,
    shift: f64,
    norm: f64,
    scale: f64,
    location: f64,
}

impl CmsSampler {
    /// Sampler for X(t) with characteristic function
    /// exp(t(-σ^ν|γ|^ν(1 - iβ sgn(γ) tan(πν/2)) + iμγ)).
    pub fn new(params: &StableParams, t: f64) -> Result<Self> {
        let p = StableParams::new(params.nu, params.beta, params.sigma, params.mu)?;
        require_finite("t", t)?;
        if !(t > 0.0) {
            return Err(Error::param(format!("t must be positive, got {t}")));
        }
        if (p.nu - 1.0).abs() < 1e-12 {
            return Err(Error::param("the sampler covers nu != 1 only"));
        }
        let bt = p.beta * (FRAC_PI_2 * p.nu).tan();
        Ok(Self {
            nu: p.nu,
            shift: bt.atan() / p.nu,
            norm: (1.0 + bt * bt).powf(0.5 / p.nu),
            scale: p.sigma * t.powf(1.0 / p.nu),
            location: p.mu * t,
        })
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let v = PI * (rng.random::<f64>() - 0.5);
        let w: f64 = Exp1.sample(rng);
        let nu = self.nu;
        let a = nu * (v + self.shift);
        let x = self.norm * a.sin() / v.cos().powf(1.0 / nu)
            * ((v - a).cos() / w).powf((1.0 - nu) / nu);
        self.scale * x + self.location
    }
}

/// One draw from the stable law at time t.
pub fn cms_stable_sample<R: Rng + ?Sized>(
    params: &StableParams,
    t: f64,
    rng: &mut R,
) -> Result<f64> {
    Ok(CmsSampler::new(params, t)?.sample(rng))
}

/// `n` reproducible draws using the block-parallel streams.
pub fn cms_stable_samples(params: &StableParams, t: f64, n: u64, seed: u64) -> Result<Vec<f64>> {
    let s = CmsSampler::new(params, t)?;
    Ok(sample_batch(n, seed, |rng| s.sample(rng)))
}

/// Kanter's representation S(t) = t^{1/θ} (A(U)/E)^{(1-θ)/θ}, U uniform on
/// (0, π), E unit exponential, for the subordinator with Laplace transform
/// exp(-t λ^θ).
#[derive(Debug, Clone, Copy)]
pub struct KanterSampler {
    theta: f64,
    scale: f64,
}

impl KanterSampler {
    pub fn new(theta: f64, t: f64) -> Result<Self> {
        require_finite("theta", theta)?;
        require_finite("t", t)?;
        if !(theta > 0.0 && theta < 1.0) {
            return Err(Error::param(format!(
                "theta must lie in (0, 1), got {theta}"
            )));
        }
        if !(t > 0.0) {
            return Err(Error::param(format!("t must be positive, got {t}")));
        }
        Ok(Self {
            theta,
            scale: t.powf(1.0 / theta),
        })
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u = PI * rng.random::<f64>();
        let e: f64 = Exp1.sample(rng);
        let a = kernel(self.theta, u.max(f64::MIN_POSITIVE));
        self.scale * (a / e).powf((1.0 - self.theta) / self.theta)
    }
}

pub fn kanter_subordinator_sample<R: Rng + ?Sized>(theta: f64, t: f64, rng: &mut R) -> Result<f64> {
    Ok(KanterSampler::new(theta, t)?.sample(rng))
}

pub fn kanter_subordinator_samples(theta: f64, t: f64, n: u64, seed: u64) -> Result<Vec<f64>> {
    let s = KanterSampler::new(theta, t)?;
    Ok(sample_batch(n, seed, |rng| s.sample(rng)))
}
