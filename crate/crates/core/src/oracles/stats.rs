//! Statistical comparators.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::integrate_fallible;

/// Kolmogorov–Smirnov distance sup_x |F_n(x) - F(x)| between the empirical
/// CDF of `sorted` and `cdf`.
pub fn ks_distance(sorted: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let n = sorted.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        d = d.max((i as f64 + 1.0) / n - f).max(f - i as f64 / n);
    }
    d
}

/// (1/n) Σ exp(iγx_j).
pub fn empirical_cf(samples: &[f64], gamma: f64) -> Complex64 {
    let n = samples.len() as f64;
    let (c, s) = samples.iter().fold((0.0, 0.0), |(c, s), &x| {
        let (sn, cs) = (gamma * x).sin_cos();
        (c + cs, s + sn)
    });
    Complex64::new(c / n, s / n)
}

/// A distribution function tabulated on a uniform grid by integrating a
/// density outward from an anchor, interpolated by cubic Hermite polynomials
/// that use the density as the slope.
#[derive(Debug, Clone)]
pub struct TabulatedCdf {
    x0: f64,
    step: f64,
    cdf: Vec<f64>,
    pdf: Vec<f64>,
}

impl TabulatedCdf {
    /// Tabulates on `lo, lo+step, ..., hi` (anchor must be a grid point:
    /// `lo + k*step`), given F(anchor) = `anchor_value`.
    pub fn build(
        lo: f64,
        hi: f64,
        step: f64,
        anchor: f64,
        anchor_value: f64,
        density: impl Fn(f64) -> Result<f64>,
        abs_tol: f64,
    ) -> Result<Self> {
        if !(step > 0.0) || !(hi > lo) || anchor < lo || anchor > hi {
            return Err(Error::Configuration(format!(
                "invalid CDF grid [{lo}, {hi}] step {step} anchor {anchor}"
            )));
        }
        let n = ((hi - lo) / step).round() as usize + 1;
        let k0 = ((anchor - lo) / step).round() as usize;
        let xs: Vec<f64> = (0..n).map(|i| lo + i as f64 * step).collect();
        let mut pdf = Vec::with_capacity(n);
        for &x in &xs {
            pdf.push(density(x)?);
        }
        let cell = |a: f64, b: f64| -> Result<f64> {
            Ok(integrate_fallible(&density, a, b, abs_tol, 0.0, 200)?.value)
        };
        let mut cdf = vec![0.0; n];
        cdf[k0] = anchor_value;
        for i in k0 + 1..n {
            cdf[i] = cdf[i - 1] + cell(xs[i - 1], xs[i])?;
        }
        for i in (0..k0).rev() {
            cdf[i] = cdf[i + 1] - cell(xs[i], xs[i + 1])?;
        }
        Ok(Self {
            x0: lo,
            step,
            cdf,
            pdf,
        })
    }

    pub fn range(&self) -> (f64, f64) {
        (self.x0, self.x0 + (self.cdf.len() - 1) as f64 * self.step)
    }

    /// Interpolated F(x), or `None` outside the tabulated range.
    pub fn eval(&self, x: f64) -> Option<f64> {
        let (lo, hi) = self.range();
        if !(x >= lo && x <= hi) {
            return None;
        }
        let pos = (x - lo) / self.step;
        let i = (pos.floor() as usize).min(self.cdf.len() - 2);
        let s = pos - i as f64;
        let h = self.step;
        let (f0, f1, d0, d1) = (
            self.cdf[i],
            self.cdf[i + 1],
            self.pdf[i] * h,
            self.pdf[i + 1] * h,
        );
        let s2 = s * s;
        let s3 = s2 * s;
        Some(
            (2.0 * s3 - 3.0 * s2 + 1.0) * f0
                + (s3 - 2.0 * s2 + s) * d0
                + (-2.0 * s3 + 3.0 * s2) * f1
                + (s3 - s2) * d1,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ks_of_own_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let n = 100_000;
        let mut xs: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        xs.sort_by(f64::total_cmp);
        let d = ks_distance(&xs, |x| x.clamp(0.0, 1.0));
        assert!(d < 1.95 / (n as f64).sqrt());
        let shifted = ks_distance(&xs, |x| (x + 0.05).clamp(0.0, 1.0));
        assert!((shifted - 0.05).abs() < 1.95 / (n as f64).sqrt());
    }

    #[test]
    fn ks_exact_for_constant_shift() {
        let xs = [0.1, 0.2, 0.3, 0.4];
        assert!((ks_distance(&xs, |x| x) - 0.6).abs() < 1e-15);
    }

    #[test]
    fn tabulated_logistic() {
        let pdf = |x: f64| Ok((-x).exp() / (1.0 + (-x).exp()).powi(2));
        let t = TabulatedCdf::build(-10.0, 10.0, 0.05, 0.0, 0.5, pdf, 1e-14).unwrap();
        for x in [-9.97_f64, -1.234, 0.0, 0.01, 3.3, 10.0] {
            let want = 1.0 / (1.0 + (-x).exp());
            assert!((t.eval(x).unwrap() - want).abs() < 1e-8, "x={x}");
        }
        assert!(t.eval(10.5).is_none());
    }

    #[test]
    fn empirical_cf_of_point_mass() {
        let v = empirical_cf(&[2.0; 10], 0.5);
        assert!((v - Complex64::new(1.0f64.cos(), 1.0f64.sin())).norm() < 1e-15);
    }
}
