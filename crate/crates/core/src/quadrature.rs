//! Adaptive Gauss–Kronrod (7/15) quadrature for real and complex integrands.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Settings shared by every quadrature-based oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    /// Relative tolerance on the integral value; the effective target is the
    /// larger of the two.
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Hard upper limit on the truncation radius of semi-infinite integrals,
    /// in units of the natural length scale of the integrand where one exists.
    pub tail_cutoff: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            rel_tol: 1e-12,
            max_subdivisions: 4000,
            tail_cutoff: 200.0,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol >= 16.0 * f64::EPSILON) || !self.abs_tol.is_finite() {
            return Err(Error::Configuration(format!(
                "abs_tol must be at least 16 machine epsilons, got {}",
                self.abs_tol
            )));
        }
        if !(self.rel_tol >= 0.0) {
            return Err(Error::Configuration("rel_tol must be non-negative".into()));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::Configuration(
                "max_subdivisions must be positive".into(),
            ));
        }
        if !(self.tail_cutoff > 0.0) {
            return Err(Error::Configuration("tail_cutoff must be positive".into()));
        }
        Ok(())
    }
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature<T> {
    pub value: T,
    pub err_estimate: f64,
    pub evaluations: usize,
}

/// Values that can be integrated: reals and complex numbers.
pub trait Integrand:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn zero() -> Self;
    fn modulus(self) -> f64;
}

impl Integrand for f64 {
    fn zero() -> Self {
        0.0
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
}

impl Integrand for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
}

struct Segment<T> {
    a: f64,
    b: f64,
    value: T,
    err: f64,
}

impl<T> PartialEq for Segment<T> {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl<T> Eq for Segment<T> {}
impl<T> PartialOrd for Segment<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Segment<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn kronrod<T: Integrand>(f: &mut impl FnMut(f64) -> T, a: f64, b: f64) -> (T, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        k = k + s * WGK[j];
        if j % 2 == 1 {
            g = g + s * WG[j / 2];
        }
    }
    let k = k * h;
    let g = g * h;
    let err = (k - g).modulus();
    (k, err)
}

/// Integrates `f` over `[a, b]` until the summed error estimate is below
/// `max(abs_tol, rel_tol * |integral|)`.
pub fn integrate<T: Integrand>(
    mut f: impl FnMut(f64) -> T,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<Quadrature<T>> {
    if a == b {
        return Ok(Quadrature {
            value: T::zero(),
            err_estimate: 0.0,
            evaluations: 0,
        });
    }
    let mut heap = BinaryHeap::new();
    let (v, e) = kronrod(&mut f, a, b);
    let mut evaluations = 15;
    let mut total = v;
    let mut total_err = e;
    heap.push(Segment {
        a,
        b,
        value: v,
        err: e,
    });
    let mut splits = 0;
    loop {
        let target = abs_tol.max(rel_tol * total.modulus());
        if total_err <= target {
            break;
        }
        if splits >= max_subdivisions {
            return Err(Error::Convergence {
                partial: total.modulus(),
                terms: evaluations,
                reason: format!(
                    "quadrature error estimate {total_err:.3e} above target {target:.3e} after {splits} subdivisions"
                ),
            });
        }
        let Some(seg) = heap.pop() else { break };
        let mid = 0.5 * (seg.a + seg.b);
        if mid <= seg.a || mid >= seg.b {
            // interval cannot be split further in double precision
            heap.push(seg);
            return Err(Error::Convergence {
                partial: total.modulus(),
                terms: evaluations,
                reason: "quadrature interval collapsed".into(),
            });
        }
        let (v1, e1) = kronrod(&mut f, seg.a, mid);
        let (v2, e2) = kronrod(&mut f, mid, seg.b);
        evaluations += 30;
        splits += 1;
        total = total - seg.value + v1 + v2;
        total_err = total_err - seg.err + e1 + e2;
        heap.push(Segment {
            a: seg.a,
            b: mid,
            value: v1,
            err: e1,
        });
        heap.push(Segment {
            a: mid,
            b: seg.b,
            value: v2,
            err: e2,
        });
        if splits % 64 == 0 {
            // refresh sums to stop drift from repeated subtraction
            total = heap.iter().fold(T::zero(), |acc, s| acc + s.value);
            total_err = heap.iter().map(|s| s.err).sum();
        }
    }
    let value = heap.iter().fold(T::zero(), |acc, s| acc + s.value);
    let err_estimate = heap.iter().map(|s| s.err).sum::<f64>();
    Ok(Quadrature {
        value,
        err_estimate,
        evaluations,
    })
}

/// [`integrate`] with the tolerances of a [`QuadratureConfig`].
pub fn integrate_with<T: Integrand>(
    f: impl FnMut(f64) -> T,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<Quadrature<T>> {
    integrate(f, a, b, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions)
}

/// [`integrate`] for an integrand that can fail; the first failure is
/// returned instead of the integral.
pub(crate) fn integrate_fallible(
    mut f: impl FnMut(f64) -> Result<f64>,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<Quadrature<f64>> {
    let mut failure = None;
    let q = integrate(
        |x: f64| match f(x) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                0.0
            }
        },
        a,
        b,
        abs_tol,
        rel_tol,
        max_subdivisions,
    )?;
    match failure {
        Some(e) => Err(e),
        None => Ok(q),
    }
}
