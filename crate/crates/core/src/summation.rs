//! Compensated summation and a generic driver for power series whose tail
//! can be bounded geometrically.

use crate::error::{Error, Result};
use crate::eval::EvalResult;

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Stopping rule for series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTolerance {
    pub abs: f64,
    /// Relative to the fixed scale supplied by the caller (the magnitude of the
    /// leading term), not to the running partial sum, so that the number of
    /// terms used grows monotonically with the argument.
    pub rel: f64,
    pub max_terms: usize,
}

impl Default for SeriesTolerance {
    fn default() -> Self {
        Self {
            abs: 1e-14,
            rel: 1e-12,
            max_terms: 10_000,
        }
    }
}

/// Largest admissible ratio between the sum of absolute term magnitudes and
/// the scale of the leading term. Beyond it double precision no longer
/// delivers ~1e-10 absolute accuracy.
pub const DEFAULT_CONDITION_LIMIT: f64 = 1e6;

/// One term of a series, as produced by the caller's term generator.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Term {
    pub value: f64,
    /// An upper bound on `|value|`, used for the tail and rounding bounds.
    pub magnitude: f64,
    /// A bound `B_k` with `magnitude_{j+1} <= B_k * magnitude_j` for every
    /// `j >= k`. Use `f64::INFINITY` while no such bound is available.
    pub ratio_bound: f64,
}

/// Outcome of [`sum_series`] before any domain policy is applied.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SeriesSum {
    pub value: f64,
    pub err_bound: f64,
    pub terms: usize,
    /// Sum of term magnitudes divided by the caller's scale; digits lost to
    /// cancellation are roughly log10 of this.
    pub condition: f64,
}

impl SeriesSum {
    pub fn into_eval(self) -> EvalResult {
        EvalResult::new(self.value, self.err_bound, self.terms)
    }

    /// Fails with [`Error::Cancellation`] when the condition estimate exceeds
    /// `limit`.
    pub fn within(self, limit: f64) -> Result<Self> {
        if self.condition <= limit {
            Ok(self)
        } else {
            Err(Error::Cancellation {
                condition: self.condition,
                limit,
            })
        }
    }
}

/// Sums `term(0), term(1), ...` until the geometric tail bound drops below
/// tolerance, or fails with [`Error::Convergence`] at the term cap.
pub(crate) fn sum_series(
    tol: &SeriesTolerance,
    scale: f64,
    mut term: impl FnMut(usize) -> Term,
) -> Result<SeriesSum> {
    let scale = if scale > 0.0 && scale.is_finite() {
        scale
    } else {
        1.0
    };
    let target = tol.abs.max(tol.rel * scale);
    let mut acc = CompensatedSum::new();
    let mut magnitudes = 0.0;
    for k in 0..tol.max_terms {
        let t = term(k);
        acc.add(t.value);
        magnitudes += t.magnitude;
        if !magnitudes.is_finite() {
            break;
        }
        if t.ratio_bound <= 0.5 {
            let tail = t.magnitude * t.ratio_bound / (1.0 - t.ratio_bound);
            if tail < target {
                let terms = k + 1;
                let rounding = (terms as f64 + 4.0) * f64::EPSILON * magnitudes;
                return Ok(SeriesSum {
                    value: acc.value(),
                    err_bound: tail + rounding,
                    terms,
                    condition: magnitudes / scale,
                });
            }
        }
    }
    Err(Error::Convergence {
        partial: acc.value(),
        terms: tol.max_terms,
        reason: "tail bound above tolerance at the term cap".into(),
    })
}
