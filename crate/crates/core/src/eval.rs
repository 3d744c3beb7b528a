/// A computed value together with an absolute error bound.
///
/// For series evaluations `err_bound` is the geometric tail bound plus a
/// rounding estimate proportional to the sum of absolute term magnitudes, and
/// `terms` is the number of series terms that were summed. For quadrature
/// evaluations `err_bound` is the embedded Gauss-Kronrod error estimate and
/// `terms` counts integrand evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub err_bound: f64,
    pub terms: usize,
}

impl EvalResult {
    pub fn new(value: f64, err_bound: f64, terms: usize) -> Self {
        debug_assert!(err_bound >= 0.0);
        Self {
            value,
            err_bound,
            terms: terms.max(1),
        }
    }

    /// Multiplies value and bound by a constant factor.
    pub fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            err_bound: self.err_bound * factor.abs(),
            terms: self.terms,
        }
    }

    /// `true` when `other` agrees with `self` within the sum of both bounds
    /// plus `slack`.
    pub fn agrees_with(&self, other: &EvalResult, slack: f64) -> bool {
        (self.value - other.value).abs() <= self.err_bound + other.err_bound + slack
    }
}
