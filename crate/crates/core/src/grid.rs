//! Uniform evaluation grids.

use crate::error::{require_finite, Error, Result};

/// Most points a grid may hold.
pub const MAX_GRID_POINTS: f64 = 1e7;

/// Points x_min, x_min + step, ..., up to x_max (inclusive within rounding).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub step: f64,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, step: f64) -> Result<Self> {
        let g = GridSpec { x_min, x_max, step };
        g.validate()?;
        Ok(g)
    }

    /// `x_min == x_max` is accepted and yields a single point.
    pub fn validate(&self) -> Result<()> {
        require_finite("x_min", self.x_min)?;
        require_finite("x_max", self.x_max)?;
        require_finite("step", self.step)?;
        if !(self.step > 0.0) {
            return Err(Error::param(format!(
                "step must be positive, got {}",
                self.step
            )));
        }
        if self.x_min > self.x_max {
            return Err(Error::param(format!(
                "x_min ({}) must not exceed x_max ({})",
                self.x_min, self.x_max
            )));
        }
        if (self.x_max - self.x_min) / self.step > MAX_GRID_POINTS {
            return Err(Error::param(format!(
                "grid would exceed {MAX_GRID_POINTS:e} points"
            )));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        ((self.x_max - self.x_min) / self.step * (1.0 + 1e-12)).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |i| self.x_min + i as f64 * self.step)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn includes_both_ends() {
        let g = GridSpec::new(-2.0, 2.0, 0.1).unwrap();
        assert_eq!(g.len(), 41);
        let pts: Vec<f64> = g.points().collect();
        assert!((pts[40] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn single_point() {
        let g = GridSpec::new(0.0, 0.0, 1.0).unwrap();
        assert_eq!(g.points().collect::<Vec<_>>(), vec![0.0]);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(GridSpec::new(0.0, 1.0, 0.0).is_err());
        assert!(GridSpec::new(0.0, 1.0, -1.0).is_err());
        assert!(GridSpec::new(1.0, 0.0, 0.1).is_err());
        assert!(GridSpec::new(0.0, 1e8, 1.0).is_err());
        assert!(GridSpec::new(0.0, f64::NAN, 1.0).is_err());
    }
}
