//! Gamma-family primitives, the Wright function and the laws built on them.

mod gamma;
mod gen_gamma;
pub(crate) mod subordinator;
mod wright;

pub(crate) use gamma::ln_gamma_pos;
pub use gamma::{cos_pi, gamma, log_gamma, reciprocal_gamma, sin_pi};
pub use gen_gamma::{gen_gamma_pdf, gen_gamma_sample, GenGammaParams};
pub use subordinator::{subordinator_cdf, subordinator_sf};
pub(crate) use wright::wright_series;
pub use wright::{
    subordinator_density, wright, wright_with, WrightParams, WRIGHT_CONDITION_LIMIT,
    WRIGHT_MAX_ABS_Z,
};
