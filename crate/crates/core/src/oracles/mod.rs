//! Verification machinery that does not share code paths with the series:
//! contour quadrature, Fourier inversion, integral representations, exact
//! samplers and statistical comparators.

mod airy;
pub(crate) mod contour;
mod fourier;
mod mellin;
mod samplers;
mod spectral;
pub(crate) mod stats;

pub use airy::{airy_frac_quadrature, airy_odd_quadrature, fourier_cosine_density, pseudo_cdf};
pub use fourier::{
    stable_cdf, stable_pdf_quadrature, subordinated_cdf, subordinated_fourier_density,
};
pub use mellin::mellin_wright_check;
pub use samplers::{
    cms_stable_sample, cms_stable_samples, kanter_subordinator_sample, kanter_subordinator_samples,
    CmsSampler, KanterSampler,
};
pub use spectral::{riesz_feller_spectral_check, riesz_feller_symbol, SpectralConfig};
pub use stats::{empirical_cf, ks_distance, TabulatedCdf};
