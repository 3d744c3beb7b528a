//! Higher-order and fractional Airy functions, the pseudo-densities they
//! generate, and exact series for asymmetric stable densities obtained by
//! subordination.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod airy;
pub mod bridge;
pub mod density;
pub mod error;
pub mod eval;
pub mod grid;
pub mod montecarlo;
pub mod oracles;
pub mod quadrature;
pub mod special;
pub mod summation;
pub mod verify;

pub use airy::OrderSpec;
pub use bridge::{ComplexValue, StableParams};
pub use density::{EvalMethod, SubordinationParams};
pub use error::{Error, Result};
pub use eval::EvalResult;
pub use grid::GridSpec;
pub use montecarlo::MCEstimate;
pub use quadrature::QuadratureConfig;
pub use verify::{CheckRow, Suite};
