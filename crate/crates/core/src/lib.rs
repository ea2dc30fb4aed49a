//! Integer solutions of `X^6 - Y^6 = W^n - Z^n` for `n = 2, 3, 4`.
//!
//! Closed-form families, elliptic-curve pipelines over quartic models, a
//! registry of published numeric claims with an exact checker, and a
//! brute-force search used as an independent oracle. All arithmetic is exact.

pub mod arith;
pub mod claims;
pub mod cli;
pub mod curve;
pub mod error;
mod factor;
pub mod families;
pub mod pipeline;
pub mod quartic;
pub mod search;
pub mod solution;

pub use error::{Error, Result};
