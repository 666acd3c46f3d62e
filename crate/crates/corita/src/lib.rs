//! Exact finite-dimensional verification of firm rings, Morita contexts,
//! corings and comodules over `Q` and `F_p`.

// Structure-constant loops read better with explicit indices.
#![allow(clippy::needless_range_loop, clippy::too_many_arguments)]

pub mod algebra;
pub mod bimodule;
pub mod coring;
pub mod error;
pub mod examples;
pub mod exactlin;
pub mod galois;
pub mod morita;
pub mod par;
pub mod report;
pub mod tensor;

pub use error::{Error, Result};
