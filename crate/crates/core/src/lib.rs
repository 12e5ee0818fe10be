//! Exact real-root analysis of real polynomials: Sturm chains, Cauchy
//! indices of real rational functions, and the real critical points of the
//! logarithmic derivative `Q[p] = (p'/p)'`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod cauchy;
pub mod error;
pub mod hawaii;
pub mod sturm;

pub use algebra::{Poly, Rational};
pub use error::{Error, Result};
