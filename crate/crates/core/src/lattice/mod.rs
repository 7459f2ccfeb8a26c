//! Integral LLL reduction and short-vector enumeration.

mod enumerate;
mod lll;

pub use enumerate::{short_vectors, EnumerationLimits, ShortVectors};
pub use lll::{lll_reduce, LllReduced};
