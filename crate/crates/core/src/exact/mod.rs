//! Exact integer linear algebra and polynomial arithmetic.

mod group;
mod matrix;
mod poly;
mod snf;
mod sublattice;

pub use group::FgAbelianGroup;
pub(crate) use group::is_zero_mod;
pub use matrix::IntMatrix;
pub use poly::{charpoly, companion, IntPolynomial};
pub(crate) use snf::round_div;
pub use snf::{rank, snf, SnfDecomposition};
pub use sublattice::Sublattice;
