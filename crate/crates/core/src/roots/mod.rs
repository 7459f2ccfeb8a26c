//! Real-root counting and complex root finding.

mod aberth;
mod sturm;

pub use aberth::{eval_complex, find_roots, RootSet};
pub use sturm::{count_real_roots, SturmChain};
