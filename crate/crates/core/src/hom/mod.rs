//! Rank parity of abelian-group homomorphisms and their realization by
//! holomorphic maps of complex tori.

mod map;
mod plan;

pub use map::{check_even_rank, split_torsion, AbelianHom, Parity, RankReport, TorsionPart, TorsionRoute, TorsionSplit};
pub use plan::{realize_free_hom, verify_plan, GaussianInt, RealizationPlan, RealizationStep};
