//! The semidirect product `(Z^2n)^3 ⋊ S3`, the homomorphism `mu`, the
//! Albanese transport recovering `M`, graph subgroups and the assembled
//! counterexample report.

mod albanese;
mod graph;
mod mu;
mod report;
mod s3;

pub use albanese::{albanese_transport, AlbaneseModel, AlbaneseTransport};
pub use graph::{graph_subgroup, FiniteGroup, GraphSubgroup, MAX_GROUP_ORDER};
pub use mu::{build_mu, check_projection_trivial, MuMap};
pub use report::{
    assemble_counterexample, stage_order, CounterexampleReport, ReportStage, ReportVerdict, TorusSummary,
    DEFAULT_NS_HEIGHT, STATEMENT,
};
pub use s3::{semidirect_mul, S3Element, SemidirectElement};
