//! Complex tori with an endomorphism built from integer polynomials.
//!
//! [`build_torus`] realizes the companion matrix of a polynomial without real
//! roots as an endomorphism of `C^n / Lambda`; [`voisin_check`] certifies the
//! hypotheses under which such a torus is not an abelian variety, and
//! [`ns_integral_search`] looks for integral (1,1) forms as independent
//! numerical evidence.

mod ns;
mod period;
mod voisin;

pub use ns::{
    antisymmetric_from_coordinates, form_coordinates, ns_integral_search, ns_integral_search_with_limits,
    NsSearchReport, NsVerdict,
};
pub use period::{build_torus, tolerance, PeriodMatrix, TorusResiduals, TorusWithEndomorphism};
pub use voisin::{
    distinct_candidates, sample_polynomial, search_voisin_polynomial, voisin_check, SearchHit, VoisinCertificate,
    VoisinFailure, VoisinOutcome, VoisinStage,
};
