use alloc::vec::Vec;

use super::albanese::{albanese_transport, AlbaneseTransport};
use super::mu::{build_mu, check_projection_trivial, MuMap};
use crate::error::{Error, Result};
use crate::exact::{companion, IntPolynomial};
use crate::torus::{
    build_torus, ns_integral_search, voisin_check, NsSearchReport, TorusResiduals, VoisinOutcome,
};

/// Height bound used for the integral (1,1)-form search when none is given.
pub const DEFAULT_NS_HEIGHT: u64 = 10_000;

/// The claim the report supports once every stage passes.
pub const STATEMENT: &str = "mu_* : Z^2n x Z^2n -> (Z^2n)^3 ⋊ S3 is Kähler by construction \
(a holomorphic map into a quotient of T x T x T by a free S3 action), and not projective: the \
Albanese transport recovers phi_* on a torus T whose Galois certificate rules out any \
polarization.";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportStage {
    Voisin,
    Torus,
    Mu,
    ProjectionTrivial,
    AlbaneseTransport,
    NsSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportVerdict {
    /// Every stage passed.
    Complete,
    /// The hypotheses fail for this polynomial.
    Fails(ReportStage),
    /// A certificate could not be found within the budget.
    Inconclusive(ReportStage),
}

#[derive(Clone, Debug)]
pub struct TorusSummary {
    pub dimension: usize,
    pub precision_bits: u32,
    pub condition_log2: f64,
    pub residuals: TorusResiduals,
}

#[derive(Clone, Debug)]
pub struct CounterexampleReport {
    pub poly: IntPolynomial,
    pub prime_budget: usize,
    pub precision_bits: u32,
    pub voisin: VoisinOutcome,
    pub torus: Option<TorusSummary>,
    pub mu: Option<MuMap>,
    /// Rank of the translation part of `mu`; informational.
    pub mu_image_rank: Option<usize>,
    pub projection_trivial: Option<bool>,
    pub albanese: Option<AlbaneseTransport>,
    pub decomposition_holds: Option<bool>,
    pub ns_search: Option<NsSearchReport>,
    pub verdict: ReportVerdict,
    pub statement: Option<&'static str>,
}

impl CounterexampleReport {
    fn stopped(p: &IntPolynomial, budget: usize, prec: u32, voisin: VoisinOutcome, verdict: ReportVerdict) -> Self {
        Self {
            poly: p.clone(),
            prime_budget: budget,
            precision_bits: prec,
            voisin,
            torus: None,
            mu: None,
            mu_image_rank: None,
            projection_trivial: None,
            albanese: None,
            decomposition_holds: None,
            ns_search: None,
            verdict,
            statement: None,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.verdict == ReportVerdict::Complete
    }
}

/// Runs the certification, builds the torus and `mu`, checks that `mu`
/// composed with the projection to `S3` is trivial, recovers `M` through the
/// Albanese transport and searches for integral (1,1)-forms up to
/// `ns_height`.
pub fn assemble_counterexample(
    p: &IntPolynomial,
    prime_budget: usize,
    precision_bits: u32,
    ns_height: u64,
) -> Result<CounterexampleReport> {
    let voisin = voisin_check(p, prime_budget)?;
    match &voisin {
        VoisinOutcome::Fails(_) => {
            let v = ReportVerdict::Fails(ReportStage::Voisin);
            return Ok(CounterexampleReport::stopped(p, prime_budget, precision_bits, voisin, v));
        }
        VoisinOutcome::Inconclusive { .. } => {
            let v = ReportVerdict::Inconclusive(ReportStage::Voisin);
            return Ok(CounterexampleReport::stopped(p, prime_budget, precision_bits, voisin, v));
        }
        VoisinOutcome::Certified(_) => {}
    }
    let mut report = CounterexampleReport::stopped(p, prime_budget, precision_bits, voisin, ReportVerdict::Complete);

    let torus = build_torus(p, precision_bits, None)?;
    let tol = crate::torus::tolerance(precision_bits);
    report.torus = Some(TorusSummary {
        dimension: torus.dimension(),
        precision_bits,
        condition_log2: torus.condition_log2,
        residuals: torus.residuals.clone(),
    });
    if !torus.residuals.within(&tol) {
        report.verdict = ReportVerdict::Fails(ReportStage::Torus);
        return Ok(report);
    }

    let m = companion(p)?;
    let mu = build_mu(&m)?;
    report.mu_image_rank = Some(mu.image_rank());
    let trivial = check_projection_trivial(&mu);
    report.mu = Some(mu);
    report.projection_trivial = Some(trivial);
    if !trivial {
        report.verdict = ReportVerdict::Fails(ReportStage::ProjectionTrivial);
        return Ok(report);
    }

    match albanese_transport(&m) {
        Ok(t) => {
            report.decomposition_holds = Some(t.model.decomposition_holds()?);
            report.albanese = Some(t);
        }
        Err(Error::InvariantViolated(_)) => {
            report.verdict = ReportVerdict::Fails(ReportStage::AlbaneseTransport);
            return Ok(report);
        }
        Err(e) => return Err(e),
    }
    if report.decomposition_holds != Some(true) {
        report.verdict = ReportVerdict::Fails(ReportStage::AlbaneseTransport);
        return Ok(report);
    }

    report.ns_search = Some(ns_integral_search(&torus, ns_height, precision_bits)?);
    report.statement = Some(STATEMENT);
    Ok(report)
}

/// Stages in report order.
pub fn stage_order() -> Vec<ReportStage> {
    use ReportStage::*;
    alloc::vec![Voisin, Torus, Mu, ProjectionTrivial, AlbaneseTransport, NsSearch]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::NsVerdict;

    #[test]
    fn quartic_report_complete() {
        let p = IntPolynomial::from_i64(&[1, 1, 0, 0, 1]);
        let r = assemble_counterexample(&p, 1000, 128, 100).unwrap();
        assert!(r.is_complete());
        assert_eq!(r.projection_trivial, Some(true));
        assert_eq!(r.albanese.as_ref().unwrap().composite, companion(&p).unwrap());
        assert_eq!(r.ns_search.as_ref().unwrap().verdict, NsVerdict::NoFormFound);
        assert!(r.statement.is_some());
    }

    #[test]
    fn stopped_reports() {
        let r = assemble_counterexample(&IntPolynomial::from_i64(&[-1, 0, 0, 0, 1]), 1000, 128, 10).unwrap();
        assert_eq!(r.verdict, ReportVerdict::Fails(ReportStage::Voisin));
        assert!(r.mu.is_none());
        let r = assemble_counterexample(&IntPolynomial::from_i64(&[1, 0, 0, 0, 1]), 1000, 128, 10).unwrap();
        assert_eq!(r.verdict, ReportVerdict::Inconclusive(ReportStage::Voisin));
    }
}
