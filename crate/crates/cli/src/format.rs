//! JSON renderings of core values. Integers are decimal strings; output is
//! deterministic for identical inputs.

use kahler_core::construct::{
    AlbaneseTransport, CounterexampleReport, MuMap, ReportStage, ReportVerdict, SemidirectElement, TorusSummary,
};
use kahler_core::exact::SnfDecomposition;
use kahler_core::galois::{CycleType, IrreducibilityCertificate, IrreducibilityKind, SnCertificate};
use kahler_core::hom::{RankReport, RealizationPlan, RealizationStep, TorsionPart, TorsionRoute};
use kahler_core::real::Real;
use kahler_core::torus::{
    tolerance, NsSearchReport, NsVerdict, TorusResiduals, TorusWithEndomorphism, VoisinCertificate, VoisinFailure,
    VoisinOutcome, VoisinStage,
};
use kahler_core::{IntMatrix, IntPolynomial};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Significant digits used for floating-point residuals.
const DIGITS: usize = 6;

pub fn int(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.to_rows().iter().map(|r| ints(r)).collect::<Vec<_>>(),
    })
}

pub fn poly(p: &IntPolynomial) -> Value {
    json!({ "coeffs": ints(p.coeffs()) })
}

pub fn real(x: &Real) -> Value {
    Value::String(scientific(x))
}

/// `d.ddddde-N` rendering that stays valid far below the `f64` range.
pub fn scientific(x: &Real) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let l2 = x.log2_abs();
    let mut exp10 = (l2 * std::f64::consts::LOG10_2).floor();
    let mut mantissa = 10f64.powf(l2 * std::f64::consts::LOG10_2 - exp10);
    if mantissa >= 9.999995 {
        mantissa /= 10.0;
        exp10 += 1.0;
    }
    let sign = if x.is_negative() { "-" } else { "" };
    format!("{sign}{mantissa:.prec$}e{exp10}", prec = DIGITS - 1)
}

pub fn cycle_type(c: &CycleType, role: &str) -> Value {
    json!({ "prime": c.prime, "parts": c.parts, "role": role })
}

pub fn irreducibility(c: &IrreducibilityCertificate) -> Value {
    let method = match c.kind {
        IrreducibilityKind::Linear => "linear",
        IrreducibilityKind::SinglePrime => "single_prime",
        IrreducibilityKind::DegreeSieve => "degree_sieve",
    };
    json!({
        "kind": "irreducible",
        "method": method,
        "degree": c.degree,
        "witnesses": c.witnesses.iter().map(|w| cycle_type(w, "factor_degrees")).collect::<Vec<_>>(),
    })
}

pub fn sn_certificate(c: &SnCertificate) -> Value {
    let mut witnesses = vec![cycle_type(&c.n_cycle, "n_cycle")];
    if let Some(w) = &c.n_minus_one_cycle {
        witnesses.push(cycle_type(w, "n_minus_one_cycle"));
    }
    if c.degree > 2 {
        if let Some(w) = &c.transposition {
            witnesses.push(cycle_type(w, "transposition"));
        }
    }
    let mut v = json!({ "kind": "Sn", "n": c.degree, "witnesses": witnesses });
    if let Some(d) = &c.discriminant {
        v["discriminant"] = int(d);
    }
    v
}

pub fn voisin_certificate(c: &VoisinCertificate) -> Value {
    json!({
        "poly": poly(&c.poly),
        "n": c.n,
        "real_root_count": c.real_root_count,
        "irreducibility": irreducibility(&c.irreducibility),
        "galois": sn_certificate(&c.galois),
    })
}

fn stage_name(s: VoisinStage) -> &'static str {
    match s {
        VoisinStage::Irreducibility => "irreducibility",
        VoisinStage::Galois => "galois",
    }
}

pub fn voisin_outcome(o: &VoisinOutcome) -> Value {
    match o {
        VoisinOutcome::Certified(c) => json!({ "status": "certified", "certificate": voisin_certificate(c) }),
        VoisinOutcome::Inconclusive { stage, primes_scanned } => json!({
            "status": "inconclusive",
            "stage": stage_name(*stage),
            "primes_scanned": primes_scanned,
        }),
        VoisinOutcome::Fails(f) => {
            let (reason, value) = match f {
                VoisinFailure::OddDegree(d) => ("odd_degree", d),
                VoisinFailure::DegreeTooSmall(d) => ("degree_too_small", d),
                VoisinFailure::RealRoots(k) => ("real_roots", k),
            };
            let key = if reason == "real_roots" { "real_root_count" } else { "degree" };
            json!({ "status": "fails", "reason": reason, key: value })
        }
    }
}

pub fn voisin_reason_text(o: &VoisinOutcome) -> String {
    match o {
        VoisinOutcome::Certified(c) => format!("certified: irreducible, no real roots, Galois group S{}", 2 * c.n),
        VoisinOutcome::Inconclusive { stage, primes_scanned } => {
            format!("inconclusive at the {} stage after {primes_scanned} primes", stage_name(*stage))
        }
        VoisinOutcome::Fails(VoisinFailure::OddDegree(d)) => format!("fails: degree {d} is odd"),
        VoisinOutcome::Fails(VoisinFailure::DegreeTooSmall(d)) => format!("fails: degree {d} is below 4"),
        VoisinOutcome::Fails(VoisinFailure::RealRoots(k)) => format!("fails: {k} real roots"),
    }
}

pub fn residuals(r: &TorusResiduals) -> Value {
    json!({
        "holomorphic": real(&r.holomorphic),
        "j_square": real(&r.j_square),
        "j_commute": real(&r.j_commute),
        "precision_bits": r.precision_bits,
        "tolerance": real(&tolerance(r.precision_bits)),
    })
}

fn f64_value(x: f64) -> Value {
    // Rounded so that the rendering is stable.
    serde_json::Number::from_f64((x * 1000.0).round() / 1000.0).map_or(Value::Null, Value::Number)
}

pub fn torus(t: &TorusWithEndomorphism) -> Value {
    json!({
        "dimension": t.dimension(),
        "poly": poly(&t.period.source_poly),
        "selection": t.period.selection,
        "precision_bits": t.precision_bits(),
        "condition_log2": f64_value(t.condition_log2),
        "rational_rep": matrix(&t.rational_rep),
        "residuals": residuals(&t.residuals),
    })
}

pub fn torus_summary(t: &TorusSummary) -> Value {
    json!({
        "dimension": t.dimension,
        "precision_bits": t.precision_bits,
        "condition_log2": f64_value(t.condition_log2),
        "residuals": residuals(&t.residuals),
    })
}

pub fn ns_report(r: &NsSearchReport) -> Value {
    json!({
        "evidence_only": true,
        "height_bound": r.height_bound,
        "verdict": match r.verdict {
            NsVerdict::NoFormFound => "no_form_found",
            NsVerdict::FormsFound => "forms_found",
        },
        "forms_found": r.forms_found.iter().map(matrix).collect::<Vec<_>>(),
        "independent_rank": r.independent_rank,
        "constraint_residual_max": real(&r.constraint_residual_max),
        "exhaustive": r.exhaustive,
        "nodes_visited": r.nodes_visited,
        "precision_bits": r.precision_bits,
    })
}

pub fn snf(input: &IntMatrix, s: &SnfDecomposition) -> Value {
    json!({
        "input": matrix(input),
        "u": matrix(&s.u),
        "d": matrix(&s.d),
        "v": matrix(&s.v),
        "diag": ints(&s.diag),
        "rank": s.rank(),
    })
}

pub fn ranks(r: &RankReport) -> Value {
    json!({
        "kernel": r.kernel,
        "image": r.image,
        "cokernel": r.cokernel,
        "parity": if r.image % 2 == 0 { "even" } else { "odd" },
    })
}

pub fn plan(p: &RealizationPlan) -> Value {
    let lattice: Vec<Value> = p
        .source_lattice
        .iter()
        .map(|g| Value::Array(g.iter().map(|z| json!({ "re": int(&z.re), "im": int(&z.im) })).collect()))
        .collect();
    let steps: Vec<Value> = p
        .steps
        .iter()
        .map(|s| match s {
            RealizationStep::Projection { from, to } => json!({ "type": "projection", "from": from, "to": to }),
            RealizationStep::FiniteCover { dimension, degree } => {
                json!({ "type": "cover", "dimension": dimension, "degree": int(degree) })
            }
            RealizationStep::Embedding { from, to } => json!({ "type": "embedding", "from": from, "to": to }),
        })
        .collect();
    json!({
        "source_dim": p.source_dim,
        "target_dim": p.target_dim,
        "paired": p.paired,
        "source_lattice": lattice,
        "steps": steps,
        "induced_matrix": matrix(&p.induced_matrix),
        "basis_change": {
            "u": matrix(&p.basis_change.u),
            "v": matrix(&p.basis_change.v),
            "u_inv": matrix(&p.basis_change.u_inv),
            "v_inv": matrix(&p.basis_change.v_inv),
        },
    })
}

pub fn torsion(t: &TorsionPart) -> Value {
    let route = match t.route {
        TorsionRoute::None => "none",
        TorsionRoute::Symbolic => "symbolic",
        TorsionRoute::GraphSubgroup => "graph_subgroup",
    };
    json!({
        "route": route,
        "source_torsion": ints(&t.source_torsion),
        "target_torsion": ints(&t.target_torsion),
        "free_to_torsion": t.free_to_torsion.iter().map(|r| ints(r)).collect::<Vec<_>>(),
        "torsion_to_torsion": t.torsion_to_torsion.iter().map(|r| ints(r)).collect::<Vec<_>>(),
    })
}

fn semidirect(x: &SemidirectElement) -> Value {
    json!({
        "translation": x.translation.iter().map(|b| ints(b)).collect::<Vec<_>>(),
        "twist": x.twist.name(),
    })
}

pub fn mu(m: &MuMap, image_rank: Option<usize>) -> Value {
    json!({
        "block_rank": m.block_rank(),
        "domain_rank": m.domain_rank,
        "m": matrix(&m.m),
        "translation_matrix": matrix(&m.translation_matrix()),
        "generator_images": m.generator_images.iter().map(semidirect).collect::<Vec<_>>(),
        "image_rank": image_rank,
    })
}

pub fn albanese(t: &AlbaneseTransport, decomposition: Option<bool>) -> Value {
    json!({
        "pr1": matrix(&t.pr1),
        "pr2": matrix(&t.pr2),
        "swap": matrix(&t.swap),
        "composite": matrix(&t.composite),
        "decomposition_holds": decomposition,
    })
}

pub fn report_stage(s: ReportStage) -> &'static str {
    match s {
        ReportStage::Voisin => "voisin",
        ReportStage::Torus => "torus",
        ReportStage::Mu => "mu",
        ReportStage::ProjectionTrivial => "projection_trivial",
        ReportStage::AlbaneseTransport => "albanese_transport",
        ReportStage::NsSearch => "ns_search",
    }
}

pub fn report(r: &CounterexampleReport) -> Value {
    let (verdict, stage) = match &r.verdict {
        ReportVerdict::Complete => ("complete", None),
        ReportVerdict::Fails(s) => ("fails", Some(report_stage(*s))),
        ReportVerdict::Inconclusive(s) => ("inconclusive", Some(report_stage(*s))),
    };
    let mut stages = serde_json::Map::new();
    stages.insert("voisin".into(), voisin_outcome(&r.voisin));
    if let Some(t) = &r.torus {
        stages.insert("torus".into(), torus_summary(t));
    }
    if let Some(m) = &r.mu {
        stages.insert("mu".into(), mu(m, r.mu_image_rank));
    }
    if let Some(p) = r.projection_trivial {
        stages.insert("projection_trivial".into(), Value::Bool(p));
    }
    match &r.albanese {
        Some(t) => {
            stages.insert("albanese_transport".into(), "recovered".into());
            stages.insert("albanese_data".into(), albanese(t, r.decomposition_holds));
        }
        None if r.mu.is_some() => {
            stages.insert("albanese_transport".into(), "failed".into());
        }
        None => {}
    }
    if let Some(ns) = &r.ns_search {
        stages.insert("ns_search".into(), ns_report(ns));
    }
    json!({
        "poly": poly(&r.poly),
        "prime_budget": r.prime_budget,
        "precision_bits": r.precision_bits,
        "verdict": verdict,
        "stopped_at": stage,
        "stages": stages,
        "statement": r.statement,
        "notes": [
            "The second factor W is a compact Kähler manifold with fundamental group S3; only the group enters the computation.",
            "The integral (1,1)-form search is numerical evidence; the Galois certificate is the proof of non-projectivity."
        ],
    })
}
