use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::period::{tolerance, TorusWithEndomorphism};
use crate::error::{Error, Result};
use crate::exact::{rank, IntMatrix};
use crate::lattice::{lll_reduce, short_vectors, EnumerationLimits};
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NsVerdict {
    NoFormFound,
    FormsFound,
}

/// Outcome of the search for integral antisymmetric forms of type (1,1).
/// This is numerical evidence; it does not compute the Néron–Severi group.
#[derive(Clone, Debug)]
pub struct NsSearchReport {
    pub height_bound: u64,
    /// One representative per `{E, -E}` pair, in enumeration order.
    pub forms_found: Vec<IntMatrix>,
    /// Rank over the rationals of the forms found.
    pub independent_rank: usize,
    /// Largest normalized constraint residual among accepted forms (zero
    /// when none were found).
    pub constraint_residual_max: Real,
    pub verdict: NsVerdict,
    /// True when the enumeration covered the whole search region.
    pub exhaustive: bool,
    pub nodes_visited: u64,
    pub precision_bits: u32,
}

/// Index pairs `(a, b)`, `a < b`, labelling the unknowns `E[a][b]`.
pub fn form_coordinates(dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(dim * dim.saturating_sub(1) / 2);
    for a in 0..dim {
        for b in a + 1..dim {
            out.push((a, b));
        }
    }
    out
}

/// Antisymmetric matrix from its strictly upper-triangular coordinates.
pub fn antisymmetric_from_coordinates(dim: usize, x: &[BigInt]) -> IntMatrix {
    let mut e = IntMatrix::zeros(dim, dim);
    for (&(a, b), v) in form_coordinates(dim).iter().zip(x) {
        e[(a, b)] = v.clone();
        e[(b, a)] = -v;
    }
    e
}

/// Real constraint rows of `v_i^T E v_j = 0` (`i < j`) over the
/// `(a, b)` coordinates, each scaled to unit maximum coefficient. Rows that
/// vanish identically are dropped.
fn constraint_rows(t: &TorusWithEndomorphism, prec: u32) -> Result<Vec<Vec<Real>>> {
    let n = t.dimension();
    let dim = 2 * n;
    let v = t.holomorphic_eigenvectors(prec)?;
    let coords = form_coordinates(dim);
    let tiny = tolerance(prec);
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c: Vec<_> = coords.iter().map(|&(a, b)| &(&v[i][a] * &v[j][b]) - &(&v[i][b] * &v[j][a])).collect();
            for part in [c.iter().map(|z| z.re.clone()).collect::<Vec<_>>(), c.iter().map(|z| z.im.clone()).collect()] {
                let scale = part.iter().fold(Real::zero(prec), |m, x| m.max(x.abs()));
                if scale <= tiny {
                    continue;
                }
                rows.push(part.iter().map(|x| x / &scale).collect());
            }
        }
    }
    Ok(rows)
}

fn residual(rows: &[Vec<Real>], x: &[BigInt], prec: u32) -> Real {
    rows.iter()
        .map(|r| r.iter().zip(x).fold(Real::zero(prec), |acc, (c, xi)| acc + c * &Real::from_int(xi, prec)).abs())
        .fold(Real::zero(prec), Real::max)
}

/// Searches for nonzero integral antisymmetric `E` with entries bounded by
/// `height_bound` whose `(2,0)` part vanishes, i.e. `v_i^T E v_j = 0` for the
/// holomorphic eigenvectors `v_i` of `J`.
///
/// Integer points near the solution space are found by LLL on the lattice
/// spanned by `(e_t, round(S * L_t))`, `S = 2^(precision/4)`, followed by
/// exhaustive enumeration of the ball that contains every candidate of
/// height `<= height_bound`.
pub fn ns_integral_search(
    t: &TorusWithEndomorphism,
    height_bound: u64,
    precision_bits: u32,
) -> Result<NsSearchReport> {
    ns_integral_search_with_limits(t, height_bound, precision_bits, EnumerationLimits::default())
}

pub fn ns_integral_search_with_limits(
    t: &TorusWithEndomorphism,
    height_bound: u64,
    precision_bits: u32,
    limits: EnumerationLimits,
) -> Result<NsSearchReport> {
    let prec = precision_bits;
    if prec > t.precision_bits() {
        return Err(Error::InvalidInput(alloc::format!(
            "search precision {prec} exceeds torus precision {}",
            t.precision_bits()
        )));
    }
    if height_bound == 0 {
        return Err(Error::InvalidInput("height bound must be positive".into()));
    }
    if t.condition_log2 > f64::from(prec / 4) {
        return Err(Error::PrecisionInsufficient { condition_bits: t.condition_log2 as i64, precision_bits: prec });
    }
    let dim = 2 * t.dimension();
    let m = dim * (dim - 1) / 2;
    let rows = constraint_rows(t, prec)?;
    let k = rows.len();
    let scale = Real::pow2(i64::from(prec / 4), prec);

    let basis: Vec<Vec<BigInt>> = (0..m)
        .map(|col| {
            let mut v = vec![BigInt::zero(); m + k];
            v[col] = BigInt::from(1);
            for (r, row) in rows.iter().enumerate() {
                v[m + r] = (&row[col] * &scale).round_to_int();
            }
            v
        })
        .collect();
    let reduced = lll_reduce(basis)?;

    // |x|^2 <= m H^2, and each rounded constraint coordinate of a true form is
    // at most m H / 2 plus the scaled residual.
    let h = BigInt::from(height_bound);
    let mh = &h * m;
    let slack = (&mh + 3u32) / 2u32;
    let radius_sqr = &h * &h * m + &slack * &slack * k;
    let found = short_vectors(&reduced, &radius_sqr, limits);

    let tol = tolerance(prec);
    let mut forms = Vec::new();
    let mut residual_max = Real::zero(prec);
    let mut coords_found: Vec<Vec<BigInt>> = Vec::new();
    for v in &found.vectors {
        let x = &v[..m];
        if x.iter().all(Zero::is_zero) || x.iter().any(|c| c.abs() > h) {
            continue;
        }
        let r = residual(&rows, x, prec);
        let l1: BigInt = x.iter().map(Signed::abs).sum();
        if r > &tol * &Real::from_int(&l1, prec) {
            continue;
        }
        residual_max = residual_max.max(r);
        forms.push(antisymmetric_from_coordinates(dim, x));
        coords_found.push(x.to_vec());
    }

    let independent_rank = greedy_rank(&coords_found, m);
    Ok(NsSearchReport {
        height_bound,
        verdict: if forms.is_empty() { NsVerdict::NoFormFound } else { NsVerdict::FormsFound },
        forms_found: forms,
        independent_rank,
        constraint_residual_max: residual_max,
        exhaustive: found.complete,
        nodes_visited: found.nodes_visited,
        precision_bits: prec,
    })
}

fn greedy_rank(vectors: &[Vec<BigInt>], m: usize) -> usize {
    let mut chosen: Vec<Vec<BigInt>> = Vec::new();
    for v in vectors {
        if chosen.len() == m {
            break;
        }
        chosen.push(v.clone());
        let mat = IntMatrix::from_rows(chosen.clone()).expect("uniform rows");
        if rank(&mat) < chosen.len() {
            chosen.pop();
        }
    }
    chosen.len()
}
