use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::map::{check_even_rank, AbelianHom, Parity};
use crate::error::{Error, Result};
use crate::exact::{snf, IntMatrix, SnfDecomposition};

/// Gaussian integer `re + im * i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigInt::zero(), BigInt::zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizationStep {
    /// `C^from -> C^to`, keeping the first `to` coordinates.
    Projection { from: usize, to: usize },
    /// Identity on `C^dimension`, descending to a cover of tori of the given
    /// degree.
    FiniteCover { dimension: usize, degree: BigInt },
    /// `C^from -> C^to` as the first `from` coordinates.
    Embedding { from: usize, to: usize },
}

/// A holomorphic map `X -> Y` of tori realizing an even-rank homomorphism
/// `f: Z^2r -> Z^2s` up to the change of bases recorded by the Smith form.
///
/// `X = C^r / Lambda` with `Lambda` spanned by `a_(2k-1) e_k` and
/// `a_(2k) i e_k` for `k <= l` and by `e_k`, `i e_k` for `k > l`, where
/// `a_1, ..., a_2l` are the nonzero Smith invariants; `Y = C^s / Z[i]^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationPlan {
    pub source_dim: usize,
    pub target_dim: usize,
    pub paired: usize,
    /// `2r` generators, each a vector in `Z[i]^r`.
    pub source_lattice: Vec<Vec<GaussianInt>>,
    pub steps: Vec<RealizationStep>,
    /// `D`: the map on `H_1` in the lattice bases above (`2s x 2r`).
    pub induced_matrix: IntMatrix,
    /// `U f V = D` with `U`, `V` unimodular, so `f = U^-1 D V^-1`.
    pub basis_change: SnfDecomposition,
}

/// Realizes a torsion-free homomorphism of even rank as
/// projection, finite cover and embedding.
pub fn realize_free_hom(f: &AbelianHom) -> Result<RealizationPlan> {
    if !f.source.is_free() || !f.target.is_free() {
        return Err(Error::TorsionPresent);
    }
    let ranks = check_even_rank(f)?;
    if ranks.parity == Parity::Odd {
        return Err(Error::OddRankObstruction { kernel: ranks.kernel, image: ranks.image, cokernel: ranks.cokernel });
    }
    let (two_r, two_s) = (f.source.free_rank, f.target.free_rank);
    let (r, s) = (two_r / 2, two_s / 2);
    let m = f.free_matrix().unwrap_or_else(|| IntMatrix::zeros(two_s.max(1), two_r.max(1)));
    let dec = snf(&m);
    if !dec.verify(&m) {
        return Err(Error::InvariantViolated("Smith decomposition does not reproduce the matrix".into()));
    }
    let nonzero = dec.nonzero_diag().to_vec();
    assert!(nonzero.len() % 2 == 0, "even rank image has an even number of invariants");
    let l = nonzero.len() / 2;

    let mut source_lattice = Vec::with_capacity(two_r);
    for k in 0..r {
        let (a, b) = if k < l { (nonzero[2 * k].clone(), nonzero[2 * k + 1].clone()) } else { (BigInt::one(), BigInt::one()) };
        let mut re = vec![GaussianInt::zero(); r];
        re[k] = GaussianInt::new(a, BigInt::zero());
        let mut im = vec![GaussianInt::zero(); r];
        im[k] = GaussianInt::new(BigInt::zero(), b);
        source_lattice.push(re);
        source_lattice.push(im);
    }
    let degree: BigInt = nonzero.iter().product();
    let induced_matrix = if two_r == 0 || two_s == 0 {
        IntMatrix::zeros(two_s.max(1), two_r.max(1))
    } else {
        dec.d.clone()
    };
    let plan = RealizationPlan {
        source_dim: r,
        target_dim: s,
        paired: l,
        source_lattice,
        steps: vec![
            RealizationStep::Projection { from: r, to: l },
            RealizationStep::FiniteCover { dimension: l, degree },
            RealizationStep::Embedding { from: l, to: s },
        ],
        induced_matrix,
        basis_change: dec,
    };
    if !verify_plan(&plan, f)? {
        return Err(Error::InvariantViolated("realization plan does not induce the Smith form".into()));
    }
    Ok(plan)
}

/// Applies the steps to a vector of `C^r` with Gaussian integer coordinates.
fn push_forward(steps: &[RealizationStep], v: &[GaussianInt]) -> Result<Vec<GaussianInt>> {
    let mut cur = v.to_vec();
    for st in steps {
        match st {
            RealizationStep::Projection { from, to } => {
                if cur.len() != *from || to > from {
                    return Err(Error::MalformedPlan(format!("projection {from}->{to} applied to C^{}", cur.len())));
                }
                cur.truncate(*to);
            }
            RealizationStep::FiniteCover { dimension, .. } => {
                if cur.len() != *dimension {
                    return Err(Error::MalformedPlan(format!("cover on C^{dimension} applied to C^{}", cur.len())));
                }
            }
            RealizationStep::Embedding { from, to } => {
                if cur.len() != *from || to < from {
                    return Err(Error::MalformedPlan(format!("embedding {from}->{to} applied to C^{}", cur.len())));
                }
                cur.resize(*to, GaussianInt::zero());
            }
        }
    }
    Ok(cur)
}

/// Target-lattice coordinates `(re_1, im_1, re_2, im_2, ...)`.
fn to_coordinates(v: &[GaussianInt]) -> Vec<BigInt> {
    v.iter().flat_map(|z| [z.re.clone(), z.im.clone()]).collect()
}

/// Index of the lattice spanned by `gens` (vectors of `Z^2l`) in `Z^2l`;
/// zero when they do not have full rank.
fn lattice_index(gens: &[Vec<BigInt>], dim: usize) -> Result<BigInt> {
    if dim == 0 {
        return Ok(BigInt::one());
    }
    let nonzero: Vec<Vec<BigInt>> = gens.iter().filter(|g| g.iter().any(|c| !c.is_zero())).cloned().collect();
    if nonzero.len() != dim {
        return Ok(BigInt::zero());
    }
    Ok(IntMatrix::from_columns(&nonzero)?.det()?.abs())
}

/// Pushes every source generator through the three steps and compares the
/// resulting matrix with the Smith form of `f`; also checks the cover degree
/// against the index of the projected source lattice.
pub fn verify_plan(plan: &RealizationPlan, f: &AbelianHom) -> Result<bool> {
    let (r, s) = (plan.source_dim, plan.target_dim);
    if f.source.free_rank != 2 * r || f.target.free_rank != 2 * s || !f.source.is_free() || !f.target.is_free() {
        return Err(Error::MalformedPlan("plan dimensions do not match the homomorphism".into()));
    }
    if plan.source_lattice.len() != 2 * r || plan.source_lattice.iter().any(|g| g.len() != r) {
        return Err(Error::MalformedPlan("source lattice needs 2r generators in C^r".into()));
    }
    let (proj_to, degree) = match plan.steps.as_slice() {
        [RealizationStep::Projection { to, .. }, RealizationStep::FiniteCover { degree, .. }, RealizationStep::Embedding { .. }] => {
            (*to, degree)
        }
        _ => return Err(Error::MalformedPlan("steps must be projection, cover, embedding".into())),
    };

    let mut columns = Vec::with_capacity(2 * r);
    let mut projected = Vec::with_capacity(2 * r);
    for g in &plan.source_lattice {
        let img = push_forward(&plan.steps, g)?;
        columns.push(to_coordinates(&img));
        projected.push(to_coordinates(&g[..proj_to.min(r)]));
    }
    if lattice_index(&projected, 2 * proj_to)? != *degree {
        return Ok(false);
    }
    if r == 0 || s == 0 {
        return Ok(f.image_rank() == 0 && degree.is_one());
    }
    let image = IntMatrix::from_columns(&columns)?;
    let m = f.free_matrix().expect("ranks positive");
    let d = snf(&m);
    Ok(image == d.d && image == plan.induced_matrix && plan.basis_change.verify(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hom(rows: &[&[i64]]) -> AbelianHom {
        AbelianHom::free(&IntMatrix::from_i64(rows).unwrap())
    }

    #[test]
    fn diag_2_6() {
        let f = hom(&[&[2, 0], &[0, 6]]);
        let plan = realize_free_hom(&f).unwrap();
        assert_eq!(plan.source_lattice[0], vec![GaussianInt::new(2.into(), 0.into())]);
        assert_eq!(plan.source_lattice[1], vec![GaussianInt::new(0.into(), 6.into())]);
        assert_eq!(plan.steps[1], RealizationStep::FiniteCover { dimension: 1, degree: 12.into() });
        // Index oracle: residues of Z^2 modulo 2Z x 6Z
        let cosets = (0..2).flat_map(|x| (0..6).map(move |y| (x, y))).count();
        assert_eq!(BigInt::from(cosets), BigInt::from(12));
        assert!(verify_plan(&plan, &f).unwrap());

        let mut tampered = plan.clone();
        tampered.steps[1] = RealizationStep::FiniteCover { dimension: 1, degree: 6.into() };
        assert!(!verify_plan(&tampered, &f).unwrap());
    }

    #[test]
    fn zero_and_identity() {
        let z = AbelianHom::zero(2, 2);
        let plan = realize_free_hom(&z).unwrap();
        assert_eq!(plan.steps[0], RealizationStep::Projection { from: 1, to: 0 });
        assert!(plan.induced_matrix.is_zero());

        let id = AbelianHom::free(&IntMatrix::identity(4));
        let plan = realize_free_hom(&id).unwrap();
        assert_eq!(plan.paired, 2);
        assert_eq!(plan.induced_matrix, IntMatrix::identity(4));
        assert_eq!(plan.steps[1], RealizationStep::FiniteCover { dimension: 2, degree: 1.into() });
    }

    #[test]
    fn odd_rank_rejected() {
        assert_eq!(
            realize_free_hom(&hom(&[&[1, 0], &[0, 0]])),
            Err(Error::OddRankObstruction { kernel: 1, image: 1, cokernel: 1 })
        );
    }

    #[test]
    fn general_matrix() {
        let f = hom(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0], &[0, 0, 0, 0], &[3, 7, 10, 12], &[0, 3, 3, 0]]);
        let plan = realize_free_hom(&f).unwrap();
        assert!(verify_plan(&plan, &f).unwrap());
        assert_eq!(plan.target_dim, 3);
    }
}
