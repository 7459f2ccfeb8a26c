use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::mu::build_mu;
use super::s3::S3Element;
use crate::error::{Error, Result};
use crate::exact::{snf, IntMatrix, Sublattice};

/// Lattice data of the Albanese quotient of `T x T x T` by the diagonal
/// `Sigma`, for an endomorphism with rational representation `M` (`2n x 2n`).
#[derive(Clone, Debug)]
pub struct AlbaneseModel {
    pub block_rank: usize,
    pub sigma: Sublattice,
    /// Vectors fixed by `s1`, `s2`, `s3`.
    pub gamma: [Sublattice; 3],
    /// Image of the translation part of `mu`.
    pub gamma4: Sublattice,
    /// `(x, y, z) -> (x - z, y - z)`, `4n x 6n`.
    pub quotient: IntMatrix,
}

fn blocks(k: usize, layout: &[&[i64]]) -> IntMatrix {
    // layout[i][j] is the scalar multiple of the identity in block (i, j)
    let mut m = IntMatrix::zeros(layout.len() * k, layout[0].len() * k);
    for (i, row) in layout.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            for t in 0..k {
                m[(i * k + t, j * k + t)] = BigInt::from(c);
            }
        }
    }
    m
}

impl AlbaneseModel {
    pub fn new(m: &IntMatrix) -> Result<Self> {
        let mu = build_mu(m)?;
        let k = m.rows();
        let gamma = [S3Element::S1, S3Element::S2, S3Element::S3]
            .map(|s| Sublattice::fixed_by(&s.block_matrix(k)));
        let [g1, g2, g3] = gamma;
        let sigma = Sublattice::column_span(&blocks(k, &[&[1], &[1], &[1]]))?;
        Ok(Self {
            block_rank: k,
            sigma,
            gamma: [g1?, g2?, g3?],
            gamma4: Sublattice::column_span(&mu.translation_matrix())?,
            quotient: blocks(k, &[&[1, 0, -1], &[0, 1, -1]]),
        })
    }

    /// `Sigma` is fixed pointwise by every element of `S3`.
    pub fn sigma_is_fixed(&self) -> bool {
        S3Element::ALL.iter().all(|s| {
            let p = s.block_matrix(self.block_rank);
            self.sigma.generators().iter().all(|g| p.mul_vec(g).ok().as_deref() == Some(g.as_slice()))
        })
    }

    /// `Gamma1 = {(a+b, b, b)}` and `Gamma2 = {(b, a+b, b)}`.
    pub fn gammas_match_parametrization(&self) -> Result<bool> {
        let k = self.block_rank;
        let p1 = Sublattice::column_span(&blocks(k, &[&[1, 1], &[0, 1], &[0, 1]]))?;
        let p2 = Sublattice::column_span(&blocks(k, &[&[0, 1], &[1, 1], &[0, 1]]))?;
        Ok(self.gamma[0].same_as(&p1) && self.gamma[1].same_as(&p2))
    }

    /// Images of `Gamma1`, `Gamma2` in the quotient.
    pub fn quotient_gammas(&self) -> Result<(Sublattice, Sublattice)> {
        Ok((self.gamma[0].image(&self.quotient)?, self.gamma[1].image(&self.quotient)?))
    }

    /// `Gamma1bar ⊕ Gamma2bar = Z^4n`: the Smith form of the stacked bases is
    /// the identity.
    pub fn decomposition_holds(&self) -> Result<bool> {
        let (g1, g2) = self.quotient_gammas()?;
        let mut cols = g1.basis();
        cols.extend(g2.basis());
        if cols.len() != 2 * self.block_rank {
            return Ok(false);
        }
        let s = snf(&IntMatrix::from_columns(&cols)?);
        Ok(s.rank() == cols.len() && s.diag.iter().all(One::is_one))
    }
}

/// Result of transporting `Gamma1bar -> Gamma4bar -> Gamma2bar -> Gamma1bar`.
#[derive(Clone, Debug)]
pub struct AlbaneseTransport {
    pub model: AlbaneseModel,
    /// `pr1` on `Gamma4bar` in parameter coordinates.
    pub pr1: IntMatrix,
    /// `pr2` on `Gamma4bar` in parameter coordinates.
    pub pr2: IntMatrix,
    /// `s3` from `Gamma2bar` to `Gamma1bar`.
    pub swap: IntMatrix,
    /// `swap * pr2 * pr1^-1`
    pub composite: IntMatrix,
}

fn solve_columns(lattice: &Sublattice, targets: &[Vec<BigInt>]) -> Result<IntMatrix> {
    let cols = targets
        .iter()
        .map(|t| lattice.solve(t).ok_or_else(|| Error::InvariantViolated("vector outside the expected lattice".into())))
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_columns(&cols)
}

/// Recovers `M` from the Albanese data of `mu`. Each lattice is derived from
/// its definition (fixed vectors, image of `mu`, quotient map) and the
/// transport maps are obtained by solving integer linear systems in the
/// parametrizations `a -> (a, 0)` of `Gamma1bar` and `a -> (0, a)` of
/// `Gamma2bar`.
pub fn albanese_transport(m: &IntMatrix) -> Result<AlbaneseTransport> {
    let model = AlbaneseModel::new(m)?;
    let k = model.block_rank;
    let q = &model.quotient;
    if !model.gammas_match_parametrization()? {
        return Err(Error::InvariantViolated("fixed lattices differ from their parametrization".into()));
    }
    // Parametrizations pushed through the quotient map.
    let b1 = q.mul(&blocks(k, &[&[1], &[0], &[0]]))?;
    let b2 = q.mul(&blocks(k, &[&[0], &[1], &[0]]))?;
    let (g1bar, g2bar) = model.quotient_gammas()?;
    let l1 = Sublattice::column_span(&b1)?;
    let l2 = Sublattice::column_span(&b2)?;
    if !l1.same_as(&g1bar) || !l2.same_as(&g2bar) {
        return Err(Error::InvariantViolated("quotient lattices differ from their parametrization".into()));
    }
    // Gamma4bar is parametrized by a: (a+b, Ma+b, b) -> (a, Ma).
    let g4 = q.mul(&build_mu(m)?.translation_matrix())?.submatrix(0, 2 * k, 0, k)?;
    let g4_lattice = model.gamma4.image(q)?;
    if !g4_lattice.same_as(&Sublattice::column_span(&g4)?) {
        return Err(Error::InvariantViolated("Gamma4bar is not parametrized by its first factor".into()));
    }

    // Split each generator of Gamma4bar along Gamma1bar ⊕ Gamma2bar.
    let both = Sublattice::column_span(&b1.hstack(&b2)?)?;
    let coords = solve_columns(&both, &g4.columns())?;
    let pr1 = coords.submatrix(0, k, 0, k)?;
    let pr2 = coords.submatrix(k, 2 * k, 0, k)?;

    // s3 on the quotient: S-bar = Q * S * R with R(u, v) = (u, v, 0).
    let r = blocks(k, &[&[1, 0], &[0, 1], &[0, 0]]);
    let sbar = q.mul(&S3Element::S3.block_matrix(k))?.mul(&r)?;
    let swap = solve_columns(&l1, &sbar.mul(&b2)?.columns())?;

    let pr1_inv = pr1
        .unimodular_inverse()?
        .ok_or_else(|| Error::InvariantViolated("pr1 is not an isomorphism on Gamma4bar".into()))?;
    let composite = swap.mul(&pr2)?.mul(&pr1_inv)?;
    if composite != *m {
        return Err(Error::InvariantViolated(format!("transport produced {composite} instead of {m}")));
    }
    Ok(AlbaneseTransport { model, pr1, pr2, swap, composite })
}
