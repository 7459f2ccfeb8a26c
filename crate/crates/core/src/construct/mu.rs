use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::s3::{semidirect_mul, S3Element, SemidirectElement};
use crate::error::{Error, Result};
use crate::exact::{rank, IntMatrix};

/// Homomorphism `Z^2n x Z^2n -> (Z^2n)^3 ⋊ S3` given by the images of the
/// `4n` standard generators (the `a` generators first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuMap {
    /// `phi_*`, `2n x 2n`.
    pub m: IntMatrix,
    pub domain_rank: usize,
    pub generator_images: Vec<SemidirectElement>,
}

/// `mu(a, b) = ((a + b, M a + b, b), e)`.
pub fn build_mu(m: &IntMatrix) -> Result<MuMap> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let k = m.rows();
    let mut images = Vec::with_capacity(2 * k);
    for j in 0..2 * k {
        let mut a = alloc::vec![BigInt::zero(); k];
        let mut b = alloc::vec![BigInt::zero(); k];
        if j < k {
            a[j] = BigInt::from(1);
        } else {
            b[j - k] = BigInt::from(1);
        }
        images.push(mu_formula(m, &a, &b));
    }
    Ok(MuMap { m: m.clone(), domain_rank: 2 * k, generator_images: images })
}

fn mu_formula(m: &IntMatrix, a: &[BigInt], b: &[BigInt]) -> SemidirectElement {
    let ma = m.mul_vec(a).expect("square");
    let first = a.iter().zip(b).map(|(x, y)| x + y).collect();
    let second = ma.iter().zip(b).map(|(x, y)| x + y).collect();
    SemidirectElement { translation: [first, second, b.to_vec()], twist: S3Element::E }
}

impl MuMap {
    /// Block rank `2n` of the translation part.
    pub fn block_rank(&self) -> usize {
        self.m.rows()
    }

    /// Image of `x` in the domain, as the ordered product of generator
    /// powers.
    pub fn apply(&self, x: &[BigInt]) -> Result<SemidirectElement> {
        if x.len() != self.domain_rank {
            return Err(Error::DimensionMismatch("argument length differs from domain rank".into()));
        }
        let mut acc = SemidirectElement::identity(self.block_rank());
        for (g, e) in self.generator_images.iter().zip(x) {
            if !e.is_zero() {
                acc = semidirect_mul(&acc, &g.pow(e))?;
            }
        }
        Ok(acc)
    }

    pub fn apply_pair(&self, a: &[BigInt], b: &[BigInt]) -> Result<SemidirectElement> {
        let mut x = a.to_vec();
        x.extend_from_slice(b);
        self.apply(&x)
    }

    /// The `6n x 4n` matrix `[[I, I], [M, I], [0, I]]` of the translation
    /// part of `mu`.
    pub fn translation_matrix(&self) -> IntMatrix {
        let k = self.block_rank();
        let i = IntMatrix::identity(k);
        let z = IntMatrix::zeros(k, k);
        let top = i.hstack(&i).expect("square blocks");
        let mid = self.m.hstack(&i).expect("square blocks");
        let bot = z.hstack(&i).expect("square blocks");
        top.vstack(&mid).and_then(|t| t.vstack(&bot)).expect("equal widths")
    }

    /// Rank of the translation part; reported, not asserted.
    pub fn image_rank(&self) -> usize {
        rank(&self.translation_matrix())
    }
}

/// Whether `mu` composed with the projection to `S3` is trivial, checked on
/// generators.
pub fn check_projection_trivial(mu: &MuMap) -> bool {
    mu.generator_images.iter().all(|g| g.twist.is_identity())
}
