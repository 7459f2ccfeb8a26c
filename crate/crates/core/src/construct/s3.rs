use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::IntMatrix;

/// A permutation of three points, stored 0-based as the image array.
///
/// Composition follows `(st)(x) = s(t(x))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct S3Element([u8; 3]);

impl S3Element {
    pub const E: Self = Self([0, 1, 2]);
    /// `(23)`, fixing the first point.
    pub const S1: Self = Self([0, 2, 1]);
    /// `(31)`, fixing the second point.
    pub const S2: Self = Self([2, 1, 0]);
    /// `(12)`, fixing the third point.
    pub const S3: Self = Self([1, 0, 2]);
    /// `(123)`
    pub const C: Self = Self([1, 2, 0]);
    /// `(132)`
    pub const C2: Self = Self([2, 0, 1]);

    pub const ALL: [Self; 6] = [Self::E, Self::S1, Self::S2, Self::S3, Self::C, Self::C2];

    pub fn from_images(images: [u8; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &x in &images {
            if x > 2 || seen[x as usize] {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation of 0, 1, 2")));
            }
            seen[x as usize] = true;
        }
        Ok(Self(images))
    }

    pub fn images(self) -> [u8; 3] {
        self.0
    }

    pub fn apply(self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn compose(self, other: Self) -> Self {
        Self([self.0[other.0[0] as usize], self.0[other.0[1] as usize], self.0[other.0[2] as usize]])
    }

    pub fn inverse(self) -> Self {
        let mut inv = [0u8; 3];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Self(inv)
    }

    pub fn is_identity(self) -> bool {
        self == Self::E
    }

    /// Index into [`Self::ALL`].
    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&s| s == self).expect("every permutation is listed")
    }

    pub fn name(self) -> &'static str {
        ["e", "s1", "s2", "s3", "c", "c2"][self.index()]
    }

    /// Block permutation matrix on `(Z^k)^3`: block `i` is moved to block
    /// `s(i)`.
    pub fn block_matrix(self, k: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(3 * k, 3 * k);
        for i in 0..3 {
            let j = self.apply(i);
            for t in 0..k {
                m[(j * k + t, i * k + t)] = BigInt::from(1);
            }
        }
        m
    }

    /// `(s . t)_{s(i)} = t_i`
    pub fn act(self, t: &[Vec<BigInt>; 3]) -> [Vec<BigInt>; 3] {
        let mut out = t.clone();
        for (i, block) in t.iter().enumerate() {
            out[self.apply(i)] = block.clone();
        }
        out
    }
}

impl fmt::Debug for S3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Element `(t, s)` of `(Z^k)^3 ⋊ S3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemidirectElement {
    pub translation: [Vec<BigInt>; 3],
    pub twist: S3Element,
}

impl SemidirectElement {
    pub fn new(translation: [Vec<BigInt>; 3], twist: S3Element) -> Result<Self> {
        let k = translation[0].len();
        if translation.iter().any(|b| b.len() != k) {
            return Err(Error::DimensionMismatch("translation blocks of unequal length".into()));
        }
        Ok(Self { translation, twist })
    }

    pub fn identity(k: usize) -> Self {
        let z = alloc::vec![BigInt::zero(); k];
        Self { translation: [z.clone(), z.clone(), z], twist: S3Element::E }
    }

    pub fn block_rank(&self) -> usize {
        self.translation[0].len()
    }

    pub fn inverse(&self) -> Self {
        // (t, s)^-1 = (-(s^-1 . t), s^-1)
        let si = self.twist.inverse();
        let moved = si.act(&self.translation);
        Self { translation: moved.map(|b| b.into_iter().map(|x| -x).collect()), twist: si }
    }

    /// Translation coordinates as one vector of length `3k`.
    pub fn flat_translation(&self) -> Vec<BigInt> {
        self.translation.iter().flatten().cloned().collect()
    }

    pub fn pow(&self, e: &BigInt) -> Self {
        let (mut base, mut n) = if e.sign() == num_bigint::Sign::Minus {
            (self.inverse(), -e)
        } else {
            (self.clone(), e.clone())
        };
        let mut acc = Self::identity(self.block_rank());
        let two = BigInt::from(2);
        while !n.is_zero() {
            if &n % &two == BigInt::from(1) {
                acc = semidirect_mul(&acc, &base).expect("same rank");
            }
            base = semidirect_mul(&base, &base).expect("same rank");
            n /= &two;
        }
        acc
    }
}

/// `(t, s)(t', s') = (t + s . t', s s')`
pub fn semidirect_mul(x: &SemidirectElement, y: &SemidirectElement) -> Result<SemidirectElement> {
    if x.block_rank() != y.block_rank() {
        return Err(Error::DimensionMismatch(format!(
            "blocks of rank {} and {}",
            x.block_rank(),
            y.block_rank()
        )));
    }
    let moved = x.twist.act(&y.translation);
    let mut t = x.translation.clone();
    for (a, b) in t.iter_mut().zip(moved) {
        for (u, v) in a.iter_mut().zip(b) {
            *u += v;
        }
    }
    Ok(SemidirectElement { translation: t, twist: x.twist.compose(y.twist) })
}
