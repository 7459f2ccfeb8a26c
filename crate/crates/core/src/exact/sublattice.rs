use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{snf, IntMatrix, SnfDecomposition};
use crate::error::{Error, Result};

/// A subgroup of `Z^ambient` given by generators.
#[derive(Clone, Debug)]
pub struct Sublattice {
    ambient: usize,
    generators: Vec<Vec<BigInt>>,
    snf: Option<SnfDecomposition>,
}

impl Sublattice {
    pub fn new(ambient: usize, generators: Vec<Vec<BigInt>>) -> Result<Self> {
        if generators.iter().any(|g| g.len() != ambient) {
            return Err(Error::DimensionMismatch("generator length differs from ambient rank".into()));
        }
        let nonzero: Vec<_> = generators.into_iter().filter(|g| g.iter().any(|x| !x.is_zero())).collect();
        let snf = if nonzero.is_empty() {
            None
        } else {
            Some(snf(&IntMatrix::from_columns(&nonzero)?))
        };
        Ok(Self { ambient, generators: nonzero, snf })
    }

    /// Column span of a matrix.
    pub fn column_span(m: &IntMatrix) -> Result<Self> {
        Self::new(m.rows(), m.columns())
    }

    /// Integer kernel `{x : A x = 0}` of a matrix.
    pub fn kernel(a: &IntMatrix) -> Result<Self> {
        let s = snf(a);
        let r = s.rank();
        let gens = (r..a.cols()).map(|j| s.v.column(j)).collect();
        Self::new(a.cols(), gens)
    }

    /// Vectors fixed by a square matrix.
    pub fn fixed_by(g: &IntMatrix) -> Result<Self> {
        let n = g.rows();
        Self::kernel(&g.sub(&IntMatrix::identity(n))?)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.snf.as_ref().map_or(0, SnfDecomposition::rank)
    }

    /// A basis of the lattice (columns of `U^{-1} D` with nonzero diagonal).
    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        let Some(s) = &self.snf else {
            return Vec::new();
        };
        (0..s.rank())
            .map(|i| s.u_inv.column(i).into_iter().map(|x| x * &s.diag[i]).collect())
            .collect()
    }

    /// Integral coordinates of `v` with respect to the generators, if `v`
    /// lies in the lattice.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.ambient {
            return None;
        }
        let Some(s) = &self.snf else {
            return v.iter().all(Zero::is_zero).then(Vec::new);
        };
        let uv = s.u.mul_vec(v).ok()?;
        let r = s.rank();
        if uv[r..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut y = alloc::vec![BigInt::zero(); self.generators.len()];
        for i in 0..r {
            let (q, rem) = uv[i].div_rem(&s.diag[i]);
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        }
        s.v.mul_vec(&y).ok()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solve(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Sublattice) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Equality as subgroups (mutual containment).
    pub fn same_as(&self, other: &Sublattice) -> bool {
        self.ambient == other.ambient && self.contains_lattice(other) && other.contains_lattice(self)
    }

    /// `A · L`
    pub fn image(&self, a: &IntMatrix) -> Result<Sublattice> {
        if a.cols() != self.ambient {
            return Err(Error::DimensionMismatch("map does not act on this lattice".into()));
        }
        let gens = self.generators.iter().map(|g| a.mul_vec(g)).collect::<Result<Vec<_>>>()?;
        Sublattice::new(a.rows(), gens)
    }

    /// Lattice sum `L + M`.
    pub fn sum(&self, other: &Sublattice) -> Result<Sublattice> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Sublattice::new(self.ambient, gens)
    }

    /// Index in `Z^ambient`, `None` when the rank is not full.
    pub fn index(&self) -> Option<BigInt> {
        let s = self.snf.as_ref()?;
        (s.rank() == self.ambient).then(|| s.nonzero_diag().iter().product())
    }
}
