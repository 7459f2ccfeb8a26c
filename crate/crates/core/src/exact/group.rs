use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{snf, IntMatrix};
use crate::error::{Error, Result};

/// Finitely generated abelian group `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` in
/// invariant-factor form (`t_1 | t_2 | ... | t_k`, every `t_i >= 2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        if torsion.iter().any(|t| *t < BigInt::from(2)) {
            return Err(Error::InvalidInput("torsion invariants must be at least 2".into()));
        }
        if torsion.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidInput(format!(
                "torsion invariants {:?} do not form a divisibility chain",
                torsion
            )));
        }
        Ok(Self { free_rank, torsion })
    }

    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, torsion: Vec::new() }
    }

    /// `Z^free_rank ⊕ Z/o_1 ⊕ ... ⊕ Z/o_k` for arbitrary positive orders,
    /// normalized to invariant factors (orders equal to 1 are dropped).
    pub fn from_cyclic_orders(free_rank: usize, orders: &[BigInt]) -> Result<Self> {
        if orders.iter().any(|o| !o.is_positive()) {
            return Err(Error::InvalidInput("cyclic orders must be positive".into()));
        }
        if orders.is_empty() {
            return Ok(Self::free(free_rank));
        }
        let d = IntMatrix::diagonal(orders.len(), orders.len(), orders);
        let s = snf(&d);
        let torsion = s.diag.into_iter().filter(|t| !t.is_one()).collect();
        Self::new(free_rank, torsion)
    }

    /// Cokernel `Z^rows / A Z^cols` of an integer matrix.
    pub fn cokernel(a: &IntMatrix) -> Self {
        let s = snf(a);
        let r = s.rank();
        let torsion = s.nonzero_diag().iter().filter(|d| !d.is_one()).cloned().collect();
        Self { free_rank: a.rows() - r, torsion }
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Abelianizations of Kähler groups have even rank.
    pub fn has_even_rank(&self) -> bool {
        self.free_rank % 2 == 0
    }

    /// Number of generators in the standard presentation (free first).
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Order of the `i`-th standard generator, `None` for free generators.
    pub fn generator_order(&self, i: usize) -> Option<&BigInt> {
        i.checked_sub(self.free_rank).and_then(|k| self.torsion.get(k))
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl core::fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<alloc::string::String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{}", t)));
        write!(f, "{}", parts.join(" + "))
    }
}

impl Default for FgAbelianGroup {
    fn default() -> Self {
        Self::free(0)
    }
}

/// Zero when `x` is zero modulo `n` (`n > 0`).
pub(crate) fn is_zero_mod(x: &BigInt, n: &BigInt) -> bool {
    x.mod_floor(n).is_zero()
}
