use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::s3::S3Element;
use crate::error::{Error, Result};
use crate::exact::FgAbelianGroup;

/// Largest accepted group order.
pub const MAX_GROUP_ORDER: usize = 10_000;
/// Tables up to this order get a full associativity check; larger ones are
/// checked on a deterministic sample of triples.
const FULL_ASSOCIATIVITY_ORDER: usize = 128;

/// Finite group given by its multiplication table (`table[a][b] = ab`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || n > MAX_GROUP_ORDER {
            return Err(Error::InvalidGroupTable(format!("order {n} outside 1..={MAX_GROUP_ORDER}")));
        }
        for row in &table {
            if row.len() != n {
                return Err(Error::InvalidGroupTable("table is not square".into()));
            }
            if !is_permutation(row.iter().copied(), n) {
                return Err(Error::InvalidGroupTable("a row is not a permutation".into()));
            }
        }
        if !(0..n).all(|j| is_permutation(table.iter().map(|r| r[j]), n)) {
            return Err(Error::InvalidGroupTable("a column is not a permutation".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroupTable("no identity element".into()))?;
        let inverses = (0..n)
            .map(|a| table[a].iter().position(|&x| x == identity).expect("row is a permutation"))
            .collect();
        let g = Self { table, identity, inverses };
        if !g.associative() {
            return Err(Error::InvalidGroupTable("multiplication is not associative".into()));
        }
        Ok(g)
    }

    fn associative(&self) -> bool {
        let n = self.order();
        let check = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if n <= FULL_ASSOCIATIVITY_ORDER {
            return (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| check(a, b, c))));
        }
        // Linear congruential walk over triples.
        let mut s: u64 = 0x9E37_79B9_7F4A_7C15;
        (0..1_000_000).all(|_| {
            let mut next = || {
                s = s.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
                ((s >> 33) % n as u64) as usize
            };
            let (a, b, c) = (next(), next(), next());
            check(a, b, c)
        })
    }

    /// `Z/n` with elements `0..n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroupTable("order must be positive".into()));
        }
        Self::from_table((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
    }

    /// `S3` with elements indexed as in [`S3Element::ALL`].
    pub fn s3() -> Self {
        let table = S3Element::ALL
            .iter()
            .map(|a| S3Element::ALL.iter().map(|&b| a.compose(b).index()).collect())
            .collect();
        Self::from_table(table).expect("S3 is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, e: &BigInt) -> usize {
        let n = self.order() as u64;
        // a^n = e, so reduce the exponent modulo the group order.
        let r = e.modpow(&BigInt::from(1), &BigInt::from(n)).to_u64().unwrap_or(0);
        let mut acc = self.identity;
        for _ in 0..r {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

fn is_permutation(it: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = alloc::vec![false; n];
    for x in it {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// The graph `{(x, h(x))}` of a homomorphism `h: A -> C`, a subgroup of
/// `A x C` of index `|C|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSubgroup {
    pub a: FgAbelianGroup,
    pub c: FiniteGroup,
    /// Images of the standard generators of `A`.
    pub h2: Vec<usize>,
    pub index: usize,
}

impl GraphSubgroup {
    /// `h(x)` for `x` in standard coordinates of `A`.
    pub fn h(&self, x: &[BigInt]) -> usize {
        self.h2.iter().zip(x).fold(self.c.identity(), |acc, (&g, e)| self.c.mul(acc, self.c.pow(g, e)))
    }

    /// Coset label of `(x, c)` in `G \ (A x C)`: `h(x)^-1 c`.
    pub fn coset_label(&self, x: &[BigInt], c: usize) -> usize {
        self.c.mul(self.c.inverse(self.h(x)), c)
    }
}

/// Builds the graph subgroup of `h2` after checking that the generator
/// images define a homomorphism, and counts its right cosets.
pub fn graph_subgroup(a: &FgAbelianGroup, c: &FiniteGroup, h2: &[usize]) -> Result<GraphSubgroup> {
    if h2.len() != a.generator_count() {
        return Err(Error::DimensionMismatch(format!(
            "{} images for {} generators",
            h2.len(),
            a.generator_count()
        )));
    }
    if let Some(&bad) = h2.iter().find(|&&g| g >= c.order()) {
        return Err(Error::InvalidInput(format!("element {bad} is not in a group of order {}", c.order())));
    }
    for (i, &x) in h2.iter().enumerate() {
        for &y in &h2[..i] {
            if c.mul(x, y) != c.mul(y, x) {
                return Err(Error::NotAHomomorphism("images of generators of an abelian group do not commute".into()));
            }
        }
        if let Some(o) = a.generator_order(i) {
            if c.pow(x, o) != c.identity() {
                return Err(Error::NotAHomomorphism(format!(
                    "generator {i} has order {o} but its image does not"
                )));
            }
        }
    }
    let g = GraphSubgroup { a: a.clone(), c: c.clone(), h2: h2.to_vec(), index: 0 };

    // Coset enumeration: the representatives (0, c) are pairwise
    // inequivalent, every (g_i, c) is equivalent to one of them, and the
    // label is invariant under left multiplication by graph generators.
    let n = a.generator_count();
    let zero = alloc::vec![BigInt::from(0); n];
    let labels: BTreeSet<usize> = (0..c.order()).map(|x| g.coset_label(&zero, x)).collect();
    for i in 0..n {
        let mut gi = zero.clone();
        gi[i] = BigInt::from(1);
        for x in 0..c.order() {
            let moved = c.mul(h2[i], x);
            if g.coset_label(&gi, moved) != g.coset_label(&zero, x) {
                return Err(Error::InvariantViolated("coset label is not constant on cosets".into()));
            }
        }
    }
    let index = labels.len();
    Ok(GraphSubgroup { index, ..g })
}
