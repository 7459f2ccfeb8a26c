use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Float, ToPrimitive, Zero};

use super::lll::LllReduced;

/// Lattice vectors of squared norm at most a bound, one per `{v, -v}` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortVectors {
    /// Coefficients with respect to the reduced basis.
    pub coefficients: Vec<Vec<i64>>,
    pub vectors: Vec<Vec<BigInt>>,
    pub nodes_visited: u64,
    /// False when the node or result budget ran out before the search tree
    /// was exhausted.
    pub complete: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_nodes: u64,
    pub max_vectors: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self { max_nodes: 20_000_000, max_vectors: 100_000 }
    }
}

struct Search<'a> {
    basis: &'a [Vec<BigInt>],
    b: Vec<f64>,
    mu: Vec<Vec<f64>>,
    r2: f64,
    r2_exact: &'a BigInt,
    x: Vec<i64>,
    limits: EnumerationLimits,
    out: ShortVectors,
}

// Relative slack on floating-point pruning; every accepted vector is
// re-checked exactly.
const SLACK: f64 = 1e-6;

impl Search<'_> {
    fn visit(&mut self, level: usize, partial: f64) -> bool {
        let n = self.x.len();
        let c: f64 = -(level + 1..n).map(|j| self.mu[j][level] * self.x[j] as f64).sum::<f64>();
        let remaining = self.r2 * (1.0 + SLACK) - partial;
        if remaining < 0.0 {
            return true;
        }
        let half = Float::sqrt(remaining / self.b[level]) * (1.0 + SLACK);
        let mut lo = Float::ceil(c - half);
        let hi = Float::floor(c + half);
        let upper_zero = self.x[level + 1..].iter().all(|&v| v == 0);
        if upper_zero {
            lo = lo.max(0.0);
        }
        if !(lo.is_finite() && hi.is_finite()) || hi - lo > 1e12 {
            self.out.complete = false;
            return false;
        }
        let mut xi = lo as i64;
        while xi as f64 <= hi {
            self.out.nodes_visited += 1;
            if self.out.nodes_visited > self.limits.max_nodes {
                self.out.complete = false;
                return false;
            }
            self.x[level] = xi;
            let dev = xi as f64 - c;
            let p = partial + dev * dev * self.b[level];
            if p <= self.r2 * (1.0 + SLACK) {
                if level == 0 {
                    if !self.accept() {
                        return false;
                    }
                } else if !self.visit(level - 1, p) {
                    return false;
                }
            }
            xi += 1;
        }
        self.x[level] = 0;
        true
    }

    fn accept(&mut self) -> bool {
        if self.x.iter().all(|&v| v == 0) {
            return true;
        }
        let dim = self.basis[0].len();
        let mut v = vec![BigInt::zero(); dim];
        for (coef, row) in self.x.iter().zip(self.basis) {
            if *coef != 0 {
                let c = BigInt::from(*coef);
                for (a, b) in v.iter_mut().zip(row) {
                    *a += &c * b;
                }
            }
        }
        let norm: BigInt = v.iter().map(|a| a * a).sum();
        if norm <= *self.r2_exact {
            if self.out.vectors.len() == self.limits.max_vectors {
                self.out.complete = false;
                return false;
            }
            self.out.coefficients.push(self.x.clone());
            self.out.vectors.push(v);
        }
        true
    }
}

/// Fincke–Pohst enumeration of all nonzero lattice vectors with squared norm
/// at most `radius_sqr`, reported up to sign (the last nonzero coefficient is
/// positive).
pub fn short_vectors(reduced: &LllReduced, radius_sqr: &BigInt, limits: EnumerationLimits) -> ShortVectors {
    let n = reduced.dimension();
    let r2 = radius_sqr.to_f64().unwrap_or(f64::INFINITY);
    let mut search = Search {
        basis: &reduced.basis,
        b: reduced.gs_norms_sqr(),
        mu: reduced.mu(),
        r2,
        r2_exact: radius_sqr,
        x: vec![0; n],
        limits,
        out: ShortVectors { coefficients: Vec::new(), vectors: Vec::new(), nodes_visited: 0, complete: true },
    };
    if n > 0 && r2 >= 0.0 {
        search.visit(n - 1, 0.0);
    }
    search.out
}

#[cfg(test)]
mod tests {
    use super::super::lll_reduce;
    use super::*;

    fn rows(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn z2_points_in_disc() {
        let r = lll_reduce(rows(&[&[1, 0], &[0, 1]])).unwrap();
        let s = short_vectors(&r, &BigInt::from(2), EnumerationLimits::default());
        // (1,0), (0,1), (1,1), (1,-1) up to sign
        assert_eq!(s.vectors.len(), 4);
        assert!(s.complete);
    }

    #[test]
    fn matches_brute_force_on_skewed_basis() {
        let r = lll_reduce(rows(&[&[3, 1, 0], &[7, 2, 1], &[1, 5, 11]])).unwrap();
        let bound = BigInt::from(30);
        let s = short_vectors(&r, &bound, EnumerationLimits::default());
        // Brute force over a box of coefficients of the original basis.
        let orig = rows(&[&[3, 1, 0], &[7, 2, 1], &[1, 5, 11]]);
        let mut count = 0;
        for a in -40i64..=40 {
            for b in -40i64..=40 {
                for c in -40i64..=40 {
                    let v: Vec<BigInt> = (0..3)
                        .map(|k| &orig[0][k] * a + &orig[1][k] * b + &orig[2][k] * c)
                        .collect();
                    let nn: BigInt = v.iter().map(|t| t * t).sum();
                    if nn <= bound && !nn.is_zero() {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(2 * s.vectors.len(), count);
    }

    #[test]
    fn node_budget_truncates() {
        let r = lll_reduce(rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        let s = short_vectors(&r, &BigInt::from(10_000), EnumerationLimits { max_nodes: 100, max_vectors: 10 });
        assert!(!s.complete);
    }
}
