//! Smith normal form with unimodular transforms.
//!
//! For an `m x n` integer matrix `A` we compute unimodular `U` (`m x m`) and
//! `V` (`n x n`) with `U A V = D`, where `D` is diagonal with nonnegative
//! entries `d_1 | d_2 | ... | d_k` followed by zeros. The inverses of `U` and
//! `V` are tracked alongside, so `A = U^{-1} D V^{-1}` is available without a
//! separate inversion.
//!
//! Pivots are chosen by minimal absolute value and eliminated with
//! nearest-integer quotients, which keeps intermediate entries small.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    /// Diagonal entries `d_1, ..., d_min(m,n)`, nonzero ones first.
    pub diag: Vec<BigInt>,
}

impl SnfDecomposition {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }

    pub fn nonzero_diag(&self) -> &[BigInt] {
        &self.diag[..self.rank()]
    }

    /// Re-multiplies `U A V` and compares with `D`, and checks the chain and
    /// the recorded inverses.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        let Ok(uav) = self.u.mul(a).and_then(|ua| ua.mul(&self.v)) else {
            return false;
        };
        let diag_ok = self.diag.iter().all(|d| !d.is_negative())
            && self.diag.windows(2).all(|w| {
                if w[1].is_zero() {
                    true
                } else {
                    !w[0].is_zero() && w[1].is_multiple_of(&w[0])
                }
            });
        let inv_ok = self.u.mul(&self.u_inv).ok() == Some(IntMatrix::identity(a.rows()))
            && self.v.mul(&self.v_inv).ok() == Some(IntMatrix::identity(a.cols()));
        uav == self.d && diag_ok && inv_ok
    }
}

struct Work {
    d: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    u_inv: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    v_inv: Vec<Vec<BigInt>>,
}

impl Work {
    /// row_i += q * row_j on D and U; inverse update on U^{-1}.
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for m in [&mut self.d, &mut self.u] {
            let rj = m[j].clone();
            for (a, b) in m[i].iter_mut().zip(rj) {
                *a += q * b;
            }
        }
        // U^{-1}: col_j -= q * col_i
        for row in self.u_inv.iter_mut() {
            let t = q * &row[i];
            row[j] -= t;
        }
    }

    /// col_i += q * col_j on D and V; inverse update on V^{-1}.
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for m in [&mut self.d, &mut self.v] {
            for row in m.iter_mut() {
                let t = q * &row[j];
                row[i] += t;
            }
        }
        // V^{-1}: row_j -= q * row_i
        let ri = self.v_inv[i].clone();
        for (a, b) in self.v_inv[j].iter_mut().zip(ri) {
            *a -= q * b;
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.d.swap(i, j);
        self.u.swap(i, j);
        for row in self.u_inv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for m in [&mut self.d, &mut self.v] {
            for row in m.iter_mut() {
                row.swap(i, j);
            }
        }
        self.v_inv.swap(i, j);
    }

    fn negate_col(&mut self, i: usize) {
        for m in [&mut self.d, &mut self.v] {
            for row in m.iter_mut() {
                row[i] = -core::mem::take(&mut row[i]);
            }
        }
        for a in self.v_inv[i].iter_mut() {
            *a = -core::mem::take(a);
        }
    }
}

/// Nearest-integer quotient `round(a / b)`.
pub(crate) fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    // a/b = q + r/b with r/b in [0, 1)
    if (&r * 2u32).abs() > b.abs() {
        q + 1u32
    } else {
        q
    }
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn to_matrix(rows: Vec<Vec<BigInt>>) -> IntMatrix {
    IntMatrix::from_rows(rows).expect("nonempty rectangular work matrix")
}

/// Smith normal form of `a`. Total on every (nonempty) matrix, including zero
/// and non-square ones.
pub fn snf(a: &IntMatrix) -> SnfDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        d: a.to_rows(),
        u: identity_rows(m),
        u_inv: identity_rows(m),
        v: identity_rows(n),
        v_inv: identity_rows(n),
    };

    for t in 0..m.min(n) {
        loop {
            // Minimal nonzero |entry| in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let e = &w.d[i][j];
                    if e.is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| e.abs() < w.d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if !w.d[i][t].is_zero() {
                    let q = round_div(&w.d[i][t], &w.d[t][t]);
                    w.add_row(i, t, &-q);
                    clean &= w.d[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !w.d[t][j].is_zero() {
                    let q = round_div(&w.d[t][j], &w.d[t][t]);
                    w.add_col(j, t, &-q);
                    clean &= w.d[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // Row and column are clear; enforce divisibility of the block.
            let p = w.d[t][t].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.d[i][j].is_multiple_of(&p)));
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.d[t][t].is_negative() {
            w.negate_col(t);
        }
    }

    let diag = (0..m.min(n)).map(|i| w.d[i][i].clone()).collect();
    SnfDecomposition {
        u: to_matrix(w.u),
        d: to_matrix(w.d),
        v: to_matrix(w.v),
        u_inv: to_matrix(w.u_inv),
        v_inv: to_matrix(w.v_inv),
        diag,
    }
}

/// Rank over the integers (equivalently over the rationals).
pub fn rank(a: &IntMatrix) -> usize {
    snf(a).rank()
}
