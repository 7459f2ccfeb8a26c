use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Float, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::round_div;

/// An LLL-reduced basis together with its exact integral Gram–Schmidt data.
///
/// With `d[0] = 1` and `d[i]` the Gram determinant of the first `i` vectors,
/// `|b*_i|^2 = d[i+1] / d[i]` and `mu[i][j] = lambda[i][j] / d[j+1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LllReduced {
    pub basis: Vec<Vec<BigInt>>,
    pub gram_dets: Vec<BigInt>,
    pub lambda: Vec<Vec<BigInt>>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `a / b` as `f64`, accurate even when both exceed the `f64` range.
pub(crate) fn ratio_to_f64(a: &BigInt, b: &BigInt) -> f64 {
    if a.is_zero() {
        return 0.0;
    }
    let shift = |x: &BigInt| (x.bits() as i64 - 60).max(0);
    let (sa, sb) = (shift(a), shift(b));
    let ma = (a >> sa as usize).to_f64().unwrap_or(f64::NAN);
    let mb = (b >> sb as usize).to_f64().unwrap_or(f64::NAN);
    let e = (sa - sb).clamp(i32::MIN as i64, i32::MAX as i64) as i32;
    libm_ldexp(ma / mb, e)
}

fn libm_ldexp(x: f64, e: i32) -> f64 {
    // Split the exponent so intermediate powers stay finite.
    let mut r = x;
    let mut e = e;
    while e > 1000 {
        r *= Float::powi(2f64, 1000);
        e -= 1000;
    }
    while e < -1000 {
        r *= Float::powi(2f64, -1000);
        e += 1000;
    }
    r * Float::powi(2f64, e)
}

impl LllReduced {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// `|b*_i|^2` in double precision.
    pub fn gs_norms_sqr(&self) -> Vec<f64> {
        (0..self.basis.len()).map(|i| ratio_to_f64(&self.gram_dets[i + 1], &self.gram_dets[i])).collect()
    }

    /// Gram–Schmidt coefficients `mu[i][j]`, `j < i`, in double precision.
    pub fn mu(&self) -> Vec<Vec<f64>> {
        (0..self.basis.len())
            .map(|i| (0..i).map(|j| ratio_to_f64(&self.lambda[i][j], &self.gram_dets[j + 1])).collect())
            .collect()
    }

    /// Determinant of the Gram matrix of the lattice.
    pub fn gram_determinant(&self) -> &BigInt {
        self.gram_dets.last().expect("d[0] always present")
    }

    /// Size reduction `|mu| <= 1/2` and the Lovász condition with `delta = 3/4`,
    /// checked exactly.
    pub fn is_reduced(&self) -> bool {
        let d = &self.gram_dets;
        for i in 0..self.basis.len() {
            for j in 0..i {
                if (&self.lambda[i][j] * 2u32).abs() > d[j + 1] {
                    return false;
                }
            }
            if i >= 1 {
                let l = &self.lambda[i][i - 1];
                // d_{i+1} d_{i-1} >= (3/4) d_i^2 - l^2
                let lhs = &d[i + 1] * &d[i - 1] * 4u32;
                let rhs = &d[i] * &d[i] * 3u32 - l * l * 4u32;
                if lhs < rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Integral LLL reduction with `delta = 3/4` (all Gram–Schmidt data kept as
/// exact integers). The rows of `basis` must be linearly independent.
pub fn lll_reduce(basis: Vec<Vec<BigInt>>) -> Result<LllReduced> {
    let n = basis.len();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let dim = basis[0].len();
    if basis.iter().any(|b| b.len() != dim) {
        return Err(Error::DimensionMismatch("basis vectors of unequal length".into()));
    }
    let mut b = basis;
    let mut d = vec![BigInt::zero(); n + 1];
    d[0] = BigInt::from(1);
    let mut lam = vec![vec![BigInt::zero(); n]; n];

    // Gram–Schmidt data for vector k from vectors 0..k (0-based; d index shifted by one).
    let incorporate = |k: usize, b: &[Vec<BigInt>], d: &mut [BigInt], lam: &mut [Vec<BigInt>]| -> Result<()> {
        for j in 0..=k {
            let mut u = dot(&b[k], &b[j]);
            for i in 0..j {
                u = (&d[i + 1] * &u - &lam[k][i] * &lam[j][i]).div_floor(&d[i]);
            }
            if j < k {
                lam[k][j] = u;
            } else {
                if u.sign() != Sign::Plus {
                    return Err(Error::InvalidInput("lattice basis is linearly dependent".into()));
                }
                d[k + 1] = u;
            }
        }
        Ok(())
    };

    incorporate(0, &b, &mut d, &mut lam)?;
    let mut k = 1;
    let mut k_max = 0;
    while k < n {
        if k > k_max {
            k_max = k;
            incorporate(k, &b, &mut d, &mut lam)?;
        }
        loop {
            reduce(k, k - 1, &mut b, &d, &mut lam);
            let l = &lam[k][k - 1];
            let lhs = &d[k + 1] * &d[k - 1] * 4u32;
            let rhs = &d[k] * &d[k] * 3u32 - l * l * 4u32;
            if lhs >= rhs {
                break;
            }
            swap(k, k_max, &mut b, &mut d, &mut lam);
            if k > 1 {
                k -= 1;
            }
        }
        for l in (0..k - 1).rev() {
            reduce(k, l, &mut b, &d, &mut lam);
        }
        k += 1;
    }
    Ok(LllReduced { basis: b, gram_dets: d, lambda: lam })
}

fn reduce(k: usize, l: usize, b: &mut [Vec<BigInt>], d: &[BigInt], lam: &mut [Vec<BigInt>]) {
    if (&lam[k][l] * 2u32).abs() <= d[l + 1] {
        return;
    }
    let q = round_div(&lam[k][l], &d[l + 1]);
    let bl = b[l].clone();
    for (x, y) in b[k].iter_mut().zip(&bl) {
        *x -= &q * y;
    }
    lam[k][l] -= &q * &d[l + 1];
    for i in 0..l {
        let t = &q * &lam[l][i];
        lam[k][i] -= t;
    }
}

fn swap(k: usize, k_max: usize, b: &mut [Vec<BigInt>], d: &mut [BigInt], lam: &mut [Vec<BigInt>]) {
    b.swap(k, k - 1);
    for j in 0..k - 1 {
        let t = lam[k][j].clone();
        lam[k][j] = core::mem::replace(&mut lam[k - 1][j], t);
    }
    let l = lam[k][k - 1].clone();
    let big_b = (&d[k - 1] * &d[k + 1] + &l * &l) / &d[k];
    for i in k + 1..=k_max {
        let t = lam[i][k].clone();
        lam[i][k] = (&d[k + 1] * &lam[i][k - 1] - &l * &t) / &d[k];
        lam[i][k - 1] = (&big_b * &t + &l * &lam[i][k]) / &d[k + 1];
    }
    d[k] = big_b;
}
