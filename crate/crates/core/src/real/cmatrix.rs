use alloc::vec::Vec;

use super::{Complex, Real};
use crate::error::{Error, Result};
use crate::exact::IntMatrix;

/// Dense complex matrix at a fixed working precision.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize, prec: u32) -> Self {
        Self { rows, cols, data: alloc::vec![Complex::zero(prec); rows * cols] }
    }

    pub fn identity(n: usize, prec: u32) -> Self {
        let mut m = Self::zeros(n, n, prec);
        for i in 0..n {
            m[(i, i)] = Complex::one(prec);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged complex rows".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_int(m: &IntMatrix, prec: u32) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data: m.entries().iter().map(|x| Complex::from_int(x, prec)).collect(),
        }
    }

    pub fn diagonal(d: &[Complex]) -> Self {
        let n = d.len();
        let prec = d.first().map_or(64, Complex::precision);
        let mut m = Self::zeros(n, n, prec);
        for (i, z) in d.iter().enumerate() {
            m[(i, i)] = z.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Complex] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Complex> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Complex>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn conj(&self) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(Complex::conj).collect() }
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.with_precision(prec)).collect(),
        }
    }

    pub fn mul(&self, rhs: &CMatrix) -> Result<CMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch("complex matrix product".into()));
        }
        let prec = self.precision().max(rhs.precision());
        let mut out = Self::zeros(self.rows, rhs.cols, prec);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Complex::zero(prec);
                for k in 0..self.cols {
                    acc = &acc + &(&self[(i, k)] * &rhs[(k, j)]);
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &CMatrix) -> Result<CMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("complex matrix difference".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn add(&self, rhs: &CMatrix) -> Result<CMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("complex matrix sum".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    /// `[self; rhs]`
    pub fn vstack(&self, rhs: &CMatrix) -> Result<CMatrix> {
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("complex vstack".into()));
        }
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Ok(Self { rows: self.rows + rhs.rows, cols: self.cols, data })
    }

    pub fn precision(&self) -> u32 {
        self.data.iter().map(Complex::precision).max().unwrap_or(64)
    }

    /// Induced infinity norm (maximum absolute row sum).
    pub fn norm_inf(&self) -> Real {
        let prec = self.precision();
        (0..self.rows)
            .map(|i| self.row(i).iter().fold(Real::zero(prec), |acc, z| acc + z.abs()))
            .fold(Real::zero(prec), Real::max)
    }

    /// Largest absolute imaginary part of any entry.
    pub fn max_abs_imag(&self) -> Real {
        let prec = self.precision();
        self.data.iter().fold(Real::zero(prec), |acc, z| acc.max(z.im.abs()))
    }

    /// Inverse by Gaussian elimination with partial pivoting.
    pub fn inverse(&self) -> Result<CMatrix> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let prec = self.precision();
        let mut a = self.to_rows();
        let mut inv = CMatrix::identity(n, prec).to_rows();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| {
                    a[x][k].norm_sqr().partial_cmp(&a[y][k].norm_sqr()).unwrap_or(core::cmp::Ordering::Equal)
                })
                .expect("nonempty pivot range");
            if a[p][k].is_zero() {
                return Err(Error::PrecisionInsufficient { condition_bits: i64::MAX, precision_bits: prec });
            }
            a.swap(k, p);
            inv.swap(k, p);
            let piv = a[k][k].inv();
            for j in 0..n {
                a[k][j] = &a[k][j] * &piv;
                inv[k][j] = &inv[k][j] * &piv;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..n {
                    let t = &f * &a[k][j];
                    a[i][j] = &a[i][j] - &t;
                    let t = &f * &inv[k][j];
                    inv[i][j] = &inv[i][j] - &t;
                }
            }
        }
        CMatrix::from_rows(inv)
    }
}

impl core::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex;
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_rotation() {
        let p = 128;
        let m = CMatrix::from_int(&IntMatrix::from_i64(&[&[0, -1], &[1, 0]]).unwrap(), p);
        let inv = m.inverse().unwrap();
        let prod = m.mul(&inv).unwrap();
        let err = prod.sub(&CMatrix::identity(2, p)).unwrap().norm_inf();
        assert!(err < Real::pow2(-120, p));
        assert!(m.norm_inf().to_f64() == 1.0);
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let m = CMatrix::from_int(&IntMatrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap(), 64);
        assert!(m.inverse().is_err());
    }
}
