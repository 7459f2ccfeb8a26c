use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// constant term first. Trailing zero coefficients are never stored, so the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        let Some(lc) = self.leading() else {
            return Self::zero();
        };
        let mut g = self.content();
        if lc.is_negative() {
            g = -g;
        }
        Self { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Pseudo-remainder with a positive multiplier: returns `r` with
    /// `|lc(d)|^k * self = q * d + r` and `deg r < deg d`. Keeping the
    /// multiplier positive preserves signs, which Sturm chains rely on.
    pub fn signed_pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by the zero polynomial");
        let b = d.leading().unwrap();
        let b_abs = b.abs();
        let b_neg = b.is_negative();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let factor = if b_neg { lr } else { -lr };
            let shift = Self::monomial(factor, dr - dd).mul(d);
            r = r.scale(&b_abs).add(&shift);
        }
        r
    }

    /// Greatest common divisor over the rationals, normalized to a primitive
    /// integer polynomial with positive leading coefficient.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = rhs.primitive_part();
        while !b.is_zero() {
            let r = a.signed_pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Exact division over the integers; `None` if `d` does not divide `self`
    /// with an integral quotient.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let b = d.leading().unwrap();
        let mut r = self.clone();
        let Some(dr) = r.degree() else {
            return Some(Self::zero());
        };
        if dr < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); dr - dd + 1];
        while let Some(k) = r.degree() {
            if k < dd {
                return None;
            }
            let (c, rem) = r.leading().unwrap().div_rem(b);
            if !rem.is_zero() {
                return None;
            }
            r = r.sub(&Self::monomial(c.clone(), k - dd).mul(d));
            q[k - dd] = c;
        }
        Some(Self::new(q))
    }

    /// `self / gcd(self, self')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .exact_div(&g)
            .map(|q| q.primitive_part())
            .expect("gcd divides its argument")
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree().is_some() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Resultant via the determinant of the Sylvester matrix.
    pub fn resultant(&self, rhs: &Self) -> BigInt {
        let (Some(m), Some(n)) = (self.degree(), rhs.degree()) else {
            return BigInt::zero();
        };
        if m == 0 && n == 0 {
            return BigInt::one();
        }
        let size = m + n;
        let mut s = IntMatrix::zeros(size, size);
        for i in 0..n {
            for (k, c) in self.coeffs.iter().rev().enumerate() {
                s[(i, i + k)] = c.clone();
            }
        }
        for i in 0..m {
            for (k, c) in rhs.coeffs.iter().rev().enumerate() {
                s[(n + i, i + k)] = c.clone();
            }
        }
        s.det().expect("Sylvester matrix is square")
    }

    /// Discriminant `(-1)^(n(n-1)/2) Res(p, p') / lc(p)`.
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        if n == 0 {
            return Err(Error::DegreeTooSmall { degree: 0, min: 1 });
        }
        if n == 1 {
            return Ok(BigInt::one());
        }
        let res = self.resultant(&self.derivative());
        let lc = self.leading().unwrap();
        let d = res / lc;
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
    }
}

/// Companion matrix of a monic polynomial: subdiagonal ones and last column
/// `-c_0, ..., -c_{n-1}`, so that `charpoly(companion(p)) = p`.
pub fn companion(p: &IntPolynomial) -> Result<IntMatrix> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::DegreeTooSmall { degree: 0, min: 1 });
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut m = IntMatrix::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = BigInt::one();
    }
    for i in 0..n {
        m[(i, n - 1)] = -p.coeff(i);
    }
    Ok(m)
}

/// Characteristic polynomial `det(xI - A)` by the Faddeev–LeVerrier
/// recurrence. Every division in the recurrence is exact over the integers.
pub fn charpoly(a: &IntMatrix) -> Result<IntPolynomial> {
    a.require_square()?;
    let n = a.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = IntMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        m = a.mul(&m)?;
        for i in 0..n {
            m[(i, i)] += &coeffs[n - k + 1];
        }
        let am = a.mul(&m)?;
        let t = am.trace()?;
        let (q, r) = t.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division is exact");
        coeffs[n - k] = -q;
    }
    Ok(IntPolynomial::new(coeffs))
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{}", mag)?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}x", if unit { "" } else { "*" })?,
                _ => write!(f, "{}x^{}", if unit { "" } else { "*" }, k)?,
            }
        }
        Ok(())
    }
}
