use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::IntPolynomial;

/// Sturm chain `p_0 = p`, `p_1 = p'`, `p_{i+1} = -rem(p_{i-1}, p_i)`.
///
/// Elements are stored as primitive integer polynomials; each differs from
/// the rational Sturm polynomial by a positive factor, so sign sequences are
/// unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    pub polynomials: Vec<IntPolynomial>,
}

/// Removes the content with a positive divisor (never flips signs).
fn positive_primitive(p: &IntPolynomial) -> IntPolynomial {
    let c = p.content();
    if c.is_zero() {
        return p.clone();
    }
    IntPolynomial::new(p.coeffs().iter().map(|a| a / &c).collect())
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = alloc::vec![positive_primitive(p)];
        let d = p.derivative();
        if !d.is_zero() {
            polys.push(positive_primitive(&d));
        }
        while polys.len() >= 2 {
            let a = &polys[polys.len() - 2];
            let b = &polys[polys.len() - 1];
            let r = a.signed_pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            polys.push(positive_primitive(&r.neg()));
        }
        Ok(Self { polynomials: polys })
    }

    pub fn len(&self) -> usize {
        self.polynomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polynomials.is_empty()
    }

    /// Last element: `gcd(p, p')` up to a constant factor.
    pub fn last(&self) -> &IntPolynomial {
        self.polynomials.last().expect("chain is never empty")
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for s in signs.filter(|&s| s != 0) {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    fn sign(x: &BigInt) -> i8 {
        if x.is_positive() {
            1
        } else if x.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.polynomials.iter().map(|q| Self::sign(q.leading().unwrap())))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.polynomials.iter().map(|q| {
            let s = Self::sign(q.leading().unwrap());
            if q.degree().unwrap() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Sign variations at an integer point.
    pub fn variations_at(&self, x: &BigInt) -> usize {
        Self::variations(self.polynomials.iter().map(|q| Self::sign(&q.eval(x))))
    }

    /// Distinct real roots of the chain's first polynomial.
    pub fn real_root_count(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Exact number of distinct real roots of a nonzero integer polynomial.
pub fn count_real_roots(p: &IntPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sqf = p.squarefree_part();
    if sqf.degree() == Some(0) {
        return Ok(0);
    }
    Ok(SturmChain::new(&sqf)?.real_root_count())
}
