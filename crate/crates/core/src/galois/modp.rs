//! Dense polynomials over the prime field `F_q`, `q < 2^32`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exact::IntPolynomial;

/// Deterministic primality test by trial division (fine below `2^40`).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes in increasing order starting from 2.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    q: u64,
}

type Poly = Vec<u64>;

impl Field {
    pub(crate) fn new(q: u64) -> Self {
        debug_assert!(q < (1 << 32));
        Self { q }
    }

    fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    fn inv(self, a: u64) -> u64 {
        // Fermat: a^(q-2)
        let mut base = a % self.q;
        let mut e = self.q - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn reduce(self, p: &IntPolynomial) -> Poly {
        let q = BigInt::from(self.q);
        let mut v: Poly = p
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&q).to_u64().expect("residue fits u64"))
            .collect();
        trim(&mut v);
        v
    }

    fn derivative(self, a: &Poly) -> Poly {
        let mut v: Poly = a.iter().enumerate().skip(1).map(|(i, &c)| self.mul(c, i as u64 % self.q)).collect();
        trim(&mut v);
        v
    }

    fn poly_sub(self, a: &Poly, b: &Poly) -> Poly {
        let n = a.len().max(b.len());
        let mut v: Poly = (0..n)
            .map(|i| self.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
            .collect();
        trim(&mut v);
        v
    }

    fn poly_mul(self, a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        trim(&mut out);
        out
    }

    /// Quotient and remainder; `b` must be nonzero.
    fn div_rem(self, a: &Poly, b: &Poly) -> (Poly, Poly) {
        let db = b.len() - 1;
        let inv_lc = self.inv(b[db]);
        let mut r = a.clone();
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut quo = vec![0u64; r.len() - db];
        while r.len() > db {
            let k = r.len() - 1 - db;
            let c = self.mul(*r.last().unwrap(), inv_lc);
            quo[k] = c;
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = self.sub(r[k + j], self.mul(c, bj));
            }
            trim(&mut r);
        }
        trim(&mut quo);
        (quo, r)
    }

    fn rem(self, a: &Poly, b: &Poly) -> Poly {
        self.div_rem(a, b).1
    }

    fn monic(self, a: &Poly) -> Poly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => {
                let inv = self.inv(lc);
                a.iter().map(|&c| self.mul(c, inv)).collect()
            }
        }
    }

    fn gcd(self, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `base^e mod m`
    fn pow_mod(self, base: &Poly, mut e: u64, m: &Poly) -> Poly {
        let mut acc: Poly = vec![1];
        let mut b = self.rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.poly_mul(&acc, &b), m);
            }
            b = self.rem(&self.poly_mul(&b, &b), m);
            e >>= 1;
        }
        acc
    }

    /// Squarefree over `F_q` (and of full degree: the leading coefficient
    /// must survive reduction).
    pub(crate) fn is_squarefree(self, f: &Poly) -> bool {
        let d = self.derivative(f);
        if d.is_empty() {
            return f.len() == 1;
        }
        self.gcd(f, &d).len() == 1
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, by
    /// distinct-degree factorization; sorted ascending.
    pub(crate) fn factor_degrees(self, f: &Poly) -> Vec<usize> {
        let mut f = self.monic(f);
        let mut parts = Vec::new();
        let x: Poly = vec![0, 1];
        let mut h = x.clone();
        let mut d = 1;
        while f.len() - 1 >= 2 * d {
            h = self.pow_mod(&h, self.q, &f);
            let g = self.gcd(&f, &self.poly_sub(&h, &x));
            let dg = g.len() - 1;
            if dg > 0 {
                parts.extend(core::iter::repeat(d).take(dg / d));
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
            }
            d += 1;
        }
        if f.len() > 1 {
            parts.push(f.len() - 1);
        }
        parts.sort_unstable();
        parts
    }
}

fn trim(v: &mut Poly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let ps: Vec<u64> = primes().take(10).collect();
        assert_eq!(ps, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(1) && !is_prime(91) && is_prime(104729));
    }

    #[test]
    fn exhaustive_oracle_x4_x_1_mod_2() {
        // No roots in F_2 and not divisible by x^2+x+1, the only irreducible quadratic.
        let f = |x: u64| (x.pow(4) + x + 1) % 2;
        assert!(f(0) == 1 && f(1) == 1);
        let field = Field::new(2);
        let p = field.reduce(&IntPolynomial::from_i64(&[1, 1, 0, 0, 1]));
        assert!(!field.rem(&p, &vec![1, 1, 1]).is_empty());
        assert_eq!(field.factor_degrees(&p), [4]);
    }

    #[test]
    fn x4_x_1_mod_3() {
        let field = Field::new(3);
        let p = field.reduce(&IntPolynomial::from_i64(&[1, 1, 0, 0, 1]));
        // x = 1 is a root mod 3; the cubic cofactor has no roots.
        let (cof, r) = field.div_rem(&p, &vec![2, 1]);
        assert!(r.is_empty());
        for x in 0..3u64 {
            let v = cof.iter().rev().fold(0, |acc, &c| (acc * x + c) % 3);
            assert_ne!(v, 0);
        }
        assert_eq!(field.factor_degrees(&p), [1, 3]);
    }

    #[test]
    fn squarefree_detection() {
        let field = Field::new(2);
        let p = field.reduce(&IntPolynomial::from_i64(&[1, 0, 1]));
        assert!(!field.is_squarefree(&p));
        let field5 = Field::new(5);
        let p5 = field5.reduce(&IntPolynomial::from_i64(&[1, 0, 1]));
        assert!(field5.is_squarefree(&p5));
        assert_eq!(field5.factor_degrees(&p5), [1, 1]);
    }
}
