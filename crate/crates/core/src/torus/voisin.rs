use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::IntPolynomial;
use crate::galois::{
    certify_irreducible, certify_symmetric_group, Certification, IrreducibilityCertificate, SnCertificate,
};
use crate::roots::count_real_roots;

/// Certificate that the torus of `poly` is not an abelian variety: `poly`
/// is irreducible, has no real roots, and its Galois group is `S_2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoisinCertificate {
    pub poly: IntPolynomial,
    pub irreducibility: IrreducibilityCertificate,
    pub real_root_count: usize,
    pub galois: SnCertificate,
    /// Torus dimension, half the degree.
    pub n: usize,
}

impl VoisinCertificate {
    /// Re-derives every ingredient from the polynomial.
    pub fn verify(&self) -> bool {
        let deg = self.poly.degree().unwrap_or(0);
        deg == 2 * self.n
            && self.n >= 2
            && self.real_root_count == 0
            && count_real_roots(&self.poly).ok() == Some(0)
            && self.galois.degree == deg
            && self.irreducibility.verify(&self.poly)
            && self.galois.verify(&self.poly)
    }
}

/// Why the hypotheses definitively fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VoisinFailure {
    OddDegree(usize),
    DegreeTooSmall(usize),
    RealRoots(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VoisinStage {
    Irreducibility,
    Galois,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VoisinOutcome {
    Certified(VoisinCertificate),
    Inconclusive { stage: VoisinStage, primes_scanned: usize },
    Fails(VoisinFailure),
}

impl VoisinOutcome {
    pub fn certificate(&self) -> Option<&VoisinCertificate> {
        match self {
            VoisinOutcome::Certified(c) => Some(c),
            _ => None,
        }
    }
}

/// Checks the non-projectivity hypotheses for a monic polynomial of degree
/// `2n`, `n >= 2`. Never inspects an eigenvalue selection.
pub fn voisin_check(p: &IntPolynomial, prime_budget: usize) -> Result<VoisinOutcome> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if deg % 2 == 1 {
        return Ok(VoisinOutcome::Fails(VoisinFailure::OddDegree(deg)));
    }
    if deg < 4 {
        return Ok(VoisinOutcome::Fails(VoisinFailure::DegreeTooSmall(deg)));
    }
    let real = count_real_roots(p)?;
    if real > 0 {
        return Ok(VoisinOutcome::Fails(VoisinFailure::RealRoots(real)));
    }
    let irreducibility = match certify_irreducible(p, prime_budget)? {
        Certification::Certified(c) => c,
        Certification::Inconclusive { primes_scanned } => {
            return Ok(VoisinOutcome::Inconclusive { stage: VoisinStage::Irreducibility, primes_scanned })
        }
    };
    let galois = match certify_symmetric_group(p, prime_budget)? {
        Certification::Certified(c) => c,
        Certification::Inconclusive { primes_scanned } => {
            return Ok(VoisinOutcome::Inconclusive { stage: VoisinStage::Galois, primes_scanned })
        }
    };
    Ok(VoisinOutcome::Certified(VoisinCertificate {
        poly: p.clone(),
        irreducibility,
        real_root_count: 0,
        galois,
        n: deg / 2,
    }))
}

/// The monic degree-`2n` polynomial drawn at `try_index`: ChaCha8 seeded
/// with `seed` on stream `try_index`, coefficients uniform in `[-bound, bound]`
/// from the constant term upward.
pub fn sample_polynomial(n: usize, coeff_bound: u64, seed: u64, try_index: u64) -> IntPolynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(try_index);
    let b = coeff_bound.min(i64::MAX as u64) as i64;
    let mut coeffs: Vec<BigInt> = (0..2 * n).map(|_| BigInt::from(rng.gen_range(-b..=b))).collect();
    coeffs.push(BigInt::from(1));
    IntPolynomial::new(coeffs)
}

/// Sampled polynomials for tries `0..max_tries`, keeping only the first try
/// at which each distinct polynomial appears.
pub fn distinct_candidates(n: usize, coeff_bound: u64, seed: u64, max_tries: u64) -> Vec<(u64, IntPolynomial)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for t in 0..max_tries {
        let p = sample_polynomial(n, coeff_bound, seed, t);
        if seen.insert(p.coeffs().to_vec()) {
            out.push((t, p));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub try_index: u64,
    pub certificate: VoisinCertificate,
}

/// Randomized search for polynomials satisfying the non-projectivity
/// hypotheses; returns the certified hits ordered by try index.
pub fn search_voisin_polynomial(
    n: usize,
    coeff_bound: u64,
    seed: u64,
    max_tries: u64,
    prime_budget: usize,
) -> Vec<SearchHit> {
    distinct_candidates(n, coeff_bound, seed, max_tries)
        .into_iter()
        .filter_map(|(try_index, p)| {
            let outcome = voisin_check(&p, prime_budget).ok()?;
            match outcome {
                VoisinOutcome::Certified(certificate) => Some(SearchHit { try_index, certificate }),
                _ => None,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn x4_x_1_is_certified() {
        let out = voisin_check(&p(&[1, 1, 0, 0, 1]), 500).unwrap();
        let c = out.certificate().unwrap();
        assert_eq!(c.n, 2);
        assert!(c.verify());
    }

    #[test]
    fn failures_and_inconclusive() {
        assert_eq!(
            voisin_check(&p(&[-1, 0, 0, 0, 1]), 100).unwrap(),
            VoisinOutcome::Fails(VoisinFailure::RealRoots(2))
        );
        assert_eq!(voisin_check(&p(&[1, 0, 1]), 100).unwrap(), VoisinOutcome::Fails(VoisinFailure::DegreeTooSmall(2)));
        assert_eq!(voisin_check(&p(&[1, 1, 0, 1]), 100).unwrap(), VoisinOutcome::Fails(VoisinFailure::OddDegree(3)));
        assert!(matches!(
            voisin_check(&p(&[1, 0, 0, 0, 1]), 1000).unwrap(),
            VoisinOutcome::Inconclusive { .. }
        ));
        assert_eq!(voisin_check(&p(&[1, 0, 0, 0, 2]), 10), Err(Error::NotMonic));
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_polynomial(2, 3, 7, 11), sample_polynomial(2, 3, 7, 11));
        assert_ne!(sample_polynomial(2, 3, 7, 11), sample_polynomial(2, 3, 7, 12));
        assert_eq!(sample_polynomial(2, 0, 1, 0), p(&[0, 0, 0, 0, 1]));
        assert!(search_voisin_polynomial(2, 0, 1, 50, 100).is_empty());
    }
}
