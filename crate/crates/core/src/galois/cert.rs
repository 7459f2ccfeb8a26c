use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::modp::{is_prime, primes, Field};
use crate::error::{Error, Result};
use crate::exact::IntPolynomial;

/// Factor-degree pattern of `p mod prime`, equal to the cycle type of a
/// Frobenius element when the reduction is squarefree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    pub prime: u64,
    /// Sorted ascending; sums to the degree.
    pub parts: Vec<usize>,
}

impl CycleType {
    pub fn is_n_cycle(&self, n: usize) -> bool {
        self.parts == [n]
    }

    pub fn is_fixed_point_times_cycle(&self, n: usize) -> bool {
        n >= 2 && self.parts == [1, n - 1]
    }

    /// Exactly one even part, equal to 2, all others odd: some power of the
    /// Frobenius element is then a transposition.
    pub fn yields_transposition(&self) -> bool {
        let mut even = self.parts.iter().filter(|&&k| k % 2 == 0);
        matches!((even.next(), even.next()), (Some(2), None))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    Unramified(CycleType),
    /// `p mod prime` is not squarefree.
    Ramified,
}

/// Outcome of a bounded certificate search. `Inconclusive` never asserts the
/// negation of the property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certification<T> {
    Certified(T),
    Inconclusive { primes_scanned: usize },
}

impl<T> Certification<T> {
    pub fn certified(self) -> Option<T> {
        match self {
            Certification::Certified(c) => Some(c),
            Certification::Inconclusive { .. } => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified(_))
    }
}

fn require_monic(p: &IntPolynomial) -> Result<usize> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if n == 0 {
        return Err(Error::DegreeTooSmall { degree: 0, min: 1 });
    }
    Ok(n)
}

/// Factor degrees of a monic integer polynomial modulo a prime `q < 2^32`.
pub fn cycle_type_mod_p(p: &IntPolynomial, q: u64) -> Result<Reduction> {
    if !is_prime(q) || q >= 1 << 32 {
        return Err(Error::NotPrime(q));
    }
    require_monic(p)?;
    Ok(reduce_unchecked(p, q))
}

fn reduce_unchecked(p: &IntPolynomial, q: u64) -> Reduction {
    let field = Field::new(q);
    let f = field.reduce(p);
    if !field.is_squarefree(&f) {
        return Reduction::Ramified;
    }
    Reduction::Unramified(CycleType { prime: q, parts: field.factor_degrees(&f) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IrreducibilityKind {
    /// Degree one.
    Linear,
    /// Irreducible modulo a single prime.
    SinglePrime,
    /// The factor-degree subset sums achievable modulo every witness prime
    /// intersect to `{0, n}`.
    DegreeSieve,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityCertificate {
    pub kind: IrreducibilityKind,
    pub degree: usize,
    pub witnesses: Vec<CycleType>,
}

fn subset_sums(parts: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &k in parts {
        for s in (k..=n).rev() {
            if reach[s - k] {
                reach[s] = true;
            }
        }
    }
    reach
}

fn only_trivial_sums(reach: &[bool]) -> bool {
    let n = reach.len() - 1;
    reach.iter().enumerate().all(|(s, &r)| r == (s == 0 || s == n))
}

impl IrreducibilityCertificate {
    /// Recomputes every witness from scratch and checks the inference.
    pub fn verify(&self, p: &IntPolynomial) -> bool {
        let Ok(n) = require_monic(p) else {
            return false;
        };
        if n != self.degree || !self.witnesses_match(p) {
            return false;
        }
        match self.kind {
            IrreducibilityKind::Linear => n == 1,
            IrreducibilityKind::SinglePrime => {
                self.witnesses.len() == 1 && self.witnesses[0].is_n_cycle(n)
            }
            IrreducibilityKind::DegreeSieve => {
                let mut acc = vec![true; n + 1];
                for w in &self.witnesses {
                    let s = subset_sums(&w.parts, n);
                    for (a, b) in acc.iter_mut().zip(s) {
                        *a &= b;
                    }
                }
                !self.witnesses.is_empty() && only_trivial_sums(&acc)
            }
        }
    }

    fn witnesses_match(&self, p: &IntPolynomial) -> bool {
        self.witnesses.iter().all(|w| {
            matches!(cycle_type_mod_p(p, w.prime), Ok(Reduction::Unramified(c)) if c == *w)
        })
    }
}

/// Proves irreducibility over the rationals from reductions modulo the first
/// `prime_budget` primes, or reports "inconclusive". Never claims
/// reducibility.
pub fn certify_irreducible(
    p: &IntPolynomial,
    prime_budget: usize,
) -> Result<Certification<IrreducibilityCertificate>> {
    let n = require_monic(p)?;
    if n == 1 {
        return Ok(Certification::Certified(IrreducibilityCertificate {
            kind: IrreducibilityKind::Linear,
            degree: 1,
            witnesses: Vec::new(),
        }));
    }
    let mut sieve = vec![true; n + 1];
    let mut sieve_witnesses = Vec::new();
    for q in primes().take(prime_budget) {
        let Reduction::Unramified(ct) = reduce_unchecked(p, q) else {
            continue;
        };
        if ct.is_n_cycle(n) {
            return Ok(Certification::Certified(IrreducibilityCertificate {
                kind: IrreducibilityKind::SinglePrime,
                degree: n,
                witnesses: vec![ct],
            }));
        }
        let sums = subset_sums(&ct.parts, n);
        let next: Vec<bool> = sieve.iter().zip(&sums).map(|(a, b)| *a && *b).collect();
        if next != sieve {
            sieve = next;
            sieve_witnesses.push(ct);
            if only_trivial_sums(&sieve) {
                return Ok(Certification::Certified(IrreducibilityCertificate {
                    kind: IrreducibilityKind::DegreeSieve,
                    degree: n,
                    witnesses: sieve_witnesses,
                }));
            }
        }
    }
    Ok(Certification::Inconclusive { primes_scanned: prime_budget })
}

/// Witnesses that the Galois group of a monic polynomial of degree `n` is
/// the full symmetric group.
///
/// - `n >= 4`: an `n`-cycle (transitive), a `(1, n-1)` pattern (doubly
///   transitive, hence primitive) and a pattern with a single even part 2
///   (a transposition); Jordan's theorem gives `S_n`.
/// - `n = 3`: an irreducible reduction and a non-square discriminant.
/// - `n = 2`: an inert prime; its 2-cycle is also the transposition.
/// - `n = 1`: trivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnCertificate {
    pub degree: usize,
    pub n_cycle: CycleType,
    pub n_minus_one_cycle: Option<CycleType>,
    pub transposition: Option<CycleType>,
    /// Non-square discriminant, used only for cubics.
    pub discriminant: Option<BigInt>,
}

fn is_perfect_square(d: &BigInt) -> bool {
    if d.is_negative() {
        return false;
    }
    let r = d.sqrt();
    &r * &r == *d
}

impl SnCertificate {
    /// Recomputes the witnesses and re-checks the group-theoretic inference.
    pub fn verify(&self, p: &IntPolynomial) -> bool {
        let Ok(n) = require_monic(p) else {
            return false;
        };
        let matches = |w: &CycleType| {
            matches!(cycle_type_mod_p(p, w.prime), Ok(Reduction::Unramified(c)) if c == *w)
        };
        if n != self.degree || !matches(&self.n_cycle) || !self.n_cycle.is_n_cycle(n) {
            return false;
        }
        match n {
            1 | 2 => true,
            3 => match (&self.discriminant, p.discriminant()) {
                (Some(d), Ok(actual)) => *d == actual && !is_perfect_square(d),
                _ => false,
            },
            _ => match (&self.n_minus_one_cycle, &self.transposition) {
                (Some(a), Some(t)) => {
                    matches(a) && a.is_fixed_point_times_cycle(n) && matches(t) && t.yields_transposition()
                }
                _ => false,
            },
        }
    }

    /// All witnesses in role order: `n`-cycle, `(1, n-1)`, transposition.
    pub fn witnesses(&self) -> Vec<&CycleType> {
        let mut out = vec![&self.n_cycle];
        out.extend(self.n_minus_one_cycle.as_ref());
        if self.degree != 2 {
            out.extend(self.transposition.as_ref());
        }
        out
    }
}

/// Scans primes in increasing order, skipping ramified ones, and returns the
/// symmetric-group certificate built from the smallest witness prime for each
/// role, or "inconclusive" after `prime_budget` primes.
pub fn certify_symmetric_group(p: &IntPolynomial, prime_budget: usize) -> Result<Certification<SnCertificate>> {
    let n = require_monic(p)?;
    let mut n_cycle: Option<CycleType> = None;
    let mut n_minus_one: Option<CycleType> = None;
    let mut transposition: Option<CycleType> = None;
    let discriminant = if n == 3 { Some(p.discriminant()?) } else { None };
    if discriminant.as_ref().is_some_and(|d| d.is_zero() || is_perfect_square(d)) {
        return Ok(Certification::Inconclusive { primes_scanned: 0 });
    }

    let done = |a: &Option<CycleType>, b: &Option<CycleType>, c: &Option<CycleType>| match n {
        1..=3 => a.is_some(),
        _ => a.is_some() && b.is_some() && c.is_some(),
    };
    for q in primes().take(prime_budget) {
        let Reduction::Unramified(ct) = reduce_unchecked(p, q) else {
            continue;
        };
        if n_cycle.is_none() && ct.is_n_cycle(n) {
            n_cycle = Some(ct.clone());
        }
        if n >= 4 {
            if n_minus_one.is_none() && ct.is_fixed_point_times_cycle(n) {
                n_minus_one = Some(ct.clone());
            }
            if transposition.is_none() && ct.yields_transposition() {
                transposition = Some(ct);
            }
        }
        if done(&n_cycle, &n_minus_one, &transposition) {
            let n_cycle = n_cycle.expect("checked");
            let transposition = if n == 2 { Some(n_cycle.clone()) } else { transposition };
            return Ok(Certification::Certified(SnCertificate {
                degree: n,
                n_cycle,
                n_minus_one_cycle: n_minus_one,
                transposition,
                discriminant,
            }));
        }
    }
    Ok(Certification::Inconclusive { primes_scanned: prime_budget })
}
