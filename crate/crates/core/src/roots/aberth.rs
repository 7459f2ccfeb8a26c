//! Simultaneous root finding by Aberth–Ehrlich iteration.
//!
//! A double-precision pass from points on the Cauchy circle provides seeds;
//! the same iteration then continues at the requested precision plus guard
//! bits until the corrections fall below the working epsilon.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{Float, Signed, ToPrimitive};

use super::sturm::count_real_roots;
use crate::error::{Error, Result};
use crate::exact::IntPolynomial;
use crate::real::{Complex, Real};

const GUARD_BITS: u32 = 64;
const F64_ITERATIONS: usize = 500;
const BIG_ITERATIONS: usize = 400;

/// Roots of a squarefree integer polynomial at a stated precision.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<Complex>,
    /// `max |p(root)|`, recomputed from the exact coefficients.
    pub residual_bound: Real,
    /// Conjugate pairs `(i, j)` with `Im roots[i] > 0`; populated only when
    /// the polynomial has no real roots.
    pub pairing: Vec<(usize, usize)>,
    /// Exact number of distinct real roots (Sturm).
    pub real_root_count: usize,
    pub precision_bits: u32,
}

impl RootSet {
    /// Smallest distance between two distinct roots (`None` for degree 1).
    pub fn min_separation(&self) -> Option<Real> {
        let mut best: Option<Real> = None;
        for i in 0..self.roots.len() {
            for j in i + 1..self.roots.len() {
                let d = (&self.roots[i] - &self.roots[j]).abs();
                best = Some(match best {
                    Some(b) if b < d => b,
                    _ => d,
                });
            }
        }
        best
    }

    /// Number of roots whose imaginary part is below a quarter of the root
    /// separation. Diagnostic only; realness is decided by the Sturm count.
    pub fn numeric_real_count(&self) -> usize {
        let Some(sep) = self.min_separation() else {
            return self.roots.iter().filter(|z| z.im.is_zero() || z.im.abs().to_f64() < 1e-30).count();
        };
        let threshold = sep / Real::from_i64(4, self.precision_bits);
        self.roots.iter().filter(|z| z.im.abs() < threshold).count()
    }
}

fn horner_f64(coeffs: &[f64], z: (f64, f64)) -> ((f64, f64), (f64, f64)) {
    let (mut p, mut dp) = ((0.0, 0.0), (0.0, 0.0));
    for &c in coeffs.iter().rev() {
        dp = (dp.0 * z.0 - dp.1 * z.1 + p.0, dp.0 * z.1 + dp.1 * z.0 + p.1);
        p = (p.0 * z.0 - p.1 * z.1 + c, p.0 * z.1 + p.1 * z.0);
    }
    (p, dp)
}

fn cdiv(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let n = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cabs(a: (f64, f64)) -> f64 {
    Float::hypot(a.0, a.1)
}

/// Cauchy bound `1 + max |a_i / a_n|`.
fn cauchy_bound(p: &IntPolynomial) -> f64 {
    let lc = p.leading().unwrap().abs().to_f64().unwrap_or(f64::MAX);
    let n = p.degree().unwrap();
    1.0 + p.coeffs()[..n]
        .iter()
        .map(|c| c.abs().to_f64().unwrap_or(f64::MAX) / lc)
        .fold(0.0, f64::max)
}

fn seeds_f64(p: &IntPolynomial) -> Vec<(f64, f64)> {
    let n = p.degree().unwrap();
    let lc = p.leading().unwrap().to_f64().unwrap_or(1.0);
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap_or(0.0) / lc).collect();
    let r = cauchy_bound(p);
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / n as f64 + 0.4;
            (r * Float::cos(t), r * Float::sin(t))
        })
        .collect();
    for _ in 0..F64_ITERATIONS {
        let mut worst: f64 = 0.0;
        for k in 0..n {
            let (pv, dv) = horner_f64(&coeffs, z[k]);
            if cabs(dv) == 0.0 {
                continue;
            }
            let ratio = cdiv(pv, dv);
            let mut s = (0.0, 0.0);
            for j in 0..n {
                if j != k {
                    let diff = (z[k].0 - z[j].0, z[k].1 - z[j].1);
                    let inv = cdiv((1.0, 0.0), diff);
                    s = (s.0 + inv.0, s.1 + inv.1);
                }
            }
            let ns = cmul(ratio, s);
            let w = cdiv(ratio, (1.0 - ns.0, -ns.1));
            if !(w.0.is_finite() && w.1.is_finite()) {
                continue;
            }
            z[k] = (z[k].0 - w.0, z[k].1 - w.1);
            worst = worst.max(cabs(w) / (1.0 + cabs(z[k])));
        }
        if worst < 1e-14 {
            break;
        }
    }
    z
}

fn horner(coeffs: &[Complex], z: &Complex) -> (Complex, Complex) {
    let prec = z.precision();
    let mut p = Complex::zero(prec);
    let mut dp = Complex::zero(prec);
    for c in coeffs.iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + c;
    }
    (p, dp)
}

/// Evaluates an integer polynomial at a complex point.
pub fn eval_complex(p: &IntPolynomial, z: &Complex) -> Complex {
    let prec = z.precision();
    let coeffs: Vec<Complex> = p.coeffs().iter().map(|c| Complex::from_int(c, prec)).collect();
    horner(&coeffs, z).0
}

fn refine(p: &IntPolynomial, seeds: &[(f64, f64)], wp: u32) -> Result<Vec<Complex>> {
    let n = seeds.len();
    let coeffs: Vec<Complex> = p.coeffs().iter().map(|c| Complex::from_int(c, wp)).collect();
    let mut z: Vec<Complex> = seeds.iter().map(|&(re, im)| Complex::from_f64(re, im, wp)).collect();
    let tol = Real::pow2(-(wp as i64) + 16, wp);
    let one = Complex::one(wp);
    for _ in 0..BIG_ITERATIONS {
        let mut converged = true;
        for k in 0..n {
            let (pv, dv) = horner(&coeffs, &z[k]);
            if pv.is_zero() {
                continue;
            }
            if dv.is_zero() {
                converged = false;
                continue;
            }
            let ratio = &pv / &dv;
            let mut s = Complex::zero(wp);
            for j in 0..n {
                if j != k {
                    s = &s + &(&z[k] - &z[j]).inv();
                }
            }
            let w = &ratio / &(&one - &(&ratio * &s));
            z[k] = &z[k] - &w;
            let scale = Real::one(wp) + z[k].abs1();
            if w.abs1() > &tol * &scale {
                converged = false;
            }
        }
        if converged {
            return Ok(z);
        }
    }
    Err(Error::NotConverged)
}

/// Greedy nearest-conjugate matching; every match must be closer than half
/// the minimal root separation.
fn conjugate_pairing(roots: &[Complex]) -> Result<Vec<(usize, usize)>> {
    let n = roots.len();
    let prec = roots[0].precision();
    let mut sep: Option<Real> = None;
    for i in 0..n {
        for j in i + 1..n {
            let d = (&roots[i] - &roots[j]).abs();
            sep = Some(match sep {
                Some(s) if s < d => s,
                _ => d,
            });
        }
    }
    let half = sep.ok_or(Error::DegeneratePairing)? / Real::from_i64(2, prec);
    let mut used = alloc::vec![false; n];
    let mut pairs = Vec::new();
    for i in 0..n {
        if used[i] || roots[i].im.is_negative() || roots[i].im.is_zero() {
            continue;
        }
        let target = roots[i].conj();
        let best = (0..n)
            .filter(|&j| j != i && !used[j])
            .map(|j| (j, (&roots[j] - &target).abs()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(core::cmp::Ordering::Equal));
        match best {
            Some((j, d)) if d <= half => {
                used[i] = true;
                used[j] = true;
                pairs.push((i, j));
            }
            _ => return Err(Error::DegeneratePairing),
        }
    }
    if used.iter().any(|u| !u) {
        return Err(Error::DegeneratePairing);
    }
    Ok(pairs)
}

/// All complex roots of a squarefree integer polynomial.
///
/// The residual bound satisfies `max |p(root)| <= 2^(-precision/2) (1 + max|coeff|)`
/// or the call fails with [`Error::NotConverged`]. When the polynomial has no
/// real roots the result lists each conjugate pair as consecutive entries
/// `(λ, conj λ)` with `Im λ > 0`, pairs ordered by real part.
pub fn find_roots(p: &IntPolynomial, precision_bits: u32) -> Result<RootSet> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::DegreeTooSmall { degree: 0, min: 1 });
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let real_root_count = count_real_roots(p)?;
    let wp = precision_bits + GUARD_BITS;
    let mut roots = if n == 1 {
        let num = Real::from_int(&-p.coeff(0), wp);
        let den = Real::from_int(&p.coeff(1), wp);
        alloc::vec![Complex::from_real(num / den)]
    } else {
        refine(p, &seeds_f64(p), wp)?
    };

    let mut pairing = Vec::new();
    if real_root_count == 0 && n % 2 == 0 {
        let pairs = conjugate_pairing(&roots)?;
        let mut ordered: Vec<Complex> = pairs.iter().map(|&(i, _)| roots[i].clone()).collect();
        ordered.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap_or(core::cmp::Ordering::Equal)
                .then(b.im.partial_cmp(&a.im).unwrap_or(core::cmp::Ordering::Equal))
        });
        roots = ordered.iter().flat_map(|z| [z.clone(), z.conj()]).collect();
        pairing = (0..n / 2).map(|k| (2 * k, 2 * k + 1)).collect();
    } else {
        // Real roots carry no meaningful imaginary part beyond rounding noise.
        roots.sort_by(|a, b| {
            let (ar, br) = (a.re.to_f64(), b.re.to_f64());
            ar.partial_cmp(&br)
                .unwrap_or(core::cmp::Ordering::Equal)
                .then(a.im.partial_cmp(&b.im).unwrap_or(core::cmp::Ordering::Equal))
        });
    }

    let roots: Vec<Complex> = roots.iter().map(|z| z.with_precision(precision_bits)).collect();
    let residual = roots
        .iter()
        .map(|z| eval_complex(p, &z.with_precision(wp)).abs())
        .fold(Real::zero(wp), Real::max);
    let max_coeff = p.coeffs().iter().map(BigInt::abs).max().unwrap_or_default();
    let allowed = Real::pow2(-(precision_bits as i64) / 2, wp) * (Real::one(wp) + Real::from_int(&max_coeff, wp));
    if residual > allowed {
        return Err(Error::NotConverged);
    }
    Ok(RootSet {
        roots,
        residual_bound: residual.with_precision(precision_bits),
        pairing,
        real_root_count,
        precision_bits,
    })
}
