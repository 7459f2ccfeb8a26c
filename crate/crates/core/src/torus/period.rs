use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{charpoly, companion, IntMatrix, IntPolynomial};
use crate::real::{CMatrix, Complex, Real};
use crate::roots::{count_real_roots, find_roots};

/// Residual tolerance `2^(-precision/2)` used for every torus invariant.
pub fn tolerance(precision_bits: u32) -> Real {
    Real::pow2(-((precision_bits / 2) as i64), precision_bits)
}

/// Period matrix with rows `(1, l, l^2, ..., l^(2n-1))` for the selected
/// eigenvalues `l` of the companion matrix.
#[derive(Clone, Debug)]
pub struct PeriodMatrix {
    pub n: usize,
    /// `n x 2n`
    pub entries: CMatrix,
    pub source_poly: IntPolynomial,
    /// Indices into the root list of the source polynomial, one per conjugate
    /// pair. Empty for tori assembled directly from lattice data.
    pub selection: Vec<usize>,
    pub precision_bits: u32,
}

impl PeriodMatrix {
    /// The invertible `2n x 2n` matrix `[Pi; conj(Pi)]`.
    pub fn stacked(&self) -> CMatrix {
        self.entries.vstack(&self.entries.conj()).expect("conjugate has equal width")
    }
}

#[derive(Clone, Debug)]
pub struct TorusResiduals {
    /// `|Pi M - A Pi| / |Pi|`
    pub holomorphic: Real,
    /// `|J^2 + I|`
    pub j_square: Real,
    /// `|J M - M J|`
    pub j_commute: Real,
    pub precision_bits: u32,
}

impl TorusResiduals {
    pub fn max(&self) -> Real {
        self.holomorphic.clone().max(self.j_square.clone()).max(self.j_commute.clone())
    }

    pub fn within(&self, tol: &Real) -> bool {
        self.holomorphic <= *tol && self.j_square <= *tol && self.j_commute <= *tol
    }
}

/// A complex torus `C^n / Lambda` with an endomorphism, given by its rational
/// representation `M` on `H_1` and its analytic representation `A`.
#[derive(Clone, Debug)]
pub struct TorusWithEndomorphism {
    pub period: PeriodMatrix,
    /// `M`, `2n x 2n`.
    pub rational_rep: IntMatrix,
    /// Diagonal of `A`.
    pub analytic_rep: Vec<Complex>,
    /// Real `2n x 2n` complex structure `J` (imaginary parts are zero).
    pub complex_structure: CMatrix,
    /// `log2` of the infinity-norm condition number of the stacked period matrix.
    pub condition_log2: f64,
    pub residuals: TorusResiduals,
}

impl TorusWithEndomorphism {
    pub fn dimension(&self) -> usize {
        self.period.n
    }

    pub fn precision_bits(&self) -> u32 {
        self.period.precision_bits
    }

    /// Assembles a torus from a period matrix and representations and checks
    /// every invariant at `2^(-precision/2)`.
    pub fn from_parts(
        period: CMatrix,
        rational_rep: IntMatrix,
        analytic_rep: Vec<Complex>,
        precision_bits: u32,
    ) -> Result<Self> {
        let source_poly = charpoly(&rational_rep)?;
        Self::assemble(period, rational_rep, analytic_rep, source_poly, Vec::new(), precision_bits)
    }

    /// `(C/Z[i])^2` with `M` the rotation by `i` on each factor; its
    /// characteristic polynomial is `(x^2+1)^2`.
    pub fn gaussian_square(precision_bits: u32) -> Result<Self> {
        let p = precision_bits;
        let (z, o, i) = (Complex::zero(p), Complex::one(p), Complex::i(p));
        let period = CMatrix::from_rows(alloc::vec![
            alloc::vec![o.clone(), i.clone(), z.clone(), z.clone()],
            alloc::vec![z.clone(), z.clone(), o, i.clone()],
        ])?;
        let m = IntMatrix::from_i64(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]])?;
        Self::from_parts(period, m, alloc::vec![i.clone(), i], p)
    }

    fn assemble(
        period: CMatrix,
        rational_rep: IntMatrix,
        analytic_rep: Vec<Complex>,
        source_poly: IntPolynomial,
        selection: Vec<usize>,
        precision_bits: u32,
    ) -> Result<Self> {
        let n = period.rows();
        if period.cols() != 2 * n || rational_rep.rows() != 2 * n || !rational_rep.is_square() || analytic_rep.len() != n
        {
            return Err(Error::DimensionMismatch(format!(
                "period {}x{}, rational {}x{}, analytic {}",
                period.rows(),
                period.cols(),
                rational_rep.rows(),
                rational_rep.cols(),
                analytic_rep.len()
            )));
        }
        let prec = precision_bits;
        let period = period.with_precision(prec);
        let analytic_rep: Vec<Complex> = analytic_rep.iter().map(|z| z.with_precision(prec)).collect();
        let pm = PeriodMatrix { n, entries: period, source_poly, selection, precision_bits: prec };

        let stacked = pm.stacked();
        let inv = stacked.inverse()?;
        let condition_log2 = stacked.norm_inf().log2_abs() + inv.norm_inf().log2_abs();
        if condition_log2 > f64::from(prec / 4) {
            return Err(Error::PrecisionInsufficient { condition_bits: condition_log2 as i64, precision_bits: prec });
        }
        let mut d = Vec::with_capacity(2 * n);
        d.extend((0..n).map(|_| Complex::i(prec)));
        d.extend((0..n).map(|_| -Complex::i(prec)));
        let jc = inv.mul(&CMatrix::diagonal(&d).mul(&stacked)?)?;
        let tol = super::tolerance(prec);
        if jc.max_abs_imag() > tol {
            return Err(Error::InvariantViolated(format!(
                "complex structure has imaginary part {}",
                jc.max_abs_imag().to_decimal_string(6)
            )));
        }
        let j = real_part(&jc);
        let residuals = residuals(&pm.entries, &rational_rep, &analytic_rep, &j, prec)?;
        if !residuals.within(&tol) {
            return Err(Error::InvariantViolated(format!(
                "torus residual {} exceeds 2^-{}",
                residuals.max().to_decimal_string(6),
                prec / 2
            )));
        }
        Ok(Self { period: pm, rational_rep, analytic_rep, complex_structure: j, condition_log2, residuals })
    }

    /// Recomputes the invariant residuals after promoting the stored
    /// period matrix, eigenvalues and complex structure to `precision_bits`.
    pub fn residuals_at(&self, precision_bits: u32) -> Result<TorusResiduals> {
        let p = precision_bits;
        let a: Vec<Complex> = self.analytic_rep.iter().map(|z| z.with_precision(p)).collect();
        residuals(
            &self.period.entries.with_precision(p),
            &self.rational_rep,
            &a,
            &self.complex_structure.with_precision(p),
            p,
        )
    }

    /// Right eigenvectors of `J` for the eigenvalue `i`: the first `n` columns
    /// of the inverse stacked period matrix, at `precision_bits`.
    pub fn holomorphic_eigenvectors(&self, precision_bits: u32) -> Result<Vec<Vec<Complex>>> {
        let inv = self.period.stacked().with_precision(precision_bits).inverse()?;
        Ok((0..self.period.n).map(|k| inv.column(k)).collect())
    }
}

fn real_part(m: &CMatrix) -> CMatrix {
    let rows = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|z| Complex::from_real(z.re)).collect())
        .collect();
    CMatrix::from_rows(rows).expect("same shape")
}

fn residuals(pi: &CMatrix, m: &IntMatrix, a: &[Complex], j: &CMatrix, prec: u32) -> Result<TorusResiduals> {
    let mc = CMatrix::from_int(m, prec);
    let holo = pi.mul(&mc)?.sub(&CMatrix::diagonal(a).mul(pi)?)?;
    let holomorphic = holo.norm_inf() / pi.norm_inf();
    let j_square = j.mul(j)?.add(&CMatrix::identity(j.rows(), prec))?.norm_inf();
    let j_commute = j.mul(&mc)?.sub(&mc.mul(j)?)?.norm_inf();
    Ok(TorusResiduals { holomorphic, j_square, j_commute, precision_bits: prec })
}

/// Builds the torus of a polynomial without real roots: `M = companion(p)`,
/// `A = diag(selected eigenvalues)`. The default selection takes the root
/// with positive imaginary part from each conjugate pair.
pub fn build_torus(
    p: &IntPolynomial,
    precision_bits: u32,
    selection: Option<&[usize]>,
) -> Result<TorusWithEndomorphism> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if deg < 2 || deg % 2 == 1 {
        return Err(Error::InvalidInput(format!("torus polynomial must have even degree >= 2, got {deg}")));
    }
    let real = count_real_roots(p)?;
    if real > 0 {
        return Err(Error::RealRootsPresent(real));
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = deg / 2;
    let roots = find_roots(p, precision_bits)?;
    if roots.pairing.len() != n {
        return Err(Error::DegeneratePairing);
    }
    let selection: Vec<usize> = match selection {
        None => roots.pairing.iter().map(|&(i, _)| i).collect(),
        Some(sel) => {
            if sel.len() != n {
                return Err(Error::InvalidSelection(format!("expected {n} indices, got {}", sel.len())));
            }
            for (k, &idx) in sel.iter().enumerate() {
                if idx >= deg {
                    return Err(Error::InvalidSelection(format!("root index {idx} out of range")));
                }
                if sel[..k].iter().any(|&o| o / 2 == idx / 2) {
                    return Err(Error::InvalidSelection(format!("two indices from conjugate pair {}", idx / 2)));
                }
            }
            sel.to_vec()
        }
    };
    let prec = precision_bits;
    let eig: Vec<Complex> = selection.iter().map(|&i| roots.roots[i].with_precision(prec)).collect();
    let rows = eig
        .iter()
        .map(|l| {
            let mut row = Vec::with_capacity(deg);
            let mut pw = Complex::one(prec);
            for _ in 0..deg {
                row.push(pw.clone());
                pw = &pw * l;
            }
            row
        })
        .collect();
    let period = CMatrix::from_rows(rows)?;
    TorusWithEndomorphism::assemble(period, companion(p)?, eig, p.clone(), selection, prec)
}
