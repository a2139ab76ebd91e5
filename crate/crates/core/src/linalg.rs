//! Small dense complex matrices, density-matrix validation and purity diagnostics.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result, Violation};

/// Default tolerance for every validation check.
pub const DEFAULT_TOL: f64 = 1e-10;

const C0: Complex64 = Complex64::new(0.0, 0.0);
const C1: Complex64 = Complex64::new(1.0, 0.0);

/// Dense N×N complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting wrong lengths and non-finite values.
    pub fn new(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::EntryCount { dim, expected: dim * dim, got: data.len() });
        }
        if let Some(k) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite { row: k / dim, col: k % dim });
        }
        Ok(Self { dim, data })
    }

    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![C0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { C1 } else { C0 })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn from_diagonal(d: &[Complex64]) -> Self {
        Self::from_fn(d.len(), |i, j| if i == j { d[i] } else { C0 })
    }

    /// Builds a matrix from real entries.
    pub fn from_real<const N: usize>(rows: [[f64; N]; N]) -> Self {
        Self::from_fn(N, |i, j| Complex64::new(rows[i][j], 0.0))
    }

    /// Builds a matrix from complex entries.
    pub fn from_rows<const N: usize>(rows: [[Complex64; N]; N]) -> Self {
        Self::from_fn(N, |i, j| rows[i][j])
    }

    /// |ψ⟩⟨ψ| for an amplitude vector.
    pub fn projector(psi: &[Complex64]) -> Self {
        Self::from_fn(psi.len(), |i, j| psi[i] * psi[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Tr[A†B] without forming the product.
    pub fn trace_adj_product(&self, other: &Self) -> Result<Complex64> {
        self.check_dim(other)?;
        Ok(self.data.iter().zip(&other.data).map(|(a, b)| a.conj() * b).sum())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self * other)
    }

    /// Non-negative integer power.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.dim), |acc, _| &acc * self)
    }

    /// Kronecker product, `self` as the left factor.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        Self::from_fn(n * m, |i, j| self[(i / m, j / m)] * other[(i % m, j % m)])
    }

    /// Largest elementwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Largest |a_ij - conj(a_ji)|.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// (A + A†)/2.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |i, j| (self[(i, j)] + self[(j, i)].conj()) * 0.5)
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        (0..self.dim).map(|i| (0..self.dim).map(|j| self[(i, j)] * v[j]).sum()).collect()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.dim, right: other.dim })
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

// Operator forms panic on mismatched dimensions; the `checked_*` methods report them.
impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix { dim: self.dim, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == C0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.scale_re(-1.0)
    }
}

/// Eigenvalues of a Hermitian matrix in ascending order, by cyclic Jacobi rotations.
pub fn hermitian_eigenvalues(a: &ComplexMatrix) -> Result<Vec<f64>> {
    let defect = a.hermiticity_defect();
    if defect > DEFAULT_TOL {
        return Err(Error::NotHermitian { max_asymmetry: defect });
    }
    Ok(jacobi_eigenvalues(&a.hermitian_part()))
}

fn jacobi_eigenvalues(h: &ComplexMatrix) -> Vec<f64> {
    let n = h.dim();
    let mut a = h.clone();
    let scale = a.entries().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
    for _sweep in 0..64 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

// Zeroes a[p][q] with the unitary W = diag-phase · real rotation acting on the (p, q) plane.
fn rotate(a: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.dim();
    let b = a[(p, q)];
    let r = b.norm();
    if r == 0.0 {
        return;
    }
    let phase = b / r;
    let theta = 0.5 * (2.0 * r).atan2(a[(q, q)].re - a[(p, p)].re);
    let (s, c) = theta.sin_cos();
    let pc = phase.conj();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * c - akq * pc * s;
        a[(k, q)] = akp * s + akq * pc * c;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = apk * c - aqk * phase * s;
        a[(q, k)] = apk * s + aqk * phase * c;
    }
    a[(p, q)] = C0;
    a[(q, p)] = C0;
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    tol: f64,
}

impl DensityMatrix {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// Element ρ_ij with 1-based indices, as written in the paper's formulas.
    pub fn elem(&self, i: usize, j: usize) -> Complex64 {
        self.matrix[(i - 1, j - 1)]
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }
}

impl AsRef<ComplexMatrix> for DensityMatrix {
    fn as_ref(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

/// Validates `m` as a density matrix, reporting every violated invariant.
pub fn validate_density(m: ComplexMatrix, tol: f64) -> Result<DensityMatrix> {
    let mut violations = Vec::new();
    let defect = m.hermiticity_defect();
    if defect > tol {
        violations.push(Violation::NotHermitian { max_asymmetry: defect });
    }
    let tr = m.trace();
    if (tr - C1).norm() > tol {
        violations.push(Violation::Trace { re: tr.re, im: tr.im });
    }
    let min_ev = jacobi_eigenvalues(&m.hermitian_part())[0];
    if min_ev < -tol {
        violations.push(Violation::NegativeEigenvalue { min_eigenvalue: min_ev });
    }
    if violations.is_empty() {
        Ok(DensityMatrix { matrix: m, tol })
    } else {
        Err(Error::InvalidDensity(violations))
    }
}

/// Tr ρ².
pub fn purity(rho: &DensityMatrix) -> f64 {
    rho.matrix.trace_adj_product(&rho.matrix).expect("same matrix").re
}

/// Eq. 10 diagnostics for a 4×4 Hermitian unit-trace matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivityReport {
    pub trace_sq: f64,
    pub trace_cube: f64,
    pub trace_fourth: f64,
    pub ineq1: bool,
    pub ineq2: bool,
    pub ineq3: bool,
}

impl PositivityReport {
    pub fn all_hold(&self) -> bool {
        self.ineq1 && self.ineq2 && self.ineq3
    }
}

/// Evaluates the three trace inequalities of Eq. 10 with slack 1e-10.
///
/// Takes a plain matrix so that unphysical candidates can be probed.
pub fn positivity_inequalities(rho: &ComplexMatrix) -> Result<PositivityReport> {
    if rho.dim() != 4 {
        return Err(Error::WrongDimension { expected: 4, got: rho.dim() });
    }
    let r2 = rho * rho;
    let r3 = &r2 * rho;
    let t2 = r2.trace().re;
    let t3 = r3.trace().re;
    let t4 = (&r2 * &r2).trace().re;
    let slack = DEFAULT_TOL;
    Ok(PositivityReport {
        trace_sq: t2,
        trace_cube: t3,
        trace_fourth: t4,
        ineq1: t2 <= 1.0 + slack,
        ineq2: t3 >= 1.5 * t2 - 0.5 - slack,
        ineq3: t4 <= 1.0 / 6.0 - t2 + 0.5 * t2 * t2 + 4.0 / 3.0 * t3 + slack,
    })
}
