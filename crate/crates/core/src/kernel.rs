//! Schwinger unitary pairs, the symmetrized operator basis and the mod(N)-invariant kernel.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix};

/// Imaginary parts of Tr[G†ρ] above this are reported as an error.
pub const IMAGINARY_RESIDUE_LIMIT: f64 = 1e-8;

/// exp(iπk/N), the branch ω^{k/2} used throughout.
fn omega_half(k: i64, n: usize) -> Complex64 {
    let n = n as i64;
    Complex64::from_polar(1.0, PI * k.rem_euclid(2 * n) as f64 / n as f64)
}

/// Clock and shift operators with V U = ω U V.
#[derive(Debug, Clone)]
pub struct SchwingerPair {
    pub dim: usize,
    pub u: ComplexMatrix,
    pub v: ComplexMatrix,
}

impl SchwingerPair {
    /// U^a V^b for arbitrary integer exponents.
    pub fn weyl(&self, a: i64, b: i64) -> ComplexMatrix {
        let n = self.dim;
        let a = a.rem_euclid(n as i64) as usize;
        let b = b.rem_euclid(n as i64) as usize;
        // (U^a V^b)[σ-b, σ] = ω^{a(σ-b)}
        let mut m = ComplexMatrix::zeros(n);
        for sigma in 0..n {
            let row = (sigma + n - b) % n;
            m[(row, sigma)] = omega_half(2 * (a * row) as i64, n);
        }
        m
    }
}

/// U = diag(ω^σ), V|u_σ⟩ = |u_{σ-1 mod N}⟩.
pub fn build_schwinger_pair(n: usize) -> Result<SchwingerPair> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let u =
        ComplexMatrix::from_fn(n, |i, j| if i == j { omega_half(2 * i as i64, n) } else { Complex64::new(0.0, 0.0) });
    let v = ComplexMatrix::from_fn(n, |i, j| {
        if i == (j + n - 1) % n {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok(SchwingerPair { dim: n, u, v })
}

/// S_S(η,ξ) = N^{-1/2} ω^{ηξ/2} U^η V^ξ.
pub fn symmetrized_basis(eta: i64, xi: i64, n: usize) -> ComplexMatrix {
    let pair = build_schwinger_pair(n.max(2)).expect("n >= 2");
    pair.weyl(eta, xi).scale(omega_half(eta * xi, n) / (n as f64).sqrt())
}

/// Φ = N I_η I_ξ − η I_ξ − ξ I_η with I_ε = ⌊ε/N⌋.
pub fn phase_phi(eta: i64, xi: i64, n: usize) -> i64 {
    let n = n as i64;
    phi_from_parts(eta, xi, eta.div_euclid(n), xi.div_euclid(n), n)
}

fn phi_from_parts(eta: i64, xi: i64, i_eta: i64, i_xi: i64, n: i64) -> i64 {
    n * i_eta * i_xi - eta * i_xi - xi * i_eta
}

fn centered(e: i64, n: i64) -> i64 {
    let r = e.rem_euclid(n);
    if r > n / 2 {
        r - n
    } else {
        r
    }
}

/// Representative of (η, ξ) mod N in the centered cell [−⌊(N−1)/2⌋, ⌊N/2⌋]².
///
/// For even N the boundary value N/2 is traded for −N/2 when the other coordinate is negative,
/// so that the operator at the representative of (−η, −ξ) is the adjoint of the one at (η, ξ).
pub fn centered_representative(eta: i64, xi: i64, n: usize) -> (i64, i64) {
    let n = n as i64;
    let (mut a, mut b) = (centered(eta, n), centered(xi, n));
    if n % 2 == 0 {
        let h = n / 2;
        if a == h && b < 0 {
            a = -h;
        }
        if b == h && a < 0 {
            b = -h;
        }
    }
    (a, b)
}

/// Φ with integer parts taken relative to the centered cell.
///
/// e^{iπΦ} S_S(η,ξ) equals S_S at the centered representative of (η, ξ).
pub fn cell_phase(eta: i64, xi: i64, n: usize) -> i64 {
    let (a, b) = centered_representative(eta, xi, n);
    let ni = n as i64;
    phi_from_parts(eta, xi, (eta - a) / ni, (xi - b) / ni, ni)
}

/// The N×N grid of kernel operators G(μ, ν).
#[derive(Debug, Clone)]
pub struct MappingKernel {
    dim: usize,
    grid: Vec<ComplexMatrix>,
}

impl MappingKernel {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, mu: usize, nu: usize) -> &ComplexMatrix {
        &self.grid[mu * self.dim + nu]
    }

    /// Points in lexicographic (μ, ν) order.
    pub fn points(&self) -> impl Iterator<Item = ((usize, usize), &ComplexMatrix)> {
        let n = self.dim;
        self.grid.iter().enumerate().map(move |(k, g)| ((k / n, k % n), g))
    }
}

/// G(μ,ν) = N^{-1/2} Σ ω^{−(μη+νξ)} e^{iπΦ} S_S(η,ξ) with η, ξ running over `[eta0, eta0+N)` and
/// `[xi0, xi0+N)`. Every window gives the same kernel.
pub fn kernel_over_window(n: usize, eta0: i64, xi0: i64) -> Result<MappingKernel> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let ni = n as i64;
    let mut terms = Vec::with_capacity(n * n);
    for eta in eta0..eta0 + ni {
        for xi in xi0..xi0 + ni {
            let s = symmetrized_basis(eta, xi, n).scale(omega_half(ni * cell_phase(eta, xi, n), n));
            terms.push((eta, xi, s));
        }
    }
    let norm = 1.0 / (n as f64).sqrt();
    let mut grid = Vec::with_capacity(n * n);
    for mu in 0..ni {
        for nu in 0..ni {
            let mut g = ComplexMatrix::zeros(n);
            for (eta, xi, s) in &terms {
                g = &g + &s.scale(omega_half(-2 * (mu * eta + nu * xi), n) * norm);
            }
            grid.push(g);
        }
    }
    Ok(MappingKernel { dim: n, grid })
}

/// The kernel for dimension `n`, built once and shared.
pub fn kernel(n: usize) -> Result<Arc<MappingKernel>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<MappingKernel>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(k) = cache.lock().expect("kernel cache poisoned").get(&n) {
        return Ok(Arc::clone(k));
    }
    let k = Arc::new(kernel_over_window(n, 0, 0)?);
    cache.lock().expect("kernel cache poisoned").insert(n, Arc::clone(&k));
    Ok(k)
}

/// Real function on the N×N discrete phase space, stored row-major in (μ, ν).
#[derive(Debug, Clone, PartialEq)]
pub struct WignerGrid {
    dim: usize,
    values: Vec<f64>,
}

impl WignerGrid {
    pub fn new(dim: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != dim * dim {
            return Err(Error::EntryCount { dim, expected: dim * dim, got: values.len() });
        }
        Ok(Self { dim, values })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let values = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self { dim, values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, mu: usize, nu: usize) -> f64 {
        self.values[mu * self.dim + nu]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// (1/N) Σ W.
    pub fn normalization(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.dim as f64
    }

    /// (1/N) Σ W².
    pub fn purity(&self) -> f64 {
        self.values.iter().map(|w| w * w).sum::<f64>() / self.dim as f64
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|w| w.abs()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

/// O(μ,ν) = Tr[G†(μ,ν) Ô] for any operator.
pub fn operator_symbol(op: &ComplexMatrix, k: &MappingKernel) -> Result<Vec<Complex64>> {
    k.points().map(|(_, g)| g.trace_adj_product(op)).collect()
}

/// Ô = (1/N) Σ O(μ,ν) G(μ,ν).
pub fn operator_from_symbol(symbol: &[Complex64], k: &MappingKernel) -> Result<ComplexMatrix> {
    let n = k.dim();
    if symbol.len() != n * n {
        return Err(Error::EntryCount { dim: n, expected: n * n, got: symbol.len() });
    }
    let mut out = ComplexMatrix::zeros(n);
    for ((_, g), o) in k.points().zip(symbol) {
        out = &out + &g.scale(o / n as f64);
    }
    Ok(out)
}

/// W(μ,ν) = Tr[G†(μ,ν) ρ].
pub fn wigner_grid(rho: &DensityMatrix, k: &MappingKernel) -> Result<WignerGrid> {
    if rho.dim() != k.dim() {
        return Err(Error::DimensionMismatch { left: rho.dim(), right: k.dim() });
    }
    let symbol = operator_symbol(rho.matrix(), k)?;
    let residue = symbol.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if residue > IMAGINARY_RESIDUE_LIMIT {
        return Err(Error::ImaginaryResidue(residue));
    }
    Ok(WignerGrid { dim: k.dim(), values: symbol.iter().map(|z| z.re).collect() })
}

/// ρ = (1/N) Σ W(μ,ν) G(μ,ν).
pub fn reconstruct(w: &WignerGrid, k: &MappingKernel) -> Result<ComplexMatrix> {
    if w.dim() != k.dim() {
        return Err(Error::DimensionMismatch { left: w.dim(), right: k.dim() });
    }
    let symbol: Vec<Complex64> = w.values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    operator_from_symbol(&symbol, k)
}

/// Tr[ρσ] = (1/N) Σ W_ρ W_σ.
pub fn overlap_from_grids(wa: &WignerGrid, wb: &WignerGrid) -> Result<f64> {
    if wa.dim() != wb.dim() {
        return Err(Error::DimensionMismatch { left: wa.dim(), right: wb.dim() });
    }
    Ok(wa.values.iter().zip(&wb.values).map(|(a, b)| a * b).sum::<f64>() / wa.dim() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{purity, validate_density, DEFAULT_TOL};
    use crate::testutil::{random_density, random_matrix, rng};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pair_n2_is_pauli() {
        let p = build_schwinger_pair(2).unwrap();
        assert!(p.u.max_abs_diff(&ComplexMatrix::from_real([[1.0, 0.0], [0.0, -1.0]])) < 1e-15);
        assert_eq!(p.v, ComplexMatrix::from_real([[0.0, 1.0], [1.0, 0.0]]));
        // σ_y = −iUV
        let sy = (&p.u * &p.v).scale(c(0.0, -1.0));
        assert!(
            sy.max_abs_diff(&ComplexMatrix::from_rows([[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]))
                < 1e-15
        );
    }

    #[test]
    fn pair_n4_clock_and_commutation() {
        let p = build_schwinger_pair(4).unwrap();
        let expected = ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)]);
        assert!(p.u.max_abs_diff(&expected) < 1e-15);
        let lhs = &p.v * &p.u;
        let rhs = (&p.u * &p.v).scale(c(0.0, 1.0));
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn pair_invariants_several_n() {
        for n in 2..=6 {
            let p = build_schwinger_pair(n).unwrap();
            let id = ComplexMatrix::identity(n);
            assert!(p.u.pow(n as u32).max_abs_diff(&id) < 1e-12);
            assert!(p.v.pow(n as u32).max_abs_diff(&id) < 1e-12);
            let w = omega_half(2, n);
            assert!((&p.v * &p.u).max_abs_diff(&(&p.u * &p.v).scale(w)) < 1e-12);
            for a in -3i64..7 {
                for b in -3i64..7 {
                    let direct = &p.u.pow(a.rem_euclid(n as i64) as u32) * &p.v.pow(b.rem_euclid(n as i64) as u32);
                    assert!(p.weyl(a, b).max_abs_diff(&direct) < 1e-12);
                }
            }
        }
        assert_eq!(build_schwinger_pair(1).unwrap_err(), Error::DimensionTooSmall(1));
    }

    #[test]
    fn symmetrized_basis_examples() {
        let s = symmetrized_basis(0, 0, 4);
        assert!(s.max_abs_diff(&ComplexMatrix::identity(4).scale_re(0.5)) < 1e-15);
        for n in [2usize, 3, 4] {
            for eta in 0..n as i64 {
                for xi in 0..n as i64 {
                    let tr = symmetrized_basis(eta, xi, n).trace();
                    let expect = if eta == 0 && xi == 0 { (n as f64).sqrt() } else { 0.0 };
                    assert!((tr - c(expect, 0.0)).norm() < 1e-12);
                }
            }
        }
        // Brute-force orthonormality on the fundamental window for N = 4.
        for a in 0..16 {
            for b in 0..16 {
                let sa = symmetrized_basis(a / 4, a % 4, 4);
                let sb = symmetrized_basis(b / 4, b % 4, 4);
                let ip = sa.trace_adj_product(&sb).unwrap();
                assert!((ip - c(if a == b { 1.0 } else { 0.0 }, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn phase_phi_examples() {
        for n in [2usize, 3, 4, 5] {
            let ni = n as i64;
            for eta in 0..ni {
                for xi in 0..ni {
                    assert_eq!(phase_phi(eta, xi, n), 0);
                    assert_eq!(phase_phi(eta + ni, xi, n), -xi);
                }
            }
            assert_eq!(phase_phi(ni, ni, n), -ni);
        }
        assert_eq!(phase_phi(-1, -1, 4), 4 - 1 - 1);
    }

    #[test]
    fn cell_phase_maps_to_representative() {
        for n in [2usize, 3, 4, 5, 6] {
            for eta in -9..9 {
                for xi in -9..9 {
                    let (a, b) = centered_representative(eta, xi, n);
                    let lhs = symmetrized_basis(eta, xi, n).scale(omega_half(n as i64 * cell_phase(eta, xi, n), n));
                    assert!(lhs.max_abs_diff(&symmetrized_basis(a, b, n)) < 1e-12, "n={n} ({eta},{xi})");
                }
            }
        }
    }

    #[test]
    fn floor_phase_maps_to_corner_cell() {
        // The literal floor-based Φ maps any point to the [0, N) representative.
        for n in [2usize, 3, 4] {
            let ni = n as i64;
            for eta in -6..6 {
                for xi in -6..6 {
                    let lhs = symmetrized_basis(eta, xi, n).scale(omega_half(ni * phase_phi(eta, xi, n), n));
                    let rhs = symmetrized_basis(eta.rem_euclid(ni), xi.rem_euclid(ni), n);
                    assert!(lhs.max_abs_diff(&rhs) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn representatives_closed_under_adjoint() {
        for n in 2..=7usize {
            for eta in 0..n as i64 {
                for xi in 0..n as i64 {
                    let (a, b) = centered_representative(eta, xi, n);
                    let (c, d) = centered_representative(-eta, -xi, n);
                    let lhs = symmetrized_basis(c, d, n);
                    assert!(lhs.max_abs_diff(&symmetrized_basis(a, b, n).adjoint()) < 1e-12, "n={n} ({eta},{xi})");
                }
            }
        }
    }

    #[test]
    fn kernel_invariants() {
        for n in 2..=6 {
            let k = kernel(n).unwrap();
            let mut sum = ComplexMatrix::zeros(n);
            for ((mu, nu), g) in k.points() {
                assert!((g.trace() - c(1.0, 0.0)).norm() < 1e-12);
                assert!(g.hermiticity_defect() < 1e-12);
                for ((mu2, nu2), g2) in k.points() {
                    let ip = g.trace_adj_product(g2).unwrap();
                    let expect = if (mu, nu) == (mu2, nu2) { n as f64 } else { 0.0 };
                    assert!((ip - c(expect, 0.0)).norm() < 1e-12);
                }
                sum = &sum + g;
            }
            assert!(sum.scale_re(1.0 / n as f64).max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
        }
    }

    #[test]
    fn kernel_n2_sigma_traces() {
        let k = kernel(2).unwrap();
        let p = build_schwinger_pair(2).unwrap();
        let sx = p.v.clone();
        let sy = (&p.u * &p.v).scale(c(0.0, -1.0));
        let sz = p.u.clone();
        for ((mu, nu), g) in k.points() {
            let s = |e: usize| if e.is_multiple_of(2) { 1.0 } else { -1.0 };
            assert!((g.trace_adj_product(&sx).unwrap() - c(s(nu), 0.0)).norm() < 1e-12);
            assert!((g.trace_adj_product(&sy).unwrap() - c(s(mu + nu + 1), 0.0)).norm() < 1e-12);
            assert!((g.trace_adj_product(&sz).unwrap() - c(s(mu), 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn kernel_n2_matches_literal_floor_formula() {
        let k = kernel(2).unwrap();
        for mu in 0..2i64 {
            for nu in 0..2i64 {
                let mut g = ComplexMatrix::zeros(2);
                for eta in 0..2 {
                    for xi in 0..2 {
                        let term = symmetrized_basis(eta, xi, 2)
                            .scale(omega_half(-2 * (mu * eta + nu * xi), 2) * omega_half(2 * phase_phi(eta, xi, 2), 2));
                        g = &g + &term;
                    }
                }
                let g = g.scale_re(1.0 / 2f64.sqrt());
                assert!(g.max_abs_diff(k.at(mu as usize, nu as usize)) < 1e-12);
            }
        }
    }

    #[test]
    fn window_shift_reproduces_kernel() {
        for n in [2usize, 3, 4, 5] {
            let base = kernel(n).unwrap();
            for (e0, x0) in [(-(n as i64), 0), (0, -(n as i64)), (-(n as i64), -(n as i64)), (3, -7)] {
                let shifted = kernel_over_window(n, e0, x0).unwrap();
                for ((mu, nu), g) in base.points() {
                    assert!(g.max_abs_diff(shifted.at(mu, nu)) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn wigner_examples() {
        for n in 2..=5 {
            let k = kernel(n).unwrap();
            let mixed = validate_density(ComplexMatrix::identity(n).scale_re(1.0 / n as f64), DEFAULT_TOL).unwrap();
            let w = wigner_grid(&mixed, &k).unwrap();
            for &v in w.values() {
                assert_abs_diff_eq!(v, 1.0 / n as f64, epsilon = 1e-12);
            }
        }
        let ket0 = validate_density(ComplexMatrix::from_real([[1.0, 0.0], [0.0, 0.0]]), DEFAULT_TOL).unwrap();
        let w = wigner_grid(&ket0, &kernel(2).unwrap()).unwrap();
        assert_eq!(w.values().iter().map(|x| x.round()).collect::<Vec<_>>(), vec![1.0, 1.0, 0.0, 0.0]);
        assert!(wigner_grid(&ket0, &kernel(4).unwrap()).is_err());
    }

    #[test]
    fn reconstruct_examples() {
        let k = kernel(4).unwrap();
        let w = WignerGrid::from_fn(4, |_, _| 0.25);
        assert!(reconstruct(&w, &k).unwrap().max_abs_diff(&ComplexMatrix::identity(4).scale_re(0.25)) < 1e-12);
        let h = 0.5;
        let phi_plus = ComplexMatrix::from_real([[h, 0.0, 0.0, h], [0.0; 4], [0.0; 4], [h, 0.0, 0.0, h]]);
        let rho = validate_density(phi_plus.clone(), DEFAULT_TOL).unwrap();
        let back = reconstruct(&wigner_grid(&rho, &k).unwrap(), &k).unwrap();
        assert!(back.max_abs_diff(&phi_plus) < 1e-12);
    }

    #[test]
    fn overlap_examples() {
        let k = kernel(4).unwrap();
        let e0 = validate_density(
            ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]),
            DEFAULT_TOL,
        )
        .unwrap();
        let e1 = validate_density(
            ComplexMatrix::from_diagonal(&[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]),
            DEFAULT_TOL,
        )
        .unwrap();
        let w0 = wigner_grid(&e0, &k).unwrap();
        let w1 = wigner_grid(&e1, &k).unwrap();
        assert_abs_diff_eq!(overlap_from_grids(&w0, &w1).unwrap(), 0.0, epsilon = 1e-12);
        let mut r = rng(3);
        let a = random_density(&mut r, 4);
        let b = random_density(&mut r, 4);
        let wa = wigner_grid(&a, &k).unwrap();
        let wb = wigner_grid(&b, &k).unwrap();
        assert_abs_diff_eq!(overlap_from_grids(&wa, &wa).unwrap(), purity(&a), epsilon = 1e-12);
        let direct = (a.matrix() * b.matrix()).trace().re;
        assert_abs_diff_eq!(overlap_from_grids(&wa, &wb).unwrap(), direct, epsilon = 1e-12);
        assert!(overlap_from_grids(&wa, &WignerGrid::from_fn(2, |_, _| 0.5)).is_err());
    }

    proptest! {
        #[test]
        fn round_trip_normalization_purity(seed in any::<u64>(), n in 2usize..=5) {
            let k = kernel(n).unwrap();
            let rho = random_density(&mut rng(seed), n);
            let w = wigner_grid(&rho, &k).unwrap();
            prop_assert!((w.normalization() - 1.0).abs() < 1e-10);
            prop_assert!((w.purity() - purity(&rho)).abs() < 1e-10);
            prop_assert!(reconstruct(&w, &k).unwrap().max_abs_diff(rho.matrix()) < 1e-12);
            let residue = operator_symbol(rho.matrix(), &k).unwrap().iter().map(|z| z.im.abs()).fold(0.0, f64::max);
            prop_assert!(residue < 1e-10);
        }

        #[test]
        fn linearity(seed in any::<u64>(), alpha in 0.0f64..1.0) {
            let k = kernel(4).unwrap();
            let mut r = rng(seed);
            let a = random_density(&mut r, 4);
            let b = random_density(&mut r, 4);
            let mix = &a.matrix().scale_re(alpha) + &b.matrix().scale_re(1.0 - alpha);
            let wm = wigner_grid(&validate_density(mix, DEFAULT_TOL).unwrap(), &k).unwrap();
            let wa = wigner_grid(&a, &k).unwrap();
            let wb = wigner_grid(&b, &k).unwrap();
            for i in 0..16 {
                prop_assert!((wm.values()[i] - alpha * wa.values()[i] - (1.0 - alpha) * wb.values()[i]).abs() < 1e-12);
            }
        }

        #[test]
        fn operator_decomposition(seed in any::<u64>(), n in 2usize..=5) {
            let k = kernel(n).unwrap();
            let op = random_matrix(&mut rng(seed), n);
            let back = operator_from_symbol(&operator_symbol(&op, &k).unwrap(), &k).unwrap();
            prop_assert!(back.max_abs_diff(&op) < 1e-12);
        }
    }
}
