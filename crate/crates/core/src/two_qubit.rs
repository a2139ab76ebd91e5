//! Two-qubit states in the Fano parameterization and their pair-phase-space Wigner functions.

use num_complex::Complex64;

use crate::error::{Error, Result, Violation};
use crate::generators::generators;
use crate::kernel::{kernel, WignerGrid};
use crate::linalg::{validate_density, ComplexMatrix, DensityMatrix, DEFAULT_TOL};

/// Polarizations a, b and correlation tensor c of ρ = ¼[I⊗I + a·σ⊗I + I⊗b·σ + Σ c_ij σ_i⊗σ_j].
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FanoCoefficients {
    pub a: [f64; 3],
    pub b: [f64; 3],
    pub c: [[f64; 3]; 3],
}

impl FanoCoefficients {
    /// Uncorrelated product of two qubit polarizations, c_ij = a_i b_j.
    pub fn product(a: [f64; 3], b: [f64; 3]) -> Self {
        let c = std::array::from_fn(|i| std::array::from_fn(|j| a[i] * b[j]));
        Self { a, b, c }
    }

    /// ¼[1 + Σa_i² + Σb_j² + Σc_ij²], which equals Tr ρ².
    pub fn purity(&self) -> f64 {
        let sq = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>();
        0.25 * (1.0 + sq(&self.a) + sq(&self.b) + self.c.iter().map(|r| sq(r)).sum::<f64>())
    }

    /// The composed matrix; Hermitian with unit trace, but not necessarily positive.
    pub fn matrix(&self) -> ComplexMatrix {
        let s = pauli();
        let id = ComplexMatrix::identity(2);
        let mut m = ComplexMatrix::identity(4);
        for i in 0..3 {
            m = &m + &s[i].kron(&id).scale_re(self.a[i]);
            m = &m + &id.kron(&s[i]).scale_re(self.b[i]);
            for j in 0..3 {
                m = &m + &s[i].kron(&s[j]).scale_re(self.c[i][j]);
            }
        }
        m.scale_re(0.25)
    }
}

fn pauli() -> [ComplexMatrix; 3] {
    let gs = generators(2).expect("n = 2 is supported");
    let mut it = gs.iter().cloned();
    std::array::from_fn(|_| it.next().expect("three Pauli matrices"))
}

/// Outcome of composing coefficients that may lie outside the state space.
#[derive(Debug, Clone)]
pub enum Composition {
    State(DensityMatrix),
    Unphysical { matrix: ComplexMatrix, violations: Vec<Violation> },
}

/// Composes and validates; coefficients outside the state space are rejected.
pub fn fano_compose(f: &FanoCoefficients) -> Result<DensityMatrix> {
    validate_density(f.matrix(), DEFAULT_TOL)
}

/// Composes, keeping unphysical results available for exploration.
pub fn fano_compose_lenient(f: &FanoCoefficients) -> Composition {
    let m = f.matrix();
    match validate_density(m.clone(), DEFAULT_TOL) {
        Ok(rho) => Composition::State(rho),
        Err(Error::InvalidDensity(violations)) => Composition::Unphysical { matrix: m, violations },
        Err(e) => unreachable!("validation of a well-formed 4×4 matrix failed with {e}"),
    }
}

/// a_i = Tr[ρ(σ_i⊗I)], b_j = Tr[ρ(I⊗σ_j)], c_ij = Tr[ρ(σ_i⊗σ_j)].
pub fn fano_extract(rho: &DensityMatrix) -> Result<FanoCoefficients> {
    fano_extract_matrix(rho.matrix())
}

/// As [`fano_extract`] for any 4×4 matrix; only the Hermitian part contributes.
pub fn fano_extract_matrix(m: &ComplexMatrix) -> Result<FanoCoefficients> {
    if m.dim() != 4 {
        return Err(Error::WrongDimension { expected: 4, got: m.dim() });
    }
    let s = pauli();
    let id = ComplexMatrix::identity(2);
    let tr = |op: ComplexMatrix| op.trace_adj_product(m).map(|z| z.re);
    let mut f = FanoCoefficients::default();
    for i in 0..3 {
        f.a[i] = tr(s[i].kron(&id))?;
        f.b[i] = tr(id.kron(&s[i]))?;
        for j in 0..3 {
            f.c[i][j] = tr(s[i].kron(&s[j]))?;
        }
    }
    Ok(f)
}

fn selector(which: u8) -> Result<()> {
    match which {
        1 | 2 => Ok(()),
        _ => Err(Error::Selector(which)),
    }
}

/// Reduced state of qubit 1 (½[I + a·σ]) or qubit 2 (½[I + b·σ]).
pub fn reduced(f: &FanoCoefficients, which: u8) -> Result<DensityMatrix> {
    selector(which)?;
    let p = if which == 1 { f.a } else { f.b };
    let s = pauli();
    let m = (0..3).fold(ComplexMatrix::identity(2), |acc, i| &acc + &s[i].scale_re(p[i]));
    validate_density(m.scale_re(0.5), DEFAULT_TOL)
}

/// Pair phase-space function indexed by (μ₁, ν₁, μ₂, ν₂) ∈ {0,1}⁴, stored lexicographically.
#[derive(Debug, Clone, PartialEq)]
pub struct PairWignerGrid {
    values: [f64; 16],
}

impl PairWignerGrid {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let got = values.len();
        let values: [f64; 16] = values.try_into().map_err(|_| Error::EntryCount { dim: 4, expected: 16, got })?;
        Ok(Self { values })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize, usize, usize) -> f64) -> Self {
        Self { values: std::array::from_fn(|k| f(k >> 3 & 1, k >> 2 & 1, k >> 1 & 1, k & 1)) }
    }

    pub fn get(&self, mu1: usize, nu1: usize, mu2: usize, nu2: usize) -> f64 {
        self.values[mu1 << 3 | nu1 << 2 | mu2 << 1 | nu2]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Points with their values, in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = ([usize; 4], f64)> + '_ {
        self.values.iter().enumerate().map(|(k, &w)| ([k >> 3 & 1, k >> 2 & 1, k >> 1 & 1, k & 1], w))
    }

    /// ¼ Σ W.
    pub fn normalization(&self) -> f64 {
        self.values.iter().sum::<f64>() / 4.0
    }

    /// ¼ Σ W².
    pub fn purity(&self) -> f64 {
        self.values.iter().map(|w| w * w).sum::<f64>() / 4.0
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|w| w.abs()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// ½ Σ over the other qubit's indices, giving that qubit's reduced grid.
    pub fn partial_sum(&self, keep: u8) -> Result<WignerGrid> {
        selector(keep)?;
        Ok(WignerGrid::from_fn(2, |mu, nu| {
            let mut s = 0.0;
            for m in 0..2 {
                for n in 0..2 {
                    s += if keep == 1 { self.get(mu, nu, m, n) } else { self.get(m, n, mu, nu) };
                }
            }
            s / 2.0
        }))
    }
}

/// Either a single-system grid or a pair grid.
#[derive(Debug, Clone, PartialEq)]
pub enum Grid {
    Wigner(WignerGrid),
    Pair(PairWignerGrid),
}

impl Grid {
    pub fn values(&self) -> &[f64] {
        match self {
            Grid::Wigner(g) => g.values(),
            Grid::Pair(g) => g.values(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.values().iter().map(|w| w.abs()).fold(0.0, f64::max)
    }
}

fn sign(e: usize) -> f64 {
    if e.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Pair Wigner function from the Fano coefficients (15-term sign expansion).
pub fn wigner_pair(f: &FanoCoefficients) -> PairWignerGrid {
    let [ax, ay, az] = f.a;
    let [bx, by, bz] = f.b;
    let [[cxx, cxy, cxz], [cyx, cyy, cyz], [czx, czy, czz]] = f.c;
    PairWignerGrid::from_fn(|m1, n1, m2, n2| {
        0.25 * (1.0
            + sign(n1) * ax
            + sign(m1 + n1 + 1) * ay
            + sign(m1) * az
            + sign(n2) * bx
            + sign(m2 + n2 + 1) * by
            + sign(m2) * bz
            + sign(n1 + n2) * cxx
            + sign(n1 + m2 + n2 + 1) * cxy
            + sign(n1 + m2) * cxz
            + sign(m1 + n1 + n2 + 1) * cyx
            + sign(m1 + n1 + m2 + n2) * cyy
            + sign(m1 + n1 + m2 + 1) * cyz
            + sign(m1 + n2) * czx
            + sign(m1 + m2 + n2 + 1) * czy
            + sign(m1 + m2) * czz)
    })
}

/// Pair Wigner function from the matrix elements (Γ-function form).
pub fn wigner_pair_from_matrix(rho: &DensityMatrix) -> Result<PairWignerGrid> {
    wigner_pair_from_elements(rho.matrix())
}

/// As [`wigner_pair_from_matrix`] for any 4×4 matrix; reads the diagonal and upper triangle.
pub fn wigner_pair_from_elements(m: &ComplexMatrix) -> Result<PairWignerGrid> {
    if m.dim() != 4 {
        return Err(Error::WrongDimension { expected: 4, got: m.dim() });
    }
    let r = |i: usize, j: usize| m[(i - 1, j - 1)];
    let (re, im) = (|z: Complex64| z.re, |z: Complex64| z.im);
    Ok(PairWignerGrid::from_fn(|m1, n1, m2, n2| {
        let (s1, s2, s12) = (sign(m1), sign(m2), sign(m1 + m2));
        let g11 = (s1 + s2 + s12) * re(r(1, 1));
        let g22 = (s1 - s2 - s12) * re(r(2, 2));
        let g33 = (-s1 + s2 - s12) * re(r(3, 3));
        let g44 = (-s1 - s2 + s12) * re(r(4, 4));
        let g12 = (1.0 + s1) * (re(r(1, 2)) + s2 * im(r(1, 2)));
        let g13 = (1.0 + s2) * (re(r(1, 3)) + s1 * im(r(1, 3)));
        let g14 = (1.0 - s12) * re(r(1, 4)) + (s1 + s2) * im(r(1, 4));
        let g23 = (1.0 + s12) * re(r(2, 3)) + (s1 - s2) * im(r(2, 3));
        let g24 = (1.0 - s2) * (re(r(2, 4)) + s1 * im(r(2, 4)));
        let g34 = (1.0 - s1) * (re(r(3, 4)) + s2 * im(r(3, 4)));
        0.25 * (1.0
            + g11
            + g22
            + g33
            + g44
            + 2.0 * sign(n1) * (g13 + g24)
            + 2.0 * sign(n2) * (g12 + g34)
            + 2.0 * sign(n1 + n2) * (g14 + g23))
    }))
}

/// Tr[(G†(μ₁,ν₁) ⊗ G†(μ₂,ν₂)) ρ] with qubit 1 as the left factor.
pub fn wigner_pair_kernel(rho: &DensityMatrix) -> Result<PairWignerGrid> {
    if rho.dim() != 4 {
        return Err(Error::WrongDimension { expected: 4, got: rho.dim() });
    }
    let k = kernel(2)?;
    let mut values = Vec::with_capacity(16);
    for (_, g1) in k.points() {
        for (_, g2) in k.points() {
            values.push(g1.kron(g2).trace_adj_product(rho.matrix())?.re);
        }
    }
    PairWignerGrid::new(values)
}

/// ½[1 + (−1)^ν p_x + (−1)^{μ+ν+1} p_y + (−1)^μ p_z] for qubit 1 (p = a) or 2 (p = b).
pub fn reduced_wigner(f: &FanoCoefficients, which: u8) -> Result<WignerGrid> {
    selector(which)?;
    let p = if which == 1 { f.a } else { f.b };
    Ok(WignerGrid::from_fn(2, |mu, nu| 0.5 * (1.0 + sign(nu) * p[0] + sign(mu + nu + 1) * p[1] + sign(mu) * p[2])))
}

/// Δ = W − 𝒲_R⁽¹⁾ 𝒲_R⁽²⁾.
pub fn delta_pair(f: &FanoCoefficients) -> PairWignerGrid {
    let w = wigner_pair(f);
    let r1 = reduced_wigner(f, 1).expect("valid selector");
    let r2 = reduced_wigner(f, 2).expect("valid selector");
    PairWignerGrid::from_fn(|m1, n1, m2, n2| w.get(m1, n1, m2, n2) - r1.get(m1, n1) * r2.get(m2, n2))
}

/// C₁ … C₁₅ with ρ = ¼(I + Σ C_i g_i) in the SU(4) generator basis.
pub fn su4_coefficients(f: &FanoCoefficients) -> [f64; 15] {
    let [ax, ay, az] = f.a;
    let [bx, by, bz] = f.b;
    let [[cxx, cxy, cxz], [cyx, cyy, cyz], [czx, czy, czz]] = f.c;
    [
        bx + czx,
        by + czy,
        bz + czz,
        ax + cxz,
        ay + cyz,
        cxx + cyy,
        -cxy + cyx,
        (2.0 * az - bz + czz) / 3f64.sqrt(),
        cxx - cyy,
        cxy + cyx,
        ax - cxz,
        ay - cyz,
        bx - czx,
        by - czy,
        (2.0 * az + 2.0 * bz - 2.0 * czz) / 6f64.sqrt(),
    ]
}

/// Ququart level 2i + j of the two-qubit basis state |i⟩|j⟩.
pub fn pair_index_map(i: u8, j: u8) -> usize {
    assert!(i <= 1 && j <= 1, "bits expected, got ({i}, {j})");
    2 * i as usize + j as usize
}
