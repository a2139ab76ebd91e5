//! Named two-qubit state families and their closed-form Wigner, marginal and Δ functions.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::generators::{delta4, surd_coefficient};
use crate::kernel::WignerGrid;
use crate::linalg::{validate_density, ComplexMatrix, DensityMatrix, DEFAULT_TOL};
use crate::two_qubit::{pair_index_map, Grid, PairWignerGrid};

fn sign(e: usize) -> f64 {
    if e.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfRange { name, value, range: "[0, 1]" })
    }
}

/// Phase-space representation of a two-qubit state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    /// SU(2)⊗SU(2), indexed by (μ₁, ν₁, μ₂, ν₂).
    Pair,
    /// SU(4), indexed by (μ, ν) ∈ Z₄ × Z₄.
    Su4,
}

impl FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pair" => Ok(Self::Pair),
            "su4" => Ok(Self::Su4),
            _ => Err(Error::UnknownRepresentation(s.to_string())),
        }
    }
}

/// The four Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellKind {
    PsiPlus,
    PsiMinus,
    PhiPlus,
    PhiMinus,
}

impl BellKind {
    pub const ALL: [BellKind; 4] = [BellKind::PsiPlus, BellKind::PsiMinus, BellKind::PhiPlus, BellKind::PhiMinus];

    fn plus(self) -> bool {
        matches!(self, BellKind::PsiPlus | BellKind::PhiPlus)
    }

    fn is_psi(self) -> bool {
        matches!(self, BellKind::PsiPlus | BellKind::PsiMinus)
    }
}

impl FromStr for BellKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "psi+" => Ok(Self::PsiPlus),
            "psi-" => Ok(Self::PsiMinus),
            "phi+" => Ok(Self::PhiPlus),
            "phi-" => Ok(Self::PhiMinus),
            _ => Err(Error::UnknownState(s.to_string())),
        }
    }
}

impl fmt::Display for BellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BellKind::PsiPlus => "psi+",
            BellKind::PsiMinus => "psi-",
            BellKind::PhiPlus => "phi+",
            BellKind::PhiMinus => "phi-",
        })
    }
}

/// Ψ± = (|01⟩ ± |10⟩)/√2, Φ± = (|00⟩ ± |11⟩)/√2 as density matrices.
pub fn bell(kind: BellKind) -> DensityMatrix {
    let (i, j) = if kind.is_psi() {
        (pair_index_map(0, 1), pair_index_map(1, 0))
    } else {
        (pair_index_map(0, 0), pair_index_map(1, 1))
    };
    let s = if kind.plus() { 0.5 } else { -0.5 };
    let m = ComplexMatrix::from_fn(4, |r, c| {
        let v = match (r == i || r == j, c == i || c == j) {
            (true, true) if r == c => 0.5,
            (true, true) => s,
            _ => 0.0,
        };
        Complex64::new(v, 0.0)
    });
    validate_density(m, DEFAULT_TOL).expect("Bell projector is a state")
}

/// Closed-form pair Wigner value of a Bell state; always ±½.
pub fn bell_wigner_pair(kind: BellKind, point: [usize; 4]) -> f64 {
    let [m1, n1, m2, n2] = point;
    let (sm, sn) = (sign(m1 + m2), sign(n1 + n2));
    let pm = if kind.plus() { 1.0 } else { -1.0 };
    if kind.is_psi() {
        0.25 * (1.0 - sm + pm * sn * (1.0 + sm))
    } else {
        0.25 * (1.0 + sm + pm * sn * (1.0 - sm))
    }
}

/// All 16 closed-form pair values of a Bell state.
pub fn bell_pair_grid(kind: BellKind) -> PairWignerGrid {
    PairWignerGrid::from_fn(|m1, n1, m2, n2| bell_wigner_pair(kind, [m1, n1, m2, n2]))
}

/// Closed-form SU(4) Wigner function of a Bell state.
pub fn bell_wigner_su4(kind: BellKind) -> WignerGrid {
    let pm = if kind.plus() { 1.0 } else { -1.0 };
    WignerGrid::from_fn(4, |mu, nu| {
        let (mu, nu) = (mu as i64, nu as i64);
        let pop = delta4(mu, 0) - delta4(mu, 1) - delta4(mu, 2) + delta4(mu, 3);
        let coh = 0.25 * surd_coefficient(mu, 1.5) * (nu as f64 * PI / 2.0).cos();
        if kind.is_psi() {
            0.25 - 0.25 * pop + pm * coh
        } else {
            0.25 + 0.25 * pop + pm * coh * sign(nu as usize)
        }
    })
}

/// Werner state ¼[I + ((1−4F)/3)(σx⊗σx + σy⊗σy + σz⊗σz)], with ρ_{Ψ−} at F = 1.
pub fn werner(f: f64) -> Result<DensityMatrix> {
    check_unit("F", f)?;
    let (d, m, o) = ((2.0 - 2.0 * f) / 6.0, (1.0 + 2.0 * f) / 6.0, (1.0 - 4.0 * f) / 6.0);
    let rho = ComplexMatrix::from_real([[d, 0.0, 0.0, 0.0], [0.0, m, o, 0.0], [0.0, o, m, 0.0], [0.0, 0.0, 0.0, d]]);
    validate_density(rho, DEFAULT_TOL)
}

/// Closed-form Werner Wigner function in either representation.
pub fn werner_wigner(f: f64, rep: Representation) -> Result<Grid> {
    check_unit("F", f)?;
    let k = (1.0 - 4.0 * f) / 3.0;
    Ok(match rep {
        Representation::Pair => Grid::Pair(PairWignerGrid::from_fn(|m1, n1, m2, n2| {
            0.25 * (1.0 + k * (sign(m1 + m2) + sign(m1 + n1 + m2 + n2) + sign(n1 + n2)))
        })),
        Representation::Su4 => Grid::Wigner(WignerGrid::from_fn(4, |mu, nu| {
            let (mu, nu) = (mu as i64, nu as i64);
            let pop = delta4(mu, 0) - delta4(mu, 1) - delta4(mu, 2) + delta4(mu, 3);
            0.25 + (1.0 - 4.0 * f) / 12.0 * (pop + surd_coefficient(mu, 1.5) * (nu as f64 * PI / 2.0).cos())
        })),
    })
}

/// Two-qubit state supported on the main diagonal and antidiagonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    pop: [f64; 4],
    rho14: Complex64,
    rho23: Complex64,
}

impl XState {
    /// Checks that populations are nonnegative and sum to one; coherence bounds are checked by
    /// [`XState::is_positive`] and [`XState::to_density`].
    pub fn new(rho11: f64, rho22: f64, rho33: f64, rho44: f64, rho14: Complex64, rho23: Complex64) -> Result<Self> {
        const NAMES: [&str; 4] = ["rho11", "rho22", "rho33", "rho44"];
        let pop = [rho11, rho22, rho33, rho44];
        for (k, &p) in pop.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFinite { row: k, col: k });
            }
            if p < -DEFAULT_TOL {
                return Err(Error::NegativePopulation { name: NAMES[k], value: p });
            }
        }
        if !(rho14.re.is_finite() && rho14.im.is_finite()) {
            return Err(Error::NonFinite { row: 0, col: 3 });
        }
        if !(rho23.re.is_finite() && rho23.im.is_finite()) {
            return Err(Error::NonFinite { row: 1, col: 2 });
        }
        let sum: f64 = pop.iter().sum();
        if (sum - 1.0).abs() > DEFAULT_TOL {
            return Err(Error::PopulationSum(sum));
        }
        Ok(Self { pop, rho14, rho23 })
    }

    /// Reads the six X entries of a 4×4 matrix, rejecting any other entry above the tolerance.
    pub fn from_matrix(m: &ComplexMatrix, tol: f64) -> Result<Self> {
        if m.dim() != 4 {
            return Err(Error::WrongDimension { expected: 4, got: m.dim() });
        }
        for i in 0..4 {
            for j in 0..4 {
                if i != j && i + j != 3 && m[(i, j)].norm() > tol {
                    return Err(Error::NotXState { row: i + 1, col: j + 1, magnitude: m[(i, j)].norm() });
                }
            }
        }
        let d = |i: usize| m[(i, i)].re;
        Self::new(d(0), d(1), d(2), d(3), m[(0, 3)], m[(1, 2)])
    }

    /// (ρ₁₁, ρ₂₂, ρ₃₃, ρ₄₄).
    pub fn populations(&self) -> [f64; 4] {
        self.pop
    }

    pub fn rho14(&self) -> Complex64 {
        self.rho14
    }

    pub fn rho23(&self) -> Complex64 {
        self.rho23
    }

    /// |ρ₁₄|² ≤ ρ₁₁ρ₄₄ and |ρ₂₃|² ≤ ρ₂₂ρ₃₃ within tolerance.
    pub fn is_positive(&self) -> bool {
        let [a, b, c, d] = self.pop;
        self.rho14.norm_sqr() <= a * d + DEFAULT_TOL && self.rho23.norm_sqr() <= b * c + DEFAULT_TOL
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::from_diagonal(&self.pop.map(|p| Complex64::new(p, 0.0)));
        m[(0, 3)] = self.rho14;
        m[(3, 0)] = self.rho14.conj();
        m[(1, 2)] = self.rho23;
        m[(2, 1)] = self.rho23.conj();
        m
    }

    pub fn to_density(&self) -> Result<DensityMatrix> {
        validate_density(self.to_matrix(), DEFAULT_TOL)
    }
}

/// X-state Wigner function: the reduced Γ form in the pair picture, the reduced Eq. 25 form in SU(4).
pub fn xstate_wigner(x: &XState, rep: Representation) -> Grid {
    let [r11, r22, r33, r44] = x.pop;
    let (r14, r23) = (x.rho14, x.rho23);
    match rep {
        Representation::Pair => Grid::Pair(PairWignerGrid::from_fn(|m1, n1, m2, n2| {
            let (s1, s2, s12) = (sign(m1), sign(m2), sign(m1 + m2));
            let diag = (s1 + s2 + s12) * r11 + (s1 - s2 - s12) * r22 + (-s1 + s2 - s12) * r33 + (-s1 - s2 + s12) * r44;
            let g14 = (1.0 - s12) * r14.re + (s1 + s2) * r14.im;
            let g23 = (1.0 + s12) * r23.re + (s1 - s2) * r23.im;
            0.25 * (1.0 + diag + 2.0 * sign(n1 + n2) * (g14 + g23))
        })),
        Representation::Su4 => Grid::Wigner(WignerGrid::from_fn(4, |mu, nu| {
            let p = sign(nu);
            let (mu, nu) = (mu as i64, nu as f64);
            let d = |k| delta4(mu, k);
            let (cq, sq) = ((nu * PI / 2.0).cos(), (nu * PI / 2.0).sin());
            0.25 + 0.25 * (3.0 * d(0) - d(1) - d(2) - d(3)) * r11
                - 0.25 * (d(0) - 3.0 * d(1) + d(2) + d(3)) * r22
                - 0.25 * (d(0) + d(1) - 3.0 * d(2) + d(3)) * r33
                - 0.25 * (d(0) + d(1) + d(2) - 3.0 * d(3)) * r44
                + 0.5 * surd_coefficient(mu, 1.5) * (cq * (r23.re + p * r14.re) - sq * (r23.im + p * r14.im))
        })),
    }
}

/// ν-independent reduced grid of qubit 1 or 2.
pub fn xstate_reduced_wigner(x: &XState, which: u8) -> Result<WignerGrid> {
    let [r11, r22, r33, r44] = x.pop;
    let z = match which {
        1 => r11 + r22 - r33 - r44,
        2 => r11 - r22 + r33 - r44,
        _ => return Err(Error::Selector(which)),
    };
    Ok(WignerGrid::from_fn(2, |mu, _| 0.5 * (1.0 + sign(mu) * z)))
}

/// Q_X(μ) and R_X(ν).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginalPair {
    pub q: [f64; 4],
    pub r: [f64; 4],
}

/// Q_X from the populations and R_X from the antidiagonal coherences, as printed in the paper.
///
/// Q_X is the half row sum of the SU(4) grid. The printed R_X carries half the coherence weight
/// of the half column sum; [`xstate_column_marginal`] gives the latter.
pub fn xstate_marginals(x: &XState) -> MarginalPair {
    let [r11, r22, r33, r44] = x.pop;
    let q = std::array::from_fn(|mu| {
        let d = |k| delta4(mu as i64, k);
        0.5 * (1.0 + (3.0 * d(0) - d(1) - d(2) - d(3)) * r11
            - (d(0) - 3.0 * d(1) + d(2) + d(3)) * r22
            - (d(0) + d(1) - 3.0 * d(2) + d(3)) * r33
            - (d(0) + d(1) + d(2) - 3.0 * d(3)) * r44)
    });
    let k = (2.0 - 2f64.sqrt()).sqrt() / 2.0;
    let r = std::array::from_fn(|nu| {
        let p = sign(nu);
        let (cq, sq) = ((nu as f64 * PI / 2.0).cos(), (nu as f64 * PI / 2.0).sin());
        0.5 + k * p * (cq * (x.rho14.re + p * x.rho23.re) - sq * (x.rho14.im + p * x.rho23.im))
    });
    MarginalPair { q, r }
}

/// ½ Σ_μ W_X(μ, ν) evaluated directly on the SU(4) grid.
pub fn xstate_column_marginal(x: &XState) -> [f64; 4] {
    let Grid::Wigner(w) = xstate_wigner(x, Representation::Su4) else { unreachable!() };
    std::array::from_fn(|nu| 0.5 * (0..4).map(|mu| w.get(mu, nu)).sum::<f64>())
}

/// Δ_X(μ,ν) = W_X(μ,ν) − Q_X(μ) R_X(ν), cell by cell in closed form.
pub fn xstate_delta(x: &XState) -> WignerGrid {
    let sp = ((2.0 + 2f64.sqrt()) / 2.0).sqrt();
    let sm = ((2.0 - 2f64.sqrt()) / 2.0).sqrt();
    let s = x.rho14 + x.rho23;
    let d = x.rho14 - x.rho23;
    let phase = [s.re, d.im, -s.re, -d.im];
    WignerGrid::from_fn(4, |mu, nu| {
        let rho = x.pop[mu];
        let amplitude = match mu {
            0 | 3 => -sm * (1.0 + 2f64.sqrt() * rho),
            _ => sp * (1.0 - (2.0 - 2f64.sqrt()) * rho),
        };
        amplitude * phase[nu]
    })
}

fn munro_g(gamma: f64) -> f64 {
    if gamma >= 2.0 / 3.0 {
        gamma / 2.0
    } else {
        1.0 / 3.0
    }
}

/// Maximally entangled mixed state of purity parameter γ.
pub fn munro(gamma: f64) -> Result<XState> {
    check_unit("gamma", gamma)?;
    let g = munro_g(gamma);
    XState::new(g, 1.0 - 2.0 * g, 0.0, g, Complex64::new(gamma / 2.0, 0.0), Complex64::new(0.0, 0.0))
}

/// Compact SU(4) Wigner function of the Munro state.
pub fn munro_wigner(gamma: f64) -> Result<WignerGrid> {
    check_unit("gamma", gamma)?;
    let g = munro_g(gamma);
    Ok(WignerGrid::from_fn(4, |mu, nu| {
        let d = |k| delta4(mu as i64, k);
        0.25 - 0.25 * (d(0) - 3.0 * d(1) + d(2) + d(3))
            + (d(0) - 2.0 * d(1) + d(3)) * g
            + gamma / 4.0 * surd_coefficient(mu as i64, 1.5) * sign(nu) * (nu as f64 * PI / 2.0).cos()
    }))
}

/// (1−x)|00⟩⟨00| + (x/2)(|01⟩⟨01| + |10⟩⟨10|) − (x/2)(|01⟩⟨10| + |10⟩⟨01|).
pub fn peres_horodecki(x: f64) -> Result<XState> {
    check_unit("x", x)?;
    XState::new(1.0 - x, x / 2.0, x / 2.0, 0.0, Complex64::new(0.0, 0.0), Complex64::new(-x / 2.0, 0.0))
}

/// Gisin state for amplitudes a > b ≥ 0 and mixing x.
pub fn gisin(a: f64, b: f64, x: f64) -> Result<XState> {
    if !(b >= 0.0 && a > b) {
        return Err(Error::OutOfRange { name: "b", value: b, range: "[0, a)" });
    }
    gisin_from_combinations(a * a - b * b, a * b, x)
}

/// Gisin state from the combinations a² − b² and ab, the only ones its matrix depends on.
///
/// The coherence bound |ρ₂₃|² ≤ ρ₂₂ρ₃₃ is not enforced; see [`XState::is_positive`].
pub fn gisin_from_combinations(diff: f64, prod: f64, x: f64) -> Result<XState> {
    check_unit("x", x)?;
    XState::new(
        (1.0 - x) / 2.0,
        (diff + 0.5) * x,
        -(diff - 0.5) * x,
        (1.0 - x) / 2.0,
        Complex64::new(0.0, 0.0),
        Complex64::new(-prod * x, 0.0),
    )
}
