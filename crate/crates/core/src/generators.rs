//! SU(2) and SU(4) generators, their algebra, Bloch vectors and closed-form Wigner functions.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::{build_schwinger_pair, kernel, WignerGrid};
use crate::linalg::{ComplexMatrix, DensityMatrix, DEFAULT_TOL};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Ordered generators g₁ … g_{N²−1} of su(N).
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    dim: usize,
    gens: Vec<ComplexMatrix>,
}

impl GeneratorSet {
    /// Wraps arbitrary matrices, e.g. to probe the law checks with a broken set.
    pub fn from_matrices(dim: usize, gens: Vec<ComplexMatrix>) -> Result<Self> {
        for g in &gens {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: g.dim() });
            }
        }
        if gens.len() != dim * dim - 1 {
            return Err(Error::EntryCount { dim, expected: dim * dim - 1, got: gens.len() });
        }
        Ok(Self { dim, gens })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// g_i with the paper's 1-based index.
    pub fn get(&self, i: usize) -> Result<&ComplexMatrix> {
        if i == 0 || i > self.gens.len() {
            return Err(Error::GeneratorIndex { index: i, max: self.gens.len() });
        }
        Ok(&self.gens[i - 1])
    }

    pub fn iter(&self) -> impl Iterator<Item = &ComplexMatrix> {
        self.gens.iter()
    }
}

fn transition(n: usize, a: usize, b: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n);
    m[(a, b)] = ONE;
    m
}

fn sym(n: usize, a: usize, b: usize) -> ComplexMatrix {
    &transition(n, a, b) + &transition(n, b, a)
}

fn antisym(n: usize, a: usize, b: usize) -> ComplexMatrix {
    (&transition(n, a, b) - &transition(n, b, a)).scale(-I)
}

/// Pauli matrices for n = 2, the Appendix set g₁ … g₁₅ for n = 4.
pub fn generators(n: usize) -> Result<GeneratorSet> {
    let gens = match n {
        2 => vec![sym(2, 0, 1), antisym(2, 0, 1), ComplexMatrix::from_real([[1.0, 0.0], [0.0, -1.0]])],
        4 => {
            let diag = |d: [f64; 4]| ComplexMatrix::from_diagonal(&d.map(|x| Complex64::new(x, 0.0)));
            let s3 = 3f64.sqrt();
            let s6 = 6f64.sqrt();
            vec![
                sym(4, 0, 1),
                antisym(4, 0, 1),
                diag([1.0, -1.0, 0.0, 0.0]),
                sym(4, 0, 2),
                antisym(4, 0, 2),
                sym(4, 1, 2),
                antisym(4, 1, 2),
                diag([1.0 / s3, 1.0 / s3, -2.0 / s3, 0.0]),
                sym(4, 0, 3),
                antisym(4, 0, 3),
                sym(4, 1, 3),
                antisym(4, 1, 3),
                sym(4, 2, 3),
                antisym(4, 2, 3),
                diag([1.0 / s6, 1.0 / s6, 1.0 / s6, -3.0 / s6]),
            ]
        }
        _ => return Err(Error::UnsupportedDimension(n)),
    };
    Ok(GeneratorSet { dim: n, gens })
}

/// g_i of SU(4) evaluated from its polynomial in the Schwinger pair (U, V).
pub fn schwinger_expression(i: usize) -> Result<ComplexMatrix> {
    if i == 0 || i > 15 {
        return Err(Error::GeneratorIndex { index: i, max: 15 });
    }
    let p = build_schwinger_pair(4)?;
    // t(a, b) = U^a V^b
    let t = |a: i64, b: i64| p.weyl(a, b);
    let sum = |terms: &[(Complex64, i64, i64)]| {
        terms.iter().fold(ComplexMatrix::zeros(4), |acc, &(c, a, b)| &acc + &t(a, b).scale(c))
    };
    let s3 = 3f64.sqrt();
    let s6 = 6f64.sqrt();
    let m = match i {
        1 => {
            sum(&[(ONE, 0, 1), (ONE, 0, 3), (ONE, 1, 1), (ONE, 2, 1), (ONE, 3, 1), (-I, 1, 3), (-ONE, 2, 3), (I, 3, 3)])
                .scale_re(0.25)
        }
        2 => {
            sum(&[(ONE, 0, 1), (-ONE, 0, 3), (ONE, 1, 1), (ONE, 2, 1), (ONE, 3, 1), (I, 1, 3), (ONE, 2, 3), (-I, 3, 3)])
                .scale(-I / 4.0)
        }
        3 => sum(&[(ONE + I, 1, 0), (ONE * 2.0, 2, 0), (ONE - I, 3, 0)]).scale_re(0.25),
        4 => sum(&[(ONE, 0, 2), (ONE, 2, 2)]).scale_re(0.5),
        5 => sum(&[(ONE, 1, 2), (ONE, 3, 2)]).scale(-I / 2.0),
        6 => sum(&[
            (ONE, 0, 1),
            (ONE, 0, 3),
            (-I, 1, 1),
            (-ONE, 2, 1),
            (I, 3, 1),
            (-ONE, 1, 3),
            (ONE, 2, 3),
            (-ONE, 3, 3),
        ])
        .scale_re(0.25),
        7 => sum(&[
            (ONE, 0, 1),
            (-ONE, 0, 3),
            (-I, 1, 1),
            (-ONE, 2, 1),
            (I, 3, 1),
            (ONE, 1, 3),
            (-ONE, 2, 3),
            (ONE, 3, 3),
        ])
        .scale(-I / 4.0),
        8 => sum(&[(Complex64::new(3.0, -1.0), 1, 0), (-ONE * 2.0, 2, 0), (Complex64::new(3.0, 1.0), 3, 0)])
            .scale_re(1.0 / (4.0 * s3)),
        9 => {
            sum(&[(ONE, 0, 1), (ONE, 0, 3), (I, 1, 1), (-ONE, 2, 1), (-I, 3, 1), (ONE, 1, 3), (ONE, 2, 3), (ONE, 3, 3)])
                .scale_re(0.25)
        }
        10 => sum(&[
            (ONE, 0, 1),
            (-ONE, 0, 3),
            (I, 1, 1),
            (-ONE, 2, 1),
            (-I, 3, 1),
            (-ONE, 1, 3),
            (-ONE, 2, 3),
            (-ONE, 3, 3),
        ])
        .scale(I / 4.0),
        11 => sum(&[(ONE, 0, 2), (-ONE, 2, 2)]).scale_re(0.5),
        12 => sum(&[(ONE, 1, 2), (-ONE, 3, 2)]).scale_re(-0.5),
        13 => sum(&[
            (ONE, 0, 1),
            (ONE, 0, 3),
            (-ONE, 1, 1),
            (ONE, 2, 1),
            (-ONE, 3, 1),
            (I, 1, 3),
            (-ONE, 2, 3),
            (-I, 3, 3),
        ])
        .scale_re(0.25),
        14 => sum(&[
            (ONE, 0, 1),
            (-ONE, 0, 3),
            (-ONE, 1, 1),
            (ONE, 2, 1),
            (-ONE, 3, 1),
            (-I, 1, 3),
            (ONE, 2, 3),
            (I, 3, 3),
        ])
        .scale(-I / 4.0),
        15 => sum(&[(ONE, 1, 0), (I, 2, 0), (-ONE, 3, 0)]).scale(-I / s6),
        _ => unreachable!(),
    };
    Ok(m)
}

/// Dense 𝓕_ijk and 𝓓_ijk, indexed from 1 as in the paper.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    dim: usize,
    m: usize,
    f: Vec<f64>,
    d: Vec<f64>,
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        assert!((1..=self.m).contains(&i) && (1..=self.m).contains(&j) && (1..=self.m).contains(&k));
        ((i - 1) * self.m + (j - 1)) * self.m + (k - 1)
    }

    pub fn f(&self, i: usize, j: usize, k: usize) -> f64 {
        self.f[self.idx(i, j, k)]
    }

    pub fn d(&self, i: usize, j: usize, k: usize) -> f64 {
        self.d[self.idx(i, j, k)]
    }

    /// 𝓙 = 𝓓 + i𝓕.
    pub fn j(&self, i: usize, j: usize, k: usize) -> Complex64 {
        Complex64::new(self.d(i, j, k), self.f(i, j, k))
    }
}

fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    &(a * b) - &(b * a)
}

fn anticommutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    &(a * b) + &(b * a)
}

fn tr_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    let n = a.dim();
    let mut s = ZERO;
    for i in 0..n {
        for k in 0..n {
            s += a[(i, k)] * b[(k, i)];
        }
    }
    s
}

/// 𝓕_ijk = −(i/4) Tr[[g_i,g_j] g_k], 𝓓_ijk = ¼ Tr[{g_i,g_j} g_k].
pub fn structure_constants(gs: &GeneratorSet) -> StructureConstants {
    let m = gs.len();
    let mut f = vec![0.0; m * m * m];
    let mut d = vec![0.0; m * m * m];
    for (i, gi) in gs.iter().enumerate() {
        for (j, gj) in gs.iter().enumerate() {
            let c = commutator(gi, gj);
            let a = anticommutator(gi, gj);
            for (k, gk) in gs.iter().enumerate() {
                let at = (i * m + j) * m + k;
                f[at] = (-I / 4.0 * tr_product(&c, gk)).re;
                d[at] = (tr_product(&a, gk) / 4.0).re;
            }
        }
    }
    StructureConstants { dim: gs.dim(), m, f, d }
}

/// Largest residual of one algebraic law and whether it is within tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LawCheck {
    pub max_residual: f64,
    pub holds: bool,
}

impl LawCheck {
    fn new(max_residual: f64, tol: f64) -> Self {
        Self { max_residual, holds: max_residual <= tol }
    }
}

/// Per-law outcome of rules (i)–(ix).
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraReport {
    pub hermitian: LawCheck,
    pub traceless: LawCheck,
    pub orthonormal: LawCheck,
    pub commutator_closure: LawCheck,
    pub anticommutator_closure: LawCheck,
    pub jacobi_commutator: LawCheck,
    pub jacobi_anticommutator: LawCheck,
    pub triple_trace: LawCheck,
    pub quartic_trace: LawCheck,
}

impl AlgebraReport {
    pub fn laws(&self) -> [(&'static str, LawCheck); 9] {
        [
            ("(i) hermitian", self.hermitian),
            ("(ii) traceless", self.traceless),
            ("(iii) orthonormal", self.orthonormal),
            ("(iv) commutator closure", self.commutator_closure),
            ("(v) anticommutator closure", self.anticommutator_closure),
            ("(vi) jacobi", self.jacobi_commutator),
            ("(vii) mixed jacobi", self.jacobi_anticommutator),
            ("(viii) triple trace", self.triple_trace),
            ("(ix) quartic trace", self.quartic_trace),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.laws().iter().all(|(_, l)| l.holds)
    }
}

/// Checks every law exhaustively over all index tuples, to 1e-10.
pub fn verify_algebra(gs: &GeneratorSet) -> AlgebraReport {
    const TOL: f64 = 1e-10;
    let n = gs.dim();
    let g: Vec<&ComplexMatrix> = gs.iter().collect();
    let m = g.len();
    let sc = structure_constants(gs);
    let id = ComplexMatrix::identity(n);
    let worst = |a: f64, b: f64| a.max(b);

    let hermitian = g.iter().map(|x| x.hermiticity_defect()).fold(0.0, worst);
    let traceless = g.iter().map(|x| x.trace().norm()).fold(0.0, worst);
    let mut orthonormal = 0.0f64;
    let mut comm = 0.0f64;
    let mut anti = 0.0f64;
    let mut triple = 0.0f64;
    let products: Vec<ComplexMatrix> = (0..m * m).map(|k| g[k / m] * g[k % m]).collect();
    for i in 0..m {
        for j in 0..m {
            let delta = if i == j { 1.0 } else { 0.0 };
            orthonormal = orthonormal.max((tr_product(g[i], g[j]) - Complex64::new(2.0 * delta, 0.0)).norm());
            let mut c_rhs = ComplexMatrix::zeros(n);
            let mut a_rhs = id.scale_re(4.0 / n as f64 * delta);
            for (k, gk) in g.iter().enumerate() {
                c_rhs = &c_rhs + &gk.scale(I * 2.0 * sc.f(i + 1, j + 1, k + 1));
                a_rhs = &a_rhs + &gk.scale_re(2.0 * sc.d(i + 1, j + 1, k + 1));
                let t = tr_product(&products[i * m + j], gk);
                triple = triple.max((t - sc.j(i + 1, j + 1, k + 1) * 2.0).norm());
            }
            comm = comm.max(commutator(g[i], g[j]).max_abs_diff(&c_rhs));
            anti = anti.max(anticommutator(g[i], g[j]).max_abs_diff(&a_rhs));
        }
    }

    let mut jac = 0.0f64;
    let mut jac_mixed = 0.0f64;
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let (a, b, c) = (g[i], g[j], g[k]);
                let s = &(&commutator(a, &commutator(b, c)) + &commutator(b, &commutator(c, a)))
                    + &commutator(c, &commutator(a, b));
                jac = jac.max(s.max_abs_diff(&ComplexMatrix::zeros(n)));
                let s = &(&commutator(a, &anticommutator(b, c)) + &commutator(b, &anticommutator(c, a)))
                    + &commutator(c, &anticommutator(a, b));
                jac_mixed = jac_mixed.max(s.max_abs_diff(&ComplexMatrix::zeros(n)));
            }
        }
    }

    let mut quartic = 0.0f64;
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for l in 0..m {
                    let lhs = tr_product(&products[i * m + j], &products[k * m + l]);
                    let delta = if i == j && k == l { 4.0 / n as f64 } else { 0.0 };
                    let mut rhs = Complex64::new(delta, 0.0);
                    for p in 0..m {
                        rhs += sc.j(i + 1, j + 1, p + 1) * sc.j(p + 1, k + 1, l + 1) * 2.0;
                    }
                    quartic = quartic.max((lhs - rhs).norm());
                }
            }
        }
    }

    AlgebraReport {
        hermitian: LawCheck::new(hermitian, TOL),
        traceless: LawCheck::new(traceless, TOL),
        orthonormal: LawCheck::new(orthonormal, TOL),
        commutator_closure: LawCheck::new(comm, TOL),
        anticommutator_closure: LawCheck::new(anti, TOL),
        jacobi_commutator: LawCheck::new(jac, TOL),
        jacobi_anticommutator: LawCheck::new(jac_mixed, TOL),
        triple_trace: LawCheck::new(triple, TOL),
        quartic_trace: LawCheck::new(quartic, TOL),
    }
}

/// Generator mean values ⟨g_i⟩.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochVector {
    dim: usize,
    components: Vec<f64>,
}

impl BlochVector {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    /// ⟨g_i⟩ with the paper's 1-based index.
    pub fn get(&self, i: usize) -> f64 {
        self.components[i - 1]
    }

    pub fn norm_sq(&self) -> f64 {
        self.components.iter().map(|x| x * x).sum()
    }

    /// ρ = I/N + ½ Σ ⟨g_i⟩ g_i.
    pub fn to_matrix(&self, gs: &GeneratorSet) -> Result<ComplexMatrix> {
        if gs.dim() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: gs.dim() });
        }
        Ok(gs
            .iter()
            .zip(&self.components)
            .fold(ComplexMatrix::identity(self.dim).scale_re(1.0 / self.dim as f64), |acc, (g, &x)| {
                &acc + &g.scale_re(0.5 * x)
            }))
    }
}

/// ⟨g_i⟩ = Tr[g_i ρ].
pub fn bloch_vector(rho: &DensityMatrix, gs: &GeneratorSet) -> Result<BlochVector> {
    if rho.dim() != gs.dim() {
        return Err(Error::DimensionMismatch { left: rho.dim(), right: gs.dim() });
    }
    let components = gs.iter().map(|g| tr_product(g, rho.matrix()).re).collect();
    Ok(BlochVector { dim: rho.dim(), components })
}

fn sign(e: i64) -> f64 {
    if e.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// δ^[4]_{μ,k}: 1 when μ ≡ k (mod 4).
pub fn delta4(mu: i64, k: i64) -> f64 {
    if mu.rem_euclid(4) == k {
        1.0
    } else {
        0.0
    }
}

/// sin[(μ − h)π] / sin[(μ − h)π/4] for half-integer h.
pub fn surd_coefficient(mu: i64, h: f64) -> f64 {
    let x = (mu as f64 - h) * PI;
    x.sin() / (x / 4.0).sin()
}

fn check_point(mu: i64, nu: i64, n: usize) -> Result<()> {
    let r = 0..n as i64;
    if r.contains(&mu) && r.contains(&nu) {
        Ok(())
    } else {
        Err(Error::PointOutOfRange { mu, nu, dim: n })
    }
}

/// Closed-form phase-space representative (g_i)(μ,ν): Pauli signs for n = 2, the Appendix
/// mapped expressions for n = 4.
pub fn generator_representative(n: usize, i: usize, mu: i64, nu: i64) -> Result<f64> {
    let max = match n {
        2 => 3,
        4 => 15,
        _ => return Err(Error::UnsupportedDimension(n)),
    };
    if i == 0 || i > max {
        return Err(Error::GeneratorIndex { index: i, max });
    }
    check_point(mu, nu, n)?;
    if n == 2 {
        return Ok(match i {
            1 => sign(nu),
            2 => sign(mu + nu + 1),
            _ => sign(mu),
        });
    }
    let (cq, sq) = ((nu as f64 * PI / 2.0).cos(), (nu as f64 * PI / 2.0).sin());
    let (ch, sh) = ((nu as f64 * PI).cos(), (nu as f64 * PI).sin());
    let d = |k| delta4(mu, k);
    let c = |h| surd_coefficient(mu, h);
    let s3 = 3f64.sqrt();
    let s6 = 6f64.sqrt();
    Ok(match i {
        1 => 0.5 * cq * c(0.5),
        2 => 0.5 * sq * c(0.5),
        3 => d(0) - d(1),
        4 => 2.0 * ch * d(1),
        5 => 2.0 * sh * d(1),
        6 => 0.5 * cq * c(1.5),
        7 => 0.5 * sq * c(1.5),
        8 => (d(0) + d(1) - 2.0 * d(2)) / s3,
        9 => 0.5 * sign(nu) * cq * c(1.5),
        10 => 0.5 * sign(nu) * sq * c(1.5),
        11 => 2.0 * ch * d(2),
        12 => 2.0 * sh * d(2),
        13 => 0.5 * cq * c(2.5),
        14 => 0.5 * sq * c(2.5),
        _ => (d(0) + d(1) + d(2) - 3.0 * d(3)) / s6,
    })
}

/// (g_i)(μ,ν) = Tr[G†(μ,ν) g_i] through the mapping kernel.
pub fn kernel_representative(n: usize, i: usize, mu: i64, nu: i64) -> Result<f64> {
    let gs = generators(n)?;
    let g = gs.get(i)?;
    check_point(mu, nu, n)?;
    let k = kernel(n)?;
    Ok(k.at(mu as usize, nu as usize).trace_adj_product(g)?.re)
}

/// Qubit Wigner function from the polarization vector P.
pub fn wigner_su2(p: [f64; 3]) -> Result<WignerGrid> {
    let len = p.iter().map(|x| x * x).sum::<f64>().sqrt();
    if len > 1.0 + DEFAULT_TOL {
        return Err(Error::Polarization(len));
    }
    Ok(WignerGrid::from_fn(2, |mu, nu| {
        let (mu, nu) = (mu as i64, nu as i64);
        0.5 * (1.0 + sign(nu) * p[0] + sign(mu + nu + 1) * p[1] + sign(mu) * p[2])
    }))
}

/// Closed-form SU(4) Wigner function of a validated ququart state.
pub fn wigner_su4(rho: &DensityMatrix) -> Result<WignerGrid> {
    wigner_su4_matrix(rho.matrix())
}

/// Closed-form SU(4) Wigner function evaluated on the matrix elements of any 4×4 matrix.
///
/// Only the upper triangle and the real diagonal are read.
pub fn wigner_su4_matrix(m: &ComplexMatrix) -> Result<WignerGrid> {
    if m.dim() != 4 {
        return Err(Error::WrongDimension { expected: 4, got: m.dim() });
    }
    let r = |i: usize, j: usize| m[(i - 1, j - 1)];
    Ok(WignerGrid::from_fn(4, |mu, nu| {
        let (mu, nu) = (mu as i64, nu as i64);
        let d = |k| delta4(mu, k);
        let c = |h| surd_coefficient(mu, h);
        let (cq, sq) = ((nu as f64 * PI / 2.0).cos(), (nu as f64 * PI / 2.0).sin());
        let (ch, sh) = ((nu as f64 * PI).cos(), (nu as f64 * PI).sin());
        let f = |z: Complex64| cq * z.re - sq * z.im;
        let h = |z: Complex64| ch * z.re - sh * z.im;
        0.25 + 0.25 * (3.0 * d(0) - d(1) - d(2) - d(3)) * r(1, 1).re
            - 0.25 * (d(0) - 3.0 * d(1) + d(2) + d(3)) * r(2, 2).re
            - 0.25 * (d(0) + d(1) - 3.0 * d(2) + d(3)) * r(3, 3).re
            - 0.25 * (d(0) + d(1) + d(2) - 3.0 * d(3)) * r(4, 4).re
            + 0.5 * c(0.5) * f(r(1, 2))
            + 2.0 * d(1) * h(r(1, 3))
            + 0.5 * c(1.5) * sign(nu) * f(r(1, 4))
            + 0.5 * c(1.5) * f(r(2, 3))
            + 2.0 * d(2) * h(r(2, 4))
            + 0.5 * c(2.5) * f(r(3, 4))
    }))
}

/// W = 1/N + ½ Σ ⟨g_i⟩ (g_i)(μ,ν) with the closed-form representatives.
pub fn wigner_from_bloch(b: &BlochVector) -> Result<WignerGrid> {
    let n = b.dim();
    let mut values = Vec::with_capacity(n * n);
    for mu in 0..n as i64 {
        for nu in 0..n as i64 {
            let mut w = 1.0 / n as f64;
            for (i, x) in b.components().iter().enumerate() {
                w += 0.5 * x * generator_representative(n, i + 1, mu, nu)?;
            }
            values.push(w);
        }
    }
    WignerGrid::new(n, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::wigner_grid;
    use crate::linalg::{purity, validate_density};
    use crate::testutil::{random_density, rng};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn set_sizes_and_g8() {
        assert_eq!(generators(2).unwrap().len(), 3);
        assert_eq!(generators(4).unwrap().len(), 15);
        assert_eq!(generators(3).unwrap_err(), Error::UnsupportedDimension(3));
        let s3 = 3f64.sqrt();
        let g8 = ComplexMatrix::from_diagonal(&[c(1.0 / s3, 0.0), c(1.0 / s3, 0.0), c(-2.0 / s3, 0.0), c(0.0, 0.0)]);
        assert!(generators(4).unwrap().get(8).unwrap().max_abs_diff(&g8) < 1e-15);
        assert!(generators(4).unwrap().get(16).is_err());
    }

    #[test]
    fn basic_rules_all_pairs() {
        for n in [2, 4] {
            let gs = generators(n).unwrap();
            for (i, gi) in gs.iter().enumerate() {
                assert!(gi.hermiticity_defect() == 0.0);
                assert!(gi.trace().norm() < 1e-15);
                for (j, gj) in gs.iter().enumerate() {
                    let expect = if i == j { 2.0 } else { 0.0 };
                    assert!((tr_product(gi, gj) - c(expect, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn schwinger_table_examples() {
        let g3 = schwinger_expression(3).unwrap();
        assert!(
            g3.max_abs_diff(&ComplexMatrix::from_real([
                [1.0, 0.0, 0.0, 0.0],
                [0.0, -1.0, 0.0, 0.0],
                [0.0; 4],
                [0.0; 4]
            ])) < 1e-12
        );
        assert!(schwinger_expression(4).unwrap().max_abs_diff(&sym(4, 0, 2)) < 1e-12);
        let gs = generators(4).unwrap();
        for i in 1..=15 {
            assert!(schwinger_expression(i).unwrap().max_abs_diff(gs.get(i).unwrap()) < 1e-12, "g{i}");
        }
        assert!(schwinger_expression(0).is_err());
        assert!(schwinger_expression(16).is_err());
    }

    #[test]
    fn structure_constants_su2() {
        let sc = structure_constants(&generators(2).unwrap());
        let eps = |i: usize, j: usize, k: usize| {
            ((j as i64 - i as i64) * (k as i64 - i as i64) * (k as i64 - j as i64)) as f64 / 2.0
        };
        for i in 1..=3 {
            for j in 1..=3 {
                for k in 1..=3 {
                    assert_abs_diff_eq!(sc.f(i, j, k), eps(i, j, k), epsilon = 1e-12);
                    assert_abs_diff_eq!(sc.d(i, j, k), 0.0, epsilon = 1e-12);
                }
            }
        }
        assert_abs_diff_eq!(sc.f(1, 2, 3), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn structure_constant_symmetries() {
        let sc = structure_constants(&generators(4).unwrap());
        for i in 1..=15 {
            for j in 1..=15 {
                assert_abs_diff_eq!(sc.f(i, i, j), 0.0, epsilon = 1e-12);
                for k in 1..=15 {
                    assert_abs_diff_eq!(sc.f(i, j, k), -sc.f(j, i, k), epsilon = 1e-12);
                    assert_abs_diff_eq!(sc.f(i, j, k), sc.f(j, k, i), epsilon = 1e-12);
                    assert_abs_diff_eq!(sc.d(i, j, k), sc.d(j, i, k), epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn triple_trace_random_triples() {
        let gs = generators(4).unwrap();
        let sc = structure_constants(&gs);
        let mut r = rng(9);
        use rand::Rng;
        for _ in 0..50 {
            let (i, j, k) = (r.random_range(1..=15), r.random_range(1..=15), r.random_range(1..=15));
            let t = (gs.get(i).unwrap() * gs.get(j).unwrap()).trace_adj_product(gs.get(k).unwrap()).unwrap().conj();
            assert!((t - sc.j(i, j, k) * 2.0).norm() < 1e-12);
        }
    }

    #[test]
    fn algebra_reports() {
        assert!(verify_algebra(&generators(2).unwrap()).all_hold());
        let report = verify_algebra(&generators(4).unwrap());
        assert!(report.all_hold(), "{report:?}");
        let mut gens: Vec<ComplexMatrix> = generators(4).unwrap().iter().cloned().collect();
        gens[0] = gens[0].scale_re(2.0);
        let bad = verify_algebra(&GeneratorSet::from_matrices(4, gens).unwrap());
        assert!(!bad.orthonormal.holds);
        assert!(!bad.quartic_trace.holds);
        assert!(bad.hermitian.holds && bad.jacobi_commutator.holds);
    }

    #[test]
    fn bloch_examples() {
        let gs = generators(4).unwrap();
        let rho = random_density(&mut rng(1), 4);
        let b = bloch_vector(&rho, &gs).unwrap();
        let e = |i, j| rho.elem(i, j);
        assert_abs_diff_eq!(b.get(1), 2.0 * e(1, 2).re, epsilon = 1e-12);
        assert_abs_diff_eq!(b.get(2), -2.0 * e(1, 2).im, epsilon = 1e-12);
        assert_abs_diff_eq!(b.get(15), (e(1, 1) + e(2, 2) + e(3, 3) - e(4, 4) * 3.0).re / 6f64.sqrt(), epsilon = 1e-12);
        assert!(b.to_matrix(&gs).unwrap().max_abs_diff(rho.matrix()) < 1e-12);
        assert_abs_diff_eq!(purity(&rho), 0.25 + b.norm_sq() / 2.0, epsilon = 1e-12);
        assert!(b.norm_sq() <= 2.0 * (1.0 - 0.25) + 1e-10);
        let mixed = validate_density(ComplexMatrix::identity(4).scale_re(0.25), DEFAULT_TOL).unwrap();
        assert!(bloch_vector(&mixed, &gs).unwrap().components().iter().all(|x| x.abs() < 1e-15));
        assert!(bloch_vector(&mixed, &generators(2).unwrap()).is_err());
    }

    #[test]
    fn surds_match_exact_values() {
        let sp = ((2.0 + 2f64.sqrt()) / 2.0).sqrt();
        let sm = ((2.0 - 2f64.sqrt()) / 2.0).sqrt();
        let s2 = 2f64.sqrt();
        // ½c(μ,h) for μ = 0..3.
        let expected = [(0.5, [sp, sp, -sm, sm]), (1.5, [-sm, sp, sp, -sm]), (2.5, [sm, -sm, sp, sp])];
        for (h, row) in expected {
            for (mu, want) in row.iter().enumerate() {
                assert_abs_diff_eq!(0.5 * surd_coefficient(mu as i64, h), want, epsilon = 1e-12);
            }
        }
        assert_abs_diff_eq!(sp * sm, s2 / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn representative_examples() {
        for mu in 0..4 {
            for nu in 0..4 {
                assert_eq!(generator_representative(4, 3, mu, nu).unwrap(), delta4(mu, 0) - delta4(mu, 1));
                assert_abs_diff_eq!(generator_representative(4, 5, mu, nu).unwrap(), 0.0, epsilon = 1e-15);
                assert_abs_diff_eq!(generator_representative(4, 12, mu, nu).unwrap(), 0.0, epsilon = 1e-15);
            }
        }
        assert!(generator_representative(4, 16, 0, 0).is_err());
        assert!(generator_representative(4, 1, 4, 0).is_err());
        assert!(generator_representative(3, 1, 0, 0).is_err());
    }

    #[test]
    fn representatives_su2_equal_kernel_trace() {
        for i in 1..=3 {
            for mu in 0..2 {
                for nu in 0..2 {
                    assert_abs_diff_eq!(
                        generator_representative(2, i, mu, nu).unwrap(),
                        kernel_representative(2, i, mu, nu).unwrap(),
                        epsilon = 1e-12
                    );
                }
            }
        }
    }

    #[test]
    fn diagonal_su4_representatives_equal_kernel_trace() {
        // The diagonal generators agree; the off-diagonal closed forms do not (see the acceptance suite).
        for i in [3, 8, 15] {
            for mu in 0..4 {
                for nu in 0..4 {
                    assert_abs_diff_eq!(
                        generator_representative(4, i, mu, nu).unwrap(),
                        kernel_representative(4, i, mu, nu).unwrap(),
                        epsilon = 1e-12
                    );
                }
            }
        }
    }

    #[test]
    fn closed_forms_are_not_injective() {
        for mu in 0..4 {
            for nu in 0..4 {
                let g = |i| generator_representative(4, i, mu, nu).unwrap();
                assert_abs_diff_eq!(g(9), g(6), epsilon = 1e-12);
                assert_abs_diff_eq!(g(10), -g(7), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn wigner_su2_examples() {
        let w = wigner_su2([0.0, 0.0, 1.0]).unwrap();
        assert_eq!(w.values(), &[1.0, 1.0, 0.0, 0.0]);
        assert!(wigner_su2([0.0; 3]).unwrap().values().iter().all(|&x| x == 0.5));
        assert!(matches!(wigner_su2([1.0, 1.0, 0.0]), Err(Error::Polarization(_))));
        let rho = random_density(&mut rng(4), 2);
        let b = bloch_vector(&rho, &generators(2).unwrap()).unwrap();
        let w = wigner_su2([b.get(1), b.get(2), b.get(3)]).unwrap();
        let e = |i, j| rho.elem(i, j);
        assert_abs_diff_eq!(w.get(0, 0), e(1, 1).re + e(1, 2).re + e(1, 2).im, epsilon = 1e-12);
        let kw = wigner_grid(&rho, &kernel(2).unwrap()).unwrap();
        assert!(w.max_abs_diff(&kw) < 1e-12);
    }

    #[test]
    fn wigner_su4_examples() {
        let mixed = validate_density(ComplexMatrix::identity(4).scale_re(0.25), DEFAULT_TOL).unwrap();
        assert!(wigner_su4(&mixed).unwrap().values().iter().all(|&x| (x - 0.25).abs() < 1e-15));
        let rho = random_density(&mut rng(5), 4);
        let w = wigner_su4(&rho).unwrap();
        let e = |i, j| rho.elem(i, j);
        let sp = ((2.0 + 2f64.sqrt()) / 2.0).sqrt();
        let sm = ((2.0 - 2f64.sqrt()) / 2.0).sqrt();
        let w00 = e(1, 1).re + sp * e(1, 2).re - sm * (e(1, 4) + e(2, 3) - e(3, 4)).re;
        assert_abs_diff_eq!(w.get(0, 0), w00, epsilon = 1e-12);
        assert_abs_diff_eq!(w.normalization(), 1.0, epsilon = 1e-12);
        assert!(wigner_su4_matrix(&ComplexMatrix::identity(2)).is_err());
    }

    #[test]
    fn eq24_sum_equals_eq25() {
        let gs = generators(4).unwrap();
        for seed in 0..20 {
            let rho = random_density(&mut rng(seed), 4);
            let via_bloch = wigner_from_bloch(&bloch_vector(&rho, &gs).unwrap()).unwrap();
            assert!(via_bloch.max_abs_diff(&wigner_su4(&rho).unwrap()) < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn bloch_round_trip(seed in any::<u64>(), big in any::<bool>()) {
            let n = if big { 4 } else { 2 };
            let gs = generators(n).unwrap();
            let rho = random_density(&mut rng(seed), n);
            let b = bloch_vector(&rho, &gs).unwrap();
            prop_assert!(b.to_matrix(&gs).unwrap().max_abs_diff(rho.matrix()) < 1e-12);
            prop_assert!(b.norm_sq() <= 2.0 * (1.0 - 1.0 / n as f64) + 1e-10);
        }

        #[test]
        fn su4_normalization(seed in any::<u64>()) {
            let w = wigner_su4(&random_density(&mut rng(seed), 4)).unwrap();
            prop_assert!((w.normalization() - 1.0).abs() < 1e-12);
        }
    }
}
