//! Seeded random states shared by unit tests.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{validate_density, ComplexMatrix, DensityMatrix, DEFAULT_TOL};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(r: &mut impl Rng) -> Complex64 {
    Complex64::new(r.sample(StandardNormal), r.sample(StandardNormal))
}

pub fn random_matrix(r: &mut impl Rng, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |_, _| gaussian(r))
}

pub fn random_hermitian(r: &mut impl Rng, n: usize) -> ComplexMatrix {
    random_matrix(r, n).hermitian_part()
}

/// Ginibre-distributed full-rank density matrix.
pub fn random_density(r: &mut impl Rng, n: usize) -> DensityMatrix {
    let a = random_matrix(r, n);
    let m = &a * &a.adjoint();
    let m = m.scale_re(1.0 / m.trace().re);
    validate_density(m, DEFAULT_TOL).expect("Ginibre sample is a state")
}

pub fn random_pure(r: &mut impl Rng, n: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..n).map(|_| gaussian(r)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}
