//! Single-ququart parity determination: |1⟩ → F|1⟩ → Û_k F|1⟩ → F†Û_k F|1⟩, then measure.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::generators::wigner_su4_matrix;
use crate::kernel::WignerGrid;
use crate::linalg::ComplexMatrix;

const NORM_TOL: f64 = 1e-12;

/// Snapshot labels, one per evolution step.
pub const STEP_LABELS: [&str; 4] = ["step0_initial", "step1_fourier", "step2_pulse", "step3_inverse_fourier"];

/// Normalized ququart state vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureState4 {
    amplitudes: [Complex64; 4],
}

impl PureState4 {
    pub fn new(amplitudes: [Complex64; 4]) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { amplitudes })
    }

    /// Computational basis state |k⟩.
    pub fn basis(k: usize) -> Self {
        let mut amplitudes = [Complex64::new(0.0, 0.0); 4];
        amplitudes[k] = Complex64::new(1.0, 0.0);
        Self { amplitudes }
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amplitudes
    }

    /// U|ψ⟩ for a unitary U.
    pub fn evolve(&self, u: &ComplexMatrix) -> Self {
        let v = u.apply(&self.amplitudes);
        Self { amplitudes: [v[0], v[1], v[2], v[3]] }
    }

    /// |ψ⟩⟨ψ|.
    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::projector(&self.amplitudes)
    }

    pub fn probabilities(&self) -> [f64; 4] {
        self.amplitudes.map(|z| z.norm_sqr())
    }
}

/// Born-rule probabilities |a_k|² of a normalized 4-component state.
pub fn measure_probabilities(amplitudes: &[Complex64]) -> Result<[f64; 4]> {
    let a: [Complex64; 4] =
        amplitudes.try_into().map_err(|_| Error::WrongDimension { expected: 4, got: amplitudes.len() })?;
    Ok(PureState4::new(a)?.probabilities())
}

/// Discrete Fourier operator with F⁴ = I.
pub fn fourier4() -> ComplexMatrix {
    let i = Complex64::new(0.0, 1.0);
    ComplexMatrix::from_fn(4, |r, c| i.powu((r * c) as u32) * 0.5)
}

/// The permutation pulses Û₂ and Û₆.
pub fn permutation_pulse(k: u8) -> Result<ComplexMatrix> {
    let rows = match k {
        2 => [[0.0, 0.0, 0.0, 1.0], [1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0]],
        6 => [[0.0, 0.0, 1.0, 0.0], [0.0, 1.0, 0.0, 0.0], [1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 1.0]],
        _ => return Err(Error::Pulse(k)),
    };
    Ok(ComplexMatrix::from_real(rows))
}

/// Parity read off the measured level: |1⟩ positive, |3⟩ negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Positive,
    Negative,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Positive => "positive",
            Parity::Negative => "negative",
        })
    }
}

/// One evolution record.
#[derive(Debug, Clone)]
pub struct Step {
    pub label: &'static str,
    pub state: PureState4,
    pub wigner: WignerGrid,
}

/// Measurement record: the distribution and its most likely level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measurement {
    pub probabilities: [f64; 4],
    pub level: usize,
    pub probability: f64,
}

#[derive(Debug, Clone)]
pub struct AlgorithmTrace {
    pub steps: Vec<Step>,
    pub measurement: Measurement,
    pub parity: Parity,
}

/// Ideal run with pulse Û_k.
pub fn run_parity_algorithm(k: u8) -> Result<AlgorithmTrace> {
    run_parity_algorithm_noisy(k, 0.0)
}

/// Run with every snapshot and the measurement mixed as (1−ε)ρ + εI/4.
pub fn run_parity_algorithm_noisy(k: u8, eps: f64) -> Result<AlgorithmTrace> {
    let pulse = permutation_pulse(k)?;
    if !(0.0..1.0).contains(&eps) {
        return Err(Error::OutOfRange { name: "noise", value: eps, range: "[0, 1)" });
    }
    let f = fourier4();
    let s0 = PureState4::basis(1);
    let s1 = s0.evolve(&f);
    let s2 = s1.evolve(&pulse);
    let s3 = s2.evolve(&f.adjoint());
    let mix = |m: ComplexMatrix| &m.scale_re(1.0 - eps) + &ComplexMatrix::identity(4).scale_re(eps / 4.0);
    let steps = [s0, s1, s2, s3]
        .into_iter()
        .zip(STEP_LABELS)
        .map(|(state, label)| Ok(Step { label, state, wigner: wigner_su4_matrix(&mix(state.projector()))? }))
        .collect::<Result<Vec<_>>>()?;
    let probabilities = s3.probabilities().map(|p| (1.0 - eps) * p + eps / 4.0);
    let (level, probability) = probabilities
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (k, p)| if p > best.1 { (k, p) } else { best });
    let parity = match level {
        1 => Parity::Positive,
        3 => Parity::Negative,
        _ => unreachable!("pulses 2 and 6 end in level 1 or 3"),
    };
    Ok(AlgorithmTrace { steps, measurement: Measurement { probabilities, level, probability }, parity })
}
