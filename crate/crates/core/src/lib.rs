//! Discrete Wigner functions on finite phase spaces for qubits, two-qubit pairs and ququarts.
//!
//! The mod(N)-invariant kernel lives in [`kernel`], the SU(2)/SU(4) generator algebra and
//! closed-form Wigner functions in [`generators`], the Fano picture of two qubits in
//! [`two_qubit`], named state families in [`states`], and the single-ququart parity algorithm
//! in [`algorithm`].

pub mod algorithm;
pub mod error;
pub mod fidelity;
pub mod generators;
pub mod io;
pub mod kernel;
pub mod linalg;
pub mod states;
pub mod two_qubit;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result, Violation};
pub use kernel::{MappingKernel, SchwingerPair, WignerGrid};
pub use linalg::{ComplexMatrix, DensityMatrix, PositivityReport, DEFAULT_TOL};
pub use num_complex::Complex64;
pub use two_qubit::{FanoCoefficients, Grid, PairWignerGrid};
