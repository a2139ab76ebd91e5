//! Super-fidelity between density matrices, directly or through Wigner grids.

use crate::error::{Error, Result};
use crate::kernel::{kernel, overlap_from_grids, wigner_grid};
use crate::linalg::{purity, DensityMatrix};

fn combine(overlap: f64, pa: f64, pb: f64) -> f64 {
    overlap + (1.0 - pa).max(0.0).sqrt() * (1.0 - pb).max(0.0).sqrt()
}

fn check(a: &DensityMatrix, b: &DensityMatrix) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    Ok(())
}

/// Tr[ρσ] + √(1 − Tr ρ²) √(1 − Tr σ²) with traces taken on the matrices.
pub fn super_fidelity(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    check(a, b)?;
    let overlap = (a.matrix() * b.matrix()).trace().re;
    Ok(combine(overlap, purity(a), purity(b)))
}

/// As [`super_fidelity`], with every trace taken as a Wigner-grid overlap.
pub fn super_fidelity_via_grids(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    check(a, b)?;
    let k = kernel(a.dim())?;
    let (wa, wb) = (wigner_grid(a, &k)?, wigner_grid(b, &k)?);
    Ok(combine(overlap_from_grids(&wa, &wb)?, wa.purity(), wb.purity()))
}
