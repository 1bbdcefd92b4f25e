//! Numerical tolerances, kept in one place so they can be tightened or
//! relaxed consistently.

/// Pure-state amplitude vectors must have Euclidean norm 1 within this.
pub const NORM_TOL: f64 = 1e-12;

/// Entrywise Hermiticity tolerance for density matrices.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Density-matrix trace must equal 1 within this.
pub const TRACE_TOL: f64 = 1e-10;

/// Eigenvalues of a density matrix may undershoot zero by this much.
pub const PSD_TOL: f64 = 1e-10;

/// Squared Schmidt coefficients must sum to 1 within this.
pub const SPECTRUM_SUM_TOL: f64 = 1e-10;

/// Entanglement entropy may overshoot 1 by this much before clamping.
pub const ENTROPY_RANGE_TOL: f64 = 1e-12;

/// Max-norm tolerance on `U†U - I` for a matrix to count as unitary.
pub const UNITARY_TOL: f64 = 1e-10;

/// Largest imaginary residue tolerated when `⟨a|ρ|a⟩` should be real.
pub const IMAG_RESIDUE_TOL: f64 = 1e-10;

/// Absolute tolerance for adaptive quadrature.
pub const QUAD_TOL: f64 = 1e-10;

/// Normalized histogram mass must sum to 1 within this.
pub const HIST_MASS_TOL: f64 = 1e-12;
