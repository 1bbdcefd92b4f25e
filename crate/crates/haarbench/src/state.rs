//! Exact state algebra for bipartite d×d systems.
//!
//! States are small (local dimension 2–6 in practice), so everything here is
//! dense and exact up to floating point: fidelities, partial traces, Schmidt
//! decomposition, entanglement entropy, and local-unitary action. All types
//! are immutable after construction and all operations are pure functions.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Which subsystem of a bipartite state an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

// ---------------------------------------------------------------------------
// PureState
// ---------------------------------------------------------------------------

/// A bipartite d×d pure state.
///
/// Amplitudes are stored row-major over the computational basis with index
/// `k = i·d + j` encoding `|i_a, j_b⟩`, so reshaping into the d×d coefficient
/// matrix is trivial. The vector is unit-norm within [`tol::NORM_TOL`].
#[derive(Debug, Clone)]
pub struct PureState {
    local_dim: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Build a state from already-normalized amplitudes.
    pub fn new(local_dim: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_local_dim(local_dim)?;
        if amplitudes.len() != local_dim * local_dim {
            return Err(Error::BadAmplitudeCount {
                got: amplitudes.len(),
                expected: local_dim * local_dim,
            });
        }
        let norm = vec_norm(&amplitudes);
        if (norm - 1.0).abs() > tol::NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self {
            local_dim,
            amplitudes,
        })
    }

    /// Build a state from arbitrary amplitudes, normalizing them.
    pub fn from_unnormalized(local_dim: usize, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        check_local_dim(local_dim)?;
        if amplitudes.len() != local_dim * local_dim {
            return Err(Error::BadAmplitudeCount {
                got: amplitudes.len(),
                expected: local_dim * local_dim,
            });
        }
        let norm = vec_norm(&amplitudes);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        for a in &mut amplitudes {
            *a /= norm;
        }
        Ok(Self {
            local_dim,
            amplitudes,
        })
    }

    /// The computational basis state `|i_a, j_b⟩`.
    pub fn basis_state(local_dim: usize, i: usize, j: usize) -> Result<Self> {
        check_local_dim(local_dim)?;
        if i >= local_dim || j >= local_dim {
            return Err(Error::OutOfRange {
                param: "basis index",
                value: i.max(j) as f64,
                lo: 0.0,
                hi: (local_dim - 1) as f64,
            });
        }
        let mut amplitudes = vec![Complex64::ZERO; local_dim * local_dim];
        amplitudes[i * local_dim + j] = Complex64::ONE;
        Ok(Self {
            local_dim,
            amplitudes,
        })
    }

    /// The separable reference `|0, 0⟩`.
    pub fn zero_state(local_dim: usize) -> Result<Self> {
        Self::basis_state(local_dim, 0, 0)
    }

    /// The maximally entangled state `Σ_n |n, n⟩ / √d`.
    pub fn max_entangled(local_dim: usize) -> Result<Self> {
        check_local_dim(local_dim)?;
        let mut amplitudes = vec![Complex64::ZERO; local_dim * local_dim];
        let c = Complex64::new(1.0 / (local_dim as f64).sqrt(), 0.0);
        for n in 0..local_dim {
            amplitudes[n * local_dim + n] = c;
        }
        Ok(Self {
            local_dim,
            amplitudes,
        })
    }

    /// The Schmidt-diagonal state `|I_s⟩ = Σ_n s_n |n, n⟩`.
    pub fn schmidt_diagonal(spectrum: &SchmidtSpectrum) -> Self {
        let d = spectrum.local_dim();
        let mut amplitudes = vec![Complex64::ZERO; d * d];
        for (n, &s) in spectrum.coefficients().iter().enumerate() {
            amplitudes[n * d + n] = Complex64::new(s, 0.0);
        }
        // Spectrum normalization is 1e-10 grade; bring the vector to 1e-16.
        Self::from_unnormalized(d, amplitudes).expect("valid spectrum gives a nonzero vector")
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    /// Total Hilbert-space dimension d².
    pub fn total_dim(&self) -> usize {
        self.local_dim * self.local_dim
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Amplitude of the basis state `|i_a, j_b⟩`.
    pub fn amplitude(&self, i: usize, j: usize) -> Complex64 {
        self.amplitudes[i * self.local_dim + j]
    }

    /// Inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &PureState) -> Result<Complex64> {
        check_same_dim(self.local_dim, other.local_dim)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// The d×d coefficient matrix `M[i][j] = amplitudes[i·d + j]`.
    pub fn coefficient_matrix(&self) -> DMatrix<Complex64> {
        let d = self.local_dim;
        DMatrix::from_fn(d, d, |i, j| self.amplitudes[i * d + j])
    }
}

// ---------------------------------------------------------------------------
// DensityMatrix
// ---------------------------------------------------------------------------

/// A mixed state: Hermitian, unit-trace, positive semidefinite (all within
/// the tolerances in [`tol`]).
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    entries: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validate arbitrary entries as a density matrix.
    ///
    /// Checks squareness, Hermiticity, unit trace, and positive
    /// semidefiniteness (eigenvalues ≥ −[`tol::PSD_TOL`]).
    pub fn new(entries: DMatrix<Complex64>) -> Result<Self> {
        if entries.nrows() != entries.ncols() {
            return Err(Error::NotSquare {
                rows: entries.nrows(),
                cols: entries.ncols(),
            });
        }
        if entries.nrows() < 2 {
            return Err(Error::LocalDimTooSmall(entries.nrows()));
        }
        let dm = Self { entries };
        dm.validate()?;
        Ok(dm)
    }

    /// Wrap entries produced by an operation that preserves the invariants
    /// (outer product of a unit vector, depolarization, partial trace).
    pub(crate) fn from_trusted(entries: DMatrix<Complex64>) -> Self {
        debug_assert_eq!(entries.nrows(), entries.ncols());
        Self { entries }
    }

    /// The projector `|ψ⟩⟨ψ|`.
    pub fn from_pure(psi: &PureState) -> Self {
        let n = psi.total_dim();
        let a = psi.amplitudes();
        Self::from_trusted(DMatrix::from_fn(n, n, |k, l| a[k] * a[l].conj()))
    }

    /// The maximally mixed state `I_n / n`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::LocalDimTooSmall(dim));
        }
        let x = Complex64::new(1.0 / dim as f64, 0.0);
        Ok(Self::from_trusted(DMatrix::from_diagonal_element(
            dim, dim, x,
        )))
    }

    /// Total Hilbert-space dimension.
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.diagonal().sum()
    }

    /// Eigenvalues of the (Hermitian) matrix, descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self
            .entries
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        ev
    }

    /// Re-check the density-matrix invariants.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let mut max_dev: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let dev = (self.entries[(i, j)] - self.entries[(j, i)].conj()).norm();
                max_dev = max_dev.max(dev);
            }
        }
        if max_dev > tol::HERMITIAN_TOL {
            return Err(Error::NotHermitian { max_dev });
        }
        let trace = self.trace();
        if (trace.re - 1.0).abs() > tol::TRACE_TOL || trace.im.abs() > tol::TRACE_TOL {
            return Err(Error::BadTrace { trace: trace.re });
        }
        if let Some(&lambda_min) = self.eigenvalues().last().filter(|&&l| l < -tol::PSD_TOL) {
            return Err(Error::NotPositiveSemidefinite(lambda_min));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// SchmidtSpectrum and EntropyValue
// ---------------------------------------------------------------------------

/// Ordered Schmidt coefficients `s_1 ≥ s_2 ≥ … ≥ s_d ≥ 0` with `Σ s_i² = 1`.
///
/// Coefficients below 1e-12 are kept rather than truncated, so the spectrum
/// length always equals the local dimension; they contribute zero entropy.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtSpectrum {
    coefficients: Vec<f64>,
}

impl SchmidtSpectrum {
    /// Validate and sort (descending) a coefficient vector.
    pub fn new(mut coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(Error::InvalidSpectrum(format!(
                "need at least 2 coefficients, got {}",
                coefficients.len()
            )));
        }
        for &s in &coefficients {
            if !s.is_finite() || s < 0.0 {
                return Err(Error::InvalidSpectrum(format!(
                    "coefficient {s} is negative or not finite"
                )));
            }
        }
        let sum_sq: f64 = coefficients.iter().map(|s| s * s).sum();
        if (sum_sq - 1.0).abs() > tol::SPECTRUM_SUM_TOL {
            return Err(Error::InvalidSpectrum(format!(
                "squared coefficients sum to {sum_sq}, not 1"
            )));
        }
        coefficients.sort_by(|a, b| b.partial_cmp(a).expect("finite coefficients"));
        Ok(Self { coefficients })
    }

    /// The flat spectrum `(1/√d, …, 1/√d)`.
    pub fn maximally_entangled(local_dim: usize) -> Result<Self> {
        check_local_dim(local_dim)?;
        Self::new(vec![1.0 / (local_dim as f64).sqrt(); local_dim])
    }

    /// The separable spectrum `(1, 0, …, 0)`.
    pub fn separable(local_dim: usize) -> Result<Self> {
        check_local_dim(local_dim)?;
        let mut c = vec![0.0; local_dim];
        c[0] = 1.0;
        Self::new(c)
    }

    /// The qubit spectrum `(√((1+γ)/2), √((1−γ)/2))`.
    pub fn from_gamma(gamma: f64) -> Result<Self> {
        check_unit_range("gamma", gamma)?;
        Self::new(vec![
            ((1.0 + gamma) / 2.0).sqrt(),
            ((1.0 - gamma) / 2.0).sqrt(),
        ])
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Number of coefficients, i.e. the local dimension.
    pub fn local_dim(&self) -> usize {
        self.coefficients.len()
    }

    /// Entanglement entropy `−Σ s_i² log_d(s_i²)` in base-d units.
    ///
    /// Terms with `s_i = 0` contribute zero, and the result is clamped to
    /// `[0, 1]` to absorb floating-point overshoot near maximal entanglement.
    pub fn entropy(&self) -> EntropyValue {
        let d = self.local_dim() as f64;
        let ln_d = d.ln();
        let mut e = 0.0;
        for &s in &self.coefficients {
            let p = s * s;
            if p > 0.0 {
                e -= p * p.ln() / ln_d;
            }
        }
        EntropyValue::new(e.clamp(0.0, 1.0)).expect("clamped entropy is in range")
    }
}

/// Entanglement entropy in base-d units, so the value lies in `[0, 1]` for
/// every local dimension.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntropyValue {
    value: f64,
}

impl EntropyValue {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || !(0.0..=1.0 + tol::ENTROPY_RANGE_TOL).contains(&value) {
            return Err(Error::OutOfRange {
                param: "entropy",
                value,
                lo: 0.0,
                hi: 1.0,
            });
        }
        Ok(Self {
            value: value.min(1.0),
        })
    }

    pub fn value(&self) -> f64 {
        self.value
    }
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Fidelity `|⟨a|b⟩|²` between two pure states.
pub fn fidelity_pure_pure(a: &PureState, b: &PureState) -> Result<f64> {
    let ip = a.inner(b)?;
    Ok(ip.norm_sqr().clamp(0.0, 1.0))
}

/// Fidelity `⟨a|ρ|a⟩` of a pure state against a mixed state.
pub fn fidelity_pure_mixed(a: &PureState, rho: &DensityMatrix) -> Result<f64> {
    check_same_dim(a.total_dim(), rho.dim())?;
    let amps = a.amplitudes();
    let mut q = Complex64::ZERO;
    for k in 0..amps.len() {
        for l in 0..amps.len() {
            q += amps[k].conj() * rho.entries()[(k, l)] * amps[l];
        }
    }
    debug_assert!(
        q.im.abs() <= tol::IMAG_RESIDUE_TOL,
        "⟨a|ρ|a⟩ has imaginary residue {}",
        q.im
    );
    Ok(q.re.clamp(0.0, 1.0))
}

/// Partial trace of `|ψ⟩⟨ψ|` keeping the given side; a d×d density matrix.
pub fn reduced_state(psi: &PureState, keep: Side) -> DensityMatrix {
    let d = psi.local_dim();
    let m = psi.coefficient_matrix();
    let entries = match keep {
        // ρ_A[i,i'] = Σ_j M[i,j] conj(M[i',j])
        Side::A => DMatrix::from_fn(d, d, |i, i2| {
            (0..d).map(|j| m[(i, j)] * m[(i2, j)].conj()).sum()
        }),
        // ρ_B[j,j'] = Σ_i M[i,j] conj(M[i,j'])
        Side::B => DMatrix::from_fn(d, d, |j, j2| {
            (0..d).map(|i| m[(i, j)] * m[(i, j2)].conj()).sum()
        }),
    };
    DensityMatrix::from_trusted(entries)
}

/// Partial trace of an n×n matrix over one side of a d×d bipartition.
pub(crate) fn partial_trace_matrix(
    m: &DMatrix<Complex64>,
    d: usize,
    traced: Side,
) -> DMatrix<Complex64> {
    match traced {
        Side::A => DMatrix::from_fn(d, d, |j, j2| {
            (0..d).map(|i| m[(i * d + j, i * d + j2)]).sum()
        }),
        Side::B => DMatrix::from_fn(d, d, |i, i2| {
            (0..d).map(|j| m[(i * d + j, i2 * d + j)]).sum()
        }),
    }
}

/// Schmidt coefficients of a bipartite pure state: the singular values of
/// its d×d coefficient matrix.
pub fn schmidt_decompose(psi: &PureState) -> SchmidtSpectrum {
    let sv = psi.coefficient_matrix().singular_values();
    SchmidtSpectrum::new(sv.iter().copied().collect())
        .expect("singular values of a unit-norm matrix form a valid spectrum")
}

/// Entanglement entropy of a bipartite pure state in base-d units.
pub fn entanglement_entropy(psi: &PureState) -> EntropyValue {
    schmidt_decompose(psi).entropy()
}

/// Apply local unitaries: `(Ua ⊗ Ub)|ψ⟩`.
///
/// Both matrices must be d×d and unitary within [`tol::UNITARY_TOL`]. The
/// Schmidt spectrum (and hence entanglement) of the input is preserved.
pub fn apply_local_unitaries(
    psi: &PureState,
    ua: &DMatrix<Complex64>,
    ub: &DMatrix<Complex64>,
) -> Result<PureState> {
    let d = psi.local_dim();
    for u in [ua, ub] {
        if u.nrows() != d || u.ncols() != d {
            return Err(Error::NotSquare {
                rows: u.nrows(),
                cols: u.ncols(),
            });
        }
        let dev = unitary_deviation(u);
        if dev > tol::UNITARY_TOL {
            return Err(Error::NotUnitary { max_dev: dev });
        }
    }
    Ok(apply_local_unitaries_unchecked(psi, ua, ub))
}

/// `(Ua ⊗ Ub)|ψ⟩` without the unitarity check, for samplers whose matrices
/// are unitary by construction.
pub(crate) fn apply_local_unitaries_unchecked(
    psi: &PureState,
    ua: &DMatrix<Complex64>,
    ub: &DMatrix<Complex64>,
) -> PureState {
    let d = psi.local_dim();
    // (Ua ⊗ Ub)|ψ⟩ reshapes to Ua · M · Ubᵀ.
    let m2 = ua * psi.coefficient_matrix() * ub.transpose();
    let amplitudes = (0..d * d).map(|k| m2[(k / d, k % d)]).collect();
    PureState::from_unnormalized(d, amplitudes).expect("unitaries preserve the norm")
}

/// Max-norm of `U†U − I`.
pub fn unitary_deviation(u: &DMatrix<Complex64>) -> f64 {
    let n = u.ncols();
    let g = u.adjoint() * u;
    let mut dev: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j {
                Complex64::ONE
            } else {
                Complex64::ZERO
            };
            dev = dev.max((g[(i, j)] - target).norm());
        }
    }
    dev
}

fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

pub(crate) fn check_local_dim(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::LocalDimTooSmall(d));
    }
    Ok(())
}

fn check_same_dim(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

pub(crate) fn check_unit_range(param: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || !(0.0..=1.0).contains(&value) {
        return Err(Error::OutOfRange {
            param,
            value,
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(())
}
