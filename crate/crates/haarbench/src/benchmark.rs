//! Simulated noisy DQC device and its divergence benchmark.
//!
//! The device prepares an input state of fixed Schmidt spectrum, applies
//! independent Haar local unitaries, and then depolarizes each subsystem
//! with the same error probability ε. Fidelity samples against a separable
//! reference are histogrammed and compared to the error-free closed-form
//! distribution via Jensen-Shannon divergence.
//!
//! Noise is applied after the local unitaries; for Haar-distributed
//! unitaries the output distribution is the same whichever side of the
//! unitary the channel sits on. The channel acts exactly on the d²×d²
//! density matrix rather than by trajectory sampling, which is cheap at
//! these dimensions.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::analytic::AnalyticPdf;
use crate::error::{Error, Result};
use crate::histogram::{analytic_histogram, empirical_histogram, js_divergence};
use crate::rng::RandomStream;
use crate::sampling::sample_schmidt_fixed;
use crate::state::{
    check_unit_range, fidelity_pure_mixed, partial_trace_matrix, DensityMatrix, PureState,
    SchmidtSpectrum, Side,
};

/// Trials drawn from one substream; chunking is what makes parallel sweeps
/// reproducible independent of the worker count.
const TRIALS_PER_STREAM: usize = 1024;

/// Which input ensemble the device consumes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InputKind {
    /// Maximally entangled inputs at the configured dimension.
    MaxEnt,
    /// Fixed-γ two-qubit inputs (requires local dimension 2).
    Gamma(f64),
}

impl InputKind {
    /// The Schmidt spectrum of the input ensemble.
    pub fn spectrum(&self, local_dim: usize) -> Result<SchmidtSpectrum> {
        match *self {
            InputKind::MaxEnt => SchmidtSpectrum::maximally_entangled(local_dim),
            InputKind::Gamma(gamma) => {
                if local_dim != 2 {
                    return Err(Error::InvalidConfig(format!(
                        "gamma input is defined for local dimension 2, got {local_dim}"
                    )));
                }
                SchmidtSpectrum::from_gamma(gamma)
            }
        }
    }

    /// The error-free reference distribution for this ensemble.
    pub fn analytic_reference(&self, local_dim: usize) -> Result<AnalyticPdf> {
        match *self {
            InputKind::MaxEnt => AnalyticPdf::sep_maxent(local_dim),
            InputKind::Gamma(gamma) => {
                if local_dim != 2 {
                    return Err(Error::InvalidConfig(format!(
                        "gamma input is defined for local dimension 2, got {local_dim}"
                    )));
                }
                AnalyticPdf::sep_gamma(gamma)
            }
        }
    }
}

/// Full description of one benchmark sweep.
#[derive(Debug, Clone)]
pub struct BenchmarkConfig {
    pub local_dim: usize,
    pub input_kind: InputKind,
    pub epsilon_grid: Vec<f64>,
    pub samples_per_point: usize,
    pub bin_count: usize,
    pub seed: u64,
}

impl BenchmarkConfig {
    pub fn validate(&self) -> Result<()> {
        crate::state::check_local_dim(self.local_dim)?;
        for &eps in &self.epsilon_grid {
            check_unit_range("epsilon", eps)?;
        }
        if self.epsilon_grid.is_empty() {
            return Err(Error::InvalidConfig("empty epsilon grid".into()));
        }
        if self.samples_per_point == 0 {
            return Err(Error::InvalidConfig("samples_per_point must be ≥ 1".into()));
        }
        if self.bin_count < 2 {
            return Err(Error::TooFewBins(self.bin_count));
        }
        self.input_kind.spectrum(self.local_dim)?;
        Ok(())
    }
}

/// One row of a benchmark sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub eps: f64,
    pub js: f64,
}

/// Apply the depolarizing channel `Δ_ε(σ) = (1−ε)σ + ε·tr(σ)·I/d` to one
/// subsystem of a bipartite density matrix: `Δ_ε ⊗ id` or `id ⊗ Δ_ε`.
pub fn depolarize_local(rho: &DensityMatrix, side: Side, eps: f64) -> Result<DensityMatrix> {
    check_unit_range("epsilon", eps)?;
    let n = rho.dim();
    let d = (n as f64).sqrt().round() as usize;
    if d * d != n || d < 2 {
        return Err(Error::NotBipartite(n));
    }
    // (Δ_ε ⊗ id)(ρ) = (1−ε)ρ + ε·(I_d/d) ⊗ tr_A(ρ), and symmetrically for B.
    let keep = partial_trace_matrix(rho.entries(), d, side);
    let eye = DMatrix::from_diagonal_element(d, d, Complex64::new(1.0 / d as f64, 0.0));
    let refreshed = match side {
        Side::A => eye.kronecker(&keep),
        Side::B => keep.kronecker(&eye),
    };
    let out = rho.entries() * Complex64::new(1.0 - eps, 0.0) + refreshed * Complex64::new(eps, 0.0);
    Ok(DensityMatrix::from_trusted(out))
}

/// One trial of the noisy device: prepare `(Ua ⊗ Ub)|I_s⟩`, depolarize side
/// A then side B with the same ε, and return the fidelity against
/// `reference`.
pub fn sample_noisy_fidelity(
    local_dim: usize,
    input_kind: &InputKind,
    eps: f64,
    reference: &PureState,
    rng: &mut RandomStream,
) -> Result<f64> {
    if reference.local_dim() != local_dim {
        return Err(Error::DimensionMismatch {
            left: reference.local_dim(),
            right: local_dim,
        });
    }
    check_unit_range("epsilon", eps)?;
    let spectrum = input_kind.spectrum(local_dim)?;
    let psi = sample_schmidt_fixed(&spectrum, rng);
    let rho = DensityMatrix::from_pure(&psi);
    let rho = depolarize_local(&rho, Side::A, eps)?;
    let rho = depolarize_local(&rho, Side::B, eps)?;
    fidelity_pure_mixed(reference, &rho)
}

/// Noisy fidelity samples for one ε point, chunked across substreams of
/// `stream` so the result is reproducible for any worker count.
pub fn noisy_fidelity_samples(
    local_dim: usize,
    input_kind: &InputKind,
    eps: f64,
    reference: &PureState,
    stream: &RandomStream,
    n_samples: usize,
) -> Result<Vec<f64>> {
    let n_chunks = n_samples.div_ceil(TRIALS_PER_STREAM);
    let chunks: Vec<Result<Vec<f64>>> = (0..n_chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = stream.substream(chunk as u64);
            let count = TRIALS_PER_STREAM.min(n_samples - chunk * TRIALS_PER_STREAM);
            (0..count)
                .map(|_| sample_noisy_fidelity(local_dim, input_kind, eps, reference, &mut rng))
                .collect()
        })
        .collect();
    let mut samples = Vec::with_capacity(n_samples);
    for chunk in chunks {
        samples.extend(chunk?);
    }
    Ok(samples)
}

/// Run the benchmark: for each ε in the grid, histogram `samples_per_point`
/// noisy fidelity samples against the separable reference `|0,0⟩` and
/// compute the JS divergence to the error-free analytic distribution.
///
/// Rows come back in grid order and are bitwise reproducible for a fixed
/// seed, independent of how many workers rayon uses.
pub fn benchmark_sweep(cfg: &BenchmarkConfig) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    let reference = PureState::zero_state(cfg.local_dim)?;
    let analytic = analytic_histogram(
        &cfg.input_kind.analytic_reference(cfg.local_dim)?,
        cfg.bin_count,
    )?;
    let root = RandomStream::new(cfg.seed, 0);
    let mut rows = Vec::with_capacity(cfg.epsilon_grid.len());
    for (e_idx, &eps) in cfg.epsilon_grid.iter().enumerate() {
        let point_stream = root.substream(e_idx as u64);
        let samples = noisy_fidelity_samples(
            cfg.local_dim,
            &cfg.input_kind,
            eps,
            &reference,
            &point_stream,
            cfg.samples_per_point,
        )?;
        let empirical = empirical_histogram(&samples, cfg.bin_count)?;
        rows.push(SweepRow {
            eps,
            js: js_divergence(&empirical, &analytic)?,
        });
    }
    Ok(rows)
}
