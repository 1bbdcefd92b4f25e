//! Seeded generation of Haar-random pure states, Haar-random unitaries,
//! fixed-Schmidt ensembles, and the reduced fidelity sampler.
//!
//! Haar-uniform state vectors come from normalizing i.i.d. standard complex
//! Gaussians (μ = 0, σ = 1; the variance is immaterial after normalization).
//! Haar unitaries come from the QR decomposition of a complex Ginibre matrix
//! with the phase of the triangular factor's diagonal absorbed into Q, which
//! makes the distribution exactly Haar rather than merely approximately so.
//!
//! Every sampler consumes randomness from an explicit [`RandomStream`] in a
//! fixed draw order, so a given `(seed, stream_id)` reproduces identical
//! outputs and parallel callers partition work by substream.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::Result;
use crate::rng::RandomStream;
use crate::state::{apply_local_unitaries_unchecked, check_local_dim, PureState, SchmidtSpectrum};

/// A Haar-uniform unit vector in `C^n`: `n` standard complex Gaussians
/// (real part drawn before imaginary part, in index order), normalized.
pub fn sample_haar_vector(n: usize, rng: &mut RandomStream) -> Result<Vec<Complex64>> {
    check_local_dim(n)?;
    loop {
        let v: Vec<Complex64> = (0..n)
            .map(|_| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(re, im)
            })
            .collect();
        let norm_sq: f64 = v.iter().map(|a| a.norm_sqr()).sum();
        // A zero draw has probability zero but would poison the normalization.
        if norm_sq > f64::MIN_POSITIVE {
            let norm = norm_sq.sqrt();
            return Ok(v.into_iter().map(|a| a / norm).collect());
        }
    }
}

/// A Haar-uniform bipartite d×d pure state (2d² Gaussian variates, normalized).
pub fn sample_haar_state(d: usize, rng: &mut RandomStream) -> Result<PureState> {
    check_local_dim(d)?;
    let amplitudes = sample_haar_vector(d * d, rng)?;
    PureState::new(d, amplitudes)
}

/// A Haar-distributed d×d unitary via Ginibre + QR with phase correction.
pub fn sample_haar_unitary(d: usize, rng: &mut RandomStream) -> Result<DMatrix<Complex64>> {
    check_local_dim(d)?;
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    // Row-major entry order, real part before imaginary part.
    let ginibre = DMatrix::from_fn(d, d, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re * scale, im * scale)
    });
    let qr = ginibre.qr();
    let mut q = qr.q();
    let r = qr.r();
    // Rescale columns so the triangular factor has a positive real diagonal;
    // without this the distribution is not exactly Haar.
    for i in 0..d {
        let rii = r[(i, i)];
        let phase = if rii.norm() > 0.0 {
            rii / rii.norm()
        } else {
            Complex64::ONE
        };
        for k in 0..d {
            q[(k, i)] *= phase;
        }
    }
    Ok(q)
}

/// A state with the given Schmidt spectrum, Haar-uniform within that class:
/// `(Ua ⊗ Ub)|I_s⟩` with independent Haar `Ua`, `Ub` (drawn in that order).
pub fn sample_schmidt_fixed(s: &SchmidtSpectrum, rng: &mut RandomStream) -> PureState {
    let d = s.local_dim();
    let ua = sample_haar_unitary(d, rng).expect("spectrum length is a valid dimension");
    let ub = sample_haar_unitary(d, rng).expect("spectrum length is a valid dimension");
    apply_local_unitaries_unchecked(&PureState::schmidt_diagonal(s), &ua, &ub)
}

/// A random two-qubit state with Schmidt coefficients
/// `(√((1+γ)/2), √((1−γ)/2))`; γ = 0 is maximally entangled, γ = 1 separable.
pub fn sample_gamma_state(gamma: f64, rng: &mut RandomStream) -> Result<PureState> {
    let s = SchmidtSpectrum::from_gamma(gamma)?;
    Ok(sample_schmidt_fixed(&s, rng))
}

/// One draw of the inner variate with density `(d−1)(1−p)^{d−2}` on `[0, 1)`,
/// by inverting its CDF: `p = 1 − (1−u)^{1/(d−1)}`.
pub fn sample_pb(d: usize, rng: &mut RandomStream) -> Result<f64> {
    check_local_dim(d)?;
    let u: f64 = rng.random();
    Ok(1.0 - (1.0 - u).powf(1.0 / (d as f64 - 1.0)))
}

/// One fidelity draw of a Schmidt-`s` random state against a separable
/// reference, without constructing the d²-dimensional state.
///
/// Draws `p_b` first, then a Haar vector `ψ_a` in dimension d, and returns
/// `f = p_b · Σ_i s_i² |⟨i|ψ_a⟩|²`.
pub fn sample_fidelity_reduced(s: &SchmidtSpectrum, rng: &mut RandomStream) -> f64 {
    let d = s.local_dim();
    let pb = sample_pb(d, rng).expect("spectrum length is a valid dimension");
    let psi_a = sample_haar_vector(d, rng).expect("spectrum length is a valid dimension");
    let pa: f64 = s
        .coefficients()
        .iter()
        .zip(&psi_a)
        .map(|(&si, a)| si * si * a.norm_sqr())
        .sum();
    pb * pa
}
