//! Closed-form reference distributions for the fidelity of Haar-random
//! states, plus the γ ↔ entropy conversion for two-qubit Schmidt spectra.
//!
//! Three families are covered:
//!
//! - `GlobalHaar`: fidelity of Haar-uniform pure states in Hilbert dimension
//!   D against any fixed state, `P(f) = (D−1)(1−f)^{D−2}`. For a bipartite
//!   d×d system pass `D = d²`.
//! - `SepGamma`: two-qubit states of fixed Schmidt parameter γ against a
//!   separable reference; piecewise flat-then-logarithmic on
//!   `[0, (1+γ)/2]`.
//! - `SepMaxEnt`: maximally entangled d×d states against a separable
//!   reference, `P(f) = d(d−1)(1−df)^{d−2}` on `[0, 1/d]`.
//!
//! All PDFs integrate to 1 and have mean `1/d²` (resp. `1/D`); the tests and
//! the acceptance suite verify both by adaptive quadrature.

use crate::error::{Error, Result};
use crate::state::EntropyValue;

/// A tagged closed-form fidelity distribution with pdf, cdf, and support.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AnalyticPdf {
    /// Haar-uniform states in Hilbert dimension `D ≥ 2`, any fixed reference.
    GlobalHaar { hilbert_dim: usize },
    /// Fixed-γ two-qubit ensemble against a separable reference, γ ∈ (0, 1].
    SepGamma { gamma: f64 },
    /// Maximally entangled d×d ensemble against a separable reference.
    SepMaxEnt { local_dim: usize },
}

impl AnalyticPdf {
    pub fn global_haar(hilbert_dim: usize) -> Result<Self> {
        if hilbert_dim < 2 {
            return Err(Error::LocalDimTooSmall(hilbert_dim));
        }
        Ok(Self::GlobalHaar { hilbert_dim })
    }

    /// The γ-conditioned qubit distribution.
    ///
    /// γ = 0 is the removable limit of the formula and is redirected to
    /// `SepMaxEnt` at d = 2 (the constant 2 on `[0, 1/2]`).
    pub fn sep_gamma(gamma: f64) -> Result<Self> {
        if !gamma.is_finite() || !(0.0..=1.0).contains(&gamma) {
            return Err(Error::OutOfRange {
                param: "gamma",
                value: gamma,
                lo: 0.0,
                hi: 1.0,
            });
        }
        if gamma == 0.0 {
            return Self::sep_maxent(2);
        }
        Ok(Self::SepGamma { gamma })
    }

    pub fn sep_maxent(local_dim: usize) -> Result<Self> {
        if local_dim < 2 {
            return Err(Error::LocalDimTooSmall(local_dim));
        }
        Ok(Self::SepMaxEnt { local_dim })
    }

    /// Closed support interval within `[0, 1]`.
    pub fn support(&self) -> (f64, f64) {
        match *self {
            Self::GlobalHaar { .. } => (0.0, 1.0),
            Self::SepGamma { gamma } => (0.0, (1.0 + gamma) / 2.0),
            Self::SepMaxEnt { local_dim } => (0.0, 1.0 / local_dim as f64),
        }
    }

    /// Probability density at fidelity `f ∈ [0, 1]`.
    pub fn pdf(&self, f: f64) -> Result<f64> {
        check_fidelity(f)?;
        Ok(match *self {
            Self::GlobalHaar { hilbert_dim } => {
                let dm1 = hilbert_dim as f64 - 1.0;
                dm1 * (1.0 - f).powi(hilbert_dim as i32 - 2)
            }
            Self::SepGamma { gamma } => {
                let lo = (1.0 - gamma) / 2.0;
                let hi = (1.0 + gamma) / 2.0;
                if f <= lo {
                    // ln((1+γ)/(1−γ)) via ln1p for small-γ accuracy.
                    (gamma.ln_1p() - (-gamma).ln_1p()) / gamma
                } else if f < hi {
                    ((1.0 + gamma) / (2.0 * f)).ln() / gamma
                } else {
                    0.0
                }
            }
            Self::SepMaxEnt { local_dim } => {
                let d = local_dim as f64;
                if f <= 1.0 / d {
                    d * (d - 1.0) * (1.0 - d * f).powi(local_dim as i32 - 2)
                } else {
                    0.0
                }
            }
        })
    }

    /// Cumulative distribution `∫₀^f pdf`, in closed form.
    pub fn cdf(&self, f: f64) -> Result<f64> {
        check_fidelity(f)?;
        Ok(match *self {
            Self::GlobalHaar { hilbert_dim } => 1.0 - (1.0 - f).powi(hilbert_dim as i32 - 1),
            Self::SepGamma { gamma } => {
                let lo = (1.0 - gamma) / 2.0;
                let hi = (1.0 + gamma) / 2.0;
                if f <= lo {
                    f * (gamma.ln_1p() - (-gamma).ln_1p()) / gamma
                } else if f < hi {
                    // Antiderivative of ln((1+γ)/(2f')) is f'·ln((1+γ)/(2f')) + f'.
                    (f * ((1.0 + gamma) / (2.0 * f)).ln() + f - lo) / gamma
                } else {
                    1.0
                }
            }
            Self::SepMaxEnt { local_dim } => {
                let d = local_dim as f64;
                if f < 1.0 / d {
                    1.0 - (1.0 - d * f).powi(local_dim as i32 - 1)
                } else {
                    1.0
                }
            }
        })
    }
}

/// `P(f) = (D−1)(1−f)^{D−2}` for Haar states in Hilbert dimension `D`.
pub fn pdf_global(hilbert_dim: usize, f: f64) -> Result<f64> {
    AnalyticPdf::global_haar(hilbert_dim)?.pdf(f)
}

/// The γ-conditioned qubit fidelity density against a separable reference
/// (γ = 0 delegates to [`pdf_sep_maxent`] at d = 2).
pub fn pdf_sep_gamma(gamma: f64, f: f64) -> Result<f64> {
    AnalyticPdf::sep_gamma(gamma)?.pdf(f)
}

/// `P(f) = d(d−1)(1−df)^{d−2}` on `[0, 1/d]` for maximally entangled qudits
/// against a separable reference.
pub fn pdf_sep_maxent(local_dim: usize, f: f64) -> Result<f64> {
    AnalyticPdf::sep_maxent(local_dim)?.pdf(f)
}

/// Entanglement entropy of the two-qubit Schmidt parameter γ: the binary
/// entropy of `(1+γ)/2`. Strictly decreasing, with E(0) = 1 and E(1) = 0.
pub fn gamma_to_entropy(gamma: f64) -> Result<EntropyValue> {
    if !gamma.is_finite() || !(0.0..=1.0).contains(&gamma) {
        return Err(Error::OutOfRange {
            param: "gamma",
            value: gamma,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let p = (1.0 + gamma) / 2.0;
    EntropyValue::new(binary_entropy(p).clamp(0.0, 1.0))
}

/// Inverse of [`gamma_to_entropy`], by bisection to `|Δγ| < 1e-12`.
pub fn entropy_to_gamma(entropy: EntropyValue) -> f64 {
    let e = entropy.value();
    if e >= 1.0 {
        return 0.0;
    }
    if e <= 0.0 {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    // gamma_to_entropy is strictly decreasing on [0, 1].
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if binary_entropy((1.0 + mid) / 2.0) > e {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn binary_entropy(p: f64) -> f64 {
    let mut e = 0.0;
    for q in [p, 1.0 - p] {
        if q > 0.0 {
            e -= q * q.log2();
        }
    }
    e
}

fn check_fidelity(f: f64) -> Result<()> {
    if !f.is_finite() || !(0.0..=1.0).contains(&f) {
        return Err(Error::OutOfRange {
            param: "fidelity",
            value: f,
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(())
}
