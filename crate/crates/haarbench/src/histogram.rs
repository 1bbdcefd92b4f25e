//! Binned probability mass over fidelity in `[0, 1]`, and the KL/JS
//! divergences between identically binned histograms.
//!
//! Bins are uniform on `[0, 1]`, right-open except for the last bin, which
//! is closed so that a fidelity of exactly 1 is counted. Mass is normalized
//! to sum to 1 on construction.

use crate::analytic::AnalyticPdf;
use crate::error::{Error, Result};

/// A normalized probability mass over `B ≥ 2` uniform bins on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    mass: Vec<f64>,
}

impl Histogram {
    /// Normalize a nonnegative mass vector into a histogram.
    pub fn from_mass(mut mass: Vec<f64>) -> Result<Self> {
        if mass.len() < 2 {
            return Err(Error::TooFewBins(mass.len()));
        }
        let mut total = 0.0;
        for &m in &mass {
            if !m.is_finite() || m < 0.0 {
                return Err(Error::OutOfRange {
                    param: "mass",
                    value: m,
                    lo: 0.0,
                    hi: f64::INFINITY,
                });
            }
            total += m;
        }
        if total <= 0.0 {
            return Err(Error::EmptySamples);
        }
        for m in &mut mass {
            *m /= total;
        }
        Ok(Self { mass })
    }

    pub fn bin_count(&self) -> usize {
        self.mass.len()
    }

    /// The `B + 1` uniform bin edges, from 0 to 1.
    pub fn edges(&self) -> Vec<f64> {
        let b = self.bin_count();
        (0..=b).map(|i| i as f64 / b as f64).collect()
    }

    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    /// Bin-wise midpoint `(self + other) / 2`.
    fn midpoint(&self, other: &Histogram) -> Histogram {
        let mass = self
            .mass
            .iter()
            .zip(&other.mass)
            .map(|(p, q)| 0.5 * (p + q))
            .collect();
        Histogram { mass }
    }
}

/// Bin samples from `[0, 1]` into `B` uniform bins and normalize.
pub fn empirical_histogram(samples: &[f64], bins: usize) -> Result<Histogram> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    if bins < 2 {
        return Err(Error::TooFewBins(bins));
    }
    let mut counts = vec![0u64; bins];
    for &x in samples {
        if !x.is_finite() || !(0.0..=1.0).contains(&x) {
            return Err(Error::OutOfRange {
                param: "sample",
                value: x,
                lo: 0.0,
                hi: 1.0,
            });
        }
        let idx = ((x * bins as f64) as usize).min(bins - 1);
        counts[idx] += 1;
    }
    let n = samples.len() as f64;
    Histogram::from_mass(counts.into_iter().map(|c| c as f64 / n).collect())
}

/// Bin an analytic distribution exactly via CDF differences.
pub fn analytic_histogram(pdf: &AnalyticPdf, bins: usize) -> Result<Histogram> {
    if bins < 2 {
        return Err(Error::TooFewBins(bins));
    }
    let mut mass = Vec::with_capacity(bins);
    let mut prev = pdf.cdf(0.0)?;
    for b in 1..=bins {
        let edge = b as f64 / bins as f64;
        let next = pdf.cdf(edge)?;
        // CDF differences can undershoot zero by an ulp near the support edge.
        mass.push((next - prev).max(0.0));
        prev = next;
    }
    Histogram::from_mass(mass)
}

/// Kullback-Leibler divergence `Σ p_i log₂(p_i / m_i)` in bits.
///
/// The convention `0·log₂(0/x) = 0` applies; a bin with `p_i > 0` but
/// `m_i = 0` makes the divergence undefined and is reported as an error
/// (this never happens for the midpoint distribution used by JS).
pub fn kl_divergence(p: &Histogram, m: &Histogram) -> Result<f64> {
    if p.bin_count() != m.bin_count() {
        return Err(Error::BinningMismatch {
            left: p.bin_count(),
            right: m.bin_count(),
        });
    }
    let mut kl = 0.0;
    for (bin, (&pi, &mi)) in p.mass.iter().zip(&m.mass).enumerate() {
        if pi == 0.0 {
            continue;
        }
        if mi == 0.0 {
            return Err(Error::DivergenceUndefined { bin, p: pi });
        }
        kl += pi * (pi / mi).log2();
    }
    Ok(kl)
}

/// Jensen-Shannon divergence `½[KL(p‖m) + KL(q‖m)]` with `m = (p+q)/2`.
///
/// Symmetric, and bounded in `[0, 1]` with log base 2.
pub fn js_divergence(p: &Histogram, q: &Histogram) -> Result<f64> {
    if p.bin_count() != q.bin_count() {
        return Err(Error::BinningMismatch {
            left: p.bin_count(),
            right: q.bin_count(),
        });
    }
    let m = p.midpoint(q);
    Ok(0.5 * (kl_divergence(p, &m)? + kl_divergence(q, &m)?))
}
