//! Monte Carlo and analytic-distribution toolkit for the fidelity and
//! entanglement statistics of Haar-random bipartite pure states.
//!
//! The crate has five layers:
//!
//! - [`state`] — exact small-dimension state algebra: fidelities, partial
//!   trace, Schmidt decomposition, entanglement entropy, local unitaries.
//! - [`sampling`] — seeded, splittable generation of Haar-random states and
//!   unitaries, fixed-Schmidt ensembles, and a reduced fidelity sampler that
//!   never builds the full bipartite state.
//! - [`analytic`] — closed-form reference PDFs/CDFs for the fidelity of
//!   Haar-random states against a separable reference, plus the γ ↔ entropy
//!   conversion.
//! - [`benchmark`] — a simulated noisy DQC device (local depolarization under
//!   Haar local unitaries) compared against the error-free analytic
//!   references via Jensen-Shannon divergence.
//! - [`experiment`] — the CSV/JSON experiment driver behind the `haarbench`
//!   binary.
//!
//! Every sampler draws from an explicit [`RandomStream`]; nothing touches a
//! global RNG, so identical seeds give identical outputs and parallel runs
//! are reproducible independent of worker count.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, e.g. `cargo run -p haarbench --example haar_states`.

pub mod analytic;
pub mod benchmark;
pub mod error;
pub mod experiment;
pub mod histogram;
pub mod output;
pub mod quad;
pub mod rng;
pub mod sampling;
pub mod state;
pub mod tol;

pub use analytic::AnalyticPdf;
pub use benchmark::{BenchmarkConfig, InputKind};
pub use error::{Error, Result};
pub use histogram::Histogram;
pub use rng::RandomStream;
pub use state::{DensityMatrix, EntropyValue, PureState, SchmidtSpectrum, Side};
