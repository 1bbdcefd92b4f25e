//! Haar-random bipartite states: the mean fidelity against any fixed state
//! converges to 1/D (D = d² for a d×d system), and the full fidelity
//! distribution follows P(f) = (D−1)(1−f)^(D−2).
//!
//! Run with: cargo run -p haarbench --example haar_states

use haarbench::histogram::{analytic_histogram, empirical_histogram, js_divergence};
use haarbench::sampling::sample_haar_state;
use haarbench::state::fidelity_pure_pure;
use haarbench::{AnalyticPdf, PureState, RandomStream};

fn main() -> haarbench::Result<()> {
    let n = 100_000;
    for d in [2usize, 3] {
        let hilbert_dim = d * d;
        let reference = PureState::zero_state(d)?;
        let mut rng = RandomStream::new(42, 0);
        let fidelities: Vec<f64> = (0..n)
            .map(|_| {
                let psi = sample_haar_state(d, &mut rng)?;
                fidelity_pure_pure(&reference, &psi)
            })
            .collect::<haarbench::Result<_>>()?;

        let mean: f64 = fidelities.iter().sum::<f64>() / n as f64;
        let empirical = empirical_histogram(&fidelities, 50)?;
        let analytic = analytic_histogram(&AnalyticPdf::global_haar(hilbert_dim)?, 50)?;
        let js = js_divergence(&empirical, &analytic)?;

        println!(
            "d = {d} (D = {hilbert_dim:2}): mean fidelity = {mean:.5} (expect {:.5}), \
             JS vs (D−1)(1−f)^(D−2) = {js:.6}",
            1.0 / hilbert_dim as f64
        );
    }
    Ok(())
}
