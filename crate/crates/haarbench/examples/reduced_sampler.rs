//! The reduced fidelity sampler draws f = p_b · Σ s_i²|⟨i|ψ_a⟩|² from two
//! low-dimensional variates instead of building the d²-dimensional state;
//! its distribution matches full-state sampling and the closed forms.
//!
//! Run with: cargo run -p haarbench --example reduced_sampler

use haarbench::histogram::{analytic_histogram, empirical_histogram, js_divergence};
use haarbench::sampling::{sample_fidelity_reduced, sample_schmidt_fixed};
use haarbench::state::fidelity_pure_pure;
use haarbench::{AnalyticPdf, PureState, RandomStream, SchmidtSpectrum};

fn main() -> haarbench::Result<()> {
    let n = 100_000;
    let bins = 50;
    let cases = vec![
        ("max-ent d = 2", SchmidtSpectrum::maximally_entangled(2)?),
        ("γ = 0.5", SchmidtSpectrum::from_gamma(0.5)?),
        ("max-ent d = 3", SchmidtSpectrum::maximally_entangled(3)?),
    ];

    for (name, s) in &cases {
        let d = s.local_dim();
        let reference = PureState::zero_state(d)?;

        let mut rng = RandomStream::new(5, 0);
        let reduced: Vec<f64> = (0..n)
            .map(|_| sample_fidelity_reduced(s, &mut rng))
            .collect();

        let mut rng = RandomStream::new(5, 1);
        let full: Vec<f64> = (0..n)
            .map(|_| fidelity_pure_pure(&reference, &sample_schmidt_fixed(s, &mut rng)))
            .collect::<haarbench::Result<_>>()?;

        let h_reduced = empirical_histogram(&reduced, bins)?;
        let h_full = empirical_histogram(&full, bins)?;
        let js_pair = js_divergence(&h_reduced, &h_full)?;

        let analytic = match *name {
            "γ = 0.5" => AnalyticPdf::sep_gamma(0.5)?,
            _ => AnalyticPdf::sep_maxent(d)?,
        };
        let js_closed = js_divergence(&h_reduced, &analytic_histogram(&analytic, bins)?)?;

        println!(
            "{name:<14} JS(reduced, full-state) = {js_pair:.6}, JS(reduced, closed form) = {js_closed:.6}"
        );
    }
    Ok(())
}
