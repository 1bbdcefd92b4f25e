//! Mean fidelity per entanglement-entropy window: constant at 1/d² across
//! the whole entropy range, whatever the fixed reference state.
//!
//! Run with: cargo run -p haarbench --example windowed_average

use haarbench::experiment::{
    reference_state, sample_entropy_fidelity_pairs, windowed_mean_fidelity, ReferenceKind,
};
use haarbench::RandomStream;

fn main() -> haarbench::Result<()> {
    let seed = 17;
    let n = 200_000;
    for d in [2usize, 3] {
        let reference = reference_state(d, ReferenceKind::HaarRandom, seed)?;
        let pairs = sample_entropy_fidelity_pairs(d, n, &reference, &RandomStream::new(seed, 0))?;
        let windows = windowed_mean_fidelity(&pairs, 0.02);

        println!(
            "d = {d}: mean fidelity per entropy window (expect {:.4})",
            1.0 / (d * d) as f64
        );
        println!(
            "{:>8} {:>9} {:>10} {:>10}",
            "center", "count", "mean", "std err"
        );
        for w in windows.iter().filter(|w| w.count >= 100).step_by(5) {
            println!(
                "{:>8.2} {:>9} {:>10.5} {:>10.5}",
                w.center,
                w.count,
                w.mean.unwrap(),
                w.stderr.unwrap()
            );
        }
        let thin = windows.iter().filter(|w| w.count < 100).count();
        println!("({thin} windows below the 100-sample floor were skipped)\n");
    }
    Ok(())
}
