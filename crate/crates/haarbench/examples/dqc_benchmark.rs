//! Benchmark a simulated noisy DQC device: depolarize both halves of the
//! input state, histogram the output fidelities, and measure the JS
//! divergence from the error-free closed form as the error rate grows.
//!
//! Run with: cargo run -p haarbench --example dqc_benchmark

use haarbench::benchmark::benchmark_sweep;
use haarbench::{BenchmarkConfig, InputKind};

fn main() -> haarbench::Result<()> {
    let grid = vec![0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3];

    println!("max-entangled qubit inputs:");
    let rows = benchmark_sweep(&BenchmarkConfig {
        local_dim: 2,
        input_kind: InputKind::MaxEnt,
        epsilon_grid: grid.clone(),
        samples_per_point: 50_000,
        bin_count: 50,
        seed: 12,
    })?;
    for row in &rows {
        println!("  ε = {:>4}: JS = {:.6}", row.eps, row.js);
    }

    println!("\nγ inputs at ε = 0.2 (more entanglement → more sensitivity):");
    for gamma in [0.2, 0.5, 0.8] {
        let rows = benchmark_sweep(&BenchmarkConfig {
            local_dim: 2,
            input_kind: InputKind::Gamma(gamma),
            epsilon_grid: vec![0.2],
            samples_per_point: 50_000,
            bin_count: 50,
            seed: 12,
        })?;
        println!("  γ = {gamma:0.1}: JS = {:.6}", rows[0].js);
    }
    Ok(())
}
