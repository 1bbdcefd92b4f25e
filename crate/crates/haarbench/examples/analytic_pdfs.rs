//! The closed-form fidelity distributions: evaluate them, and verify
//! normalization and mean by adaptive quadrature.
//!
//! Run with: cargo run -p haarbench --example analytic_pdfs

use haarbench::quad::adaptive_simpson;
use haarbench::AnalyticPdf;

fn main() -> haarbench::Result<()> {
    let cases = vec![
        ("global Haar, D = 4", AnalyticPdf::global_haar(4)?, 0.25),
        ("sep vs γ = 0.5", AnalyticPdf::sep_gamma(0.5)?, 0.25),
        (
            "sep vs max-ent d = 3",
            AnalyticPdf::sep_maxent(3)?,
            1.0 / 9.0,
        ),
        (
            "sep vs max-ent d = 5",
            AnalyticPdf::sep_maxent(5)?,
            1.0 / 25.0,
        ),
    ];

    println!(
        "{:<22} {:>10} {:>12} {:>12}",
        "distribution", "support", "∫ pdf", "mean"
    );
    for (name, pdf, expected_mean) in &cases {
        let (lo, hi) = pdf.support();
        let mass = adaptive_simpson(|f| pdf.pdf(f).unwrap(), lo, hi, 1e-10);
        let mean = adaptive_simpson(|f| f * pdf.pdf(f).unwrap(), lo, hi, 1e-10);
        println!("{name:<22} [0,{hi:.3}] {mass:>12.9} {mean:>12.9}  (expect {expected_mean:.6})");
    }

    // A small slice of the γ = 0.5 density: flat below (1−γ)/2, then
    // logarithmic, then zero above (1+γ)/2.
    let pdf = AnalyticPdf::sep_gamma(0.5)?;
    println!("\nP(f | γ = 0.5):");
    for f in [0.0, 0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9] {
        println!(
            "  f = {f:0.2}: pdf = {:.6}, cdf = {:.6}",
            pdf.pdf(f)?,
            pdf.cdf(f)?
        );
    }
    Ok(())
}
