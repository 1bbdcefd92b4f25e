//! Core state algebra: fidelities, Schmidt decomposition, entanglement
//! entropy, and local-unitary invariance on a few hand-picked states.
//!
//! Run with: cargo run -p haarbench --example fidelity_and_entropy

use haarbench::sampling::sample_haar_unitary;
use haarbench::state::{
    apply_local_unitaries, entanglement_entropy, fidelity_pure_mixed, fidelity_pure_pure,
    reduced_state, schmidt_decompose,
};
use haarbench::{DensityMatrix, PureState, RandomStream, SchmidtSpectrum, Side};

fn main() -> haarbench::Result<()> {
    let zero = PureState::zero_state(2)?;
    let bell = PureState::max_entangled(2)?;
    let gamma06 = PureState::schmidt_diagonal(&SchmidtSpectrum::from_gamma(0.6)?);

    println!("|⟨00|00⟩|²   = {}", fidelity_pure_pure(&zero, &zero)?);
    println!("|⟨00|Bell⟩|² = {}", fidelity_pure_pure(&zero, &bell)?);

    println!("\nSchmidt coefficients:");
    for (name, psi) in [("|00⟩", &zero), ("Bell", &bell), ("γ=0.6", &gamma06)] {
        let s = schmidt_decompose(psi);
        println!(
            "  {name:6} {:?}  entropy = {:.6}",
            s.coefficients(),
            entanglement_entropy(psi).value()
        );
    }

    // The reduced state of the Bell pair is maximally mixed, so the fidelity
    // of |00⟩ against it is 1/2 · 1/2.
    let rho_a = reduced_state(&bell, Side::A);
    println!("\ntr_B(Bell) eigenvalues: {:?}", rho_a.eigenvalues());
    let rho = DensityMatrix::from_pure(&bell);
    println!("⟨00|Bell⟩⟨Bell|00⟩ = {}", fidelity_pure_mixed(&zero, &rho)?);

    // Local unitaries shuffle amplitudes but never the Schmidt spectrum.
    let mut rng = RandomStream::new(1, 0);
    let ua = sample_haar_unitary(2, &mut rng)?;
    let ub = sample_haar_unitary(2, &mut rng)?;
    let rotated = apply_local_unitaries(&gamma06, &ua, &ub)?;
    println!(
        "\nγ=0.6 state after random (Ua ⊗ Ub): entropy = {:.9} (unchanged)",
        entanglement_entropy(&rotated).value()
    );
    Ok(())
}
