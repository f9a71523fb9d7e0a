//! Checks the adiabatic-elimination cascade by integrating the full
//! four-level Hamiltonian in a truncated Fock space and comparing with the
//! effective two-mode squeezing Hamiltonian.
//!
//! ```bash
//! cargo run --release -p atomsqueeze --example fock_elimination
//! ```

use std::time::Instant;

use atomsqueeze::oracle::fock::{
    default_cutoff, evolve_and_compare, FockOptions, InitialCondition, Level, Stage,
};
use atomsqueeze::{Complex64, SystemParams};

fn main() -> atomsqueeze::Result<()> {
    let params = SystemParams::figure2(0.5);
    let eps = Complex64::new(0.5, 0.0);
    let init = InitialCondition {
        level: Level::D,
        eps1: eps,
        eps2: eps,
    };
    let cutoff = default_cutoff(eps);
    let opts = FockOptions::default();

    for &tau in &[1.0, 2.5, 5.0] {
        for stage in [Stage::H1, Stage::H2, Stage::H3, Stage::H4] {
            let t0 = Instant::now();
            let pair = evolve_and_compare(
                &params,
                stage,
                Stage::Heff,
                &init,
                tau,
                (cutoff, cutoff),
                &opts,
            )?;
            let c = pair.comparison;
            println!(
                "tau = {tau:<4} {stage:?} vs Heff: fidelity = {:.6}  overlap = {:.6}  |d> conditional = {:.8}  \
                 populations(a,b,c,d) = {:.4?}  norm drift = {:.1e}  ({:.2?})",
                c.fidelity,
                c.full_overlap,
                c.conditional_d,
                pair.first_populations,
                pair.first.norm_drift,
                t0.elapsed()
            );
        }
    }
    Ok(())
}
