//! Coherent output peaks κ|α0|², κ|β0|² of the driven cavity, from the
//! closed-form displacements and from a direct steady-state solve.

use atomsqueeze::spectra::DisplacementComparison;
use atomsqueeze::{derive_effective, Complex64, SystemParams};

fn main() -> atomsqueeze::Result<()> {
    let p = SystemParams::figure4();
    let eff = derive_effective(&p)?;
    let d = DisplacementComparison::new(&p, &eff)?;
    print!("{}", d.to_report(&p));

    println!("\ndrive scan (printed formula):");
    for mu in [0.2, 0.4, 0.8, 1.6] {
        let q = SystemParams {
            mu1: Complex64::new(mu, 0.0),
            mu2: Complex64::new(mu, 0.0),
            ..p
        };
        let (a, b) = DisplacementComparison::new(&q, &eff)?.printed_peaks(&q);
        println!("  mu = {mu:<4} peaks = {a:>9.4} {b:>9.4}");
    }
    Ok(())
}
