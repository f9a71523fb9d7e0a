//! Effective two-mode squeezing coefficients and the elimination audit for
//! the κ = 0.5 working point, a parameter file, and a deliberately
//! poorly detuned variant.
//!
//! ```bash
//! cargo run -p atomsqueeze --example derive_coefficients
//! ```

use atomsqueeze::config::parse_params;
use atomsqueeze::params::{DEFAULT_MARGIN_FIRST, DEFAULT_MARGIN_SECOND};
use atomsqueeze::{check_validity, derive_effective, SystemParams};

fn show(label: &str, p: &SystemParams) -> atomsqueeze::Result<()> {
    let eff = derive_effective(p)?;
    println!("== {label}");
    println!("  delta   = {:.6}", eff.delta);
    println!(
        "  lambda1 = {:.7}  lambda2 = {:.7}",
        eff.lambda1, eff.lambda2
    );
    println!("  eta     = {:.8}", eff.eta);
    println!(
        "  |Raman1| = {:.4}  |Raman2| = {:.4}",
        eff.raman1(p).norm(),
        eff.raman2(p).norm()
    );
    let v = check_validity(p, &eff, DEFAULT_MARGIN_FIRST, DEFAULT_MARGIN_SECOND);
    println!(
        "  ratios {:.2} / {:.2}  -> {}",
        v.ratio_first_stage,
        v.ratio_second_stage,
        if v.passes() {
            "elimination valid"
        } else {
            "elimination NOT justified"
        }
    );
    Ok(())
}

fn main() -> atomsqueeze::Result<()> {
    show("default working point", &SystemParams::figure2(0.5))?;

    let from_file = parse_params(
        "# stronger classical fields\n\
         omega3 = 2.5j\n\
         omega4 = 2.5\n\
         kappa1 = 0.1\n\
         kappa2 = 0.1\n",
    )?;
    show("from config text", &from_file)?;

    let close = SystemParams {
        delta1: 3.0,
        delta3: 3.2,
        ..SystemParams::figure2(0.5)
    };
    show("small detunings", &close)?;
    Ok(())
}
