//! Frequency bands where the output modes are entangled by the sum
//! criterion S+ + S− < 2, over a range of loss rates.

use atomsqueeze::grid::default_omega_grid;
use atomsqueeze::{derive_effective, duan_entangled, squeezing_spectrum, SystemParams};

fn main() -> atomsqueeze::Result<()> {
    let grid = default_omega_grid();
    for kappa in [0.05, 0.2, 0.5, 1.0, 2.0] {
        let p = SystemParams::figure2(kappa);
        let curve = squeezing_spectrum(&p, &derive_effective(&p)?, &grid);
        let ent = duan_entangled(&curve);
        let covered = ent.flags.iter().filter(|f| **f).count() as f64 / ent.flags.len() as f64;
        print!(
            "kappa = {kappa:<5} {:>5.1}% of grid entangled:",
            100.0 * covered
        );
        for (a, b) in &ent.bands {
            print!(" [{a:.3}, {b:.3}]");
        }
        println!();
    }
    Ok(())
}
