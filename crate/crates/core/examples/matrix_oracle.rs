//! Closed-form spectra against a brute-force frequency-domain solve of the
//! 4×4 Langevin system, including the worst conditioned grid point.

use atomsqueeze::grid::default_omega_grid;
use atomsqueeze::langevin::LinearModel;
use atomsqueeze::oracle::spectrum::{compare_curves, spectrum_matrix_oracle};
use atomsqueeze::{derive_effective, squeezing_spectrum, SystemParams};

fn main() -> atomsqueeze::Result<()> {
    let grid = default_omega_grid();
    for kappa in [0.05, 0.5, 2.0] {
        let p = SystemParams::figure2(kappa);
        let eff = derive_effective(&p)?;
        let closed = squeezing_spectrum(&p, &eff, &grid);
        let oracle = spectrum_matrix_oracle(&p, &eff, &grid);
        let d = compare_curves(&closed, &oracle, 1e-300);
        let model = LinearModel::new(&p, &eff);
        let worst_cond = grid
            .iter()
            .filter_map(|&w| model.transfer(w))
            .map(|t| t.condition)
            .fold(0.0, f64::max);
        println!(
            "kappa = {kappa:<4} max rel dev: S+ {:.2e}  S- {:.2e}  N1 {:.2e}  N2 {:.2e}  cond <= {worst_cond:.1}",
            d.s_plus, d.s_minus, d.n1, d.n2
        );
    }
    Ok(())
}
