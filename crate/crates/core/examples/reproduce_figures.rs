//! Writes the surface, spectra and intensity datasets with SVG previews to
//! `target/figures`.
//!
//! ```bash
//! cargo run --release -p atomsqueeze --example reproduce_figures
//! ```

use atomsqueeze::figures::{run_figure, Figure, FigureOptions};

fn main() -> atomsqueeze::Result<()> {
    let opts = FigureOptions::default();
    for fig in Figure::ALL {
        let art = run_figure(fig, None, &opts)?;
        for path in art.write_all("target/figures", true, true)? {
            println!("{:<6} {}", fig.name(), path.display());
        }
    }
    Ok(())
}
