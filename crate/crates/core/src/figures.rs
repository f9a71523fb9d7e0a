//! Datasets behind the published figures, with plots and validity notes.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::symmetric;
use crate::output::{fmt_bool, fmt_float, heatmap, line_plot, Artifacts, CsvTable, Series};
use crate::params::{
    check_validity, derive_effective, SystemParams, DEFAULT_MARGIN_FIRST, DEFAULT_MARGIN_SECOND,
};
use crate::spectra::{
    analyze_spectrum, duan_entangled, squeezing_spectrum, DisplacementComparison, SpectrumCurve,
};
use crate::sweep::spectrum_table;

/// Loss rates shown as separate spectra.
pub const FIGURE3_KAPPAS: [f64; 3] = [0.05, 0.5, 2.0];
pub const FIGURE2_KAPPA_MAX: f64 = 2.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    /// `S+` surface over `(ω, κ)`.
    Surface,
    /// `S+(ω)` at three loss rates.
    Spectra,
    /// Intensity noise of the driven cavity.
    Intensity,
}

impl Figure {
    pub const ALL: [Figure; 3] = [Figure::Surface, Figure::Spectra, Figure::Intensity];

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "fig2" => Ok(Self::Surface),
            "fig3" => Ok(Self::Spectra),
            "fig4" => Ok(Self::Intensity),
            other => Err(Error::Sweep(format!(
                "unknown figure `{other}` (fig2, fig3, fig4, all)"
            ))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Surface => "fig2",
            Self::Spectra => "fig3",
            Self::Intensity => "fig4",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FigureOptions {
    pub omega_max: f64,
    pub omega_points: usize,
    /// κ samples of the surface, evenly spaced on `(0, κmax]`.
    pub kappa_points: usize,
}

impl Default for FigureOptions {
    fn default() -> Self {
        Self {
            omega_max: 2.0,
            omega_points: 2001,
            kappa_points: 100,
        }
    }
}

/// `κ_i = κmax · i / n` for `i = 1..=n`; κ = 0 is excluded because the
/// output spectrum is undefined for a closed cavity.
pub fn surface_kappas(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|i| FIGURE2_KAPPA_MAX * i as f64 / n as f64)
        .collect()
}

fn validity_block(params: &SystemParams) -> Result<String> {
    let eff = derive_effective(params)?;
    Ok(check_validity(params, &eff, DEFAULT_MARGIN_FIRST, DEFAULT_MARGIN_SECOND).to_report())
}

pub fn surface(
    params: &SystemParams,
    opts: &FigureOptions,
) -> Result<(Vec<f64>, Vec<f64>, Vec<SpectrumCurve>)> {
    let eff = derive_effective(params)?;
    let grid = symmetric(opts.omega_max, opts.omega_points);
    let kappas = surface_kappas(opts.kappa_points);
    let curves = kappas
        .par_iter()
        .map(|&k| squeezing_spectrum(&params.with_kappa(k), &eff, &grid))
        .collect();
    Ok((grid, kappas, curves))
}

fn figure_surface(params: &SystemParams, opts: &FigureOptions) -> Result<Artifacts> {
    let (grid, kappas, curves) = surface(params, opts)?;
    let mut art = Artifacts::default();
    let mut t = CsvTable::new(&["kappa", "omega", "s_plus", "s_minus", "entangled"])
        .comment(format!("kappa range (0, {FIGURE2_KAPPA_MAX}] sampled at {} values kappa_i = {FIGURE2_KAPPA_MAX} i / {}", kappas.len(), kappas.len()));
    for (k, c) in kappas.iter().zip(&curves) {
        for i in 0..c.len() {
            t.push(vec![
                fmt_float(*k),
                fmt_float(c.omega[i]),
                fmt_float(c.s_plus[i]),
                fmt_float(c.s_minus[i]),
                fmt_bool(c.entangled[i]).into(),
            ]);
        }
    }
    art.table("fig2_surface.csv", t);
    let values: Vec<Vec<f64>> = curves.iter().map(|c| c.s_plus.clone()).collect();
    art.text(
        "fig2_surface.svg",
        heatmap(
            "S+ over omega and kappa",
            "omega / g",
            "kappa / g",
            &grid,
            &kappas,
            &values,
            200,
        ),
    );

    let mut report = String::new();
    let _ = writeln!(
        report,
        "kappa_min = {}\nkappa_max = {}\nkappa_points = {}",
        kappas[0],
        kappas[kappas.len() - 1],
        kappas.len()
    );
    let (best_k, best) = kappas
        .iter()
        .zip(&curves)
        .filter_map(|(k, c)| c.min_s_plus().map(|(_, s)| (*k, s)))
        .fold(
            (f64::NAN, f64::INFINITY),
            |a, b| if b.1 < a.1 { b } else { a },
        );
    let _ = writeln!(
        report,
        "global_min_s_plus = {best:.9}\nglobal_min_kappa = {best_k}"
    );
    report.push_str(&validity_block(params)?);
    art.text("fig2_report.txt", report);
    Ok(art)
}

fn figure_spectra(params: &SystemParams, opts: &FigureOptions) -> Result<Artifacts> {
    let eff = derive_effective(params)?;
    let grid = symmetric(opts.omega_max, opts.omega_points);
    let mut art = Artifacts::default();
    let mut report = String::new();
    let mut curves = Vec::new();
    for &k in &FIGURE3_KAPPAS {
        let p = params.with_kappa(k);
        let curve = squeezing_spectrum(&p, &eff, &grid);
        let analysis = analyze_spectrum(&curve)?;
        let ent = duan_entangled(&curve);
        let _ = writeln!(report, "[kappa = {k}]");
        let _ = writeln!(report, "minima = {}", fmt_points(&analysis.minima));
        let _ = writeln!(
            report,
            "all_local_minima = {}",
            fmt_points(&analysis.all_minima)
        );
        let _ = writeln!(report, "bandwidth = {:.6}", analysis.bandwidth);
        let bands: Vec<String> = ent
            .bands
            .iter()
            .map(|(a, b)| format!("[{a:.4}, {b:.4}]"))
            .collect();
        let _ = writeln!(report, "entangled_bands = {}", bands.join(" "));
        report.push_str(&validity_block(&p)?);
        report.push('\n');
        art.table(
            &format!("fig3_kappa_{k}.csv"),
            spectrum_table(&curve).comment(format!("kappa = {k}")),
        );
        curves.push((k, curve));
    }
    let series: Vec<Series<'_>> = curves
        .iter()
        .map(|(k, c)| Series {
            label: format!("kappa = {k}"),
            x: &c.omega,
            y: &c.s_plus,
        })
        .collect();
    art.text(
        "fig3_spectra.svg",
        line_plot("Squeezing spectra", "omega / g", "S+", &series, Some(1.0)),
    );
    art.text("fig3_report.txt", report);
    Ok(art)
}

fn fmt_points(points: &[(f64, f64)]) -> String {
    let v: Vec<String> = points
        .iter()
        .map(|(w, s)| format!("({w:.6}, {s:.9})"))
        .collect();
    v.join(" ")
}

fn figure_intensity(params: &SystemParams, opts: &FigureOptions) -> Result<Artifacts> {
    let eff = derive_effective(params)?;
    let grid = symmetric(opts.omega_max, opts.omega_points);
    let curve = squeezing_spectrum(params, &eff, &grid);
    let disp = DisplacementComparison::new(params, &eff)?;
    let (pp1, pp2) = disp.printed_peaks(params);
    let (sp1, sp2) = disp.steady_peaks(params);

    let mut art = Artifacts::default();
    let mut t = CsvTable::new(&["omega", "n1", "n2"])
        .comment(format!("kappa1 = {}, kappa2 = {}, mu1 = {}, mu2 = {}", params.kappa1, params.kappa2, params.mu1, params.mu2))
        .comment(format!("coherent peak at omega = 0 (not included below): printed {pp1:.6} / {pp2:.6}, steady state {sp1:.6} / {sp2:.6}"));
    for i in 0..curve.len() {
        t.push(vec![
            fmt_float(curve.omega[i]),
            fmt_float(curve.n1[i]),
            fmt_float(curve.n2[i]),
        ]);
    }
    art.table("fig4_intensity.csv", t);
    art.text(
        "fig4_intensity.svg",
        line_plot(
            "Intensity noise",
            "omega / g",
            "N",
            &[
                Series {
                    label: "N1".into(),
                    x: &curve.omega,
                    y: &curve.n1,
                },
                Series {
                    label: "N2".into(),
                    x: &curve.omega,
                    y: &curve.n2,
                },
            ],
            None,
        ),
    );
    let mut report = disp.to_report(params);
    report.push_str(&validity_block(params)?);
    art.text("fig4_report.txt", report);
    Ok(art)
}

/// Builds one figure. `base` defaults to the figure's own working point when
/// `None`.
pub fn run_figure(
    fig: Figure,
    base: Option<&SystemParams>,
    opts: &FigureOptions,
) -> Result<Artifacts> {
    match fig {
        Figure::Surface => figure_surface(base.unwrap_or(&SystemParams::figure2(0.5)), opts),
        Figure::Spectra => figure_spectra(base.unwrap_or(&SystemParams::figure2(0.5)), opts),
        Figure::Intensity => figure_intensity(base.unwrap_or(&SystemParams::figure4()), opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> FigureOptions {
        FigureOptions {
            omega_max: 2.0,
            omega_points: 201,
            kappa_points: 10,
        }
    }

    #[test]
    fn kappa_axis_excludes_zero() {
        let k = surface_kappas(4);
        assert_eq!(k, vec![0.5, 1.0, 1.5, 2.0]);
    }

    #[test]
    fn surface_files() {
        let art = run_figure(Figure::Surface, None, &small()).unwrap();
        let t = art.get_table("fig2_surface.csv").unwrap();
        assert_eq!(t.rows.len(), 201 * 10);
        assert!(t.comments[0].contains("(0, 2]"));
        assert!(art
            .get_text("fig2_report.txt")
            .unwrap()
            .contains("ratio_first_stage"));
    }

    #[test]
    fn spectra_report_lists_each_kappa() {
        let art = run_figure(Figure::Spectra, None, &small()).unwrap();
        let r = art.get_text("fig3_report.txt").unwrap();
        for k in FIGURE3_KAPPAS {
            assert!(r.contains(&format!("[kappa = {k}]")));
            assert!(art.get_table(&format!("fig3_kappa_{k}.csv")).is_some());
        }
    }

    #[test]
    fn intensity_report_has_both_peaks() {
        let art = run_figure(Figure::Intensity, None, &small()).unwrap();
        let r = art.get_text("fig4_report.txt").unwrap();
        assert!(r.contains("peak1_printed") && r.contains("peak1_steady"));
    }

    #[test]
    fn unknown_figure() {
        assert!(Figure::parse("fig9").is_err());
        assert_eq!(Figure::parse("fig3").unwrap(), Figure::Spectra);
    }
}
