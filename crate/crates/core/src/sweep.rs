//! Parameter sweeps driven by a `key = value` spec file.
//!
//! ```text
//! axis = kappa          # omega | kappa | tau | omega_x_kappa
//! start = 0.02
//! stop = 2
//! count = 100
//! at_omega = 0          # kappa axis only
//! outputs = spectrum, validity
//! delta1 = 10           # any parameter key overrides the defaults
//! ```
//!
//! Identical specs produce byte-identical files.

use std::collections::BTreeSet;
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::config::{complex_value, params_from_entries, parse_entries, real_value, Entry};
use crate::error::{Error, Result};
use crate::grid::linspace;
use crate::oracle::gaussian::gaussian_evolve;
use crate::oracle::spectrum::{compare_curves, spectrum_matrix_oracle};
use crate::output::{fmt_bool, fmt_float, heatmap, line_plot, Artifacts, CsvTable, Series};
use crate::params::{
    check_validity, derive_effective, EffectiveParams, SystemParams, DEFAULT_MARGIN_FIRST,
    DEFAULT_MARGIN_SECOND,
};
use crate::spectra::{squeezing_spectrum, SpectrumCurve};
use crate::su11::{horizon, squeeze_parameters, EvolutionInput};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Omega,
    Kappa,
    Tau,
    OmegaKappa,
}

impl Axis {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "omega" => Some(Self::Omega),
            "kappa" => Some(Self::Kappa),
            "tau" => Some(Self::Tau),
            "omega_x_kappa" => Some(Self::OmegaKappa),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Omega => "omega",
            Self::Kappa => "kappa",
            Self::Tau => "tau",
            Self::OmegaKappa => "omega_x_kappa",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Output {
    Spectrum,
    Intensity,
    Squeeze,
    Validity,
    Oracle,
}

impl Output {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "spectrum" => Some(Self::Spectrum),
            "intensity" => Some(Self::Intensity),
            "squeeze" => Some(Self::Squeeze),
            "validity" => Some(Self::Validity),
            "oracle" => Some(Self::Oracle),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Range {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::Sweep(format!("count must be >= 2, got {count}")));
        }
        if !start.is_finite() || !stop.is_finite() || start >= stop {
            return Err(Error::Sweep(format!(
                "need finite start < stop, got {start} .. {stop}"
            )));
        }
        Ok(Self { start, stop, count })
    }

    pub fn values(&self) -> Vec<f64> {
        linspace(self.start, self.stop, self.count)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub axis: Axis,
    /// Primary axis; for `omega_x_kappa` this is the ω axis.
    pub range: Range,
    /// κ axis of the `omega_x_kappa` surface.
    pub kappa_range: Option<Range>,
    pub at_omega: f64,
    pub eps1: Complex64,
    pub eps2: Complex64,
    pub outputs: BTreeSet<Output>,
    pub params: SystemParams,
}

const SWEEP_KEYS: &[&str] = &[
    "axis",
    "start",
    "stop",
    "count",
    "kappa_start",
    "kappa_stop",
    "kappa_count",
    "at_omega",
    "eps1",
    "eps2",
    "outputs",
];

fn count_value(e: &Entry) -> Result<usize> {
    e.value.parse::<usize>().map_err(|_| Error::Config {
        line: e.line,
        message: format!(
            "`{}` expects a non-negative integer, got `{}`",
            e.key, e.value
        ),
    })
}

impl SweepSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let entries = parse_entries(text)?;
        let (own, rest): (Vec<Entry>, Vec<Entry>) = entries
            .into_iter()
            .partition(|e| SWEEP_KEYS.contains(&e.key.as_str()));
        let params = params_from_entries(&rest, SystemParams::default())?;
        let get = |k: &str| own.iter().find(|e| e.key == k);
        let real = |k: &str| get(k).map(real_value).transpose();

        let axis_entry = get("axis").ok_or_else(|| Error::Sweep("missing `axis`".into()))?;
        let axis = Axis::parse(&axis_entry.value).ok_or_else(|| Error::Config {
            line: axis_entry.line,
            message: format!(
                "unknown axis `{}` (omega, kappa, tau, omega_x_kappa)",
                axis_entry.value
            ),
        })?;
        let need = |k: &str| get(k).ok_or_else(|| Error::Sweep(format!("missing `{k}`")));
        let range = Range::new(
            real_value(need("start")?)?,
            real_value(need("stop")?)?,
            count_value(need("count")?)?,
        )?;
        let kappa_range = if axis == Axis::OmegaKappa {
            Some(Range::new(
                real_value(need("kappa_start")?)?,
                real_value(need("kappa_stop")?)?,
                count_value(need("kappa_count")?)?,
            )?)
        } else {
            for k in ["kappa_start", "kappa_stop", "kappa_count"] {
                if let Some(e) = get(k) {
                    return Err(Error::Config {
                        line: e.line,
                        message: format!("`{k}` only applies to axis = omega_x_kappa"),
                    });
                }
            }
            None
        };
        if matches!(axis, Axis::Kappa | Axis::OmegaKappa)
            && range_start_kappa(axis, &range, kappa_range.as_ref()) < 0.0
        {
            return Err(Error::Sweep("kappa values must be >= 0".into()));
        }
        let zero = Complex64::new(0.0, 0.0);
        let eps1 = get("eps1").map(complex_value).transpose()?.unwrap_or(zero);
        let eps2 = get("eps2").map(complex_value).transpose()?.unwrap_or(zero);

        let mut outputs = BTreeSet::new();
        if let Some(e) = get("outputs") {
            for name in e.value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let o = Output::parse(name).ok_or_else(|| Error::Config {
                    line: e.line,
                    message: format!(
                        "unknown output `{name}` (spectrum, intensity, squeeze, validity, oracle)"
                    ),
                })?;
                outputs.insert(o);
            }
        }
        if outputs.is_empty() {
            outputs.insert(if axis == Axis::Tau {
                Output::Squeeze
            } else {
                Output::Spectrum
            });
        }
        let spec = Self {
            axis,
            range,
            kappa_range,
            at_omega: real("at_omega")?.unwrap_or(0.0),
            eps1,
            eps2,
            outputs,
            params,
        };
        spec.check_outputs()?;
        Ok(spec)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    fn check_outputs(&self) -> Result<()> {
        for o in &self.outputs {
            let ok = match o {
                Output::Squeeze => self.axis == Axis::Tau,
                Output::Spectrum | Output::Intensity => self.axis != Axis::Tau,
                Output::Validity | Output::Oracle => true,
            };
            if !ok {
                return Err(Error::Sweep(format!(
                    "output {o:?} is not available on axis {}",
                    self.axis.name()
                )));
            }
        }
        Ok(())
    }
}

fn range_start_kappa(axis: Axis, range: &Range, kappa: Option<&Range>) -> f64 {
    match axis {
        Axis::Kappa => range.start,
        _ => kappa.map_or(0.0, |k| k.start),
    }
}

pub fn spectrum_table(curve: &SpectrumCurve) -> CsvTable {
    let mut t = CsvTable::new(&["omega", "s_plus", "s_minus", "n1", "n2", "entangled"]);
    for i in 0..curve.len() {
        t.push(vec![
            fmt_float(curve.omega[i]),
            fmt_float(curve.s_plus[i]),
            fmt_float(curve.s_minus[i]),
            fmt_float(curve.n1[i]),
            fmt_float(curve.n2[i]),
            fmt_bool(curve.entangled[i]).into(),
        ]);
    }
    t
}

/// Squeeze parameters along a τ grid.
pub fn squeeze_table(
    eff: &EffectiveParams,
    eps1: Complex64,
    eps2: Complex64,
    taus: &[f64],
    tau_diss: f64,
) -> Result<CsvTable> {
    let mut t = CsvTable::new(&["tau", "r", "eps_phase", "within_horizon"]);
    for &tau in taus {
        let s = squeeze_parameters(&EvolutionInput {
            eff: *eff,
            eps1,
            eps2,
            tau,
            tau_diss,
        })?;
        t.push(vec![
            fmt_float(tau),
            fmt_float(s.r),
            fmt_float(s.eps_phase),
            fmt_bool(s.within_horizon).into(),
        ]);
    }
    Ok(t)
}

fn validity_text(params: &SystemParams, eff: &EffectiveParams) -> String {
    check_validity(params, eff, DEFAULT_MARGIN_FIRST, DEFAULT_MARGIN_SECOND).to_report()
}

fn kappa_comment(values: &[f64]) -> String {
    format!(
        "kappa range {} .. {} ({} values)",
        values[0],
        values[values.len() - 1],
        values.len()
    )
}

pub fn run_sweep(spec: &SweepSpec) -> Result<Artifacts> {
    let eff = derive_effective(&spec.params)?;
    let mut res = Artifacts::default();
    let wants = |o: Output| spec.outputs.contains(&o);

    match spec.axis {
        Axis::Omega => {
            let grid = spec.range.values();
            let curve = squeezing_spectrum(&spec.params, &eff, &grid);
            if wants(Output::Spectrum) {
                res.table("spectrum.csv", spectrum_table(&curve));
                let svg = line_plot(
                    "Squeezing spectrum",
                    "omega / g",
                    "S",
                    &[Series {
                        label: "S+".into(),
                        x: &curve.omega,
                        y: &curve.s_plus,
                    }],
                    Some(1.0),
                );
                res.text("spectrum.svg", svg);
            }
            if wants(Output::Intensity) {
                let mut t = CsvTable::new(&["omega", "n1", "n2"]);
                if let Some((p1, p2)) = curve.peak_terms {
                    t = t.comment(format!(
                        "coherent peak terms at omega = 0: n1 {p1:.6}, n2 {p2:.6}"
                    ));
                }
                for i in 0..curve.len() {
                    t.push(vec![
                        fmt_float(curve.omega[i]),
                        fmt_float(curve.n1[i]),
                        fmt_float(curve.n2[i]),
                    ]);
                }
                res.table("intensity.csv", t);
                let svg = line_plot(
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
                );
                res.text("intensity.svg", svg);
            }
            if wants(Output::Oracle) {
                let oracle = spectrum_matrix_oracle(&spec.params, &eff, &grid);
                let d = compare_curves(&curve, &oracle, 1e-300);
                res.text("oracle.txt", format!(
                        "s_plus_max_rel = {:.6e}\ns_minus_max_rel = {:.6e}\nn1_max_rel = {:.6e}\nn2_max_rel = {:.6e}\nsingular_mismatch = {}\n",
                        d.s_plus, d.s_minus, d.n1, d.n2, d.singular_mismatch
                    ));
            }
            if wants(Output::Validity) {
                res.text("validity.txt", validity_text(&spec.params, &eff));
            }
        }
        Axis::Kappa => {
            let kappas = spec.range.values();
            let grid = [spec.at_omega];
            let rows: Vec<(SpectrumCurve, SpectrumCurve)> = kappas
                .par_iter()
                .map(|&k| {
                    let p = spec.params.with_kappa(k);
                    let c = squeezing_spectrum(&p, &eff, &grid);
                    let o = if wants(Output::Oracle) {
                        spectrum_matrix_oracle(&p, &eff, &grid)
                    } else {
                        c.clone()
                    };
                    (c, o)
                })
                .collect();
            if wants(Output::Spectrum) || wants(Output::Intensity) {
                let mut t = CsvTable::new(&["kappa", "s_plus", "s_minus", "n1", "n2", "entangled"])
                    .comment(format!("omega = {}", spec.at_omega))
                    .comment(kappa_comment(&kappas));
                for (k, (c, _)) in kappas.iter().zip(&rows) {
                    t.push(vec![
                        fmt_float(*k),
                        fmt_float(c.s_plus[0]),
                        fmt_float(c.s_minus[0]),
                        fmt_float(c.n1[0]),
                        fmt_float(c.n2[0]),
                        fmt_bool(c.entangled[0]).into(),
                    ]);
                }
                let s_plus = t.column("s_plus").unwrap_or_default();
                res.table("kappa.csv", t);
                let svg = line_plot(
                    &format!("S+ at omega = {}", spec.at_omega),
                    "kappa / g",
                    "S+",
                    &[Series {
                        label: "S+".into(),
                        x: &kappas,
                        y: &s_plus,
                    }],
                    Some(1.0),
                );
                res.text("kappa.svg", svg);
            }
            if wants(Output::Oracle) {
                let worst = rows
                    .iter()
                    .map(|(c, o)| compare_curves(c, o, 1e-300).max())
                    .fold(0.0, f64::max);
                res.text("oracle.txt", format!("max_rel_deviation = {worst:.6e}\n"));
            }
            if wants(Output::Validity) {
                let mut t = CsvTable::new(&[
                    "kappa",
                    "ratio_first_stage",
                    "ratio_second_stage",
                    "tau_diss",
                    "pass",
                ]);
                for &k in &kappas {
                    let v = check_validity(
                        &spec.params.with_kappa(k),
                        &eff,
                        DEFAULT_MARGIN_FIRST,
                        DEFAULT_MARGIN_SECOND,
                    );
                    t.push(vec![
                        fmt_float(k),
                        fmt_float(v.ratio_first_stage),
                        fmt_float(v.ratio_second_stage),
                        fmt_float(v.tau_diss),
                        fmt_bool(v.passes()).into(),
                    ]);
                }
                res.table("validity.csv", t);
            }
        }
        Axis::Tau => {
            let taus = spec.range.values();
            if spec.range.start < 0.0 {
                return Err(Error::Sweep("tau values must be >= 0".into()));
            }
            let tau_diss = horizon(&eff, &spec.params);
            let t = squeeze_table(&eff, spec.eps1, spec.eps2, &taus, tau_diss)?
                .comment(format!("tau_diss = {tau_diss}"));
            let r = t.column("r").unwrap_or_default();
            if wants(Output::Squeeze) {
                res.table("squeeze.csv", t);
                let svg = line_plot(
                    "Squeeze parameter",
                    "tau g",
                    "r",
                    &[Series {
                        label: "r".into(),
                        x: &taus,
                        y: &r,
                    }],
                    None,
                );
                res.text("squeeze.svg", svg);
            }
            if wants(Output::Oracle) {
                let worst = taus
                    .iter()
                    .zip(&r)
                    .map(|(&tau, &ri)| {
                        let g = gaussian_evolve(
                            &eff,
                            &EvolutionInput {
                                eff,
                                eps1: spec.eps1,
                                eps2: spec.eps2,
                                tau,
                                tau_diss,
                            },
                        );
                        (g.squeeze_magnitude() - ri).abs()
                    })
                    .fold(0.0, f64::max);
                res.text(
                    "oracle.txt",
                    format!("gaussian_r_max_abs_deviation = {worst:.6e}\n"),
                );
            }
            if wants(Output::Validity) {
                res.text("validity.txt", validity_text(&spec.params, &eff));
            }
        }
        Axis::OmegaKappa => {
            let grid = spec.range.values();
            let kappas = spec
                .kappa_range
                .expect("omega_x_kappa carries a kappa range")
                .values();
            let curves: Vec<SpectrumCurve> = kappas
                .par_iter()
                .map(|&k| squeezing_spectrum(&spec.params.with_kappa(k), &eff, &grid))
                .collect();
            if wants(Output::Spectrum) || wants(Output::Intensity) {
                let intensity = wants(Output::Intensity);
                let mut cols = vec!["kappa", "omega", "s_plus", "s_minus", "entangled"];
                if intensity {
                    cols.extend(["n1", "n2"]);
                }
                let mut t = CsvTable::new(&cols).comment(kappa_comment(&kappas));
                for (k, c) in kappas.iter().zip(&curves) {
                    for i in 0..c.len() {
                        let mut row = vec![
                            fmt_float(*k),
                            fmt_float(c.omega[i]),
                            fmt_float(c.s_plus[i]),
                            fmt_float(c.s_minus[i]),
                            fmt_bool(c.entangled[i]).into(),
                        ];
                        if intensity {
                            row.extend([fmt_float(c.n1[i]), fmt_float(c.n2[i])]);
                        }
                        t.push(row);
                    }
                }
                res.table("surface.csv", t);
                let values: Vec<Vec<f64>> = curves.iter().map(|c| c.s_plus.clone()).collect();
                res.text(
                    "surface.svg",
                    heatmap("S+", "omega / g", "kappa / g", &grid, &kappas, &values, 200),
                );
            }
            if wants(Output::Oracle) {
                let worst = kappas
                    .iter()
                    .zip(&curves)
                    .map(|(&k, c)| {
                        compare_curves(
                            c,
                            &spectrum_matrix_oracle(&spec.params.with_kappa(k), &eff, &grid),
                            1e-300,
                        )
                        .max()
                    })
                    .fold(0.0, f64::max);
                res.text("oracle.txt", format!("max_rel_deviation = {worst:.6e}\n"));
            }
            if wants(Output::Validity) {
                res.text("validity.txt", validity_text(&spec.params, &eff));
            }
        }
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_minimal() {
        let s = SweepSpec::parse("axis = omega\nstart = -1\nstop = 1\ncount = 5\n").unwrap();
        assert_eq!(s.axis, Axis::Omega);
        assert_eq!(
            s.outputs.iter().copied().collect::<Vec<_>>(),
            vec![Output::Spectrum]
        );
        assert_eq!(s.params, SystemParams::default());
    }

    #[test]
    fn parse_rejects_bad_specs() {
        let bad = [
            "start = 0\nstop = 1\ncount = 3",
            "axis = omega\nstart = 1\nstop = 0\ncount = 3",
            "axis = omega\nstart = 0\nstop = 1\ncount = 1",
            "axis = spin\nstart = 0\nstop = 1\ncount = 3",
            "axis = omega\nstart = 0\nstop = 1\ncount = 3\nbogus = 2",
            "axis = omega\nstart = 0\nstop = 1\ncount = 3\noutputs = squeeze",
            "axis = tau\nstart = 0\nstop = 1\ncount = 3\noutputs = spectrum",
            "axis = omega_x_kappa\nstart = 0\nstop = 1\ncount = 3",
            "axis = omega\nstart = 0\nstop = 1\ncount = 3\nkappa_count = 4",
            "axis = kappa\nstart = -1\nstop = 1\ncount = 3",
        ];
        for text in bad {
            assert!(SweepSpec::parse(text).is_err(), "accepted: {text}");
        }
    }

    #[test]
    fn unknown_key_reports_line() {
        let err = SweepSpec::parse("axis = omega\nstart = 0\nstop = 1\ncount = 3\n\nfoo = 1")
            .unwrap_err();
        assert!(matches!(err, Error::Config { line: 6, .. }), "{err}");
    }

    #[test]
    fn tau_sweep_files() {
        let s = SweepSpec::parse(
            "axis = tau\nstart = 0\nstop = 3\ncount = 7\noutputs = squeeze, oracle, validity",
        )
        .unwrap();
        let res = run_sweep(&s).unwrap();
        let names: Vec<_> = res.files.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(
            names,
            ["squeeze.csv", "squeeze.svg", "oracle.txt", "validity.txt"]
        );
        let r = res.get_table("squeeze.csv").unwrap().column("r").unwrap();
        assert_eq!(r[0], 0.0);
        assert!(r.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn surface_shape() {
        let s = SweepSpec::parse(
            "axis = omega_x_kappa\nstart = -1\nstop = 1\ncount = 11\nkappa_start = 0.1\nkappa_stop = 1\nkappa_count = 4\noutputs = spectrum, intensity",
        )
        .unwrap();
        let res = run_sweep(&s).unwrap();
        let t = res.get_table("surface.csv").unwrap();
        assert_eq!(t.rows.len(), 44);
        assert_eq!(t.columns.len(), 7);
    }
}
