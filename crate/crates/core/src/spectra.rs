//! Output-field solution and spectra.
//!
//! The squeezing spectrum `S+(ω)` uses the closed form obtained from the
//! frequency-domain output fields with vacuum input,
//!
//! ```text
//! S+(ω) = (‖η|² + α2 α1*|² + |η|² κ1 κ2) / (2|α2 α1 − |η|²|²)
//!       − i√(κ1κ2) [η(|η|² + α1 α2*) − η*(|η|² + α2 α1*)] / (2|α2 α1 − |η|²|²)
//!       + (same with αj → βj)
//! ```
//!
//! `S−(ω)` is computed from the `I−` quadrature through the generic
//! transfer-matrix route in [`crate::langevin`], so `S+ = S−` is something
//! to check, not an assumption. The coherent `δ(ω)` contributions of the
//! drives are kept apart from the sampled curves as `peak_terms`.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::langevin::{quadrature_noise, LinearModel, Quadrature};
use crate::params::{EffectiveParams, SystemParams};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Frequency-dependent factors of the output-field solution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IoCoefficients {
    pub omega: f64,
    pub alpha1: Complex64,
    pub alpha2: Complex64,
    pub beta1: Complex64,
    pub beta2: Complex64,
    /// `α1 α2 − |η|²`
    pub det_alpha: Complex64,
    /// `β1 β2 − |η|²`
    pub det_beta: Complex64,
}

impl IoCoefficients {
    pub fn new(model: &LinearModel, omega: f64) -> Self {
        let (k1, k2) = (0.5 * model.kappa1, 0.5 * model.kappa2);
        let alpha1 = Complex64::new(k1, model.lambda1 - omega);
        let alpha2 = Complex64::new(k2, -(model.lambda2 + omega));
        let beta1 = Complex64::new(k2, model.lambda2 - omega);
        let beta2 = Complex64::new(k1, -(model.lambda1 + omega));
        let e2 = model.eta.norm_sqr();
        Self {
            omega,
            alpha1,
            alpha2,
            beta1,
            beta2,
            det_alpha: alpha1 * alpha2 - e2,
            det_beta: beta1 * beta2 - e2,
        }
    }
}

fn closed_branch(model: &LinearModel, x1: Complex64, x2: Complex64) -> Complex64 {
    let eta = model.eta;
    let e2 = eta.norm_sqr();
    let kk = model.kappa1 * model.kappa2;
    let denom = 2.0 * (x2 * x1 - e2).norm_sqr();
    let direct = ((e2 + x2 * x1.conj()).norm_sqr() + e2 * kk) / denom;
    let cross =
        I * kk.sqrt() * (eta * (e2 + x1 * x2.conj()) - eta.conj() * (e2 + x2 * x1.conj())) / denom;
    direct - cross
}

/// Closed-form `S+(ω)`; `None` at a singular denominator.
pub fn s_plus_closed(model: &LinearModel, omega: f64) -> Option<f64> {
    let c = IoCoefficients::new(model, omega);
    if c.det_alpha.norm_sqr() == 0.0 || c.det_beta.norm_sqr() == 0.0 {
        return None;
    }
    let s = closed_branch(model, c.alpha1, c.alpha2) + closed_branch(model, c.beta1, c.beta2);
    s.re.is_finite().then_some(s.re)
}

/// Noise parts `(N1, N2) = |η|²κ1κ2 (1/|det_α|², 1/|det_β|²)` of the output
/// intensity correlations.
pub fn number_noise_closed(model: &LinearModel, omega: f64) -> Option<(f64, f64)> {
    let c = IoCoefficients::new(model, omega);
    let num = model.eta.norm_sqr() * model.kappa1 * model.kappa2;
    let (da, db) = (c.det_alpha.norm_sqr(), c.det_beta.norm_sqr());
    if da == 0.0 || db == 0.0 {
        return None;
    }
    Some((num / da, num / db))
}

/// `S−(ω)` through the transfer-matrix route.
pub fn s_minus_transfer(model: &LinearModel, omega: f64) -> Option<f64> {
    quadrature_spectrum(model, omega, Quadrature::Minus)
}

pub(crate) fn quadrature_spectrum(model: &LinearModel, omega: f64, q: Quadrature) -> Option<f64> {
    let tp = model.transfer(omega)?;
    let tm = model.transfer(-omega)?;
    let s = quadrature_noise(&q.weights(), &tp.matrix, &tm.matrix).re;
    s.is_finite().then_some(s)
}

/// Steady intracavity displacements `(α0, β0)` as printed alongside the
/// displaced Langevin equations.
pub fn displacements(
    params: &SystemParams,
    eff: &EffectiveParams,
) -> Result<(Complex64, Complex64)> {
    let (k1, k2) = (params.kappa1, params.kappa2);
    let (l1, l2) = (eff.lambda1, eff.lambda2);
    let etac = eff.eta.conj();
    let f1 = Complex64::new(k1, 2.0 * l1);
    let f2 = Complex64::new(k2, 2.0 * l2);
    let den = f1 * f2 + 4.0 * etac * etac;
    let scale = f1.norm() * f2.norm() + 4.0 * eff.eta.norm_sqr();
    if den.norm() <= 1e-14 * scale || !den.norm().is_finite() {
        return Err(Error::SingularDisplacement {
            magnitude: den.norm(),
        });
    }
    let alpha0 = (-2.0 * I * params.mu1.conj() * f2 - 4.0 * params.mu2.conj() * etac) / den;
    let beta0 = (-2.0 * I * params.mu2.conj() * f1 - 4.0 * params.mu1.conj() * etac) / den;
    Ok((alpha0, beta0))
}

/// Displacements from a direct linear solve of the driven steady state.
pub fn displacements_steady(
    params: &SystemParams,
    eff: &EffectiveParams,
) -> Result<(Complex64, Complex64)> {
    let model = LinearModel::new(params, eff);
    let drift_det = model.drift().determinant();
    model
        .steady_state(params.mu1, params.mu2)
        .filter(|(a, b)| a.norm().is_finite() && b.norm().is_finite())
        .ok_or(Error::SingularDisplacement {
            magnitude: drift_det.norm(),
        })
}

/// Printed-formula and steady-state displacements side by side.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DisplacementComparison {
    pub printed: (Complex64, Complex64),
    pub steady: (Complex64, Complex64),
}

impl DisplacementComparison {
    pub fn new(params: &SystemParams, eff: &EffectiveParams) -> Result<Self> {
        Ok(Self {
            printed: displacements(params, eff)?,
            steady: displacements_steady(params, eff)?,
        })
    }

    fn peaks(params: &SystemParams, (a, b): (Complex64, Complex64)) -> (f64, f64) {
        (params.kappa1 * a.norm_sqr(), params.kappa2 * b.norm_sqr())
    }

    pub fn printed_peaks(&self, params: &SystemParams) -> (f64, f64) {
        Self::peaks(params, self.printed)
    }

    pub fn steady_peaks(&self, params: &SystemParams) -> (f64, f64) {
        Self::peaks(params, self.steady)
    }

    /// Largest `|printed − steady| / max(|printed|, |steady|)` over `α0, β0`.
    pub fn max_relative_deviation(&self) -> f64 {
        let rel = |x: Complex64, y: Complex64| {
            let s = x.norm().max(y.norm());
            if s == 0.0 {
                0.0
            } else {
                (x - y).norm() / s
            }
        };
        rel(self.printed.0, self.steady.0).max(rel(self.printed.1, self.steady.1))
    }

    pub fn to_report(&self, params: &SystemParams) -> String {
        let (pa, pb) = self.printed_peaks(params);
        let (sa, sb) = self.steady_peaks(params);
        format!(
            "alpha0_printed = {}\nbeta0_printed = {}\nalpha0_steady = {}\nbeta0_steady = {}\n\
             peak1_printed = {pa:.6}\npeak2_printed = {pb:.6}\npeak1_steady = {sa:.6}\n\
             peak2_steady = {sb:.6}\ndisplacement_max_rel_deviation = {:.6e}\n",
            self.printed.0,
            self.printed.1,
            self.steady.0,
            self.steady.1,
            self.max_relative_deviation(),
        )
    }
}

/// Sampled output spectra.
///
/// Grid points where a denominator vanishes carry `NaN` values and
/// `singular[i] = true`; they are never silently dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumCurve {
    pub omega: Vec<f64>,
    pub s_plus: Vec<f64>,
    pub s_minus: Vec<f64>,
    pub n1: Vec<f64>,
    pub n2: Vec<f64>,
    pub entangled: Vec<bool>,
    pub singular: Vec<bool>,
    /// `(κ1|α0|², κ2|β0|²)`, weights of the `δ(ω)` coherent peaks; `None`
    /// when the displacement denominator is singular.
    pub peak_terms: Option<(f64, f64)>,
}

impl SpectrumCurve {
    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }

    pub(crate) fn from_points(
        omega: &[f64],
        points: Vec<Option<[f64; 4]>>,
        peak_terms: Option<(f64, f64)>,
    ) -> Self {
        let n = omega.len();
        let mut c = SpectrumCurve {
            omega: omega.to_vec(),
            s_plus: Vec::with_capacity(n),
            s_minus: Vec::with_capacity(n),
            n1: Vec::with_capacity(n),
            n2: Vec::with_capacity(n),
            entangled: Vec::with_capacity(n),
            singular: Vec::with_capacity(n),
            peak_terms,
        };
        for p in points {
            let [sp, sm, n1, n2] = p.unwrap_or([f64::NAN; 4]);
            c.s_plus.push(sp);
            c.s_minus.push(sm);
            c.n1.push(n1);
            c.n2.push(n2);
            c.entangled.push(sp + sm < 2.0);
            c.singular.push(p.is_none());
        }
        c
    }

    pub fn min_s_plus(&self) -> Option<(f64, f64)> {
        self.omega
            .iter()
            .zip(&self.s_plus)
            .filter(|(_, s)| s.is_finite())
            .map(|(&w, &s)| (w, s))
            .min_by(|a, b| a.1.total_cmp(&b.1))
    }
}

/// `S±, N1, N2` on the grid, with entanglement flags and peak terms.
pub fn squeezing_spectrum(
    params: &SystemParams,
    eff: &EffectiveParams,
    omega_grid: &[f64],
) -> SpectrumCurve {
    let model = LinearModel::new(params, eff);
    let points = omega_grid
        .par_iter()
        .map(|&w| spectrum_point(&model, w))
        .collect();
    let peak_terms = displacements(params, eff)
        .ok()
        .map(|(a, b)| (params.kappa1 * a.norm_sqr(), params.kappa2 * b.norm_sqr()));
    SpectrumCurve::from_points(omega_grid, points, peak_terms)
}

/// Spectrum of a bare linear model (no drives, so no peak terms).
pub fn model_spectrum(model: &LinearModel, omega_grid: &[f64]) -> SpectrumCurve {
    let points = omega_grid
        .par_iter()
        .map(|&w| spectrum_point(model, w))
        .collect();
    SpectrumCurve::from_points(omega_grid, points, None)
}

fn spectrum_point(model: &LinearModel, omega: f64) -> Option<[f64; 4]> {
    let sp = s_plus_closed(model, omega)?;
    let sm = s_minus_transfer(model, omega)?;
    let (n1, n2) = number_noise_closed(model, omega)?;
    Some([sp, sm, n1, n2])
}

/// Entanglement flags and the contiguous bands where the sum criterion holds.
#[derive(Clone, Debug, PartialEq)]
pub struct EntanglementSummary {
    pub flags: Vec<bool>,
    /// `(ω_first, ω_last)` of each run of flagged grid points.
    pub bands: Vec<(f64, f64)>,
}

/// Applies `S+(ω) + S−(ω) < 2` pointwise.
pub fn duan_entangled(curve: &SpectrumCurve) -> EntanglementSummary {
    let flags: Vec<bool> = curve
        .s_plus
        .iter()
        .zip(&curve.s_minus)
        .map(|(p, m)| p + m < 2.0)
        .collect();
    let mut bands = Vec::new();
    let mut start: Option<usize> = None;
    for (i, &f) in flags.iter().enumerate() {
        match (f, start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                bands.push((curve.omega[s], curve.omega[i - 1]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        bands.push((curve.omega[s], curve.omega[flags.len() - 1]));
    }
    EntanglementSummary { flags, bands }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinimaOptions {
    /// Candidates within this many grid steps of each other merge into the lower one.
    pub merge_steps: usize,
    /// Only minima below this level count as squeezing minima.
    pub level: f64,
}

impl Default for MinimaOptions {
    fn default() -> Self {
        Self {
            merge_steps: 2,
            level: 1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumAnalysis {
    /// Squeezing minima `(ω, S+)`, below `level`, after merging.
    pub minima: Vec<(f64, f64)>,
    /// Every discrete local minimum regardless of level (after merging).
    pub all_minima: Vec<(f64, f64)>,
    /// Measure of `{ω : S+(ω) < 1}` with linear interpolation at crossings.
    pub bandwidth: f64,
}

pub fn analyze_spectrum(curve: &SpectrumCurve) -> Result<SpectrumAnalysis> {
    analyze_spectrum_with(curve, MinimaOptions::default())
}

pub fn analyze_spectrum_with(
    curve: &SpectrumCurve,
    opts: MinimaOptions,
) -> Result<SpectrumAnalysis> {
    let s = &curve.s_plus;
    let w = &curve.omega;
    if s.len() < 3 {
        return Err(Error::param(
            "omega",
            "spectrum analysis needs at least 3 grid points",
        ));
    }

    let mut candidates: Vec<usize> = Vec::new();
    for i in 1..s.len() - 1 {
        // The right-hand test is non-strict so a two-point flat bottom still registers once.
        if s[i] < s[i - 1] && s[i] <= s[i + 1] {
            match candidates.last_mut() {
                Some(last) if i - *last <= opts.merge_steps => {
                    if s[i] < s[*last] {
                        *last = i;
                    }
                }
                _ => candidates.push(i),
            }
        }
    }
    let all_minima: Vec<(f64, f64)> = candidates.iter().map(|&i| (w[i], s[i])).collect();
    let minima = all_minima
        .iter()
        .copied()
        .filter(|&(_, v)| v < opts.level)
        .collect();

    let mut bandwidth = 0.0;
    for i in 0..s.len() - 1 {
        let (a, b) = (s[i] - 1.0, s[i + 1] - 1.0);
        if !(a.is_finite() && b.is_finite()) {
            continue;
        }
        let dw = w[i + 1] - w[i];
        bandwidth += match (a < 0.0, b < 0.0) {
            (true, true) => dw,
            (true, false) => dw * a / (a - b),
            (false, true) => dw * b / (b - a),
            (false, false) => 0.0,
        };
    }
    Ok(SpectrumAnalysis {
        minima,
        all_minima,
        bandwidth,
    })
}
