//! Frequency-domain matrix oracle for the output spectra.
//!
//! Nothing here uses the closed-form `S+` expression: both quadratures and
//! both photon-number noises come from the transfer matrix of the linear
//! Langevin system.

use rayon::prelude::*;

use crate::langevin::{number_noise, quadrature_noise, LinearModel, Quadrature};
use crate::params::{EffectiveParams, SystemParams};
use crate::spectra::{displacements_steady, SpectrumCurve};

/// Points whose resolvent condition number exceeds this are flagged singular.
pub const MAX_CONDITION: f64 = 1e12;

pub fn spectrum_matrix_oracle(
    params: &SystemParams,
    eff: &EffectiveParams,
    omega_grid: &[f64],
) -> SpectrumCurve {
    let model = LinearModel::new(params, eff);
    let mut curve = model_oracle(&model, omega_grid);
    curve.peak_terms = displacements_steady(params, eff)
        .ok()
        .map(|(a, b)| (params.kappa1 * a.norm_sqr(), params.kappa2 * b.norm_sqr()));
    curve
}

pub fn model_oracle(model: &LinearModel, omega_grid: &[f64]) -> SpectrumCurve {
    let points = omega_grid
        .par_iter()
        .map(|&w| oracle_point(model, w))
        .collect();
    SpectrumCurve::from_points(omega_grid, points, None)
}

fn oracle_point(model: &LinearModel, omega: f64) -> Option<[f64; 4]> {
    let tp = model.transfer(omega)?;
    let tm = model.transfer(-omega)?;
    if tp.condition > MAX_CONDITION || tm.condition > MAX_CONDITION {
        return None;
    }
    let sp = quadrature_noise(&Quadrature::Plus.weights(), &tp.matrix, &tm.matrix).re;
    let sm = quadrature_noise(&Quadrature::Minus.weights(), &tp.matrix, &tm.matrix).re;
    Some([
        sp,
        sm,
        number_noise(0, &tp.matrix),
        number_noise(1, &tp.matrix),
    ])
}

/// Pointwise agreement between two curves on the same grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveDeviation {
    pub s_plus: f64,
    pub s_minus: f64,
    pub n1: f64,
    pub n2: f64,
    /// Points singular in one curve but not the other.
    pub singular_mismatch: usize,
}

impl CurveDeviation {
    pub fn max(&self) -> f64 {
        self.s_plus.max(self.s_minus).max(self.n1).max(self.n2)
    }
}

/// Largest relative deviation `|x − y| / max(|y|, floor)` per column.
pub fn compare_curves(a: &SpectrumCurve, b: &SpectrumCurve, floor: f64) -> CurveDeviation {
    assert_eq!(a.omega, b.omega, "curves must share the grid");
    let col = |x: &[f64], y: &[f64]| {
        x.iter()
            .zip(y)
            .filter(|(u, v)| u.is_finite() && v.is_finite())
            .map(|(u, v)| (u - v).abs() / v.abs().max(floor))
            .fold(0.0, f64::max)
    };
    CurveDeviation {
        s_plus: col(&a.s_plus, &b.s_plus),
        s_minus: col(&a.s_minus, &b.s_minus),
        n1: col(&a.n1, &b.n1),
        n2: col(&a.n2, &b.n2),
        singular_mismatch: a
            .singular
            .iter()
            .zip(&b.singular)
            .filter(|(x, y)| x != y)
            .count(),
    }
}
