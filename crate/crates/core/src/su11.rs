//! Intracavity evolution under `H_eff`: the two-mode coherent-squeezed state
//! `S(ϑ)|ε1, ε2⟩` with `ϑ = r e^{iε}`.
//!
//! With `Λ = (λ1 + λ2)/2` and `φ² = (|η|² − Λ²) τ²`,
//!
//! ```text
//! b0     = [φ cosh φ + iτΛ sinh φ]⁻¹
//! tanh r = |τ η* b0 sinh φ|
//! ε      = arg(−i η* b0 sinh φ)
//! ```
//!
//! Everything is evaluated through the entire functions `cosh φ` and
//! `sinh φ / φ` of `φ²`, so the over-detuned regime `φ² < 0` needs no
//! complex square roots.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::{dissipation_horizon, EffectiveParams, SystemParams};

const SERIES_RADIUS: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvolutionInput {
    pub eff: EffectiveParams,
    pub eps1: Complex64,
    pub eps2: Complex64,
    pub tau: f64,
    /// Cavity horizon against which `within_horizon` is judged.
    pub tau_diss: f64,
}

impl EvolutionInput {
    /// Vacuum input, no horizon.
    pub fn vacuum(eff: EffectiveParams, tau: f64) -> Self {
        Self {
            eff,
            eps1: Complex64::new(0.0, 0.0),
            eps2: Complex64::new(0.0, 0.0),
            tau,
            tau_diss: f64::INFINITY,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SqueezeResult {
    /// Principal value of `φ`: real for `φ² ≥ 0`, positive imaginary otherwise.
    pub phi: Complex64,
    /// `None` at `φ = 0`, where `b0` has a pole (the product `b0 sinh φ` stays finite).
    pub b0: Option<Complex64>,
    pub r: f64,
    /// Squeeze phase in `(−π, π]`.
    pub eps_phase: f64,
    pub theta: Complex64,
    pub within_horizon: bool,
}

/// `cosh(√x)`, entire in `x`.
pub fn cosh_sqrt(x: f64) -> f64 {
    if x.abs() < SERIES_RADIUS * SERIES_RADIUS {
        1.0 + x / 2.0 + x * x / 24.0 + x * x * x / 720.0
    } else if x > 0.0 {
        x.sqrt().cosh()
    } else {
        (-x).sqrt().cos()
    }
}

/// `sinh(√x)/√x`, entire in `x`.
pub fn sinhc_sqrt(x: f64) -> f64 {
    if x.abs() < SERIES_RADIUS * SERIES_RADIUS {
        1.0 + x / 6.0 + x * x / 120.0 + x * x * x / 5040.0
    } else if x > 0.0 {
        let s = x.sqrt();
        s.sinh() / s
    } else {
        let s = (-x).sqrt();
        s.sin() / s
    }
}

fn principal_phase(z: Complex64) -> f64 {
    let a = z.im.atan2(z.re);
    if a <= -PI {
        PI
    } else {
        a
    }
}

/// Closed-form squeeze parameters after time `τ`.
pub fn squeeze_parameters(input: &EvolutionInput) -> Result<SqueezeResult> {
    let tau = input.tau;
    if !tau.is_finite() || tau < 0.0 {
        return Err(Error::param(
            "tau",
            format!("evolution time must be finite and >= 0, got {tau}"),
        ));
    }
    let eta = input.eff.eta;
    let half_sum = 0.5 * (input.eff.lambda1 + input.eff.lambda2);
    let phi_sq = (eta.norm_sqr() - half_sum * half_sum) * tau * tau;

    let ch = cosh_sqrt(phi_sq);
    let shc = sinhc_sqrt(phi_sq);
    let phi = if phi_sq >= 0.0 {
        Complex64::new(phi_sq.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-phi_sq).sqrt())
    };

    // b0 sinh φ = shc / (cosh φ + iτΛ shc); b0 itself = 1/(φ (cosh φ + iτΛ shc)).
    let reduced = Complex64::new(ch, tau * half_sum * shc);
    let b0_sinh = shc / reduced;
    let b0 = if phi == Complex64::new(0.0, 0.0) {
        None
    } else {
        Some(1.0 / (phi * reduced))
    };

    let tanh_r = (tau * eta.conj() * b0_sinh).norm();
    if tanh_r.is_nan() || tanh_r >= 1.0 {
        return Err(Error::SqueezeDomain { magnitude: tanh_r });
    }
    // |cosh φ + iτΛ shc| = cosh r, so sinh r = τ|η| shc; asinh keeps
    // precision where tanh r rounds towards 1.
    let r = (tau * eta.norm() * shc).asinh();
    let eps_phase = principal_phase(-Complex64::i() * eta.conj() * b0_sinh);

    Ok(SqueezeResult {
        phi,
        b0,
        r,
        eps_phase,
        theta: Complex64::from_polar(r, eps_phase),
        within_horizon: tau <= input.tau_diss,
    })
}

/// Cavity-decay horizon `τ_diss = min(1/κ1, 1/κ2)`; infinite when lossless.
pub fn horizon(_eff: &EffectiveParams, params: &SystemParams) -> f64 {
    dissipation_horizon(params.kappa1, params.kappa2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::derive_effective;
    use approx::assert_relative_eq;

    fn resonant(eta: Complex64) -> EffectiveParams {
        EffectiveParams {
            delta_s1: 0.0,
            delta_s2: 0.0,
            delta_13: 1.0,
            delta_24: 1.0,
            delta: 1.0,
            lambda1: 0.0,
            lambda2: 0.0,
            eta,
        }
    }

    #[test]
    fn large_resonant_squeeze_keeps_precision() {
        let eff = EffectiveParams {
            eta: Complex64::new(0.4511755552477453, 0.0),
            ..Default::default()
        };
        let tau = 19.125041783665967;
        let r = squeeze_parameters(&EvolutionInput::vacuum(eff, tau))
            .unwrap()
            .r;
        assert_relative_eq!(r, eff.eta.norm() * tau, max_relative = 1e-13);
    }

    #[test]
    fn resonant_growth_is_linear() {
        let eta = Complex64::new(0.3, -0.4);
        for &tau in &[0.1, 0.7, 2.0, 3.5] {
            let s = squeeze_parameters(&EvolutionInput::vacuum(resonant(eta), tau)).unwrap();
            let phi = 0.5 * tau;
            assert_relative_eq!(s.phi.re, phi, max_relative = 1e-15);
            assert_relative_eq!(s.r, phi, max_relative = 1e-12);
            let b0 = s.b0.unwrap();
            assert_relative_eq!(b0.re, 1.0 / (phi * phi.cosh()), max_relative = 1e-12);
            assert!(b0.im.abs() < 1e-15);
        }
    }

    #[test]
    fn zero_time_is_identity() {
        let eff = derive_effective(&SystemParams::default()).unwrap();
        let s = squeeze_parameters(&EvolutionInput::vacuum(eff, 0.0)).unwrap();
        assert_eq!(s.r, 0.0);
        assert_eq!(s.theta.norm(), 0.0);
        assert!(s.b0.is_none());
    }

    #[test]
    fn negative_time_rejected() {
        let eff = derive_effective(&SystemParams::default()).unwrap();
        assert!(squeeze_parameters(&EvolutionInput::vacuum(eff, -1.0)).is_err());
    }

    #[test]
    fn entire_functions_continuous_at_branch_point() {
        let edge = SERIES_RADIUS * SERIES_RADIUS;
        for &x in &[edge, -edge] {
            let below = x * (1.0 - 1e-9);
            let above = x * (1.0 + 1e-9);
            assert!((cosh_sqrt(below) - cosh_sqrt(above)).abs() < 1e-12);
            assert!((sinhc_sqrt(below) - sinhc_sqrt(above)).abs() < 1e-12);
        }
        assert!((sinhc_sqrt(1e-13) - sinhc_sqrt(-1e-13)).abs() < 1e-12);
        assert_eq!(sinhc_sqrt(0.0), 1.0);
        assert_relative_eq!(sinhc_sqrt(-PI * PI), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn over_detuned_regime_oscillates() {
        // Λ > |η|: r stays bounded and returns to zero when sin(|φ|) = 0.
        let mut eff = resonant(Complex64::new(0.0, 0.3));
        eff.lambda1 = 0.5;
        eff.lambda2 = 0.5;
        let omega = (0.25f64 - 0.09).sqrt();
        let tau_zero = PI / omega;
        let s = squeeze_parameters(&EvolutionInput::vacuum(eff, tau_zero)).unwrap();
        assert!(s.phi.re == 0.0 && s.phi.im > 0.0);
        assert!(s.r < 1e-12);
        let s = squeeze_parameters(&EvolutionInput::vacuum(eff, tau_zero / 2.0)).unwrap();
        // |v| = |η| τ |sin φ/φ| at sin = 1
        assert_relative_eq!(s.r, (0.3 / omega).asinh(), max_relative = 1e-12);
    }

    #[test]
    fn horizon_examples() {
        let eff = derive_effective(&SystemParams::default()).unwrap();
        let p = SystemParams {
            kappa1: 0.5,
            kappa2: 2.0,
            ..Default::default()
        };
        assert_eq!(horizon(&eff, &p), 0.5);
        assert_eq!(horizon(&eff, &SystemParams::figure2(0.05)), 20.0);
        let p = SystemParams {
            kappa1: 0.0,
            kappa2: 0.0,
            ..Default::default()
        };
        assert!(horizon(&eff, &p).is_infinite());
        let p = SystemParams {
            kappa1: 0.0,
            kappa2: 0.25,
            ..Default::default()
        };
        assert_eq!(horizon(&eff, &p), 4.0);
    }

    #[test]
    fn horizon_flag_is_advisory() {
        let p = SystemParams::figure2(0.5);
        let eff = derive_effective(&p).unwrap();
        let input = EvolutionInput {
            tau: 3.0,
            tau_diss: horizon(&eff, &p),
            ..EvolutionInput::vacuum(eff, 0.0)
        };
        let s = squeeze_parameters(&input).unwrap();
        assert!(!s.within_horizon);
        assert!(s.r > 0.0);
    }

    #[test]
    fn phase_in_principal_range() {
        let eff = resonant(Complex64::new(0.0, 1.0));
        // −i η* = −i(−i) = −1 → ε = π, not −π.
        let s = squeeze_parameters(&EvolutionInput::vacuum(eff, 0.5)).unwrap();
        assert_eq!(s.eps_phase, PI);
    }
}
