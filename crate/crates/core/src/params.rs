//! Physical parameters, effective-Hamiltonian coefficients and the
//! adiabatic-elimination audit.
//!
//! The atom has excited levels `|a⟩, |b⟩` and ground levels `|c⟩, |d⟩`.
//! Cavity mode 1 drives `|a⟩↔|c⟩` (detuning `Δ1`), mode 2 drives `|b⟩↔|d⟩`
//! (`Δ2`); classical fields `Ω3` on `|a⟩↔|d⟩` (`Δ3`) and `Ω4` on `|b⟩↔|c⟩`
//! (`Δ4`). Eliminating `|a⟩, |b⟩` and then `|c⟩` with the atom prepared in
//! `|d⟩` leaves
//!
//! ```text
//! H_eff = λ1 a1†a1 + λ2 a2†a2 + η a1 a2 + η* a1† a2†
//! ```

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default margin on `min|Δk| / max(|g|, |Ω|)`.
pub const DEFAULT_MARGIN_FIRST: f64 = 5.0;
/// Default margin on `|δ| / max(|Ω3* g1/Δ13|, |Ω4 g2*/Δ24|)`.
pub const DEFAULT_MARGIN_SECOND: f64 = 5.0;

/// Raw atom/cavity parameters, in units of the reference rate `g`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SystemParams {
    pub g1: Complex64,
    pub g2: Complex64,
    pub omega3: Complex64,
    pub omega4: Complex64,
    pub delta1: f64,
    pub delta2: f64,
    pub delta3: f64,
    pub delta4: f64,
    pub kappa1: f64,
    pub kappa2: f64,
    pub mu1: Complex64,
    pub mu2: Complex64,
}

impl SystemParams {
    /// Working point of the squeezing-surface and spectrum figures, with
    /// symmetric cavity loss `kappa` and no external drive.
    pub fn figure2(kappa: f64) -> Self {
        Self {
            g1: Complex64::new(1.0, 0.0),
            g2: Complex64::new(1.0, 0.0),
            omega3: Complex64::new(0.0, 1.5),
            omega4: Complex64::new(1.5, 0.0),
            delta1: 10.0,
            delta2: 12.0,
            delta3: 11.5,
            delta4: 10.5,
            kappa1: kappa,
            kappa2: kappa,
            mu1: Complex64::new(0.0, 0.0),
            mu2: Complex64::new(0.0, 0.0),
        }
    }

    /// Working point of the intensity figure: stronger classical fields,
    /// `κ = 0.1` and drives `μ1 = μ2 = 0.8`.
    pub fn figure4() -> Self {
        Self {
            omega3: Complex64::new(0.0, 2.5),
            omega4: Complex64::new(2.5, 0.0),
            kappa1: 0.1,
            kappa2: 0.1,
            mu1: Complex64::new(0.8, 0.0),
            mu2: Complex64::new(0.8, 0.0),
            ..Self::figure2(0.1)
        }
    }

    pub fn with_kappa(self, kappa: f64) -> Self {
        Self {
            kappa1: kappa,
            kappa2: kappa,
            ..self
        }
    }

    /// Multiplies every rate by `s`.
    pub fn scaled(self, s: f64) -> Self {
        Self {
            g1: self.g1 * s,
            g2: self.g2 * s,
            omega3: self.omega3 * s,
            omega4: self.omega4 * s,
            delta1: self.delta1 * s,
            delta2: self.delta2 * s,
            delta3: self.delta3 * s,
            delta4: self.delta4 * s,
            kappa1: self.kappa1 * s,
            kappa2: self.kappa2 * s,
            mu1: self.mu1 * s,
            mu2: self.mu2 * s,
        }
    }

    /// Checks the structural invariants: finite values, nonzero detunings,
    /// non-negative decay rates.
    pub fn validate(&self) -> Result<()> {
        let complex = [
            ("g1", self.g1),
            ("g2", self.g2),
            ("omega3", self.omega3),
            ("omega4", self.omega4),
            ("mu1", self.mu1),
            ("mu2", self.mu2),
        ];
        for (symbol, z) in complex {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::param(symbol, "must be finite"));
            }
        }
        let detunings = [
            ("delta1", self.delta1),
            ("delta2", self.delta2),
            ("delta3", self.delta3),
            ("delta4", self.delta4),
        ];
        for (symbol, d) in detunings {
            if !d.is_finite() {
                return Err(Error::param(symbol, "must be finite"));
            }
            if d == 0.0 {
                return Err(Error::param(symbol, "detuning must be nonzero"));
            }
        }
        for (symbol, k) in [("kappa1", self.kappa1), ("kappa2", self.kappa2)] {
            if !k.is_finite() || k < 0.0 {
                return Err(Error::param(
                    symbol,
                    format!("decay rate must be finite and >= 0, got {k}"),
                ));
            }
        }
        Ok(())
    }
}

impl Default for SystemParams {
    fn default() -> Self {
        Self::figure2(0.5)
    }
}

/// Coefficients of the effective two-mode squeezing Hamiltonian.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct EffectiveParams {
    /// `δ1 = Δ3 − Δ1`
    pub delta_s1: f64,
    /// `δ2 = Δ4 − Δ2`
    pub delta_s2: f64,
    /// Harmonic mean of `Δ1, Δ3`.
    pub delta_13: f64,
    /// Harmonic mean of `Δ2, Δ4`.
    pub delta_24: f64,
    /// Two-photon mismatch of the second elimination.
    pub delta: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    pub eta: Complex64,
}

impl EffectiveParams {
    /// Raman coupling `Ω3* g1 / Δ13` between `|c⟩` and `|d⟩` via mode 1.
    pub fn raman1(&self, p: &SystemParams) -> Complex64 {
        p.omega3.conj() * p.g1 / self.delta_13
    }

    /// Raman coupling `Ω4 g2* / Δ24` between `|c⟩` and `|d⟩` via mode 2.
    pub fn raman2(&self, p: &SystemParams) -> Complex64 {
        p.omega4 * p.g2.conj() / self.delta_24
    }

    /// `(δ1 + δ2)/2`, the common photon-frame rotation.
    pub fn mean_shift(&self, p: &SystemParams) -> f64 {
        mean_two_photon_shift(p)
    }

    /// The constant dropped from `H_eff`: the `|Ω3 g1|²/(δ Δ13²)` part of
    /// `a1 a1† = a1†a1 + 1`. Recorded for bookkeeping, never used dynamically.
    pub fn discarded_constant(&self, p: &SystemParams) -> f64 {
        self.raman1(p).norm_sqr() / self.delta
    }
}

// (Δ3 + Δ4 − Δ1 − Δ2)/2 summed before differencing so that δ1 = −δ2
// gives an exact zero.
fn mean_two_photon_shift(p: &SystemParams) -> f64 {
    ((p.delta3 + p.delta4) - (p.delta1 + p.delta2)) / 2.0
}

/// Derives `δ1, δ2, Δ13, Δ24, δ, λ1, λ2, η` from the raw parameters.
pub fn derive_effective(params: &SystemParams) -> Result<EffectiveParams> {
    params.validate()?;
    let p = params;
    let delta_s1 = p.delta3 - p.delta1;
    let delta_s2 = p.delta4 - p.delta2;
    let delta_13 = 2.0 / (1.0 / p.delta1 + 1.0 / p.delta3);
    let delta_24 = 2.0 / (1.0 / p.delta2 + 1.0 / p.delta4);
    if !delta_13.is_finite() {
        return Err(Error::param("delta_13", "1/Δ1 + 1/Δ3 vanishes"));
    }
    if !delta_24.is_finite() {
        return Err(Error::param("delta_24", "1/Δ2 + 1/Δ4 vanishes"));
    }

    let delta = p.omega3.norm_sqr() / p.delta3 - p.omega4.norm_sqr() / p.delta4
        + (delta_s1 - delta_s2) / 2.0;
    if delta == 0.0 || !delta.is_finite() {
        return Err(Error::param(
            "delta",
            "two-photon mismatch δ must be nonzero",
        ));
    }

    let shift = mean_two_photon_shift(p);
    let lambda1 = (p.omega3 * p.g1).norm_sqr() / (delta * delta_13 * delta_13) - shift;
    let lambda2 = (p.omega4 * p.g2).norm_sqr() / (delta * delta_24 * delta_24)
        + p.g2.norm_sqr() / p.delta2
        - shift;
    let eta = p.g1 * p.g2 * p.omega3.conj() * p.omega4.conj() / (delta * delta_13 * delta_24);

    Ok(EffectiveParams {
        delta_s1,
        delta_s2,
        delta_13,
        delta_24,
        delta,
        lambda1,
        lambda2,
        eta,
    })
}

/// Audit of the two adiabatic-elimination conditions and the cavity horizon.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ValidityReport {
    /// `min_k |Δk| / max(|g1|, |g2|, |Ω3|, |Ω4|)`
    pub ratio_first_stage: f64,
    /// `|δ| / max(|Ω3* g1/Δ13|, |Ω4 g2*/Δ24|)`
    pub ratio_second_stage: f64,
    /// `min(1/κ1, 1/κ2)`; infinite for a lossless cavity.
    pub tau_diss: f64,
    pub pass_first: bool,
    pub pass_second: bool,
    pub margin_first: f64,
    pub margin_second: f64,
}

impl ValidityReport {
    pub fn passes(&self) -> bool {
        self.pass_first && self.pass_second
    }

    /// `key = value` lines.
    pub fn to_report(&self) -> String {
        format!(
            "ratio_first_stage = {:.6}\nmargin_first = {}\npass_first = {}\n\
             ratio_second_stage = {:.6}\nmargin_second = {}\npass_second = {}\ntau_diss = {}\n",
            self.ratio_first_stage,
            self.margin_first,
            self.pass_first,
            self.ratio_second_stage,
            self.margin_second,
            self.pass_second,
            self.tau_diss,
        )
    }
}

/// Computes both elimination ratios and `τ_diss`. Never fails: the report is
/// advisory.
pub fn check_validity(
    params: &SystemParams,
    eff: &EffectiveParams,
    margin_first: f64,
    margin_second: f64,
) -> ValidityReport {
    let p = params;
    let min_detuning = [p.delta1, p.delta2, p.delta3, p.delta4]
        .iter()
        .map(|d| d.abs())
        .fold(f64::INFINITY, f64::min);
    let max_coupling = [p.g1, p.g2, p.omega3, p.omega4]
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    let ratio_first_stage = min_detuning / max_coupling;

    let max_raman = eff.raman1(p).norm().max(eff.raman2(p).norm());
    let ratio_second_stage = eff.delta.abs() / max_raman;

    ValidityReport {
        ratio_first_stage,
        ratio_second_stage,
        tau_diss: dissipation_horizon(p.kappa1, p.kappa2),
        pass_first: ratio_first_stage >= margin_first,
        pass_second: ratio_second_stage >= margin_second,
        margin_first,
        margin_second,
    }
}

pub(crate) fn dissipation_horizon(kappa1: f64, kappa2: f64) -> f64 {
    // 1/0 = inf, so a lossless mode drops out of the min.
    (1.0 / kappa1).min(1.0 / kappa2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn figure2_coefficients() {
        let eff = derive_effective(&SystemParams::figure2(0.5)).unwrap();
        assert_eq!(eff.delta_s1, 1.5);
        assert_eq!(eff.delta_s2, -1.5);
        assert!((eff.delta - 1.48).abs() < 0.005);
        assert_relative_eq!(eff.lambda1, 0.013272, epsilon = 1e-6);
        assert_relative_eq!(eff.lambda2, 0.095442, epsilon = 1e-6);
        assert!(eff.eta.re.abs() < 1e-18);
        assert_relative_eq!(eff.eta.im, -0.0126769, epsilon = 1e-7);
    }

    #[test]
    fn figure2_coefficients_exact_rational() {
        // Everything is rational at this point: Δ13 = 2·10·11.5/21.5, Δ24 = 2·12·10.5/22.5,
        // δ = 2.25/11.5 − 2.25/10.5 + 3/2 = 477/322.
        let p = SystemParams::figure2(0.5);
        let eff = derive_effective(&p).unwrap();
        let d13 = 230.0 / 21.5;
        let d24 = 252.0 / 22.5;
        let delta = 477.0 / 322.0;
        assert_relative_eq!(eff.delta, delta, max_relative = 1e-14);
        assert_relative_eq!(
            eff.lambda1,
            2.25 / (delta * d13 * d13),
            max_relative = 1e-13
        );
        assert_relative_eq!(
            eff.lambda2,
            2.25 / (delta * d24 * d24) + 1.0 / 12.0,
            max_relative = 1e-13
        );
        // g1 g2 Ω3* Ω4* = (−1.5i)(1.5) = −2.25i
        assert_relative_eq!(
            eff.eta.im,
            -2.25 / (delta * d13 * d24),
            max_relative = 1e-13
        );
    }

    #[test]
    fn mean_shift_is_exactly_zero_for_opposite_detunings() {
        let p = SystemParams::figure2(0.5);
        let eff = derive_effective(&p).unwrap();
        assert_eq!(eff.mean_shift(&p), 0.0);
    }

    #[test]
    fn harmonic_means() {
        let p = SystemParams {
            delta1: 3.7,
            delta2: -8.1,
            delta3: 13.3,
            delta4: 0.9,
            ..Default::default()
        };
        let eff = derive_effective(&p).unwrap();
        let lhs13 = 1.0 / eff.delta_13;
        let rhs13 = 0.5 * (1.0 / p.delta1 + 1.0 / p.delta3);
        assert!(((lhs13 - rhs13) / rhs13).abs() < 1e-14);
        let lhs24 = 1.0 / eff.delta_24;
        let rhs24 = 0.5 * (1.0 / p.delta2 + 1.0 / p.delta4);
        assert!(((lhs24 - rhs24) / rhs24).abs() < 1e-14);
    }

    #[test]
    fn raman_couplings_match_quoted_values() {
        let p = SystemParams::figure2(0.5);
        let eff = derive_effective(&p).unwrap();
        assert!((eff.raman1(&p).norm() - 0.14).abs() < 0.005);
        assert!((eff.raman2(&p).norm() - 0.13).abs() < 0.005);
    }

    #[test]
    fn switched_off_fields() {
        let p = SystemParams {
            omega3: Complex64::new(0.0, 0.0),
            ..Default::default()
        };
        let eff = derive_effective(&p).unwrap();
        assert_eq!(eff.eta, Complex64::new(0.0, 0.0));
        assert_eq!(eff.lambda1, 0.0);
        let p = SystemParams {
            omega4: Complex64::new(0.0, 0.0),
            ..Default::default()
        };
        let eff = derive_effective(&p).unwrap();
        assert_eq!(eff.eta, Complex64::new(0.0, 0.0));
        assert_relative_eq!(eff.lambda2, 1.0 / 12.0, max_relative = 1e-15);
    }

    #[test]
    fn zero_detuning_names_symbol() {
        let p = SystemParams {
            delta3: 0.0,
            ..Default::default()
        };
        match derive_effective(&p) {
            Err(Error::Parameter { symbol, .. }) => assert_eq!(symbol, "delta3"),
            other => panic!("expected parameter error, got {other:?}"),
        }
    }

    #[test]
    fn zero_delta_is_rejected() {
        // |Ω3|²/Δ3 − |Ω4|²/Δ4 + (δ1−δ2)/2 = 0 with δ1 = δ2 and equal light shifts.
        let p = SystemParams {
            delta1: 10.0,
            delta2: 10.0,
            delta3: 11.0,
            delta4: 11.0,
            omega3: Complex64::new(1.0, 0.0),
            omega4: Complex64::new(1.0, 0.0),
            ..Default::default()
        };
        match derive_effective(&p) {
            Err(Error::Parameter { symbol, .. }) => assert_eq!(symbol, "delta"),
            other => panic!("expected parameter error, got {other:?}"),
        }
    }

    #[test]
    fn negative_kappa_rejected() {
        let p = SystemParams {
            kappa2: -0.1,
            ..Default::default()
        };
        assert!(matches!(
            derive_effective(&p),
            Err(Error::Parameter {
                symbol: "kappa2",
                ..
            })
        ));
    }

    #[test]
    fn validity_at_figure2_point() {
        let p = SystemParams::figure2(0.5);
        let eff = derive_effective(&p).unwrap();
        let v = check_validity(&p, &eff, DEFAULT_MARGIN_FIRST, DEFAULT_MARGIN_SECOND);
        assert_relative_eq!(v.ratio_first_stage, 10.0 / 1.5, max_relative = 1e-14);
        assert!(v.pass_first);
        assert!((v.ratio_second_stage - 10.6).abs() < 0.1);
        assert!(v.pass_second);
        assert_eq!(v.tau_diss, 2.0);
        let strict = check_validity(&p, &eff, 10.0, 20.0);
        assert!(!strict.pass_first && !strict.pass_second);
    }

    #[test]
    fn lossless_horizon_is_infinite() {
        let p = SystemParams::figure2(0.0);
        let eff = derive_effective(&p).unwrap();
        let v = check_validity(&p, &eff, 5.0, 5.0);
        assert!(v.tau_diss.is_infinite() && v.tau_diss > 0.0);
    }

    #[test]
    fn label_swap_is_asymmetric() {
        let p = SystemParams {
            g1: Complex64::new(0.8, 0.3),
            g2: Complex64::new(1.1, -0.2),
            omega3: Complex64::new(0.4, 1.2),
            omega4: Complex64::new(1.6, 0.1),
            delta1: 9.0,
            delta2: 13.0,
            delta3: 11.0,
            delta4: 10.0,
            ..Default::default()
        };
        let swapped = SystemParams {
            g1: p.g2,
            g2: p.g1,
            omega3: p.omega4,
            omega4: p.omega3,
            delta1: p.delta2,
            delta2: p.delta1,
            delta3: p.delta4,
            delta4: p.delta3,
            ..p
        };
        let e = derive_effective(&p).unwrap();
        let s = derive_effective(&swapped).unwrap();
        // δ is odd under the swap, so every 1/δ term flips sign.
        assert_relative_eq!(s.delta, -e.delta, max_relative = 1e-14);
        assert_relative_eq!(s.eta.re, -e.eta.re, max_relative = 1e-13);
        assert_relative_eq!(s.eta.im, -e.eta.im, max_relative = 1e-13);
        let omega_term1 = e.raman1(&p).norm_sqr() / e.delta;
        let omega_term2 = e.raman2(&p).norm_sqr() / e.delta;
        let shift = e.mean_shift(&p);
        let swapped_shift = s.mean_shift(&swapped);
        assert_relative_eq!(
            s.lambda1 + swapped_shift,
            -omega_term2,
            max_relative = 1e-13
        );
        // The Stark term stays attached to mode 2, now carrying the old g1/Δ1.
        assert_relative_eq!(
            s.lambda2 + swapped_shift,
            -omega_term1 + p.g1.norm_sqr() / p.delta1,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            e.lambda2 + shift,
            omega_term2 + p.g2.norm_sqr() / p.delta2,
            max_relative = 1e-13
        );
    }
}
