//! Linearized quantum Langevin equations for the displaced cavity modes.
//!
//! Operators are ordered `X = (a1, a2, a1†, a2†)`. In the frequency domain
//! (`∂t → −iω`, vacuum correlations `⟨a_in(ω) a_in†(ω′)⟩ = δ(ω − ω′)`) the
//! output fields are `X_out(ω) = T(ω) X_in(ω)` with
//!
//! ```text
//! T(ω) = 1 − √K (−iω − M)⁻¹ √K
//! ```
//!
//! where `M` is the drift matrix and `K = diag(κ1, κ2, κ1, κ2)`. Entry
//! `X_k(ω)` for a creation operator is the transform of `a†(t)`, i.e.
//! `[a(−ω)]†`.

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;

use crate::params::{EffectiveParams, SystemParams};

pub type CMatrix4 = Matrix4<Complex64>;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The five numbers the output spectra depend on.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearModel {
    pub lambda1: f64,
    pub lambda2: f64,
    pub eta: Complex64,
    pub kappa1: f64,
    pub kappa2: f64,
}

impl LinearModel {
    pub fn new(params: &SystemParams, eff: &EffectiveParams) -> Self {
        Self {
            lambda1: eff.lambda1,
            lambda2: eff.lambda2,
            eta: eff.eta,
            kappa1: params.kappa1,
            kappa2: params.kappa2,
        }
    }

    /// Multiplies every rate by `s`.
    pub fn scaled(self, s: f64) -> Self {
        Self {
            lambda1: self.lambda1 * s,
            lambda2: self.lambda2 * s,
            eta: self.eta * s,
            kappa1: self.kappa1 * s,
            kappa2: self.kappa2 * s,
        }
    }

    /// Drift matrix of `dX/dt = M X + …`.
    pub fn drift(&self) -> CMatrix4 {
        let z = Complex64::new(0.0, 0.0);
        let (k1, k2) = (0.5 * self.kappa1, 0.5 * self.kappa2);
        let d1 = -Complex64::new(k1, self.lambda1);
        let d2 = -Complex64::new(k2, self.lambda2);
        let d1c = -Complex64::new(k1, -self.lambda1);
        let d2c = -Complex64::new(k2, -self.lambda2);
        let ec = -I * self.eta.conj();
        let e = I * self.eta;
        #[rustfmt::skip]
        let m = CMatrix4::new(
            d1, z,  z,   ec,
            z,  d2, ec,  z,
            z,  e,  d1c, z,
            e,  z,  z,   d2c,
        );
        m
    }

    fn sqrt_k(&self) -> [f64; 4] {
        let (s1, s2) = (self.kappa1.sqrt(), self.kappa2.sqrt());
        [s1, s2, s1, s2]
    }

    /// Input-output transfer matrix at frequency `ω`.
    pub fn transfer(&self, omega: f64) -> Option<Transfer> {
        let resolvent = CMatrix4::from_diagonal_element(-I * omega) - self.drift();
        let sv = resolvent.svd(false, false).singular_values;
        let (smax, smin) = (sv.max(), sv.min());
        let condition = if smin > 0.0 {
            smax / smin
        } else {
            f64::INFINITY
        };
        let inv = resolvent.try_inverse()?;
        let sk = self.sqrt_k();
        let t = CMatrix4::from_fn(|i, j| {
            let delta = if i == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
            delta - inv[(i, j)] * sk[i] * sk[j]
        });
        Some(Transfer {
            matrix: t,
            condition,
        })
    }

    /// Steady-state displacements `(α0, β0)` from `M x + d = 0`, with the
    /// coherent drives `d = (−iμ1*, −iμ2*, iμ1, iμ2)`.
    pub fn steady_state(&self, mu1: Complex64, mu2: Complex64) -> Option<(Complex64, Complex64)> {
        let drive = Vector4::new(-I * mu1.conj(), -I * mu2.conj(), I * mu1, I * mu2);
        let x = -self.drift().lu().solve(&drive)?;
        Some((x[0], x[1]))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Transfer {
    pub matrix: CMatrix4,
    /// 2-norm condition number of `−iω − M`.
    pub condition: f64,
}

/// Joint quadratures of the two output modes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quadrature {
    /// `I+ = (a1 + a1† − a2 − a2†)/√2`
    Plus,
    /// `I− = −i(a1 − a1† + a2 − a2†)/√2`
    Minus,
}

impl Quadrature {
    pub fn weights(self) -> [Complex64; 4] {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        match self {
            Quadrature::Plus => [h, -h, h, -h].map(|x| Complex64::new(x, 0.0)),
            Quadrature::Minus => [h, h, -h, -h].map(|x| Complex64::new(0.0, -x)),
        }
    }
}

/// Symmetrized noise spectrum of a linear combination `c·X_out`, given the
/// transfer matrices at `+ω` and `−ω`. Returns the full complex value; the
/// imaginary part vanishes for a Hermitian quadrature.
pub fn quadrature_noise(
    weights: &[Complex64; 4],
    at_plus: &CMatrix4,
    at_minus: &CMatrix4,
) -> Complex64 {
    let row = |t: &CMatrix4| -> [Complex64; 4] {
        let mut w = [Complex64::new(0.0, 0.0); 4];
        for (k, wk) in w.iter_mut().enumerate() {
            *wk = (0..4).map(|i| weights[i] * t[(i, k)]).sum();
        }
        w
    };
    let wp = row(at_plus);
    let wm = row(at_minus);
    // Only ⟨a_j(ω) [a_j(−ω′)]†⟩ = δ(ω + ω′) survives for vacuum input.
    (0..2)
        .map(|j| wp[j] * wm[j + 2] + wm[j] * wp[j + 2])
        .sum::<Complex64>()
        * 0.5
}

/// Normally ordered photon-number noise `N_j(ω)` of output mode `j`
/// (0 or 1): only the creation-operator inputs contribute.
pub fn number_noise(mode: usize, t: &CMatrix4) -> f64 {
    t[(mode, 2)].norm_sqr() + t[(mode, 3)].norm_sqr()
}
