//! Gaussian moment evolution under the quadratic `H_eff`.
//!
//! Quadratures are ordered `R = (x1, p1, x2, p2)` with `x = (a + a†)/√2`,
//! `p = −i(a − a†)/√2`, so `[R_i, R_j] = iΩ_ij` and the vacuum covariance is
//! `1/2`. The Heisenberg flow is linear, `R(τ) = S R(0)` with
//! `S = exp(G τ)`, and `cov(τ) = S cov Sᵀ`.

use nalgebra::{Matrix4, SymmetricEigen, Vector4};
use num_complex::Complex64;

use crate::langevin::LinearModel;
use crate::params::EffectiveParams;
use crate::su11::EvolutionInput;

pub type RMatrix4 = Matrix4<f64>;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussianState {
    pub mean: Vector4<f64>,
    pub cov: RMatrix4,
}

/// Symplectic form for `(x1, p1, x2, p2)`.
pub fn symplectic_form() -> RMatrix4 {
    #[rustfmt::skip]
    let omega = RMatrix4::new(
        0.0, 1.0, 0.0, 0.0,
        -1.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 1.0,
        0.0, 0.0, -1.0, 0.0,
    );
    omega
}

impl GaussianState {
    pub fn coherent(eps1: Complex64, eps2: Complex64) -> Self {
        let s = std::f64::consts::SQRT_2;
        Self {
            mean: Vector4::new(s * eps1.re, s * eps1.im, s * eps2.re, s * eps2.im),
            cov: RMatrix4::identity() * 0.5,
        }
    }

    /// Coherent amplitudes `(⟨a1⟩, ⟨a2⟩)` carried by the mean.
    pub fn amplitudes(&self) -> (Complex64, Complex64) {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        (
            Complex64::new(self.mean[0], self.mean[1]) * h,
            Complex64::new(self.mean[2], self.mean[3]) * h,
        )
    }

    /// Smallest eigenvalue of `cov + iΩ/2`; non-negative for a physical state.
    pub fn physicality_margin(&self) -> f64 {
        let omega = symplectic_form();
        let h = Matrix4::<Complex64>::from_fn(|i, j| {
            Complex64::new(self.cov[(i, j)], 0.5 * omega[(i, j)])
        });
        SymmetricEigen::new(h).eigenvalues.min()
    }

    pub fn asymmetry(&self) -> f64 {
        (self.cov - self.cov.transpose()).abs().max()
    }

    /// Squeeze magnitude from the Bloch–Messiah decomposition of a pure
    /// state: `cov = S Sᵀ/2` has eigenvalues `e^{±2r}/2`.
    pub fn squeeze_magnitude(&self) -> f64 {
        let sym = (self.cov + self.cov.transpose()) * 0.5;
        let top = SymmetricEigen::new(sym).eigenvalues.max();
        0.5 * (2.0 * top).ln()
    }
}

/// Real generator `G` of `dR/dt = G R` for `H_eff` (no loss).
pub fn generator(eff: &EffectiveParams) -> RMatrix4 {
    let model = LinearModel {
        lambda1: eff.lambda1,
        lambda2: eff.lambda2,
        eta: eff.eta,
        kappa1: 0.0,
        kappa2: 0.0,
    };
    let a = model.drift();
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let ih = Complex64::new(0.0, std::f64::consts::FRAC_1_SQRT_2);
    let z = Complex64::new(0.0, 0.0);
    // R = T X with X = (a1, a2, a1†, a2†).
    #[rustfmt::skip]
    let t = Matrix4::<Complex64>::new(
        h,   z,   h,  z,
        -ih, z,   ih, z,
        z,   h,   z,  h,
        z,   -ih, z,  ih,
    );
    let t_inv = t
        .try_inverse()
        .expect("quadrature map is unitary up to scale");
    let g = t * a * t_inv;
    debug_assert!(
        g.iter().all(|z| z.im.abs() < 1e-12),
        "generator must be real"
    );
    g.map(|z| z.re)
}

/// `S = exp(G τ)`.
pub fn flow_matrix(eff: &EffectiveParams, tau: f64) -> RMatrix4 {
    (generator(eff) * tau).exp()
}

pub fn gaussian_evolve(eff: &EffectiveParams, input: &EvolutionInput) -> GaussianState {
    let s = flow_matrix(eff, input.tau);
    let start = GaussianState::coherent(input.eps1, input.eps2);
    GaussianState {
        mean: s * start.mean,
        cov: s * start.cov * s.transpose(),
    }
}
