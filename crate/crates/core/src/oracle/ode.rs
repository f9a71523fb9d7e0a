//! Adaptive Dormand–Prince 5(4) integrator for complex state vectors.

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DopriOptions {
    pub rtol: f64,
    pub atol: f64,
    /// Upper bound on the step size.
    pub max_step: f64,
    pub max_steps: usize,
}

impl Default for DopriOptions {
    fn default() -> Self {
        Self {
            rtol: 1e-10,
            atol: 1e-12,
            max_step: f64::INFINITY,
            max_steps: 10_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DopriStats {
    pub accepted: usize,
    pub rejected: usize,
    pub evaluations: usize,
}

const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
// 5th-order weights minus embedded 4th-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// Integrates `dy/dt = f(t, y)` from `t0` to `t1`. `f` writes the derivative
/// into its third argument.
pub fn integrate<F>(
    mut f: F,
    t0: f64,
    t1: f64,
    y0: &[Complex64],
    opts: &DopriOptions,
) -> Result<(Vec<Complex64>, DopriStats)>
where
    F: FnMut(f64, &[Complex64], &mut [Complex64]),
{
    let n = y0.len();
    let mut stats = DopriStats::default();
    let mut y = y0.to_vec();
    if t1 == t0 {
        return Ok((y, stats));
    }
    if t1.is_nan() || t0.is_nan() || t1 <= t0 {
        return Err(Error::Integration(format!(
            "end time {t1} precedes start {t0}"
        )));
    }

    let mut k: Vec<Vec<Complex64>> = vec![vec![Complex64::new(0.0, 0.0); n]; 7];
    let mut stage = vec![Complex64::new(0.0, 0.0); n];
    let mut y_new = vec![Complex64::new(0.0, 0.0); n];

    f(t0, &y, &mut k[0]);
    stats.evaluations += 1;

    let mut t = t0;
    let mut h = initial_step(&y, &k[0], opts)
        .min(opts.max_step)
        .min(t1 - t0);
    let mut just_rejected = false;

    while t < t1 {
        if stats.accepted + stats.rejected >= opts.max_steps {
            return Err(Error::Integration(format!(
                "step limit {} reached at t = {t}",
                opts.max_steps
            )));
        }
        let last = t + h >= t1;
        if last {
            h = t1 - t;
        }
        for s in 1..7 {
            for i in 0..n {
                let mut acc = y[i];
                for (j, kj) in k.iter().enumerate().take(s) {
                    let a = A[s][j];
                    if a != 0.0 {
                        acc += kj[i] * (h * a);
                    }
                }
                stage[i] = acc;
            }
            f(t + C[s] * h, &stage, &mut k[s]);
            stats.evaluations += 1;
            if s == 6 {
                y_new.copy_from_slice(&stage);
            }
        }

        let mut err_sq = 0.0;
        for i in 0..n {
            let mut e = Complex64::new(0.0, 0.0);
            for (j, kj) in k.iter().enumerate() {
                if E[j] != 0.0 {
                    e += kj[i] * E[j];
                }
            }
            let scale = opts.atol + opts.rtol * y[i].norm().max(y_new[i].norm());
            err_sq += (e.norm() * h / scale).powi(2);
        }
        let err = (err_sq / n as f64).sqrt();

        if err <= 1.0 {
            t = if last { t1 } else { t + h };
            std::mem::swap(&mut y, &mut y_new);
            // FSAL: the 7th stage is f(t + h, y_new).
            k.swap(0, 6);
            stats.accepted += 1;
            let fac = if err == 0.0 {
                5.0
            } else {
                (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
            };
            // No growth right after a rejection.
            let cap = if just_rejected { 1.0 } else { 5.0 };
            h = (h * fac.min(cap)).min(opts.max_step);
            just_rejected = false;
        } else {
            stats.rejected += 1;
            h *= (0.9 * err.powf(-0.2)).clamp(0.2, 1.0);
            just_rejected = true;
            if h < 1e-14 * t.abs().max(1.0) {
                return Err(Error::Integration(format!(
                    "step size underflow at t = {t}"
                )));
            }
        }
    }
    Ok((y, stats))
}

fn initial_step(y: &[Complex64], dy: &[Complex64], opts: &DopriOptions) -> f64 {
    let n = y.len().max(1) as f64;
    let (mut d0, mut d1) = (0.0, 0.0);
    for (yi, di) in y.iter().zip(dy) {
        let sc = opts.atol + opts.rtol * yi.norm();
        d0 += (yi.norm() / sc).powi(2);
        d1 += (di.norm() / sc).powi(2);
    }
    let (d0, d1) = ((d0 / n).sqrt(), (d1 / n).sqrt());
    if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_phase_rotation() {
        // dy/dt = −iωy, y(t) = e^{−iωt}.
        let w = 3.0;
        let f =
            |_t: f64, y: &[Complex64], dy: &mut [Complex64]| dy[0] = Complex64::new(0.0, -w) * y[0];
        let (y, stats) = integrate(
            f,
            0.0,
            10.0,
            &[Complex64::new(1.0, 0.0)],
            &DopriOptions::default(),
        )
        .unwrap();
        let exact = Complex64::from_polar(1.0, -w * 10.0);
        assert!((y[0] - exact).norm() < 1e-8, "{:?}", y[0] - exact);
        assert!(stats.accepted > 10);
    }

    #[test]
    fn time_dependent_rhs() {
        // dy/dt = 2t y, y = e^{t²}
        let f = |t: f64, y: &[Complex64], dy: &mut [Complex64]| dy[0] = y[0] * (2.0 * t);
        let (y, _) = integrate(
            f,
            0.0,
            1.5,
            &[Complex64::new(1.0, 0.0)],
            &DopriOptions::default(),
        )
        .unwrap();
        assert!((y[0].re - 2.25f64.exp()).abs() < 1e-8 * 2.25f64.exp());
    }

    #[test]
    fn respects_max_step() {
        let f = |_t: f64, _y: &[Complex64], dy: &mut [Complex64]| dy[0] = Complex64::new(0.0, 0.0);
        let opts = DopriOptions {
            max_step: 0.1,
            ..Default::default()
        };
        let (_, stats) = integrate(f, 0.0, 1.0, &[Complex64::new(1.0, 0.0)], &opts).unwrap();
        assert!(stats.accepted >= 10);
    }

    #[test]
    fn zero_span_is_identity() {
        let f = |_t: f64, y: &[Complex64], dy: &mut [Complex64]| dy[0] = y[0];
        let (y, stats) = integrate(
            f,
            1.0,
            1.0,
            &[Complex64::new(2.0, 0.0)],
            &DopriOptions::default(),
        )
        .unwrap();
        assert_eq!(y[0], Complex64::new(2.0, 0.0));
        assert_eq!(stats.accepted, 0);
        assert!(integrate(
            f,
            1.0,
            0.0,
            &[Complex64::new(2.0, 0.0)],
            &DopriOptions::default()
        )
        .is_err());
    }
}
