use proptest::prelude::*;

use atomsqueeze::config::{parse_params, render_params};
use atomsqueeze::langevin::LinearModel;
use atomsqueeze::oracle::gaussian::gaussian_evolve;
use atomsqueeze::oracle::spectrum::model_oracle;
use atomsqueeze::spectra::{model_spectrum, s_minus_transfer, s_plus_closed};
use atomsqueeze::{
    derive_effective, squeeze_parameters, squeezing_spectrum, Complex64, EffectiveParams,
    EvolutionInput, SystemParams,
};

fn detuning() -> impl Strategy<Value = f64> {
    prop_oneof![5.0..25.0f64, -25.0..-5.0f64]
}

fn coupling() -> impl Strategy<Value = Complex64> {
    (0.2..2.0f64, -3.2..3.2f64).prop_map(|(m, a)| Complex64::from_polar(m, a))
}

prop_compose! {
    fn system()(g1 in coupling(), g2 in coupling(), o3 in coupling(), o4 in coupling(),
                d1 in detuning(), d2 in detuning(), d3 in detuning(), d4 in detuning(),
                k1 in 0.05..2.0f64, k2 in 0.05..2.0f64) -> SystemParams {
        SystemParams {
            g1, g2, omega3: o3, omega4: o4,
            delta1: d1, delta2: d2, delta3: d3, delta4: d4,
            kappa1: k1, kappa2: k2,
            mu1: Complex64::new(0.0, 0.0), mu2: Complex64::new(0.0, 0.0),
        }
    }
}

prop_compose! {
    fn model()(l1 in -0.5..0.5f64, l2 in -0.5..0.5f64, m in 0.0..0.4f64, a in -3.2..3.2f64,
               k1 in 0.05..2.0f64, k2 in 0.05..2.0f64) -> LinearModel {
        LinearModel { lambda1: l1, lambda2: l2, eta: Complex64::from_polar(m, a), kappa1: k1, kappa2: k2 }
    }
}

fn stable(m: &LinearModel) -> bool {
    // Below the parametric threshold the spectra stay finite.
    m.eta.norm() < 0.45 * m.kappa1.min(m.kappa2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn coefficients_are_homogeneous(p in system(), s in 0.1..10.0f64) {
        let Ok(e) = derive_effective(&p) else { return Ok(()) };
        prop_assume!(e.delta.abs() > 0.05);
        let es = derive_effective(&p.scaled(s)).unwrap();
        let tol = |x: f64| 1e-9 * (1.0 + x.abs());
        prop_assert!((es.delta - s * e.delta).abs() <= s * tol(e.delta));
        prop_assert!((es.lambda1 - s * e.lambda1).abs() <= s * tol(e.lambda1 + 10.0));
        prop_assert!((es.lambda2 - s * e.lambda2).abs() <= s * tol(e.lambda2 + 10.0));
        prop_assert!((es.eta - e.eta * s).norm() <= s * tol(e.eta.norm()));
    }

    #[test]
    fn squeeze_magnitude_ignores_eta_phase(
        l1 in -0.1..0.1f64, l2 in -0.1..0.1f64, m in 0.001..0.1f64, a in -3.2..3.2f64, b in -3.2..3.2f64, tau in 0.0..10.0f64,
    ) {
        let base = EffectiveParams { lambda1: l1, lambda2: l2, eta: Complex64::from_polar(m, a), ..Default::default() };
        let rot = EffectiveParams { eta: Complex64::from_polar(m, b), ..base };
        let r0 = squeeze_parameters(&EvolutionInput::vacuum(base, tau));
        let r1 = squeeze_parameters(&EvolutionInput::vacuum(rot, tau));
        match (r0, r1) {
            (Ok(x), Ok(y)) => prop_assert!((x.r - y.r).abs() <= 1e-12 * (1.0 + x.r)),
            (x, y) => prop_assert_eq!(x.is_err(), y.is_err()),
        }
    }

    #[test]
    fn initial_growth_rate_is_eta(l1 in -0.5..0.5f64, l2 in -0.5..0.5f64, m in 0.001..0.5f64, a in -3.2..3.2f64) {
        let eff = EffectiveParams { lambda1: l1, lambda2: l2, eta: Complex64::from_polar(m, a), ..Default::default() };
        let h = 1e-6;
        let r = squeeze_parameters(&EvolutionInput::vacuum(eff, h)).unwrap().r;
        prop_assert!((r / h - m).abs() <= 1e-6 * m.max(1.0));
    }

    #[test]
    fn resonant_growth_is_linear(m in 0.001..0.5f64, a in -3.2..3.2f64, tau in 0.0..20.0f64) {
        let eff = EffectiveParams { eta: Complex64::from_polar(m, a), ..Default::default() };
        prop_assume!(m * tau < 15.0);
        let r = squeeze_parameters(&EvolutionInput::vacuum(eff, tau)).unwrap().r;
        prop_assert!((r - m * tau).abs() <= 1e-10 * (1.0 + m * tau));
    }

    #[test]
    fn closed_form_matches_gaussian_flow(
        l1 in -0.3..0.3f64, l2 in -0.3..0.3f64, m in 0.0..0.3f64, a in -3.2..3.2f64, tau in 0.0..6.0f64,
        e1 in coupling(), e2 in coupling(),
    ) {
        let eff = EffectiveParams { lambda1: l1, lambda2: l2, eta: Complex64::from_polar(m, a), ..Default::default() };
        let input = EvolutionInput { eff, eps1: e1, eps2: e2, tau, tau_diss: f64::INFINITY };
        let r = squeeze_parameters(&input).unwrap().r;
        let g = gaussian_evolve(&eff, &input);
        prop_assert!((r - g.squeeze_magnitude()).abs() <= 1e-6);
        prop_assert!(g.physicality_margin() > -1e-9);
        prop_assert!(g.asymmetry() < 1e-9);
    }

    #[test]
    fn spectrum_has_mirror_symmetry(m in model(), w in 0.0..3.0f64) {
        prop_assume!(stable(&m));
        let (a, b) = (s_plus_closed(&m, w).unwrap(), s_plus_closed(&m, -w).unwrap());
        prop_assert!((a - b).abs() <= 1e-10 * a);
    }

    #[test]
    fn joint_quadratures_are_equally_squeezed(m in model(), w in -3.0..3.0f64) {
        prop_assume!(stable(&m));
        let (p, q) = (s_plus_closed(&m, w).unwrap(), s_minus_transfer(&m, w).unwrap());
        prop_assert!(p >= 0.0);
        prop_assert!((p - q).abs() <= 1e-10 * p, "S+ {p} S- {q}");
    }

    #[test]
    fn closed_form_matches_matrix_oracle(m in model()) {
        prop_assume!(stable(&m));
        let grid: Vec<f64> = (0..41).map(|i| -2.0 + 0.1 * i as f64).collect();
        let a = model_spectrum(&m, &grid);
        let b = model_oracle(&m, &grid);
        for i in 0..grid.len() {
            prop_assert!((a.s_plus[i] - b.s_plus[i]).abs() <= 1e-10 * b.s_plus[i]);
            prop_assert!((a.n1[i] - b.n1[i]).abs() <= 1e-10 * b.n1[i].max(1e-300));
            prop_assert!((a.n2[i] - b.n2[i]).abs() <= 1e-10 * b.n2[i].max(1e-300));
            prop_assert_eq!(a.entangled[i], a.s_plus[i] + a.s_minus[i] < 2.0);
        }
    }

    #[test]
    fn spectra_are_scale_invariant(k in 0.05..2.0f64, s in 0.1..10.0f64, w in -2.0..2.0f64) {
        let p = SystemParams::figure2(k);
        let e = derive_effective(&p).unwrap();
        let ps = p.scaled(s);
        let es = derive_effective(&ps).unwrap();
        let a = squeezing_spectrum(&p, &e, &[w]);
        let b = squeezing_spectrum(&ps, &es, &[w * s]);
        prop_assert!((a.s_plus[0] - b.s_plus[0]).abs() <= 1e-12 * a.s_plus[0]);
        prop_assert!((a.s_minus[0] - b.s_minus[0]).abs() <= 1e-12 * a.s_minus[0]);
    }

    #[test]
    fn drives_do_not_change_noise(k in 0.05..2.0f64, mu1 in coupling(), mu2 in coupling(), w in -2.0..2.0f64) {
        let p = SystemParams::figure2(k);
        let e = derive_effective(&p).unwrap();
        let a = squeezing_spectrum(&p, &e, &[w]);
        let b = squeezing_spectrum(&SystemParams { mu1, mu2, ..p }, &e, &[w]);
        prop_assert!((a.s_plus[0] - b.s_plus[0]).abs() <= 1e-12);
        prop_assert!((a.s_minus[0] - b.s_minus[0]).abs() <= 1e-12);
        prop_assert!((a.n1[0] - b.n1[0]).abs() <= 1e-12);
    }

    #[test]
    fn config_round_trips(p in system(), mu in coupling()) {
        let p = SystemParams { mu1: mu, ..p };
        prop_assert_eq!(parse_params(&render_params(&p)).unwrap(), p);
    }
}
