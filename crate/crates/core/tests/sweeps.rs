use atomsqueeze::figures::{run_figure, Figure, FigureOptions, FIGURE3_KAPPAS};
use atomsqueeze::sweep::{run_sweep, squeeze_table, SweepSpec};
use atomsqueeze::{derive_effective, Complex64, EffectiveParams, SystemParams};

#[test]
fn decoupled_omega_sweep_is_vacuum() {
    let spec =
        SweepSpec::parse("axis = omega\nstart = -2\nstop = 2\ncount = 101\nomega4 = 0\n").unwrap();
    let res = run_sweep(&spec).unwrap();
    let t = res.get_table("spectrum.csv").unwrap();
    for s in t.column("s_plus").unwrap() {
        assert!((s - 1.0).abs() < 1e-12, "{s}");
    }
}

#[test]
fn kappa_sweep_has_single_interior_minimum() {
    let spec =
        SweepSpec::parse("axis = kappa\nstart = 0.01\nstop = 3\ncount = 300\nat_omega = 0\n")
            .unwrap();
    let res = run_sweep(&spec).unwrap();
    let s = res
        .get_table("kappa.csv")
        .unwrap()
        .column("s_plus")
        .unwrap();
    let interior: Vec<usize> = (1..s.len() - 1)
        .filter(|&i| s[i] < s[i - 1] && s[i] <= s[i + 1])
        .collect();
    assert_eq!(interior.len(), 1, "{interior:?}");
    assert!(s[interior[0]] < 1.0);
}

#[test]
fn resonant_tau_table_is_linear() {
    let eff = EffectiveParams {
        eta: Complex64::new(0.0, -0.2),
        ..Default::default()
    };
    let taus: Vec<f64> = (0..50).map(|i| 0.2 * i as f64).collect();
    let t = squeeze_table(
        &eff,
        Complex64::new(0.3, 0.0),
        Complex64::new(0.0, 0.0),
        &taus,
        f64::INFINITY,
    )
    .unwrap();
    for (tau, r) in taus.iter().zip(t.column("r").unwrap()) {
        assert!((r - 0.2 * tau).abs() < 1e-10 * (1.0 + r), "tau {tau}: {r}");
    }
}

#[test]
fn identical_specs_give_identical_bytes() {
    let text = "axis = omega_x_kappa\nstart = -2\nstop = 2\ncount = 101\nkappa_start = 0.05\nkappa_stop = 2\n\
                kappa_count = 17\noutputs = spectrum, intensity, oracle, validity\n";
    let a = run_sweep(&SweepSpec::parse(text).unwrap()).unwrap();
    let b = run_sweep(&SweepSpec::parse(text).unwrap()).unwrap();
    assert_eq!(a.files, b.files);

    let dir = std::env::temp_dir().join(format!("atomsqueeze-sweep-{}", std::process::id()));
    let pa = a.write_all(dir.join("a"), true, true).unwrap();
    let pb = b.write_all(dir.join("b"), true, true).unwrap();
    for (x, y) in pa.iter().zip(&pb) {
        assert_eq!(
            std::fs::read(x).unwrap(),
            std::fs::read(y).unwrap(),
            "{}",
            x.display()
        );
    }
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn figure_spectra_best_at_intermediate_loss() {
    let art = run_figure(Figure::Spectra, None, &FigureOptions::default()).unwrap();
    let mins: Vec<f64> = FIGURE3_KAPPAS
        .iter()
        .map(|k| {
            let t = art.get_table(&format!("fig3_kappa_{k}.csv")).unwrap();
            t.column("s_plus")
                .unwrap()
                .into_iter()
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    assert!(mins[1] < mins[0] && mins[1] < mins[2], "{mins:?}");
}

#[test]
fn surface_is_nonnegative_and_entangled_somewhere() {
    let opts = FigureOptions {
        omega_points: 401,
        kappa_points: 40,
        ..Default::default()
    };
    let art = run_figure(Figure::Surface, None, &opts).unwrap();
    let t = art.get_table("fig2_surface.csv").unwrap();
    assert!(t.column("s_plus").unwrap().iter().all(|s| *s >= 0.0));
    assert!(t.column("entangled").unwrap().contains(&1.0));
    assert!(art
        .get_text("fig2_report.txt")
        .unwrap()
        .contains("pass_second = true"));
}

#[test]
fn intensity_figure_peaks() {
    let art = run_figure(Figure::Intensity, None, &FigureOptions::default()).unwrap();
    let report = art.get_text("fig4_report.txt").unwrap();
    let get = |k: &str| -> f64 {
        report
            .lines()
            .find_map(|l| l.strip_prefix(&format!("{k} = ")))
            .unwrap()
            .parse()
            .unwrap()
    };
    assert!((get("peak1_printed") - 19.0).abs() <= 1.0);
    assert!((get("peak2_printed") - 8.0).abs() <= 1.0);
    let eff = derive_effective(&SystemParams::figure4()).unwrap();
    assert!(eff.eta.norm() > 0.0);
}
