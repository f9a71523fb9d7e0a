use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_atomsqueeze"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("atomsqueeze-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn derive_prints_coefficients() {
    let out = bin(&["derive"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("delta = 1.48136"));
    assert!(text.contains("pass_first = true"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(bin(&["nonsense"]).status.code(), Some(1));
    assert_eq!(bin(&["derive", "--format", "pdf"]).status.code(), Some(1));
    assert_eq!(bin(&["figures", "fig9"]).status.code(), Some(1));
}

#[test]
fn config_errors_name_the_line() {
    let d = scratch("cfg");
    let cfg = d.join("bad.conf");
    std::fs::write(&cfg, "delta1 = 10\n\nkappa1 = fast\n").unwrap();
    let out = bin(&["derive", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let _ = std::fs::remove_dir_all(d);
}

#[test]
fn sweep_is_reproducible() {
    let d = scratch("sweep");
    let spec = d.join("spec.txt");
    std::fs::write(
        &spec,
        "axis = kappa\nstart = 0.05\nstop = 2\ncount = 40\noutputs = spectrum, validity\n",
    )
    .unwrap();
    for sub in ["a", "b"] {
        let out = bin(&[
            "sweep",
            spec.to_str().unwrap(),
            "--out",
            d.join(sub).to_str().unwrap(),
            "--format",
            "csv",
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    for f in ["kappa.csv", "validity.csv"] {
        assert_eq!(
            std::fs::read(d.join("a").join(f)).unwrap(),
            std::fs::read(d.join("b").join(f)).unwrap()
        );
    }
    assert!(!d.join("a").join("kappa.svg").exists());
    let _ = std::fs::remove_dir_all(d);
}

#[test]
fn spectrum_and_evolve_write_files() {
    let d = scratch("spec");
    let out = bin(&["spectrum", "--grid", "201", "--out", d.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(d.join("spectrum.csv")).unwrap();
    assert!(csv.starts_with("omega,s_plus,s_minus,n1,n2,entangled\n"));
    assert_eq!(csv.lines().count(), 202);
    assert!(d.join("spectrum.svg").exists() && d.join("spectrum_report.txt").exists());

    let out = bin(&[
        "evolve",
        "--tau-max",
        "4",
        "--eps1",
        "0.5",
        "--out",
        d.to_str().unwrap(),
        "--format",
        "svg",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(d.join("squeeze.svg").exists());
    let _ = std::fs::remove_dir_all(d);
}

#[test]
fn fast_verify_passes() {
    let out = bin(&["verify", "--skip-fock", "--grid", "401"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("overall = pass"));
}
