use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use atomsqueeze::config::{load_params, render_params};
use atomsqueeze::figures::{run_figure, Figure, FigureOptions};
use atomsqueeze::grid::{symmetric, DEFAULT_OMEGA_MAX, DEFAULT_OMEGA_POINTS};
use atomsqueeze::output::{line_plot, Artifacts, Series};
use atomsqueeze::params::{DEFAULT_MARGIN_FIRST, DEFAULT_MARGIN_SECOND};
use atomsqueeze::spectra::{analyze_spectrum, duan_entangled, DisplacementComparison};
use atomsqueeze::sweep::{run_sweep, spectrum_table, squeeze_table, SweepSpec};
use atomsqueeze::verify::{run_verify, VerifyOptions};
use atomsqueeze::{
    check_validity, derive_effective, horizon, squeezing_spectrum, Complex64, Error, SystemParams,
};

#[derive(Parser)]
#[command(
    name = "atomsqueeze",
    version,
    about = "Two-mode squeezing from a single four-level atom"
)]
struct Cli {
    /// Parameter file (`key = value` lines); defaults to the κ = 0.5 working point.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Number of grid points (ω grid, or τ grid for `evolve`).
    #[arg(long, global = true)]
    grid: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Both)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Svg,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Print effective coefficients and the validity audit.
    Derive,
    /// Output squeezing, entanglement and intensity spectra.
    Spectrum,
    /// Squeeze parameter r(τ) of the intracavity state.
    Evolve {
        #[arg(long, default_value_t = 5.0)]
        tau_max: f64,
        #[arg(long, default_value = "0")]
        eps1: String,
        #[arg(long, default_value = "0")]
        eps2: String,
    },
    /// Reproduce a figure dataset: fig2, fig3, fig4 or all.
    Figures { name: String },
    /// Run a sweep described by a spec file.
    Sweep { spec: PathBuf },
    /// Run the invariant suite; exits with 2 on failure.
    Verify {
        /// Skip the truncated Fock integrations.
        #[arg(long)]
        skip_fock: bool,
    },
}

enum Failure {
    Usage(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn params(cli: &Cli) -> Result<SystemParams, Error> {
    match &cli.config {
        Some(p) => load_params(p),
        None => Ok(SystemParams::default()),
    }
}

fn write(cli: &Cli, art: &Artifacts) -> Result<(), Error> {
    let (csv, svg) = match cli.format {
        Format::Csv => (true, false),
        Format::Svg => (false, true),
        Format::Both => (true, true),
    };
    for p in art.write_all(&cli.out, svg, csv)? {
        println!("wrote {}", p.display());
    }
    Ok(())
}

fn parse_eps(s: &str) -> Result<Complex64, Error> {
    atomsqueeze::config::parse_complex(s)
        .ok_or_else(|| Error::param("eps", format!("not a complex number: `{s}`")))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Derive => {
            let p = params(cli)?;
            let eff = derive_effective(&p)?;
            print!("{}", render_params(&p));
            println!(
                "delta_s1 = {}\ndelta_s2 = {}\ndelta_13 = {}\ndelta_24 = {}",
                eff.delta_s1, eff.delta_s2, eff.delta_13, eff.delta_24
            );
            println!(
                "delta = {}\nlambda1 = {}\nlambda2 = {}\neta = {}",
                eff.delta, eff.lambda1, eff.lambda2, eff.eta
            );
            println!("raman1 = {}\nraman2 = {}", eff.raman1(&p), eff.raman2(&p));
            println!(
                "mean_shift = {}\ndiscarded_constant = {}",
                eff.mean_shift(&p),
                eff.discarded_constant(&p)
            );
            print!(
                "{}",
                check_validity(&p, &eff, DEFAULT_MARGIN_FIRST, DEFAULT_MARGIN_SECOND).to_report()
            );
        }
        Command::Spectrum => {
            let p = params(cli)?;
            let eff = derive_effective(&p)?;
            let grid = symmetric(DEFAULT_OMEGA_MAX, cli.grid.unwrap_or(DEFAULT_OMEGA_POINTS));
            let curve = squeezing_spectrum(&p, &eff, &grid);
            let analysis = analyze_spectrum(&curve)?;
            let ent = duan_entangled(&curve);
            let mut art = Artifacts::default();
            art.table("spectrum.csv", spectrum_table(&curve));
            art.text(
                "spectrum.svg",
                line_plot(
                    "Squeezing spectrum",
                    "omega / g",
                    "S",
                    &[Series {
                        label: "S+".into(),
                        x: &curve.omega,
                        y: &curve.s_plus,
                    }],
                    Some(1.0),
                ),
            );
            let mut report = String::new();
            for (w, s) in &analysis.minima {
                report.push_str(&format!("minimum = {w:.6} {s:.9}\n"));
            }
            report.push_str(&format!("bandwidth = {:.6}\n", analysis.bandwidth));
            for (a, b) in &ent.bands {
                report.push_str(&format!("entangled_band = {a:.6} {b:.6}\n"));
            }
            if let Ok(d) = DisplacementComparison::new(&p, &eff) {
                report.push_str(&d.to_report(&p));
            }
            report.push_str(
                &check_validity(&p, &eff, DEFAULT_MARGIN_FIRST, DEFAULT_MARGIN_SECOND).to_report(),
            );
            print!("{report}");
            art.text("spectrum_report.txt", report);
            write(cli, &art)?;
        }
        Command::Evolve {
            tau_max,
            eps1,
            eps2,
        } => {
            let p = params(cli)?;
            let eff = derive_effective(&p)?;
            if tau_max.is_nan() || *tau_max <= 0.0 {
                return Err(Error::param("tau_max", "must be > 0").into());
            }
            let n = cli.grid.unwrap_or(201).max(2);
            let taus: Vec<f64> = (0..n)
                .map(|i| tau_max * i as f64 / (n - 1) as f64)
                .collect();
            let tau_diss = horizon(&eff, &p);
            let t = squeeze_table(&eff, parse_eps(eps1)?, parse_eps(eps2)?, &taus, tau_diss)?
                .comment(format!("tau_diss = {tau_diss}"));
            let r = t.column("r").unwrap_or_default();
            let mut art = Artifacts::default();
            art.table("squeeze.csv", t);
            art.text(
                "squeeze.svg",
                line_plot(
                    "Squeeze parameter",
                    "tau g",
                    "r",
                    &[Series {
                        label: "r".into(),
                        x: &taus,
                        y: &r,
                    }],
                    None,
                ),
            );
            println!("r(tau_max) = {:.9}\ntau_diss = {tau_diss}", r[r.len() - 1]);
            write(cli, &art)?;
        }
        Command::Figures { name } => {
            let figs = if name == "all" {
                Figure::ALL.to_vec()
            } else {
                vec![Figure::parse(name)?]
            };
            let base = cli.config.as_ref().map(load_params).transpose()?;
            let mut opts = FigureOptions::default();
            if let Some(n) = cli.grid {
                opts.omega_points = n;
            }
            for fig in figs {
                let art = run_figure(fig, base.as_ref(), &opts)?;
                write(cli, &art)?;
            }
        }
        Command::Sweep { spec } => {
            if cli.config.is_some() {
                return Err(Error::Sweep(
                    "parameters belong in the sweep spec, not --config".into(),
                )
                .into());
            }
            let spec = SweepSpec::load(spec)?;
            write(cli, &run_sweep(&spec)?)?;
        }
        Command::Verify { skip_fock } => {
            let mut opts = VerifyOptions {
                fock: !skip_fock,
                ..Default::default()
            };
            if let Some(n) = cli.grid {
                opts.omega_points = n;
            }
            let rep = run_verify(&opts)?;
            print!("{}", rep.to_report());
            if !rep.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(2)
        }
    }
}
