//! Two-mode squeezing generated by a single four-level atom in a doubly
//! resonant cavity.
//!
//! The pipeline runs from raw atom/cavity parameters to the output-field
//! squeezing, entanglement and intensity spectra:
//!
//! 1. [`params`]: effective Hamiltonian coefficients `λ1, λ2, η` and an audit
//!    of both adiabatic-elimination conditions.
//! 2. [`su11`]: intracavity two-mode coherent-squeezed state parameters.
//! 3. [`spectra`]: input-output solution, squeezing spectra `S±(ω)`, the sum
//!    entanglement criterion and the intensity noise `N1, N2`.
//! 4. [`oracle`]: independent brute-force checks (frequency-domain linear
//!    solve, Gaussian moment evolution, truncated Fock integration of the
//!    full Hamiltonian cascade).
//! 5. [`sweep`], [`figures`], [`verify`]: dataset generation and the
//!    verification gate used by the `atomsqueeze` binary.
//!
//! All rates are in units of a reference coupling `g`; times in units of `1/g`.

pub mod config;
pub mod error;
pub mod figures;
pub mod grid;
pub mod langevin;
pub mod oracle;
pub mod output;
pub mod params;
pub mod spectra;
pub mod su11;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use params::{check_validity, derive_effective, EffectiveParams, SystemParams, ValidityReport};
pub use spectra::{analyze_spectrum, duan_entangled, squeezing_spectrum, SpectrumCurve};
pub use su11::{horizon, squeeze_parameters, EvolutionInput, SqueezeResult};

pub use num_complex::Complex64;
