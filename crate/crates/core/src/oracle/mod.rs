//! Independent brute-force checks of the closed forms.
//!
//! - [`spectrum`]: per-frequency 4×4 linear solve of the Langevin equations.
//! - [`gaussian`]: exact first/second-moment evolution under `H_eff`.
//! - [`fock`]: truncated-Fock Schrödinger integration of every stage of the
//!   Hamiltonian cascade, from the full four-level interaction Hamiltonian
//!   down to `H_eff`.

pub mod fock;
pub mod gaussian;
pub mod ode;
pub mod report;
pub mod spectrum;

pub use fock::{fock_evolve, FockOperatorModel, Level, Stage};
pub use gaussian::{gaussian_evolve, GaussianState};
pub use report::Report;
pub use spectrum::spectrum_matrix_oracle;
