//! Entropic and information inequalities for single-qudit systems.
//!
//! A qudit without subsystems still satisfies subadditivity-like entropic
//! relations once its level index is relabeled by pairs or triples of
//! indices; the same shift-and-normalize map that turns an arbitrary
//! Hermitian matrix (or a real observable) into a density matrix (or a
//! probability vector) extends those relations to observables. This crate
//! implements the full battery:
//!
//! - [`matfun`] — Hermitian eigendecomposition, spectral functions, von
//!   Neumann and relative entropies;
//! - [`index_maps`] — flat-index/tuple relabelings and the marginalization
//!   ("portrait") operators they induce on probability vectors and matrices;
//! - [`lift`] — the shift-and-normalize map `h -> (N x + Tr h)^-1 (h + x I)`,
//!   its two marginals, mutual information, and the qutrit-in-qudit
//!   embedding;
//! - [`classical_obs`] — classical observables as "classical states":
//!   Shannon/Tsallis entropies, relative entropy, subadditivity;
//! - [`qudit_inequalities`] — subadditivity, Araki–Lieb, strong
//!   subadditivity, observable relative entropy, and the energy–entropy
//!   bound for density matrices;
//! - [`spin_tomography`] — spin-j rotation unitaries, tomograms of states
//!   and observables, tomographic relative entropy;
//! - [`circuit_sim`] — a parametric-oscillator mode-function integrator with
//!   quadrature dispersions, optical/symplectic tomograms, and the entropic
//!   uncertainty bound `ln(pi e)`;
//! - [`random`] — seeded generators for sweep inputs.
//!
//! All entropies are in nats.

pub mod circuit_sim;
pub mod classical_obs;
pub mod error;
pub mod index_maps;
pub mod lift;
pub mod matfun;
pub mod qudit_inequalities;
pub mod random;
pub mod report;
pub mod spin_tomography;

pub use error::{Error, Result};
pub use matfun::HermitianMatrix;
pub use report::{InequalityReport, RelEntropy};

pub use nalgebra::DMatrix;
pub use num_complex::Complex64;
