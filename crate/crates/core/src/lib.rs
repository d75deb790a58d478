//! Two-dimensional time-domain boundary integral equation laboratory.
//!
//! Acoustic scattering and transparent-boundary problems are semidiscretized
//! with Galerkin boundary elements (and P1 finite elements in the coupled
//! cases), marched in time with Convolution Quadrature, and audited for
//! energy conservation. Six formulations are provided: four with a constant
//! energy functional (indirect sound-soft, indirect sound-hard, symmetric
//! BEM-FEM coupling, tight one-unknown coupling) and two without (direct
//! Kirchhoff scattering, Johnson–Nédélec one-equation coupling).
//!
//! All retarded operators are realized through their Laplace-domain
//! counterparts built on the modified Bessel kernel `K0(s·|x-y|)/2π`, so the
//! only time discretization anywhere is the CQ weight calculus in [`cq`].
//!
//! The crate is organized along the pipeline:
//!
//! * [`mesh`] — boundary polygons, triangulations, evaluation grids, spaces
//! * [`specfun`] — complex-argument `K0`/`K1` and the Laplace-domain kernel
//! * [`quadrature`] — Gauss rules, graded log-singular rules
//! * [`boundary_ops`] — Galerkin matrices for V, K, Kᵗ, W and field evaluation
//! * [`fem`] — interior P1 matrices, trace couplings, discrete operators
//! * [`cq`] — convolution quadrature weights, convolutions, block marching
//! * [`field`] — spectral free waves, incident traces, energy traces
//! * [`formulations`] — the six semidiscrete systems
//! * [`transmission`] — constrained volume-FEM oracle and matrix-level checks
//! * [`presets`], [`config`], [`runner`] — experiment configuration and runs
//! * [`verify`] — independent numerical oracles used by tests and `selftest`

pub mod boundary_ops;
pub mod config;
pub mod cq;
pub mod error;
pub mod fem;
pub mod field;
pub mod formulations;
pub mod mesh;
pub mod par;
pub mod presets;
pub mod quadrature;
pub mod runner;
pub mod specfun;
pub mod transmission;
pub mod verify;

pub use error::{Error, Result};

/// Crate version string recorded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
