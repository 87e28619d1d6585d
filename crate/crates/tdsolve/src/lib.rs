//! Solution machinery for the time-dependent oscillator family
//!
//! ```text
//!     H = (1/2) (t0/t)^a P^2 + (1/2) w^2 (t/t0)^b X^2
//! ```
//!
//! The same physical system can be written in three equivalent Schrödinger
//! pictures, and this crate evaluates the closed-form solution functions for
//! all of them:
//!
//! * **TM** — time-dependent mass: the defining Hamiltonian above, with a
//!   `(t0/t)^a` kinetic coefficient.
//! * **TQ** — time-dependent quadratic: unit mass plus a dilation (`D`) drag
//!   term, reached from TM by the unitary map `exp(i nu D)` with
//!   `nu = (a/2) ln(t/t0)`.
//! * **TO** — time-dependent oscillator: unit mass and a purely time-dependent
//!   spring constant `2 g2(t')`, reached from TM by a change of time variable
//!   `t -> t'`.
//!
//! Everything observable is built from one complex mode function per picture
//! (`xi`, `xi_hat`, or the pair `Xi_P`/`Xi_X`), normalized so that the
//! Wronskian `xi conj(xi_dot) - xi_dot conj(xi) = -i`. The crate provides:
//!
//! * [`bessel`] — real-order Bessel/Hankel kernel the closed forms are made of
//! * [`regime`] — classification of `(a, b, w, t0)` into the solution regimes
//! * [`time_map`] — the picture maps `nu(t)`, `t'(t)` and the TO coefficient
//! * [`solution`] — per-picture mode functions and `phi3` bilinears
//! * [`observables`] — `<x>`, `<p>`, squeezed-state uncertainties, traces
//! * [`algebra`] — the os(1) symmetry generators and their commutators
//! * [`oracle`] — an independent fixed-step RK4 integrator for cross-checks
//! * [`verify`] — the property suites run by `tdsolve verify` and the
//!   acceptance tests
//! * [`cli`] — the `tdsolve` command line (classify / trace / verify)
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod algebra;
pub mod bessel;
pub mod cli;
pub mod observables;
pub mod oracle;
pub mod params;
pub mod regime;
pub mod solution;
pub mod time_map;
pub mod verify;

mod error;

pub use error::Error;
pub use params::{Params, SqueezeState};
pub use regime::{classify, Picture, SystemKey};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
