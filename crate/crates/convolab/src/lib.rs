//! # convolab
//!
//! A numerical laboratory for convolution algebras of Lie groupoid models.
//!
//! The crate builds small, exactly-describable groupoids — the pair groupoid
//! of an interval, a cyclic rotation action on the circle, and a vector
//! bundle viewed as a bundle of abelian groups — together with their
//! convolution algebras, and then *measures* the algebraic identities that
//! the smooth theory predicts: associativity, the chain-map property of the
//! comparison map from deformation cochains to Hochschild cochains, trace
//! and module structures, fiberwise Fourier calculus, and the classical
//! limits of a quantization map along a scaling family.
//!
//! Every claim is implemented twice where possible (a geometric route and an
//! algebraic route) and the discrepancy is driven to a frozen tolerance; the
//! `acceptance` integration test gates the whole battery, and the `convolab`
//! binary runs the same experiments from a configuration file.
//!
//! # Architecture
//!
//! * [`numerics`] — grids, quadrature, differentiation, RK4 flows, and
//!   power-law limit extrapolation; every error budget starts here.
//! * [`models`] — the three groupoid models with closed-form structure maps,
//!   Haar systems, and (where they exist) algebroid exponentials.
//! * [`algebra`] — densities, convolution, the Hochschild-style differential
//!   with cup products, traces, and cyclicity diagnostics.
//! * [`deformation`] — source-projectable cochains, the deformation
//!   differential, the comparison chain map into the convolution algebra,
//!   and one-parameter deformation families.
//! * [`fourier`] — fiberwise Fourier transforms with weights, conjugated
//!   (hat) vector fields, and Poisson brackets on the dual bundle.
//! * [`adiabatic`] — the scaling family: invariant extensions, fiberwise
//!   linearization, the quantization map, classical-limit measurements, and
//!   the two-route degree comparison.
//! * [`runner`] — the experiment registry, configuration, and report/CSV
//!   output used by the CLI binary and the acceptance gate.
//!
//! # Example
//!
//! ```
//! use convolab::numerics::Grid;
//! use num_complex::Complex64;
//!
//! // Trapezoid quadrature on the default window is spectrally accurate.
//! let grid = Grid::line(401, 8.0)?;
//! let gauss = grid.quad(|x| Complex64::new((-x * x).exp(), 0.0));
//! assert!((gauss.re - std::f64::consts::PI.sqrt()).abs() < 1e-10);
//! # Ok::<(), convolab::Error>(())
//! ```

#![warn(missing_docs)]

pub mod algebra;
pub mod error;
pub mod models;
pub mod numerics;
pub mod tol;

pub use error::{Error, Result};
