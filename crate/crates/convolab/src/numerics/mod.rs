//! Shared numerical kernels: grids and quadrature, finite differences,
//! Runge–Kutta flows, and scale-family limit extrapolation.
//!
//! Everything downstream (groupoid models, convolution, deformation calculus,
//! transforms, classical limits) is built from these four primitives, so the
//! accuracy contract of the whole laboratory reduces to the contracts stated
//! here:
//!
//! * [`Grid`] quadrature is the trapezoid rule, which is spectrally accurate
//!   for smooth integrands that either decay below the boundary-decay
//!   threshold (truncated line) or are periodic (circle);
//! * [`diff_at_zero`] is a five-point central stencil (one Richardson level),
//!   exact on quartics, with `O(ε⁴)` truncation error;
//! * [`flow`] is classical fourth-order Runge–Kutta with a fixed step per
//!   unit time, giving `O(step⁴)` endpoint error;
//! * [`limit_estimate`] fits `v(t) ≈ V + C·tᵖ` on a dyadic scale sequence
//!   and reports the extrapolated value together with the fitted order.
//!
//! Summation orders are fixed (ascending grid index), so repeated runs on
//! identical inputs are bit-identical.

mod diff;
mod flow;
mod grid;
mod limits;

pub use diff::{diff_at_zero, diff_at_zero_vec};
pub use flow::{flow, flow_with_jacobian, rk4_step};
pub use grid::{Grid, GridKind, SampledFunction};
pub use limits::{limit_estimate, LimitFit};
