//! Convolution algebras of groupoid models and their Hochschild-style
//! cochain calculus.
//!
//! A [`Density`] is a compactly-supported smooth density on the arrow space
//! of a model, represented by an evaluation closure (with a transparent
//! memo layer, since nested fiber quadratures revisit grid arrows heavily).
//! The product is groupoid convolution along the Haar system,
//!
//! ```text
//! (a ∗ b)(g) = ∫ a(g h⁻¹) · b(h) dλ_{source(g)}(h),
//! ```
//!
//! implemented by [`convolve`]. On top of the algebra sit:
//!
//! * [`HochschildCochain`] — multilinear maps of densities with the
//!   differential [`hoch_diff`], cup product [`cup`], and the degree-wise
//!   inclusion [`phi0`] of groupoid cochains via nerve quadrature;
//! * [`Chain`] — sums of elementary tensors with the boundary
//!   [`chain_boundary`] and the contraction [`contract_chain`];
//! * [`CochainFunctional`] — multilinear scalar functionals, including the
//!   integration trace [`trace_functional`] and its contractions
//!   ([`contract_functional`], [`psi_tau`]);
//! * [`cyclic_residual`] — the cyclicity diagnostic for groupoid cochains.
//!
//! All identities asserted in tests (associativity, `δ∘δ = 0`, the
//! differential/cup compatibility of the inclusion, the contraction
//! identities) compare two computed routes, so grid truncation cancels and
//! thresholds sit near the quadrature floor.

mod chains;
mod cyclic;
mod density;
mod families;
mod hochschild;
mod trace;

pub use chains::{chain_boundary, contract_chain, Chain};
pub use cyclic::cyclic_residual;
pub use density::{convolve, sup_diff_on, sup_on, Density};
pub use families::{
    seeded_bundle_density, seeded_circle_function, seeded_etale_density, seeded_pair_density,
};
pub use hochschild::{cup, cup_groupoid, groupoid_diff, hoch_diff, phi0, GroupoidCochain, HochschildCochain};
pub use trace::{
    contract_functional, functional_boundary, psi_tau, trace_functional, CochainFunctional,
};
