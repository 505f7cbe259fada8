//! Centralized tolerance and discretization constants.
//!
//! Every numerical gate in the crate reads its threshold from this module, so
//! the error budget lives in one place. Each constant's doc comment states
//! where the number comes from — either a floating-point/stencil error
//! estimate or a frozen decision recorded when the corresponding oracle was
//! first validated. Tests that compare two *computed* routes use tighter
//! thresholds than tests that compare a computed route against a truncated
//! closed form, because grid truncation does not cancel in the latter.
//!
//! # Layout
//!
//! * exact-arithmetic identities (closed-form structure maps): near roundoff,
//! * spectral/quadrature comparisons: `1e-10` .. `1e-8`,
//! * finite-difference and fitted quantities: `1e-7` .. `1e-5`,
//! * extrapolated scale-family limits: `1e-3` .. `1e-2`.

// ---------------------------------------------------------------------------
// Core discretization parameters
// ---------------------------------------------------------------------------

/// Default node count for truncated-line grids.
///
/// Odd so that the origin is a node; at `L = 8` this gives spacing
/// `h = 0.08`, for which trapezoid quadrature of unit-width Gaussians is
/// accurate to well below `1e-12` (the error of the periodized trapezoid
/// rule decays like `exp(-(π/h)² σ²)`).
pub const DEFAULT_LINE_NODES: usize = 201;

/// Default half-width of truncated-line grids.
///
/// Chosen so the seeded Schwartz test families (unit-scale Gaussians centered
/// within `|c| ≤ 1.5`) decay below [`BOUNDARY_DECAY`] at the endpoints:
/// `exp(-0.8·6.5²) ≈ 2e-15`.
pub const DEFAULT_LINE_HALF_WIDTH: f64 = 8.0;

/// Default node count for circle grids.
///
/// A power of two divisible by the small cyclic group orders used in the
/// rotation model, and comfortably above twice the largest trig-polynomial
/// degree in the seeded families (degree ≤ 12 after one product).
pub const DEFAULT_CIRCLE_NODES: usize = 256;

/// Minimum admissible node count for any grid.
///
/// Below this the five-point derivative stencils and the Nyquist margin
/// checks stop making sense.
pub const MIN_GRID_NODES: usize = 16;

/// Step used by central differences before Richardson refinement.
///
/// With one Richardson level the derivative error is `O(ε⁴ f⁽⁵⁾/30)`;
/// `ε = 1e-3` balances that against roundoff amplification `u/ε ≈ 1e-13`.
pub const DIFF_EPS: f64 = 1e-3;

/// Integration step for fourth-order Runge–Kutta flows, per unit time.
///
/// Global RK4 error is `O(h⁴)`; `h = 1e-2` yields `≈ 1e-8` over unit time
/// for unit-scale fields, matching [`FLOW`].
pub const FLOW_STEP: f64 = 1e-2;

/// Step for finite-difference Jacobians of user-supplied vector fields.
///
/// Central differences with `h = 1e-5` give `O(h²) = 1e-10` truncation while
/// keeping roundoff `u/h = 1e-11` of the same order.
pub const FD_JACOBIAN_EPS: f64 = 1e-5;

/// Scale parameters for extrapolated limits: `t = 2^{-2} .. 2^{-7}`.
///
/// Six dyadic points are enough for a stable two-parameter (value, order)
/// fit while the smallest scale stays well above derivative-step roundoff.
pub const LIMIT_SCALES: [f64; 6] = [0.25, 0.125, 0.0625, 0.03125, 0.015625, 0.0078125];

/// Required ratio between the source grid's Nyquist frequency and the
/// largest requested target frequency.
///
/// A margin of 4 keeps the discrete transform of unit-width Gaussians
/// aliasing-free to below `1e-12`.
pub const NYQUIST_MARGIN_MIN: f64 = 4.0;

// ---------------------------------------------------------------------------
// Exact-arithmetic identities (closed-form maps, index arithmetic)
// ---------------------------------------------------------------------------

/// Structure-map identities of groupoid models (units, inverses,
/// associativity of the closed-form product, nerve compatibility).
///
/// These are compositions of a handful of arithmetic ops; anything above a
/// few hundred ulps indicates a wrong formula, not discretization error.
pub const STRUCTURE: f64 = 1e-12;

/// Logarithm/exponential round trip of an algebroid model.
pub const LOG_EXP: f64 = 1e-10;

/// Associativity of convolution on the cyclic-rotation model, whose
/// convolution is a finite exact sum over grid indices.
pub const ASSOC_CYCLIC: f64 = 1e-12;

/// Cyclicity residual of genuinely cyclic cochains on grid-exact models.
pub const CYCLIC: f64 = 1e-12;

/// Decay required of sampled line data at the two boundary nodes, relative
/// to the sample's sup-norm. Part of the Schwartz-truncation contract.
pub const BOUNDARY_DECAY: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Quadrature- and stencil-limited checks
// ---------------------------------------------------------------------------

/// Trapezoid/periodic quadrature against closed-form integrals of
/// fast-decaying integrands (e.g. `∫e^{-x²} = √π` on the default grid).
pub const QUAD: f64 = 1e-10;

/// Flow endpoint against closed-form solutions over unit time.
pub const FLOW: f64 = 1e-8;

/// Richardson-refined central derivative against closed forms.
pub const DERIVATIVE: f64 = 1e-10;

/// Right-invariance residual of Haar quadratures.
pub const HAAR_INVARIANCE: f64 = 1e-10;

/// Convolution of line-model densities against closed-form Gaussian
/// identities, evaluated on the core window where truncation is negligible.
pub const CONV_ORACLE: f64 = 1e-8;

/// Associativity of convolution on the truncated-line model.
///
/// On-grid convolution is a weighted matrix product and associates to
/// roundoff; the allowance covers accumulation over ~200-term sums.
pub const ASSOC_LINE: f64 = 1e-8;

/// `δ∘δ = 0` for the Hochschild-style differential (both models).
pub const COMPLEX_SQUARE_ZERO: f64 = 1e-9;

/// `δ∘δ = 0` for the deformation differential.
pub const DEF_SQUARE_ZERO: f64 = 1e-9;

/// Vanishing of the deformation differential on multiplicative cochains.
pub const DEF_MULTIPLICATIVE: f64 = 1e-10;

/// Constancy of a cochain's source-projected component along source fibers
/// (the projectability contract of deformation cochains).
pub const S_PROJECTABILITY: f64 = 1e-10;

/// Trace functional: closed-form values on the core window and the trace
/// property `τ(a∗b) = τ(b∗a)`.
pub const TRACE: f64 = 1e-8;

/// Normalization residual (unit-argument values versus degenerate symbol)
/// below which a cochain is accepted as normalized.
pub const NORMALIZATION: f64 = 1e-8;

/// Agreement between two admissible source-projectable extensions in any
/// extension-dependent evaluation.
pub const EXTENSION_INDEPENDENCE: f64 = 1e-8;

/// Transported-division consistency of a deformation family at ε = 0.
pub const FAMILY_AT_ZERO: f64 = 1e-12;

/// Cocycle residual of the deformation class extracted from a family.
pub const XI_COCYCLE: f64 = 1e-8;

// ---------------------------------------------------------------------------
// Finite-difference- and fit-limited checks
// ---------------------------------------------------------------------------

/// Finite-difference cross-checks of closed-form tangent maps.
pub const FD_CROSS: f64 = 1e-6;

/// Derivation property of degree-one images in the convolution algebra.
pub const DERIVATION: f64 = 1e-6;

/// Chain-map commutation on the cyclic-rotation model (spectral, grid-exact
/// translations).
pub const CHAIN_MAP_CYCLIC: f64 = 1e-8;

/// Chain-map commutation on the truncated-line model (flow-based actions,
/// finite-difference stencils, nested quadratures).
pub const CHAIN_MAP_LINE: f64 = 1e-4;

/// Comparison of the degree-one image of a family's velocity cochain with
/// the directly-differentiated product family.
pub const PHI_XI_BETA: f64 = 1e-4;

/// Hochschild-cocycle residual of a differentiated product family.
pub const BETA_COCYCLE: f64 = 1e-4;

/// Compatibility of the degree-wise image with cup products (module
/// structure over the groupoid-cochain algebra).
pub const MODULE_ACTION: f64 = 1e-6;

/// Trace-characteristic pairing identity on the cyclic-rotation model.
pub const CHARACTERISTIC: f64 = 1e-8;

/// Relative residual below which a degree-one cochain would be accepted as
/// an inner derivation by the least-squares fit. The obstruction check
/// asserts the *opposite* — residual at or above [`INNER_RESIDUAL_MIN`].
pub const INNER_RESIDUAL_MIN: f64 = 0.5;

/// Fourier round trip (forward then inverse) on seeded Schwartz samples.
pub const FOURIER_ROUND_TRIP: f64 = 1e-10;

/// Fourier calculus identities (directional derivatives, weight-derivative
/// correction, convolution–product intertwining), including non-constant
/// fiber weights.
pub const FOURIER_IDENTITY: f64 = 1e-7;

/// Residual above which a conjugated field is rejected as non-affine.
pub const HAT_FIT: f64 = 1e-5;

/// Fitted conjugated-field coefficients against the closed form.
pub const HAT_CLOSED_FORM: f64 = 1e-6;

/// Pairing identities of conjugated and fiber-translation fields on linear
/// functions.
pub const HAT_PAIRING: f64 = 1e-7;

/// Poisson bracket against the quadruple-resolution oracle.
pub const POISSON_ORACLE: f64 = 1e-7;

/// Leibniz rule of bracket-like bilinear operations.
pub const LEIBNIZ: f64 = 1e-7;

/// Invariance of the extended field under the scaling-family action and
/// agreement with the closed-form extension.
pub const INVARIANT_EXTENSION: f64 = 1e-6;

/// Quantized Gaussian against the closed-form scaled Gaussian.
pub const QUANTIZE_ORACLE: f64 = 1e-7;

/// Fiber-linearization of a normalized cochain against closed forms.
pub const LINEARIZE: f64 = 1e-6;

// ---------------------------------------------------------------------------
// Extrapolated scale-family limits
// ---------------------------------------------------------------------------

/// Degree-one two-route comparison after extrapolation over
/// [`LIMIT_SCALES`] with one Richardson level.
pub const VAN_EST_K1: f64 = 1e-3;

/// Degree-two two-route comparison (antisymmetrized commutator route
/// against the direct differentiation route).
pub const VAN_EST_K2: f64 = 1e-2;

/// Consistency square: fiber-linearization followed by conjugation versus
/// the direct degree-one comparison map.
pub const CONSISTENCY_SQUARE: f64 = 1e-5;

/// Derivation (Hamiltonian) property of degree-one comparison images on
/// the dual bundle.
pub const POISSON_DERIVATION: f64 = 1e-5;

/// Minimum fitted convergence order for commutator classical limits.
pub const CLASSICAL_ORDER_MIN: f64 = 1.0;

// ---------------------------------------------------------------------------
// Profile
// ---------------------------------------------------------------------------

/// Tunable numerical knobs threaded through the core routines.
///
/// The catalog constants above are defaults; a profile instance lets an
/// experiment configuration tighten or relax the core steps without
/// touching per-check gates.
#[derive(Clone, Debug)]
pub struct ToleranceProfile {
    /// Quadrature acceptance for closed-form integral oracles.
    pub quadrature: f64,
    /// Step for central differences before Richardson refinement.
    pub diff_eps: f64,
    /// RK4 step per unit time.
    pub flow_step: f64,
    /// Step for finite-difference Jacobians.
    pub fd_jacobian_eps: f64,
    /// Required boundary decay of sampled line data.
    pub boundary_decay: f64,
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        Self {
            quadrature: QUAD,
            diff_eps: DIFF_EPS,
            flow_step: FLOW_STEP,
            fd_jacobian_eps: FD_JACOBIAN_EPS,
            boundary_decay: BOUNDARY_DECAY,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The budget must be ordered: exact identities ≤ quadrature-limited ≤
    /// stencil/fit-limited ≤ extrapolated limits. A violation means some
    /// constant was edited without re-deriving its place in the hierarchy.
    #[test]
    fn tolerance_hierarchy_is_monotonic() {
        let exact = [STRUCTURE, ASSOC_CYCLIC, CYCLIC, BOUNDARY_DECAY];
        let quadrature = [
            QUAD,
            DERIVATIVE,
            HAAR_INVARIANCE,
            LOG_EXP,
            COMPLEX_SQUARE_ZERO,
            DEF_SQUARE_ZERO,
            DEF_MULTIPLICATIVE,
            S_PROJECTABILITY,
        ];
        let fitted = [
            FD_CROSS,
            DERIVATION,
            MODULE_ACTION,
            FOURIER_IDENTITY,
            HAT_CLOSED_FORM,
            POISSON_ORACLE,
            LEIBNIZ,
            QUANTIZE_ORACLE,
            LINEARIZE,
        ];
        let limits = [VAN_EST_K1, VAN_EST_K2];

        let max = |xs: &[f64]| xs.iter().cloned().fold(f64::MIN, f64::max);
        let min = |xs: &[f64]| xs.iter().cloned().fold(f64::MAX, f64::min);

        assert!(max(&exact) <= min(&quadrature) * 1e2 + f64::EPSILON);
        assert!(max(&quadrature) <= min(&fitted));
        assert!(max(&fitted) <= min(&limits));
    }

    #[test]
    fn default_profile_matches_catalog() {
        let p = ToleranceProfile::default();
        assert_eq!(p.quadrature, QUAD);
        assert_eq!(p.diff_eps, DIFF_EPS);
        assert_eq!(p.flow_step, FLOW_STEP);
        assert_eq!(p.fd_jacobian_eps, FD_JACOBIAN_EPS);
        assert_eq!(p.boundary_decay, BOUNDARY_DECAY);
    }

    #[test]
    fn limit_scales_are_dyadic_and_decreasing() {
        for (i, t) in LIMIT_SCALES.iter().enumerate() {
            assert_eq!(*t, 2f64.powi(-(i as i32 + 2)));
        }
    }
}
