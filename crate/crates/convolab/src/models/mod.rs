//! Groupoid models with closed-form structure maps.
//!
//! Three concrete models drive the laboratory:
//!
//! * [`PairGroupoid`] — the pair groupoid of a truncated line (or square),
//!   arrows `(x, y)` from `y` to `x`, fibered over the source coordinate;
//! * [`EtaleRotation`] — the action groupoid of a finite cyclic rotation
//!   group on the circle, an étale model whose source fibers are finite;
//! * [`BundleGroupoid`] — a vector bundle viewed as a bundle of abelian
//!   groups, with fiberwise addition and a positive Haar weight.
//!
//! # Arrow representation
//!
//! All models share one arrow type: up to four continuous chart coordinates
//! plus one discrete label ([`Arrow`]). The chart is ordered with the
//! **vertical** (source-fiber) coordinates first and the base coordinates
//! last, so the differential of the source map is literally "take the last
//! `base_dim` lanes" for every model, and a source-projectable extension can
//! be assembled generically from a vertical part and a lifted base
//! direction. Unused lanes are kept at zero.
//!
//! Tangent vectors at an arrow use the same four-lane layout ([`Chart`]);
//! tangent vectors at a base point use two lanes ([`BChart`]).
//!
//! All structure maps (`source`, `target`, `unit`, `inverse`, `compose`,
//! `divide`) and their differentials are closed-form arithmetic on the
//! lanes; tests cross-check the differentials against finite differences.
//!
//! # Example
//!
//! ```
//! use convolab::models::{Groupoid, PairGroupoid};
//! use convolab::numerics::Grid;
//!
//! let g = PairGroupoid::new(1, Grid::line(33, 8.0).unwrap()).unwrap();
//! let a = g.arrow(1.0, -0.5); // arrow from -0.5 to 1.0
//! let u = g.unit(g.source(a));
//! let same = g.compose(a, u);
//! assert!((same.c[0] - a.c[0]).abs() < 1e-15);
//! ```

mod bundle;
mod etale;
mod pair;

pub use bundle::BundleGroupoid;
pub use etale::EtaleRotation;
pub use pair::PairGroupoid;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// Continuous chart coordinates of an arrow (vertical lanes first, then
/// base lanes; unused lanes zero).
pub type Chart = [f64; 4];

/// Chart coordinates of a base point (unused lanes zero).
pub type Base = [f64; 2];

/// Tangent vector at a base point.
pub type BChart = [f64; 2];

/// An arrow of any of the models: continuous chart plus a discrete label
/// (used only by the étale model, where it is the group element).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arrow {
    /// Continuous chart coordinates (vertical first, then base).
    pub c: Chart,
    /// Discrete component (rotation count for the étale model, else 0).
    pub disc: u32,
}

impl Arrow {
    /// Arrow with the given chart and trivial discrete part.
    pub fn from_chart(c: Chart) -> Self {
        Self { c, disc: 0 }
    }
}

// ---------------------------------------------------------------------------
// Chart arithmetic helpers
// ---------------------------------------------------------------------------

/// Lane-wise sum.
pub fn chart_add(a: Chart, b: Chart) -> Chart {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

/// Lane-wise difference.
pub fn chart_sub(a: Chart, b: Chart) -> Chart {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

/// Lane-wise scaling.
pub fn chart_scale(a: Chart, s: f64) -> Chart {
    [a[0] * s, a[1] * s, a[2] * s, a[3] * s]
}

/// Euclidean norm over the lanes.
pub fn chart_norm(a: Chart) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]).sqrt()
}

/// Euclidean norm of a base tangent.
pub fn bchart_norm(a: BChart) -> f64 {
    (a[0] * a[0] + a[1] * a[1]).sqrt()
}

/// Lane-wise base-tangent difference.
pub fn bchart_sub(a: BChart, b: BChart) -> BChart {
    [a[0] - b[0], a[1] - b[1]]
}

// ---------------------------------------------------------------------------
// The model interface
// ---------------------------------------------------------------------------

/// A groupoid model: closed-form structure maps, their differentials, a
/// Haar system along the source fibers, and quadrature data for the base.
///
/// Implementations guarantee:
///
/// * the groupoid axioms hold exactly (up to roundoff) for the closed-form
///   maps, on composable tuples;
/// * `divide(g, h) = compose(g, inverse(h))` whenever `source(g) =
///   source(h)`, and the closed form extends smoothly off that locus;
/// * the chart layout puts the source-fiber (vertical) coordinates in lanes
///   `0..fiber_dim()` and base coordinates in lanes
///   `fiber_dim()..chart_dim()`;
/// * `for_each_fiber_point` enumerates a quadrature of the source fiber
///   whose weights make the fiber integral right-invariant.
pub trait Groupoid: Send + Sync {
    /// Dimension of the source fibers (count of vertical chart lanes).
    fn fiber_dim(&self) -> usize;

    /// Dimension of the base (count of base chart lanes).
    fn base_dim(&self) -> usize;

    /// Total number of continuous chart lanes in use.
    fn chart_dim(&self) -> usize {
        self.fiber_dim() + self.base_dim()
    }

    /// Source of an arrow.
    fn source(&self, g: Arrow) -> Base;

    /// Target of an arrow.
    fn target(&self, g: Arrow) -> Base;

    /// Unit arrow at a base point.
    fn unit(&self, x: Base) -> Arrow;

    /// Inverse arrow.
    fn inverse(&self, g: Arrow) -> Arrow;

    /// Composition `g · h` (requires `source(g) = target(h)`).
    fn compose(&self, g: Arrow, h: Arrow) -> Arrow;

    /// Division `g · h⁻¹` in its smoothly extended closed form (defined for
    /// all pairs, agreeing with `compose(g, inverse(h))` when
    /// `source(g) = source(h)`).
    fn divide(&self, g: Arrow, h: Arrow) -> Arrow;

    /// Differential of the source map (projection to the base lanes).
    fn d_source(&self, _g: Arrow, v: Chart) -> BChart {
        let d = self.fiber_dim();
        [v[d], if self.base_dim() > 1 { v[d + 1] } else { 0.0 }]
    }

    /// Differential of the target map.
    fn d_target(&self, g: Arrow, v: Chart) -> BChart;

    /// Differential of the unit embedding.
    fn d_unit(&self, x: Base, w: BChart) -> Chart;

    /// Differential of the inverse map.
    fn d_inverse(&self, g: Arrow, v: Chart) -> Chart;

    /// Differential of the extended division, in both slots:
    /// `(v, w) ↦ d m̄_{(g,h)}(v, w)`.
    fn d_divide(&self, g: Arrow, h: Arrow, v: Chart, w: Chart) -> Chart;

    /// Kill the base lanes of a tangent (the part tangent to the source
    /// fiber survives).
    fn vertical_part(&self, v: Chart) -> Chart {
        let mut out = v;
        for lane in out.iter_mut().take(self.chart_dim()).skip(self.fiber_dim()) {
            *lane = 0.0;
        }
        out
    }

    /// Lift a base direction to an arrow tangent with no vertical part
    /// (right-inverse of `d_source` in the model chart).
    fn horizontal_lift(&self, w: BChart) -> Chart {
        let d = self.fiber_dim();
        let mut out = [0.0; 4];
        out[d] = w[0];
        if self.base_dim() > 1 {
            out[d + 1] = w[1];
        }
        out
    }

    /// Quadrature nodes covering the base.
    fn base_nodes(&self) -> &[Base];

    /// Quadrature weights matching [`Groupoid::base_nodes`].
    fn base_weights(&self) -> &[f64];

    /// Distance between base points (used for composability checks).
    fn base_dist(&self, a: Base, b: Base) -> f64;

    /// Enumerate a quadrature of the source fiber over `x`: each call gets
    /// an arrow with `source = x` and its Haar weight.
    fn for_each_fiber_point(&self, x: Base, f: &mut dyn FnMut(Arrow, f64));

    /// Density of the Haar measure with respect to Lebesgue measure in the
    /// vertical chart lanes, at the fiber over `x` (1 unless the model
    /// carries a weight).
    fn haar_weight_at(&self, x: Base) -> f64;

    /// Move an arrow to the fiber over `x0` by replacing its base
    /// coordinates (the canonical projection used to extend fiber-defined
    /// fields).
    fn project_to_source_fiber(&self, g: Arrow, x0: Base) -> Arrow;

    /// A moderate, deterministic subset of the arrow grid for sup-norm
    /// estimates of expensive operands.
    fn probe_arrows(&self) -> Vec<Arrow>;

    /// The full arrow grid.
    fn full_arrows(&self) -> Vec<Arrow>;
}

/// Convolution of two fiber quadratures against the Haar system: the fiber
/// integral `∫ f(h) dλ_x(h)` as a complex number.
pub fn fiber_integral<G: Groupoid + ?Sized>(
    model: &G,
    x: Base,
    f: impl Fn(Arrow) -> Complex64,
) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    model.for_each_fiber_point(x, &mut |h, w| {
        acc += f(h) * w;
    });
    acc
}

/// Quadrature over the base: `∫_M f(x) dx` with the model's base weights.
pub fn base_integral<G: Groupoid + ?Sized>(
    model: &G,
    f: impl Fn(Base) -> Complex64,
) -> Complex64 {
    let nodes = model.base_nodes();
    let weights = model.base_weights();
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, w) in nodes.iter().zip(weights.iter()) {
        acc += f(*x) * *w;
    }
    acc
}

/// Shared-ownership handle to a model, as captured by evaluation closures
/// in the algebra and deformation layers.
pub type Model = std::sync::Arc<dyn Groupoid>;

/// Draw a composable `k`-tuple of grid arrows, built source-upward: the
/// innermost arrow starts at a random base node and each further arrow is a
/// random fiber point over the previous target.
pub fn random_composable_tuple<G: Groupoid + ?Sized>(
    model: &G,
    k: usize,
    rng: &mut impl rand::Rng,
) -> Vec<Arrow> {
    assert!(k >= 1, "tuple arity must be at least 1");
    let nodes = model.base_nodes();
    let mut x = nodes[rng.gen_range(0..nodes.len())];
    let mut arrows = Vec::with_capacity(k);
    for _ in 0..k {
        let mut fiber = Vec::new();
        model.for_each_fiber_point(x, &mut |h, _| fiber.push(h));
        let g = fiber[rng.gen_range(0..fiber.len())];
        x = model.target(g);
        arrows.push(g);
    }
    arrows.reverse(); // outermost (leftmost) factor first
    arrows
}

// ---------------------------------------------------------------------------
// Algebroid data
// ---------------------------------------------------------------------------

/// Models that expose an exponential chart from their algebroid onto a
/// neighborhood of the units.
///
/// The contract is `alg_log(alg_exp(x, v)) = (x, v)` to roundoff, and
/// `source(alg_exp(x, v)) = x`.
pub trait Algebroid: Groupoid {
    /// Rank of the algebroid (fiber dimension of `A`).
    fn alg_rank(&self) -> usize;

    /// Exponential: an algebroid vector at `x` to an arrow with source `x`.
    fn alg_exp(&self, x: Base, v: BChart) -> Arrow;

    /// Logarithm: an arrow near the units back to `(base, algebroid
    /// vector)`.
    fn alg_log(&self, g: Arrow) -> (Base, BChart);
}

// ---------------------------------------------------------------------------
// Nerve tuples and iterated-fiber quadrature
// ---------------------------------------------------------------------------

/// A composable tuple of arrows (`source(gᵢ) = target(gᵢ₊₁)` within the
/// structure tolerance).
#[derive(Clone, Debug)]
pub struct NerveTuple {
    arrows: Vec<Arrow>,
}

impl NerveTuple {
    /// Validate composability and wrap the tuple.
    pub fn new<G: Groupoid + ?Sized>(model: &G, arrows: Vec<Arrow>) -> Result<Self> {
        for w in arrows.windows(2) {
            let gap = model.base_dist(model.source(w[0]), model.target(w[1]));
            if gap > tol::STRUCTURE {
                return Err(Error::IncompatibleGrid(format!(
                    "tuple is not composable: source/target gap {gap:.3e}"
                )));
            }
        }
        Ok(Self { arrows })
    }

    /// The arrows, outermost first.
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Tuple length (cochain arity it can feed).
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    /// Whether the tuple is empty.
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Integrate `f` over all decompositions `g = g₁ ⋯ g_k` of a fixed arrow,
/// with the iterated right-invariant fiber measure.
///
/// The decomposition is parameterized by `k−1` arrows `h₁, …, h_{k−1}` in
/// the source fiber of `g`:
///
/// ```text
/// g₁ = g·h₁⁻¹,  g₂ = h₁·h₂⁻¹,  …,  g_k = h_{k-1}.
/// ```
///
/// Supported for `1 ≤ k ≤ 3`; higher arities return an error (the cost
/// grows with the `(k−1)`-th power of the fiber grid and nothing in the
/// battery needs them).
pub fn nerve_quadrature<G: Groupoid + ?Sized>(
    model: &G,
    k: usize,
    g: Arrow,
    f: &mut dyn FnMut(&[Arrow]) -> Complex64,
) -> Result<Complex64> {
    let x = model.source(g);
    match k {
        1 => Ok(f(&[g])),
        2 => {
            let mut acc = Complex64::new(0.0, 0.0);
            model.for_each_fiber_point(x, &mut |h, w| {
                acc += f(&[model.divide(g, h), h]) * w;
            });
            Ok(acc)
        }
        3 => {
            let mut acc = Complex64::new(0.0, 0.0);
            model.for_each_fiber_point(x, &mut |h1, w1| {
                let g1 = model.divide(g, h1);
                model.for_each_fiber_point(x, &mut |h2, w2| {
                    acc += f(&[g1, model.divide(h1, h2), h2]) * (w1 * w2);
                });
            });
            Ok(acc)
        }
        _ => Err(Error::ArityUnsupported(format!(
            "nerve quadrature supports arity 1..=3, got {k}"
        ))),
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Grid;

    #[test]
    fn nerve_rejects_unsupported_arity() {
        let g = PairGroupoid::new(1, Grid::line(17, 2.0).unwrap()).unwrap();
        let a = g.arrow(0.5, -0.5);
        let err = nerve_quadrature(&g, 4, a, &mut |_| Complex64::new(1.0, 0.0));
        assert!(matches!(err, Err(Error::ArityUnsupported(_))));
        let err0 = nerve_quadrature(&g, 0, a, &mut |_| Complex64::new(1.0, 0.0));
        assert!(matches!(err0, Err(Error::ArityUnsupported(_))));
    }

    #[test]
    fn nerve_tuple_rejects_non_composable_pairs() {
        let g = PairGroupoid::new(1, Grid::line(17, 2.0).unwrap()).unwrap();
        let a = g.arrow(0.5, -0.5);
        let b = g.arrow(1.0, 0.0); // target 1.0 ≠ source(a) = -0.5
        assert!(NerveTuple::new(&g, vec![a, b]).is_err());
        let c = g.arrow(-0.5, 1.0); // target -0.5 = source(a)
        assert!(NerveTuple::new(&g, vec![a, c]).is_ok());
    }

    #[test]
    fn nerve_two_recovers_convolution_structure() {
        // Σ over two-fold decompositions of a product of indicators equals
        // the fiber integral directly.
        let g = EtaleRotation::new(4, Grid::circle(64).unwrap()).unwrap();
        let a = g.rotation_arrow(1, 0.0);
        let direct = fiber_integral(&g, g.source(a), |_| Complex64::new(1.0, 0.0));
        let via_nerve =
            nerve_quadrature(&g, 2, a, &mut |_| Complex64::new(1.0, 0.0)).unwrap();
        assert!((direct - via_nerve).norm() < 1e-12);
    }
}
