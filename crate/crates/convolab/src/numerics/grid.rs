//! One-dimensional grids (truncated line, circle) and sampled functions.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

/// The two supported one-dimensional geometries.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GridKind {
    /// Uniform nodes on `[-half_width, half_width]`, endpoints included.
    ///
    /// Functions sampled here are expected to decay below the
    /// boundary-decay threshold at the endpoints; quadrature is the
    /// trapezoid rule, spectrally accurate for such integrands.
    Line {
        /// Half-width `L` of the symmetric interval.
        half_width: f64,
    },
    /// Uniform nodes on `[0, 2π)`, periodic; the right endpoint is not a
    /// node. Quadrature is the (here exact-order) periodic rectangle rule.
    Circle,
}

/// A uniform one-dimensional quadrature grid.
///
/// Cloning is cheap (nodes are shared), so grids can be captured freely in
/// evaluation closures.
///
/// # Example
///
/// ```
/// use convolab::numerics::Grid;
/// use num_complex::Complex64;
///
/// let g = Grid::line(401, 8.0).unwrap();
/// let integral = g.quad(|x| Complex64::new((-x * x).exp(), 0.0));
/// assert!((integral.re - std::f64::consts::PI.sqrt()).abs() < 1e-10);
/// ```
#[derive(Clone, Debug)]
pub struct Grid {
    kind: GridKind,
    nodes: Arc<[f64]>,
    spacing: f64,
}

impl Grid {
    /// Uniform grid of `n` nodes on `[-half_width, half_width]`.
    ///
    /// Requires `n ≥ 16` (so difference stencils and Nyquist margins are
    /// meaningful) and a strictly positive half-width.
    pub fn line(n: usize, half_width: f64) -> Result<Self> {
        if n < tol::MIN_GRID_NODES {
            return Err(Error::GridTooCoarse {
                min: tol::MIN_GRID_NODES,
                got: n,
            });
        }
        if !(half_width > 0.0) || !half_width.is_finite() {
            return Err(Error::IncompatibleGrid(format!(
                "line half-width must be positive and finite, got {half_width}"
            )));
        }
        let spacing = 2.0 * half_width / (n - 1) as f64;
        let nodes: Arc<[f64]> = (0..n)
            .map(|i| -half_width + spacing * i as f64)
            .collect::<Vec<_>>()
            .into();
        Ok(Self {
            kind: GridKind::Line { half_width },
            nodes,
            spacing,
        })
    }

    /// Uniform periodic grid of `n` nodes on `[0, 2π)`.
    pub fn circle(n: usize) -> Result<Self> {
        if n < tol::MIN_GRID_NODES {
            return Err(Error::GridTooCoarse {
                min: tol::MIN_GRID_NODES,
                got: n,
            });
        }
        let spacing = std::f64::consts::TAU / n as f64;
        let nodes: Arc<[f64]> = (0..n)
            .map(|i| spacing * i as f64)
            .collect::<Vec<_>>()
            .into();
        Ok(Self {
            kind: GridKind::Circle,
            nodes,
            spacing,
        })
    }

    /// Default truncated-line grid (201 nodes on `[-8, 8]`).
    pub fn default_line() -> Self {
        Self::line(tol::DEFAULT_LINE_NODES, tol::DEFAULT_LINE_HALF_WIDTH)
            .expect("default line parameters are valid")
    }

    /// Default circle grid (256 nodes).
    pub fn default_circle() -> Self {
        Self::circle(tol::DEFAULT_CIRCLE_NODES).expect("default circle parameters are valid")
    }

    /// Geometry of this grid.
    pub fn kind(&self) -> GridKind {
        self.kind
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Whether the grid has no nodes (never true for constructed grids).
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node spacing `h`.
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// The node coordinates, ascending.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// The `i`-th node coordinate.
    pub fn node(&self, i: usize) -> f64 {
        self.nodes[i]
    }

    /// Half-width for line grids, `None` for circles.
    pub fn half_width(&self) -> Option<f64> {
        match self.kind {
            GridKind::Line { half_width } => Some(half_width),
            GridKind::Circle => None,
        }
    }

    /// Whether this is a periodic circle grid.
    pub fn is_circle(&self) -> bool {
        matches!(self.kind, GridKind::Circle)
    }

    /// Quadrature weight of node `i` (trapezoid on the line, uniform on the
    /// circle).
    pub fn weight(&self, i: usize) -> f64 {
        match self.kind {
            GridKind::Line { .. } => {
                if i == 0 || i + 1 == self.nodes.len() {
                    0.5 * self.spacing
                } else {
                    self.spacing
                }
            }
            GridKind::Circle => self.spacing,
        }
    }

    /// Quadrature of a closure over the grid, in ascending node order.
    pub fn quad(&self, f: impl Fn(f64) -> Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..self.nodes.len() {
            acc += f(self.nodes[i]) * self.weight(i);
        }
        acc
    }

    /// Quadrature of pre-sampled values (one per node), in ascending order.
    pub fn quad_samples(&self, values: &[Complex64]) -> Complex64 {
        assert_eq!(values.len(), self.nodes.len(), "sample/grid size mismatch");
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, v) in values.iter().enumerate() {
            acc += v * self.weight(i);
        }
        acc
    }
}

/// Complex samples of a function over a [`Grid`].
///
/// For truncated-line grids, downstream code relies on the samples decaying
/// at the interval ends (the Schwartz-truncation contract);
/// [`SampledFunction::boundary_decay_residual`] measures the violation.
#[derive(Clone, Debug)]
pub struct SampledFunction {
    grid: Grid,
    values: Vec<Complex64>,
}

impl SampledFunction {
    /// Sample `f` at every grid node.
    pub fn from_fn(grid: &Grid, f: impl Fn(f64) -> Complex64) -> Self {
        let values = grid.nodes().iter().map(|&x| f(x)).collect();
        Self {
            grid: grid.clone(),
            values,
        }
    }

    /// Wrap existing per-node values.
    pub fn from_values(grid: &Grid, values: Vec<Complex64>) -> Self {
        assert_eq!(values.len(), grid.len(), "sample/grid size mismatch");
        Self {
            grid: grid.clone(),
            values,
        }
    }

    /// The underlying grid.
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// The sample values, one per node in ascending order.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Sample at node `i`.
    pub fn value(&self, i: usize) -> Complex64 {
        self.values[i]
    }

    /// Sup norm over the nodes.
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Larger endpoint magnitude relative to the sup norm (zero on circle
    /// grids, which have no boundary).
    ///
    /// A value above the boundary-decay threshold means the function does
    /// not fit the truncated window and quadrature against it is suspect.
    pub fn boundary_decay_residual(&self) -> f64 {
        if self.grid.is_circle() || self.values.is_empty() {
            return 0.0;
        }
        let sup = self.sup_norm();
        if sup == 0.0 {
            return 0.0;
        }
        let first = self.values[0].norm();
        let last = self.values[self.values.len() - 1].norm();
        first.max(last) / sup
    }

    /// Quadrature of the samples.
    pub fn quad(&self) -> Complex64 {
        self.grid.quad_samples(&self.values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn line_grid_endpoints_and_spacing() {
        let g = Grid::line(201, 8.0).unwrap();
        assert_eq!(g.len(), 201);
        assert_relative_eq!(g.node(0), -8.0);
        assert_relative_eq!(g.node(200), 8.0);
        assert_relative_eq!(g.spacing(), 0.08);
        assert_relative_eq!(g.node(100), 0.0);
    }

    #[test]
    fn circle_grid_excludes_right_endpoint() {
        let g = Grid::circle(256).unwrap();
        assert_eq!(g.len(), 256);
        assert_relative_eq!(g.node(0), 0.0);
        let last = g.node(255);
        assert!(last < std::f64::consts::TAU);
        assert_relative_eq!(last + g.spacing(), std::f64::consts::TAU, epsilon = 1e-12);
    }

    #[test]
    fn too_coarse_grids_are_rejected() {
        assert!(matches!(
            Grid::line(8, 8.0),
            Err(Error::GridTooCoarse { min: 16, got: 8 })
        ));
        assert!(matches!(
            Grid::circle(3),
            Err(Error::GridTooCoarse { min: 16, got: 3 })
        ));
    }

    #[test]
    fn gaussian_quadrature_matches_sqrt_pi() {
        // Frozen oracle: ∫_{-8}^{8} e^{-x²} dx = √π up to a tail below 1e-27.
        let g = Grid::line(401, 8.0).unwrap();
        let integral = g.quad(|x| Complex64::new((-x * x).exp(), 0.0));
        assert!((integral.re - std::f64::consts::PI.sqrt()).abs() < tol::QUAD);
        assert!(integral.im.abs() < tol::QUAD);
    }

    #[test]
    fn circle_quadrature_integrates_trig_modes_exactly() {
        let g = Grid::circle(64).unwrap();
        // ∫ e^{i m θ} dθ = 0 for m ≠ 0 (mod N), 2π for m = 0.
        for m in 1..5i32 {
            let v = g.quad(|th| Complex64::new(0.0, m as f64 * th).exp());
            assert!(v.norm() < 1e-12, "mode {m} should integrate to zero");
        }
        let v0 = g.quad(|_| Complex64::new(1.0, 0.0));
        assert_relative_eq!(v0.re, std::f64::consts::TAU, epsilon = 1e-12);
    }

    #[test]
    fn boundary_decay_detects_non_decaying_samples() {
        let g = Grid::line(64, 8.0).unwrap();
        let good = SampledFunction::from_fn(&g, |x| Complex64::new((-x * x).exp(), 0.0));
        assert!(good.boundary_decay_residual() < tol::BOUNDARY_DECAY);

        let bad = SampledFunction::from_fn(&g, |x| Complex64::new(1.0 + 0.0 * x, 0.0));
        assert!(bad.boundary_decay_residual() > 0.5);
    }

    mod property_tests {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            /// Quadrature is linear in the integrand to roundoff.
            #[test]
            fn prop_quad_is_linear(a in -3.0f64..3.0, b in -3.0f64..3.0,
                                   c1 in -1.5f64..1.5, c2 in -1.5f64..1.5) {
                let g = Grid::line(101, 8.0).unwrap();
                let f1 = |x: f64| Complex64::new((-(x - c1) * (x - c1)).exp(), 0.0);
                let f2 = |x: f64| Complex64::new(0.0, (-(x - c2) * (x - c2)).exp());
                let lhs = g.quad(|x| f1(x) * a + f2(x) * b);
                let rhs = g.quad(f1) * a + g.quad(f2) * b;
                prop_assert!((lhs - rhs).norm() < 1e-12);
            }

            /// Sampling then integrating equals direct quadrature.
            #[test]
            fn prop_sampled_quad_matches_closure_quad(c in -1.0f64..1.0) {
                let g = Grid::circle(64).unwrap();
                let f = move |th: f64| Complex64::new((th + c).cos(), (2.0 * th).sin());
                let direct = g.quad(f);
                let sampled = SampledFunction::from_fn(&g, f).quad();
                prop_assert!((direct - sampled).norm() < 1e-13);
            }
        }
    }
}
