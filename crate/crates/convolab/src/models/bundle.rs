//! A vector bundle as a bundle of abelian groups.
//!
//! The trivial bundle `E = ℝᵐ × ℝⁿ ⇉ ℝᵐ` is a groupoid with source =
//! target = bundle projection and fiberwise addition as composition. Its
//! Haar system is a positive weight `μ_e(x)` times Lebesgue measure on each
//! fiber, so convolution becomes the classical weighted convolution of
//! functions of the fiber variable — the model on which the fiberwise
//! Fourier calculus is exercised, and the `t → 0` endpoint of the scaling
//! family of a pair groupoid (take `E` = tangent bundle, `μ ≡ 1`).
//!
//! Chart layout: lanes `0..n` hold the fiber vector (vertical), lanes
//! `n..n+m` the base point.

use crate::error::{Error, Result};
use crate::numerics::{Grid, GridKind};
use std::sync::Arc;

use super::{Algebroid, Arrow, BChart, Base, Chart, Groupoid};

/// Shared positive base weight.
pub type HaarWeight = Arc<dyn Fn(Base) -> f64 + Send + Sync>;

/// Trivial vector bundle groupoid with a weighted fiberwise Haar system.
pub struct BundleGroupoid {
    m: usize,
    nf: usize,
    base_grid: Grid,
    fiber_grid: Grid,
    weight: HaarWeight,
    bases: Vec<Base>,
    base_w: Vec<f64>,
}

impl BundleGroupoid {
    /// Build the bundle groupoid `ℝᵐ × ℝⁿ ⇉ ℝᵐ` over truncated-line grids.
    ///
    /// `base_dim` and `fiber_rank` must each be 1 or 2. The weight must be
    /// strictly positive at every base node; otherwise the Haar system is
    /// rejected.
    pub fn new(
        base_dim: usize,
        fiber_rank: usize,
        base_grid: Grid,
        fiber_grid: Grid,
        weight: HaarWeight,
    ) -> Result<Self> {
        if !(base_dim == 1 || base_dim == 2) || !(fiber_rank == 1 || fiber_rank == 2) {
            return Err(Error::IncompatibleGrid(format!(
                "bundle groupoid supports base/fiber dimensions 1 or 2, got {base_dim}/{fiber_rank}"
            )));
        }
        for (grid, name) in [(&base_grid, "base"), (&fiber_grid, "fiber")] {
            if !matches!(grid.kind(), GridKind::Line { .. }) {
                return Err(Error::IncompatibleGrid(format!(
                    "bundle groupoid requires truncated-line grids, {name} grid is periodic"
                )));
            }
        }
        let (bases, base_w) = match base_dim {
            1 => {
                let bases: Vec<Base> = base_grid.nodes().iter().map(|&x| [x, 0.0]).collect();
                let base_w: Vec<f64> = (0..base_grid.len()).map(|i| base_grid.weight(i)).collect();
                (bases, base_w)
            }
            _ => {
                let mut bases = Vec::new();
                let mut base_w = Vec::new();
                for i in 0..base_grid.len() {
                    for j in 0..base_grid.len() {
                        bases.push([base_grid.node(i), base_grid.node(j)]);
                        base_w.push(base_grid.weight(i) * base_grid.weight(j));
                    }
                }
                (bases, base_w)
            }
        };
        for &x in &bases {
            let w = weight(x);
            if !(w > 0.0) || !w.is_finite() {
                return Err(Error::InvalidHaar(format!(
                    "fiber weight must be positive, found {w} at base point ({}, {})",
                    x[0], x[1]
                )));
            }
        }
        Ok(Self {
            m: base_dim,
            nf: fiber_rank,
            base_grid,
            fiber_grid,
            weight,
            bases,
            base_w,
        })
    }

    /// Base grid (per axis).
    pub fn base_grid(&self) -> &Grid {
        &self.base_grid
    }

    /// Fiber grid (per axis).
    pub fn fiber_grid(&self) -> &Grid {
        &self.fiber_grid
    }

    /// Fiber rank `n`.
    pub fn fiber_rank(&self) -> usize {
        self.nf
    }

    /// The Haar weight at a base point.
    pub fn weight_at(&self, x: Base) -> f64 {
        (self.weight)(x)
    }

    /// Convenience constructor of an arrow (fiber vector `v` over `x`),
    /// for rank-1, base-dimension-1 bundles.
    pub fn arrow(&self, x: f64, v: f64) -> Arrow {
        debug_assert!(self.m == 1 && self.nf == 1);
        Arrow::from_chart([v, x, 0.0, 0.0])
    }

    fn fiber_block(&self, g: Arrow) -> [f64; 2] {
        [g.c[0], if self.nf == 2 { g.c[1] } else { 0.0 }]
    }

    fn base_block(&self, g: Arrow) -> Base {
        [
            g.c[self.nf],
            if self.m == 2 { g.c[self.nf + 1] } else { 0.0 },
        ]
    }

    fn build(&self, v: [f64; 2], x: Base) -> Arrow {
        let mut c = [0.0; 4];
        c[0] = v[0];
        if self.nf == 2 {
            c[1] = v[1];
        }
        c[self.nf] = x[0];
        if self.m == 2 {
            c[self.nf + 1] = x[1];
        }
        Arrow::from_chart(c)
    }
}

impl Groupoid for BundleGroupoid {
    fn fiber_dim(&self) -> usize {
        self.nf
    }

    fn base_dim(&self) -> usize {
        self.m
    }

    fn source(&self, g: Arrow) -> Base {
        self.base_block(g)
    }

    fn target(&self, g: Arrow) -> Base {
        self.base_block(g)
    }

    fn unit(&self, x: Base) -> Arrow {
        self.build([0.0, 0.0], x)
    }

    fn inverse(&self, g: Arrow) -> Arrow {
        let v = self.fiber_block(g);
        self.build([-v[0], -v[1]], self.base_block(g))
    }

    fn compose(&self, g: Arrow, h: Arrow) -> Arrow {
        let a = self.fiber_block(g);
        let b = self.fiber_block(h);
        self.build([a[0] + b[0], a[1] + b[1]], self.base_block(g))
    }

    fn divide(&self, g: Arrow, h: Arrow) -> Arrow {
        let a = self.fiber_block(g);
        let b = self.fiber_block(h);
        self.build([a[0] - b[0], a[1] - b[1]], self.base_block(g))
    }

    fn d_target(&self, _g: Arrow, v: Chart) -> BChart {
        [
            v[self.nf],
            if self.m == 2 { v[self.nf + 1] } else { 0.0 },
        ]
    }

    fn d_unit(&self, _x: Base, w: BChart) -> Chart {
        self.horizontal_lift(w)
    }

    fn d_inverse(&self, _g: Arrow, v: Chart) -> Chart {
        let mut out = v;
        for lane in out.iter_mut().take(self.nf) {
            *lane = -*lane;
        }
        out
    }

    fn d_divide(&self, _g: Arrow, _h: Arrow, v: Chart, w: Chart) -> Chart {
        let mut out = v;
        for i in 0..self.nf {
            out[i] = v[i] - w[i];
        }
        out
    }

    fn base_nodes(&self) -> &[Base] {
        &self.bases
    }

    fn base_weights(&self) -> &[f64] {
        &self.base_w
    }

    fn base_dist(&self, a: Base, b: Base) -> f64 {
        let d0 = a[0] - b[0];
        let d1 = if self.m == 2 { a[1] - b[1] } else { 0.0 };
        (d0 * d0 + d1 * d1).sqrt()
    }

    fn for_each_fiber_point(&self, x: Base, f: &mut dyn FnMut(Arrow, f64)) {
        let mu = (self.weight)(x);
        match self.nf {
            1 => {
                for i in 0..self.fiber_grid.len() {
                    f(
                        self.build([self.fiber_grid.node(i), 0.0], x),
                        mu * self.fiber_grid.weight(i),
                    );
                }
            }
            _ => {
                for i in 0..self.fiber_grid.len() {
                    for j in 0..self.fiber_grid.len() {
                        f(
                            self.build([self.fiber_grid.node(i), self.fiber_grid.node(j)], x),
                            mu * self.fiber_grid.weight(i) * self.fiber_grid.weight(j),
                        );
                    }
                }
            }
        }
    }

    fn haar_weight_at(&self, x: Base) -> f64 {
        (self.weight)(x)
    }

    fn project_to_source_fiber(&self, g: Arrow, x0: Base) -> Arrow {
        self.build(self.fiber_block(g), x0)
    }

    fn probe_arrows(&self) -> Vec<Arrow> {
        self.strided_arrows(34)
    }

    fn full_arrows(&self) -> Vec<Arrow> {
        if self.m == 1 && self.nf == 1 {
            let mut out = Vec::with_capacity(self.fiber_grid.len() * self.base_grid.len());
            for &v in self.fiber_grid.nodes() {
                for &x in self.base_grid.nodes() {
                    out.push(Arrow::from_chart([v, x, 0.0, 0.0]));
                }
            }
            out
        } else {
            self.strided_arrows(16)
        }
    }
}

impl BundleGroupoid {
    fn strided_arrows(&self, per_axis: usize) -> Vec<Arrow> {
        let stride_of = |g: &Grid| (g.len() / per_axis).max(1);
        let axis = |g: &Grid| -> Vec<f64> {
            let mut v: Vec<f64> = g.nodes().iter().copied().step_by(stride_of(g)).collect();
            if *v.last().unwrap() != g.node(g.len() - 1) {
                v.push(g.node(g.len() - 1));
            }
            v
        };
        let fib = axis(&self.fiber_grid);
        let bas = axis(&self.base_grid);
        let mut out = Vec::new();
        match (self.nf, self.m) {
            (1, 1) => {
                for &v in &fib {
                    for &x in &bas {
                        out.push(Arrow::from_chart([v, x, 0.0, 0.0]));
                    }
                }
            }
            (1, 2) => {
                for &v in &fib {
                    for &x0 in &bas {
                        for &x1 in &bas {
                            out.push(Arrow::from_chart([v, x0, x1, 0.0]));
                        }
                    }
                }
            }
            (2, 1) => {
                for &v0 in &fib {
                    for &v1 in &fib {
                        for &x in &bas {
                            out.push(Arrow::from_chart([v0, v1, x, 0.0]));
                        }
                    }
                }
            }
            _ => {
                for &v0 in &fib {
                    for &v1 in &fib {
                        for &x0 in &bas {
                            for &x1 in &bas {
                                out.push(Arrow::from_chart([v0, v1, x0, x1]));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl Algebroid for BundleGroupoid {
    fn alg_rank(&self) -> usize {
        self.nf
    }

    fn alg_exp(&self, x: Base, v: BChart) -> Arrow {
        self.build([v[0], v[1]], x)
    }

    fn alg_log(&self, g: Arrow) -> (Base, BChart) {
        (self.base_block(g), self.fiber_block(g))
    }
}
