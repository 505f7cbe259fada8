//! The pair groupoid of a truncated line or square.
//!
//! Arrows are ordered pairs `(x, y)` of base points, read as "from `y` to
//! `x`"; composition is `(x, y)·(y, z) = (x, z)`. The source fiber over `y`
//! is a full copy of the base, coordinatized by the target coordinate, and
//! the Haar system is Lebesgue measure in that coordinate. The algebroid is
//! the tangent bundle of the base, with exponential `exp_y(v) = (y + v, y)`.
//!
//! Chart layout (base dimension `m`): lanes `0..m` hold the target block
//! (vertical), lanes `m..2m` the source block (base).

use crate::error::{Error, Result};
use crate::numerics::{Grid, GridKind};

use super::{Algebroid, Arrow, BChart, Base, Chart, Groupoid};

/// Pair groupoid over a uniform line grid (base dimension 1) or its square
/// (base dimension 2).
pub struct PairGroupoid {
    m: usize,
    grid: Grid,
    bases: Vec<Base>,
    base_w: Vec<f64>,
}

impl PairGroupoid {
    /// Build the pair groupoid of the given truncated-line grid.
    ///
    /// `base_dim` must be 1 or 2; the grid must be a truncated line (the
    /// square model reuses it per axis).
    pub fn new(base_dim: usize, grid: Grid) -> Result<Self> {
        if !(base_dim == 1 || base_dim == 2) {
            return Err(Error::IncompatibleGrid(format!(
                "pair groupoid supports base dimension 1 or 2, got {base_dim}"
            )));
        }
        if !matches!(grid.kind(), GridKind::Line { .. }) {
            return Err(Error::IncompatibleGrid(
                "pair groupoid requires a truncated-line grid".into(),
            ));
        }
        let (bases, base_w) = match base_dim {
            1 => {
                let bases: Vec<Base> = grid.nodes().iter().map(|&x| [x, 0.0]).collect();
                let base_w: Vec<f64> = (0..grid.len()).map(|i| grid.weight(i)).collect();
                (bases, base_w)
            }
            _ => {
                let mut bases = Vec::with_capacity(grid.len() * grid.len());
                let mut base_w = Vec::with_capacity(grid.len() * grid.len());
                for i in 0..grid.len() {
                    for j in 0..grid.len() {
                        bases.push([grid.node(i), grid.node(j)]);
                        base_w.push(grid.weight(i) * grid.weight(j));
                    }
                }
                (bases, base_w)
            }
        };
        Ok(Self {
            m: base_dim,
            grid,
            bases,
            base_w,
        })
    }

    /// The underlying line grid (per axis).
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// Base dimension (1 or 2).
    pub fn dim(&self) -> usize {
        self.m
    }

    /// Convenience constructor of an arrow from `y` to `x` (base dim 1).
    pub fn arrow(&self, x: f64, y: f64) -> Arrow {
        debug_assert_eq!(self.m, 1);
        Arrow::from_chart([x, y, 0.0, 0.0])
    }

    /// Convenience constructor of an arrow from `y` to `x` (base dim 2).
    pub fn arrow2(&self, x: [f64; 2], y: [f64; 2]) -> Arrow {
        debug_assert_eq!(self.m, 2);
        Arrow::from_chart([x[0], x[1], y[0], y[1]])
    }

    fn target_block(&self, g: Arrow) -> Base {
        if self.m == 1 {
            [g.c[0], 0.0]
        } else {
            [g.c[0], g.c[1]]
        }
    }

    fn source_block(&self, g: Arrow) -> Base {
        if self.m == 1 {
            [g.c[1], 0.0]
        } else {
            [g.c[2], g.c[3]]
        }
    }

    fn build(&self, x: Base, y: Base) -> Arrow {
        if self.m == 1 {
            Arrow::from_chart([x[0], y[0], 0.0, 0.0])
        } else {
            Arrow::from_chart([x[0], x[1], y[0], y[1]])
        }
    }

    fn stride_indices(&self, approx_count: usize) -> Vec<usize> {
        let n = self.grid.len();
        let stride = (n / approx_count).max(1);
        let mut idx: Vec<usize> = (0..n).step_by(stride).collect();
        if *idx.last().unwrap() != n - 1 {
            idx.push(n - 1);
        }
        idx
    }
}

impl Groupoid for PairGroupoid {
    fn fiber_dim(&self) -> usize {
        self.m
    }

    fn base_dim(&self) -> usize {
        self.m
    }

    fn source(&self, g: Arrow) -> Base {
        self.source_block(g)
    }

    fn target(&self, g: Arrow) -> Base {
        self.target_block(g)
    }

    fn unit(&self, x: Base) -> Arrow {
        self.build(x, x)
    }

    fn inverse(&self, g: Arrow) -> Arrow {
        self.build(self.source_block(g), self.target_block(g))
    }

    fn compose(&self, g: Arrow, h: Arrow) -> Arrow {
        self.build(self.target_block(g), self.source_block(h))
    }

    fn divide(&self, g: Arrow, h: Arrow) -> Arrow {
        // (x, y)·(z, y)⁻¹ = (x, z); the right side depends only on the
        // target block of `h`, which is the smooth extension off the
        // same-source locus.
        self.build(self.target_block(g), self.target_block(h))
    }

    fn d_target(&self, _g: Arrow, v: Chart) -> BChart {
        if self.m == 1 {
            [v[0], 0.0]
        } else {
            [v[0], v[1]]
        }
    }

    fn d_unit(&self, _x: Base, w: BChart) -> Chart {
        if self.m == 1 {
            [w[0], w[0], 0.0, 0.0]
        } else {
            [w[0], w[1], w[0], w[1]]
        }
    }

    fn d_inverse(&self, _g: Arrow, v: Chart) -> Chart {
        if self.m == 1 {
            [v[1], v[0], 0.0, 0.0]
        } else {
            [v[2], v[3], v[0], v[1]]
        }
    }

    fn d_divide(&self, _g: Arrow, _h: Arrow, v: Chart, w: Chart) -> Chart {
        if self.m == 1 {
            [v[0], w[0], 0.0, 0.0]
        } else {
            [v[0], v[1], w[0], w[1]]
        }
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
        match self.m {
            1 => {
                for i in 0..self.grid.len() {
                    f(
                        Arrow::from_chart([self.grid.node(i), x[0], 0.0, 0.0]),
                        self.grid.weight(i),
                    );
                }
            }
            _ => {
                for i in 0..self.grid.len() {
                    for j in 0..self.grid.len() {
                        f(
                            Arrow::from_chart([
                                self.grid.node(i),
                                self.grid.node(j),
                                x[0],
                                x[1],
                            ]),
                            self.grid.weight(i) * self.grid.weight(j),
                        );
                    }
                }
            }
        }
    }

    fn haar_weight_at(&self, _x: Base) -> f64 {
        1.0
    }

    fn project_to_source_fiber(&self, g: Arrow, x0: Base) -> Arrow {
        self.build(self.target_block(g), x0)
    }

    fn probe_arrows(&self) -> Vec<Arrow> {
        let idx = self.stride_indices(if self.m == 1 { 34 } else { 8 });
        let mut out = Vec::new();
        match self.m {
            1 => {
                for &i in &idx {
                    for &j in &idx {
                        out.push(Arrow::from_chart([
                            self.grid.node(i),
                            self.grid.node(j),
                            0.0,
                            0.0,
                        ]));
                    }
                }
            }
            _ => {
                for &i in &idx {
                    for &j in &idx {
                        for &k in &idx {
                            for &l in &idx {
                                out.push(Arrow::from_chart([
                                    self.grid.node(i),
                                    self.grid.node(j),
                                    self.grid.node(k),
                                    self.grid.node(l),
                                ]));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn full_arrows(&self) -> Vec<Arrow> {
        match self.m {
            1 => {
                let n = self.grid.len();
                let mut out = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        out.push(Arrow::from_chart([
                            self.grid.node(i),
                            self.grid.node(j),
                            0.0,
                            0.0,
                        ]));
                    }
                }
                out
            }
            // The square model's full arrow grid is quartic in the node
            // count; cap it with a stride fine enough for diagnostics.
            _ => {
                let idx = self.stride_indices(16);
                let mut out = Vec::new();
                for &i in &idx {
                    for &j in &idx {
                        for &k in &idx {
                            for &l in &idx {
                                out.push(Arrow::from_chart([
                                    self.grid.node(i),
                                    self.grid.node(j),
                                    self.grid.node(k),
                                    self.grid.node(l),
                                ]));
                            }
                        }
                    }
                }
                out
            }
        }
    }
}

impl Algebroid for PairGroupoid {
    fn alg_rank(&self) -> usize {
        self.m
    }

    fn alg_exp(&self, x: Base, v: BChart) -> Arrow {
        if self.m == 1 {
            self.build([x[0] + v[0], 0.0], x)
        } else {
            self.build([x[0] + v[0], x[1] + v[1]], x)
        }
    }

    fn alg_log(&self, g: Arrow) -> (Base, BChart) {
        let x = self.source_block(g);
        let t = self.target_block(g);
        (x, [t[0] - x[0], if self.m == 2 { t[1] - x[1] } else { 0.0 }])
    }
}

/// Fiber integral of a Gaussian, used as a smoke value in tests.
#[cfg(test)]
fn gaussian_fiber_mass(model: &PairGroupoid) -> f64 {
    super::fiber_integral(model, [0.0, 0.0], |h| {
        num_complex::Complex64::new((-h.c[0] * h.c[0]).exp(), 0.0)
    })
    .re
}
