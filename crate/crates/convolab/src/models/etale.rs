//! Action groupoid of a finite cyclic rotation group on the circle.
//!
//! The group `ℤ/n` acts on `S¹` by rotations through multiples of `2π/n`.
//! Arrows are pairs `(k, θ)` with source `θ` and target `θ + 2πk/n`;
//! composition adds rotation counts. Source fibers are finite (`n` points),
//! so the Haar system is counting measure and every fiber integral is an
//! exact finite sum — this model is the roundoff-exact end of the test
//! battery.
//!
//! Chart layout: lane 0 holds `θ` (a base coordinate; the fibers are
//! zero-dimensional). The rotation count lives in the discrete label.

use crate::error::{Error, Result};
use crate::numerics::Grid;

use super::{Algebroid, Arrow, BChart, Base, Chart, Groupoid};

const TAU: f64 = std::f64::consts::TAU;

/// Étale action groupoid `ℤ/n ⋉ S¹` over a uniform circle grid.
pub struct EtaleRotation {
    order: u32,
    grid: Grid,
    bases: Vec<Base>,
    base_w: Vec<f64>,
}

impl EtaleRotation {
    /// Build the action groupoid of `ℤ/order` rotations on the given circle
    /// grid.
    ///
    /// The order must divide the node count so that rotations map grid
    /// nodes to grid nodes; otherwise the discrete transforms downstream
    /// would silently alias.
    pub fn new(order: u32, grid: Grid) -> Result<Self> {
        if !grid.is_circle() {
            return Err(Error::IncompatibleGrid(
                "rotation groupoid requires a circle grid".into(),
            ));
        }
        if order == 0 {
            return Err(Error::IncompatibleGrid("rotation order must be ≥ 1".into()));
        }
        if grid.len() % order as usize != 0 {
            return Err(Error::IncompatibleGrid(format!(
                "rotation order {order} does not divide the {}-node circle grid",
                grid.len()
            )));
        }
        let bases: Vec<Base> = grid.nodes().iter().map(|&th| [th, 0.0]).collect();
        let base_w: Vec<f64> = (0..grid.len()).map(|i| grid.weight(i)).collect();
        Ok(Self {
            order,
            grid,
            bases,
            base_w,
        })
    }

    /// Rotation order `n`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// The circle grid.
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// Rotation angle of one generator, `2π/n`.
    pub fn step(&self) -> f64 {
        TAU / self.order as f64
    }

    /// Arrow with rotation count `k` (mod `n`) and source angle `theta`.
    pub fn rotation_arrow(&self, k: u32, theta: f64) -> Arrow {
        Arrow {
            c: [theta.rem_euclid(TAU), 0.0, 0.0, 0.0],
            disc: k % self.order,
        }
    }

    fn wrap(theta: f64) -> f64 {
        theta.rem_euclid(TAU)
    }
}

impl Groupoid for EtaleRotation {
    fn fiber_dim(&self) -> usize {
        0
    }

    fn base_dim(&self) -> usize {
        1
    }

    fn source(&self, g: Arrow) -> Base {
        [g.c[0], 0.0]
    }

    fn target(&self, g: Arrow) -> Base {
        [Self::wrap(g.c[0] + g.disc as f64 * self.step()), 0.0]
    }

    fn unit(&self, x: Base) -> Arrow {
        Arrow {
            c: [Self::wrap(x[0]), 0.0, 0.0, 0.0],
            disc: 0,
        }
    }

    fn inverse(&self, g: Arrow) -> Arrow {
        Arrow {
            c: [self.target(g)[0], 0.0, 0.0, 0.0],
            disc: (self.order - g.disc % self.order) % self.order,
        }
    }

    fn compose(&self, g: Arrow, h: Arrow) -> Arrow {
        Arrow {
            c: [h.c[0], 0.0, 0.0, 0.0],
            disc: (g.disc + h.disc) % self.order,
        }
    }

    fn divide(&self, g: Arrow, h: Arrow) -> Arrow {
        // (k, θ)·(l, θ)⁻¹ = (k − l, θ + 2πl/n); the extension uses the
        // second slot's coordinates, which is smooth in both arguments.
        Arrow {
            c: [
                Self::wrap(h.c[0] + h.disc as f64 * self.step()),
                0.0,
                0.0,
                0.0,
            ],
            disc: (g.disc + self.order - h.disc % self.order) % self.order,
        }
    }

    fn d_target(&self, _g: Arrow, v: Chart) -> BChart {
        [v[0], 0.0]
    }

    fn d_unit(&self, _x: Base, w: BChart) -> Chart {
        [w[0], 0.0, 0.0, 0.0]
    }

    fn d_inverse(&self, _g: Arrow, v: Chart) -> Chart {
        v
    }

    fn d_divide(&self, _g: Arrow, _h: Arrow, _v: Chart, w: Chart) -> Chart {
        w
    }

    fn base_nodes(&self) -> &[Base] {
        &self.bases
    }

    fn base_weights(&self) -> &[f64] {
        &self.base_w
    }

    fn base_dist(&self, a: Base, b: Base) -> f64 {
        let d = (a[0] - b[0]).rem_euclid(TAU);
        d.min(TAU - d)
    }

    fn for_each_fiber_point(&self, x: Base, f: &mut dyn FnMut(Arrow, f64)) {
        for k in 0..self.order {
            f(
                Arrow {
                    c: [Self::wrap(x[0]), 0.0, 0.0, 0.0],
                    disc: k,
                },
                1.0,
            );
        }
    }

    fn haar_weight_at(&self, _x: Base) -> f64 {
        1.0
    }

    fn project_to_source_fiber(&self, g: Arrow, x0: Base) -> Arrow {
        Arrow {
            c: [Self::wrap(x0[0]), 0.0, 0.0, 0.0],
            disc: g.disc,
        }
    }

    fn probe_arrows(&self) -> Vec<Arrow> {
        self.full_arrows()
    }

    fn full_arrows(&self) -> Vec<Arrow> {
        let mut out = Vec::with_capacity(self.order as usize * self.grid.len());
        for k in 0..self.order {
            for &th in self.grid.nodes() {
                out.push(Arrow {
                    c: [th, 0.0, 0.0, 0.0],
                    disc: k,
                });
            }
        }
        out
    }
}

impl Algebroid for EtaleRotation {
    fn alg_rank(&self) -> usize {
        0
    }

    fn alg_exp(&self, x: Base, _v: BChart) -> Arrow {
        self.unit(x)
    }

    fn alg_log(&self, g: Arrow) -> (Base, BChart) {
        debug_assert_eq!(g.disc, 0, "logarithm is only defined near the units");
        (self.source(g), [0.0, 0.0])
    }
}
