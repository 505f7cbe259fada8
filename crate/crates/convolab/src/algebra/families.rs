//! Seeded families of well-behaved test densities.
//!
//! Every stochastic check in the battery draws its operands from these
//! families with an explicit [`rand_chacha::ChaCha8Rng`] seed, so runs are
//! reproducible bit-for-bit. The families are chosen to keep the numerics
//! honest:
//!
//! * on line models, anisotropic complex Gaussians with decay rates in
//!   `[0.8, 1.5]` and centers within `[-1.5, 1.5]` — at the default grid
//!   half-width 8 the boundary values are below `1e-14`, so trapezoid
//!   quadrature is spectrally accurate;
//! * on the circle, trigonometric polynomials of degree ≤ 6 with
//!   coefficients damped like `1/(1 + m²)` — integrated exactly by the
//!   uniform rule;
//! * a mild oscillation `e^{i k·(…)}` with `|k| ≤ 2` keeps operands
//!   genuinely complex without raising bandwidth.

use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;

use super::Density;
use crate::models::Arrow;

/// A seeded Gaussian density on the pair model: per-coordinate decay in
/// the chart lanes `(x, y) = (c[0], c[1])` (and, for the square model,
/// `(c[2], c[3])`), complex amplitude and mild oscillation.
pub fn seeded_pair_density(dim: usize, rng: &mut impl Rng) -> Density {
    assert!(dim == 1 || dim == 2, "pair densities exist for dim 1 or 2");
    let lanes = 2 * dim;
    let mut alpha = [0.0_f64; 4];
    let mut center = [0.0_f64; 4];
    for lane in 0..lanes {
        alpha[lane] = rng.gen_range(0.8..1.5);
        center[lane] = rng.gen_range(-1.5..1.5);
    }
    let amp = Complex64::from_polar(
        rng.gen_range(0.5..2.0),
        rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
    );
    let osc = rng.gen_range(-2.0..2.0_f64);
    Density::new(move |g: Arrow| {
        let mut expo = 0.0;
        for lane in 0..lanes {
            let d = g.c[lane] - center[lane];
            expo -= alpha[lane] * d * d;
        }
        amp * Complex64::new(0.0, osc * (g.c[0] - g.c[1])).exp() * expo.exp()
    })
}

/// A seeded trigonometric polynomial on the circle, degree ≤ 6, with
/// `1/(1 + m²)`-damped complex coefficients. Returned as a closure
/// `θ ↦ value` for reuse by both the étale model (per discrete slot) and
/// base-function constructions.
pub fn seeded_circle_function(rng: &mut impl Rng) -> Arc<dyn Fn(f64) -> Complex64 + Send + Sync> {
    let mut coeff = [[Complex64::new(0.0, 0.0); 2]; 7];
    for (m, pair) in coeff.iter_mut().enumerate() {
        let damp = 1.0 / (1.0 + (m * m) as f64);
        for slot in pair.iter_mut() {
            *slot = Complex64::new(
                rng.gen_range(-1.0..1.0) * damp,
                rng.gen_range(-1.0..1.0) * damp,
            );
        }
    }
    Arc::new(move |theta: f64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, pair) in coeff.iter().enumerate() {
            let phase = m as f64 * theta;
            acc += pair[0] * Complex64::new(0.0, phase).exp()
                + pair[1] * Complex64::new(0.0, -phase).exp();
        }
        acc
    })
}

/// A seeded density on the étale model of the given order: an independent
/// circle function on every discrete slot.
pub fn seeded_etale_density(order: u32, rng: &mut impl Rng) -> Density {
    let per_slot: Vec<_> = (0..order).map(|_| seeded_circle_function(rng)).collect();
    Density::new(move |g: Arrow| per_slot[g.disc as usize](g.c[0]))
}

/// A seeded Gaussian density on the bundle model: decay in the fiber lane
/// `v = c[0]` and the base lane `x = c[1]`.
pub fn seeded_bundle_density(rng: &mut impl Rng) -> Density {
    let av = rng.gen_range(0.8..1.5);
    let ax = rng.gen_range(0.8..1.5);
    let cv = rng.gen_range(-1.5..1.5);
    let cx = rng.gen_range(-1.5..1.5);
    let amp = Complex64::from_polar(
        rng.gen_range(0.5..2.0),
        rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
    );
    let osc = rng.gen_range(-2.0..2.0_f64);
    Density::new(move |g: Arrow| {
        let (v, x) = (g.c[0] - cv, g.c[1] - cx);
        amp * Complex64::new(0.0, osc * g.c[0]).exp() * (-av * v * v - ax * x * x).exp()
    })
}
