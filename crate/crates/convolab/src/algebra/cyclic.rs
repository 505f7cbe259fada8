//! Cyclicity diagnostic for groupoid cochains.
//!
//! A `k`-cochain is *cyclic* when rotating the tuple through the inverse of
//! its total product reproduces the value up to the parity sign:
//!
//! ```text
//! φ(g₁, …, g_k) = (−1)^k φ((g₁⋯g_k)⁻¹, g₁, …, g_{k−1}).
//! ```
//!
//! [`cyclic_residual`] measures the worst violation over a batch of
//! composable tuples. Calibration points: `φ ≡ 1` at arity 1 has residual
//! exactly 2 (the rotation preserves it but the sign flips), while
//! `f∘target − f∘source` is cyclic on the nose.

use super::GroupoidCochain;
use crate::models::{Arrow, Model};

/// Worst cyclicity violation of `phi` over the given composable tuples.
pub fn cyclic_residual(model: &Model, phi: &GroupoidCochain, tuples: &[Vec<Arrow>]) -> f64 {
    let k = phi.arity();
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let mut worst = 0.0_f64;
    for tuple in tuples {
        assert_eq!(tuple.len(), k, "tuple length must match the cochain arity");
        let mut prod = tuple[0];
        for g in &tuple[1..] {
            prod = model.compose(prod, *g);
        }
        let mut rotated = Vec::with_capacity(k);
        rotated.push(model.inverse(prod));
        rotated.extend_from_slice(&tuple[..k - 1]);
        let r = (phi.eval(tuple) - phi.eval(&rotated) * sign).norm();
        worst = worst.max(r);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{random_composable_tuple, EtaleRotation, PairGroupoid};
    use crate::numerics::Grid;
    use crate::tol;
    use num_complex::Complex64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn tuples(model: &Model, k: usize, count: usize, seed: u64) -> Vec<Vec<Arrow>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| random_composable_tuple(&**model, k, &mut rng))
            .collect()
    }

    #[test]
    fn constant_one_at_arity_one_has_residual_two() {
        let m: Model = Arc::new(EtaleRotation::new(4, Grid::default_circle()).unwrap());
        let phi = GroupoidCochain::new(1, |_: &[Arrow]| Complex64::new(1.0, 0.0));
        let r = cyclic_residual(&m, &phi, &tuples(&m, 1, 25, 51));
        assert!((r - 2.0).abs() < tol::CYCLIC, "residual {r}");
    }

    #[test]
    fn coboundary_of_a_base_function_is_cyclic() {
        let m: Model = Arc::new(PairGroupoid::new(1, Grid::default_line()).unwrap());
        let f = |x: f64| (0.6 * x).cos() + 0.2 * x;
        let phi = GroupoidCochain::new(1, move |gs: &[Arrow]| {
            Complex64::new(f(gs[0].c[0]) - f(gs[0].c[1]), 0.0)
        });
        let r = cyclic_residual(&m, &phi, &tuples(&m, 1, 25, 52));
        assert!(r < tol::CYCLIC, "residual {r:.3e}");
    }

    #[test]
    fn constants_at_arity_two_are_cyclic() {
        let m: Model = Arc::new(EtaleRotation::new(8, Grid::default_circle()).unwrap());
        let phi = GroupoidCochain::new(2, |_: &[Arrow]| Complex64::new(0.7, -0.4));
        let r = cyclic_residual(&m, &phi, &tuples(&m, 2, 25, 53));
        assert!(r < tol::CYCLIC, "residual {r:.3e}");
    }
}
