//! Multilinear cochain calculus over the convolution algebra, and the
//! degree-wise inclusion of groupoid cochains.
//!
//! Two cochain species live here:
//!
//! * [`HochschildCochain`] — a `k`-linear map from densities to densities,
//!   with the differential [`hoch_diff`] and cup product [`cup`] of the
//!   convolution product;
//! * [`GroupoidCochain`] — a scalar function of composable arrow tuples,
//!   with the simplicial differential [`groupoid_diff`] and the pointwise
//!   cup product [`cup_groupoid`].
//!
//! The bridge is [`phi0`]: a groupoid cochain acts on densities by
//! integrating over all decompositions of an arrow (nerve quadrature),
//!
//! ```text
//! Φ₀(φ)(a₁, …, a_k)(g) = ∫_{g₁⋯g_k = g} φ(g₁, …, g_k) a₁(g₁) ⋯ a_k(g_k).
//! ```
//!
//! With the sign conventions below, `Φ₀` intertwines the two differentials
//! and the two cup products on the nose — on a fixed grid both routes
//! reduce to the same weighted sums, so the tests compare them at
//! roundoff-level tolerances rather than quadrature-level ones.

use std::sync::Arc;

use num_complex::Complex64;

use super::{convolve, Density};
use crate::error::{Error, Result};
use crate::models::{nerve_quadrature, Arrow, Model};

/// A `k`-linear map sending `k` densities to a density.
///
/// Arity 0 is a plain density (a constant of the calculus); arity 1 covers
/// operators like multiplication by a function of arrows; the differential
/// raises arity by one.
#[derive(Clone)]
pub struct HochschildCochain {
    arity: usize,
    eval: Arc<dyn Fn(&[Density]) -> Density + Send + Sync>,
}

impl HochschildCochain {
    /// Wrap an evaluation closure of the given arity.
    pub fn new(
        arity: usize,
        eval: impl Fn(&[Density]) -> Density + Send + Sync + 'static,
    ) -> Self {
        Self {
            arity,
            eval: Arc::new(eval),
        }
    }

    /// A degree-0 cochain: the constant density.
    pub fn from_density(d: &Density) -> Self {
        let d = d.clone();
        Self::new(0, move |_| d.clone())
    }

    /// The arity (number of density arguments).
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Apply to exactly `arity` densities. The output carries a memo layer
    /// because cochain values routinely sit inside further quadratures.
    pub fn apply(&self, args: &[Density]) -> Density {
        assert_eq!(
            args.len(),
            self.arity,
            "cochain of arity {} applied to {} densities",
            self.arity,
            args.len()
        );
        (self.eval)(args).cached()
    }
}

/// The Hochschild differential of the convolution product:
///
/// ```text
/// (δD)(a₁, …, a_{k+1}) = a₁ ∗ D(a₂, …, a_{k+1})
///                      + Σᵢ (−1)ⁱ D(a₁, …, aᵢ ∗ aᵢ₊₁, …, a_{k+1})
///                      + (−1)^{k+1} D(a₁, …, a_k) ∗ a_{k+1}.
/// ```
///
/// Applying it twice gives zero because the grid convolution is genuinely
/// associative (a weighted matrix product), not merely approximately so.
pub fn hoch_diff(model: &Model, d: &HochschildCochain) -> HochschildCochain {
    let k = d.arity();
    let m = model.clone();
    let d = d.clone();
    HochschildCochain::new(k + 1, move |args: &[Density]| {
        let mut acc = convolve(&m, &args[0], &d.apply(&args[1..]));
        for i in 1..=k {
            let mut inner: Vec<Density> = Vec::with_capacity(k);
            inner.extend_from_slice(&args[..i - 1]);
            inner.push(convolve(&m, &args[i - 1], &args[i]));
            inner.extend_from_slice(&args[i + 1..]);
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            acc = acc.add(&d.apply(&inner).scale(Complex64::new(sign, 0.0)));
        }
        let sign = if (k + 1) % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(&convolve(&m, &d.apply(&args[..k]), &args[k]).scale(Complex64::new(sign, 0.0)))
    })
}

/// Cup product of cochains: apply the factors to the leading and trailing
/// argument blocks and convolve the results.
pub fn cup(model: &Model, d: &HochschildCochain, e: &HochschildCochain) -> HochschildCochain {
    let (k, l) = (d.arity(), e.arity());
    let m = model.clone();
    let (d, e) = (d.clone(), e.clone());
    HochschildCochain::new(k + l, move |args: &[Density]| {
        convolve(&m, &d.apply(&args[..k]), &e.apply(&args[k..]))
    })
}

/// A scalar function of composable `k`-tuples of arrows (`k ≥ 1`).
#[derive(Clone)]
pub struct GroupoidCochain {
    arity: usize,
    eval: Arc<dyn Fn(&[Arrow]) -> Complex64 + Send + Sync>,
}

impl GroupoidCochain {
    /// Wrap an evaluation closure of the given arity (at least 1).
    pub fn new(
        arity: usize,
        eval: impl Fn(&[Arrow]) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        assert!(arity >= 1, "groupoid cochains here have arity ≥ 1");
        Self {
            arity,
            eval: Arc::new(eval),
        }
    }

    /// The tuple length this cochain consumes.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Evaluate on a composable tuple of exactly `arity` arrows.
    pub fn eval(&self, tuple: &[Arrow]) -> Complex64 {
        assert_eq!(
            tuple.len(),
            self.arity,
            "cochain of arity {} evaluated on a {}-tuple",
            self.arity,
            tuple.len()
        );
        (self.eval)(tuple)
    }
}

/// The simplicial differential on groupoid cochains:
///
/// ```text
/// (δφ)(g₁, …, g_{k+1}) = φ(g₂, …, g_{k+1})
///                      + Σᵢ (−1)ⁱ φ(g₁, …, gᵢ·gᵢ₊₁, …, g_{k+1})
///                      + (−1)^{k+1} φ(g₁, …, g_k).
/// ```
pub fn groupoid_diff(model: &Model, phi: &GroupoidCochain) -> GroupoidCochain {
    let k = phi.arity();
    let m = model.clone();
    let phi = phi.clone();
    GroupoidCochain::new(k + 1, move |tuple: &[Arrow]| {
        let mut acc = phi.eval(&tuple[1..]);
        for i in 1..=k {
            let mut inner: Vec<Arrow> = Vec::with_capacity(k);
            inner.extend_from_slice(&tuple[..i - 1]);
            inner.push(m.compose(tuple[i - 1], tuple[i]));
            inner.extend_from_slice(&tuple[i + 1..]);
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            acc += phi.eval(&inner) * sign;
        }
        let sign = if (k + 1) % 2 == 0 { 1.0 } else { -1.0 };
        acc + phi.eval(&tuple[..k]) * sign
    })
}

/// Pointwise cup product on groupoid cochains: evaluate the factors on the
/// leading and trailing tuple blocks and multiply.
pub fn cup_groupoid(phi: &GroupoidCochain, psi: &GroupoidCochain) -> GroupoidCochain {
    let (k, l) = (phi.arity(), psi.arity());
    let (phi, psi) = (phi.clone(), psi.clone());
    GroupoidCochain::new(k + l, move |tuple: &[Arrow]| {
        phi.eval(&tuple[..k]) * psi.eval(&tuple[k..])
    })
}

/// The degree-wise inclusion of groupoid cochains into the multilinear
/// calculus by nerve quadrature. Supported for arities 1 through 3 (the
/// range of [`nerve_quadrature`]).
pub fn phi0(model: &Model, phi: &GroupoidCochain) -> Result<HochschildCochain> {
    let k = phi.arity();
    if !(1..=3).contains(&k) {
        return Err(Error::ArityUnsupported(format!(
            "inclusion of groupoid cochains supports arity 1..=3, got {k}"
        )));
    }
    let m = model.clone();
    let phi = phi.clone();
    Ok(HochschildCochain::new(k, move |args: &[Density]| {
        let m2 = m.clone();
        let phi2 = phi.clone();
        let args: Vec<Density> = args.to_vec();
        Density::new(move |g| {
            nerve_quadrature(&*m2, k, g, &mut |gs| {
                let mut v = phi2.eval(gs);
                for (a, gi) in args.iter().zip(gs.iter()) {
                    v *= a.eval(*gi);
                }
                v
            })
            .expect("arity was validated at construction")
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{seeded_etale_density, seeded_pair_density, sup_diff_on};
    use crate::models::{random_composable_tuple, EtaleRotation, PairGroupoid};
    use crate::numerics::Grid;
    use crate::tol;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn pair_model() -> Model {
        Arc::new(PairGroupoid::new(1, Grid::default_line()).unwrap())
    }

    fn etale_model(order: u32) -> Model {
        Arc::new(EtaleRotation::new(order, Grid::default_circle()).unwrap())
    }

    fn core_probes(m: &Model) -> Vec<Arrow> {
        m.probe_arrows()
            .into_iter()
            .filter(|g| g.c[0].abs() <= 4.0 && g.c[1].abs() <= 4.0)
            .collect()
    }

    #[test]
    fn hoch_diff_squares_to_zero_on_degree_zero() {
        let m = etale_model(4);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let d = HochschildCochain::from_density(&seeded_etale_density(4, &mut rng));
        let ddd = hoch_diff(&m, &hoch_diff(&m, &d));
        let a = seeded_etale_density(4, &mut rng);
        let b = seeded_etale_density(4, &mut rng);
        let out = ddd.apply(&[a, b]);
        let probes: Vec<Arrow> = m.probe_arrows();
        let worst = probes.iter().map(|&g| out.eval(g).norm()).fold(0.0, f64::max);
        assert!(worst < tol::COMPLEX_SQUARE_ZERO, "worst residual {worst:.3e}");
    }

    #[test]
    fn hoch_diff_squares_to_zero_on_an_operator() {
        // D(a) = w·a + a ∗ d₀ with w a function of arrows: a generic
        // arity-1 cochain mixing multiplication and convolution.
        let m = pair_model();
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let d0 = seeded_pair_density(1, &mut rng);
        let m_in = m.clone();
        let d = HochschildCochain::new(1, move |args: &[Density]| {
            let a = args[0].clone();
            let weighted = Density::new({
                let a = a.clone();
                move |g: Arrow| a.eval(g) * Complex64::new((g.c[0] * 0.3).sin(), 0.1)
            });
            weighted.add(&convolve(&m_in, &a, &d0))
        });
        let ddd = hoch_diff(&m, &hoch_diff(&m, &d));
        let a = seeded_pair_density(1, &mut rng);
        let b = seeded_pair_density(1, &mut rng);
        let c = seeded_pair_density(1, &mut rng);
        let out = ddd.apply(&[a, b, c]);
        let probes = core_probes(&m);
        let worst = probes.iter().map(|&g| out.eval(g).norm()).fold(0.0, f64::max);
        assert!(worst < tol::COMPLEX_SQUARE_ZERO, "worst residual {worst:.3e}");
    }

    #[test]
    fn inclusion_intertwines_the_differentials() {
        // Φ₀(δφ) = δ(Φ₀ φ) for an arity-1 cochain, on both an étale and a
        // line model; the two routes are the same weighted sums regrouped.
        for (m, mk_density) in [
            (
                etale_model(4),
                Box::new(|rng: &mut ChaCha8Rng| seeded_etale_density(4, rng))
                    as Box<dyn Fn(&mut ChaCha8Rng) -> Density>,
            ),
            (
                pair_model(),
                Box::new(|rng: &mut ChaCha8Rng| seeded_pair_density(1, rng)),
            ),
        ] {
            let phi = GroupoidCochain::new(1, |gs: &[Arrow]| {
                Complex64::new(gs[0].c[0].sin(), 0.2 * gs[0].c[1])
            });
            let route_a = phi0(&m, &groupoid_diff(&m, &phi)).unwrap();
            let route_b = hoch_diff(&m, &phi0(&m, &phi).unwrap());
            let mut rng = ChaCha8Rng::seed_from_u64(23);
            let a = mk_density(&mut rng);
            let b = mk_density(&mut rng);
            let lhs = route_a.apply(&[a.clone(), b.clone()]);
            let rhs = route_b.apply(&[a, b]);
            let probes = core_probes(&m);
            let worst = sup_diff_on(&probes, &lhs, &rhs);
            assert!(worst < tol::QUAD, "worst residual {worst:.3e}");
        }
    }

    #[test]
    fn inclusion_intertwines_the_cup_products() {
        // Φ₀(φ ∪ ψ) = Φ₀(φ) ∪ Φ₀(ψ) at arity 1 + 1.
        let m = pair_model();
        let phi = GroupoidCochain::new(1, |gs: &[Arrow]| Complex64::new(gs[0].c[0].cos(), 0.0));
        let psi = GroupoidCochain::new(1, |gs: &[Arrow]| {
            Complex64::new(0.0, (gs[0].c[0] - gs[0].c[1]) * 0.5)
        });
        let route_a = phi0(&m, &cup_groupoid(&phi, &psi)).unwrap();
        let route_b = cup(&m, &phi0(&m, &phi).unwrap(), &phi0(&m, &psi).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let a = seeded_pair_density(1, &mut rng);
        let b = seeded_pair_density(1, &mut rng);
        let lhs = route_a.apply(&[a.clone(), b.clone()]);
        let rhs = route_b.apply(&[a, b]);
        let worst = sup_diff_on(&core_probes(&m), &lhs, &rhs);
        assert!(worst < tol::QUAD, "worst residual {worst:.3e}");
    }

    #[test]
    fn inclusion_rejects_arity_beyond_nerve_support() {
        let m = etale_model(4);
        let phi = GroupoidCochain::new(4, |_| Complex64::new(1.0, 0.0));
        assert!(matches!(phi0(&m, &phi), Err(Error::ArityUnsupported(_))));
    }

    #[test]
    fn groupoid_diff_squares_to_zero_on_composable_tuples() {
        let m = etale_model(8);
        let phi = GroupoidCochain::new(1, |gs: &[Arrow]| {
            Complex64::new((2.0 * gs[0].c[0]).sin(), gs[0].disc as f64 * 0.3)
        });
        let dd = groupoid_diff(&m, &groupoid_diff(&m, &phi));
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        let mut worst = 0.0_f64;
        for _ in 0..40 {
            let tuple = random_composable_tuple(&*m, 3, &mut rng);
            worst = worst.max(dd.eval(&tuple).norm());
        }
        assert!(worst < tol::ASSOC_CYCLIC, "worst residual {worst:.3e}");
    }

    #[test]
    fn single_slot_inclusion_matches_hand_computation() {
        // Arity 1: Φ₀(φ)(a) is pointwise multiplication by φ.
        let m = etale_model(4);
        let phi = GroupoidCochain::new(1, |gs: &[Arrow]| {
            Complex64::new(gs[0].c[0].cos(), gs[0].disc as f64)
        });
        let incl = phi0(&m, &phi).unwrap();
        let a = Density::new(|g: Arrow| Complex64::new(0.5, g.c[0]));
        let out = incl.apply(&[a.clone()]);
        for k in 0..4 {
            let g = Arrow {
                c: [0.3 * PI, 0.0, 0.0, 0.0],
                disc: k,
            };
            let expect = Complex64::new(g.c[0].cos(), k as f64) * a.eval(g);
            assert!((out.eval(g) - expect).norm() < 1e-14);
        }
    }

    mod property_tests {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(6))]

            /// δ∘δ = 0 for the simplicial differential, whatever smooth
            /// arity-1 cochain it starts from.
            #[test]
            fn simplicial_differential_squares_to_zero(
                seed in 0u64..1000,
                amp in -1.5..1.5_f64,
                freq in 0.5..2.0_f64,
            ) {
                let m = pair_model();
                let phi = GroupoidCochain::new(1, move |gs: &[Arrow]| {
                    Complex64::new(amp * (freq * gs[0].c[0]).sin(), gs[0].c[1] * 0.2)
                });
                let dd = groupoid_diff(&m, &groupoid_diff(&m, &phi));
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..5 {
                    let tuple = random_composable_tuple(&*m, 3, &mut rng);
                    prop_assert!(dd.eval(&tuple).norm() < tol::ASSOC_CYCLIC);
                }
            }
        }
    }
}
