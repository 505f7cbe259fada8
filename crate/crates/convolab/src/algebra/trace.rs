//! Scalar functionals on the convolution algebra: the integration trace,
//! contraction of functionals against cochains, and the characteristic
//! functionals built from groupoid cochains.
//!
//! The trace integrates a density over the unit embedding,
//!
//! ```text
//! τ(a) = ∫_M a(unit(x)) dx,
//! ```
//!
//! and satisfies `τ(a ∗ b) = τ(b ∗ a)` — on a grid this is an exact
//! index-swap of the double sum, so the tests see roundoff, not quadrature
//! error. Contracting `τ` against the inclusion of a groupoid cochain
//! gives the characteristic functional
//!
//! ```text
//! Ψ_τ(φ)(a₀, …, a_k) = τ(a₀ ∗ Φ₀(φ)(a₁, …, a_k)),
//! ```
//!
//! which is closed for the dual boundary and graded-cyclic whenever `φ` is
//! a cyclic cocycle ([`functional_boundary`], [`psi_tau`]).

use std::sync::Arc;

use num_complex::Complex64;

use super::{convolve, phi0, Density, GroupoidCochain, HochschildCochain};
use crate::error::Result;
use crate::models::{base_integral, Model};

/// A multilinear scalar functional of densities.
#[derive(Clone)]
pub struct CochainFunctional {
    args: usize,
    eval: Arc<dyn Fn(&[Density]) -> Complex64 + Send + Sync>,
}

impl CochainFunctional {
    /// Wrap an evaluation closure taking exactly `args` densities.
    pub fn new(
        args: usize,
        eval: impl Fn(&[Density]) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        assert!(args >= 1, "a functional takes at least one density");
        Self {
            args,
            eval: Arc::new(eval),
        }
    }

    /// Number of density arguments.
    pub fn args(&self) -> usize {
        self.args
    }

    /// Evaluate on exactly `args` densities.
    pub fn apply(&self, densities: &[Density]) -> Complex64 {
        assert_eq!(
            densities.len(),
            self.args,
            "functional of {} arguments applied to {}",
            self.args,
            densities.len()
        );
        (self.eval)(densities)
    }
}

/// The integration trace `τ(a) = ∫_M a(unit(x)) dx`.
pub fn trace_functional(model: &Model) -> CochainFunctional {
    let m = model.clone();
    CochainFunctional::new(1, move |args: &[Density]| {
        base_integral(&*m, |x| args[0].eval(m.unit(x)))
    })
}

/// Contract a functional against a cochain of arity `k`: the head argument
/// absorbs the cochain applied to the next `k` arguments,
///
/// ```text
/// (ι_D F)(a₀, …, a_{n+k−1}) = F(a₀ ∗ D(a₁, …, a_k), a_{k+1}, …).
/// ```
pub fn contract_functional(
    model: &Model,
    f: &CochainFunctional,
    d: &HochschildCochain,
) -> CochainFunctional {
    let k = d.arity();
    let m = model.clone();
    let f = f.clone();
    let d = d.clone();
    CochainFunctional::new(f.args() + k, move |args: &[Density]| {
        let head = convolve(&m, &args[0], &d.apply(&args[1..k + 1]));
        let mut rest: Vec<Density> = Vec::with_capacity(args.len() - k);
        rest.push(head);
        rest.extend_from_slice(&args[k + 1..]);
        f.apply(&rest)
    })
}

/// The dual Hochschild boundary on functionals (one more argument):
///
/// ```text
/// (bF)(a₀, …, a_n) = Σᵢ₌₀^{n−1} (−1)ⁱ F(a₀, …, aᵢ ∗ aᵢ₊₁, …, a_n)
///                  + (−1)ⁿ F(a_n ∗ a₀, a₁, …, a_{n−1}).
/// ```
pub fn functional_boundary(model: &Model, f: &CochainFunctional) -> CochainFunctional {
    let n = f.args(); // the new functional takes n + 1 arguments a₀..a_n
    let m = model.clone();
    let f = f.clone();
    CochainFunctional::new(n + 1, move |args: &[Density]| {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            let mut inner: Vec<Density> = Vec::with_capacity(n);
            inner.extend_from_slice(&args[..i]);
            inner.push(convolve(&m, &args[i], &args[i + 1]));
            inner.extend_from_slice(&args[i + 2..]);
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            acc += f.apply(&inner) * sign;
        }
        let mut wrap: Vec<Density> = Vec::with_capacity(n);
        wrap.push(convolve(&m, &args[n], &args[0]));
        wrap.extend_from_slice(&args[1..n]);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        acc + f.apply(&wrap) * sign
    })
}

/// The characteristic functional of a groupoid cochain:
/// `Ψ_τ(φ) = ι_{Φ₀(φ)} τ`. Fails for arities outside the nerve-quadrature
/// range `1..=3`.
pub fn psi_tau(model: &Model, phi: &GroupoidCochain) -> Result<CochainFunctional> {
    Ok(contract_functional(
        model,
        &trace_functional(model),
        &phi0(model, phi)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{seeded_etale_density, seeded_pair_density};
    use crate::models::{Arrow, EtaleRotation, PairGroupoid};
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

    /// Frozen closed form: τ(e^{−x²−y²}) = ∫ e^{−2x²} dx = √(π/2).
    #[test]
    fn trace_matches_gaussian_closed_form() {
        let m = pair_model();
        let a = Density::new(|g: Arrow| {
            Complex64::new((-g.c[0] * g.c[0] - g.c[1] * g.c[1]).exp(), 0.0)
        });
        let tau = trace_functional(&m);
        let got = tau.apply(&[a]);
        let expect = (PI / 2.0).sqrt();
        assert!(
            (got - Complex64::new(expect, 0.0)).norm() < tol::TRACE,
            "trace residual {:.3e}",
            (got - Complex64::new(expect, 0.0)).norm()
        );
    }

    /// On the étale model the trace integrates the identity slot only:
    /// τ(a) = ∫ a(0, θ) dθ, exact for trigonometric polynomials.
    #[test]
    fn etale_trace_sees_only_the_identity_slot() {
        let m = etale_model(4);
        let a = Density::new(|g: Arrow| {
            if g.disc == 0 {
                Complex64::new(1.5 + g.c[0].cos(), (3.0 * g.c[0]).sin())
            } else {
                Complex64::new(9.0, 9.0) // must not contribute
            }
        });
        let tau = trace_functional(&m);
        let got = tau.apply(&[a]);
        let expect = Complex64::new(1.5 * 2.0 * PI, 0.0);
        assert!((got - expect).norm() < tol::QUAD);
    }

    #[test]
    fn trace_is_symmetric_under_the_convolution_swap() {
        let m = pair_model();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let tau = trace_functional(&m);
        let mut worst = 0.0_f64;
        for _ in 0..3 {
            let a = seeded_pair_density(1, &mut rng);
            let b = seeded_pair_density(1, &mut rng);
            let lhs = tau.apply(&[convolve(&m, &a, &b)]);
            let rhs = tau.apply(&[convolve(&m, &b, &a)]);
            worst = worst.max((lhs - rhs).norm());
        }
        assert!(worst < tol::TRACE, "worst residual {worst:.3e}");

        let me = etale_model(4);
        let tau_e = trace_functional(&me);
        let a = seeded_etale_density(4, &mut rng);
        let b = seeded_etale_density(4, &mut rng);
        let lhs = tau_e.apply(&[convolve(&me, &a, &b)]);
        let rhs = tau_e.apply(&[convolve(&me, &b, &a)]);
        assert!((lhs - rhs).norm() < tol::ASSOC_CYCLIC);
    }

    /// For a cyclic cocycle φ = f∘target − f∘source, the characteristic
    /// functional is closed (dual boundary ≈ 0) and graded-cyclic
    /// (Ψ(a₀,a₁) = −Ψ(a₁,a₀)).
    #[test]
    fn characteristic_functional_of_a_cyclic_cocycle_is_closed_and_cyclic() {
        let m = pair_model();
        let f = |x: f64| (0.8 * x).sin() * (-0.3 * x * x).exp();
        let phi = GroupoidCochain::new(1, move |gs: &[Arrow]| {
            // target is the first chart lane, source the second
            Complex64::new(f(gs[0].c[0]) - f(gs[0].c[1]), 0.0)
        });
        let psi = psi_tau(&m, &phi).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let a0 = seeded_pair_density(1, &mut rng);
        let a1 = seeded_pair_density(1, &mut rng);
        let a2 = seeded_pair_density(1, &mut rng);

        let cyc = (psi.apply(&[a0.clone(), a1.clone()]) + psi.apply(&[a1.clone(), a0.clone()]))
            .norm();
        assert!(cyc < tol::CHARACTERISTIC, "cyclicity residual {cyc:.3e}");

        let b_psi = functional_boundary(&m, &psi);
        let closed = b_psi.apply(&[a0, a1, a2]).norm();
        assert!(closed < tol::CHARACTERISTIC, "closedness residual {closed:.3e}");
    }

    mod property_tests {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(6))]

            /// The trace is linear.
            #[test]
            fn trace_is_linear(s_re in -2.0..2.0_f64, s_im in -2.0..2.0_f64, seed in 0u64..500) {
                let m = pair_model();
                let tau = trace_functional(&m);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let a = seeded_pair_density(1, &mut rng);
                let b = seeded_pair_density(1, &mut rng);
                let s = Complex64::new(s_re, s_im);
                let lhs = tau.apply(&[a.scale(s).add(&b)]);
                let rhs = s * tau.apply(&[a]) + tau.apply(&[b]);
                prop_assert!((lhs - rhs).norm() < 1e-10);
            }
        }
    }
}
