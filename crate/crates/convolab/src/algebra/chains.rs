//! Hochschild-style chains (sums of elementary tensors of densities), the
//! boundary operator, and contraction against multilinear cochains.
//!
//! A degree-`n` [`Chain`] is a finite sum `Σ λ · a₀ ⊗ a₁ ⊗ ⋯ ⊗ a_n`. The
//! boundary multiplies adjacent factors (with the cyclic wrap term), and a
//! cochain `D` of arity `k` contracts by absorbing the first `k` tensor
//! factors after the head:
//!
//! ```text
//! ι_D (a₀ ⊗ ⋯ ⊗ a_n) = (a₀ ∗ D(a₁, …, a_k)) ⊗ a_{k+1} ⊗ ⋯ ⊗ a_n.
//! ```
//!
//! The two structural identities — checked by the tests at roundoff level,
//! since grid convolution is associative as a discrete product —
//!
//! ```text
//! ι_{δD} = ι_D ∘ b + (−1)^{k+1} b ∘ ι_D,      ι_D ∘ ι_E = ι_{E ∪ D},
//! ```
//!
//! are what make contraction against a cocycle descend to homology.

use num_complex::Complex64;

use super::{convolve, Density, HochschildCochain};
use crate::models::{Arrow, Model};

/// A finite sum of scaled elementary tensors `a₀ ⊗ ⋯ ⊗ a_n` of densities.
#[derive(Clone)]
pub struct Chain {
    degree: usize,
    terms: Vec<(Complex64, Vec<Density>)>,
}

impl Chain {
    /// The elementary tensor with coefficient 1.
    pub fn elementary(factors: Vec<Density>) -> Self {
        assert!(!factors.is_empty(), "an elementary tensor needs ≥ 1 factor");
        Self {
            degree: factors.len() - 1,
            terms: vec![(Complex64::new(1.0, 0.0), factors)],
        }
    }

    /// The zero chain of a given degree.
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: Vec::new(),
        }
    }

    /// Tensor degree `n` (one less than the slot count).
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The scaled elementary tensors making up this chain.
    pub fn terms(&self) -> &[(Complex64, Vec<Density>)] {
        &self.terms
    }

    fn push(&mut self, coef: Complex64, factors: Vec<Density>) {
        assert_eq!(factors.len(), self.degree + 1, "slot count mismatch");
        if coef.norm() != 0.0 {
            self.terms.push((coef, factors));
        }
    }

    /// Sum of two chains of the same degree.
    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!(self.degree, other.degree, "degree mismatch in chain sum");
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, s: Complex64) -> Chain {
        let mut out = self.clone();
        for term in &mut out.terms {
            term.0 *= s;
        }
        out
    }

    /// Pair the chain with a tuple of point evaluations, one arrow per
    /// tensor slot: `Σ λ ∏ᵢ aᵢ(gᵢ)`. Point evaluations separate sums of
    /// products, so agreement of probes over a spread of tuples is a sound
    /// equality test for the identities in this module.
    pub fn probe(&self, arrows: &[Arrow]) -> Complex64 {
        assert_eq!(arrows.len(), self.degree + 1, "one probe arrow per slot");
        let mut acc = Complex64::new(0.0, 0.0);
        for (coef, factors) in &self.terms {
            let mut v = *coef;
            for (a, g) in factors.iter().zip(arrows.iter()) {
                v *= a.eval(*g);
            }
            acc += v;
        }
        acc
    }
}

/// The Hochschild boundary
///
/// ```text
/// b(a₀ ⊗ ⋯ ⊗ a_n) = Σᵢ₌₀^{n−1} (−1)ⁱ a₀ ⊗ ⋯ ⊗ aᵢ ∗ aᵢ₊₁ ⊗ ⋯ ⊗ a_n
///                 + (−1)ⁿ (a_n ∗ a₀) ⊗ a₁ ⊗ ⋯ ⊗ a_{n−1}.
/// ```
pub fn chain_boundary(model: &Model, ch: &Chain) -> Chain {
    let n = ch.degree();
    assert!(n >= 1, "the boundary lowers degree; degree-0 chains are cycles");
    let mut out = Chain::zero(n - 1);
    for (coef, fs) in ch.terms() {
        for i in 0..n {
            let mut slots: Vec<Density> = Vec::with_capacity(n);
            slots.extend_from_slice(&fs[..i]);
            slots.push(convolve(model, &fs[i], &fs[i + 1]));
            slots.extend_from_slice(&fs[i + 2..]);
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            out.push(*coef * sign, slots);
        }
        let mut wrap: Vec<Density> = Vec::with_capacity(n);
        wrap.push(convolve(model, &fs[n], &fs[0]));
        wrap.extend_from_slice(&fs[1..n]);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        out.push(*coef * sign, wrap);
    }
    out
}

/// Contraction of a chain against a cochain of arity `k ≤ degree`:
/// the head absorbs `D` applied to the next `k` factors.
pub fn contract_chain(model: &Model, d: &HochschildCochain, ch: &Chain) -> Chain {
    let k = d.arity();
    let n = ch.degree();
    assert!(n >= k, "contraction needs at least arity-many tensor factors");
    let mut out = Chain::zero(n - k);
    for (coef, fs) in ch.terms() {
        let head = convolve(model, &fs[0], &d.apply(&fs[1..k + 1]));
        let mut slots = vec![head];
        slots.extend_from_slice(&fs[k + 1..]);
        out.push(*coef, slots);
    }
    out
}
