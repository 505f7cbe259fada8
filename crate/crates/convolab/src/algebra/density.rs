//! Closure-backed densities on arrow spaces and their convolution product.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_complex::Complex64;

use crate::models::{fiber_integral, Arrow, Model};

/// Hashable key for an arrow: coordinate bit patterns plus the discrete
/// label. Two arrows compare equal as keys exactly when every `f64` lane
/// has identical bits, which is the right notion for memoizing a pure
/// evaluation.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct ArrowKey([u64; 4], u32);

impl ArrowKey {
    fn of(g: Arrow) -> Self {
        Self(
            [
                g.c[0].to_bits(),
                g.c[1].to_bits(),
                g.c[2].to_bits(),
                g.c[3].to_bits(),
            ],
            g.disc,
        )
    }
}

/// A smooth complex density on the arrow space of a model, represented by
/// an evaluation closure.
///
/// Densities are closed under the pointwise vector-space operations and
/// under [`convolve`]; derived densities (convolutions, cochain outputs)
/// carry a transparent memo layer because nested fiber quadratures
/// re-evaluate them at the same grid arrows many times. Evaluation is pure,
/// so memoization changes cost, never values.
///
/// # Example
///
/// ```
/// use convolab::algebra::Density;
/// use convolab::models::Arrow;
/// use num_complex::Complex64;
///
/// let a = Density::new(|g: Arrow| Complex64::new((-g.c[0] * g.c[0]).exp(), 0.0));
/// let twice = a.add(&a);
/// let g = Arrow::from_chart([0.5, 0.0, 0.0, 0.0]);
/// assert!((twice.eval(g) - 2.0 * a.eval(g)).norm() < 1e-15);
/// ```
#[derive(Clone)]
pub struct Density {
    eval: Arc<dyn Fn(Arrow) -> Complex64 + Send + Sync>,
}

impl Density {
    /// Wrap an evaluation closure.
    pub fn new(f: impl Fn(Arrow) -> Complex64 + Send + Sync + 'static) -> Self {
        Self { eval: Arc::new(f) }
    }

    /// Evaluate at an arrow.
    pub fn eval(&self, g: Arrow) -> Complex64 {
        (self.eval)(g)
    }

    /// The zero density.
    pub fn zero() -> Self {
        Self::new(|_| Complex64::new(0.0, 0.0))
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Density) -> Density {
        let (a, b) = (self.clone(), other.clone());
        Density::new(move |g| a.eval(g) + b.eval(g))
    }

    /// Pointwise difference.
    pub fn sub(&self, other: &Density) -> Density {
        let (a, b) = (self.clone(), other.clone());
        Density::new(move |g| a.eval(g) - b.eval(g))
    }

    /// Pointwise scalar multiple.
    pub fn scale(&self, s: Complex64) -> Density {
        let a = self.clone();
        Density::new(move |g| a.eval(g) * s)
    }

    /// Add a memo layer: evaluations are cached by the exact bit pattern of
    /// the arrow. Worth it whenever this density will sit inside another
    /// fiber quadrature.
    pub fn cached(&self) -> Density {
        let inner = self.clone();
        let memo: Mutex<HashMap<ArrowKey, Complex64>> = Mutex::new(HashMap::new());
        Density::new(move |g| {
            let key = ArrowKey::of(g);
            if let Some(v) = memo.lock().unwrap().get(&key) {
                return *v;
            }
            let v = inner.eval(g);
            memo.lock().unwrap().insert(key, v);
            v
        })
    }
}

/// Convolution along the Haar system:
///
/// ```text
/// (a ∗ b)(g) = ∫ a(g h⁻¹) b(h) dλ_{source(g)}(h).
/// ```
///
/// The result is evaluated lazily and memoized, so towers of convolutions
/// (associativity checks, Hochschild differentials) revisit each grid arrow
/// of an inner product once.
pub fn convolve(model: &Model, a: &Density, b: &Density) -> Density {
    let m = model.clone();
    let (a, b) = (a.clone(), b.clone());
    Density::new(move |g| {
        let x = m.source(g);
        fiber_integral(&*m, x, |h| a.eval(m.divide(g, h)) * b.eval(h))
    })
    .cached()
}

/// Sup of `|f|` over a set of arrows.
pub fn sup_on(arrows: &[Arrow], f: &Density) -> f64 {
    arrows.iter().map(|&g| f.eval(g).norm()).fold(0.0, f64::max)
}

/// Sup of `|f − g|` over a set of arrows.
pub fn sup_diff_on(arrows: &[Arrow], f: &Density, g: &Density) -> f64 {
    arrows
        .iter()
        .map(|&a| (f.eval(a) - g.eval(a)).norm())
        .fold(0.0, f64::max)
}
