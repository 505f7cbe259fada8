//! Differentiation of one-parameter families at the origin.

use num_complex::Complex64;

/// Derivative at `τ = 0` of a scalar family, by the five-point central
/// stencil (a central difference plus one Richardson level):
///
/// ```text
/// v'(0) ≈ [8(v(ε) − v(−ε)) − (v(2ε) − v(−2ε))] / (12 ε)
/// ```
///
/// Exact on polynomials of degree ≤ 4; truncation error `O(ε⁴ v⁽⁵⁾/30)`.
/// With the default step `ε = 1e-3` this resolves unit-scale families to
/// about `1e-13`.
///
/// # Example
///
/// ```
/// use convolab::numerics::diff_at_zero;
/// use num_complex::Complex64;
///
/// let d = diff_at_zero(|t| Complex64::new(t.sin(), 0.0), 1e-3);
/// assert!((d.re - 1.0).abs() < 1e-10);
/// ```
pub fn diff_at_zero(v: impl Fn(f64) -> Complex64, eps: f64) -> Complex64 {
    let a = v(eps) - v(-eps);
    let b = v(2.0 * eps) - v(-2.0 * eps);
    (a * 8.0 - b) / (12.0 * eps)
}

/// Componentwise [`diff_at_zero`] for families of real vectors.
pub fn diff_at_zero_vec<const D: usize>(v: impl Fn(f64) -> [f64; D], eps: f64) -> [f64; D] {
    let a1 = v(eps);
    let a2 = v(-eps);
    let b1 = v(2.0 * eps);
    let b2 = v(-2.0 * eps);
    let mut out = [0.0; D];
    for i in 0..D {
        out[i] = (8.0 * (a1[i] - a2[i]) - (b1[i] - b2[i])) / (12.0 * eps);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol;

    #[test]
    fn derivative_of_sine_at_zero_is_one() {
        // Frozen oracle: d/dτ sin τ |₀ = 1.
        let d = diff_at_zero(|t| Complex64::new(t.sin(), 0.0), tol::DIFF_EPS);
        assert!((d.re - 1.0).abs() < tol::DERIVATIVE);
        assert!(d.im.abs() < tol::DERIVATIVE);
    }

    #[test]
    fn derivative_of_cubic_at_zero_vanishes() {
        // Frozen oracle: d/dτ τ³ |₀ = 0, and the five-point stencil is exact
        // on cubics, so the residual is pure roundoff.
        let d = diff_at_zero(|t| Complex64::new(t * t * t, 0.0), tol::DIFF_EPS);
        assert!(d.norm() < 1e-12);
    }

    #[test]
    fn vector_variant_matches_scalar_components() {
        let d = diff_at_zero_vec(|t| [t.exp(), (2.0 * t).cos()], tol::DIFF_EPS);
        assert!((d[0] - 1.0).abs() < tol::DERIVATIVE);
        assert!(d[1].abs() < tol::DERIVATIVE);
    }

    mod property_tests {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(128))]

            /// The stencil is exact (to roundoff) on quartic polynomials.
            #[test]
            fn prop_exact_on_quartics(c0 in -2.0f64..2.0, c1 in -2.0f64..2.0,
                                      c2 in -2.0f64..2.0, c3 in -2.0f64..2.0,
                                      c4 in -2.0f64..2.0) {
                let d = diff_at_zero(
                    |t| Complex64::new(c0 + c1 * t + c2 * t * t + c3 * t.powi(3) + c4 * t.powi(4), 0.0),
                    1e-3,
                );
                prop_assert!((d.re - c1).abs() < 1e-9 * (1.0 + c1.abs()));
            }

            /// Differentiation is linear in the family.
            #[test]
            fn prop_linear_in_family(a in -3.0f64..3.0, b in -3.0f64..3.0) {
                let f = |t: f64| Complex64::new(t.sin(), t.exp());
                let g = |t: f64| Complex64::new((2.0 * t).cos(), t);
                let lhs = diff_at_zero(|t| f(t) * a + g(t) * b, 1e-3);
                let rhs = diff_at_zero(f, 1e-3) * a + diff_at_zero(g, 1e-3) * b;
                prop_assert!((lhs - rhs).norm() < 1e-9);
            }
        }
    }
}
