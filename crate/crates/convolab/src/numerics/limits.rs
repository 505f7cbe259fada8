//! Extrapolation of scale-family limits `v(t) → V` as `t → 0`.

use num_complex::Complex64;

/// Result of a power-law limit fit.
#[derive(Clone, Copy, Debug)]
pub struct LimitFit {
    /// Extrapolated limit value.
    pub value: Complex64,
    /// Fitted convergence order `p` in `v(t) ≈ V + C tᵖ`.
    ///
    /// `+∞` when the sequence is constant to roundoff; `NaN` when no
    /// convergence could be established.
    pub order: f64,
    /// Whether the sequence showed usable monotone decay (or was constant).
    pub converged: bool,
}

/// Fit `v(t) ≈ V + C·tᵖ` on a decreasing scale sequence and extrapolate.
///
/// The successive differences `d_k = v_{k+1} − v_k` of a clean power-law
/// sequence decay geometrically; the order is read off the last difference
/// ratio, `p = ln(|d_{k-1}|/|d_k|) / ln(t_{k-1}/t_k)`, and one Richardson
/// step `V ≈ v_last + d_last / (rᵖ − 1)` removes the leading error term.
///
/// Behavior on degenerate inputs:
///
/// * constant sequence (differences at roundoff level): `value` is the last
///   entry, `order = +∞`, `converged = true`;
/// * non-monotone differences (any `|d_{k+1}| ≥ |d_k|` above roundoff):
///   `converged = false`, `order = NaN`, `value` is the last entry,
///   reported as "no convergence" by callers.
///
/// # Example
///
/// ```
/// use convolab::numerics::limit_estimate;
/// use num_complex::Complex64;
///
/// let ts = [0.25, 0.125, 0.0625, 0.03125];
/// let vs: Vec<_> = ts.iter().map(|t| Complex64::new(2.0 + 3.0 * t * t, 0.0)).collect();
/// let fit = limit_estimate(&ts, &vs);
/// assert!(fit.converged);
/// assert!((fit.value.re - 2.0).abs() < 1e-10);
/// assert!((fit.order - 2.0).abs() < 0.1);
/// ```
pub fn limit_estimate(scales: &[f64], values: &[Complex64]) -> LimitFit {
    assert_eq!(
        scales.len(),
        values.len(),
        "scale/value length mismatch in limit fit"
    );
    assert!(scales.len() >= 2, "need at least two scales to fit a limit");
    for w in scales.windows(2) {
        assert!(
            w[1] < w[0] && w[1] > 0.0,
            "scales must be positive and strictly decreasing"
        );
    }

    let last = values[values.len() - 1];
    let magnitude = values.iter().map(|v| v.norm()).fold(0.0, f64::max).max(1.0);
    let noise_floor = 1e-13 * magnitude;

    let diffs: Vec<Complex64> = values.windows(2).map(|w| w[1] - w[0]).collect();

    // Constant to roundoff: the limit is the common value, order unbounded.
    if diffs.iter().all(|d| d.norm() <= noise_floor) {
        return LimitFit {
            value: last,
            order: f64::INFINITY,
            converged: true,
        };
    }

    // Require genuine decay of successive differences (above the noise
    // floor, each difference must shrink).
    for w in diffs.windows(2) {
        let (a, b) = (w[0].norm(), w[1].norm());
        if b > noise_floor && b >= a {
            return LimitFit {
                value: last,
                order: f64::NAN,
                converged: false,
            };
        }
    }

    // Read the order off the last difference pair that is above the noise
    // floor; earlier pairs are less asymptotic.
    let mut order = f64::NAN;
    let mut idx = None;
    for k in (1..diffs.len()).rev() {
        let (a, b) = (diffs[k - 1].norm(), diffs[k].norm());
        if a > noise_floor && b > noise_floor {
            let r = scales[k - 1] / scales[k];
            order = (a / b).ln() / r.ln();
            idx = Some(k);
            break;
        }
    }

    let Some(k) = idx else {
        // Differences fell under the floor before a ratio formed; the last
        // value is already converged to roundoff.
        return LimitFit {
            value: last,
            order: f64::INFINITY,
            converged: true,
        };
    };

    // One Richardson step using the fitted order.
    let r = scales[k - 1] / scales[k];
    let rho = r.powf(order);
    let d_last = diffs[k];
    let value = if rho.is_finite() && rho > 1.0 + 1e-9 {
        last + d_last / (rho - 1.0)
    } else {
        last
    };

    LimitFit {
        value,
        order,
        converged: order.is_finite() && order > 0.0,
    }
}
