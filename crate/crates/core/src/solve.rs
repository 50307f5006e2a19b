//! Scalar root finding on a sign-changing bracket.

/// Finds a zero of `f` in `[lo, hi]` given `f(lo) < 0 < f(hi)`.
///
/// Bisection shrinks the bracket to a relative width of `1e-3`, then Newton
/// steps take over; any step leaving the current bracket falls back to a
/// bisection step. `f` returns `(value, slope)`. Stops once `|f| <= f_tol`
/// or the bracket collapses to a few ulps.
pub(crate) fn bracketed_root<F>(f: F, mut lo: f64, mut hi: f64, f_tol: f64) -> f64
where
    F: Fn(f64) -> (f64, f64),
{
    debug_assert!(lo < hi);
    while hi - lo > 1e-3 * hi.abs().max(lo.abs()).max(f64::MIN_POSITIVE) {
        let mid = 0.5 * (lo + hi);
        let (v, _) = f(mid);
        if v == 0.0 {
            return mid;
        }
        if v < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let mut t = 0.5 * (lo + hi);
    for _ in 0..200 {
        let (v, slope) = f(t);
        if v.abs() <= f_tol || v == 0.0 {
            return t;
        }
        if v < 0.0 {
            lo = t;
        } else {
            hi = t;
        }
        if hi - lo <= 4.0 * f64::EPSILON * hi.abs().max(lo.abs()) {
            break;
        }
        let step = t - v / slope;
        t = if step.is_finite() && step > lo && step < hi {
            step
        } else {
            0.5 * (lo + hi)
        };
    }
    t
}
