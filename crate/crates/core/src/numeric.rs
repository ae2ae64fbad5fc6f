//! Small numeric helpers shared by the residual computations.

/// Absolute floor applied to every residual denominator.
pub const RESIDUAL_FLOOR: f64 = 1e-15;

/// `|diff|` relative to `scale`, with the denominator floored at [`RESIDUAL_FLOOR`].
#[inline]
pub fn relative(diff: f64, scale: f64) -> f64 {
    diff.abs() / scale.abs().max(RESIDUAL_FLOOR)
}

/// Relative residual of `lhs = rhs`, measured against the largest magnitude among `terms`.
pub fn identity_residual(lhs: f64, rhs: f64, terms: &[f64]) -> f64 {
    let scale = terms
        .iter()
        .fold(lhs.abs().max(rhs.abs()), |m, t| m.max(t.abs()));
    relative(lhs - rhs, scale)
}

/// Largest element, treating NaN as infinitely bad.
pub fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values
        .into_iter()
        .fold(0.0_f64, |m, v| if v.is_nan() { f64::INFINITY } else { m.max(v) })
}

/// `1 - cos(x)` without cancellation for small `x`.
#[inline]
pub fn one_minus_cos(x: f64) -> f64 {
    let s = (0.5 * x).sin();
    2.0 * s * s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_uses_largest_term() {
        assert_eq!(identity_residual(1.0, 1.0, &[]), 0.0);
        let r = identity_residual(10.0, 10.5, &[100.0]);
        assert!((r - 0.005).abs() < 1e-15);
    }

    #[test]
    fn floor_prevents_division_by_zero() {
        assert_eq!(relative(0.0, 0.0), 0.0);
        assert!(relative(1e-20, 0.0) < 1e-4);
    }

    #[test]
    fn max_of_flags_nan() {
        assert_eq!(max_of([1.0, 3.0, 2.0]), 3.0);
        assert!(max_of([1.0, f64::NAN]).is_infinite());
    }

    #[test]
    fn one_minus_cos_small_angle() {
        let x: f64 = 1e-9;
        assert!((one_minus_cos(x) - 0.5 * x * x).abs() < 1e-33);
    }
}
