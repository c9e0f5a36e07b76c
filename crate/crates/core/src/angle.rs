//! Angle wrapping and circular statistics.

use std::f64::consts::{PI, TAU};

/// Wrap to `[0, 2*pi)`.
pub fn wrap_to_2pi(theta: f64) -> f64 {
    theta.rem_euclid(TAU)
}

/// Wrap to `(-pi, pi]`.
pub fn wrap_to_pi(theta: f64) -> f64 {
    let w = theta.rem_euclid(TAU);
    if w > PI {
        w - TAU
    } else {
        w
    }
}

/// Circular mean and circular standard deviation of a set of angles.
///
/// Returns `None` for an empty slice or when the resultant vector has zero
/// length (uniformly spread angles have no meaningful mean).
pub fn circular_mean_std(angles: &[f64]) -> Option<(f64, f64)> {
    if angles.is_empty() {
        return None;
    }
    let (mut s, mut c) = (0.0, 0.0);
    for &a in angles {
        s += a.sin();
        c += a.cos();
    }
    let n = angles.len() as f64;
    let r = (s * s + c * c).sqrt() / n;
    if r <= f64::EPSILON {
        return None;
    }
    let mean = s.atan2(c);
    // R -> 1 gives std -> 0; clamp for roundoff above 1.
    let std = (-2.0 * r.min(1.0).ln()).max(0.0).sqrt();
    Some((mean, std))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn wrap_ranges() {
        assert_abs_diff_eq!(wrap_to_2pi(-0.1), TAU - 0.1, epsilon = 1e-12);
        assert_abs_diff_eq!(wrap_to_pi(PI + 0.1), -PI + 0.1, epsilon = 1e-12);
        assert_abs_diff_eq!(wrap_to_pi(-PI - 0.1), PI - 0.1, epsilon = 1e-12);
        assert_eq!(wrap_to_pi(PI), PI);
    }

    #[test]
    fn circular_mean_of_constant() {
        let (m, s) = circular_mean_std(&[0.3; 100]).unwrap();
        assert_abs_diff_eq!(m, 0.3, epsilon = 1e-12);
        assert_abs_diff_eq!(s, 0.0, epsilon = 1e-7);
    }

    #[test]
    fn circular_mean_handles_wrap_cluster() {
        // Cluster around pi: naive arithmetic mean would land near zero.
        let angles = [PI - 0.05, -PI + 0.05, PI - 0.02, -PI + 0.02];
        let (m, _) = circular_mean_std(&angles).unwrap();
        assert!(wrap_to_pi(m - PI).abs() < 1e-9);
    }

    #[test]
    fn empty_has_no_mean() {
        assert!(circular_mean_std(&[]).is_none());
    }
}
