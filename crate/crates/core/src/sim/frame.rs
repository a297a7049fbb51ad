//! One step of the strategy matrix: the four increment rows of the pair
//! (Z, W) against the 2-D Brownian driver.

use crate::error::{Error, Result};

pub fn dot(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

pub fn norm_sq(a: [f64; 2]) -> f64 {
    a[0] * a[0] + a[1] * a[1]
}

/// Rows (h, h′, k, k′) of the strategy matrix at one step: Z moves by
/// (h·dB, h′·dB), W by (k·dB, k′·dB).
///
/// The constraint set requires |h| = |h′|, h ⊥ h′, |k| = |k′|, k ⊥ k′ and
/// |k| ≤ |h|; frames are validated to 1e−12 relative.
#[derive(Clone, Copy, Debug)]
pub struct IncrementFrame {
    pub h: [f64; 2],
    pub hp: [f64; 2],
    pub k: [f64; 2],
    pub kp: [f64; 2],
}

pub const FRAME_TOL: f64 = 1e-12;

impl IncrementFrame {
    /// d⟨Z, Z⟩ per unit time: |h|² + |h′|².
    pub fn dzz(&self) -> f64 {
        norm_sq(self.h) + norm_sq(self.hp)
    }

    /// d⟨W, W⟩ per unit time: |k|² + |k′|².
    pub fn dww(&self) -> f64 {
        norm_sq(self.k) + norm_sq(self.kp)
    }

    /// Worst relative violation of the W-orthogonality conditions
    /// (|k| = |k′|, k ⊥ k′), which every strategy must satisfy.
    pub fn w_orthogonality_error(&self) -> f64 {
        let scale = norm_sq(self.k).max(norm_sq(self.kp)).max(f64::MIN_POSITIVE);
        let norm_gap = (norm_sq(self.k) - norm_sq(self.kp)).abs();
        let cross = dot(self.k, self.kp).abs();
        (norm_gap / scale).max(cross / scale)
    }

    /// Worst relative violation of the Z-orthogonality conditions.
    pub fn z_orthogonality_error(&self) -> f64 {
        let scale = norm_sq(self.h).max(norm_sq(self.hp)).max(f64::MIN_POSITIVE);
        let norm_gap = (norm_sq(self.h) - norm_sq(self.hp)).abs();
        let cross = dot(self.h, self.hp).abs();
        (norm_gap / scale).max(cross / scale)
    }

    /// Relative excess of |k|² over |h|² (positive means subordination
    /// violated).
    pub fn subordination_excess(&self) -> f64 {
        let scale = norm_sq(self.h).max(f64::MIN_POSITIVE);
        (norm_sq(self.k) - norm_sq(self.h)) / scale
    }

    /// Check the full constraint set to [`FRAME_TOL`].
    pub fn validate(&self) -> Result<()> {
        if self.w_orthogonality_error() > FRAME_TOL {
            return Err(Error::InvalidFrame(format!(
                "W rows not orthonormal-pair: error {}",
                self.w_orthogonality_error()
            )));
        }
        if self.z_orthogonality_error() > FRAME_TOL {
            return Err(Error::InvalidFrame(format!(
                "Z rows not orthonormal-pair: error {}",
                self.z_orthogonality_error()
            )));
        }
        if self.subordination_excess() > FRAME_TOL {
            return Err(Error::InvalidFrame(format!(
                "subordination violated: excess {}",
                self.subordination_excess()
            )));
        }
        Ok(())
    }
}

/// The martingale transform rows: given Z rows (x, y), the transformed
/// increments are u = (−x₁−y₂, x₂−y₁), v = (x₂−y₁, x₁+y₂).
///
/// W built from these rows is orthogonal for any input, with
/// |u|² = |v|² ≤ 2(|x|² + |y|²), i.e. d⟨W,W⟩ ≤ 4 d⟨Z,Z⟩.
pub fn ab_transform(x: [f64; 2], y: [f64; 2]) -> ([f64; 2], [f64; 2]) {
    let u = [-x[0] - y[1], x[1] - y[0]];
    let v = [x[1] - y[0], x[0] + y[1]];
    (u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ab_transform_component_formulas() {
        let (u, v) = ab_transform([1.0, 2.0], [3.0, 4.0]);
        assert_eq!(u, [-5.0, -1.0]);
        assert_eq!(v, [-1.0, 5.0]);
    }

    proptest! {
        #[test]
        fn ab_transform_is_orthogonal_and_subordinate(
            x0 in -10.0f64..10.0, x1 in -10.0f64..10.0,
            y0 in -10.0f64..10.0, y1 in -10.0f64..10.0,
        ) {
            let (u, v) = ab_transform([x0, x1], [y0, y1]);
            // u . v = 0 exactly: the two products cancel bitwise.
            prop_assert_eq!(dot(u, v), 0.0);
            // |u| = |v| exactly: same squares summed in different order.
            prop_assert!((norm_sq(u) - norm_sq(v)).abs() <= 1e-12 * norm_sq(u).max(1.0));
            // |u|^2 <= 2 (|x|^2 + |y|^2).
            let dzz = norm_sq([x0, x1]) + norm_sq([y0, y1]);
            prop_assert!(norm_sq(u) <= 2.0 * dzz + 1e-9 * dzz.max(1.0));
            prop_assert!(norm_sq(v) <= 2.0 * dzz + 1e-9 * dzz.max(1.0));
        }
    }

    #[test]
    fn validate_catches_bad_frames() {
        let good = IncrementFrame {
            h: [1.0, 0.0],
            hp: [0.0, 1.0],
            k: [0.5, 0.0],
            kp: [0.0, 0.5],
        };
        assert!(good.validate().is_ok());
        let oversized = IncrementFrame {
            k: [2.0, 0.0],
            kp: [0.0, 2.0],
            ..good
        };
        assert!(oversized.validate().is_err());
        let skewed = IncrementFrame {
            k: [0.5, 0.1],
            kp: [0.0, 0.5],
            ..good
        };
        assert!(skewed.validate().is_err());
    }
}
