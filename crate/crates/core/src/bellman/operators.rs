//! The one-dimensional operators behind the certificate inequalities and the
//! quadratic-form coefficients of φ(x, y) = (x+y)^p g((y−x)/(x+y)) on the
//! simplex x + y = 1.
//!
//! With g supplying value and two derivatives at s:
//!
//! ```text
//! D g = (1−s²) g″ − 2s g′ + p g                   (Sturm–Liouville + p)
//! K g = p(p−1) g − 2(p−1) s g′ − (1−s²) g″
//! D̃ g = D g / (1−s²) + K g
//! ```
//!
//! and the simplex derivatives of φ:
//!
//! ```text
//! φ_xx  = p(p−1) g − 2(p−1)(1+s) g′ + (1+s)² g″
//! φ_yy  = p(p−1) g + 2(p−1)(1−s) g′ + (1−s)² g″
//! φ_xy  = p(p−1) g − 2(p−1) s g′ − (1−s²) g″     (= K g)
//! φ_x/x = 2p g/(1−s) − 2(1+s) g′/(1−s)
//! φ_y/y = 2p g/(1+s) + 2(1−s) g′/(1+s)
//! ```
//!
//! The quadratic form to be nonpositive over |k| ≤ |h| is
//! A|h|² + 2B(h·k) + C|k|² with A = φ_xx + φ_x/x, B = φ_xy,
//! C = φ_yy + φ_y/y. Two algebraic identities tie the layers together and are
//! exercised in tests: A − 2B + C = 4 D g/(1−s²) and A + 2B + C = 4 D̃ g.

use crate::error::{Error, Result};
use crate::real::Real;
use crate::specfun::Jet;

/// D g at s.
pub fn d_op<R: Real>(p: R, s: R, g: &Jet<R>) -> R {
    (R::one() - s * s) * g.d2 - R::of(2.0) * s * g.d1 + p * g.value
}

/// K g at s.
pub fn k_op<R: Real>(p: R, s: R, g: &Jet<R>) -> R {
    p * (p - R::one()) * g.value
        - R::of(2.0) * (p - R::one()) * s * g.d1
        - (R::one() - s * s) * g.d2
}

/// D̃ g = D g/(1−s²) + K g; requires |s| < 1.
pub fn dtilde_op<R: Real>(p: R, s: R, g: &Jet<R>) -> Result<R> {
    if !(s.abs() < R::one()) {
        return Err(Error::ArgumentOutOfDomain(s.as_f64(), "(-1, 1)"));
    }
    Ok(d_op(p, s, g) / (R::one() - s * s) + k_op(p, s, g))
}

/// The five φ-derivative combinations on the simplex.
#[derive(Clone, Copy, Debug)]
pub struct PhiDerivatives<R> {
    pub xx: R,
    pub yy: R,
    pub xy: R,
    pub x_over_x: R,
    pub y_over_y: R,
}

pub fn phi_derivatives<R: Real>(p: R, s: R, g: &Jet<R>) -> Result<PhiDerivatives<R>> {
    if !(s.abs() < R::one()) {
        return Err(Error::ArgumentOutOfDomain(s.as_f64(), "(-1, 1)"));
    }
    let one = R::one();
    let two = R::of(2.0);
    let pm1 = p - one;
    let up = one + s;
    let dn = one - s;
    Ok(PhiDerivatives {
        xx: p * pm1 * g.value - two * pm1 * up * g.d1 + up * up * g.d2,
        yy: p * pm1 * g.value + two * pm1 * dn * g.d1 + dn * dn * g.d2,
        xy: k_op(p, s, g),
        x_over_x: two * p * g.value / dn - two * up * g.d1 / dn,
        y_over_y: two * p * g.value / up + two * dn * g.d1 / up,
    })
}

/// Coefficients of the direction quadratic form, possibly with the positive
/// factor (1−s²) cleared from the 1/(1∓s) terms near the endpoints.
#[derive(Clone, Copy, Debug)]
pub struct QuadFormCoeffs<R> {
    pub a_eff: R,
    pub b: R,
    pub c_eff: R,
    /// The positive factor the raw coefficients were multiplied by.
    pub scale_factor: R,
}

impl<R: Real> QuadFormCoeffs<R> {
    /// Raw coefficients A = φ_xx + φ_x/x, B = φ_xy, C = φ_yy + φ_y/y.
    pub fn at_simplex(p: R, s: R, g: &Jet<R>) -> Result<Self> {
        let d = phi_derivatives(p, s, g)?;
        Ok(Self {
            a_eff: d.xx + d.x_over_x,
            b: d.xy,
            c_eff: d.yy + d.y_over_y,
            scale_factor: R::one(),
        })
    }

    /// Coefficients multiplied by (1−s²) > 0: sign-equivalent and free of the
    /// 1/(1∓s) blow-up near the endpoints.
    pub fn at_simplex_cleared(p: R, s: R, g: &Jet<R>) -> Result<Self> {
        if !(s.abs() < R::one()) {
            return Err(Error::ArgumentOutOfDomain(s.as_f64(), "(-1, 1)"));
        }
        let one = R::one();
        let two = R::of(2.0);
        let pm1 = p - one;
        let up = one + s;
        let dn = one - s;
        let w = one - s * s;
        let xx = p * pm1 * g.value - two * pm1 * up * g.d1 + up * up * g.d2;
        let yy = p * pm1 * g.value + two * pm1 * dn * g.d1 + dn * dn * g.d2;
        // (1−s²) φ_x/x = (1+s)(2p g − 2(1+s) g′), same for the y-side.
        let x_over_x_cleared = up * (two * p * g.value - two * up * g.d1);
        let y_over_y_cleared = dn * (two * p * g.value + two * dn * g.d1);
        Ok(Self {
            a_eff: w * xx + x_over_x_cleared,
            b: w * k_op(p, s, g),
            c_eff: w * yy + y_over_y_cleared,
            scale_factor: w,
        })
    }

    /// Form value at |h| = 1, |k| = b, cos angle u: A + 2B u b + C b².
    pub fn eval(&self, u: R, b: R) -> R {
        self.a_eff + R::of(2.0) * self.b * u * b + self.c_eff * b * b
    }

    /// 𝒟 = B² − A·C.
    pub fn discriminant(&self) -> R {
        self.b * self.b - self.a_eff * self.c_eff
    }

    /// Root-location inequality ||B| − √𝒟| − |A| (≤ 0 required when 𝒟 ≥ 0).
    pub fn middle_residual(&self) -> R {
        let disc = self.discriminant();
        if disc < R::zero() {
            return R::zero();
        }
        ((self.b.abs() - disc.sqrt()).abs()) - self.a_eff.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jet(value: f64, d1: f64, d2: f64) -> Jet<f64> {
        Jet { value, d1, d2 }
    }

    #[test]
    fn d_vanishes_on_legendre_solutions() {
        // g = s solves the equation for p = 2.
        for &s in &[-0.9, -0.3, 0.2, 0.8] {
            assert_eq!(d_op(2.0, s, &jet(s, 1.0, 0.0)), 0.0);
        }
    }

    #[test]
    fn combination_identities() {
        // A - 2B + C = 4 Dg/(1-s^2) and A + 2B + C = 4 D~g for arbitrary jets.
        let g = jet(0.7, -1.3, 2.4);
        let p = 7.5;
        for &s in &[-0.6, 0.0, 0.5, 0.95] {
            let q = QuadFormCoeffs::at_simplex(p, s, &g).unwrap();
            let minus_combo = q.a_eff - 2.0 * q.b + q.c_eff;
            let plus_combo = q.a_eff + 2.0 * q.b + q.c_eff;
            let d = d_op(p, s, &g);
            let dt = dtilde_op(p, s, &g).unwrap();
            assert!((minus_combo - 4.0 * d / (1.0 - s * s)).abs() < 1e-10 * (1.0 + d.abs()));
            assert!((plus_combo - 4.0 * dt).abs() < 1e-10 * (1.0 + dt.abs()));
        }
    }

    #[test]
    fn second_difference_identity() {
        // φ_xx − 2 φ_xy + φ_yy = 4 g″.
        let g = jet(-0.4, 0.9, -3.1);
        for &s in &[-0.8, 0.1, 0.6] {
            let d = phi_derivatives(4.3, s, &g).unwrap();
            assert!((d.xx - 2.0 * d.xy + d.yy - 4.0 * g.d2).abs() < 1e-12);
        }
    }

    #[test]
    fn cleared_coefficients_are_scaled_raw_ones() {
        let g = jet(1.1, 0.3, -0.7);
        for &s in &[-0.5, 0.0, 0.9] {
            let raw = QuadFormCoeffs::at_simplex(6.0, s, &g).unwrap();
            let cleared = QuadFormCoeffs::at_simplex_cleared(6.0, s, &g).unwrap();
            let w = 1.0 - s * s;
            assert!((cleared.a_eff - w * raw.a_eff).abs() < 1e-10 * (1.0 + raw.a_eff.abs()));
            assert!((cleared.b - w * raw.b).abs() < 1e-12 * (1.0 + raw.b.abs()));
            assert!((cleared.c_eff - w * raw.c_eff).abs() < 1e-10 * (1.0 + raw.c_eff.abs()));
        }
    }

    #[test]
    fn domain_guard() {
        let g = jet(1.0, 0.0, 0.0);
        assert!(dtilde_op(6.0, 1.0, &g).is_err());
        assert!(phi_derivatives(6.0, -1.0, &g).is_err());
    }
}
