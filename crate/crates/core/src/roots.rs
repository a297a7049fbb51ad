//! Safeguarded bracketing root refinement.

use crate::error::{Error, Result};
use crate::real::Real;

/// Interval with a sign change: `f(lo) * f(hi) <= 0`.
#[derive(Clone, Copy, Debug)]
pub struct Bracket<R: Real> {
    pub lo: R,
    pub hi: R,
    pub f_lo: R,
    pub f_hi: R,
}

impl<R: Real> Bracket<R> {
    pub fn new(lo: R, hi: R, f_lo: R, f_hi: R) -> Result<Self> {
        if !(lo < hi) || f_lo * f_hi > R::zero() {
            return Err(Error::BracketFailure {
                what: "bracket endpoints",
                at: lo.as_f64(),
            });
        }
        Ok(Self { lo, hi, f_lo, f_hi })
    }
}

/// Bisect a bracket until its width is at most `width_tol`.
///
/// The accepted answer always comes from a sign-bracketed interval; the
/// returned value is the final midpoint. `f` may fail (e.g. a series that does
/// not converge) and the failure is propagated.
pub fn bisect<R, F>(mut bracket: Bracket<R>, width_tol: R, mut f: F) -> Result<R>
where
    R: Real,
    F: FnMut(R) -> Result<R>,
{
    if bracket.f_lo == R::zero() {
        return Ok(bracket.lo);
    }
    if bracket.f_hi == R::zero() {
        return Ok(bracket.hi);
    }
    // Enough iterations to exhaust the mantissa even for tiny tolerances.
    for _ in 0..4096 {
        let mid = (bracket.lo + bracket.hi).half();
        if bracket.hi - bracket.lo <= width_tol || mid <= bracket.lo || mid >= bracket.hi {
            return Ok(mid);
        }
        let f_mid = f(mid)?;
        if f_mid == R::zero() {
            return Ok(mid);
        }
        if f_mid * bracket.f_lo < R::zero() {
            bracket.hi = mid;
            bracket.f_hi = f_mid;
        } else {
            bracket.lo = mid;
            bracket.f_lo = f_mid;
        }
    }
    Ok((bracket.lo + bracket.hi).half())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let f = |x: f64| Ok(x * x - 2.0);
        let b = Bracket::new(1.0, 2.0, -1.0, 2.0).unwrap();
        let r = bisect(b, 1e-14, f).unwrap();
        assert!((r - 2.0f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn rejects_no_sign_change() {
        assert!(Bracket::new(1.0, 2.0, 1.0, 2.0).is_err());
    }

    #[test]
    fn exact_zero_endpoint_is_returned() {
        let b = Bracket::new(0.0, 1.0, 0.0, 1.0).unwrap();
        let r = bisect(b, 1e-14, |x: f64| Ok(x)).unwrap();
        assert_eq!(r, 0.0);
    }
}
