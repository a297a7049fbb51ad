//! The Bessel function J₀ and its first positive zero.
//!
//! J₀(x) = Σ (−1)ⁿ x²ⁿ / (2²ⁿ (n!)²), summed with compensated accumulation.
//! The series is used on [0, 40]; accuracy degrades towards the top of that
//! range as the alternating terms grow before they decay, which is fine for
//! the uses here (the first zero and residual checks live on [0, 10]).

use crate::compensated::CompensatedSum;
use crate::error::{Error, Result};
use crate::real::Real;
use crate::roots::{bisect, Bracket};

use super::Jet;

const MAX_RANGE: f64 = 40.0;
const MAX_TERMS: usize = 400;

/// J₀(x) for 0 ≤ x ≤ 40.
pub fn bessel_j0<R: Real>(x: R) -> Result<R> {
    Ok(bessel_j0_jet(x)?.value)
}

/// J₀ with first and second derivatives from the termwise series.
pub fn bessel_j0_jet<R: Real>(x: R) -> Result<Jet<R>> {
    if !(x >= R::zero() && x <= R::of(MAX_RANGE)) {
        return Err(Error::ArgumentOutOfDomain(x.as_f64(), "[0, 40]"));
    }
    if x == R::zero() {
        // J0(0) = 1, J0'(0) = 0, J0''(0) = -1/2.
        return Ok(Jet {
            value: R::one(),
            d1: R::zero(),
            d2: -R::one().half(),
        });
    }
    let q = x * x / R::of(4.0);
    let mut v = CompensatedSum::<R>::new();
    let mut d1 = CompensatedSum::<R>::new();
    let mut d2 = CompensatedSum::<R>::new();
    let mut term = R::one();
    v.add(term);
    let threshold = R::epsilon() * R::of(0.01);
    for n in 1..MAX_TERMS {
        let nf = R::from_index(n);
        term = -term * q / (nf * nf);
        let two_n = R::of(2.0) * nf;
        v.add(term);
        d1.add(two_n * term / x);
        d2.add(two_n * (two_n - R::one()) * term / (x * x));
        if term.abs() <= threshold * (R::one() + v.value().abs()) && n > 2 {
            return Ok(Jet {
                value: v.value(),
                d1: d1.value(),
                d2: d2.value(),
            });
        }
    }
    Err(Error::SeriesNotConverged {
        max_terms: MAX_TERMS,
        tol: threshold.as_f64(),
    })
}

/// Bracket and bisect the first positive zero j₀ ≈ 2.4048 of J₀.
pub fn find_first_j0_zero<R: Real>() -> Result<R> {
    let step = R::of(0.25);
    let mut lo = R::zero();
    let mut f_lo = bessel_j0(lo)?;
    for k in 1..=64 {
        let hi = step * R::from_index(k);
        let f_hi = bessel_j0(hi)?;
        if f_lo * f_hi <= R::zero() {
            let bracket = Bracket::new(lo, hi, f_lo, f_hi)?;
            let tol = R::of(1e-12).max(R::epsilon() * R::of(8.0));
            return bisect(bracket, tol, |x| bessel_j0(x));
        }
        lo = hi;
        f_lo = f_hi;
    }
    Err(Error::BracketFailure {
        what: "first zero of J0",
        at: 16.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_zero_is_one() {
        assert_eq!(bessel_j0(0.0f64).unwrap(), 1.0);
    }

    #[test]
    fn reference_values() {
        // Abramowitz & Stegun table values.
        assert!((bessel_j0(1.0f64).unwrap() - 0.7651976865579666).abs() < 1e-14);
        assert!((bessel_j0(2.0f64).unwrap() - 0.22389077914123567).abs() < 1e-14);
        assert!((bessel_j0(5.0f64).unwrap() - -0.17759677131433830).abs() < 1e-13);
    }

    #[test]
    fn first_zero_to_twelve_digits() {
        let j0: f64 = find_first_j0_zero().unwrap();
        assert!((j0 - 2.404825557695773).abs() < 1e-11);
    }

    #[test]
    fn satisfies_bessel_equation_on_grid() {
        // x J0'' + J0' + x J0 = 0 within 1e-10 on [0, 10].
        for i in 0..=200 {
            let x = 10.0 * i as f64 / 200.0;
            let jet = bessel_j0_jet(x).unwrap();
            let resid = x * jet.d2 + jet.d1 + x * jet.value;
            assert!(resid.abs() < 1e-10, "x={x}: residual {resid}");
        }
    }

    #[test]
    fn range_check() {
        assert!(bessel_j0(-0.1f64).is_err());
        assert!(bessel_j0(40.5f64).is_err());
        assert!(bessel_j0(40.0f64).is_ok());
    }
}
