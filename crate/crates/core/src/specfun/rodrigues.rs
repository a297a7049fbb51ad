//! Exact Legendre polynomials via the Rodrigues formula.
//!
//! L_n(s) = 1/(2ⁿ n!) dⁿ/dsⁿ (s²−1)ⁿ, computed in arbitrary-precision
//! rational arithmetic so the coefficients are exact. These polynomials are
//! the independent oracle for the series evaluator at integer degree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const MAX_RODRIGUES_DEGREE: usize = 30;

/// Dense polynomial with exact rational coefficients, low degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn derivative(&self) -> RationalPoly {
        if self.coeffs.len() <= 1 {
            return RationalPoly {
                coeffs: vec![BigRational::zero()],
            };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect();
        RationalPoly { coeffs }
    }

    pub fn eval_exact(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// Exact coefficients of L_n, 1 <= n <= [`MAX_RODRIGUES_DEGREE`].
pub fn rodrigues_polynomial(n: usize) -> Result<RationalPoly> {
    if n == 0 {
        return Err(Error::DegreeOutOfRange(0.0));
    }
    if n > MAX_RODRIGUES_DEGREE {
        return Err(Error::DegreeTooLarge(n, MAX_RODRIGUES_DEGREE));
    }
    // (s^2 - 1)^n expanded by repeated multiplication.
    let mut base = vec![BigRational::one()];
    let minus_one = -BigRational::one();
    for _ in 0..n {
        let mut next = vec![BigRational::zero(); base.len() + 2];
        for (k, c) in base.iter().enumerate() {
            next[k] = &next[k] + c * &minus_one;
            next[k + 2] = &next[k + 2] + c;
        }
        base = next;
    }
    // Differentiate n times.
    let mut poly = RationalPoly { coeffs: base };
    for _ in 0..n {
        poly = poly.derivative();
    }
    // Scale by 1/(2^n n!).
    let mut scale = BigInt::one();
    for k in 1..=n {
        scale *= BigInt::from(2 * k);
    }
    let scale = BigRational::from_integer(scale);
    for c in poly.coeffs.iter_mut() {
        *c = &*c / &scale;
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn first_three_polynomials() {
        // L1 = s, L2 = (3s^2 - 1)/2, L3 = (5s^3 - 3s)/2.
        let l1 = rodrigues_polynomial(1).unwrap();
        assert_eq!(l1.coeffs(), &[rat(0, 1), rat(1, 1)]);
        let l2 = rodrigues_polynomial(2).unwrap();
        assert_eq!(l2.coeffs(), &[rat(-1, 2), rat(0, 1), rat(3, 2)]);
        let l3 = rodrigues_polynomial(3).unwrap();
        assert_eq!(l3.coeffs(), &[rat(0, 1), rat(-3, 2), rat(0, 1), rat(5, 2)]);
    }

    #[test]
    fn normalised_to_one_at_one() {
        let one = BigRational::one();
        for n in 1..=12 {
            let p = rodrigues_polynomial(n).unwrap();
            assert_eq!(p.eval_exact(&one), one, "L_{n}(1) != 1");
        }
    }

    #[test]
    fn satisfies_legendre_equation_exactly() {
        // (1-s^2) L'' - 2s L' + n(n+1) L = 0 as exact polynomials.
        for n in 1..=8usize {
            let l = rodrigues_polynomial(n).unwrap();
            let d1 = l.derivative();
            let d2 = d1.derivative();
            let p = BigRational::from_integer(BigInt::from((n * (n + 1)) as i64));
            for k in 0..=6 {
                let x = rat(2 * k as i64 - 6, 7);
                let lhs = (BigRational::one() - &x * &x) * d2.eval_exact(&x)
                    - rat(2, 1) * &x * d1.eval_exact(&x)
                    + &p * l.eval_exact(&x);
                assert!(lhs.is_zero(), "residual at n={n}");
            }
        }
    }

    #[test]
    fn degree_limits_enforced() {
        assert!(rodrigues_polynomial(0).is_err());
        assert!(rodrigues_polynomial(MAX_RODRIGUES_DEGREE).is_ok());
        assert!(rodrigues_polynomial(MAX_RODRIGUES_DEGREE + 1).is_err());
    }

    #[test]
    fn f64_eval_matches_exact_at_rational_points() {
        let l5 = rodrigues_polynomial(5).unwrap();
        let x = rat(3, 8);
        let exact = l5.eval_exact(&x).to_f64().unwrap();
        assert!((l5.eval_f64(0.375) - exact).abs() < 1e-15);
    }
}
