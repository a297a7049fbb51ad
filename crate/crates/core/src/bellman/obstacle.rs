//! The obstacle h_c(s) = ((1+s)/2)^p − c^p ((1−s)/2)^p, the one-variable
//! trace of y^p − c^p x^p on the simplex x + y = 1.

use crate::error::{Error, Result};
use crate::real::Real;
use crate::specfun::Jet;

#[derive(Clone, Copy, Debug)]
pub struct Obstacle<R: Real> {
    p: R,
    c: R,
    c_pow_p: R,
}

impl<R: Real> Obstacle<R> {
    pub fn new(p: R, c: R) -> Result<Self> {
        if !(c > R::zero()) || !c.is_finite() {
            return Err(Error::InvalidConfig("obstacle constant must be positive".into()));
        }
        if !(p >= R::of(2.0)) {
            return Err(Error::ExponentOutOfRange(p.as_f64()));
        }
        Ok(Self {
            p,
            c,
            c_pow_p: c.powf(p),
        })
    }

    pub fn p(&self) -> R {
        self.p
    }

    pub fn c(&self) -> R {
        self.c
    }

    pub fn c_pow_p(&self) -> R {
        self.c_pow_p
    }

    pub fn value(&self, s: R) -> R {
        let half = R::of(0.5);
        let up = ((R::one() + s) * half).powf(self.p);
        let dn = ((R::one() - s) * half).powf(self.p);
        up - self.c_pow_p * dn
    }

    /// h_c, h_c′, h_c″ on [−1, 1].
    pub fn jet(&self, s: R) -> Jet<R> {
        let one = R::one();
        let half = R::of(0.5);
        let p = self.p;
        let up = (one + s) * half;
        let dn = (one - s) * half;
        let v = up.powf(p) - self.c_pow_p * dn.powf(p);
        let d1 = p * half * (up.powf(p - one) + self.c_pow_p * dn.powf(p - one));
        let d2 = p * (p - one) * R::of(0.25)
            * (up.powf(p - R::of(2.0)) - self.c_pow_p * dn.powf(p - R::of(2.0)));
        Jet { value: v, d1, d2 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoint_values() {
        let h = Obstacle::new(6.0f64, 3.0).unwrap();
        assert_eq!(h.value(1.0), 1.0);
        assert_eq!(h.value(-1.0), -3.0f64.powi(6));
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let h = Obstacle::new(7.5f64, 2.0).unwrap();
        let eps = 1e-6;
        for &s in &[-0.7, -0.2, 0.0, 0.4, 0.9] {
            let jet = h.jet(s);
            let d1 = (h.value(s + eps) - h.value(s - eps)) / (2.0 * eps);
            let d2 = (h.value(s + eps) - 2.0 * h.value(s) + h.value(s - eps)) / (eps * eps);
            assert!((jet.d1 - d1).abs() < 1e-7 * (1.0 + d1.abs()));
            assert!((jet.d2 - d2).abs() < 1e-3 * (1.0 + d2.abs()));
        }
    }

    #[test]
    fn monotone_increasing() {
        let h = Obstacle::new(6.0f64, 4.0).unwrap();
        let mut prev = h.value(-1.0);
        for i in 1..=100 {
            let s = -1.0 + 2.0 * i as f64 / 100.0;
            let v = h.value(s);
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn rejects_bad_constants() {
        assert!(Obstacle::new(6.0f64, 0.0).is_err());
        assert!(Obstacle::new(6.0f64, -1.0).is_err());
        assert!(Obstacle::new(1.0f64, 2.0).is_err());
    }
}
