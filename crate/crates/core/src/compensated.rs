//! Neumaier compensated summation.

use crate::real::Real;

/// Running sum that tracks the rounding error of every addition.
#[derive(Clone, Copy, Debug)]
pub(crate) struct CompensatedSum<R: Real> {
    sum: R,
    correction: R,
}

impl<R: Real> CompensatedSum<R> {
    pub fn new() -> Self {
        Self {
            sum: R::zero(),
            correction: R::zero(),
        }
    }

    pub fn add(&mut self, term: R) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.correction = self.correction + ((self.sum - t) + term);
        } else {
            self.correction = self.correction + ((term - t) + self.sum);
        }
        self.sum = t;
    }

    pub fn value(&self) -> R {
        self.sum + self.correction
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancellation() {
        let mut s = CompensatedSum::<f64>::new();
        s.add(1.0);
        s.add(1e-18);
        s.add(-1.0);
        assert_eq!(s.value(), 1e-18);
    }

    #[test]
    fn harmonic_tail_is_more_accurate_than_naive() {
        let mut s = CompensatedSum::<f64>::new();
        let mut naive = 0.0f64;
        for n in 1..=1_000_000u64 {
            let t = 1.0 / (n as f64) / (n as f64);
            s.add(t);
            naive += t;
        }
        let exact = std::f64::consts::PI * std::f64::consts::PI / 6.0 - 1e-6 + 0.5e-12;
        assert!((s.value() - exact).abs() <= (naive - exact).abs() + 1e-16);
    }
}
