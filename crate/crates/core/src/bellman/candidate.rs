//! The piecewise certificate g_p: the scaled bounded Legendre solution
//! a_p·f₁ on [z_p, 1] glued C¹ to the obstacle h_{c_p} on [−1, z_p].

use crate::error::{Error, Result};
use crate::real::Real;
use crate::sharp::SharpConstants;
use crate::specfun::Jet;

use super::obstacle::Obstacle;

/// Which one-sided branch to evaluate at the gluing point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Obstacle branch, s ≤ z_p.
    Left,
    /// Legendre branch, s ≥ z_p.
    Right,
}

#[derive(Clone, Debug)]
pub struct BellmanCandidate<R: Real> {
    consts: SharpConstants<R>,
    obstacle: Obstacle<R>,
}

impl<R: Real> BellmanCandidate<R> {
    pub fn new(consts: SharpConstants<R>) -> Result<Self> {
        let obstacle = Obstacle::new(consts.p(), consts.constant())?;
        Ok(Self { consts, obstacle })
    }

    pub fn for_p(p: R) -> Result<Self> {
        Self::new(SharpConstants::compute(p)?)
    }

    pub fn constants(&self) -> &SharpConstants<R> {
        &self.consts
    }

    pub fn obstacle(&self) -> &Obstacle<R> {
        &self.obstacle
    }

    pub fn p(&self) -> R {
        self.consts.p()
    }

    pub fn side_of(&self, s: R) -> Side {
        if s >= self.consts.largest_zero() {
            Side::Right
        } else {
            Side::Left
        }
    }

    /// g_p with derivatives; the branch at z_p itself is the Legendre one.
    pub fn jet(&self, s: R) -> Result<Jet<R>> {
        self.jet_side(s, self.side_of(s))
    }

    /// One-sided evaluation, needed at the C¹ gluing point where g″ jumps.
    pub fn jet_side(&self, s: R, side: Side) -> Result<Jet<R>> {
        if !(s >= -R::one() && s <= R::one()) {
            return Err(Error::ArgumentOutOfDomain(s.as_f64(), "[-1, 1]"));
        }
        match side {
            Side::Right => {
                let a = self.consts.amplitude();
                let jet = self.consts.solution().f1_jet(s)?;
                Ok(Jet {
                    value: a * jet.value,
                    d1: a * jet.d1,
                    d2: a * jet.d2,
                })
            }
            Side::Left => Ok(self.obstacle.jet(s)),
        }
    }

    pub fn value(&self, s: R) -> Result<R> {
        Ok(self.jet(s)?.value)
    }

    /// φ(x, y) = (x+y)^p g_p((y−x)/(x+y)) for x, y ≥ 0, (x, y) ≠ (0, 0).
    ///
    /// It is p-homogeneous and majorises y^p − c_p^p x^p.
    pub fn phi(&self, x: R, y: R) -> Result<R> {
        if !(x >= R::zero() && y >= R::zero()) || (x == R::zero() && y == R::zero()) {
            return Err(Error::ArgumentOutOfDomain(
                x.as_f64(),
                "x, y >= 0, not both zero",
            ));
        }
        let sum = x + y;
        let s = (y - x) / sum;
        Ok(sum.powf(self.p()) * self.value(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c1_gluing_at_the_zero() {
        for &p in &[2.5f64, 6.0, 7.5, 12.0] {
            let cand = BellmanCandidate::for_p(p).unwrap();
            let z = cand.constants().largest_zero();
            let left = cand.jet_side(z, Side::Left).unwrap();
            let right = cand.jet_side(z, Side::Right).unwrap();
            assert!(
                (left.value - right.value).abs() < 1e-9,
                "p={p}: value gap {}",
                (left.value - right.value).abs()
            );
            assert!(
                (left.d1 - right.d1).abs() < 1e-9 * (1.0 + left.d1.abs()),
                "p={p}: slope gap"
            );
            // No positive-delta curvature defect: g''(z+) >= g''(z-) - tol.
            assert!(right.d2 - left.d2 >= -1e-9, "p={p}: curvature jump");
        }
    }

    #[test]
    fn majorizes_obstacle_with_equality_left() {
        let cand = BellmanCandidate::for_p(6.0f64).unwrap();
        let z = cand.constants().largest_zero();
        for i in 0..=400 {
            let s = -1.0 + 2.0 * i as f64 / 400.0;
            let g = cand.value(s).unwrap();
            let h = cand.obstacle().value(s);
            assert!(g - h >= -1e-10, "s={s}");
            if s < z {
                assert!((g - h).abs() <= 1e-12 * (1.0 + h.abs()), "s={s}");
            }
            if s > z + 0.05 {
                assert!(g - h > 0.0, "strictness fails at s={s}");
            }
        }
    }

    #[test]
    fn phi_boundary_values() {
        let cand = BellmanCandidate::for_p(6.0f64).unwrap();
        let a_p = cand.constants().amplitude();
        assert!((cand.phi(0.0, 1.0).unwrap() - a_p).abs() < 1e-12);
        let c_p = cand.constants().constant();
        assert!((cand.phi(1.0, 0.0).unwrap() + c_p.powi(6)).abs() < 1e-8);
        assert!(cand.phi(0.0, 0.0).is_err());
    }

    #[test]
    fn degenerate_p_two_candidate_is_linear() {
        let cand = BellmanCandidate::for_p(2.0f64).unwrap();
        for &s in &[-0.9, -0.3, 0.0, 0.4, 1.0] {
            assert!((cand.value(s).unwrap() - s).abs() < 1e-12);
        }
    }
}
