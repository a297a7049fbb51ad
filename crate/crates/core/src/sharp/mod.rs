//! The largest Legendre zero z_p, the constant c_p = (1+z_p)/(1−z_p), and the
//! touching construction around it.
//!
//! `find_largest_zero` scans leftward from s = 1 with a step proportional to
//! 1/p (the slope at 1 is p/2, so the solution decays on the 1/p scale),
//! brackets the first sign change and refines it by bisection. Everything
//! else is closed-form on top of z_p and the series evaluator.

mod lemmas;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::real::Real;
use crate::roots::{bisect, Bracket};
use crate::specfun::{
    alpha_from_p, find_first_j0_zero, LegendreSolution, SecondSolution,
};

pub use lemmas::{lemma_suite, zero_minimality_check, LemmaCheck};

/// Default bisection bracket width for z_p.
pub const DEFAULT_ZERO_TOL: f64 = 1e-13;

/// Everything that depends only on p: the degree, the largest zero, the sharp
/// constant, the touching amplitude and the obstacle inflection point.
#[derive(Clone, Debug)]
pub struct SharpConstants<R: Real> {
    p: R,
    alpha: R,
    largest_zero: R,
    constant: R,
    amplitude: R,
    inflection: Option<R>,
    zero_tol: R,
    sol: LegendreSolution<R>,
}

impl<R: Real> SharpConstants<R> {
    pub fn compute(p: R) -> Result<Self> {
        Self::compute_with_tol(p, R::of(DEFAULT_ZERO_TOL))
    }

    pub fn compute_with_tol(p: R, zero_tol: R) -> Result<Self> {
        if !(zero_tol > R::zero()) {
            return Err(Error::InvalidConfig("zero_tol must be positive".into()));
        }
        let alpha = alpha_from_p(p)?;
        let sol = LegendreSolution::new(alpha)?;
        let z = find_largest_zero(&sol, zero_tol)?;
        let one = R::one();
        let two = R::of(2.0);
        let c = (one + z) / (one - z);
        // a_p = (p/2) ( ((1+z)/2)^{p-1} + c^p ((1-z)/2)^{p-1} ) / f1'(z); at
        // p = 2 this degenerates gracefully to 1.
        let slope = sol.f1_jet(z)?.d1;
        let amplitude = p.half()
            * (((one + z) / two).powf(p - one) + c.powf(p) * ((one - z) / two).powf(p - one))
            / slope;
        // Obstacle inflection: c^p = ((1+i)/(1-i))^{p-2}; undefined at p = 2.
        let inflection = if p > two {
            let ratio = c.powf(p / (p - two));
            Some((ratio - one) / (ratio + one))
        } else {
            None
        };
        Ok(Self {
            p,
            alpha,
            largest_zero: z,
            constant: c,
            amplitude,
            inflection,
            zero_tol,
            sol,
        })
    }

    pub fn p(&self) -> R {
        self.p
    }

    pub fn alpha(&self) -> R {
        self.alpha
    }

    /// z_p, the largest zero of f₁ on (−1, 1).
    pub fn largest_zero(&self) -> R {
        self.largest_zero
    }

    /// c_p = (1+z_p)/(1−z_p).
    pub fn constant(&self) -> R {
        self.constant
    }

    /// a_p, the amplitude making a_p·f₁ touch the obstacle at z_p.
    pub fn amplitude(&self) -> R {
        self.amplitude
    }

    /// i_p, the obstacle inflection point; `None` at p = 2.
    pub fn inflection(&self) -> Option<R> {
        self.inflection
    }

    pub fn zero_tol(&self) -> R {
        self.zero_tol
    }

    pub fn solution(&self) -> &LegendreSolution<R> {
        &self.sol
    }

    /// The log-singular companion solution anchored at the midpoint of
    /// (z_p, 1), where f₁ is strictly positive.
    pub fn second_solution(&self) -> Result<SecondSolution<R>> {
        self.sol
            .second_solution((self.largest_zero + R::one()).half())
    }

    /// The touching-constant function β(x) on [z_p, 1); β(z_p) = c_p^p and
    /// β is strictly increasing to +∞.
    pub fn beta(&self, x: R) -> Result<R> {
        let one = R::one();
        if !(x >= self.largest_zero - self.zero_tol && x < one) {
            return Err(Error::ArgumentOutOfDomain(x.as_f64(), "[z_p, 1)"));
        }
        let jet = self.sol.f1_jet(x)?;
        let num = (one + x) * jet.d1 - self.p * jet.value;
        let den = (one - x) * jet.d1 + self.p * jet.value;
        if !(den > R::zero()) {
            return Err(Error::NonFinite(format!(
                "beta denominator nonpositive at x = {}",
                x.as_f64()
            )));
        }
        Ok(((one + x) / (one - x)).powf(self.p - one) * num / den)
    }

    /// The touching-amplitude function a(x) on [z_p, 1), in the cancellation
    /// free form a(x) = p ((1+x)/2)^{p-1} / ((1-x) f₁'(x) + p f₁(x)); it
    /// decreases strictly from a_p to 1.
    pub fn amplitude_at(&self, x: R) -> Result<R> {
        let one = R::one();
        if !(x >= self.largest_zero - self.zero_tol && x <= one) {
            return Err(Error::ArgumentOutOfDomain(x.as_f64(), "[z_p, 1]"));
        }
        let jet = self.sol.f1_jet(x)?;
        let den = (one - x) * jet.d1 + self.p * jet.value;
        if !(den > R::zero()) {
            return Err(Error::NonFinite(format!(
                "amplitude denominator nonpositive at x = {}",
                x.as_f64()
            )));
        }
        Ok(self.p * ((one + x) / R::of(2.0)).powf(self.p - one) / den)
    }

    /// `{p, alpha, z_p, c_p, a_p, i_p}` as JSON.
    pub fn summary_json(&self) -> serde_json::Value {
        json!({
            "p": self.p.as_f64(),
            "alpha": self.alpha.as_f64(),
            "z_p": self.largest_zero.as_f64(),
            "c_p": self.constant.as_f64(),
            "a_p": self.amplitude.as_f64(),
            "i_p": self.inflection.map(|i| i.as_f64()),
        })
    }
}

/// Bracket the largest zero of f₁ by a leftward scan from s = 1, then bisect.
///
/// The scan step starts at 0.5/p and halves on failure. For p ≥ 2 the zero
/// lies in [0, 1), so a scan that reaches −0.6 without a sign change signals
/// an evaluation bug rather than a missing root.
pub fn find_largest_zero<R: Real>(sol: &LegendreSolution<R>, zero_tol: R) -> Result<R> {
    let one = R::one();
    let mut step = one.half() / sol.p();
    for _ in 0..40 {
        let mut s_prev = one;
        let mut f_prev = one;
        let mut k = 1usize;
        loop {
            let s = one - R::from_index(k) * step;
            if s <= R::of(-0.6) {
                break;
            }
            let f = sol.f1(s)?;
            if f == R::zero() {
                return Ok(s);
            }
            if f_prev * f < R::zero() {
                let bracket = Bracket::new(s, s_prev, f, f_prev)?;
                return bisect(bracket, zero_tol, |x| sol.f1(x));
            }
            s_prev = s;
            f_prev = f;
            k += 1;
        }
        step = step.half();
    }
    Err(Error::BracketFailure {
        what: "largest zero of f1",
        at: -0.6,
    })
}

/// One row of the large-p table.
#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticsRow {
    pub p: f64,
    pub alpha: f64,
    pub z_p: f64,
    pub c_p: f64,
    /// p (1 − z_p); tends to j₀²/2 from below.
    pub p_one_minus_zp: f64,
    /// c_p / p; tends to 4/j₀².
    pub cp_over_p: f64,
    /// √(2(p²−p)), the unconstrained-transform comparison constant.
    pub transform_bound: f64,
    /// √((p²−p)/2), the subordinate orthogonal comparison constant.
    pub subordinate_bound: f64,
}

/// Reference limits the table converges to.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ReferenceConstants {
    pub j0: f64,
    pub j0_sq_half: f64,
    pub four_over_j0_sq: f64,
}

pub fn reference_constants() -> Result<ReferenceConstants> {
    let j0: f64 = find_first_j0_zero()?;
    Ok(ReferenceConstants {
        j0,
        j0_sq_half: j0 * j0 / 2.0,
        four_over_j0_sq: 4.0 / (j0 * j0),
    })
}

/// Compute (p, z_p, c_p, p(1−z_p), c_p/p) rows for an ascending list of p.
pub fn asymptotics_report<R: Real>(p_list: &[R]) -> Result<Vec<AsymptoticsRow>> {
    if p_list.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidConfig(
            "p_list must be strictly ascending".into(),
        ));
    }
    p_list
        .iter()
        .map(|&p| {
            let sc = SharpConstants::compute(p)?;
            let p64 = p.as_f64();
            let z = sc.largest_zero().as_f64();
            let c = sc.constant().as_f64();
            Ok(AsymptoticsRow {
                p: p64,
                alpha: sc.alpha().as_f64(),
                z_p: z,
                c_p: c,
                p_one_minus_zp: p64 * (1.0 - z),
                cp_over_p: c / p64,
                transform_bound: (2.0 * (p64 * p64 - p64)).sqrt(),
                subordinate_bound: ((p64 * p64 - p64) / 2.0).sqrt(),
            })
        })
        .collect()
}
