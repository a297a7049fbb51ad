//! Legendre functions of real degree about the regular singular point s = 1.
//!
//! For p = α(α+1) the equation (1−s²)y″ − 2s y′ + p y = 0 has a solution
//! bounded at s = 1, normalised here to f₁(1) = 1, with power series
//!
//! ```text
//! f₁(s) = Σ aₙ (s−1)ⁿ,   a₀ = 1,   aₙ = aₙ₋₁ · (p − n(n−1)) / (2n²)
//! ```
//!
//! convergent for s ∈ (−1, 1]. The series is summed with compensated
//! accumulation and used directly for s ≥ −1/2, where the term ratio is at
//! most 3/4; further left the solution is continued by integrating the ODE
//! from an anchor inside the trust region. For integer α the series
//! terminates and the polynomial is used on the whole interval.
//!
//! The second, log-singular solution f₂ is fixed by reduction of order from a
//! base point b in the zero-free interval next to 1:
//!
//! ```text
//! f₂(s) = 2 f₁(s) ∫_b^s du / ((1−u²) f₁(u)²)
//! ```
//!
//! so that f₂(b) = 0, f₂′(b) = 2/((1−b²) f₁(b)), the Wronskian is
//! f₂′f₁ − f₁′f₂ = 2/(1−s²), and f₂(s)/log(1/(1−s)) → 1 as s → 1. Evaluation
//! integrates the (regular) ODE itself, which stays valid across zeros of f₁
//! where the quadrature form breaks down; the quadrature form is kept as an
//! independent cross-check on zero-free intervals.

use serde_json::json;

use crate::compensated::CompensatedSum;
use crate::error::{Error, Result};
use crate::ode::{integrate, OdeOptions};
use crate::quad::adaptive_simpson;
use crate::real::Real;

/// Value and first two derivatives at a point.
#[derive(Clone, Copy, Debug)]
pub struct Jet<R> {
    pub value: R,
    pub d1: R,
    pub d2: R,
}

/// Outcome of a truncated series evaluation.
#[derive(Clone, Copy, Debug)]
pub struct SeriesEvalReport<R> {
    pub value: R,
    pub terms_used: usize,
    pub est_trunc_error: R,
}

/// Map p ≥ 2 to the degree α ≥ 1 with α(α+1) = p.
pub fn alpha_from_p<R: Real>(p: R) -> Result<R> {
    if !(p >= R::of(2.0)) {
        return Err(Error::ExponentOutOfRange(p.as_f64()));
    }
    Ok(((R::one() + R::of(4.0) * p).sqrt() - R::one()).half())
}

/// Series trust region: the term ratio |s−1|/2 stays ≤ 3/4 here.
const SERIES_TRUST_MIN: f64 = -0.5;
/// Anchor for ODE continuation below the trust region.
const CONTINUATION_ANCHOR: f64 = -0.25;
/// Hard cap on series terms.
const MAX_TERMS: usize = 10_000;
/// Default minimal distance kept from the singular endpoints ±1.
const RADIUS_GUARD: f64 = 1e-6;

fn default_trunc_tol<R: Real>() -> R {
    R::of(1e-14).max(R::epsilon() * R::of(64.0))
}

/// The bounded solution f₁ for a fixed degree, with its series coefficients.
#[derive(Clone, Debug)]
pub struct LegendreSolution<R: Real> {
    alpha: R,
    p: R,
    coeffs: Vec<R>,
    /// Degree of the terminating polynomial when α is an integer.
    exact_degree: Option<usize>,
    /// True when coefficient generation hit the hard term cap instead of the
    /// natural tail cutoff; evaluation must then prove convergence itself.
    capped: bool,
    trunc_tol: R,
    radius_guard: R,
}

impl<R: Real> LegendreSolution<R> {
    pub fn new(alpha: R) -> Result<Self> {
        Self::with_tolerance(alpha, default_trunc_tol::<R>())
    }

    pub fn from_p(p: R) -> Result<Self> {
        Self::new(alpha_from_p(p)?)
    }

    pub fn with_tolerance(alpha: R, trunc_tol: R) -> Result<Self> {
        if !(alpha >= R::one()) || !alpha.is_finite() {
            return Err(Error::DegreeOutOfRange(alpha.as_f64()));
        }
        if !(trunc_tol > R::zero()) {
            return Err(Error::NonFinite("trunc_tol must be positive".into()));
        }
        let p = alpha * (alpha + R::one());
        let mut coeffs = vec![R::one()];
        let mut a = R::one();
        let mut exact_degree = None;
        let mut capped = true;
        // Bound on the worst-case term magnitude over the trust region,
        // tracked in f64 so the cutoff works for any scalar type.
        let mut trust_pow = 1.0f64;
        for n in 1..=MAX_TERMS {
            let nf = R::from_index(n);
            a = a * (p - nf * (nf - R::one())) / (R::of(2.0) * nf * nf);
            if !a.is_finite() {
                return Err(Error::SeriesOverflow(p.as_f64()));
            }
            if a == R::zero() {
                exact_degree = Some(n - 1);
                capped = false;
                break;
            }
            coeffs.push(a);
            trust_pow = (trust_pow * 1.5).min(1e300);
            if n >= 20 && a.as_f64().abs() * trust_pow <= 1e-30 {
                capped = false;
                break;
            }
        }
        Ok(Self {
            alpha,
            p,
            coeffs,
            exact_degree,
            capped,
            trunc_tol,
            radius_guard: R::of(RADIUS_GUARD),
        })
    }

    pub fn alpha(&self) -> R {
        self.alpha
    }

    pub fn p(&self) -> R {
        self.p
    }

    pub fn trunc_tol(&self) -> R {
        self.trunc_tol
    }

    pub fn radius_guard(&self) -> R {
        self.radius_guard
    }

    /// Series coefficient aₙ (zero beyond the stored range).
    pub fn coefficient(&self, n: usize) -> R {
        self.coeffs.get(n).copied().unwrap_or_else(R::zero)
    }

    pub fn coefficients(&self) -> &[R] {
        &self.coeffs
    }

    /// True when α is an integer and the series terminates.
    pub fn is_polynomial(&self) -> bool {
        self.exact_degree.is_some()
    }

    pub fn polynomial_degree(&self) -> Option<usize> {
        self.exact_degree
    }

    /// Debug dump of the coefficients as `[{"n": .., "a_n": ..}, ..]`.
    pub fn coefficients_json(&self) -> serde_json::Value {
        json!(self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, a)| json!({"n": n, "a_n": a.as_f64()}))
            .collect::<Vec<_>>())
    }

    fn check_domain(&self, s: R) -> Result<()> {
        if !(s > -R::one() + self.radius_guard && s <= R::one()) {
            return Err(Error::ArgumentOutOfDomain(
                s.as_f64(),
                "(-1 + radius_guard, 1]",
            ));
        }
        Ok(())
    }

    fn in_trust_region(&self, s: R) -> bool {
        self.is_polynomial() || s >= R::of(SERIES_TRUST_MIN)
    }

    /// Sum the series for f₁ and its first two derivatives term by term.
    ///
    /// Stops once three consecutive terms of every order fall below
    /// `trunc_tol` times the corresponding partial sum. Valid for any
    /// s ∈ (−1, 1]; convergence slows near −1. The second derivative here is
    /// the differentiated series itself, not the ODE identity, so it can act
    /// as an independent residual oracle.
    pub fn f1_jet_series(&self, s: R) -> Result<(Jet<R>, SeriesEvalReport<R>)> {
        if !(s > -R::one() && s <= R::one()) {
            return Err(Error::ArgumentOutOfDomain(s.as_f64(), "(-1, 1]"));
        }
        let t = s - R::one();
        let mut v = CompensatedSum::<R>::new();
        let mut d1 = CompensatedSum::<R>::new();
        let mut d2 = CompensatedSum::<R>::new();
        let mut small_streak = 0usize;
        let mut terms_used = 1usize;
        let mut last_term = R::one();
        let mut prev_term = R::zero();
        v.add(self.coeffs[0]);
        if self.coeffs.len() > 1 {
            let a1 = self.coeffs[1];
            v.add(a1 * t);
            d1.add(a1);
            terms_used = 2;
            prev_term = last_term;
            last_term = a1 * t;
        }
        // t^{n-2}, carried across iterations for n >= 2.
        let mut tp2 = R::one();
        for n in 2..self.coeffs.len() {
            let a = self.coeffs[n];
            let nf = R::from_index(n);
            let t1 = tp2 * t;
            let t0 = t1 * t;
            let term_v = a * t0;
            let term_d1 = nf * a * t1;
            let term_d2 = nf * (nf - R::one()) * a * tp2;
            v.add(term_v);
            d1.add(term_d1);
            d2.add(term_d2);
            terms_used = n + 1;
            prev_term = last_term;
            last_term = term_v;
            tp2 = t1;
            // Stop an extra factor of 8 below the requested tolerance so the
            // reported geometric tail bound itself stays within trunc_tol.
            let ok = |term: R, sum: R| term.abs() <= self.trunc_tol * sum.abs() / R::of(8.0);
            if ok(term_v, v.value()) && ok(term_d1, d1.value()) && ok(term_d2, d2.value()) {
                small_streak += 1;
                if small_streak >= 3 {
                    break;
                }
            } else {
                small_streak = 0;
            }
        }
        if small_streak < 3 && self.capped {
            return Err(Error::SeriesNotConverged {
                max_terms: MAX_TERMS,
                tol: self.trunc_tol.as_f64(),
            });
        }
        let ratio_floor = (R::one() - s).abs().half();
        let observed = if prev_term != R::zero() {
            (last_term / prev_term).abs()
        } else {
            R::zero()
        };
        let r = observed.max(ratio_floor).min(R::of(0.96));
        let est = if self.exact_degree.is_some() && terms_used > self.exact_degree.unwrap() {
            R::zero()
        } else {
            last_term.abs() * r / (R::one() - r)
        };
        let jet = Jet {
            value: v.value(),
            d1: d1.value(),
            d2: d2.value(),
        };
        let report = SeriesEvalReport {
            value: jet.value,
            terms_used,
            est_trunc_error: est,
        };
        Ok((jet, report))
    }

    /// f₁(s) together with the truncation report.
    pub fn f1_report(&self, s: R) -> Result<SeriesEvalReport<R>> {
        self.check_domain(s)?;
        if self.in_trust_region(s) {
            let (_, report) = self.f1_jet_series(s)?;
            Ok(report)
        } else {
            let jet = self.continue_left(s)?;
            // Continuation accuracy is set by the ODE tolerance, not the
            // series tail; the bound reported here is the integrator's.
            Ok(SeriesEvalReport {
                value: jet.value,
                terms_used: 0,
                est_trunc_error: R::of(1e-12) * (R::one() + jet.value.abs()),
            })
        }
    }

    /// The bounded solution f₁(s), s ∈ (−1, 1].
    pub fn f1(&self, s: R) -> Result<R> {
        Ok(self.f1_jet(s)?.value)
    }

    /// f₁ with derivatives: the series (or ODE continuation) supplies the
    /// value and slope; the curvature comes from the ODE identity
    /// f₁″ = (2s f₁′ − p f₁)/(1−s²) for |s| < 1 and from the closed endpoint
    /// formulas f₁′(1) = p/2, f₁″(1) = p(p−2)/8 at s = 1.
    pub fn f1_jet(&self, s: R) -> Result<Jet<R>> {
        self.check_domain(s)?;
        if s == R::one() {
            return Ok(Jet {
                value: R::one(),
                d1: self.p.half(),
                d2: self.p * (self.p - R::of(2.0)) / R::of(8.0),
            });
        }
        let (value, d1) = if self.in_trust_region(s) {
            let (jet, _) = self.f1_jet_series(s)?;
            (jet.value, jet.d1)
        } else {
            let jet = self.continue_left(s)?;
            (jet.value, jet.d1)
        };
        let d2 = (R::of(2.0) * s * d1 - self.p * value) / (R::one() - s * s);
        Ok(Jet { value, d1, d2 })
    }

    /// Continue f₁ below the series trust region by integrating the ODE
    /// leftward from an anchor inside it.
    fn continue_left(&self, s_target: R) -> Result<Jet<R>> {
        let anchor = R::of(CONTINUATION_ANCHOR);
        let (jet, _) = self.f1_jet_series(anchor)?;
        let p = self.p;
        let y = integrate(
            move |s, y: &[R; 2]| legendre_rhs(p, s, y),
            anchor,
            [jet.value, jet.d1],
            s_target,
            &continuation_opts::<R>(),
        )?;
        Ok(Jet {
            value: y[0],
            d1: y[1],
            d2: R::zero(),
        })
    }

    /// Independent oracle: start from s₀ = 1 − delta with series initial data
    /// (a few terms suffice there) and integrate the ODE to `s_target`.
    pub fn f1_ode_oracle(&self, s_target: R, delta: R) -> Result<R> {
        if !(delta > R::zero() && delta < R::one()) {
            return Err(Error::ArgumentOutOfDomain(delta.as_f64(), "(0, 1)"));
        }
        self.check_domain(s_target)?;
        if s_target >= R::one() {
            return Err(Error::ArgumentOutOfDomain(s_target.as_f64(), "(-1, 1)"));
        }
        let s0 = R::one() - delta;
        let (jet, _) = self.f1_jet_series(s0)?;
        let p = self.p;
        let y = integrate(
            move |s, y: &[R; 2]| legendre_rhs(p, s, y),
            s0,
            [jet.value, jet.d1],
            s_target,
            &continuation_opts::<R>(),
        )?;
        Ok(y[0])
    }

    /// Second solution anchored in the zero-free interval next to s = 1.
    ///
    /// `base` must satisfy f₁(base) ≠ 0; the canonical choice downstream is
    /// the midpoint of (z_p, 1).
    pub fn second_solution(&self, base: R) -> Result<SecondSolution<R>> {
        SecondSolution::new(self, base)
    }
}

fn legendre_rhs<R: Real>(p: R, s: R, y: &[R; 2]) -> [R; 2] {
    [y[1], (R::of(2.0) * s * y[1] - p * y[0]) / (R::one() - s * s)]
}

fn continuation_opts<R: Real>() -> OdeOptions<R> {
    OdeOptions {
        rtol: R::of(1e-13).max(R::epsilon() * R::of(16.0)),
        atol: R::of(1e-15).max(R::epsilon() * R::of(2.0)),
        max_steps: 2_000_000,
        first_step: None,
    }
}

/// Free-function form of the ODE oracle, mirroring the operation contract.
pub fn legendre_f1_ode_oracle<R: Real>(alpha: R, s_target: R, step: R) -> Result<R> {
    LegendreSolution::new(alpha)?.f1_ode_oracle(s_target, step)
}

/// The log-singular companion solution, normalised so that
/// f₂(s)/log(1/(1−s)) → 1 as s → 1 and W = f₂′f₁ − f₁′f₂ = 2/(1−s²).
#[derive(Clone, Debug)]
pub struct SecondSolution<R: Real> {
    sol: LegendreSolution<R>,
    base: R,
    slope_at_base: R,
}

impl<R: Real> SecondSolution<R> {
    fn new(sol: &LegendreSolution<R>, base: R) -> Result<Self> {
        if !(base.abs() < R::one() - sol.radius_guard) {
            return Err(Error::ArgumentOutOfDomain(
                base.as_f64(),
                "(-1 + radius_guard, 1 - radius_guard)",
            ));
        }
        let f1b = sol.f1(base)?;
        if f1b == R::zero() {
            return Err(Error::QuadratureThroughZero(base.as_f64(), base.as_f64()));
        }
        let slope_at_base = R::of(2.0) / ((R::one() - base * base) * f1b);
        Ok(Self {
            sol: sol.clone(),
            base,
            slope_at_base,
        })
    }

    pub fn base(&self) -> R {
        self.base
    }

    /// f₂(s) and f₂′(s) by integrating the ODE from the base point; valid on
    /// the whole guarded interval, including across zeros of f₁.
    pub fn jet(&self, s: R) -> Result<(R, R)> {
        let guard = self.sol.radius_guard;
        if !(s.abs() <= R::one() - guard) {
            return Err(Error::ArgumentOutOfDomain(
                s.as_f64(),
                "[-1 + radius_guard, 1 - radius_guard]",
            ));
        }
        let p = self.sol.p();
        let y = integrate(
            move |t, y: &[R; 2]| legendre_rhs(p, t, y),
            self.base,
            [R::zero(), self.slope_at_base],
            s,
            &continuation_opts::<R>(),
        )?;
        Ok((y[0], y[1]))
    }

    pub fn value(&self, s: R) -> Result<R> {
        Ok(self.jet(s)?.0)
    }

    /// Evaluate on a grid in one ODE sweep per direction.
    ///
    /// `points` must be sorted ascending; returns (f₂, f₂′) per point.
    pub fn jets_on_grid(&self, points: &[R]) -> Result<Vec<(R, R)>> {
        let guard = self.sol.radius_guard;
        for &s in points {
            if !(s.abs() <= R::one() - guard) {
                return Err(Error::ArgumentOutOfDomain(
                    s.as_f64(),
                    "[-1 + radius_guard, 1 - radius_guard]",
                ));
            }
        }
        let p = self.sol.p();
        let rhs = move |t: R, y: &[R; 2]| legendre_rhs(p, t, y);
        let opts = continuation_opts::<R>();
        let mut out = vec![(R::zero(), R::zero()); points.len()];
        let split = points.partition_point(|&s| s < self.base);
        // Leftward sweep, descending targets.
        let mut state = [R::zero(), self.slope_at_base];
        let mut from = self.base;
        for i in (0..split).rev() {
            state = integrate(rhs, from, state, points[i], &opts)?;
            from = points[i];
            out[i] = (state[0], state[1]);
        }
        // Rightward sweep, ascending targets.
        let mut state = [R::zero(), self.slope_at_base];
        let mut from = self.base;
        for i in split..points.len() {
            state = integrate(rhs, from, state, points[i], &opts)?;
            from = points[i];
            out[i] = (state[0], state[1]);
        }
        Ok(out)
    }

    /// Reduction-of-order quadrature form 2 f₁(s) ∫_base^s du/((1−u²) f₁(u)²).
    ///
    /// Only valid when f₁ keeps one sign between the base point and `s`;
    /// an interval through a zero of f₁ is rejected. Kept as an independent
    /// cross-check of [`SecondSolution::jet`].
    pub fn value_by_quadrature(&self, s: R) -> Result<R> {
        let guard = self.sol.radius_guard;
        if !(s.abs() <= R::one() - guard) {
            return Err(Error::ArgumentOutOfDomain(
                s.as_f64(),
                "[-1 + radius_guard, 1 - radius_guard]",
            ));
        }
        let (lo, hi) = if s < self.base { (s, self.base) } else { (self.base, s) };
        let sign = self.sol.f1(self.base)?.signum();
        let n_scan = 64;
        for i in 0..=n_scan {
            let u = lo + (hi - lo) * R::from_index(i) / R::from_index(n_scan);
            let f = self.sol.f1(u)?;
            if f == R::zero() || f.signum() != sign {
                return Err(Error::QuadratureThroughZero(lo.as_f64(), hi.as_f64()));
            }
        }
        let sol = &self.sol;
        let integral = adaptive_simpson(
            |u| {
                let f = sol.f1(u)?;
                if f == R::zero() {
                    return Err(Error::QuadratureThroughZero(u.as_f64(), u.as_f64()));
                }
                Ok(R::one() / ((R::one() - u * u) * f * f))
            },
            self.base,
            s,
            R::of(1e-13).max(R::epsilon() * R::of(8.0)),
        )?;
        Ok(R::of(2.0) * self.sol.f1(s)? * integral)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_round_trips() {
        for &p in &[2.0, 6.0, 12.0, 7.5, 30.0, 1e4] {
            let a: f64 = alpha_from_p(p).unwrap();
            assert!((a * (a + 1.0) - p).abs() <= 1e-10 * p);
        }
        assert_eq!(alpha_from_p(2.0f64).unwrap(), 1.0);
        assert_eq!(alpha_from_p(6.0f64).unwrap(), 2.0);
        assert_eq!(alpha_from_p(12.0f64).unwrap(), 3.0);
        assert!(alpha_from_p(1.5f64).is_err());
    }

    #[test]
    fn coefficient_recursion_matches_closed_form() {
        // a1 = p/2, a2 = -p(2-p)/16, a3 = p(2-p)(6-p)/288 for generic p.
        let p = 7.5f64;
        let sol = LegendreSolution::from_p(p).unwrap();
        assert_eq!(sol.coefficient(0), 1.0);
        assert!((sol.coefficient(1) - p / 2.0).abs() < 1e-15);
        assert!((sol.coefficient(2) - -p * (2.0 - p) / 16.0).abs() < 1e-14);
        assert!((sol.coefficient(3) - p * (2.0 - p) * (6.0 - p) / 288.0).abs() < 1e-14);
    }

    #[test]
    fn integer_degree_terminates() {
        let sol = LegendreSolution::<f64>::new(2.0).unwrap();
        assert_eq!(sol.polynomial_degree(), Some(2));
        // L2(s) = (3s^2 - 1)/2.
        let v = sol.f1(0.5).unwrap();
        assert!((v - -0.125).abs() < 1e-15);
    }

    #[test]
    fn alpha_one_is_identity() {
        let sol = LegendreSolution::<f64>::new(1.0).unwrap();
        for &s in &[-0.9, -0.5, 0.0, 0.3, 1.0] {
            assert!((sol.f1(s).unwrap() - s).abs() < 1e-15);
        }
    }

    #[test]
    fn value_at_one_is_exact() {
        for &p in &[2.0, 6.0, 7.5, 30.0] {
            let sol = LegendreSolution::from_p(p).unwrap();
            assert_eq!(sol.f1(1.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn endpoint_derivatives_match_closed_formulas() {
        for &p in &[2.5f64, 6.0, 7.5, 12.0, 30.0] {
            let sol = LegendreSolution::from_p(p).unwrap();
            let jet = sol.f1_jet(1.0).unwrap();
            assert!((jet.d1 - p / 2.0).abs() < 1e-13 * (1.0 + p));
            assert!((jet.d2 - p * (p - 2.0) / 8.0).abs() < 1e-13 * (1.0 + p * p));
            // The termwise series reproduces the same endpoint values.
            let (series, _) = sol.f1_jet_series(1.0).unwrap();
            assert!((series.d1 - p / 2.0).abs() < 1e-12);
            assert!((series.d2 - p * (p - 2.0) / 8.0).abs() < 1e-11);
        }
    }

    #[test]
    fn report_truncation_bound_is_met() {
        let sol = LegendreSolution::<f64>::from_p(7.5).unwrap();
        for &s in &[-0.4, 0.0, 0.6, 0.999, 1.0] {
            let r = sol.f1_report(s).unwrap();
            assert!(r.est_trunc_error <= sol.trunc_tol());
            assert!(r.terms_used >= 1);
        }
    }

    #[test]
    fn continuation_matches_polynomial_far_left() {
        // alpha = 3: f1 = (5s^3 - 3s)/2 everywhere; force the ODE path by a
        // non-integer degree nearby and compare against the direct series.
        let sol = LegendreSolution::<f64>::new(3.0).unwrap();
        let exact = |s: f64| (5.0 * s * s * s - 3.0 * s) / 2.0;
        for &s in &[-0.95, -0.8, -0.6] {
            assert!((sol.f1(s).unwrap() - exact(s)).abs() < 1e-13);
        }
        let sol = LegendreSolution::<f64>::new(2.7).unwrap();
        for &s in &[-0.9, -0.7, -0.55] {
            let via_ode = sol.f1(s).unwrap();
            let (direct, _) = sol.f1_jet_series(s).unwrap();
            assert!((via_ode - direct.value).abs() < 1e-10);
        }
    }

    #[test]
    fn ode_oracle_hits_known_zero() {
        let sol = LegendreSolution::<f64>::new(2.0).unwrap();
        let z = 1.0 / 3.0f64.sqrt();
        assert!(sol.f1_ode_oracle(z, 1e-3).unwrap().abs() < 1e-9);
        let sol1 = LegendreSolution::<f64>::new(1.0).unwrap();
        assert!((sol1.f1_ode_oracle(-0.5, 1e-3).unwrap() - -0.5).abs() < 1e-9);
    }

    #[test]
    fn second_solution_wronskian_identity() {
        // W = f2' f1 - f1' f2 = 2/(1-s^2) for any degree and base point.
        for &p in &[6.0f64, 7.5] {
            let sol = LegendreSolution::from_p(p).unwrap();
            let f2 = sol.second_solution(0.8).unwrap();
            for &s in &[-0.9, -0.3, 0.2, 0.9, 0.999] {
                let j1 = sol.f1_jet(s).unwrap();
                let (v2, d2) = f2.jet(s).unwrap();
                let w = d2 * j1.value - j1.d1 * v2;
                let expect = 2.0 / (1.0 - s * s);
                assert!(
                    (w - expect).abs() < 1e-7 * expect.abs(),
                    "p={p} s={s}: W={w} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn second_solution_quadrature_cross_check() {
        let sol = LegendreSolution::<f64>::from_p(6.0).unwrap();
        let z = 1.0 / 3.0f64.sqrt();
        let base = (z + 1.0) / 2.0;
        let f2 = sol.second_solution(base).unwrap();
        for &s in &[z + 0.02, 0.85, 0.95, 0.99] {
            let ode = f2.value(s).unwrap();
            let quad = f2.value_by_quadrature(s).unwrap();
            assert!((ode - quad).abs() < 1e-8 * (1.0 + ode.abs()), "s={s}: {ode} vs {quad}");
        }
        // Crossing the zero of f1 is rejected by the quadrature form...
        assert!(matches!(
            f2.value_by_quadrature(z - 0.1),
            Err(Error::QuadratureThroughZero(..))
        ));
        // ...but fine for the ODE form.
        assert!(f2.value(z - 0.1).unwrap().is_finite());
    }

    #[test]
    fn second_solution_log_singularity() {
        let sol = LegendreSolution::<f64>::from_p(6.0).unwrap();
        let f2 = sol.second_solution(0.8).unwrap();
        let mut prev_gap = f64::INFINITY;
        for &eps in &[1e-3, 1e-4, 1e-5] {
            let ratio = f2.value(1.0 - eps).unwrap() / (1.0 / eps).ln();
            let gap = (ratio - 1.0).abs();
            assert!(gap < prev_gap, "eps={eps}: ratio={ratio}, prev gap {prev_gap}");
            prev_gap = gap;
        }
        assert!(prev_gap < 0.05);
    }

    #[test]
    fn grid_sweep_matches_pointwise() {
        let sol = LegendreSolution::<f64>::from_p(7.5).unwrap();
        let f2 = sol.second_solution(0.8).unwrap();
        let grid: Vec<f64> = (0..40).map(|i| -0.9 + 1.85 * i as f64 / 39.0).collect();
        let swept = f2.jets_on_grid(&grid).unwrap();
        for (i, &s) in grid.iter().enumerate() {
            let (v, d) = f2.jet(s).unwrap();
            assert!((swept[i].0 - v).abs() < 1e-8 * (1.0 + v.abs()));
            assert!((swept[i].1 - d).abs() < 1e-7 * (1.0 + d.abs()));
        }
    }

    #[test]
    fn f32_smoke() {
        let sol = LegendreSolution::<f32>::new(2.0).unwrap();
        assert!((sol.f1(0.5f32).unwrap() - -0.125).abs() < 1e-6);
    }
}
