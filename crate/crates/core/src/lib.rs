//! Sharp L^p comparison constants for pairs of orthogonal martingales, one
//! differentially subordinate to the other.
//!
//! For p ≥ 2 the best constant in ‖W‖_p ≤ c · ‖Z‖_p over such pairs is
//! c_p = (1 + z_p)/(1 − z_p), where z_p is the largest zero of the bounded
//! solution of the Legendre equation (1−s²)y″ − 2s y′ + p y = 0. This crate
//! computes the constant, builds the one-dimensional certificate behind it,
//! certifies every inequality the certificate must satisfy, and validates the
//! bound by seeded Monte-Carlo simulation of constrained martingale pairs.
//!
//! Layers, bottom to top:
//! * [`specfun`] — Legendre solutions of real degree (series about s = 1 with
//!   ODE continuation), the log-singular companion solution, exact Legendre
//!   polynomials, and J₀ with its first zero.
//! * [`sharp`] — z_p, c_p, touching amplitudes, inflection points, asymptotic
//!   tables, and the supporting monotonicity/convexity checks.
//! * [`bellman`] — the piecewise certificate g_p, the operators D, K, D̃, and
//!   grid verification of the differential and quadratic-form inequalities.
//! * [`sim`] — reproducible Monte-Carlo estimation of ‖W‖_p/‖Z‖_p for
//!   constraint-satisfying strategies on a 2-D Brownian filtration.
//!
//! The numeric core is generic over the scalar type via [`real::Real`];
//! `f64` aliases live at the crate root. The Monte-Carlo engine is `f64`
//! only, since its byte-reproducibility contract is tied to a concrete
//! random stream.

pub mod bellman;
mod compensated;
pub mod error;
pub mod ode;
pub mod quad;
pub mod real;
pub mod roots;
pub mod sharp;
pub mod sim;
pub mod specfun;

pub use error::{Error, Result};
pub use real::Real;

/// f64 instantiations of the generic core.
pub type LegendreSolution64 = specfun::LegendreSolution<f64>;
pub type SecondSolution64 = specfun::SecondSolution<f64>;
pub type Jet64 = specfun::Jet<f64>;
pub type SharpConstants64 = sharp::SharpConstants<f64>;
pub type Obstacle64 = bellman::Obstacle<f64>;
pub type BellmanCandidate64 = bellman::BellmanCandidate<f64>;

/// Cap the global worker pool (no-op if a pool already exists).
///
/// Results never depend on the worker count; this only bounds CPU usage.
pub fn configure_thread_limit(n: usize) {
    if n == 0 {
        return;
    }
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
}
