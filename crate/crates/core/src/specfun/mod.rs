//! Special functions: Legendre solutions of real degree, exact Legendre
//! polynomials, and the Bessel function J₀.

mod bessel;
mod legendre;
mod rodrigues;

pub use bessel::{bessel_j0, bessel_j0_jet, find_first_j0_zero};
pub use legendre::{
    alpha_from_p, legendre_f1_ode_oracle, Jet, LegendreSolution, SecondSolution, SeriesEvalReport,
};
pub use rodrigues::{rodrigues_polynomial, RationalPoly, MAX_RODRIGUES_DEGREE};
