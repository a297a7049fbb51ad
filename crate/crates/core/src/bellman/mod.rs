//! The one-dimensional certificate behind the sharp constant and its
//! verification: the obstacle, the glued candidate, the operators D, K, D̃,
//! and grid certification of every inequality the candidate must satisfy.

mod candidate;
mod obstacle;
mod operators;
mod verify;

pub use candidate::{BellmanCandidate, Side};
pub use obstacle::Obstacle;
pub use operators::{
    d_op, dtilde_op, k_op, phi_derivatives, PhiDerivatives, QuadFormCoeffs,
};
pub use verify::{
    dump_profile, verify_bundle, verify_constant_override, verify_majorization, verify_phi,
    verify_quadratic_form, verify_supersolution, verify_tangent_separation, BellmanCheck,
    BundleParams, VerifyBundle, VerifyParams,
};
