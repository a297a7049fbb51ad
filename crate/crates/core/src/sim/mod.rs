//! Monte-Carlo simulation of constrained martingale pairs on the 2-D
//! Brownian filtration.

mod frame;
mod mc;
mod strategy;

pub use frame::{ab_transform, IncrementFrame, FRAME_TOL};
pub use mc::{run_mc, McConfig, PathEstimate};
pub use strategy::{
    ab_half, ab_raw, by_name, constrained_library, fixed_rotation, greedy, identity,
    reflected_drift, spiral, GreedyStrategy, PairState, RotationStrategy, StepContext, Strategy,
    STRATEGY_NAMES,
};
