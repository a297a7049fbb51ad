//! Scalar abstraction for the numeric core.
//!
//! Everything upstream of the Monte-Carlo engine is generic over [`Real`], so
//! the same series, integrators and verification grids run in `f32` or `f64`.
//! Concrete aliases for the common `f64` instantiation live at the crate root.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Lift an `f64` literal into the scalar type.
    ///
    /// Underflowing literals map to zero, which is the right behaviour for the
    /// tolerance constants this is used for.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal convertible to scalar")
    }

    /// Lossy view as `f64`, for reports and diagnostics.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_index(n: usize) -> Self {
        Self::from_usize(n).expect("usize convertible to scalar")
    }

    fn half(self) -> Self {
        self / Self::of(2.0)
    }
}

impl Real for f32 {}
impl Real for f64 {}
