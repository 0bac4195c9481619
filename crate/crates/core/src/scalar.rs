//! Scalar abstraction for all distance kernels.
//!
//! Every algorithm in this crate is generic over a floating-point scalar so
//! that the same code paths serve `f32` and `f64`. Concrete aliases for the
//! common widths live at the crate root.

use core::fmt;
use core::iter::Sum;
use core::ops::AddAssign;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar usable by every kernel in this crate.
///
/// Blanket-implemented; in practice the two instantiations are `f32` and `f64`.
pub trait Scalar:
    Float
    + FromPrimitive
    + AddAssign
    + Sum
    + fmt::Debug
    + fmt::Display
    + fmt::LowerExp
    + Send
    + Sync
    + 'static
{
    /// Converts a count (series length, cluster size, ...) into the scalar domain.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable as scalar")
    }
}

impl<T> Scalar for T where
    T: Float
        + FromPrimitive
        + AddAssign
        + Sum
        + fmt::Debug
        + fmt::Display
        + fmt::LowerExp
        + Send
        + Sync
        + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_count_round_trips_small_integers() {
        assert_eq!(f64::from_count(0), 0.0);
        assert_eq!(f64::from_count(18), 18.0);
        assert_eq!(f32::from_count(2000), 2000.0);
    }
}
