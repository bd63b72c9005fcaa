use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar the numerical kernels are generic over (`f32` or `f64`).
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }

    #[inline]
    fn from_count(v: usize) -> Self {
        Self::from_usize(v).expect("count representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("finite scalar")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Distance between two angles taken modulo `π`.
pub fn angle_distance_mod_pi<T: Scalar>(a: T, b: T) -> T {
    let pi = T::PI();
    let mut d = (a - b) % pi;
    if d < T::zero() {
        d = d + pi;
    }
    d.min(pi - d)
}

/// Canonical representative of `theta` in `[0, π)`.
pub fn canonical_theta<T: Scalar>(theta: T) -> T {
    let pi = T::PI();
    let mut t = theta % pi;
    if t < T::zero() {
        t = t + pi;
    }
    if t >= pi {
        t = t - pi;
    }
    t
}

/// Bisection on a bracketing interval `[lo, hi]` with `f(lo)` and `f(hi)` of
/// opposite signs. Runs until the interval can no longer be split in `T`.
pub(crate) fn bisect<T: Scalar>(mut lo: T, mut hi: T, f: impl Fn(T) -> T) -> T {
    let mut f_lo = f(lo);
    let two = T::lit(2.0);
    for _ in 0..256 {
        let mid = lo + (hi - lo) / two;
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == T::zero() {
            return mid;
        }
        if (f_mid < T::zero()) == (f_lo < T::zero()) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    lo + (hi - lo) / two
}
