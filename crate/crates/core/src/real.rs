//! Scalar abstraction: all core math is generic over an IEEE float type.

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar the numerical kernels are generic over.
///
/// `f32` satisfies the trait but the tolerances quoted throughout the crate
/// (and pinned by the self-test suite) assume `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    /// Shorthand for converting an `f64` literal into `Self`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    /// Shorthand for converting a `usize` into `Self`.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable in scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Compensated (Kahan) running sum.
///
/// Band values are compared at spacings of a few ulps by the monotonicity
/// checks, so the quadratic-form accumulations must not lose digits to
/// naive summation order.
#[derive(Clone, Copy, Debug)]
pub struct KahanSum<T: Real> {
    sum: T,
    carry: T,
}

impl<T: Real> KahanSum<T> {
    pub fn new() -> Self {
        KahanSum {
            sum: T::zero(),
            carry: T::zero(),
        }
    }

    #[inline]
    pub fn add(&mut self, x: T) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> T {
        self.sum
    }
}

impl<T: Real> Default for KahanSum<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Real> FromIterator<T> for KahanSum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut acc = KahanSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Compensated sum of an iterator.
pub fn ksum<T: Real, I: IntoIterator<Item = T>>(iter: I) -> T {
    iter.into_iter().collect::<KahanSum<T>>().value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_recovers_small_terms() {
        let mut s = KahanSum::new();
        s.add(1.0f64);
        for _ in 0..1000 {
            s.add(1e-18);
        }
        assert!((s.value() - (1.0 + 1e-15)).abs() < 1e-17);
    }

    #[test]
    fn of_roundtrips() {
        assert_eq!(f64::of(0.25), 0.25);
        assert_eq!(f32::of(0.5), 0.5f32);
        assert_eq!(f64::of_usize(41), 41.0);
    }
}
