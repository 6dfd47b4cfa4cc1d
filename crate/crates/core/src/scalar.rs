//! Exact scalar field used for path breakpoints and weight coefficients.
//!
//! Every computation in this crate is exact. The [`Scalar`] trait captures the
//! handful of operations the path model needs beyond field arithmetic
//! (ceiling, integrality tests, conversion to machine integers). It is
//! implemented for every `num_rational::Ratio<T>` over a signed integer type,
//! so both `Ratio<i64>` (fast, bounded) and `BigRational` (arbitrary precision)
//! work. The crate root fixes `BigRational` as the default.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + FromStr + Num + Signed + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;

    /// Smallest integer not below `self`.
    fn ceil_i64(&self) -> i64;

    fn is_integral(&self) -> bool;

    /// `Some(n)` when the value is the integer `n`.
    fn to_i64_exact(&self) -> Option<i64>;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + Hash
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static,
{
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer out of range for scalar type"))
    }

    fn ceil_i64(&self) -> i64 {
        self.ceil()
            .to_integer()
            .to_i64()
            .expect("ceiling out of i64 range")
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn check<S: Scalar>() {
        let x = S::from_ratio(-3, 2);
        assert_eq!(x.ceil_i64(), -1);
        assert!(!x.is_integral());
        assert_eq!(S::from_i64(4).to_i64_exact(), Some(4));
        assert_eq!(x.to_i64_exact(), None);
        assert_eq!(S::from_ratio(6, 3), S::from_i64(2));
        assert_eq!(S::from_ratio(1, 3).ceil_i64(), 1);
        assert_eq!(S::from_i64(0).ceil_i64(), 0);
    }

    #[test]
    fn ratio_i64_and_bigrational() {
        check::<Ratio<i64>>();
        check::<BigRational>();
    }

    #[test]
    fn parse_and_display() {
        let x: BigRational = "-7/4".parse().unwrap();
        assert_eq!(x.to_string(), "-7/4");
        let y: BigRational = "3".parse().unwrap();
        assert_eq!(y.to_string(), "3");
    }
}
