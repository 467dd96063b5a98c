use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An exact field usable by the elimination routines.
///
/// Every routine in this crate decides equalities exactly, so the trait is
/// only implemented for exact rational types.
pub trait Field:
    Clone + PartialEq + Debug + Display + FromStr + Num + std::ops::Neg<Output = Self> + Send + Sync
{
    /// Ordering key used to pick elimination pivots; larger keys are preferred.
    type PivotKey: Ord;

    fn pivot_key(&self) -> Self::PivotKey;

    fn from_i64(v: i64) -> Self;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Signed + Debug + Display + FromStr + From<i64> + Send + Sync,
{
    type PivotKey = std::cmp::Reverse<T>;

    /// Entries of small height `max(|p|, q)` are preferred, which keeps
    /// intermediate fractions short.
    fn pivot_key(&self) -> Self::PivotKey {
        let (n, d) = (self.numer().abs(), self.denom().clone());
        std::cmp::Reverse(if n > d { n } else { d })
    }

    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from(v))
    }
}
