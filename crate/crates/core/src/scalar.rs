//! The scalar field abstraction.
//!
//! Every algebra in this crate is defined over an exact field of
//! characteristic zero. Identity checks compare residuals against zero with
//! no tolerance, so only exact fraction types implement [`Scalar`].

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact field element.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display + FromStr + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    /// Renders the value as `p/q`, with `q` always present.
    fn to_fraction_string(&self) -> String;

    fn is_negative(&self) -> bool;

    /// Multiplicative inverse, `None` for zero.
    fn checked_recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + FromStr + Display + Debug + Send + Sync + 'static,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer out of range for scalar type"))
    }

    fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Parses `p`, `-p`, or `p/q` into a scalar. Decimals are rejected.
pub fn parse_scalar<S: Scalar>(text: &str) -> Option<S> {
    let text = text.trim();
    if text.is_empty() || text.contains('.') {
        return None;
    }
    let value = text.parse::<S>().ok()?;
    Some(value)
}
