//! Scalar abstraction: the integer type backing every exact rational.
//!
//! All arithmetic in this crate is exact. Values and order extents are
//! `Ratio<T>` for some integer scalar `T`; nothing is ever rounded except the
//! explicit base-2 logarithm in [`crate::order_to_bits`]. The [`Int`] trait
//! collects the bounds the algebra needs so the rest of the crate can stay
//! generic, and a blanket impl picks up `i64`, `i128`, `BigInt`, and anything
//! else that satisfies the bounds.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, NumAssign, Signed, ToPrimitive, Zero};

/// Integer scalar usable as the backing type of the algebra's rationals.
///
/// `FromPrimitive` is used when parsing literals (digit folding) and when
/// lifting small constants; `ToPrimitive` only feeds the one sanctioned
/// float conversion in bit measurement.
pub trait Int:
    Integer
    + Signed
    + NumAssign
    + FromPrimitive
    + ToPrimitive
    + Clone
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Int for T where
    T: Integer
        + Signed
        + NumAssign
        + FromPrimitive
        + ToPrimitive
        + Clone
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Exact rational over the scalar `T`. Construction via `Rational::new`
/// normalizes sign and reduces to lowest terms.
pub type Rational<T> = num_rational::Ratio<T>;

/// The default concrete rational used by the checker and CLI.
pub type Rational64 = Rational<i64>;

/// Shorthand for lifting a small unsigned constant into `T`.
///
/// Panics only if `T` cannot represent the value, which for the blanket
/// integer impls means never for the constants this crate uses (≤ 10).
pub(crate) fn from_u8<T: Int>(v: u8) -> T {
    T::from_u8(v).expect("small constant must fit the scalar type")
}

/// Floored remainder of `v` by a positive modulus `m`: the unique
/// `r ∈ [0, m)` with `v ≡ r (mod m)`. Exact for rationals; used for all
/// wraparound arithmetic on finite orders.
pub(crate) fn rat_mod<T: Int>(v: &Rational<T>, m: &Rational<T>) -> Rational<T> {
    debug_assert!(m > &Rational::zero(), "modulus must be positive");
    let q = (v / m).floor();
    v - m * q
}
