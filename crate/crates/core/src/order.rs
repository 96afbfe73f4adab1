//! Orders: the size of the possibility space an infon selects from.
//!
//! An order is either a finite positive extent (exact rational, usually a
//! positive integer) or unbounded. Finite extents below 1 are rejected at
//! construction; the only sub-unit extents in the system live transiently
//! inside multiplicative-inverse bookkeeping and never surface as atom
//! orders.

use std::fmt;

use num_traits::One;

use crate::error::{AlgebraError, Result};
use crate::scalar::{from_u8, Int, Rational};

/// Order of an infon: finite extent or unbounded.
///
/// Ordering: finite extents compare by value and every finite order sorts
/// before `Unbounded`, which the derived implementation provides because the
/// `Finite` variant is declared first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order<T: Int> {
    /// Selection from a possibility space of the given extent (≥ 1).
    Finite(Rational<T>),
    /// No finite possibility space: plain (non-modular) arithmetic applies.
    Unbounded,
}

impl<T: Int> Order<T> {
    /// Finite order with validation: the extent must be at least 1.
    pub fn finite(extent: Rational<T>) -> Result<Self> {
        if extent < Rational::one() {
            return Err(AlgebraError::InvalidOrder {
                extent: crate::render::ratio_string(&extent),
            });
        }
        Ok(Order::Finite(extent))
    }

    /// Finite order from an integer extent (≥ 1).
    pub fn from_extent(extent: T) -> Result<Self> {
        Self::finite(Rational::from_integer(extent))
    }

    /// Finite order bypassing the extent check. Reserved for internal
    /// bookkeeping of inverse factors, where extents like 1/20 are
    /// legitimate intermediate states.
    pub(crate) fn finite_unchecked(extent: Rational<T>) -> Self {
        Order::Finite(extent)
    }

    /// The extent, if finite.
    pub fn extent(&self) -> Option<&Rational<T>> {
        match self {
            Order::Finite(e) => Some(e),
            Order::Unbounded => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }

    /// True for finite orders whose extent is a whole number — the orders on
    /// which evolution steps are defined.
    pub fn is_integral(&self) -> bool {
        match self {
            Order::Finite(e) => e.is_integer(),
            Order::Unbounded => false,
        }
    }

    /// True when the extent is exactly 1: the degenerate "no information"
    /// possibility space shared by the null infon.
    pub fn is_unit(&self) -> bool {
        match self {
            Order::Finite(e) => e.is_one(),
            Order::Unbounded => false,
        }
    }

}

/// Information measure of an order in bits: log2 of the extent.
///
/// This is the one operation in the crate that leaves exact arithmetic.
/// Powers of two (including of the numerator and denominator separately)
/// contribute exactly; odd residual factors go through one `f64` logarithm.
///
/// Errors with [`AlgebraError::UnboundedOrder`] for unbounded orders.
pub fn order_to_bits<T: Int>(order: &Order<T>) -> Result<f64> {
    match order {
        Order::Unbounded => Err(AlgebraError::UnboundedOrder),
        Order::Finite(e) => Ok(log2_int(e.numer()) - log2_int(e.denom())),
    }
}

/// log2 of a positive integer scalar, exact when the value is a power of two.
fn log2_int<T: Int>(v: &T) -> f64 {
    debug_assert!(v.is_positive(), "extents are positive by construction");
    let two = from_u8::<T>(2);
    let mut odd = v.clone();
    let mut twos = 0u32;
    while odd.is_even() && !odd.is_zero() {
        odd = odd / two.clone();
        twos += 1;
    }
    let residue = if odd.is_one() {
        0.0
    } else {
        odd.to_f64().unwrap_or(f64::INFINITY).log2()
    };
    f64::from(twos) + residue
}

impl<T: Int> fmt::Display for Order<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(e) => write!(f, "{}", crate::render::ratio_string(e)),
            Order::Unbounded => write!(f, "unbounded"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational64;

    #[test]
    fn rejects_sub_unit_extents() {
        assert!(matches!(
            Order::finite(Rational64::new(1, 2)),
            Err(AlgebraError::InvalidOrder { .. })
        ));
        assert!(matches!(
            Order::from_extent(0i64),
            Err(AlgebraError::InvalidOrder { .. })
        ));
        assert!(Order::from_extent(1i64).is_ok());
    }

    #[test]
    fn bits_of_powers_of_two_are_exact() {
        for k in 0..=20u32 {
            let o = Order::from_extent(1i64 << k).unwrap();
            assert_eq!(order_to_bits(&o).unwrap(), f64::from(k));
        }
    }

    #[test]
    fn bits_of_non_powers_match_f64_log() {
        let o = Order::from_extent(20i64).unwrap();
        let bits = order_to_bits(&o).unwrap();
        assert!((bits - 20f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn unbounded_has_no_bit_measure() {
        assert_eq!(
            order_to_bits::<i64>(&Order::Unbounded),
            Err(AlgebraError::UnboundedOrder)
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(Order::from_extent(4i64).unwrap().to_string(), "4");
        assert_eq!(
            Order::Finite(Rational64::new(5, 2)).to_string(),
            "5/2"
        );
        assert_eq!(Order::<i64>::Unbounded.to_string(), "unbounded");
    }
}
