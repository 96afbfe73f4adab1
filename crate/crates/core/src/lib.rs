//! Exact-arithmetic information objects.
//!
//! An *infon* is a quantity of information: a value selected from a
//! possibility space whose size is the infon's *order*. Atoms carry an
//! identity distinct from their numbers — equal infons need not be the same
//! information — and compose into canonical join trees, multiplicatively
//! across disjoint spaces or additively within one space, with exact
//! rational arithmetic throughout.
//!
//! The crate is generic over the integer scalar behind the rationals (see
//! [`Int`]); [`Infon64`] and [`BigInfon`] are the ready-made
//! instantiations.
//!
//! ```
//! use infon_core::{mul_join, new_atom, Order, Rational64, Universe};
//!
//! let mut u = Universe::new();
//! let a = new_atom(&mut u, Rational64::from_integer(3), Order::from_extent(4).unwrap()).unwrap();
//! let b = new_atom(&mut u, Rational64::from_integer(4), Order::from_extent(5).unwrap()).unwrap();
//! let ab = mul_join(&a, &b).unwrap();
//! assert_eq!(ab.to_string(), "12_20");
//! ```

mod error;
mod evolve;
mod infon;
mod join;
mod order;
mod render;
mod scalar;
mod tag;

pub use error::{AlgebraError, Result};
pub use evolve::{count_closed_evolutions, evolve, trajectory};
pub use infon::{classify, disjoint, intersection, Atom, Infon, Join, JoinClass, Operand};
pub use join::{
    add_inverse, add_join, div_join, identity_element, mul_inverse, mul_join, new_atom,
    null_infon, sub_join, zero_of_order,
};
pub use order::{order_to_bits, Order};
pub use render::{infon_from_literal, parse_infon_literal, parse_number, ratio_string};
pub use scalar::{Int, Rational, Rational64};
pub use tag::{IdentityTag, Universe};

/// The default concrete infon, backed by `i64` rationals.
pub type Infon64 = Infon<i64>;

/// Arbitrary-precision infon for workloads that outgrow `i64` extents.
pub type BigInfon = Infon<num_bigint::BigInt>;
