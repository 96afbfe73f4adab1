//! Brute-force finite-model checking for the exact infon algebra.
//!
//! Seventeen algebraic properties are checked over an enumerated domain of
//! atoms (orders `2..=max_order`, values up to a denominator bound).
//! Case spaces below the budget are enumerated exhaustively; larger ones
//! are sampled deterministically from a seed. Reports serialize to stable
//! JSON lines, and every recorded counterexample can be replayed through
//! the same code that found it.
//!
//! ```
//! use infon_checker::{check_property, CheckConfig, PropertyId, Verdict};
//!
//! let config = CheckConfig { max_order: 4, ..CheckConfig::default() };
//! let report = check_property(&config, PropertyId::CommutativityAdd).unwrap();
//! assert_eq!(report.verdict, Verdict::Holds);
//! ```

mod config;
mod domain;
mod properties;
mod report;

pub use config::{CheckConfig, CheckError, PropertyId};
pub use domain::{enumerate_atoms, order_values, AtomDescriptor};
pub use properties::{check_property, replay, run_all};
pub use report::{Counterexample, PropertyReport, Report, Verdict};
