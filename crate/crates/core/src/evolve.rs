//! Evolution: repeated additive self-transformation of an infon.
//!
//! An evolution step is just an additive join with a fixed step infon of
//! the same (finite, integral) order. Iterating from a start value walks a
//! cycle through the order's possibility space; the cycle closes because
//! step addition is invertible modulo the extent.

use std::collections::HashSet;

use crate::error::{AlgebraError, Result};
use crate::infon::Infon;
use crate::join::add_join;
use crate::scalar::Int;

fn check_evolution_operands<T: Int>(a: &Infon<T>, step: &Infon<T>) -> Result<()> {
    let oa = a.order()?;
    let os = step.order()?;
    if oa != os {
        return Err(AlgebraError::OrderMismatch {
            left: oa.to_string(),
            right: os.to_string(),
        });
    }
    if !oa.is_finite() {
        return Err(AlgebraError::UnboundedOrder);
    }
    if !oa.is_integral() {
        return Err(AlgebraError::InvalidOrder {
            extent: oa.to_string(),
        });
    }
    Ok(())
}

/// One evolution step: `a` advanced by `step` within their common finite
/// integral order.
pub fn evolve<T: Int>(a: &Infon<T>, step: &Infon<T>) -> Result<Infon<T>> {
    check_evolution_operands(a, step)?;
    add_join(a, step)
}

/// The full cycle of `a` under repeated evolution by `step`, starting at
/// `a` and stopping just before the value first returns to `a`'s.
///
/// The cycle length is `o / gcd(s, o)` for integral step value `s` and
/// extent `o`; a zero-valued step yields the one-element cycle `[a]`.
pub fn trajectory<T: Int>(a: &Infon<T>, step: &Infon<T>) -> Result<Vec<Infon<T>>> {
    check_evolution_operands(a, step)?;
    let start_value = a.value()?.clone();
    let mut out = vec![a.clone()];
    let mut current = a.clone();
    loop {
        current = add_join(&current, step)?;
        if current.value()? == &start_value {
            break;
        }
        out.push(current.clone());
    }
    Ok(out)
}

/// Number of distinct closed evolutions on an order of extent `o`: how many
/// different total transformations "add a constant step" induces on the
/// value space `{0, …, o-1}`.
///
/// Counted by constructing each step's transformation table and
/// deduplicating, not by assuming steps map one-to-one to transformations.
pub fn count_closed_evolutions(o: u64) -> u64 {
    assert!(o >= 1, "orders have extent at least 1");
    let o = o as usize;
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for s in 0..o {
        let table: Vec<usize> = (0..o).map(|x| (x + s) % o).collect();
        seen.insert(table);
    }
    seen.len() as u64
}
