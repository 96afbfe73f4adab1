//! Constructors: atoms, the distinguished objects, and canonical joins.
//!
//! Join nodes are canonical by construction. Building one runs a fixed
//! pipeline — flatten same-class children one level, sort operands by the
//! total structural order, cancel inverse pairs, then collapse or finish —
//! so associativity and commutativity of the joins hold *by representation*:
//! `(a*b)*c` and `a*(b*c)` are not merely equal, they are the same object.
//!
//! Cancellation runs before the multiplicative disjointness check. That
//! ordering is what lets `a * a⁻¹` collapse to null instead of tripping the
//! shared-support rejection that guards genuine overlaps.

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::infon::{disjoint, Atom, Infon, Join, JoinClass, Operand};
use crate::order::Order;
use crate::scalar::{rat_mod, Int, Rational};
use crate::tag::{IdentityTag, Universe};

/// The null infon: the unique order-1 object with the distinguished null
/// identity. Multiplicative identity of the whole algebra. Renders as `1_1`.
///
/// This is the only place a value equal to its extent bound exists; user
/// construction of atoms outside `[0, extent)` is rejected.
pub fn null_infon<T: Int>() -> Infon<T> {
    Infon::Atom(Atom {
        tag: IdentityTag::Null,
        value: Rational::one(),
        order: Order::Finite(Rational::one()),
    })
}

/// The additive identity for a given order: value zero with the
/// distinguished zero identity. One such object per order; zeros of
/// different orders are neither identical nor equal.
pub fn zero_of_order<T: Int>(order: Order<T>) -> Result<Infon<T>> {
    if let Some(e) = order.extent() {
        if e < &Rational::one() {
            return Err(AlgebraError::InvalidOrder {
                extent: crate::render::ratio_string(e),
            });
        }
    }
    Ok(Infon::Atom(Atom {
        tag: IdentityTag::Zero,
        value: Rational::zero(),
        order,
    }))
}

/// Mint a fresh atom in `universe`.
///
/// Finite orders demand the canonical value range `0 ≤ value < extent`;
/// unbounded atoms may carry any rational. The extent is re-validated here
/// because the `Order` variants are public.
pub fn new_atom<T: Int>(
    universe: &mut Universe,
    value: Rational<T>,
    order: Order<T>,
) -> Result<Infon<T>> {
    if let Some(e) = order.extent() {
        if e < &Rational::one() {
            return Err(AlgebraError::InvalidOrder {
                extent: crate::render::ratio_string(e),
            });
        }
        if value < Rational::zero() || &value >= e {
            return Err(AlgebraError::ValueOutOfRange {
                value: crate::render::ratio_string(&value),
                extent: crate::render::ratio_string(e),
            });
        }
    }
    Ok(Infon::Atom(Atom {
        tag: universe.fresh_tag(),
        value,
        order,
    }))
}

/// Splice `item` into an operand list for a node of class `class`,
/// flattening one level when `item` is itself a join of the same class.
/// `inv` composes with the child flags by XOR, so inverting a join inverts
/// each of its operands.
fn flatten_into<T: Int>(
    class: JoinClass,
    item: &Infon<T>,
    inv: bool,
    out: &mut Vec<Operand<T>>,
) {
    if let Infon::Join(j) = item {
        if j.class == class {
            for op in &j.operands {
                out.push(Operand {
                    infon: op.infon.clone(),
                    inverted: op.inverted ^ inv,
                });
            }
            return;
        }
    }
    out.push(Operand {
        infon: item.clone(),
        inverted: inv,
    });
}

/// Sort operands into canonical order and cancel `(x, plain)/(x, inverted)`
/// pairs. Sorting puts a structure's plain occurrences immediately before
/// its inverted ones, so a single stack pass removes every pair.
fn sort_and_cancel<T: Int>(mut ops: Vec<Operand<T>>) -> Vec<Operand<T>> {
    ops.sort();
    let mut out: Vec<Operand<T>> = Vec::with_capacity(ops.len());
    for op in ops {
        if let Some(top) = out.last() {
            if top.infon == op.infon && top.inverted != op.inverted {
                out.pop();
                continue;
            }
        }
        out.push(op);
    }
    out
}

/// Finish a multiplicative node from cancelled, sorted operands.
fn finish_mul<T: Int>(ops: Vec<Operand<T>>) -> Result<Infon<T>> {
    match ops.len() {
        0 => return Ok(null_infon()),
        1 if !ops[0].inverted => {
            return Ok(ops.into_iter().next().expect("len checked").infon)
        }
        _ => {}
    }
    // Any atom reachable from two different operands means the operands
    // genuinely overlap: the join would be entwined, which the evaluating
    // constructors refuse to build.
    if ops.len() >= 2 {
        let mut seen: Vec<&Atom<T>> = Vec::new();
        for op in &ops {
            let mut s = Vec::new();
            op.infon.collect_support(&mut s);
            for atom in s {
                if seen.contains(&atom) {
                    return Err(AlgebraError::EntwinedOperands);
                }
                seen.push(atom);
            }
        }
    }
    let mut value: Rational<T> = Rational::one();
    let mut order: Order<T> = Order::Finite(Rational::one());
    let mut degenerate = false;
    for op in &ops {
        let v = op.infon.value().expect("mul operands are evaluable");
        let o = op.infon.order().expect("mul operands are evaluable");
        if op.inverted {
            if v.is_zero() {
                return Err(AlgebraError::ZeroValueInverse);
            }
            value = &value * &v.clone().recip();
            order = match (&order, o) {
                (Order::Finite(acc), Order::Finite(e)) => {
                    Order::finite_unchecked(acc / e)
                }
                _ => Order::Unbounded,
            };
        } else {
            if v.is_zero() {
                degenerate = true;
            }
            value = &value * v;
            order = match (&order, o) {
                (Order::Finite(acc), Order::Finite(e)) => Order::Finite(acc * e),
                _ => Order::Unbounded,
            };
        }
    }
    Ok(Infon::Join(Join {
        class: JoinClass::Multiplicative,
        operands: ops,
        value: Some(value),
        order: Some(order),
        degenerate,
    }))
}

/// Finish an additive node over a common order.
fn finish_add<T: Int>(ops: Vec<Operand<T>>, order: Order<T>) -> Result<Infon<T>> {
    match ops.len() {
        0 => return zero_of_order(order),
        1 if !ops[0].inverted => {
            return Ok(ops.into_iter().next().expect("len checked").infon)
        }
        _ => {}
    }
    let mut sum: Rational<T> = Rational::zero();
    for op in &ops {
        let v = op.infon.value().expect("add operands are evaluable");
        debug_assert_eq!(
            op.infon.order().expect("add operands are evaluable"),
            &order,
            "additive operands share the node order by construction"
        );
        if op.inverted {
            sum = &sum - v;
        } else {
            sum = &sum + v;
        }
    }
    let value = match &order {
        Order::Finite(e) => rat_mod(&sum, e),
        Order::Unbounded => sum,
    };
    Ok(Infon::Join(Join {
        class: JoinClass::Additive,
        operands: ops,
        value: Some(value),
        order: Some(order),
        degenerate: false,
    }))
}

/// Multiplicative join: compose two infons over disjoint possibility
/// spaces. Values multiply; finite extents multiply; `Unbounded` absorbs.
///
/// Null (and any other order-1 infon: they carry nothing) is the identity
/// and returns the other operand unchanged — identically, not merely
/// equally. Shared support that does not fully cancel errors with
/// [`AlgebraError::EntwinedOperands`]; entwined operands error with
/// [`AlgebraError::EntwinedUnsupported`].
pub fn mul_join<T: Int>(a: &Infon<T>, b: &Infon<T>) -> Result<Infon<T>> {
    a.value()?;
    b.value()?;
    if a.is_null() {
        return Ok(b.clone());
    }
    if b.is_null() {
        return Ok(a.clone());
    }
    let mut ops = Vec::new();
    flatten_into(JoinClass::Multiplicative, a, false, &mut ops);
    flatten_into(JoinClass::Multiplicative, b, false, &mut ops);
    finish_mul(sort_and_cancel(ops))
}

/// Additive join: combine two selections from one possibility space.
/// Requires equal orders; finite values add with wraparound at the extent,
/// unbounded values add plainly.
pub fn add_join<T: Int>(a: &Infon<T>, b: &Infon<T>) -> Result<Infon<T>> {
    let oa = a.order()?.clone();
    let ob = b.order()?;
    if &oa != ob {
        return Err(AlgebraError::OrderMismatch {
            left: oa.to_string(),
            right: ob.to_string(),
        });
    }
    let mut ops = Vec::new();
    flatten_into(JoinClass::Additive, a, false, &mut ops);
    flatten_into(JoinClass::Additive, b, false, &mut ops);
    finish_add(sort_and_cancel(ops), oa)
}

/// Additive difference: `a` joined with the inverse occurrence of `b`.
/// Same order requirement as [`add_join`]; unlike [`add_inverse`] it also
/// accepts equal *unbounded* orders, where subtraction is plain.
///
/// `sub_join(add_join(a, b), b)` is identical to `a`, and
/// `sub_join(a, a)` is the zero of `a`'s order.
pub fn sub_join<T: Int>(a: &Infon<T>, b: &Infon<T>) -> Result<Infon<T>> {
    let oa = a.order()?.clone();
    let ob = b.order()?;
    if &oa != ob {
        return Err(AlgebraError::OrderMismatch {
            left: oa.to_string(),
            right: ob.to_string(),
        });
    }
    let mut ops = Vec::new();
    flatten_into(JoinClass::Additive, a, false, &mut ops);
    flatten_into(JoinClass::Additive, b, true, &mut ops);
    finish_add(sort_and_cancel(ops), oa)
}

/// Additive inverse: the structure that cancels `a` under addition.
/// Finite orders only — there is no wraparound to invert against on an
/// unbounded order (use [`sub_join`] for plain differences).
///
/// `add_join(a, add_inverse(a))` is identical to the zero of `a`'s order,
/// and `add_inverse(add_inverse(a))` is identical to `a`.
pub fn add_inverse<T: Int>(a: &Infon<T>) -> Result<Infon<T>> {
    let oa = a.order()?.clone();
    if !oa.is_finite() {
        return Err(AlgebraError::UnboundedOrder);
    }
    let mut ops = Vec::new();
    flatten_into(JoinClass::Additive, a, true, &mut ops);
    finish_add(sort_and_cancel(ops), oa)
}

/// Multiplicative inverse: the structure that cancels `a` under
/// multiplication, so `mul_join(a, mul_inverse(a))` is the null infon.
/// Zero-valued infons have none.
///
/// The inverse's order extent is the reciprocal of `a`'s — fractional
/// extents exist only inside this bookkeeping and never as atom orders.
pub fn mul_inverse<T: Int>(a: &Infon<T>) -> Result<Infon<T>> {
    let v = a.value()?;
    if v.is_zero() {
        return Err(AlgebraError::ZeroValueInverse);
    }
    if a.is_null() {
        return Ok(null_infon());
    }
    let mut ops = Vec::new();
    flatten_into(JoinClass::Multiplicative, a, true, &mut ops);
    finish_mul(sort_and_cancel(ops))
}

/// Division: undo a multiplicative join.
///
/// Supported exactly when the answer is structurally recoverable: dividing
/// by null, by the whole (`a` identical to `b`), or by a direct operand of
/// a multiplicative `a`. Anything else errors with
/// [`AlgebraError::UnsupportedDivision`] rather than inventing structure.
pub fn div_join<T: Int>(a: &Infon<T>, b: &Infon<T>) -> Result<Infon<T>> {
    a.value()?;
    let vb = b.value()?;
    if vb.is_zero() {
        return Err(AlgebraError::ZeroDivisor);
    }
    if b.is_null() {
        return Ok(a.clone());
    }
    if a.identical(b) {
        return Ok(null_infon());
    }
    if let Infon::Join(j) = a {
        if j.class == JoinClass::Multiplicative {
            if let Some(pos) = j
                .operands
                .iter()
                .position(|op| !op.inverted && op.infon == *b)
            {
                let mut rest = j.operands.clone();
                rest.remove(pos);
                return finish_mul(rest);
            }
        }
    }
    Err(AlgebraError::UnsupportedDivision)
}

/// The identity element of a join class, relative to `a`:
/// null for multiplicative joins, the zero of `a`'s order for additive
/// ones. Entwined joins have no identity.
pub fn identity_element<T: Int>(a: &Infon<T>, class: JoinClass) -> Result<Infon<T>> {
    match class {
        JoinClass::Multiplicative => Ok(null_infon()),
        JoinClass::Additive => zero_of_order(a.order()?.clone()),
        JoinClass::Entwined => Err(AlgebraError::EntwinedUnsupported),
    }
}

/// Rejoin a set of maximal common members (for intersection): multiply
/// when pairwise disjoint, add when orders all agree, otherwise keep an
/// entwined node that records the overlap without evaluating it.
pub(crate) fn rejoin_members<T: Int>(ms: &[&Infon<T>]) -> Infon<T> {
    debug_assert!(ms.len() >= 2);
    let pairwise_disjoint = ms
        .iter()
        .enumerate()
        .all(|(i, m)| ms[i + 1..].iter().all(|n| disjoint(m, n)));
    if pairwise_disjoint {
        let mut acc = ms[0].clone();
        for m in &ms[1..] {
            acc = mul_join(&acc, m).expect("disjoint members remultiply");
        }
        return acc;
    }
    let orders: Vec<_> = ms.iter().map(|m| m.order()).collect();
    if orders.iter().all(|o| o.is_ok())
        && orders.windows(2).all(|w| {
            w[0].as_ref().expect("checked") == w[1].as_ref().expect("checked")
        })
    {
        let mut acc = ms[0].clone();
        for m in &ms[1..] {
            acc = add_join(&acc, m).expect("equal-order members re-add");
        }
        return acc;
    }
    let mut operands: Vec<Operand<T>> = ms
        .iter()
        .map(|m| Operand {
            infon: (*m).clone(),
            inverted: false,
        })
        .collect();
    operands.sort();
    Infon::Join(Join {
        class: JoinClass::Entwined,
        operands,
        value: None,
        order: None,
        degenerate: false,
    })
}
