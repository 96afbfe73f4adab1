//! The infon itself: atoms, canonical join trees, identity vs equality,
//! membership, intersection, and join classification.
//!
//! The central distinction: **identity** (`identical`, the derived `==`)
//! means "the same piece of information, substitutable everywhere", and
//! depends on allocation tags and structure. **Equality** (`equal`) means
//! "the same amount selected from the same possibility space": same order,
//! same value. Two fresh atoms `35_100` and `35_100` are equal but not
//! identical — one may answer a question the other does not.

use crate::order::Order;
use crate::scalar::{Int, Rational};
use crate::tag::IdentityTag;

/// How two infons combine in a join.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JoinClass {
    /// Disjoint possibility spaces compose; orders multiply, values multiply.
    Multiplicative,
    /// One shared possibility space; values add with wraparound at the
    /// common finite extent.
    Additive,
    /// Operands overlap without either covering the other. Recognized and
    /// representable, but never numerically evaluated.
    Entwined,
}

/// An indivisible information object: an identity tag plus a value selected
/// from an order's possibility space.
///
/// Canonical range: finite order of extent `e` requires `0 ≤ value < e`.
/// The null infon (value 1 at extent 1) is the single distinguished
/// exception and cannot be constructed through [`crate::new_atom`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom<T: Int> {
    pub(crate) tag: IdentityTag,
    pub(crate) value: Rational<T>,
    pub(crate) order: Order<T>,
}

impl<T: Int> Atom<T> {
    pub fn tag(&self) -> IdentityTag {
        self.tag
    }
    pub fn value(&self) -> &Rational<T> {
        &self.value
    }
    pub fn order(&self) -> &Order<T> {
        &self.order
    }
}

/// One branch of a join node. `inverted: true` marks an inverse occurrence:
/// a reciprocal factor under a multiplicative node, a negated term under an
/// additive node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Operand<T: Int> {
    pub(crate) infon: Infon<T>,
    pub(crate) inverted: bool,
}

impl<T: Int> Operand<T> {
    pub fn infon(&self) -> &Infon<T> {
        &self.infon
    }
    pub fn inverted(&self) -> bool {
        self.inverted
    }
}

/// A canonical join node.
///
/// Invariants maintained by the constructors in [`crate::join`]:
/// same-class children are flattened away, operands are sorted, inverse
/// pairs are cancelled, and `value`/`order` are `None` exactly when the
/// class is [`JoinClass::Entwined`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Join<T: Int> {
    pub(crate) class: JoinClass,
    pub(crate) operands: Vec<Operand<T>>,
    pub(crate) value: Option<Rational<T>>,
    pub(crate) order: Option<Order<T>>,
    /// True when a multiplicative operand carried value zero: the product
    /// collapsed to zero while the order still multiplied out. The collapse
    /// is recorded, never silently repaired.
    pub(crate) degenerate: bool,
}

impl<T: Int> Join<T> {
    pub fn class(&self) -> JoinClass {
        self.class
    }
    pub fn operands(&self) -> &[Operand<T>] {
        &self.operands
    }
}

/// An information object: a single atom or a canonical join tree.
///
/// The derived `==`/`Ord`/`Hash` all follow *identity* semantics; use
/// [`Infon::equal`] for order-and-value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Infon<T: Int> {
    Atom(Atom<T>),
    Join(Join<T>),
}

use crate::error::{AlgebraError, Result};

impl<T: Int> Infon<T> {
    /// The numeric value. Errors on entwined structures, which have none.
    pub fn value(&self) -> Result<&Rational<T>> {
        match self {
            Infon::Atom(a) => Ok(&a.value),
            Infon::Join(j) => j.value.as_ref().ok_or(AlgebraError::EntwinedUnsupported),
        }
    }

    /// The order. Errors on entwined structures, which have none.
    pub fn order(&self) -> Result<&Order<T>> {
        match self {
            Infon::Atom(a) => Ok(&a.order),
            Infon::Join(j) => j.order.as_ref().ok_or(AlgebraError::EntwinedUnsupported),
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Infon::Atom(_))
    }

    /// The join class, when this is a join node.
    pub fn join_class(&self) -> Option<JoinClass> {
        match self {
            Infon::Atom(_) => None,
            Infon::Join(j) => Some(j.class),
        }
    }

    /// True when a multiplicative collapse by a zero-valued operand was
    /// recorded anywhere in this structure's top node.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Infon::Join(j) if j.degenerate)
    }

    /// Order-1 infons select from a possibility space of one: they carry no
    /// information. The null infon and every extent-1 structure qualify.
    pub fn is_null(&self) -> bool {
        match self.order() {
            Ok(o) => o.is_unit(),
            Err(_) => false,
        }
    }

    /// Identity: the same information object. Alias of the derived `==`.
    pub fn identical(&self, other: &Self) -> bool {
        self == other
    }

    /// Equality: same order and same value — the same *amount* of
    /// information from the same possibility space, regardless of which
    /// object carries it.
    ///
    /// All order-1 infons are mutually equal (each carries nothing).
    /// Entwined structures have no numeric reading, so equality for them
    /// degrades to identity.
    pub fn equal(&self, other: &Self) -> bool {
        match (self.order(), other.order()) {
            (Ok(oa), Ok(ob)) => {
                if oa.is_unit() && ob.is_unit() {
                    return true;
                }
                oa == ob && self.value().unwrap() == other.value().unwrap()
            }
            _ => self.identical(other),
        }
    }

    /// Every member of this infon: the infon itself plus, recursively, the
    /// members of each join operand. Depth-first, pre-order, deduplicated
    /// by identity; the infon itself is always first.
    pub fn members(&self) -> Vec<&Infon<T>> {
        let mut out = Vec::new();
        self.collect_members(&mut out);
        out
    }

    fn collect_members<'a>(&'a self, out: &mut Vec<&'a Infon<T>>) {
        if out.iter().any(|m| *m == self) {
            return;
        }
        out.push(self);
        if let Infon::Join(j) = self {
            for op in &j.operands {
                op.infon.collect_members(out);
            }
        }
    }

    /// Containment: every member of `other` is a member of `self`.
    /// Reflexive and transitive by construction.
    pub fn contains(&self, other: &Infon<T>) -> bool {
        let mine = self.members();
        other.members().iter().all(|m| mine.contains(m))
    }

    /// The atoms this structure is built from, excluding order-1 atoms
    /// (which carry nothing and participate in no overlap).
    pub(crate) fn collect_support<'a>(&'a self, out: &mut Vec<&'a Atom<T>>) {
        match self {
            Infon::Atom(a) => {
                if !a.order.is_unit() {
                    out.push(a);
                }
            }
            Infon::Join(j) => {
                for op in &j.operands {
                    op.infon.collect_support(out);
                }
            }
        }
    }

    fn support_set(&self) -> Vec<&Atom<T>> {
        let mut s = Vec::new();
        self.collect_support(&mut s);
        s.sort();
        s.dedup();
        s
    }
}

/// True when `a` and `b` share no atomic support. Order-1 atoms never count
/// as shared support.
pub fn disjoint<T: Int>(a: &Infon<T>, b: &Infon<T>) -> bool {
    let sa = a.support_set();
    let sb = b.support_set();
    sa.iter().all(|x| !sb.contains(x))
}

/// Classify how `a` and `b` would join.
///
/// Null operands always join multiplicatively (null is the multiplicative
/// identity). Partial support overlap — some atoms shared, but neither
/// support covering the other's exactly — is entwined. Otherwise equal
/// orders mean the operands range over one common possibility space
/// (additive); disjoint supports compose (multiplicative); anything left
/// is entwined.
pub fn classify<T: Int>(a: &Infon<T>, b: &Infon<T>) -> JoinClass {
    if a.is_null() || b.is_null() {
        return JoinClass::Multiplicative;
    }
    let sa = a.support_set();
    let sb = b.support_set();
    let shared: Vec<_> = sa.iter().filter(|x| sb.contains(x)).collect();
    let full_overlap = shared.len() == sa.len() && shared.len() == sb.len();
    if !shared.is_empty() && !full_overlap {
        return JoinClass::Entwined;
    }
    if let (Ok(oa), Ok(ob)) = (a.order(), b.order()) {
        if oa == ob {
            return JoinClass::Additive;
        }
    }
    if shared.is_empty() {
        return JoinClass::Multiplicative;
    }
    JoinClass::Entwined
}

/// Intersection by identity: the join of the maximal common members.
///
/// No shared non-null member means a null result; exactly one maximal
/// common member is returned as-is; several are rejoined (multiplicatively
/// when disjoint, additively when orders agree, entwined otherwise).
pub fn intersection<T: Int>(a: &Infon<T>, b: &Infon<T>) -> Infon<T> {
    let ma = a.members();
    let mb = b.members();
    let common: Vec<&Infon<T>> = ma
        .iter()
        .copied()
        .filter(|m| !m.is_null() && mb.contains(m))
        .collect();
    let maximal: Vec<&Infon<T>> = common
        .iter()
        .copied()
        .filter(|m| {
            !common
                .iter()
                .any(|n| **n != **m && n.contains(m))
        })
        .collect();
    match maximal.len() {
        0 => crate::join::null_infon(),
        1 => maximal[0].clone(),
        _ => crate::join::rejoin_members(&maximal),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::join::{add_join, mul_join, new_atom, null_infon};
    use crate::tag::Universe;

    fn atom(u: &mut Universe, v: i64, o: i64) -> Infon<i64> {
        new_atom(u, Rational::from_integer(v), Order::from_extent(o).unwrap()).unwrap()
    }

    #[test]
    fn equal_but_not_identical() {
        let mut u = Universe::new();
        // same amount answering two different questions
        let age = atom(&mut u, 35, 100);
        let distance = atom(&mut u, 35, 100);
        assert!(age.equal(&distance));
        assert!(!age.identical(&distance));
        assert!(age.identical(&age.clone()));
    }

    #[test]
    fn equality_requires_both_order_and_value() {
        let mut u = Universe::new();
        let a = atom(&mut u, 3, 4);
        let b = atom(&mut u, 3, 8);
        assert!(!a.equal(&b), "same value, different order");
        let c = atom(&mut u, 2, 4);
        assert!(!a.equal(&c), "same order, different value");
    }

    #[test]
    fn unit_order_infons_are_all_equal() {
        let mut u = Universe::new();
        let z = atom(&mut u, 0, 1);
        assert!(z.equal(&null_infon()));
        assert!(!z.identical(&null_infon()));
    }

    #[test]
    fn members_are_preorder_and_deduplicated() {
        let mut u = Universe::new();
        let a = atom(&mut u, 1, 3);
        let b = atom(&mut u, 1, 4);
        let c = atom(&mut u, 2, 4);
        let bc = add_join(&b, &c).unwrap();
        let whole = mul_join(&a, &bc).unwrap();
        let ms = whole.members();
        assert_eq!(ms.len(), 5);
        assert!(ms[0].identical(&whole));
        // oracle: an independent closure computation over the same tree
        let mut expect: Vec<Infon<i64>> = vec![whole.clone(), a, bc, b, c];
        expect.sort();
        let mut got: Vec<Infon<i64>> = ms.into_iter().cloned().collect();
        got.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn containment_is_reflexive_and_structural() {
        let mut u = Universe::new();
        let a = atom(&mut u, 1, 3);
        let b = atom(&mut u, 1, 4);
        let ab = mul_join(&a, &b).unwrap();
        assert!(ab.contains(&a));
        assert!(ab.contains(&ab));
        assert!(a.contains(&a));
        assert!(!a.contains(&b));
        assert!(!ab.contains(&atom(&mut u, 1, 5)));
    }

    #[test]
    fn classify_basic_cases() {
        let mut u = Universe::new();
        let a = atom(&mut u, 3, 4);
        let b = atom(&mut u, 4, 5);
        assert_eq!(classify(&a, &b), JoinClass::Multiplicative);
        let c = atom(&mut u, 1, 4);
        assert_eq!(classify(&a, &c), JoinClass::Additive);
        let d = atom(&mut u, 2, 7);
        let ab = mul_join(&a, &b).unwrap();
        let bd = mul_join(&b, &d).unwrap();
        assert_eq!(classify(&ab, &bd), JoinClass::Entwined);
        assert_eq!(classify(&a, &null_infon()), JoinClass::Multiplicative);
    }

    #[test]
    fn intersection_of_shared_factor() {
        let mut u = Universe::new();
        let a = atom(&mut u, 2, 3);
        let b = atom(&mut u, 3, 4);
        let c = atom(&mut u, 4, 5);
        let ab = mul_join(&a, &b).unwrap();
        let ac = mul_join(&a, &c).unwrap();
        assert!(intersection(&ab, &ac).identical(&a));
        // nothing shared → null
        assert!(intersection(&b, &c).is_null());
        // self-intersection → the infon itself
        assert!(intersection(&ab, &ab).identical(&ab));
    }
}
