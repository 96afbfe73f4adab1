//! Identity tags and the universe that allocates them.
//!
//! Two infons can agree in every numeric respect and still be *different
//! pieces of information* — a 35 that answers "age?" is not the 35 that
//! answers "distance?". Identity therefore hangs on an allocation tag, not
//! on the numbers. A [`Universe`] hands out fresh tags; distinguished tags
//! exist for the null infon and for additive identity elements so those are
//! the same object everywhere without threading a universe through every
//! call site.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

/// Where an atom's identity comes from.
///
/// Sort order (derived): `Null` first, then `Zero`, then allocated tags in
/// allocation order — which makes canonical operand sorting stable and
/// universe-independent for the distinguished objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityTag {
    /// The null infon's tag. Exactly one null exists conceptually; every
    /// `null_infon()` call yields the same identity.
    Null,
    /// Additive identity elements (one per order, distinguished by the
    /// atom's order rather than by serial).
    Zero,
    /// An ordinary atom minted by [`Universe::new_atom`].
    Allocated { universe: u64, serial: u64 },
}

impl fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityTag::Null => write!(f, "null"),
            IdentityTag::Zero => write!(f, "zero"),
            IdentityTag::Allocated { universe, serial } => {
                write!(f, "u{universe}.{serial}")
            }
        }
    }
}

static NEXT_UNIVERSE: AtomicU64 = AtomicU64::new(1);

/// Allocation context for atom identities.
///
/// Each universe has a process-unique id, so atoms from different universes
/// are never identical even if their serials coincide. Allocation takes
/// `&mut self`: minting identity is explicitly an effect, while everything
/// built from already-minted atoms is pure.
#[derive(Debug)]
pub struct Universe {
    id: u64,
    next_serial: u64,
}

impl Universe {
    pub fn new() -> Self {
        Universe {
            id: NEXT_UNIVERSE.fetch_add(1, Ordering::Relaxed),
            next_serial: 0,
        }
    }

    /// Process-unique id of this universe.
    pub fn id(&self) -> u64 {
        self.id
    }

    /// Number of tags minted so far.
    pub fn allocated(&self) -> u64 {
        self.next_serial
    }

    /// Mint a fresh identity tag.
    pub(crate) fn fresh_tag(&mut self) -> IdentityTag {
        let serial = self.next_serial;
        self.next_serial += 1;
        IdentityTag::Allocated {
            universe: self.id,
            serial,
        }
    }
}

impl Default for Universe {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universes_are_distinct() {
        let a = Universe::new();
        let b = Universe::new();
        assert_ne!(a.id(), b.id());
    }

    #[test]
    fn tags_allocate_in_order() {
        let mut u = Universe::new();
        let t0 = u.fresh_tag();
        let t1 = u.fresh_tag();
        assert!(t0 < t1);
        assert_eq!(u.allocated(), 2);
    }

    #[test]
    fn distinguished_tags_sort_before_allocated() {
        let mut u = Universe::new();
        let t = u.fresh_tag();
        assert!(IdentityTag::Null < IdentityTag::Zero);
        assert!(IdentityTag::Zero < t);
    }
}
