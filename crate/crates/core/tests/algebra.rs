//! Algebra-level integration tests: worked scenarios across the public API
//! plus randomized law checks.

use infon_core::{
    add_join, classify, disjoint, div_join, intersection, mul_join, new_atom, null_infon,
    order_to_bits, sub_join, Infon64, JoinClass, Order, Rational64, Universe,
};
use proptest::prelude::*;

fn atom(u: &mut Universe, v: i64, o: i64) -> Infon64 {
    new_atom(u, Rational64::from_integer(v), Order::from_extent(o).unwrap()).unwrap()
}

fn unb(u: &mut Universe, v: Rational64) -> Infon64 {
    new_atom(u, v, Order::Unbounded).unwrap()
}

/// One unbounded quantity, five different structures amounting to it.
/// All pairwise equal; none identical; each structure contains its own
/// parts and nobody else's.
#[test]
fn many_structures_one_amount() {
    let mut u = Universe::new();
    let int = |u: &mut Universe, n: i64| unb(u, Rational64::from_integer(n));

    let twelve = int(&mut u, 12);
    let two_sixes = {
        let a = int(&mut u, 2);
        let b = int(&mut u, 6);
        mul_join(&a, &b).unwrap()
    };
    let three_fours = {
        let a = int(&mut u, 3);
        let b = int(&mut u, 4);
        mul_join(&a, &b).unwrap()
    };
    let five_seven = {
        let a = int(&mut u, 5);
        let b = int(&mut u, 7);
        add_join(&a, &b).unwrap()
    };
    let two_ten = {
        let a = int(&mut u, 2);
        let b = int(&mut u, 10);
        add_join(&a, &b).unwrap()
    };
    let halves = {
        let a = unb(&mut u, Rational64::new(11, 2));
        let b = unb(&mut u, Rational64::new(13, 2));
        add_join(&a, &b).unwrap()
    };

    let all = [
        &twelve,
        &two_sixes,
        &three_fours,
        &five_seven,
        &two_ten,
        &halves,
    ];
    for x in &all {
        assert_eq!(x.value().unwrap(), &Rational64::from_integer(12));
        for y in &all {
            assert!(x.equal(y), "{x} and {y} amount to the same");
        }
    }
    for (i, x) in all.iter().enumerate() {
        for (j, y) in all.iter().enumerate() {
            if i != j {
                assert!(!x.identical(y), "{i} and {j} are different structures");
            }
        }
    }
    // each composite contains its own operands and not a stranger
    assert_eq!(two_sixes.members().len(), 3);
    assert!(!two_sixes.contains(&three_fours));
    assert!(intersection(&two_sixes, &three_fours).is_null());
}

#[test]
fn inverse_chains_restore_the_original() {
    let mut u = Universe::new();
    let a = atom(&mut u, 3, 4);
    let b = atom(&mut u, 4, 5);
    let ab = mul_join(&a, &b).unwrap();
    assert_eq!(ab.to_string(), "12_20");
    assert!(div_join(&ab, &b).unwrap().identical(&a));
    let sum = add_join(&a, &atom(&mut u, 1, 4)).unwrap();
    let back = sub_join(&sum, &a).unwrap();
    assert_eq!(back.to_string(), "1_4");
}

#[test]
fn intersection_rejoins_maximal_members() {
    let mut u = Universe::new();
    let a = atom(&mut u, 1, 2);
    let b = atom(&mut u, 1, 3);
    let c = atom(&mut u, 1, 5);
    let d = atom(&mut u, 1, 7);
    // (a*b*c) ∩ (a*b*d): flattened products share {a, b} as incomparable
    // maximal members; they come back multiplied
    let abc = mul_join(&mul_join(&a, &b).unwrap(), &c).unwrap();
    let abd = mul_join(&mul_join(&a, &b).unwrap(), &d).unwrap();
    let meet = intersection(&abc, &abd);
    assert!(meet.identical(&mul_join(&a, &b).unwrap()));

    // additive rejoin: two overlapping products of equal order, shared
    // through additive parents with different third terms
    let a2 = atom(&mut u, 1, 2);
    let b3 = atom(&mut u, 2, 3);
    let c2 = atom(&mut u, 0, 2);
    let ab = mul_join(&a2, &b3).unwrap(); // order 6
    let bc = mul_join(&b3, &c2).unwrap(); // order 6, shares b3
    let e1 = new_atom(
        &mut u,
        Rational64::from_integer(1),
        Order::from_extent(6i64).unwrap(),
    )
    .unwrap();
    let e2 = new_atom(
        &mut u,
        Rational64::from_integer(2),
        Order::from_extent(6i64).unwrap(),
    )
    .unwrap();
    let x = add_join(&add_join(&ab, &bc).unwrap(), &e1).unwrap();
    let y = add_join(&add_join(&ab, &bc).unwrap(), &e2).unwrap();
    let meet2 = intersection(&x, &y);
    assert!(meet2.identical(&add_join(&ab, &bc).unwrap()));
    assert_eq!(meet2.join_class(), Some(JoinClass::Additive));
}

#[test]
fn classification_tracks_overlap() {
    let mut u = Universe::new();
    let a = atom(&mut u, 1, 2);
    let b = atom(&mut u, 1, 3);
    let c = atom(&mut u, 1, 5);
    let ab = mul_join(&a, &b).unwrap();
    let bc = mul_join(&b, &c).unwrap();
    assert_eq!(classify(&ab, &bc), JoinClass::Entwined);
    assert!(!disjoint(&ab, &bc));
    assert!(disjoint(&a, &c));
    // full overlap with equal orders is additive (self-cover)
    assert_eq!(classify(&ab, &ab), JoinClass::Additive);
}

#[test]
fn big_integer_scalars_work_end_to_end() {
    use num_bigint::BigInt;
    use infon_core::Rational;

    let mut u = Universe::new();
    let big: BigInt = BigInt::from(1i64) << 40; // 2^40, beyond any i32 extent
    let a = new_atom(
        &mut u,
        Rational::from_integer(BigInt::from(7)),
        Order::finite(Rational::from_integer(big.clone())).unwrap(),
    )
    .unwrap();
    let b = new_atom(
        &mut u,
        Rational::from_integer(BigInt::from(11)),
        Order::finite(Rational::from_integer(big)).unwrap(),
    )
    .unwrap();
    let ab = mul_join(&a, &b).unwrap();
    assert_eq!(
        ab.value().unwrap(),
        &Rational::from_integer(BigInt::from(77))
    );
    // extent 2^80; the bit measure is exact for powers of two
    assert_eq!(order_to_bits(ab.order().unwrap()).unwrap(), 80.0);
}

/// Strategy: a (value, extent) pair for a fresh finite atom.
fn value_and_extent() -> impl Strategy<Value = (i64, i64)> {
    (2i64..=16).prop_flat_map(|o| (0..o, Just(o)))
}

/// Strategy: three values sharing one extent.
fn triple_same_extent() -> impl Strategy<Value = (i64, i64, i64, i64)> {
    (2i64..=16).prop_flat_map(|o| (0..o, 0..o, 0..o, Just(o)))
}

proptest! {
    #[test]
    fn prop_mul_commutes((va, oa) in value_and_extent(), (vb, ob) in value_and_extent()) {
        let mut u = Universe::new();
        let a = atom(&mut u, va, oa);
        let b = atom(&mut u, vb, ob);
        let left = mul_join(&a, &b).unwrap();
        let right = mul_join(&b, &a).unwrap();
        prop_assert!(left.identical(&right));
    }

    #[test]
    fn prop_mul_associates(
        (va, oa) in value_and_extent(),
        (vb, ob) in value_and_extent(),
        (vc, oc) in value_and_extent(),
    ) {
        let mut u = Universe::new();
        let a = atom(&mut u, va, oa);
        let b = atom(&mut u, vb, ob);
        let c = atom(&mut u, vc, oc);
        let left = mul_join(&mul_join(&a, &b).unwrap(), &c).unwrap();
        let right = mul_join(&a, &mul_join(&b, &c).unwrap()).unwrap();
        prop_assert!(left.identical(&right));
    }

    #[test]
    fn prop_add_commutes_and_wraps((va, vb, _vc, o) in triple_same_extent()) {
        let mut u = Universe::new();
        let a = atom(&mut u, va, o);
        let b = atom(&mut u, vb, o);
        let left = add_join(&a, &b).unwrap();
        let right = add_join(&b, &a).unwrap();
        prop_assert!(left.identical(&right));
        // oracle: machine modular arithmetic
        let expect = (va + vb).rem_euclid(o);
        prop_assert_eq!(left.value().unwrap(), &Rational64::from_integer(expect));
        let got = left.value().unwrap();
        prop_assert!(got >= &Rational64::from_integer(0));
        prop_assert!(got < &Rational64::from_integer(o));
    }

    #[test]
    fn prop_add_associates((va, vb, vc, o) in triple_same_extent()) {
        let mut u = Universe::new();
        let a = atom(&mut u, va, o);
        let b = atom(&mut u, vb, o);
        let c = atom(&mut u, vc, o);
        let left = add_join(&add_join(&a, &b).unwrap(), &c).unwrap();
        let right = add_join(&a, &add_join(&b, &c).unwrap()).unwrap();
        prop_assert!(left.identical(&right));
    }

    #[test]
    fn prop_sub_undoes_add((va, vb, _vc, o) in triple_same_extent()) {
        let mut u = Universe::new();
        let a = atom(&mut u, va, o);
        let b = atom(&mut u, vb, o);
        let sum = add_join(&a, &b).unwrap();
        prop_assert!(sub_join(&sum, &b).unwrap().identical(&a));
    }

    #[test]
    fn prop_div_undoes_mul((va, oa) in value_and_extent(), (vb, ob) in value_and_extent()) {
        // zero-valued divisors are rejected by design; the law covers the rest
        prop_assume!(vb != 0);
        let mut u = Universe::new();
        let a = atom(&mut u, va, oa);
        let b = atom(&mut u, vb, ob);
        let prod = mul_join(&a, &b).unwrap();
        prop_assert!(div_join(&prod, &b).unwrap().identical(&a));
    }

    #[test]
    fn prop_fresh_atoms_equal_not_identical((v, o) in value_and_extent()) {
        let mut u = Universe::new();
        let a = atom(&mut u, v, o);
        let b = atom(&mut u, v, o);
        prop_assert!(a.equal(&b));
        prop_assert!(!a.identical(&b));
    }

    /// Re-asking the same question must give the same answer: identity and
    /// equality are stable across repeated evaluation and cloning.
    #[test]
    fn prop_comparisons_are_stable((va, oa) in value_and_extent(), (vb, ob) in value_and_extent()) {
        let mut u = Universe::new();
        let a = atom(&mut u, va, oa);
        let b = atom(&mut u, vb, ob);
        let first = (a.identical(&b), a.equal(&b));
        let second = (a.identical(&b), a.equal(&b));
        prop_assert_eq!(first, second);
        let ac = a.clone();
        prop_assert!(a.identical(&ac));
        prop_assert_eq!(ac.equal(&b), first.1);
    }

    #[test]
    fn prop_members_start_with_self((va, oa) in value_and_extent(), (vb, ob) in value_and_extent()) {
        let mut u = Universe::new();
        let a = atom(&mut u, va, oa);
        let b = atom(&mut u, vb, ob);
        let ab = mul_join(&a, &b).unwrap();
        let ms = ab.members();
        prop_assert!(ms[0].identical(&ab));
        prop_assert!(ab.contains(&a) && ab.contains(&b));
        prop_assert!(ab.contains(&ab));
    }

    #[test]
    fn prop_null_is_identity_everywhere((v, o) in value_and_extent()) {
        let mut u = Universe::new();
        let a = atom(&mut u, v, o);
        prop_assert!(mul_join(&a, &null_infon()).unwrap().identical(&a));
        prop_assert!(div_join(&a, &null_infon()).unwrap().identical(&a));
    }
}
