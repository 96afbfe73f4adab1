//! The seventeen checkable properties, their case kernels, and replay.
//!
//! Each property's case space is described as strata (see [`crate::domain`])
//! and each case is decided by a *kernel*: a function from concrete infons
//! to an optional violation `(kind, lhs, rhs)`. The driver and
//! counterexample replay share the kernels, so a replayed counterexample is
//! re-evaluated by exactly the code that produced it.
//!
//! Atoms are minted per case, in alphabetical order of their binding names;
//! replay parses bindings in the same order, so canonical operand sorting
//! (which follows allocation order) matches between the two paths and
//! rendered witnesses compare byte-for-byte.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use infon_core::{
    add_inverse, add_join, count_closed_evolutions, div_join, infon_from_literal, mul_join,
    order_to_bits, parse_infon_literal, sub_join, trajectory, zero_of_order, Infon64, Order,
    Rational64, Universe,
};
use num_traits::{One, Signed, Zero};

use crate::config::{CheckConfig, CheckError, PropertyId};
use crate::domain::{
    drive, enumerate_atoms, order_values, AtomDescriptor, CaseOutcome, RunStats, Strata,
};
use crate::report::{Counterexample, PropertyReport, Report, Verdict};

/// Check every configured property, in canonical order. Per-property
/// errors (e.g. an unmeetable budget) become `Error` entries rather than
/// aborting the run; an invalid configuration fails the whole call.
pub fn run_all(config: &CheckConfig) -> Result<Report, CheckError> {
    config.validate()?;
    let mut entries = Vec::new();
    for property in config.canonical_properties() {
        let started = Instant::now();
        let entry = match check_cases(config, property) {
            Ok(mut report) => {
                report.elapsed = started.elapsed();
                report
            }
            Err(error) => PropertyReport {
                property,
                verdict: Verdict::Error,
                cases_checked: 0,
                sampled: false,
                counterexamples: Vec::new(),
                note: Some(error.to_string()),
                elapsed: started.elapsed(),
            },
        };
        entries.push(entry);
    }
    Ok(Report {
        config: config.clone(),
        entries,
    })
}

/// Check one property. Unlike [`run_all`], errors are returned to the
/// caller directly.
pub fn check_property(
    config: &CheckConfig,
    property: PropertyId,
) -> Result<PropertyReport, CheckError> {
    config.validate()?;
    let started = Instant::now();
    let mut report = check_cases(config, property)?;
    report.elapsed = started.elapsed();
    Ok(report)
}

fn check_cases(config: &CheckConfig, property: PropertyId) -> Result<PropertyReport, CheckError> {
    match property {
        PropertyId::CommutativityMul => check_commutativity_mul(config),
        PropertyId::CommutativityAdd => check_commutativity_add(config),
        PropertyId::AssociativityMul => check_associativity_mul(config),
        PropertyId::AssociativityAdd => check_associativity_add(config),
        PropertyId::AdditiveGroup => check_additive_group(config),
        PropertyId::MultiplicativeIdentity => check_multiplicative_identity(config),
        PropertyId::Sibling => check_sibling(config),
        PropertyId::OneToOneAdd => check_one_to_one_add(config),
        PropertyId::OntoAdd => check_onto_add(config),
        PropertyId::IdentityGroups => check_identity_groups(config),
        PropertyId::Distribution => check_distribution(config),
        PropertyId::OrderOfJoins => check_order_of_joins(config),
        PropertyId::FiniteWraparound => check_finite_wraparound(config),
        PropertyId::NonIdentity => check_non_identity(config),
        PropertyId::ClosedEvolutionCount => check_closed_evolution_count(config),
        PropertyId::RoundTrips => check_round_trips(config),
        PropertyId::ExcludedMiddle => check_excluded_middle(config),
    }
}

// ---------------------------------------------------------------------------
// Shared plumbing.

/// A failing case: which aspect failed, and the two rendered sides that
/// should have agreed (or whose disagreement is the finding).
type Violation = Option<(&'static str, String, String)>;

fn bind<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

fn make_cex(
    property: PropertyId,
    bindings: BTreeMap<String, String>,
    kind: &'static str,
    lhs: String,
    rhs: String,
) -> Counterexample {
    Counterexample {
        property,
        bindings,
        lhs,
        rhs,
        note: format!("{kind}: {}", kind_detail(property, kind)),
    }
}

/// Wrap a kernel verdict as a case outcome. `conditional_kind` marks the
/// one violation kind that falls outside the property's side condition.
fn outcome(
    property: PropertyId,
    bindings: BTreeMap<String, String>,
    violation: Violation,
    conditional_kind: Option<&'static str>,
) -> CaseOutcome {
    match violation {
        None => CaseOutcome::Pass,
        Some((kind, lhs, rhs)) => {
            let cex = make_cex(property, bindings, kind, lhs, rhs);
            if conditional_kind == Some(kind) {
                CaseOutcome::Conditional(cex)
            } else {
                CaseOutcome::Fail(cex)
            }
        }
    }
}

fn kind_detail(property: PropertyId, kind: &str) -> &'static str {
    match (property, kind) {
        (PropertyId::CommutativityMul, _) => {
            "multiplicative joins must not depend on operand order"
        }
        (PropertyId::CommutativityAdd, _) => "additive joins must not depend on operand order",
        (PropertyId::AssociativityMul, _) => {
            "grouping of multiplicative joins must not survive canonicalization"
        }
        (PropertyId::AssociativityAdd, _) => {
            "grouping of additive joins must not survive canonicalization"
        }
        (PropertyId::AdditiveGroup, "closure") => "additive values must stay inside [0, extent)",
        (PropertyId::AdditiveGroup, "associativity") => {
            "additive grouping must not change the join"
        }
        (PropertyId::AdditiveGroup, "identity") => {
            "adding the zero of the order must leave the value unchanged"
        }
        (PropertyId::AdditiveGroup, _) => {
            "adding the additive inverse must reach the zero of the order"
        }
        (PropertyId::MultiplicativeIdentity, "left") => {
            "joining null on the left must return the operand itself"
        }
        (PropertyId::MultiplicativeIdentity, "right") => {
            "joining null on the right must return the operand itself"
        }
        (PropertyId::MultiplicativeIdentity, _) => {
            "dividing by null must return the operand itself"
        }
        (PropertyId::Sibling, _) => "some same-order sibling must reach the target under addition",
        (PropertyId::OneToOneAdd, _) => {
            "subtracting the added operand must recover the other operand exactly"
        }
        (PropertyId::OntoAdd, _) => "the difference value must complete the target under addition",
        (PropertyId::IdentityGroups, "uniqueness") => {
            "no non-zero value may act as an additive identity"
        }
        (PropertyId::IdentityGroups, "neutrality") => {
            "the zero value must act as an additive identity"
        }
        (PropertyId::IdentityGroups, "distinctness") => {
            "zeros of different orders must not be equal"
        }
        (PropertyId::IdentityGroups, _) => {
            "the zero object of the order must leave every value unchanged"
        }
        (PropertyId::Distribution, "wraparound") => {
            "the additive join wraps at its extent, outside the stated side condition"
        }
        (PropertyId::Distribution, _) => "divergence without additive wraparound",
        (PropertyId::OrderOfJoins, "product") => {
            "the extent of a multiplicative join must be the product of the operand extents"
        }
        (PropertyId::OrderOfJoins, "bits") => {
            "the bit measure of a multiplicative join must be the sum of the operands'"
        }
        (PropertyId::OrderOfJoins, _) => "an additive join must keep the common extent",
        (PropertyId::FiniteWraparound, _) => "finite addition must be exactly modular in [0, extent)",
        (PropertyId::NonIdentity, "distinctness") => "fresh atoms must be distinct objects",
        (PropertyId::NonIdentity, _) => "equality must track order and value exactly",
        (PropertyId::ClosedEvolutionCount, "count") => {
            "the closed evolutions of an order must number its extent"
        }
        (PropertyId::ClosedEvolutionCount, _) => "a unit step must cycle through the whole order",
        (PropertyId::RoundTrips, "division") => {
            "dividing out a factor must recover the very same object"
        }
        (PropertyId::RoundTrips, _) => "subtracting an addend must recover the very same object",
        (PropertyId::ExcludedMiddle, "stability") => {
            "identity and equality answers must be stable across repeats and clones"
        }
        (PropertyId::ExcludedMiddle, _) => "identical objects must also be equal",
    }
}

fn simple_report(property: PropertyId, stats: RunStats) -> PropertyReport {
    let verdict = if stats.failure_total > 0 {
        Verdict::Fails
    } else {
        Verdict::Holds
    };
    PropertyReport {
        property,
        verdict,
        cases_checked: stats.cases_checked,
        sampled: stats.sampled,
        counterexamples: stats.failures,
        note: stats.sample_note,
        elapsed: Duration::ZERO,
    }
}

fn values_by_order(config: &CheckConfig) -> BTreeMap<i64, Vec<Rational64>> {
    (2..=config.max_order as i64)
        .map(|o| (o, order_values(o, config.denominator_bound as i64)))
        .collect()
}

/// Strata over all unordered descriptor pairs `i <= j`: one stratum per
/// first index.
fn descriptor_pair_strata(n: usize) -> Strata<usize> {
    Strata::new((0..n).map(|i| (i, (n - i) as u64)).collect())
}

fn per_order_strata(
    values: &BTreeMap<i64, Vec<Rational64>>,
    count: impl Fn(u64) -> u64,
) -> Strata<i64> {
    Strata::new(
        values
            .iter()
            .map(|(&o, vs)| (o, count(vs.len() as u64)))
            .collect(),
    )
}

/// Decode an offset into the weak pair `(i, j)`, `i <= j < n`, in
/// lexicographic order.
fn decode_pair(mut off: u64, n: u64) -> (u64, u64) {
    for i in 0..n {
        let row = n - i;
        if off < row {
            return (i, i + off);
        }
        off -= row;
    }
    unreachable!("offset beyond the pair triangle")
}

/// Decode an offset into the weak triple `(i, j, k)`, `i <= j <= k < n`.
fn decode_triple(mut off: u64, n: u64) -> (u64, u64, u64) {
    for i in 0..n {
        let m = n - i;
        let rows = m * (m + 1) / 2;
        if off < rows {
            let (j, k) = decode_pair(off, m);
            return (i, i + j, i + k);
        }
        off -= rows;
    }
    unreachable!("offset beyond the triple tetrahedron")
}

fn mint(universe: &mut Universe, value: Rational64, extent: i64) -> Infon64 {
    AtomDescriptor { value, extent }.mint(universe)
}

fn literal(value: Rational64, extent: i64) -> String {
    AtomDescriptor { value, extent }.literal()
}

fn zero_at(extent: i64) -> Infon64 {
    zero_of_order(Order::from_extent(extent).expect("checked extents are valid"))
        .expect("checked extents are valid")
}

/// Floored remainder of a rational by an integral extent, in `[0, extent)`.
fn mod_extent(v: Rational64, extent: i64) -> Rational64 {
    let m = Rational64::from_integer(extent);
    v - m * (v / m).floor()
}

/// The integral extent of a finite, integral-order infon.
fn finite_extent(x: &Infon64) -> Option<i64> {
    match x.order().ok()? {
        Order::Finite(e) if e.is_integer() => Some(e.to_integer()),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Kernels: one case each, shared by the driver and replay.

fn kernel_commutativity_mul(a: &Infon64, b: &Infon64) -> Violation {
    let ab = mul_join(a, b).expect("fresh operands join multiplicatively");
    let ba = mul_join(b, a).expect("fresh operands join multiplicatively");
    if ab.identical(&ba) {
        None
    } else {
        Some(("commutativity", ab.structure_string(), ba.structure_string()))
    }
}

fn kernel_commutativity_add(a: &Infon64, b: &Infon64) -> Violation {
    let ab = add_join(a, b).expect("same-order operands join additively");
    let ba = add_join(b, a).expect("same-order operands join additively");
    if ab.identical(&ba) {
        None
    } else {
        Some(("commutativity", ab.structure_string(), ba.structure_string()))
    }
}

fn kernel_associativity_mul(a: &Infon64, b: &Infon64, c: &Infon64) -> Violation {
    let left = mul_join(&mul_join(a, b).expect("disjoint"), c).expect("disjoint");
    let right = mul_join(a, &mul_join(b, c).expect("disjoint")).expect("disjoint");
    if left.identical(&right) {
        None
    } else {
        Some((
            "associativity",
            left.structure_string(),
            right.structure_string(),
        ))
    }
}

fn kernel_associativity_add(a: &Infon64, b: &Infon64, c: &Infon64) -> Violation {
    let left = add_join(&add_join(a, b).expect("same order"), c).expect("same order");
    let right = add_join(a, &add_join(b, c).expect("same order")).expect("same order");
    if left.identical(&right) {
        None
    } else {
        Some((
            "associativity",
            left.structure_string(),
            right.structure_string(),
        ))
    }
}

fn kernel_additive_group(a: &Infon64, b: &Infon64, c: &Infon64, extent: i64) -> Violation {
    let sum = add_join(a, b).expect("same order");
    let value = *sum.value().expect("additive joins evaluate");
    if value.is_negative() || value >= Rational64::from_integer(extent) {
        return Some((
            "closure",
            infon_core::ratio_string(&value),
            format!("[0, {extent})"),
        ));
    }
    let left = add_join(&add_join(a, b).expect("same order"), c).expect("same order");
    let right = add_join(a, &add_join(b, c).expect("same order")).expect("same order");
    if !left.identical(&right) {
        return Some((
            "associativity",
            left.structure_string(),
            right.structure_string(),
        ));
    }
    let zero = zero_at(extent);
    let kept = add_join(a, &zero).expect("same order");
    if !kept.equal(a) {
        return Some(("identity", kept.to_string(), a.to_string()));
    }
    let inverse = add_inverse(a).expect("finite orders invert additively");
    let annihilated = add_join(a, &inverse).expect("same order");
    if !annihilated.equal(&zero) {
        return Some(("inverse", annihilated.to_string(), zero.to_string()));
    }
    None
}

fn kernel_multiplicative_identity(a: &Infon64) -> Violation {
    let null = infon_core::null_infon::<i64>();
    let right = mul_join(a, &null).expect("null joins with anything");
    if !right.identical(a) {
        return Some(("right", right.structure_string(), a.structure_string()));
    }
    let left = mul_join(&null, a).expect("null joins with anything");
    if !left.identical(a) {
        return Some(("left", left.structure_string(), a.structure_string()));
    }
    let divided = div_join(a, &null).expect("dividing by null is trivial");
    if !divided.identical(a) {
        return Some(("division", divided.structure_string(), a.structure_string()));
    }
    None
}

fn kernel_sibling(universe: &mut Universe, a: &Infon64, c: &Infon64) -> Violation {
    let extent = finite_extent(a).expect("sibling cases use finite integral orders");
    let va = *a.value().expect("atoms evaluate");
    let vc = *c.value().expect("atoms evaluate");
    let b = mint(universe, mod_extent(vc - va, extent), extent);
    let sum = add_join(a, &b).expect("same order");
    if sum.equal(c) {
        None
    } else {
        Some(("sibling", sum.to_string(), c.to_string()))
    }
}

fn kernel_one_to_one_add(a: &Infon64, x: &Infon64) -> Violation {
    let sum = add_join(a, x).expect("same order");
    let recovered = sub_join(&sum, a).expect("same order");
    if recovered.identical(x) {
        None
    } else {
        Some((
            "cancellation",
            recovered.structure_string(),
            x.structure_string(),
        ))
    }
}

fn kernel_onto_add(universe: &mut Universe, a: &Infon64, c: &Infon64) -> Violation {
    let extent = finite_extent(a).expect("onto cases use finite integral orders");
    let va = *a.value().expect("atoms evaluate");
    let vc = *c.value().expect("atoms evaluate");
    let x = mint(universe, mod_extent(vc - va, extent), extent);
    let sum = add_join(a, &x).expect("same order");
    if sum.equal(c) {
        None
    } else {
        Some(("onto", sum.to_string(), c.to_string()))
    }
}

fn kernel_identity_grid(e: &Infon64, v: &Infon64) -> Violation {
    let sum = add_join(v, e).expect("same order");
    let ve = *e.value().expect("atoms evaluate");
    let acts_as_identity = sum.equal(v);
    if ve.is_zero() && !acts_as_identity {
        return Some(("neutrality", sum.to_string(), v.to_string()));
    }
    if !ve.is_zero() && acts_as_identity {
        return Some(("uniqueness", sum.to_string(), v.to_string()));
    }
    None
}

fn kernel_identity_distinct(m: i64, n: i64) -> Violation {
    let zm = zero_at(m);
    let zn = zero_at(n);
    if zm.equal(&zn) {
        Some(("distinctness", zm.to_string(), zn.to_string()))
    } else {
        None
    }
}

fn kernel_identity_apply(a: &Infon64) -> Violation {
    let extent = finite_extent(a).expect("application cases use finite integral orders");
    let zero = zero_at(extent);
    let kept = add_join(a, &zero).expect("same order");
    if kept.equal(a) {
        None
    } else {
        Some(("application", kept.to_string(), a.to_string()))
    }
}

fn kernel_distribution(a: &Infon64, b: &Infon64, c: &Infon64) -> Violation {
    let extent = finite_extent(b).expect("distribution cases use finite integral orders");
    let vb = *b.value().expect("atoms evaluate");
    let vc = *c.value().expect("atoms evaluate");
    let lhs = mul_join(a, &add_join(b, c).expect("same order")).expect("disjoint");
    let rhs = add_join(
        &mul_join(a, b).expect("disjoint"),
        &mul_join(a, c).expect("disjoint"),
    )
    .expect("both products share one order");
    if lhs.equal(&rhs) {
        return None;
    }
    let wraps = vb + vc >= Rational64::from_integer(extent);
    let kind = if wraps { "wraparound" } else { "distribution" };
    Some((kind, lhs.to_string(), rhs.to_string()))
}

fn kernel_order_of_joins(a: &Infon64, b: &Infon64) -> Violation {
    let m = finite_extent(a).expect("order cases use finite integral orders");
    let n = finite_extent(b).expect("order cases use finite integral orders");
    let product = mul_join(a, b).expect("disjoint");
    let got = product.order().expect("products evaluate").clone();
    let want = Order::from_extent(m * n).expect("products of valid extents are valid");
    if got != want {
        return Some(("product", got.to_string(), want.to_string()));
    }
    let got_bits = order_to_bits(&got).expect("finite orders measure");
    let want_bits = order_to_bits(a.order().expect("atoms evaluate"))
        .expect("finite orders measure")
        + order_to_bits(b.order().expect("atoms evaluate")).expect("finite orders measure");
    if (got_bits - want_bits).abs() > 1e-9 {
        return Some((
            "bits",
            format!("{got_bits:.12}"),
            format!("{want_bits:.12}"),
        ));
    }
    if m == n {
        let sum = add_join(a, b).expect("same order");
        let got = sum.order().expect("sums evaluate").clone();
        let want = Order::from_extent(m).expect("valid extent");
        if got != want {
            return Some(("preservation", got.to_string(), want.to_string()));
        }
    }
    None
}

fn kernel_finite_wraparound(a: &Infon64, b: &Infon64) -> Violation {
    let extent = finite_extent(a).expect("wraparound cases use finite integral orders");
    let va = *a.value().expect("atoms evaluate");
    let vb = *b.value().expect("atoms evaluate");
    let sum = add_join(a, b).expect("same order");
    let got = *sum.value().expect("additive joins evaluate");
    let want = mod_extent(va + vb, extent);
    let in_range = !got.is_negative() && got < Rational64::from_integer(extent);
    if got == want && in_range {
        None
    } else {
        Some(("modular", sum.to_string(), literal(want, extent)))
    }
}

fn kernel_non_identity(a: &Infon64, b: &Infon64) -> Violation {
    if a.identical(b) {
        return Some((
            "distinctness",
            "identical(a, b) = true".into(),
            "identical(a, b) = false".into(),
        ));
    }
    let want = a.order().ok() == b.order().ok() && a.value().ok() == b.value().ok();
    let got = a.equal(b);
    if got != want {
        return Some((
            "equality",
            format!("equal(a, b) = {got}"),
            format!("equal(a, b) = {want}"),
        ));
    }
    None
}

fn kernel_closed_evolution(universe: &mut Universe, extent: i64) -> Violation {
    let got = count_closed_evolutions(extent as u64);
    if got != extent as u64 {
        return Some(("count", got.to_string(), extent.to_string()));
    }
    if extent >= 2 {
        let start = mint(universe, Rational64::zero(), extent);
        let step = mint(universe, Rational64::one(), extent);
        let cycle = trajectory(&start, &step).expect("integral same-order operands evolve");
        if cycle.len() as i64 != extent {
            return Some(("cycle", cycle.len().to_string(), extent.to_string()));
        }
    }
    None
}

fn kernel_round_trip_mul(a: &Infon64, b: &Infon64) -> Violation {
    let product = mul_join(a, b).expect("disjoint");
    let quotient = div_join(&product, b).expect("the factor divides out");
    if quotient.identical(a) {
        None
    } else {
        Some((
            "division",
            quotient.structure_string(),
            a.structure_string(),
        ))
    }
}

fn kernel_round_trip_add(a: &Infon64, b: &Infon64) -> Violation {
    let sum = add_join(a, b).expect("same order");
    let difference = sub_join(&sum, b).expect("same order");
    if difference.identical(a) {
        None
    } else {
        Some((
            "subtraction",
            difference.structure_string(),
            a.structure_string(),
        ))
    }
}

fn kernel_excluded_middle(a: &Infon64, b: &Infon64) -> Violation {
    let render = |identical: bool, equal: bool| {
        format!("identical(a, b) = {identical}, equal(a, b) = {equal}")
    };
    let first = (a.identical(b), a.equal(b));
    let repeat = (a.identical(b), a.equal(b));
    let (ac, bc) = (a.clone(), b.clone());
    let cloned = (ac.identical(&bc), ac.equal(&bc));
    if repeat != first {
        return Some(("stability", render(first.0, first.1), render(repeat.0, repeat.1)));
    }
    if cloned != first {
        return Some(("stability", render(first.0, first.1), render(cloned.0, cloned.1)));
    }
    if first.0 && !first.1 {
        return Some((
            "implication",
            "identical(a, b) = true".into(),
            "equal(a, b) = false".into(),
        ));
    }
    None
}

// ---------------------------------------------------------------------------
// Per-property drivers.

fn check_commutativity_mul(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::CommutativityMul;
    let atoms = enumerate_atoms(config);
    let strata = descriptor_pair_strata(atoms.len());
    let stats = drive(config, property, strata, |&i, off| {
        let j = i + off as usize;
        let mut u = Universe::new();
        let a = atoms[i].mint(&mut u);
        let b = atoms[j].mint(&mut u);
        outcome(
            property,
            bind([("a", atoms[i].literal()), ("b", atoms[j].literal())]),
            kernel_commutativity_mul(&a, &b),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

fn check_commutativity_add(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::CommutativityAdd;
    let values = values_by_order(config);
    let strata = per_order_strata(&values, |v| v * (v + 1) / 2);
    let stats = drive(config, property, strata, |&o, off| {
        let vs = &values[&o];
        let (i, j) = decode_pair(off, vs.len() as u64);
        let mut u = Universe::new();
        let a = mint(&mut u, vs[i as usize], o);
        let b = mint(&mut u, vs[j as usize], o);
        outcome(
            property,
            bind([
                ("a", literal(vs[i as usize], o)),
                ("b", literal(vs[j as usize], o)),
            ]),
            kernel_commutativity_add(&a, &b),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

fn check_associativity_mul(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::AssociativityMul;
    let atoms = enumerate_atoms(config);
    let n = atoms.len() as u64;
    let strata = Strata::new(
        (0..atoms.len())
            .map(|i| {
                let m = n - i as u64;
                (i, m * (m + 1) / 2)
            })
            .collect(),
    );
    let stats = drive(config, property, strata, |&i, off| {
        let (dj, dk) = decode_pair(off, n - i as u64);
        let (j, k) = (i + dj as usize, i + dk as usize);
        let mut u = Universe::new();
        let a = atoms[i].mint(&mut u);
        let b = atoms[j].mint(&mut u);
        let c = atoms[k].mint(&mut u);
        outcome(
            property,
            bind([
                ("a", atoms[i].literal()),
                ("b", atoms[j].literal()),
                ("c", atoms[k].literal()),
            ]),
            kernel_associativity_mul(&a, &b, &c),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

fn check_associativity_add(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::AssociativityAdd;
    let values = values_by_order(config);
    let strata = per_order_strata(&values, |v| v * (v + 1) * (v + 2) / 6);
    let stats = drive(config, property, strata, |&o, off| {
        let vs = &values[&o];
        let (i, j, k) = decode_triple(off, vs.len() as u64);
        let mut u = Universe::new();
        let a = mint(&mut u, vs[i as usize], o);
        let b = mint(&mut u, vs[j as usize], o);
        let c = mint(&mut u, vs[k as usize], o);
        outcome(
            property,
            bind([
                ("a", literal(vs[i as usize], o)),
                ("b", literal(vs[j as usize], o)),
                ("c", literal(vs[k as usize], o)),
            ]),
            kernel_associativity_add(&a, &b, &c),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

fn check_additive_group(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::AdditiveGroup;
    let values = values_by_order(config);
    let strata = per_order_strata(&values, |v| v * v * v);
    let stats = drive(config, property, strata, |&o, off| {
        let vs = &values[&o];
        let v = vs.len() as u64;
        let (ia, ib, ic) = (off / (v * v), (off / v) % v, off % v);
        let mut u = Universe::new();
        let a = mint(&mut u, vs[ia as usize], o);
        let b = mint(&mut u, vs[ib as usize], o);
        let c = mint(&mut u, vs[ic as usize], o);
        outcome(
            property,
            bind([
                ("a", literal(vs[ia as usize], o)),
                ("b", literal(vs[ib as usize], o)),
                ("c", literal(vs[ic as usize], o)),
            ]),
            kernel_additive_group(&a, &b, &c, o),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

fn check_multiplicative_identity(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::MultiplicativeIdentity;
    let atoms = enumerate_atoms(config);
    let strata = Strata::new(vec![((), atoms.len() as u64)]);
    let stats = drive(config, property, strata, |_, off| {
        let d = &atoms[off as usize];
        let mut u = Universe::new();
        let a = d.mint(&mut u);
        outcome(
            property,
            bind([("a", d.literal())]),
            kernel_multiplicative_identity(&a),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

fn check_sibling(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::Sibling;
    let values = values_by_order(config);
    let strata = per_order_strata(&values, |v| v * v);
    let stats = drive(config, property, strata, |&o, off| {
        let vs = &values[&o];
        let v = vs.len() as u64;
        let (ia, ic) = (off / v, off % v);
        let mut u = Universe::new();
        let a = mint(&mut u, vs[ia as usize], o);
        let c = mint(&mut u, vs[ic as usize], o);
        outcome(
            property,
            bind([
                ("a", literal(vs[ia as usize], o)),
                ("c", literal(vs[ic as usize], o)),
            ]),
            kernel_sibling(&mut u, &a, &c),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

fn check_one_to_one_add(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::OneToOneAdd;
    let values = values_by_order(config);
    let strata = per_order_strata(&values, |v| v * v);
    let stats = drive(config, property, strata, |&o, off| {
        let vs = &values[&o];
        let v = vs.len() as u64;
        let (ia, ix) = (off / v, off % v);
        let mut u = Universe::new();
        let a = mint(&mut u, vs[ia as usize], o);
        let x = mint(&mut u, vs[ix as usize], o);
        outcome(
            property,
            bind([
                ("a", literal(vs[ia as usize], o)),
                ("x", literal(vs[ix as usize], o)),
            ]),
            kernel_one_to_one_add(&a, &x),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

fn check_onto_add(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::OntoAdd;
    let values = values_by_order(config);
    let strata = per_order_strata(&values, |v| v * v);
    let stats = drive(config, property, strata, |&o, off| {
        let vs = &values[&o];
        let v = vs.len() as u64;
        let (ia, ic) = (off / v, off % v);
        let mut u = Universe::new();
        let a = mint(&mut u, vs[ia as usize], o);
        let c = mint(&mut u, vs[ic as usize], o);
        outcome(
            property,
            bind([
                ("a", literal(vs[ia as usize], o)),
                ("c", literal(vs[ic as usize], o)),
            ]),
            kernel_onto_add(&mut u, &a, &c),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

#[derive(Clone, Copy)]
enum IdentityStratum {
    /// All `(e, v)` pairs of one order: `v + e = v` exactly when `e` is zero.
    Grid(i64),
    /// All pairs of distinct orders: their zeros must not be equal.
    Distinct,
    /// Every enumerated atom against the zero object of its order.
    Apply(i64),
}

fn check_identity_groups(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::IdentityGroups;
    let values = values_by_order(config);
    let orders: Vec<i64> = values.keys().copied().collect();
    let z = orders.len() as u64;
    let mut items: Vec<(IdentityStratum, u64)> = Vec::new();
    for (&o, vs) in &values {
        let v = vs.len() as u64;
        items.push((IdentityStratum::Grid(o), v * v));
    }
    if z >= 2 {
        items.push((IdentityStratum::Distinct, z * (z - 1) / 2));
    }
    for (&o, vs) in &values {
        items.push((IdentityStratum::Apply(o), vs.len() as u64));
    }
    let stats = drive(config, property, Strata::new(items), |key, off| match *key {
        IdentityStratum::Grid(o) => {
            let vs = &values[&o];
            let v = vs.len() as u64;
            let (ie, iv) = (off / v, off % v);
            let mut u = Universe::new();
            let e = mint(&mut u, vs[ie as usize], o);
            let val = mint(&mut u, vs[iv as usize], o);
            outcome(
                property,
                bind([
                    ("e", literal(vs[ie as usize], o)),
                    ("v", literal(vs[iv as usize], o)),
                ]),
                kernel_identity_grid(&e, &val),
                None,
            )
        }
        IdentityStratum::Distinct => {
            let (i, jw) = decode_pair(off, z - 1);
            let (m, n) = (orders[i as usize], orders[(jw + 1) as usize]);
            outcome(
                property,
                bind([("m", m.to_string()), ("n", n.to_string())]),
                kernel_identity_distinct(m, n),
                None,
            )
        }
        IdentityStratum::Apply(o) => {
            let vs = &values[&o];
            let mut u = Universe::new();
            let a = mint(&mut u, vs[off as usize], o);
            outcome(
                property,
                bind([("a", literal(vs[off as usize], o))]),
                kernel_identity_apply(&a),
                None,
            )
        }
    })?;
    Ok(simple_report(property, stats))
}

fn check_distribution(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::Distribution;
    let atoms = enumerate_atoms(config);
    let values = values_by_order(config);
    let per_a: u64 = values.values().map(|vs| (vs.len() * vs.len()) as u64).sum();
    let strata = Strata::new((0..atoms.len()).map(|i| (i, per_a)).collect());
    let stats = drive(config, property, strata, |&ia, off| {
        let (o, ib, ic) = {
            let mut rest = off;
            let mut found = None;
            for (&o, vs) in &values {
                let v = vs.len() as u64;
                if rest < v * v {
                    found = Some((o, rest / v, rest % v));
                    break;
                }
                rest -= v * v;
            }
            found.expect("offset within the stratum")
        };
        let vs = &values[&o];
        let mut u = Universe::new();
        let a = atoms[ia].mint(&mut u);
        let b = mint(&mut u, vs[ib as usize], o);
        let c = mint(&mut u, vs[ic as usize], o);
        outcome(
            property,
            bind([
                ("a", atoms[ia].literal()),
                ("b", literal(vs[ib as usize], o)),
                ("c", literal(vs[ic as usize], o)),
            ]),
            kernel_distribution(&a, &b, &c),
            Some("wraparound"),
        )
    })?;
    let verdict = if stats.failure_total > 0 {
        Verdict::Fails
    } else if stats.conditional_total > 0 {
        Verdict::HoldsConditionally
    } else {
        Verdict::Holds
    };
    let counterexamples = if stats.failure_total > 0 {
        stats.failures
    } else {
        stats.conditionals
    };
    let mut notes: Vec<String> = Vec::new();
    if let Some(sample) = stats.sample_note {
        notes.push(sample);
    }
    if stats.failure_total == 0 && stats.conditional_total > 0 {
        notes.push(format!(
            "{} of {} cases diverge, all under additive wraparound",
            stats.conditional_total, stats.cases_checked
        ));
    }
    Ok(PropertyReport {
        property,
        verdict,
        cases_checked: stats.cases_checked,
        sampled: stats.sampled,
        counterexamples,
        note: if notes.is_empty() {
            None
        } else {
            Some(notes.join("; "))
        },
        elapsed: Duration::ZERO,
    })
}

fn check_order_of_joins(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::OrderOfJoins;
    let max = config.max_order as i64;
    let strata = Strata::new((2..=max).map(|m| (m, (max - 1) as u64)).collect());
    let stats = drive(config, property, strata, |&m, off| {
        let n = 2 + off as i64;
        let mut u = Universe::new();
        let a = mint(&mut u, Rational64::one(), m);
        let b = mint(&mut u, Rational64::one(), n);
        outcome(
            property,
            bind([("a", literal(Rational64::one(), m)), ("b", literal(Rational64::one(), n))]),
            kernel_order_of_joins(&a, &b),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

fn check_finite_wraparound(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::FiniteWraparound;
    let values = values_by_order(config);
    let strata = per_order_strata(&values, |v| v * v);
    let stats = drive(config, property, strata, |&o, off| {
        let vs = &values[&o];
        let v = vs.len() as u64;
        let (ia, ib) = (off / v, off % v);
        let mut u = Universe::new();
        let a = mint(&mut u, vs[ia as usize], o);
        let b = mint(&mut u, vs[ib as usize], o);
        outcome(
            property,
            bind([
                ("a", literal(vs[ia as usize], o)),
                ("b", literal(vs[ib as usize], o)),
            ]),
            kernel_finite_wraparound(&a, &b),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

fn check_non_identity(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::NonIdentity;
    let values = values_by_order(config);
    let strata = per_order_strata(&values, |v| v * (v + 1) / 2);
    let stats = drive(config, property, strata, |&o, off| {
        let vs = &values[&o];
        let (i, j) = decode_pair(off, vs.len() as u64);
        let mut u = Universe::new();
        let a = mint(&mut u, vs[i as usize], o);
        let b = mint(&mut u, vs[j as usize], o);
        outcome(
            property,
            bind([
                ("a", literal(vs[i as usize], o)),
                ("b", literal(vs[j as usize], o)),
            ]),
            kernel_non_identity(&a, &b),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

fn check_closed_evolution_count(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::ClosedEvolutionCount;
    let strata = Strata::new((1..=config.max_order as i64).map(|o| (o, 1)).collect());
    let stats = drive(config, property, strata, |&o, _| {
        let mut u = Universe::new();
        outcome(
            property,
            bind([("o", o.to_string())]),
            kernel_closed_evolution(&mut u, o),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

#[derive(Clone, Copy)]
enum RoundStratum {
    /// One leading descriptor against every non-zero-valued descriptor.
    Mul(usize),
    /// All same-order pairs of one order.
    Add(i64),
}

fn check_round_trips(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::RoundTrips;
    let atoms = enumerate_atoms(config);
    let nonzero: Vec<AtomDescriptor> = atoms
        .iter()
        .filter(|d| !d.value.is_zero())
        .cloned()
        .collect();
    let values = values_by_order(config);
    let mut items: Vec<(RoundStratum, u64)> = (0..atoms.len())
        .map(|i| (RoundStratum::Mul(i), nonzero.len() as u64))
        .collect();
    for (&o, vs) in &values {
        let v = vs.len() as u64;
        items.push((RoundStratum::Add(o), v * v));
    }
    let stats = drive(config, property, Strata::new(items), |key, off| match *key {
        RoundStratum::Mul(ia) => {
            let d = &nonzero[off as usize];
            let mut u = Universe::new();
            let a = atoms[ia].mint(&mut u);
            let b = d.mint(&mut u);
            outcome(
                property,
                bind([("a", atoms[ia].literal()), ("b", d.literal())]),
                kernel_round_trip_mul(&a, &b),
                None,
            )
        }
        RoundStratum::Add(o) => {
            let vs = &values[&o];
            let v = vs.len() as u64;
            let (ia, ib) = (off / v, off % v);
            let mut u = Universe::new();
            let a = mint(&mut u, vs[ia as usize], o);
            let b = mint(&mut u, vs[ib as usize], o);
            outcome(
                property,
                bind([
                    ("a", literal(vs[ia as usize], o)),
                    ("b", literal(vs[ib as usize], o)),
                ]),
                kernel_round_trip_add(&a, &b),
                None,
            )
        }
    })?;
    Ok(simple_report(property, stats))
}

fn check_excluded_middle(config: &CheckConfig) -> Result<PropertyReport, CheckError> {
    let property = PropertyId::ExcludedMiddle;
    let atoms = enumerate_atoms(config);
    let strata = descriptor_pair_strata(atoms.len());
    let stats = drive(config, property, strata, |&i, off| {
        let j = i + off as usize;
        let mut u = Universe::new();
        let a = atoms[i].mint(&mut u);
        let b = atoms[j].mint(&mut u);
        outcome(
            property,
            bind([("a", atoms[i].literal()), ("b", atoms[j].literal())]),
            kernel_excluded_middle(&a, &b),
            None,
        )
    })?;
    Ok(simple_report(property, stats))
}

// ---------------------------------------------------------------------------
// Replay.

/// Re-run a recorded counterexample through the kernel that produced it.
///
/// Returns `Ok(true)` when the case still fails in the same way — same
/// violation kind, same rendered sides. `Ok(false)` means the case now
/// passes or fails differently; errors mean the record could not even be
/// interpreted.
pub fn replay(cex: &Counterexample) -> Result<bool, CheckError> {
    let kind = cex.note.split(':').next().unwrap_or("").trim();
    let mut u = Universe::new();
    let violation = match cex.property {
        PropertyId::CommutativityMul => {
            let a = parse_binding(&mut u, cex, "a")?;
            let b = parse_binding(&mut u, cex, "b")?;
            kernel_commutativity_mul(&a, &b)
        }
        PropertyId::CommutativityAdd => {
            let a = parse_binding(&mut u, cex, "a")?;
            let b = parse_binding(&mut u, cex, "b")?;
            require_same_extent(&[&a, &b])?;
            kernel_commutativity_add(&a, &b)
        }
        PropertyId::AssociativityMul => {
            let a = parse_binding(&mut u, cex, "a")?;
            let b = parse_binding(&mut u, cex, "b")?;
            let c = parse_binding(&mut u, cex, "c")?;
            kernel_associativity_mul(&a, &b, &c)
        }
        PropertyId::AssociativityAdd => {
            let a = parse_binding(&mut u, cex, "a")?;
            let b = parse_binding(&mut u, cex, "b")?;
            let c = parse_binding(&mut u, cex, "c")?;
            require_same_extent(&[&a, &b, &c])?;
            kernel_associativity_add(&a, &b, &c)
        }
        PropertyId::AdditiveGroup => {
            let a = parse_binding(&mut u, cex, "a")?;
            let b = parse_binding(&mut u, cex, "b")?;
            let c = parse_binding(&mut u, cex, "c")?;
            let o = require_same_extent(&[&a, &b, &c])?;
            kernel_additive_group(&a, &b, &c, o)
        }
        PropertyId::MultiplicativeIdentity => {
            let a = parse_binding(&mut u, cex, "a")?;
            kernel_multiplicative_identity(&a)
        }
        PropertyId::Sibling => {
            let a = parse_binding(&mut u, cex, "a")?;
            let c = parse_binding(&mut u, cex, "c")?;
            require_same_extent(&[&a, &c])?;
            kernel_sibling(&mut u, &a, &c)
        }
        PropertyId::OneToOneAdd => {
            let a = parse_binding(&mut u, cex, "a")?;
            let x = parse_binding(&mut u, cex, "x")?;
            require_same_extent(&[&a, &x])?;
            kernel_one_to_one_add(&a, &x)
        }
        PropertyId::OntoAdd => {
            let a = parse_binding(&mut u, cex, "a")?;
            let c = parse_binding(&mut u, cex, "c")?;
            require_same_extent(&[&a, &c])?;
            kernel_onto_add(&mut u, &a, &c)
        }
        PropertyId::IdentityGroups => {
            if cex.bindings.contains_key("e") {
                let e = parse_binding(&mut u, cex, "e")?;
                let v = parse_binding(&mut u, cex, "v")?;
                require_same_extent(&[&e, &v])?;
                kernel_identity_grid(&e, &v)
            } else if cex.bindings.contains_key("m") {
                let m = parse_extent_binding(cex, "m")?;
                let n = parse_extent_binding(cex, "n")?;
                kernel_identity_distinct(m, n)
            } else if cex.bindings.contains_key("a") {
                let a = parse_binding(&mut u, cex, "a")?;
                require_same_extent(&[&a])?;
                kernel_identity_apply(&a)
            } else {
                return Err(CheckError::MalformedCounterexample(
                    "identity-group records need `e`/`v`, `m`/`n`, or `a` bindings".into(),
                ));
            }
        }
        PropertyId::Distribution => {
            let a = parse_binding(&mut u, cex, "a")?;
            let b = parse_binding(&mut u, cex, "b")?;
            let c = parse_binding(&mut u, cex, "c")?;
            require_same_extent(&[&b, &c])?;
            kernel_distribution(&a, &b, &c)
        }
        PropertyId::OrderOfJoins => {
            let a = parse_binding(&mut u, cex, "a")?;
            let b = parse_binding(&mut u, cex, "b")?;
            require_same_extent(&[&a])?;
            require_same_extent(&[&b])?;
            kernel_order_of_joins(&a, &b)
        }
        PropertyId::FiniteWraparound => {
            let a = parse_binding(&mut u, cex, "a")?;
            let b = parse_binding(&mut u, cex, "b")?;
            require_same_extent(&[&a, &b])?;
            kernel_finite_wraparound(&a, &b)
        }
        PropertyId::NonIdentity => {
            let a = parse_binding(&mut u, cex, "a")?;
            let b = parse_binding(&mut u, cex, "b")?;
            kernel_non_identity(&a, &b)
        }
        PropertyId::ClosedEvolutionCount => {
            let o = parse_extent_binding(cex, "o")?;
            if !(1i64..=1i64 << 20).contains(&o) {
                return Err(CheckError::MalformedCounterexample(format!(
                    "evolution order {o} out of range"
                )));
            }
            kernel_closed_evolution(&mut u, o)
        }
        PropertyId::RoundTrips => {
            let a = parse_binding(&mut u, cex, "a")?;
            let b = parse_binding(&mut u, cex, "b")?;
            match kind {
                "division" => {
                    let nonzero = b.value().map(|v| !v.is_zero()).unwrap_or(false);
                    if !nonzero {
                        return Err(CheckError::MalformedCounterexample(
                            "division round trips need a non-zero-valued b".into(),
                        ));
                    }
                    kernel_round_trip_mul(&a, &b)
                }
                "subtraction" => {
                    require_same_extent(&[&a, &b])?;
                    kernel_round_trip_add(&a, &b)
                }
                other => {
                    return Err(CheckError::MalformedCounterexample(format!(
                        "unknown round-trip kind `{other}`"
                    )))
                }
            }
        }
        PropertyId::ExcludedMiddle => {
            let a = parse_binding(&mut u, cex, "a")?;
            let b = parse_binding(&mut u, cex, "b")?;
            kernel_excluded_middle(&a, &b)
        }
    };
    Ok(match violation {
        Some((got_kind, lhs, rhs)) => got_kind == kind && lhs == cex.lhs && rhs == cex.rhs,
        None => false,
    })
}

fn parse_binding(
    universe: &mut Universe,
    cex: &Counterexample,
    name: &str,
) -> Result<Infon64, CheckError> {
    let text = cex.bindings.get(name).ok_or_else(|| {
        CheckError::MalformedCounterexample(format!(
            "missing binding `{name}` for {}",
            cex.property
        ))
    })?;
    let parse_failure = || CheckError::ParseFailure {
        name: name.to_string(),
        text: text.clone(),
    };
    let (value, order) = parse_infon_literal::<i64>(text).ok_or_else(parse_failure)?;
    infon_from_literal(universe, value, order).map_err(|_| parse_failure())
}

fn parse_extent_binding(cex: &Counterexample, name: &str) -> Result<i64, CheckError> {
    let text = cex.bindings.get(name).ok_or_else(|| {
        CheckError::MalformedCounterexample(format!(
            "missing binding `{name}` for {}",
            cex.property
        ))
    })?;
    text.parse::<i64>().map_err(|_| CheckError::ParseFailure {
        name: name.to_string(),
        text: text.clone(),
    })
}

fn require_same_extent(operands: &[&Infon64]) -> Result<i64, CheckError> {
    let mut extents = operands.iter().map(|x| finite_extent(x));
    let first = extents.next().flatten().ok_or_else(|| {
        CheckError::MalformedCounterexample("operands must have finite integral orders".into())
    })?;
    for e in extents {
        if e != Some(first) {
            return Err(CheckError::MalformedCounterexample(
                "operands must share one finite order".into(),
            ));
        }
    }
    Ok(first)
}
