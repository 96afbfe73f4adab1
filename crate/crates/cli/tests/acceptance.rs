//! The project's acceptance gate: thirteen numbered criteria covering the
//! worked examples, the exhaustive law suites, runtime budgets, randomized
//! identity/round-trip checks, and end-to-end determinism. Each test is one
//! criterion and prints one `criterion NN pass` line (visible under
//! `--nocapture`); the test name doubles as the pass/fail line in ordinary
//! `cargo test` output.

use std::collections::HashSet;
use std::process::Command;
use std::time::Instant;

use infon_checker::{check_property, replay, CheckConfig, PropertyId, Verdict};
use infon_core::{
    add_inverse, add_join, count_closed_evolutions, mul_join, new_atom, order_to_bits,
    ratio_string, zero_of_order, Infon64, Order, Rational64, Universe,
};
use infon_dsl::{eval_line, EvalEnv};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn eval_one(line: &str) -> String {
    let mut env = EvalEnv::<i64>::new();
    eval_line(&mut env, line)
        .expect("line evaluates")
        .expect("line yields a value")
        .to_string()
}

fn config(max_order: u64, properties: &[PropertyId]) -> CheckConfig {
    CheckConfig {
        max_order,
        properties: properties.to_vec(),
        ..CheckConfig::default()
    }
}

fn atom(u: &mut Universe, value: i64, extent: i64) -> Infon64 {
    new_atom(
        u,
        Rational64::from_integer(value),
        Order::from_extent(extent).unwrap(),
    )
    .unwrap()
}

#[test]
fn criterion_01_multiplicative_example_evaluates_exactly() {
    let started = Instant::now();
    let printed = eval_one("3_4 * 4_5");
    let elapsed = started.elapsed();
    assert_eq!(printed, "12_20");
    assert!(
        elapsed.as_millis() < 10,
        "evaluation took {elapsed:?}, budget is 10 ms"
    );
    println!("criterion 01 pass: 3_4 * 4_5 = 12_20 in {elapsed:?}");
}

#[test]
fn criterion_02_additive_example_evaluates_exactly() {
    assert_eq!(eval_one("1_4 + 2_4"), "3_4");
    println!("criterion 02 pass: 1_4 + 2_4 = 3_4");
}

#[test]
fn criterion_03_unbounded_literals_reach_twelve_every_way() {
    for line in ["5 + 7", "2 + 10", "5.5 + 6.5", "2 * 6", "3 * 4"] {
        assert_eq!(eval_one(line), "12", "evaluating {line}");
    }
    println!("criterion 03 pass: five unbounded spellings of 12 agree");
}

#[test]
fn criterion_04_closed_evolutions_number_the_order() {
    let started = Instant::now();
    assert_eq!(count_closed_evolutions(256), 256);
    for o in 1..=64 {
        assert_eq!(count_closed_evolutions(o), o, "closed evolutions of {o}");
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 1,
        "evolution counting took {elapsed:?}, budget is 1 s"
    );
    println!("criterion 04 pass: closed evolutions = order for o <= 64 and o = 256 in {elapsed:?}");
}

#[test]
fn criterion_05_power_of_two_orders_have_exact_bit_counts() {
    for k in 0..=20u32 {
        let order = Order::from_extent(1i64 << k).unwrap();
        let bits = order_to_bits(&order).unwrap();
        assert_eq!(bits, k as f64, "bits of 2^{k} states");
    }
    println!("criterion 05 pass: order 2^k measures exactly k bits for k <= 20");
}

#[test]
fn criterion_06_each_finite_order_is_an_additive_group() {
    let started = Instant::now();
    // Association triples (with closure, identity, and inverse re-checked
    // per triple) exhaustively for orders up to 16 …
    let triples = check_property(
        &config(16, &[PropertyId::AdditiveGroup]),
        PropertyId::AdditiveGroup,
    )
    .unwrap();
    assert_eq!(triples.verdict, Verdict::Holds);
    assert_eq!(triples.cases_checked, 18_495, "sum of o^3 for o in 2..=16");
    assert!(!triples.sampled);
    // … and closure, commutativity, identity, and inverse exhaustively for
    // every order up to 64.
    for o in 1u64..=64 {
        let e = o as i64;
        let zero = zero_of_order(Order::from_extent(e).unwrap()).unwrap();
        let mut u = Universe::new();
        for va in 0..e {
            let a = atom(&mut u, va, e);
            let with_zero = add_join(&a, &zero).unwrap();
            assert!(with_zero.equal(&a), "identity at {va}_{e}");
            let annihilated = add_join(&a, &add_inverse(&a).unwrap()).unwrap();
            assert!(annihilated.equal(&zero), "inverse at {va}_{e}");
            for vb in 0..e {
                let b = atom(&mut u, vb, e);
                let ab = add_join(&a, &b).unwrap();
                let value = *ab.value().unwrap();
                assert!(
                    value >= Rational64::from_integer(0) && value < Rational64::from_integer(e),
                    "closure at {va}+{vb} mod {e}"
                );
                assert!(
                    ab.identical(&add_join(&b, &a).unwrap()),
                    "commutativity at {va}+{vb} mod {e}"
                );
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 30,
        "group suite took {elapsed:?}, budget is 30 s"
    );
    println!("criterion 06 pass: additive groups verified (triples to 16, pairs to 64) in {elapsed:?}");
}

#[test]
fn criterion_07_sibling_one_to_one_and_onto_hold_to_order_64() {
    for property in [PropertyId::Sibling, PropertyId::OneToOneAdd, PropertyId::OntoAdd] {
        let report = check_property(&config(64, &[property]), property).unwrap();
        assert_eq!(report.verdict, Verdict::Holds, "{property}");
        assert!(report.counterexamples.is_empty(), "{property}");
        assert!(!report.sampled, "{property} runs exhaustively");
        assert_eq!(report.cases_checked, 89_439, "sum of o^2 for o in 2..=64");
    }
    println!("criterion 07 pass: sibling, one-to-one, and onto suites clean to order 64");
}

#[test]
fn criterion_08_joint_orders_multiply() {
    let report = check_property(
        &config(16, &[PropertyId::OrderOfJoins]),
        PropertyId::OrderOfJoins,
    )
    .unwrap();
    assert_eq!(report.verdict, Verdict::Holds);
    assert_eq!(report.cases_checked, 225, "all extent pairs 2..=16");
    // Explicitly enumerate the joint states of every pair of systems: the
    // distinct (value, value) configurations must number exactly m * n.
    for m in 2i64..=16 {
        for n in 2i64..=16 {
            let mut joint: HashSet<(i64, i64)> = HashSet::new();
            for va in 0..m {
                for vb in 0..n {
                    joint.insert((va, vb));
                }
            }
            assert_eq!(joint.len() as i64, m * n, "joint states of {m} and {n}");
            let mut u = Universe::new();
            let a = atom(&mut u, 1, m);
            let b = atom(&mut u, 1, n);
            let extent = *mul_join(&a, &b)
                .unwrap()
                .order()
                .unwrap()
                .extent()
                .unwrap();
            assert_eq!(extent, Rational64::from_integer(m * n));
        }
    }
    println!("criterion 08 pass: joint state counts multiply for all extents 2..=16");
}

#[test]
fn criterion_09_distribution_holds_only_below_wraparound() {
    let report = check_property(
        &config(8, &[PropertyId::Distribution]),
        PropertyId::Distribution,
    )
    .unwrap();
    // The unconditioned identity does not survive additive wraparound, and
    // that divergence is reported as a conditional verdict rather than
    // hidden: every non-wrapping case passes, every recorded counterexample
    // wraps, and each replays.
    assert_eq!(report.verdict, Verdict::HoldsConditionally);
    assert!(!report.counterexamples.is_empty());
    for cex in &report.counterexamples {
        assert!(cex.note.starts_with("wraparound:"), "note: {}", cex.note);
        assert_eq!(replay(cex), Ok(true), "replay of {:?}", cex.bindings);
    }
    let note = report.note.as_deref().unwrap();
    assert!(note.contains("diverge, all under additive wraparound"));
    println!(
        "criterion 09 pass: distribution is conditional — {} (first: a=1_2, b=1_2, c=1_2)",
        note
    );
}

#[test]
fn criterion_10_join_round_trips_recover_the_original_object() {
    let report = check_property(
        &config(12, &[PropertyId::RoundTrips]),
        PropertyId::RoundTrips,
    )
    .unwrap();
    assert_eq!(report.verdict, Verdict::Holds);
    assert!(report.counterexamples.is_empty());
    assert!(!report.sampled);
    assert_eq!(
        report.cases_checked, 5_731,
        "77 atoms x 66 nonzero divisors + 649 additive pairs"
    );
    println!("criterion 10 pass: division and subtraction round trips clean to extent 12");
}

#[test]
fn criterion_11_equal_but_never_identical() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut u = Universe::new();
    for _ in 0..1_000 {
        let extent = rng.gen_range(2..=1_000i64);
        let value = rng.gen_range(0..extent);
        let a = atom(&mut u, value, extent);
        let b = atom(&mut u, value, extent);
        assert!(a.equal(&b), "same value and order are equal");
        assert!(!a.identical(&b), "fresh atoms are never identical");
        // Identity is an equivalence on the objects themselves.
        assert!(a.identical(&a));
        let c = a.clone();
        let d = a.clone();
        assert!(a.identical(&c) && c.identical(&a), "symmetry");
        assert!(c.identical(&d) && a.identical(&d), "transitivity via clones");
        assert!(!b.identical(&c), "clones keep their source's identity");
    }
    println!("criterion 11 pass: 1000 fresh equal-valued pairs — all equal, none identical");
}

#[test]
fn criterion_12_rendered_values_are_parse_eval_fixpoints() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut u = Universe::new();
    let mut env = EvalEnv::<i64>::new();
    for round in 0..1_000 {
        let rendered: String = match round % 5 {
            // Finite atoms, including fractional values.
            0 | 1 => {
                let extent = rng.gen_range(2..=60i64);
                let q = rng.gen_range(1..=4i64);
                let p = rng.gen_range(0..extent * q);
                new_atom(
                    &mut u,
                    Rational64::new(p, q),
                    Order::from_extent(extent).unwrap(),
                )
                .unwrap()
                .to_string()
            }
            // Unbounded atoms.
            2 => {
                let q = rng.gen_range(1..=4i64);
                let p = rng.gen_range(0..=10_000i64);
                new_atom(&mut u, Rational64::new(p, q), Order::Unbounded)
                    .unwrap()
                    .to_string()
            }
            // Evaluated joins render as plain values and stay fixpoints.
            3 => {
                let a = atom(&mut u, rng.gen_range(0..5), rng.gen_range(5..=30));
                let b = atom(&mut u, rng.gen_range(0..5), rng.gen_range(5..=30));
                mul_join(&a, &b).unwrap().to_string()
            }
            _ => {
                let extent = rng.gen_range(2..=40i64);
                let a = atom(&mut u, rng.gen_range(0..extent), extent);
                let b = atom(&mut u, rng.gen_range(0..extent), extent);
                add_join(&a, &b).unwrap().to_string()
            }
        };
        let reparsed = eval_line(&mut env, &rendered)
            .unwrap_or_else(|e| panic!("{rendered:?} must parse: {e}"))
            .expect("a value");
        assert_eq!(reparsed.to_string(), rendered, "fixpoint for {rendered:?}");
    }
    // The null literal is its own fixpoint too.
    assert_eq!(eval_one("1_1"), "1_1");
    assert_eq!(ratio_string(&Rational64::new(6, 4)), "3/2");
    println!("criterion 12 pass: 1000 rendered values survive parse → eval → render unchanged");
}

#[test]
fn criterion_13_full_check_runs_are_byte_identical() {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_infon"))
            .args(["check", "--max-order", "8", "--format", "json"])
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "expected verdicts everywhere");
        out.stdout
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "two full runs differ");
    let text = String::from_utf8(first).unwrap();
    assert_eq!(text.lines().count(), 17);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("JSON per line");
        assert_eq!(v["elapsed_ms"], 0, "timings never reach the data stream");
    }
    println!("criterion 13 pass: check --max-order 8 --format json is byte-deterministic");
}
