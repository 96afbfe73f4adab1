//! Case-space enumeration and the exhaustive/sampled driver.
//!
//! Every property describes its domain as *strata* — families of cases
//! with known sizes, typically one family per order or per leading
//! operand. A global case index locates a stratum by prefix sums and an
//! offset within it, so exhaustive runs and uniform sampling share one
//! decoding path and produce cases in one deterministic way.

use infon_core::{new_atom, Infon64, Order, Rational64, Universe};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::{CheckConfig, CheckError, PropertyId};
use crate::report::Counterexample;

/// A value/extent pair describing an enumerable atom. Minting it in a
/// universe produces a fresh atom with those numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomDescriptor {
    pub value: Rational64,
    pub extent: i64,
}

impl AtomDescriptor {
    /// The literal spelling, e.g. `3_4` or `1/2_2`.
    pub fn literal(&self) -> String {
        format!("{}_{}", infon_core::ratio_string(&self.value), self.extent)
    }

    pub fn mint(&self, universe: &mut Universe) -> Infon64 {
        new_atom(
            universe,
            self.value.clone(),
            Order::from_extent(self.extent).expect("enumerated extents are valid"),
        )
        .expect("enumerated values are canonical")
    }
}

/// All canonical values of one order up to a denominator bound, ascending:
/// every reduced `p/q` with `0 ≤ p/q < extent` and `q ≤ denominator_bound`.
pub fn order_values(extent: i64, denominator_bound: i64) -> Vec<Rational64> {
    let mut out = Vec::new();
    for q in 1..=denominator_bound {
        for p in 0..extent * q {
            if num_integer::gcd(p, q) == 1 {
                out.push(Rational64::new(p, q));
            }
        }
    }
    out.sort();
    out
}

/// Every enumerable atom for the configuration: orders ascending from 2 to
/// `max_order` inclusive, values ascending within each order.
pub fn enumerate_atoms(config: &CheckConfig) -> Vec<AtomDescriptor> {
    let mut out = Vec::new();
    for extent in 2..=config.max_order as i64 {
        for value in order_values(extent, config.denominator_bound as i64) {
            out.push(AtomDescriptor { value, extent });
        }
    }
    out
}

/// Outcome of one case.
pub(crate) enum CaseOutcome {
    Pass,
    /// A violation of the property proper.
    Fail(Counterexample),
    /// A violation lying outside the property's side condition
    /// (recorded separately; only `Distribution` produces these).
    Conditional(Counterexample),
}

/// Aggregated results of driving one property's case space.
pub(crate) struct RunStats {
    pub cases_checked: u64,
    pub sampled: bool,
    pub sample_note: Option<String>,
    pub failures: Vec<Counterexample>,
    pub failure_total: u64,
    pub conditionals: Vec<Counterexample>,
    pub conditional_total: u64,
}

/// How many counterexamples of each kind a report retains.
pub(crate) const COUNTEREXAMPLE_CAP: usize = 5;

/// Strata with prefix sums for index decoding.
pub(crate) struct Strata<K> {
    items: Vec<(K, u64)>,
    cumulative: Vec<u64>,
    total: u64,
}

impl<K> Strata<K> {
    pub fn new(items: Vec<(K, u64)>) -> Self {
        let mut cumulative = Vec::with_capacity(items.len());
        let mut total = 0u64;
        for (_, n) in &items {
            total += n;
            cumulative.push(total);
        }
        Strata {
            items,
            cumulative,
            total,
        }
    }

    /// Locate a global case index: which stratum, and which offset inside.
    fn locate(&self, index: u64) -> (&K, u64) {
        let pos = self.cumulative.partition_point(|&c| c <= index);
        let base = if pos == 0 { 0 } else { self.cumulative[pos - 1] };
        (&self.items[pos].0, index - base)
    }
}

/// Run every case (or a uniform sample when the space exceeds the budget)
/// through `case`, collecting capped counterexample lists and full
/// violation counts.
///
/// Exhaustive runs visit indices in ascending order, so the first recorded
/// counterexample is the enumeration-smallest one. Sampled runs draw
/// uniformly (with replacement) from the index space using the seeded
/// generator; a budget below the stratum count cannot touch every family
/// even once and errors with [`CheckError::BudgetExceeded`].
pub(crate) fn drive<K>(
    config: &CheckConfig,
    property: PropertyId,
    strata: Strata<K>,
    mut case: impl FnMut(&K, u64) -> CaseOutcome,
) -> Result<RunStats, CheckError> {
    let mut stats = RunStats {
        cases_checked: 0,
        sampled: false,
        sample_note: None,
        failures: Vec::new(),
        failure_total: 0,
        conditionals: Vec::new(),
        conditional_total: 0,
    };
    let record = |stats: &mut RunStats, outcome: CaseOutcome| {
        match outcome {
            CaseOutcome::Pass => {}
            CaseOutcome::Fail(cex) => {
                stats.failure_total += 1;
                if stats.failures.len() < COUNTEREXAMPLE_CAP {
                    stats.failures.push(cex);
                }
            }
            CaseOutcome::Conditional(cex) => {
                stats.conditional_total += 1;
                if stats.conditionals.len() < COUNTEREXAMPLE_CAP {
                    stats.conditionals.push(cex);
                }
            }
        }
        stats.cases_checked += 1;
    };

    if strata.total <= config.case_budget {
        for index in 0..strata.total {
            let (key, offset) = strata.locate(index);
            let outcome = case(key, offset);
            record(&mut stats, outcome);
        }
    } else {
        let strata_count = strata.items.len() as u64;
        if config.case_budget < strata_count {
            return Err(CheckError::BudgetExceeded {
                property,
                budget: config.case_budget,
                strata: strata_count,
            });
        }
        stats.sampled = true;
        stats.sample_note = Some(format!(
            "sampled {} of {} cases",
            config.case_budget, strata.total
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(config.sample_seed.unwrap_or(0));
        for _ in 0..config.case_budget {
            let index = rng.gen_range(0..strata.total);
            let (key, offset) = strata.locate(index);
            let outcome = case(key, offset);
            record(&mut stats, outcome);
        }
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_matches_the_small_oracle() {
        let cfg = CheckConfig {
            max_order: 3,
            ..CheckConfig::default()
        };
        let atoms = enumerate_atoms(&cfg);
        let literals: Vec<String> = atoms.iter().map(|a| a.literal()).collect();
        assert_eq!(literals, vec!["0_2", "1_2", "0_3", "1_3", "2_3"]);
    }

    #[test]
    fn enumeration_with_denominator_bound() {
        let values = order_values(2, 2);
        let rendered: Vec<String> = values
            .iter()
            .map(|v| infon_core::ratio_string(v))
            .collect();
        assert_eq!(rendered, vec!["0", "1/2", "1", "3/2"]);
    }

    #[test]
    fn descriptor_count_is_sum_of_extents_at_unit_bound() {
        let cfg = CheckConfig {
            max_order: 8,
            ..CheckConfig::default()
        };
        assert_eq!(enumerate_atoms(&cfg).len(), (2..=8).sum::<i64>() as usize);
    }

    #[test]
    fn locate_decodes_prefix_sums() {
        let s = Strata::new(vec![("a", 2), ("b", 3), ("c", 1)]);
        let hits: Vec<(&str, u64)> = (0..6).map(|i| {
            let (k, off) = s.locate(i);
            (*k, off)
        }).collect();
        assert_eq!(
            hits,
            vec![("a", 0), ("a", 1), ("b", 0), ("b", 1), ("b", 2), ("c", 0)]
        );
    }
}
