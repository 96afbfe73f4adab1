//! What to check and how hard to try.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// The checkable properties, in canonical reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PropertyId {
    CommutativityMul,
    CommutativityAdd,
    AssociativityMul,
    AssociativityAdd,
    AdditiveGroup,
    MultiplicativeIdentity,
    Sibling,
    OneToOneAdd,
    OntoAdd,
    IdentityGroups,
    Distribution,
    OrderOfJoins,
    FiniteWraparound,
    NonIdentity,
    ClosedEvolutionCount,
    RoundTrips,
    ExcludedMiddle,
}

impl PropertyId {
    pub const ALL: [PropertyId; 17] = [
        PropertyId::CommutativityMul,
        PropertyId::CommutativityAdd,
        PropertyId::AssociativityMul,
        PropertyId::AssociativityAdd,
        PropertyId::AdditiveGroup,
        PropertyId::MultiplicativeIdentity,
        PropertyId::Sibling,
        PropertyId::OneToOneAdd,
        PropertyId::OntoAdd,
        PropertyId::IdentityGroups,
        PropertyId::Distribution,
        PropertyId::OrderOfJoins,
        PropertyId::FiniteWraparound,
        PropertyId::NonIdentity,
        PropertyId::ClosedEvolutionCount,
        PropertyId::RoundTrips,
        PropertyId::ExcludedMiddle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyId::CommutativityMul => "CommutativityMul",
            PropertyId::CommutativityAdd => "CommutativityAdd",
            PropertyId::AssociativityMul => "AssociativityMul",
            PropertyId::AssociativityAdd => "AssociativityAdd",
            PropertyId::AdditiveGroup => "AdditiveGroup",
            PropertyId::MultiplicativeIdentity => "MultiplicativeIdentity",
            PropertyId::Sibling => "Sibling",
            PropertyId::OneToOneAdd => "OneToOneAdd",
            PropertyId::OntoAdd => "OntoAdd",
            PropertyId::IdentityGroups => "IdentityGroups",
            PropertyId::Distribution => "Distribution",
            PropertyId::OrderOfJoins => "OrderOfJoins",
            PropertyId::FiniteWraparound => "FiniteWraparound",
            PropertyId::NonIdentity => "NonIdentity",
            PropertyId::ClosedEvolutionCount => "ClosedEvolutionCount",
            PropertyId::RoundTrips => "RoundTrips",
            PropertyId::ExcludedMiddle => "ExcludedMiddle",
        }
    }

    /// A self-contained statement of what the property asserts over the
    /// enumerated finite domain, and what verdict to expect.
    pub fn statement(self) -> &'static str {
        match self {
            PropertyId::CommutativityMul => {
                "For fresh atoms a, b (disjoint support), mul_join(a, b) is identical to \
                 mul_join(b, a): multiplicative joins carry no operand order. Expected: Holds."
            }
            PropertyId::CommutativityAdd => {
                "For fresh atoms a, b of one common order, add_join(a, b) is identical to \
                 add_join(b, a). Expected: Holds."
            }
            PropertyId::AssociativityMul => {
                "For fresh atoms a, b, c, mul_join(mul_join(a, b), c) is identical to \
                 mul_join(a, mul_join(b, c)): grouping of same-class multiplicative joins \
                 does not exist in the canonical form. Expected: Holds."
            }
            PropertyId::AssociativityAdd => {
                "For fresh atoms a, b, c of one common order, add_join(add_join(a, b), c) \
                 is identical to add_join(a, add_join(b, c)). Expected: Holds."
            }
            PropertyId::AdditiveGroup => {
                "For every finite order o: values are closed under add_join (results stay \
                 in [0, o)), association triples agree, a + zero_of_order(o) equals a, and \
                 a + add_inverse(a) equals zero_of_order(o) — the additive structure at \
                 each order is a group. Expected: Holds."
            }
            PropertyId::MultiplicativeIdentity => {
                "mul_join(a, null) and mul_join(null, a) are identical to a, and \
                 div_join(a, null) is identical to a: the null infon is the (two-sided) \
                 multiplicative identity. Expected: Holds."
            }
            PropertyId::Sibling => {
                "For any a and any target c of a's order, some sibling b of that order \
                 satisfies add_join(a, b) equal to c: every value is reachable from every \
                 other by one additive join. Expected: Holds."
            }
            PropertyId::OneToOneAdd => {
                "Adding a fixed a is one-to-one: sub_join(add_join(a, x), a) recovers x \
                 for every x of a's order, so distinct operands never collide. \
                 Expected: Holds."
            }
            PropertyId::OntoAdd => {
                "Adding a fixed a is onto: for every target c of a's order the operand \
                 x = c - a (mod extent) satisfies add_join(a, x) equal to c. \
                 Expected: Holds."
            }
            PropertyId::IdentityGroups => {
                "Per order o, zero_of_order(o) is an additive identity and the only value \
                 acting as one; zeros of different orders are not equal to each other. \
                 Expected: Holds."
            }
            PropertyId::Distribution => {
                "mul_join(a, add_join(b, c)) equal to add_join(mul_join(a, b), \
                 mul_join(a, c)). Fails exactly where the additive join wraps at its \
                 extent and the wrapped factor changes the product; holds whenever \
                 value(b) + value(c) < extent(b). Expected: HoldsConditionally, with \
                 wraparound counterexamples."
            }
            PropertyId::OrderOfJoins => {
                "Join orders are determined by operand orders: a multiplicative join of \
                 extents m and n has extent m*n (its bit measure is the sum of the \
                 operands', within 1e-9), and an additive join preserves the common \
                 extent. Expected: Holds."
            }
            PropertyId::FiniteWraparound => {
                "Finite-order addition is exactly modular: value(add_join(a, b)) is \
                 (value(a) + value(b)) mod extent, always inside [0, extent). \
                 Expected: Holds."
            }
            PropertyId::NonIdentity => {
                "Two freshly minted atoms are never identical, even when equal: equality \
                 of order and value does not merge distinct information objects. \
                 Expected: Holds."
            }
            PropertyId::ClosedEvolutionCount => {
                "On an order of extent o, the distinct closed evolutions (step-addition \
                 transformation tables) number exactly o. Expected: Holds."
            }
            PropertyId::RoundTrips => {
                "div_join(mul_join(a, b), b) is identical to a (for non-zero-valued b), \
                 and sub_join(add_join(a, b), b) is identical to a: joins are undone \
                 exactly, recovering the very same object. Expected: Holds."
            }
            PropertyId::ExcludedMiddle => {
                "identical(a, b) and equal(a, b) are stable — repeated evaluation and \
                 evaluation through clones give the same answers, and identical implies \
                 equal: there is no middle state between identity and distinctness. \
                 Expected: Holds."
            }
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PropertyId::ALL
            .iter()
            .copied()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<&str> = PropertyId::ALL.iter().map(|p| p.name()).collect();
                format!("unknown property `{s}`; expected one of: {}", names.join(", "))
            })
    }
}

/// Configuration of one checking run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckConfig {
    /// Largest finite extent enumerated, inclusive; orders run `2..=max_order`.
    pub max_order: u64,
    /// Largest denominator of enumerated atom values; 1 means integral
    /// values only.
    pub denominator_bound: u64,
    /// Which properties to run. Order and duplicates are irrelevant; runs
    /// always proceed in canonical order.
    pub properties: Vec<PropertyId>,
    /// Seed for sampled runs. `None` means seed 0: runs are deterministic
    /// either way.
    pub sample_seed: Option<u64>,
    /// Maximum cases per property before switching from exhaustive
    /// enumeration to uniform sampling of the case space.
    pub case_budget: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            max_order: 8,
            denominator_bound: 1,
            properties: PropertyId::ALL.to_vec(),
            sample_seed: None,
            case_budget: 10_000_000,
        }
    }
}

impl CheckConfig {
    pub fn validate(&self) -> Result<(), CheckError> {
        if self.max_order < 2 {
            return Err(CheckError::InvalidConfig(
                "max_order must be at least 2".into(),
            ));
        }
        if self.max_order > (1 << 20) {
            return Err(CheckError::InvalidConfig(
                "max_order above 2^20 would overflow extent arithmetic".into(),
            ));
        }
        if self.denominator_bound < 1 {
            return Err(CheckError::InvalidConfig(
                "denominator_bound must be at least 1".into(),
            ));
        }
        if self.denominator_bound > 64 {
            return Err(CheckError::InvalidConfig(
                "denominator_bound above 64 is not supported".into(),
            ));
        }
        if self.case_budget == 0 {
            return Err(CheckError::InvalidConfig(
                "case_budget must be positive".into(),
            ));
        }
        Ok(())
    }

    /// The configured properties in canonical order, deduplicated.
    pub fn canonical_properties(&self) -> Vec<PropertyId> {
        PropertyId::ALL
            .iter()
            .copied()
            .filter(|p| self.properties.contains(p))
            .collect()
    }
}

/// Why a check could not run (distinct from a property failing).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(
        "case budget {budget} cannot cover the {strata} strata of {property}; \
         raise the budget or lower max_order"
    )]
    BudgetExceeded {
        property: PropertyId,
        budget: u64,
        strata: u64,
    },

    #[error("replay could not parse binding `{name}` = {text:?}")]
    ParseFailure { name: String, text: String },

    #[error("malformed counterexample: {0}")]
    MalformedCounterexample(String),
}
