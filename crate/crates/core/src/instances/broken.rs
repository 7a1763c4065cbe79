use std::cmp::Ordering;

use rand::Rng;

use super::parse_error;
use crate::error::Result;
use crate::order::{OrderedSemigroup, SampleElements};

/// Naturals under `max`. Associative with a minimal unit, but neither
/// cancellative nor strictly compatible with the order: `max(1,2) =
/// max(2,2)`. Shipped as a negative control for the axiom checks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MaxNaturals;

impl OrderedSemigroup for MaxNaturals {
    type Element = u64;

    fn name(&self) -> String {
        "max_naturals".into()
    }

    fn unit(&self) -> u64 {
        0
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        *a.max(b)
    }

    fn cmp(&self, a: &u64, b: &u64) -> Ordering {
        a.cmp(b)
    }

    fn reach_exponent(&self, a: &u64, b: &u64) -> Option<u64> {
        (a >= b).then_some(1)
    }

    fn contains(&self, _a: &u64) -> bool {
        true
    }

    fn parse_element(&self, s: &str) -> Result<u64> {
        s.trim()
            .parse()
            .map_err(|_| parse_error(s, self.name(), "expected a natural number"))
    }

    fn format_element(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl SampleElements for MaxNaturals {
    fn sample_element<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.random_range(0..=12)
    }
}
