use std::cmp::Ordering;

use super::{k_smallest_products, Budget, Enumeration};
use crate::error::Result;
use crate::instances::parse_error;
use crate::order::{OrderedGroup, OrderedSemigroup};
use crate::wo_set::WoSet;

/// An ordered group read with the reversed relation `>=`.
///
/// The carrier is the set of elements `<= 0`; the product is the group
/// addition and the order is reversed, so `0` becomes the minimum and unit.
/// A set of negative elements that is well-ordered for `>=` is then an
/// ordinary well-ordered generator set, and the ascending engine lists its
/// sums from the largest down.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Descending<G> {
    group: G,
}

impl<G> Descending<G> {
    pub fn new(group: G) -> Self {
        Descending { group }
    }

    pub fn group(&self) -> &G {
        &self.group
    }
}

impl<G: OrderedGroup> OrderedSemigroup for Descending<G> {
    type Element = G::Element;

    fn name(&self) -> String {
        format!("descending_{}", self.group.name())
    }

    fn unit(&self) -> G::Element {
        self.group.zero()
    }

    fn mul(&self, a: &G::Element, b: &G::Element) -> G::Element {
        self.group.add(a, b)
    }

    fn cmp(&self, a: &G::Element, b: &G::Element) -> Ordering {
        self.group.cmp(b, a)
    }

    /// `n·a ⪰ b` reversed is `n·a <= b`, i.e. `n·(-a) >= -b` in the group.
    fn reach_exponent(&self, a: &G::Element, b: &G::Element) -> Option<u64> {
        if self.group.is_zero(a) {
            return self.group.is_zero(b).then_some(1);
        }
        self.group
            .reach_exponent(&self.group.neg(a), &self.group.neg(b))
    }

    fn contains(&self, a: &G::Element) -> bool {
        self.group.contains(a) && !self.group.is_positive(a)
    }

    fn parse_element(&self, s: &str) -> Result<G::Element> {
        let v = self.group.parse_element(s)?;
        if self.contains(&v) {
            Ok(v)
        } else {
            Err(parse_error(s, self.name(), "positive value"))
        }
    }

    fn format_element(&self, a: &G::Element) -> String {
        self.group.format_element(a)
    }

    fn pow(&self, a: &G::Element, n: u64) -> Result<G::Element> {
        if n == 0 {
            return Err(crate::Error::ZeroExponent);
        }
        Ok(self.group.times(a, n))
    }
}

/// The `k` largest sums of a generator set of negative elements that is
/// well-ordered for `>=`, in descending order.
pub fn k_largest_sums<G: OrderedGroup>(
    group: &Descending<G>,
    gens: WoSet<G::Element>,
    k: usize,
    budget: Budget,
) -> Result<Enumeration<G::Element>> {
    k_smallest_products(group, gens, k, budget)
}
