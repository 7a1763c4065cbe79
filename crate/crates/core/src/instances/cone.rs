use std::cmp::Ordering;

use num_rational::Ratio;
use rand::Rng;

use super::{parse_error, RationalGroup};
use crate::error::Result;
use crate::order::{OrderedGroup, OrderedSemigroup, SampleElements};
use crate::scalar::{from_exponent, SignedScalar};

/// The nonnegative elements of an ordered group, viewed as an ordered
/// semigroup whose unit `0` is the minimum.
///
/// `PositiveCone<RationalGroup<_>>` is the additive nonnegative rationals.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PositiveCone<G> {
    group: G,
}

impl<G> PositiveCone<G> {
    pub fn new(group: G) -> Self {
        PositiveCone { group }
    }

    pub fn group(&self) -> &G {
        &self.group
    }
}

impl<N> PositiveCone<RationalGroup<N>> {
    pub fn rationals() -> Self {
        PositiveCone::new(RationalGroup::new())
    }
}

impl<G: OrderedGroup> OrderedSemigroup for PositiveCone<G> {
    type Element = G::Element;

    fn name(&self) -> String {
        format!("additive_{}", self.group.name())
    }

    fn unit(&self) -> G::Element {
        self.group.zero()
    }

    fn mul(&self, a: &G::Element, b: &G::Element) -> G::Element {
        self.group.add(a, b)
    }

    fn cmp(&self, a: &G::Element, b: &G::Element) -> Ordering {
        self.group.cmp(a, b)
    }

    fn reach_exponent(&self, a: &G::Element, b: &G::Element) -> Option<u64> {
        if self.group.is_zero(a) {
            return self.group.is_zero(b).then_some(1);
        }
        self.group.reach_exponent(a, b)
    }

    fn contains(&self, a: &G::Element) -> bool {
        self.group.contains(a) && !self.group.is_positive(&self.group.neg(a))
    }

    fn parse_element(&self, s: &str) -> Result<G::Element> {
        let v = self.group.parse_element(s)?;
        if self.contains(&v) {
            Ok(v)
        } else {
            Err(parse_error(s, self.name(), "negative value"))
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

impl<N: SignedScalar> SampleElements for PositiveCone<RationalGroup<N>> {
    /// `p/q` with `0 <= p <= 12` and `1 <= q <= 6`.
    fn sample_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Ratio<N> {
        let p = from_exponent::<N>(rng.random_range(0..=12));
        let q = from_exponent::<N>(rng.random_range(1..=6));
        Ratio::new(p, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Ratio<i64> {
        Ratio::new(p, d)
    }

    #[test]
    fn additive_rationals_basics() {
        let r = PositiveCone::<RationalGroup<i64>>::rationals();
        assert_eq!(r.name(), "additive_rationals");
        assert_eq!(r.mul(&q(1, 2), &q(2, 3)), q(7, 6));
        assert_eq!(r.pow(&q(1, 2), 4).unwrap(), q(2, 1));
        assert_eq!(r.reach_exponent(&q(1, 2), &q(10, 1)), Some(20));
        assert_eq!(r.cmp(&q(2, 3), &q(2, 3)), Ordering::Equal);
        assert!(r.parse_element("-1/2").is_err());
        assert!(r.checked_mul(&q(-1, 2), &q(1, 2)).is_err());
    }
}
