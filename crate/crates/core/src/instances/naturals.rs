use std::cmp::Ordering;
use std::marker::PhantomData;

use rand::Rng;

use super::parse_error;
use crate::error::Result;
use crate::order::{OrderedSemigroup, SampleElements};
use crate::scalar::{from_exponent, to_exponent, Scalar};

/// Natural numbers under addition. Unit `0`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Naturals<N> {
    _scalar: PhantomData<N>,
}

impl<N> Naturals<N> {
    pub fn new() -> Self {
        Naturals {
            _scalar: PhantomData,
        }
    }
}

impl<N: Scalar> OrderedSemigroup for Naturals<N> {
    type Element = N;

    fn name(&self) -> String {
        "additive_naturals".into()
    }

    fn unit(&self) -> N {
        N::zero()
    }

    fn mul(&self, a: &N, b: &N) -> N {
        a.clone() + b.clone()
    }

    fn cmp(&self, a: &N, b: &N) -> Ordering {
        a.cmp(b)
    }

    fn reach_exponent(&self, a: &N, b: &N) -> Option<u64> {
        if a.is_zero() {
            return b.is_zero().then_some(1);
        }
        let n = b.div_ceil(a);
        Some(to_exponent(&n).max(1))
    }

    fn contains(&self, a: &N) -> bool {
        *a >= N::zero()
    }

    fn parse_element(&self, s: &str) -> Result<N> {
        let v: N = s
            .trim()
            .parse()
            .map_err(|_| parse_error(s, self.name(), "expected a natural number"))?;
        if self.contains(&v) {
            Ok(v)
        } else {
            Err(parse_error(s, self.name(), "negative value"))
        }
    }

    fn format_element(&self, a: &N) -> String {
        a.to_string()
    }

    fn pow(&self, a: &N, n: u64) -> Result<N> {
        if n == 0 {
            return Err(crate::Error::ZeroExponent);
        }
        Ok(a.clone() * from_exponent::<N>(n))
    }
}

impl<N: Scalar> SampleElements for Naturals<N> {
    fn sample_element<R: Rng + ?Sized>(&self, rng: &mut R) -> N {
        from_exponent(rng.random_range(0..=12))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn reach_is_a_ceiling() {
        let n = Naturals::<u64>::new();
        assert_eq!(n.reach_exponent(&2, &7), Some(4));
        assert_eq!(n.reach_exponent(&2, &8), Some(4));
        assert_eq!(n.reach_exponent(&5, &1), Some(1));
        assert_eq!(n.reach_exponent(&0, &1), None);
        assert_eq!(n.reach_exponent(&0, &0), Some(1));
    }

    #[test]
    fn big_naturals_parse() {
        let n = Naturals::<BigUint>::new();
        assert_eq!(n.parse_element("12").unwrap(), BigUint::from(12u8));
        assert!(n.parse_element("-1").is_err());
        assert!(Naturals::<i64>::new().parse_element("-1").is_err());
    }
}
