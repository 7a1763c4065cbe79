use std::cmp::Ordering;
use std::marker::PhantomData;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::parse_error;
use crate::error::Result;
use crate::order::OrderedGroup;
use crate::scalar::{from_exponent, to_exponent, SignedScalar};

/// The rationals under addition with their usual order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RationalGroup<N> {
    _scalar: PhantomData<N>,
}

impl<N> RationalGroup<N> {
    pub fn new() -> Self {
        RationalGroup {
            _scalar: PhantomData,
        }
    }
}

/// Parses `p`, `p/q` or `-p/q`.
pub(crate) fn parse_ratio<N: SignedScalar>(s: &str, instance: String) -> Result<Ratio<N>> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: N = num
        .parse()
        .map_err(|_| parse_error(s, instance.clone(), "bad numerator"))?;
    let q: N = den
        .parse()
        .map_err(|_| parse_error(s, instance.clone(), "bad denominator"))?;
    if q.is_zero() {
        return Err(parse_error(s, instance, "zero denominator"));
    }
    Ok(Ratio::new(p, q))
}

impl<N: SignedScalar> OrderedGroup for RationalGroup<N> {
    type Element = Ratio<N>;

    fn name(&self) -> String {
        "rationals".into()
    }

    fn zero(&self) -> Ratio<N> {
        Ratio::zero()
    }

    fn add(&self, a: &Ratio<N>, b: &Ratio<N>) -> Ratio<N> {
        a + b
    }

    fn neg(&self, a: &Ratio<N>) -> Ratio<N> {
        -a.clone()
    }

    fn cmp(&self, a: &Ratio<N>, b: &Ratio<N>) -> Ordering {
        a.cmp(b)
    }

    fn times(&self, a: &Ratio<N>, n: u64) -> Ratio<N> {
        a * Ratio::from_integer(from_exponent::<N>(n))
    }

    fn reach_exponent(&self, a: &Ratio<N>, b: &Ratio<N>) -> Option<u64> {
        debug_assert!(a.is_positive());
        if b <= a {
            return Some(1);
        }
        // ceil(b / a) for positive a, b
        let q = b / a;
        let n = q.numer().div_ceil(q.denom());
        Some(to_exponent(&n))
    }

    fn contains(&self, _a: &Ratio<N>) -> bool {
        true
    }

    fn parse_element(&self, s: &str) -> Result<Ratio<N>> {
        parse_ratio(s, self.name())
    }

    fn format_element(&self, a: &Ratio<N>) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Ratio<i64> {
        Ratio::new(p, d)
    }

    #[test]
    fn parse_and_format() {
        let g = RationalGroup::<i64>::new();
        assert_eq!(g.parse_element("2/4").unwrap(), q(1, 2));
        assert_eq!(g.parse_element(" -7 ").unwrap(), q(-7, 1));
        assert!(g.parse_element("1/0").is_err());
        assert!(g.parse_element("x").is_err());
        assert_eq!(g.format_element(&q(7, 6)), "7/6");
        assert_eq!(g.format_element(&q(2, 1)), "2");
    }

    #[test]
    fn reach_ceiling() {
        let g = RationalGroup::<i64>::new();
        assert_eq!(g.reach_exponent(&q(1, 2), &q(10, 1)), Some(20));
        assert_eq!(g.reach_exponent(&q(2, 3), &q(1, 1)), Some(2));
        assert_eq!(g.reach_exponent(&q(1, 2), &q(-3, 1)), Some(1));
    }
}
