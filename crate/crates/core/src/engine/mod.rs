//! Strings over a generator set, their products, ascending enumeration of
//! the product set and exact fibers.
//!
//! A string is a nonempty tuple of generators; its product is the
//! left-to-right product of the factors. Factor order matters: the
//! semigroup need not be commutative, and distinct strings may share a
//! product.

mod descending;
mod fiber;
mod frontier;
mod stream;

use std::cmp::Ordering;

pub use descending::{k_largest_sums, Descending};
pub use fiber::{fiber, fiber_with_candidates, Fiber};
pub use stream::{k_smallest_products, products_up_to, Emission, Enumeration, ProductStream};

use crate::error::{Error, Result};
use crate::order::OrderedSemigroup;
use crate::wo_set::WoSet;

/// A nonempty tuple of factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductString<E> {
    factors: Vec<E>,
}

impl<E> ProductString<E> {
    pub fn new(factors: Vec<E>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyString);
        }
        Ok(ProductString { factors })
    }

    pub fn factors(&self) -> &[E] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_factors(self) -> Vec<E> {
        self.factors
    }

    pub fn format_with<S: OrderedSemigroup<Element = E>>(&self, inst: &S) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|f| inst.format_element(f))
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// The product `|s|` of the factors, left to right.
pub fn eval_string<S: OrderedSemigroup>(inst: &S, s: &ProductString<S::Element>) -> S::Element {
    let (first, rest) = s.factors.split_first().expect("nonempty");
    rest.iter().fold(first.clone(), |acc, x| inst.mul(&acc, x))
}

/// Lexicographic comparison of factor tuples, shorter prefix first.
pub fn string_cmp<S: OrderedSemigroup>(
    inst: &S,
    a: &ProductString<S::Element>,
    b: &ProductString<S::Element>,
) -> Ordering {
    for (x, y) in a.factors.iter().zip(&b.factors) {
        match inst.cmp(x, y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Upper bound on the length of strings whose product is at most a target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthBound {
    Finite(usize),
    /// Powers of the least generator never exceed the target, so length is
    /// not bounded by the target alone.
    Unbounded,
}

/// Least `L` with `min(A)^(L+1) > t`. Every factor is at least `min(A)`, so
/// every string with product at most `t` has length at most `L`.
pub fn length_bound<S: OrderedSemigroup>(
    inst: &S,
    gens: &mut WoSet<S::Element>,
    t: &S::Element,
) -> Result<LengthBound> {
    let m = gens.wo_min(inst)?;
    if inst.is_unit(&m) {
        return Err(Error::UnitInGenerators(inst.format_element(&m)));
    }
    Ok(match inst.reach_exponent(&m, t) {
        None => LengthBound::Unbounded,
        Some(n) => {
            let power = inst.pow(&m, n)?;
            let l = if inst.lt(t, &power) { n - 1 } else { n };
            LengthBound::Finite(usize::try_from(l).expect("length bound exceeds usize"))
        }
    })
}

/// Resource limits for stream queries and enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Frontier nodes that may still be expanded.
    pub expansions: usize,
    /// Generator elements that may still be pulled from a stream.
    pub pulls: usize,
}

impl Budget {
    pub fn new(expansions: usize, pulls: usize) -> Self {
        Budget { expansions, pulls }
    }

    pub fn unlimited() -> Self {
        Budget::new(usize::MAX, usize::MAX)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(1_000_000, 100_000)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{LexNaturals, Naturals, PositiveCone, RationalGroup, Shortlex};
    use num_rational::Ratio;

    #[test]
    fn eval_examples() {
        let n = Naturals::<u64>::new();
        assert_eq!(
            eval_string(&n, &ProductString::new(vec![2, 3, 2]).unwrap()),
            7
        );
        let w = Shortlex::new("ab");
        let s = ProductString::new(vec!["a".to_string(), "ba".to_string()]).unwrap();
        let t = ProductString::new(vec!["ba".to_string(), "a".to_string()]).unwrap();
        assert_eq!(eval_string(&w, &s), "aba");
        assert_eq!(eval_string(&w, &t), "baa");
        assert_eq!(eval_string(&n, &ProductString::new(vec![9]).unwrap()), 9);
        assert_eq!(ProductString::<u64>::new(vec![]), Err(Error::EmptyString));
    }

    #[test]
    fn length_bound_examples() {
        let n = Naturals::<u64>::new();
        let mut a = WoSet::finite(&n, vec![2, 3], true).unwrap();
        assert_eq!(
            length_bound(&n, &mut a, &7).unwrap(),
            LengthBound::Finite(3)
        );
        assert_eq!(
            length_bound(&n, &mut a, &1).unwrap(),
            LengthBound::Finite(0)
        );

        let r = PositiveCone::<RationalGroup<i64>>::rationals();
        let mut a = WoSet::finite(&r, vec![Ratio::new(1, 2)], true).unwrap();
        assert_eq!(
            length_bound(&r, &mut a, &Ratio::from_integer(1)).unwrap(),
            LengthBound::Finite(2)
        );

        let l = LexNaturals::<u64>::new(2);
        let mut a = WoSet::finite(&l, vec![vec![0, 1]], true).unwrap();
        assert_eq!(
            length_bound(&l, &mut a, &vec![1, 0]).unwrap(),
            LengthBound::Unbounded
        );
    }

    #[test]
    fn string_order_is_lexicographic() {
        let n = Naturals::<u64>::new();
        let s = |v: Vec<u64>| ProductString::new(v).unwrap();
        assert_eq!(string_cmp(&n, &s(vec![2, 3]), &s(vec![3])), Ordering::Less);
        assert_eq!(string_cmp(&n, &s(vec![2]), &s(vec![2, 2])), Ordering::Less);
        assert_eq!(
            string_cmp(&n, &s(vec![2, 2]), &s(vec![2, 2])),
            Ordering::Equal
        );
    }
}
