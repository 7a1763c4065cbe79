use std::cmp::Ordering;

use super::frontier::Frontier;
use super::{Budget, ProductString};
use crate::error::{Error, Result};
use crate::order::OrderedSemigroup;
use crate::wo_set::WoSet;

/// A string in the search tree, stored as generator indices.
#[derive(Debug, Clone)]
struct Node<E> {
    value: E,
    /// Product of all factors but the last; `None` for single factors.
    prefix: Option<E>,
    idx: Vec<usize>,
}

/// One element of the product set with its least witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Emission<E> {
    pub value: E,
    /// Lexicographically least string with this product.
    pub witness: ProductString<E>,
    /// Number of strings with this product. When values are coalesced this
    /// is the full fiber size: all of them sit in the frontier together.
    pub representatives: usize,
}

/// Result of a bounded enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration<E> {
    pub items: Vec<Emission<E>>,
    /// Set when the budget ran out before the request was met.
    pub truncated: bool,
}

impl<E: Clone> Enumeration<E> {
    pub fn values(&self) -> Vec<E> {
        self.items.iter().map(|e| e.value.clone()).collect()
    }
}

/// Ascending enumeration of all products over a generator set.
///
/// Best-first search over a tree containing every string exactly once: the
/// root is `(min A)`, and the children of `s` are `s` extended by `min A`
/// and `s` with its last factor replaced by the next generator. Factors
/// exceed the unit, so a child's product is strictly above its parent's
/// and popping the frontier in product order lists the product set in
/// ascending order. When a value `v` is popped, every string with product
/// `v` is in the frontier, so coalescing them gives each value once along
/// with its fiber size.
pub struct ProductStream<'a, S: OrderedSemigroup> {
    inst: &'a S,
    gens: WoSet<S::Element>,
    frontier: Frontier<Node<S::Element>>,
    /// Popped nodes whose children are not yet in the frontier.
    pending: Vec<Node<S::Element>>,
    last: Option<S::Element>,
    coalesce: bool,
}

impl<'a, S: OrderedSemigroup> ProductStream<'a, S> {
    pub fn new(inst: &'a S, mut gens: WoSet<S::Element>) -> Result<Self> {
        let min = gens.wo_min(inst)?;
        if inst.is_unit(&min) {
            return Err(Error::UnitInGenerators(inst.format_element(&min)));
        }
        let mut stream = ProductStream {
            inst,
            gens,
            frontier: Frontier::new(),
            pending: Vec::new(),
            last: None,
            coalesce: true,
        };
        stream.push(Node {
            value: min,
            prefix: None,
            idx: vec![0],
        });
        Ok(stream)
    }

    /// Emits one entry per string instead of one per value. Only useful
    /// for fault-injection checks: the output is no longer strictly
    /// ascending once two strings share a product.
    pub fn without_coalescing(mut self) -> Self {
        self.coalesce = false;
        self
    }

    pub fn generators(&self) -> &WoSet<S::Element> {
        &self.gens
    }

    /// Number of strings currently waiting in the frontier.
    pub fn frontier_len(&self) -> usize {
        self.frontier.len()
    }

    fn node_cmp(inst: &S, a: &Node<S::Element>, b: &Node<S::Element>) -> Ordering {
        inst.cmp(&a.value, &b.value).then_with(|| a.idx.cmp(&b.idx))
    }

    fn push(&mut self, node: Node<S::Element>) {
        let inst = self.inst;
        self.frontier.push(node, |a, b| Self::node_cmp(inst, a, b));
    }

    fn expand_pending(&mut self, budget: &mut Budget) -> Result<()> {
        while let Some(node) = self.pending.last() {
            let last = *node.idx.last().expect("nonempty");
            // the only step that can run out of budget comes first
            let has_next = self.gens.ensure(self.inst, last + 1, &mut budget.pulls)?;
            let node = self.pending.pop().expect("checked above");
            let known = self.gens.known();
            let least = known[0].clone();
            let next = has_next.then(|| known[last + 1].clone());

            if let Some(next) = next {
                let value = match &node.prefix {
                    Some(p) => self.inst.mul(p, &next),
                    None => next,
                };
                let mut idx = node.idx.clone();
                *idx.last_mut().expect("nonempty") = last + 1;
                debug_assert!(self.inst.lt(&node.value, &value));
                let child = Node {
                    value,
                    prefix: node.prefix.clone(),
                    idx,
                };
                self.push(child);
            }

            let value = self.inst.mul(&node.value, &least);
            debug_assert!(self.inst.lt(&node.value, &value));
            let mut idx = node.idx;
            idx.push(0);
            self.push(Node {
                value,
                prefix: Some(node.value),
                idx,
            });
        }
        Ok(())
    }

    /// Next product in ascending order.
    ///
    /// Returns [`Error::BudgetExhausted`] without losing state when the
    /// budget runs out; calling again with a fresh budget resumes.
    pub fn next_emission(&mut self, budget: &mut Budget) -> Result<Emission<S::Element>> {
        self.expand_pending(budget)?;
        if budget.expansions == 0 {
            return Err(Error::BudgetExhausted);
        }
        let inst = self.inst;
        let cmp = |a: &Node<S::Element>, b: &Node<S::Element>| Self::node_cmp(inst, a, b);
        let first = self
            .frontier
            .pop(cmp)
            .expect("the product set of a nonempty generator set is infinite");
        budget.expansions -= 1;
        let mut group = vec![first];
        if self.coalesce {
            while let Some(top) = self.frontier.peek() {
                if inst.cmp(&top.value, &group[0].value) != Ordering::Equal {
                    break;
                }
                let node = self.frontier.pop(cmp).expect("peeked");
                budget.expansions = budget.expansions.saturating_sub(1);
                group.push(node);
            }
        }

        let value = group[0].value.clone();
        if self.coalesce {
            if let Some(prev) = &self.last {
                debug_assert!(inst.lt(prev, &value), "emissions must strictly increase");
            }
        }
        let known = self.gens.known();
        let witness = ProductString::new(group[0].idx.iter().map(|&i| known[i].clone()).collect())
            .expect("nodes are nonempty");
        let representatives = group.len();
        self.last = Some(value.clone());
        self.pending = group;
        Ok(Emission {
            value,
            witness,
            representatives,
        })
    }
}

/// The `k` smallest distinct products, ascending, each with its least
/// witness. Flags the result as truncated if the budget runs out first.
pub fn k_smallest_products<S: OrderedSemigroup>(
    inst: &S,
    gens: WoSet<S::Element>,
    k: usize,
    mut budget: Budget,
) -> Result<Enumeration<S::Element>> {
    let mut stream = ProductStream::new(inst, gens)?;
    let mut items = Vec::with_capacity(k);
    let mut truncated = false;
    while items.len() < k {
        match stream.next_emission(&mut budget) {
            Ok(e) => items.push(e),
            Err(Error::BudgetExhausted) => {
                truncated = true;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Enumeration { items, truncated })
}

/// All products at most `t`, ascending. The set can be infinite (its
/// well-ordering says nothing about finiteness), in which case the budget
/// cuts it off and the result is flagged as truncated.
pub fn products_up_to<S: OrderedSemigroup>(
    inst: &S,
    gens: WoSet<S::Element>,
    t: &S::Element,
    mut budget: Budget,
) -> Result<Enumeration<S::Element>> {
    let mut stream = ProductStream::new(inst, gens)?;
    let mut items = Vec::new();
    loop {
        match stream.next_emission(&mut budget) {
            Ok(e) if inst.le(&e.value, t) => items.push(e),
            Ok(_) => {
                return Ok(Enumeration {
                    items,
                    truncated: false,
                })
            }
            Err(Error::BudgetExhausted) => {
                return Ok(Enumeration {
                    items,
                    truncated: true,
                })
            }
            Err(e) => return Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{Naturals, PositiveCone, RationalGroup, Shortlex};
    use num_rational::Ratio;

    #[test]
    fn naturals_two_three() {
        let n = Naturals::<u64>::new();
        let a = WoSet::finite(&n, vec![2, 3], true).unwrap();
        let e = k_smallest_products(&n, a.clone(), 5, Budget::default()).unwrap();
        assert_eq!(e.values(), vec![2, 3, 4, 5, 6]);
        assert!(!e.truncated);
        assert_eq!(e.items[3].witness.factors(), &[2, 3]);
        assert_eq!(e.items[3].representatives, 2);
        assert_eq!(e.items[4].representatives, 2); // (2,2,2), (3,3)

        let up = products_up_to(&n, a.clone(), &5, Budget::default()).unwrap();
        assert_eq!(up.values(), vec![2, 3, 4, 5]);
        assert!(products_up_to(&n, a, &1, Budget::default())
            .unwrap()
            .items
            .is_empty());
    }

    #[test]
    fn shortlex_products_are_all_words() {
        let s = Shortlex::new("ab");
        let a = WoSet::finite(&s, vec!["a".into(), "b".into()], true).unwrap();
        let e = k_smallest_products(&s, a, 6, Budget::default()).unwrap();
        assert_eq!(e.values(), vec!["a", "b", "aa", "ab", "ba", "bb"]);
    }

    #[test]
    fn stream_generators() {
        let r = PositiveCone::<RationalGroup<i64>>::rationals();
        let a = WoSet::stream(|i| Some(Ratio::new(i as i64 + 1, i as i64 + 2)), true);
        let e = k_smallest_products(&r, a.clone(), 3, Budget::default()).unwrap();
        assert_eq!(
            e.values(),
            vec![Ratio::new(1, 2), Ratio::new(2, 3), Ratio::new(3, 4)]
        );

        let up = products_up_to(&r, a, &Ratio::from_integer(1), Budget::new(1_000, 30)).unwrap();
        assert!(up.truncated);
        let v = up.values();
        assert_eq!(
            &v[..3],
            &[Ratio::new(1, 2), Ratio::new(2, 3), Ratio::new(3, 4)]
        );
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn budget_exhaustion_resumes() {
        let n = Naturals::<u64>::new();
        let a = WoSet::finite(&n, vec![2, 3], true).unwrap();
        let mut stream = ProductStream::new(&n, a).unwrap();
        let mut budget = Budget::new(2, 0);
        assert_eq!(stream.next_emission(&mut budget).unwrap().value, 2);
        assert_eq!(stream.next_emission(&mut budget).unwrap().value, 3);
        assert_eq!(
            stream.next_emission(&mut budget),
            Err(Error::BudgetExhausted)
        );
        let mut more = Budget::new(10, 0);
        assert_eq!(stream.next_emission(&mut more).unwrap().value, 4);
    }

    #[test]
    fn finite_stream_generators_end_cleanly() {
        let n = Naturals::<u64>::new();
        let a = WoSet::stream(|i| (i < 2).then(|| [2u64, 3][i]), true);
        let e = k_smallest_products(&n, a, 5, Budget::default()).unwrap();
        assert_eq!(e.values(), vec![2, 3, 4, 5, 6]);
    }

    #[test]
    fn unit_generator_is_rejected() {
        let n = Naturals::<u64>::new();
        let a = WoSet::finite(&n, vec![0, 2], false).unwrap();
        assert!(matches!(
            k_smallest_products(&n, a, 3, Budget::default()),
            Err(Error::UnitInGenerators(_))
        ));
    }

    #[test]
    fn without_coalescing_repeats_values() {
        let n = Naturals::<u64>::new();
        let a = WoSet::finite(&n, vec![2, 3], true).unwrap();
        let mut s = ProductStream::new(&n, a).unwrap().without_coalescing();
        let mut b = Budget::default();
        let vals: Vec<u64> = (0..6)
            .map(|_| s.next_emission(&mut b).unwrap().value)
            .collect();
        assert_eq!(vals, vec![2, 3, 4, 5, 5, 6]);
    }
}
