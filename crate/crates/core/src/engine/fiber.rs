use std::cmp::Ordering;

use super::{length_bound, LengthBound, ProductString};
use crate::error::{Error, Result};
use crate::order::OrderedSemigroup;
use crate::wo_set::WoSet;

/// All strings whose product is `target`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber<E> {
    pub target: E,
    pub witnesses: Vec<ProductString<E>>,
}

impl<E: Clone> Fiber<E> {
    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    /// Number of distinct factor multisets among the witnesses. Only
    /// meaningful for commutative instances, where reorderings of a string
    /// share its product.
    pub fn multiset_count<S: OrderedSemigroup<Element = E>>(&self, inst: &S) -> usize {
        let mut sorted: Vec<Vec<E>> = self
            .witnesses
            .iter()
            .map(|w| {
                let mut f = w.factors().to_vec();
                f.sort_by(|a, b| inst.cmp(a, b));
                f
            })
            .collect();
        let lex = |a: &Vec<E>, b: &Vec<E>| {
            a.iter()
                .zip(b)
                .map(|(x, y)| inst.cmp(x, y))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or_else(|| a.len().cmp(&b.len()))
        };
        sorted.sort_by(lex);
        sorted.dedup_by(|a, b| lex(a, b) == Ordering::Equal);
        sorted.len()
    }
}

/// Every string over a finite generator set with product `t`.
///
/// Depth is bounded by [`length_bound`] and by `length_cap` when given;
/// when the bound is unbounded the cap is required, and strings longer
/// than a cap are left out. Stream presentations are refused, see
/// [`fiber_with_candidates`].
pub fn fiber<S: OrderedSemigroup>(
    inst: &S,
    gens: &WoSet<S::Element>,
    t: &S::Element,
    length_cap: Option<usize>,
) -> Result<Fiber<S::Element>> {
    let elements = gens.as_finite().ok_or(Error::UnsupportedPresentation)?;
    fiber_over(inst, elements, t, length_cap)
}

/// Fiber over a stream presentation.
///
/// `candidates` must return a finite set of generators containing every
/// factor of every representative of `t`. The presentation alone does not
/// say which stream elements can occur, so the caller provides this.
pub fn fiber_with_candidates<S, F>(
    inst: &S,
    candidates: F,
    t: &S::Element,
    length_cap: Option<usize>,
) -> Result<Fiber<S::Element>>
where
    S: OrderedSemigroup,
    F: FnOnce(&S::Element) -> Vec<S::Element>,
{
    let found = candidates(t);
    let set = WoSet::finite(inst, found, true)?;
    fiber_over(inst, set.as_finite().expect("finite"), t, length_cap)
}

fn fiber_over<S: OrderedSemigroup>(
    inst: &S,
    elements: &[S::Element],
    t: &S::Element,
    length_cap: Option<usize>,
) -> Result<Fiber<S::Element>> {
    let mut finite = WoSet::finite(inst, elements.to_vec(), true)?;
    let max_len = match length_bound(inst, &mut finite, t)? {
        LengthBound::Finite(l) => length_cap.map_or(l, |c| c.min(l)),
        LengthBound::Unbounded => {
            length_cap.ok_or_else(|| Error::MissingLengthCap(inst.format_element(t)))?
        }
    };
    let mut search = Search {
        inst,
        elements,
        target: t,
        max_len,
        path: Vec::new(),
        found: Vec::new(),
    };
    search.extend(None);
    Ok(Fiber {
        target: t.clone(),
        witnesses: search.found,
    })
}

struct Search<'a, S: OrderedSemigroup> {
    inst: &'a S,
    elements: &'a [S::Element],
    target: &'a S::Element,
    max_len: usize,
    path: Vec<usize>,
    found: Vec<ProductString<S::Element>>,
}

impl<S: OrderedSemigroup> Search<'_, S> {
    /// Depth-first over factor choices in generator order, which visits
    /// strings in lexicographic order. A prefix equal to the target is a
    /// leaf: any further factor would push the product above it.
    fn extend(&mut self, prefix: Option<&S::Element>) {
        if self.path.len() == self.max_len {
            return;
        }
        for (i, a) in self.elements.iter().enumerate() {
            let p = match prefix {
                Some(p) => self.inst.mul(p, a),
                None => a.clone(),
            };
            match self.inst.cmp(&p, self.target) {
                // products grow with the last factor
                Ordering::Greater => break,
                Ordering::Equal => {
                    self.path.push(i);
                    let factors = self
                        .path
                        .iter()
                        .map(|&j| self.elements[j].clone())
                        .collect();
                    self.found
                        .push(ProductString::new(factors).expect("nonempty"));
                    self.path.pop();
                }
                Ordering::Less => {
                    self.path.push(i);
                    self.extend(Some(&p));
                    self.path.pop();
                }
            }
        }
    }
}
