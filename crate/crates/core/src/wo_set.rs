//! Well-ordered subsets of a carrier.
//!
//! Two presentations are supported, both well-ordered by construction: a
//! finite strictly increasing list, and a lazily pulled strictly increasing
//! stream (order type at most `ω`). Finite merges of these stay in the
//! same two shapes. Every pull from a stream is checked for strict
//! increase, and every stream query takes an explicit pull budget.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::order::OrderedSemigroup;

/// A restartable generator of a strictly increasing sequence.
pub trait AscSource<E>: Send {
    /// Next term, or `None` once the sequence has ended.
    fn pull(&mut self) -> Option<E>;

    /// Rewinds to the first term.
    fn restart(&mut self);

    fn box_clone(&self) -> Box<dyn AscSource<E>>;
}

/// Source defined by its `n`-th term.
pub struct TermSource<E> {
    term: Arc<dyn Fn(usize) -> Option<E> + Send + Sync>,
    next: usize,
}

impl<E> TermSource<E> {
    pub fn new(term: impl Fn(usize) -> Option<E> + Send + Sync + 'static) -> Self {
        TermSource {
            term: Arc::new(term),
            next: 0,
        }
    }
}

impl<E: 'static> AscSource<E> for TermSource<E> {
    fn pull(&mut self) -> Option<E> {
        let t = (self.term)(self.next)?;
        self.next += 1;
        Some(t)
    }

    fn restart(&mut self) {
        self.next = 0;
    }

    fn box_clone(&self) -> Box<dyn AscSource<E>> {
        Box::new(TermSource {
            term: Arc::clone(&self.term),
            next: self.next,
        })
    }
}

type Comparator<E> = Arc<dyn Fn(&E, &E) -> Ordering + Send + Sync>;

/// Lazy sorted union of two sources.
struct MergeSource<E> {
    left: Box<dyn AscSource<E>>,
    right: Box<dyn AscSource<E>>,
    peek_left: Option<Option<E>>,
    peek_right: Option<Option<E>>,
    cmp: Comparator<E>,
}

impl<E: Clone + Send + 'static> AscSource<E> for MergeSource<E> {
    fn pull(&mut self) -> Option<E> {
        let l = self
            .peek_left
            .get_or_insert_with(|| self.left.pull())
            .clone();
        let r = self
            .peek_right
            .get_or_insert_with(|| self.right.pull())
            .clone();
        match (l, r) {
            (None, None) => None,
            (Some(x), None) => {
                self.peek_left = None;
                Some(x)
            }
            (None, Some(y)) => {
                self.peek_right = None;
                Some(y)
            }
            (Some(x), Some(y)) => match (self.cmp)(&x, &y) {
                Ordering::Less => {
                    self.peek_left = None;
                    Some(x)
                }
                Ordering::Greater => {
                    self.peek_right = None;
                    Some(y)
                }
                Ordering::Equal => {
                    self.peek_left = None;
                    self.peek_right = None;
                    Some(x)
                }
            },
        }
    }

    fn restart(&mut self) {
        self.left.restart();
        self.right.restart();
        self.peek_left = None;
        self.peek_right = None;
    }

    fn box_clone(&self) -> Box<dyn AscSource<E>> {
        Box::new(MergeSource {
            left: self.left.box_clone(),
            right: self.right.box_clone(),
            peek_left: self.peek_left.clone(),
            peek_right: self.peek_right.clone(),
            cmp: Arc::clone(&self.cmp),
        })
    }
}

/// A stream presentation with the prefix pulled so far.
pub struct AscStream<E> {
    source: Box<dyn AscSource<E>>,
    prefix: Vec<E>,
    finished: bool,
}

impl<E: Clone> Clone for AscStream<E> {
    fn clone(&self) -> Self {
        AscStream {
            source: self.source.box_clone(),
            prefix: self.prefix.clone(),
            finished: self.finished,
        }
    }
}

#[derive(Clone)]
pub enum Presentation<E> {
    Finite(Vec<E>),
    Stream(AscStream<E>),
}

/// A well-ordered subset, typically a generator set.
#[derive(Clone)]
pub struct WoSet<E> {
    presentation: Presentation<E>,
    excludes_unit: bool,
}

impl<E: fmt::Debug> fmt::Debug for WoSet<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.presentation {
            Presentation::Finite(xs) => f.debug_tuple("Finite").field(xs).finish(),
            Presentation::Stream(s) => f
                .debug_struct("Stream")
                .field("prefix", &s.prefix)
                .field("finished", &s.finished)
                .finish(),
        }
    }
}

impl<E: Clone + Send + 'static> WoSet<E> {
    /// Sorts and deduplicates `elements`.
    ///
    /// Fails on an empty list, on elements foreign to `inst`, and on the unit
    /// when `excludes_unit` is requested.
    pub fn finite<S>(inst: &S, elements: Vec<E>, excludes_unit: bool) -> Result<Self>
    where
        S: OrderedSemigroup<Element = E>,
    {
        if elements.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for e in &elements {
            inst.ensure_contains(e)?;
            if excludes_unit && inst.is_unit(e) {
                return Err(Error::UnitInGenerators(inst.format_element(e)));
            }
        }
        let mut elements = elements;
        elements.sort_by(|a, b| inst.cmp(a, b));
        elements.dedup_by(|a, b| inst.cmp(a, b) == Ordering::Equal);
        Ok(WoSet {
            presentation: Presentation::Finite(elements),
            excludes_unit,
        })
    }

    /// Stream whose `n`-th term (from 0) is `term(n)`. The terms must be
    /// strictly increasing; this is checked as they are pulled.
    pub fn stream(
        term: impl Fn(usize) -> Option<E> + Send + Sync + 'static,
        excludes_unit: bool,
    ) -> Self {
        Self::from_source(Box::new(TermSource::new(term)), excludes_unit)
    }

    pub fn from_source(source: Box<dyn AscSource<E>>, excludes_unit: bool) -> Self {
        WoSet {
            presentation: Presentation::Stream(AscStream {
                source,
                prefix: Vec::new(),
                finished: false,
            }),
            excludes_unit,
        }
    }

    pub fn presentation(&self) -> &Presentation<E> {
        &self.presentation
    }

    pub fn excludes_unit(&self) -> bool {
        self.excludes_unit
    }

    pub fn as_finite(&self) -> Option<&[E]> {
        match &self.presentation {
            Presentation::Finite(xs) => Some(xs),
            Presentation::Stream(_) => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    /// Elements known without pulling: all of a finite set, or the pulled
    /// prefix of a stream.
    pub fn known(&self) -> &[E] {
        match &self.presentation {
            Presentation::Finite(xs) => xs,
            Presentation::Stream(s) => &s.prefix,
        }
    }

    /// Forgets everything pulled from a stream.
    pub fn restart(&mut self) {
        if let Presentation::Stream(s) = &mut self.presentation {
            s.source.restart();
            s.prefix.clear();
            s.finished = false;
        }
    }

    /// Makes element `index` available in [`known`](Self::known), pulling
    /// from a stream as needed. Returns `false` when the set has fewer
    /// elements. Each pull consumes one unit of `pulls`.
    pub fn ensure<S>(&mut self, inst: &S, index: usize, pulls: &mut usize) -> Result<bool>
    where
        S: OrderedSemigroup<Element = E>,
    {
        let excludes_unit = self.excludes_unit;
        let s = match &mut self.presentation {
            Presentation::Finite(xs) => return Ok(index < xs.len()),
            Presentation::Stream(s) => s,
        };
        while s.prefix.len() <= index {
            if s.finished {
                return Ok(false);
            }
            if *pulls == 0 {
                return Err(Error::BudgetExhausted);
            }
            *pulls -= 1;
            match s.source.pull() {
                None => s.finished = true,
                Some(x) => {
                    inst.ensure_contains(&x)?;
                    if excludes_unit && inst.is_unit(&x) {
                        return Err(Error::UnitInGenerators(inst.format_element(&x)));
                    }
                    if let Some(prev) = s.prefix.last() {
                        if !inst.lt(prev, &x) {
                            return Err(Error::NotIncreasing {
                                position: s.prefix.len(),
                                previous: inst.format_element(prev),
                                next: inst.format_element(&x),
                            });
                        }
                    }
                    s.prefix.push(x);
                }
            }
        }
        Ok(true)
    }

    /// Least element: the first element of either presentation.
    pub fn wo_min<S>(&mut self, inst: &S) -> Result<E>
    where
        S: OrderedSemigroup<Element = E>,
    {
        let mut pulls = 1;
        if self.ensure(inst, 0, &mut pulls)? {
            Ok(self.known()[0].clone())
        } else {
            Err(Error::EmptyGenerators)
        }
    }

    /// Least element strictly above `x`, or `None` when there is none.
    ///
    /// On a stream this scans forward from the pulled prefix, pulling at
    /// most `pull_budget` new elements; running out is reported as
    /// [`Error::BudgetExhausted`], distinct from `None`.
    pub fn next_above<S>(&mut self, inst: &S, x: &E, pull_budget: usize) -> Result<Option<E>>
    where
        S: OrderedSemigroup<Element = E>,
    {
        let mut pulls = pull_budget;
        let mut i = self.known().partition_point(|y| inst.le(y, x));
        loop {
            if !self.ensure(inst, i, &mut pulls)? {
                return Ok(None);
            }
            let y = &self.known()[i];
            if inst.lt(x, y) {
                return Ok(Some(y.clone()));
            }
            i += 1;
        }
    }
}

/// Sorted union of two well-ordered sets over the same instance.
///
/// Two finite sets give a finite set; otherwise the result is a lazy stream
/// that restarts both inputs.
pub fn merge<S>(inst: &S, a: WoSet<S::Element>, b: WoSet<S::Element>) -> WoSet<S::Element>
where
    S: OrderedSemigroup + Clone + Send + Sync + 'static,
{
    let excludes_unit = a.excludes_unit && b.excludes_unit;
    let into_source = |w: WoSet<S::Element>| -> Box<dyn AscSource<S::Element>> {
        match w.presentation {
            Presentation::Finite(xs) => Box::new(TermSource::new(move |i| xs.get(i).cloned())),
            Presentation::Stream(mut s) => {
                s.source.restart();
                s.source
            }
        }
    };
    match (&a.presentation, &b.presentation) {
        (Presentation::Finite(xs), Presentation::Finite(ys)) => {
            let mut all = xs.clone();
            all.extend(ys.iter().cloned());
            all.sort_by(|x, y| inst.cmp(x, y));
            all.dedup_by(|x, y| inst.cmp(x, y) == Ordering::Equal);
            WoSet {
                presentation: Presentation::Finite(all),
                excludes_unit,
            }
        }
        _ => {
            let owned = inst.clone();
            let source = MergeSource {
                left: into_source(a),
                right: into_source(b),
                peek_left: None,
                peek_right: None,
                cmp: Arc::new(move |x, y| owned.cmp(x, y)),
            };
            WoSet::from_source(Box::new(source), excludes_unit)
        }
    }
}

/// Positions into a source sequence, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSubsequence {
    pub indices: Vec<usize>,
}

impl IndexSubsequence {
    pub fn values<'a, E>(&self, xs: &'a [E]) -> Vec<&'a E> {
        self.indices.iter().map(|&i| &xs[i]).collect()
    }
}

/// Greedy nondecreasing subsequence: take the smallest remaining term with
/// the smallest index, then repeat on the terms after it. Indices are
/// zero-based.
///
/// A suffix-minimum table makes this linear: `best[i]` is the position of
/// the leftmost minimum of `xs[i..]`.
pub fn extract_increasing_subsequence<S: OrderedSemigroup>(
    inst: &S,
    xs: &[S::Element],
) -> IndexSubsequence {
    let n = xs.len();
    let mut best = vec![0; n];
    for i in (0..n).rev() {
        best[i] = if i + 1 < n && inst.lt(&xs[best[i + 1]], &xs[i]) {
            best[i + 1]
        } else {
            i
        };
    }
    let mut indices = Vec::new();
    let mut start = 0;
    while start < n {
        let pick = best[start];
        indices.push(pick);
        start = pick + 1;
    }
    IndexSubsequence { indices }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{Naturals, PositiveCone, RationalGroup, Shortlex};
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn rationals() -> PositiveCone<RationalGroup<i64>> {
        PositiveCone::rationals()
    }

    fn q(p: i64, d: i64) -> Q {
        Q::new(p, d)
    }

    fn n_over_n_plus_1() -> WoSet<Q> {
        WoSet::stream(|i| Some(q(i as i64 + 1, i as i64 + 2)), true)
    }

    #[test]
    fn finite_sorts_and_dedups() {
        let r = rationals();
        let w = WoSet::finite(&r, vec![q(2, 3), q(1, 2), q(1, 2)], true).unwrap();
        assert_eq!(w.as_finite().unwrap(), &[q(1, 2), q(2, 3)]);
        let s = Shortlex::new("ab");
        let w = WoSet::finite(&s, vec!["b".into(), "a".into()], true).unwrap();
        assert_eq!(w.as_finite().unwrap(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn finite_rejects_unit_and_empty() {
        let r = rationals();
        assert_eq!(
            WoSet::finite(&r, vec![q(0, 1)], true).unwrap_err(),
            Error::UnitInGenerators("0".into())
        );
        assert!(WoSet::finite(&r, vec![q(0, 1)], false).is_ok());
        assert_eq!(
            WoSet::finite(&r, vec![], true).unwrap_err(),
            Error::EmptyGenerators
        );
    }

    #[test]
    fn minimum_of_each_presentation() {
        let r = rationals();
        let mut w = WoSet::finite(&r, vec![q(2, 3), q(1, 2)], true).unwrap();
        assert_eq!(w.wo_min(&r).unwrap(), q(1, 2));
        assert_eq!(n_over_n_plus_1().wo_min(&r).unwrap(), q(1, 2));
        let mut single = WoSet::finite(&r, vec![q(5, 1)], true).unwrap();
        assert_eq!(single.wo_min(&r).unwrap(), q(5, 1));
    }

    #[test]
    fn next_above_finite_and_stream() {
        let r = rationals();
        let mut w = WoSet::finite(&r, vec![q(1, 2), q(2, 3)], true).unwrap();
        assert_eq!(w.next_above(&r, &q(1, 2), 0).unwrap(), Some(q(2, 3)));
        assert_eq!(w.next_above(&r, &q(2, 3), 0).unwrap(), None);
        let mut s = n_over_n_plus_1();
        assert_eq!(s.next_above(&r, &q(3, 5), 10).unwrap(), Some(q(2, 3)));
        assert_eq!(s.next_above(&r, &q(1, 1), 50), Err(Error::BudgetExhausted));
    }

    #[test]
    fn stream_violations_are_reported() {
        let r = rationals();
        let mut bad = WoSet::stream(|i| Some(q(3 - i as i64, 1)), true);
        let mut pulls = 10;
        assert!(matches!(
            bad.ensure(&r, 3, &mut pulls),
            Err(Error::NotIncreasing { position: 1, .. })
        ));
        let mut with_unit = WoSet::stream(|i| Some(q(i as i64, 1)), true);
        let mut pulls = 10;
        assert!(matches!(
            with_unit.ensure(&r, 0, &mut pulls),
            Err(Error::UnitInGenerators(_))
        ));
    }

    #[test]
    fn merge_finite_and_stream() {
        let r = rationals();
        let a = WoSet::finite(&r, vec![q(1, 2)], true).unwrap();
        let b = WoSet::finite(&r, vec![q(2, 3), q(1, 2)], true).unwrap();
        let m = merge(&r, a, b);
        assert_eq!(m.as_finite().unwrap(), &[q(1, 2), q(2, 3)]);

        let two = WoSet::finite(&r, vec![q(2, 1), q(2, 3)], true).unwrap();
        let mut m = merge(&r, n_over_n_plus_1(), two);
        let mut pulls = 40;
        assert!(m.ensure(&r, 39, &mut pulls).is_ok());
        let known = m.known();
        assert_eq!(&known[..3], &[q(1, 2), q(2, 3), q(3, 4)]);
        assert!(known.windows(2).all(|w| w[0] < w[1]));
        assert!(!known.contains(&q(2, 1)));
    }

    #[test]
    fn greedy_examples() {
        let n = Naturals::<u64>::new();
        let xs = [3u64, 1, 4, 1, 5];
        let sub = extract_increasing_subsequence(&n, &xs);
        assert_eq!(sub.indices, vec![1, 3, 4]);
        assert_eq!(sub.values(&xs), vec![&1, &1, &5]);
        assert_eq!(
            extract_increasing_subsequence(&n, &[1, 2, 3]).indices,
            vec![0, 1, 2]
        );
        assert_eq!(
            extract_increasing_subsequence(&n, &[3, 2, 1]).indices,
            vec![2]
        );
        assert!(extract_increasing_subsequence(&n, &[]).indices.is_empty());
    }
}
