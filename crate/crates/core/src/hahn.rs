//! Generalized power series with well-ordered support.
//!
//! Exponents live in an ordered commutative group, coefficients in an
//! exact field. Products are well defined because, for supports that are
//! well-ordered, every exponent of a product has only finitely many
//! contributing pairs; the inverse of `1 - g` for `g` with positive support
//! is `sum g^n`, whose support is the set of all finite sums of exponents
//! of `g`, again well-ordered with finite fibers.
//!
//! The executable layer keeps series finite: a series carries a truncation
//! exponent above which terms are unknown, and every product or inverse is
//! computed up to an explicit bound.

use std::fmt::{Debug, Display};
use std::marker::PhantomData;
use std::str::FromStr;

use num_traits::{Num, Signed};

use crate::error::{Error, Result};
use crate::order::OrderedGroup;

/// Exact coefficient type.
pub trait Coefficient: Num + Signed + Clone + PartialEq + Debug + Display + FromStr {}

impl<T: Num + Signed + Clone + PartialEq + Debug + Display + FromStr> Coefficient for T {}

/// A finite series `sum c_e x^e`, exponents strictly increasing, no zero
/// coefficients. With `truncation = Some(b)`, terms above `b` are unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HahnSeries<E, C> {
    terms: Vec<(E, C)>,
    truncation: Option<E>,
}

impl<E, C> HahnSeries<E, C> {
    pub fn terms(&self) -> &[(E, C)] {
        &self.terms
    }

    pub fn truncation(&self) -> Option<&E> {
        self.truncation.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least exponent, if any.
    pub fn order(&self) -> Option<&E> {
        self.terms.first().map(|(e, _)| e)
    }
}

/// Arithmetic on series over a fixed exponent group.
#[derive(Debug, Clone)]
pub struct SeriesRing<G, C> {
    group: G,
    _coefficients: PhantomData<C>,
}

impl<G: OrderedGroup, C: Coefficient> SeriesRing<G, C> {
    pub fn new(group: G) -> Self {
        SeriesRing {
            group,
            _coefficients: PhantomData,
        }
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn zero(&self) -> HahnSeries<G::Element, C> {
        HahnSeries {
            terms: Vec::new(),
            truncation: None,
        }
    }

    pub fn one(&self) -> HahnSeries<G::Element, C> {
        self.monomial(C::one(), self.group.zero())
    }

    pub fn monomial(&self, c: C, e: G::Element) -> HahnSeries<G::Element, C> {
        self.from_terms(vec![(e, c)], None)
    }

    /// Normalizes arbitrary terms: sorts, merges equal exponents, drops
    /// zero coefficients and anything above the truncation.
    pub fn from_terms(
        &self,
        mut terms: Vec<(G::Element, C)>,
        truncation: Option<G::Element>,
    ) -> HahnSeries<G::Element, C> {
        terms.sort_by(|a, b| self.group.cmp(&a.0, &b.0));
        let mut out: Vec<(G::Element, C)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            if let Some(b) = &truncation {
                if !self.group.le(&e, b) {
                    break;
                }
            }
            match out.last_mut() {
                Some((last, acc)) if self.group.is_zero(&self.group.sub(last, &e)) => {
                    *acc = acc.clone() + c;
                }
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        HahnSeries {
            terms: out,
            truncation,
        }
    }

    fn min_truncation(&self, a: Option<&G::Element>, b: Option<&G::Element>) -> Option<G::Element> {
        match (a, b) {
            (None, None) => None,
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (Some(x), Some(y)) => Some(self.group.min_of(x, y).clone()),
        }
    }

    /// Drops terms above `bound` and marks the series as known only up to it.
    pub fn truncate(
        &self,
        f: &HahnSeries<G::Element, C>,
        bound: &G::Element,
    ) -> HahnSeries<G::Element, C> {
        let t = self.min_truncation(f.truncation.as_ref(), Some(bound));
        self.from_terms(f.terms.clone(), t)
    }

    pub fn add(
        &self,
        f: &HahnSeries<G::Element, C>,
        g: &HahnSeries<G::Element, C>,
    ) -> HahnSeries<G::Element, C> {
        let mut terms = f.terms.clone();
        terms.extend(g.terms.iter().cloned());
        let t = self.min_truncation(f.truncation.as_ref(), g.truncation.as_ref());
        self.from_terms(terms, t)
    }

    pub fn neg(&self, f: &HahnSeries<G::Element, C>) -> HahnSeries<G::Element, C> {
        HahnSeries {
            terms: f
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
            truncation: f.truncation.clone(),
        }
    }

    pub fn sub(
        &self,
        f: &HahnSeries<G::Element, C>,
        g: &HahnSeries<G::Element, C>,
    ) -> HahnSeries<G::Element, C> {
        self.add(f, &self.neg(g))
    }

    /// Lowest exponent at which `h` may be nonzero: its order, or its
    /// truncation when no term is known. `None` for an exact zero.
    fn low<'a>(&self, h: &'a HahnSeries<G::Element, C>) -> Option<&'a G::Element> {
        h.order().or(h.truncation.as_ref())
    }

    /// Product up to `bound`.
    ///
    /// The result is truncated at `bound`, or lower when a truncated operand
    /// leaves higher coefficients undetermined: unknown terms of `f` sit
    /// above `trunc(f) + low(g)`.
    pub fn mul(
        &self,
        f: &HahnSeries<G::Element, C>,
        g: &HahnSeries<G::Element, C>,
        bound: &G::Element,
    ) -> HahnSeries<G::Element, C> {
        let grp = &self.group;
        let mut limit = bound.clone();
        if let (Some(tf), Some(lg)) = (&f.truncation, self.low(g)) {
            limit = grp.min_of(&limit, &grp.add(tf, lg)).clone();
        }
        if let (Some(tg), Some(lf)) = (&g.truncation, self.low(f)) {
            limit = grp.min_of(&limit, &grp.add(tg, lf)).clone();
        }
        let mut terms = Vec::new();
        for (u, a) in &f.terms {
            for (v, b) in &g.terms {
                let e = grp.add(u, v);
                // exponents of g increase, so later pairs only grow
                if !grp.le(&e, &limit) {
                    break;
                }
                terms.push((e, a.clone() * b.clone()));
            }
        }
        self.from_terms(terms, Some(limit))
    }

    /// `h = 1 + g + g^2 + ...` up to `bound`, so that `(1 - g) h = 1` below
    /// `bound`.
    ///
    /// Iterates `h <- 1 + g h` from `h = 1`. Each round fixes every
    /// exponent reachable by one more factor of `g`; since every exponent of
    /// `g` is at least `m = min supp g > 0`, terms of `g^n` sit at `n·m` or
    /// above and the iteration stops after the least `n` with `n·m > bound`.
    pub fn geometric_inverse(
        &self,
        g: &HahnSeries<G::Element, C>,
        bound: &G::Element,
    ) -> Result<HahnSeries<G::Element, C>> {
        if let Some((e, _)) = g.terms.iter().find(|(e, _)| !self.group.is_positive(e)) {
            return Err(Error::NonPositiveExponent(self.group.format_element(e)));
        }
        let one = self.truncate(&self.one(), bound);
        let m = match g.order() {
            None => return Ok(one),
            Some(m) => m,
        };
        let rounds = self
            .group
            .reach_exponent(m, bound)
            .ok_or_else(|| Error::InfiniteTruncation(self.group.format_element(bound)))?
            + 1;
        let mut h = one.clone();
        for _ in 0..rounds {
            let next = self.add(&one, &self.mul(g, &h, bound));
            if next == h {
                return Ok(h);
            }
            h = next;
        }
        debug_assert_eq!(h, self.add(&one, &self.mul(g, &h, bound)));
        Ok(h)
    }

    /// Exponents in increasing order.
    pub fn support(&self, f: &HahnSeries<G::Element, C>) -> Vec<G::Element> {
        f.terms.iter().map(|(e, _)| e.clone()).collect()
    }

    pub fn coefficient(&self, f: &HahnSeries<G::Element, C>, e: &G::Element) -> C {
        f.terms
            .iter()
            .find(|(u, _)| self.group.is_zero(&self.group.sub(u, e)))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    /// Number of pairs `(u, v)` in `supp f × supp g` with `u + v = t`.
    pub fn convolution_pairs(
        &self,
        f: &HahnSeries<G::Element, C>,
        g: &HahnSeries<G::Element, C>,
        t: &G::Element,
    ) -> usize {
        f.terms
            .iter()
            .flat_map(|(u, _)| g.terms.iter().map(move |(v, _)| (u, v)))
            .filter(|(u, v)| {
                self.group
                    .is_zero(&self.group.sub(&self.group.add(u, v), t))
            })
            .count()
    }

    /// Parses literals such as `3 + 2*x^(1/2) - x^(7/6)`.
    ///
    /// A term is an optional coefficient, optionally followed by `*x` or
    /// `x` with an optional exponent `^e` or `^(e)`. A bare `x` has exponent
    /// `1`. The result carries no truncation.
    pub fn parse(&self, input: &str) -> Result<HahnSeries<G::Element, C>> {
        let err = |reason: &str| Error::SeriesParse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let chars: Vec<char> = input.chars().collect();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < chars.len() && chars[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            skip_ws(&mut pos);
            if pos == chars.len() {
                if first {
                    return Err(err("empty literal"));
                }
                break;
            }
            let mut negative = false;
            match chars[pos] {
                '+' | '-' => {
                    negative = chars[pos] == '-';
                    pos += 1;
                    skip_ws(&mut pos);
                }
                _ if !first => return Err(err("expected '+' or '-' between terms")),
                _ => {}
            }
            let start = pos;
            while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '/') {
                pos += 1;
            }
            let coef_text: String = chars[start..pos].iter().collect();
            let coef = if coef_text.is_empty() {
                None
            } else {
                Some(
                    coef_text
                        .parse::<C>()
                        .map_err(|_| err(&format!("bad coefficient {coef_text:?}")))?,
                )
            };
            skip_ws(&mut pos);
            let mut has_x = false;
            if pos < chars.len() && chars[pos] == '*' {
                if coef.is_none() {
                    return Err(err("'*' without a coefficient"));
                }
                pos += 1;
                skip_ws(&mut pos);
                if pos == chars.len() || chars[pos] != 'x' {
                    return Err(err("expected 'x' after '*'"));
                }
            }
            if pos < chars.len() && chars[pos] == 'x' {
                has_x = true;
                pos += 1;
            }
            if coef.is_none() && !has_x {
                return Err(err("expected a coefficient or 'x'"));
            }
            let exponent = if has_x {
                skip_ws(&mut pos);
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    skip_ws(&mut pos);
                    let text = if pos < chars.len() && chars[pos] == '(' {
                        let open = pos;
                        let mut depth = 0;
                        loop {
                            if pos == chars.len() {
                                return Err(err("unbalanced parentheses in exponent"));
                            }
                            match chars[pos] {
                                '(' => depth += 1,
                                ')' => depth -= 1,
                                _ => {}
                            }
                            pos += 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        chars[open + 1..pos - 1].iter().collect::<String>()
                    } else {
                        let s = pos;
                        while pos < chars.len()
                            && (chars[pos].is_ascii_digit() || chars[pos] == '/')
                        {
                            pos += 1;
                        }
                        chars[s..pos].iter().collect::<String>()
                    };
                    self.group
                        .parse_element(&text)
                        .map_err(|e| err(&format!("bad exponent: {e}")))?
                } else {
                    self.group
                        .parse_element("1")
                        .map_err(|_| err("bare 'x' needs an explicit exponent here"))?
                }
            } else {
                self.group.zero()
            };
            let c = coef.unwrap_or_else(C::one);
            terms.push((exponent, if negative { -c } else { c }));
            first = false;
        }
        Ok(self.from_terms(terms, None))
    }

    /// Inverse of [`parse`](Self::parse) for untruncated series.
    pub fn format(&self, f: &HahnSeries<G::Element, C>) -> String {
        if f.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in f.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            if self.group.is_zero(e) {
                out.push_str(&abs.to_string());
                continue;
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push('x');
            let text = self.group.format_element(e);
            if text == "1" {
                continue;
            }
            out.push('^');
            if text.chars().all(|ch| ch.is_ascii_digit()) {
                out.push_str(&text);
            } else {
                out.push('(');
                out.push_str(text.trim_start_matches('(').trim_end_matches(')'));
                out.push(')');
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{LexGroup, RationalGroup};
    use num_rational::Ratio;

    type Q = Ratio<i64>;
    type Ring = SeriesRing<RationalGroup<i64>, Q>;

    fn ring() -> Ring {
        SeriesRing::new(RationalGroup::new())
    }

    fn q(p: i64, d: i64) -> Q {
        Q::new(p, d)
    }

    #[test]
    fn addition() {
        let r = ring();
        let p = |s| r.parse(s).unwrap();
        assert_eq!(r.add(&p("1 + x"), &p("2 - x")), p("3"));
        assert_eq!(r.add(&p("1 + x"), &r.zero()), p("1 + x"));
        assert_eq!(r.add(&p("x^(1/2)"), &p("x^(1/2)")), p("2*x^(1/2)"));
    }

    #[test]
    fn multiplication() {
        let r = ring();
        let p = |s| r.parse(s).unwrap();
        let prod = r.mul(&p("1 - x"), &p("1 + x + x^2 + x^3"), &q(3, 1));
        assert_eq!(prod.terms(), r.one().terms());
        assert_eq!(prod.truncation(), Some(&q(3, 1)));
        let full = r.mul(&p("1 - x"), &p("1 + x + x^2 + x^3"), &q(10, 1));
        assert_eq!(r.format(&full), "1 - x^4");

        let f = p("x^(1/2) + x^(2/3)");
        let ff = r.mul(&f, &f, &q(2, 1));
        assert_eq!(r.coefficient(&ff, &q(7, 6)), q(2, 1));
        assert_eq!(r.convolution_pairs(&f, &f, &q(7, 6)), 2);
        assert!(r.mul(&f, &r.zero(), &q(2, 1)).is_zero());
    }

    #[test]
    fn truncated_operands_limit_the_product() {
        let r = ring();
        let f = r.truncate(&r.parse("1 + x").unwrap(), &q(1, 1));
        let g = r.parse("x").unwrap();
        // f is unknown above 1, g starts at 1: product unknown above 2
        let h = r.mul(&f, &g, &q(5, 1));
        assert_eq!(h.truncation(), Some(&q(2, 1)));
        assert_eq!(r.format(&h), "x + x^2");
    }

    #[test]
    fn geometric_inverse_examples() {
        let r = ring();
        let p = |s| r.parse(s).unwrap();
        let h = r.geometric_inverse(&p("x"), &q(3, 1)).unwrap();
        assert_eq!(r.format(&h), "1 + x + x^2 + x^3");

        let g = p("x^(1/2) + x^(2/3)");
        let h = r.geometric_inverse(&g, &q(4, 3)).unwrap();
        // coefficient at e = number of ordered ways to write e from {1/2, 2/3}
        assert_eq!(
            r.format(&h),
            "1 + x^(1/2) + x^(2/3) + x + 2*x^(7/6) + x^(4/3)"
        );
        let check = r.mul(&r.sub(&r.one(), &g), &h, &q(4, 3));
        assert_eq!(check.terms(), r.one().terms());

        assert_eq!(
            r.geometric_inverse(&r.zero(), &q(3, 1)).unwrap().terms(),
            r.one().terms()
        );
        assert_eq!(
            r.geometric_inverse(&p("1 + x"), &q(3, 1)),
            Err(Error::NonPositiveExponent("0".into()))
        );
    }

    #[test]
    fn support_lists_exponents() {
        let r = ring();
        assert_eq!(
            r.support(&r.parse("1 - x").unwrap()),
            vec![q(0, 1), q(1, 1)]
        );
        assert!(r.support(&r.zero()).is_empty());
        assert_eq!(
            r.support(&r.parse("x^(2/3) + x^(1/2)").unwrap()),
            vec![q(1, 2), q(2, 3)]
        );
    }

    #[test]
    fn parse_errors_and_round_trip() {
        let r = ring();
        for bad in ["", "x^", "2 3", "* x", "x^(1/2", "1 + + x", "2/0*x"] {
            assert!(r.parse(bad).is_err(), "{bad:?} should not parse");
        }
        let f = r.parse("-2/3 + 3*x^(-1/2) - x^2 + x").unwrap();
        assert_eq!(r.format(&f), "3*x^(-1/2) - 2/3 + x - x^2");
        assert_eq!(r.parse(&r.format(&f)).unwrap(), f);
    }

    #[test]
    fn lex_exponents() {
        let r: SeriesRing<LexGroup<i64>, Q> = SeriesRing::new(LexGroup::new(2));
        let g = r.parse("x^(0,1)").unwrap();
        assert_eq!(r.format(&g), "x^(0,1)");
        assert!(matches!(
            r.geometric_inverse(&g, &vec![1, 0]),
            Err(Error::InfiniteTruncation(_))
        ));
        let h = r.geometric_inverse(&g, &vec![0, 3]).unwrap();
        assert_eq!(r.format(&h), "1 + x^(0,1) + x^(0,2) + x^(0,3)");
        assert!(r.parse("x").is_err());
    }
}
