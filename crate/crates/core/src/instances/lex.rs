use std::cmp::Ordering;
use std::marker::PhantomData;

use num_traits::Zero;
use rand::Rng;

use super::parse_error;
use crate::error::Result;
use crate::order::{OrderedGroup, OrderedSemigroup, SampleElements};
use crate::scalar::{from_exponent, to_exponent, Scalar, SignedScalar};

/// `N^k` under coordinatewise addition, ordered lexicographically.
///
/// Not archimedean for `k >= 2`: `(0,n) < (1,0)` for every `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LexNaturals<N> {
    k: usize,
    _scalar: PhantomData<N>,
}

impl<N> LexNaturals<N> {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "dimension must be at least 1");
        LexNaturals {
            k,
            _scalar: PhantomData,
        }
    }

    pub fn dimension(&self) -> usize {
        self.k
    }
}

/// `Z^k` under coordinatewise addition, ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LexGroup<N> {
    k: usize,
    _scalar: PhantomData<N>,
}

impl<N> LexGroup<N> {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "dimension must be at least 1");
        LexGroup {
            k,
            _scalar: PhantomData,
        }
    }

    pub fn dimension(&self) -> usize {
        self.k
    }
}

fn add<N: Scalar>(a: &[N], b: &[N]) -> Vec<N> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

fn scale<N: Scalar>(a: &[N], n: u64) -> Vec<N> {
    let n = from_exponent::<N>(n);
    a.iter().map(|x| x.clone() * n.clone()).collect()
}

/// Least `n >= 1` with `n·a >= b` lexicographically, for `a > 0`.
///
/// Let `i` be the leading coordinate of `a`. If `b` is nonzero before `i`
/// its sign there decides everything. Otherwise `n` must make `n·a_i` reach
/// `b_i`; on a tie at `i` the tails break it, costing at most one more step.
fn lex_reach<N: Scalar>(a: &[N], b: &[N]) -> Option<u64> {
    let i = a.iter().position(|x| !x.is_zero()).expect("a > 0");
    if let Some(j) = b[..i].iter().position(|x| !x.is_zero()) {
        return (b[j] < N::zero()).then_some(1);
    }
    let (ai, bi) = (&a[i], &b[i]);
    if bi <= ai {
        if bi < ai || scale(&a[i + 1..], 1).as_slice() >= &b[i + 1..] {
            return Some(1);
        }
        return Some(2);
    }
    let n0 = bi.div_ceil(ai);
    let n = to_exponent(&n0);
    if n0 * ai.clone() > *bi || scale(&a[i + 1..], n).as_slice() >= &b[i + 1..] {
        Some(n)
    } else {
        Some(n + 1)
    }
}

fn parse_vector<N: Scalar>(s: &str, k: usize, instance: String) -> Result<Vec<N>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(t);
    let coords = inner
        .split(',')
        .map(|c| c.trim().parse::<N>())
        .collect::<std::result::Result<Vec<N>, _>>()
        .map_err(|_| parse_error(s, instance.clone(), "bad coordinate"))?;
    if coords.len() != k {
        return Err(parse_error(
            s,
            instance,
            format!("expected {k} coordinates, found {}", coords.len()),
        ));
    }
    Ok(coords)
}

fn format_vector<N: Scalar>(a: &[N]) -> String {
    let parts: Vec<String> = a.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

impl<N: Scalar> OrderedSemigroup for LexNaturals<N> {
    type Element = Vec<N>;

    fn name(&self) -> String {
        format!("lex_vectors_k{}", self.k)
    }

    fn unit(&self) -> Vec<N> {
        vec![N::zero(); self.k]
    }

    fn mul(&self, a: &Vec<N>, b: &Vec<N>) -> Vec<N> {
        add(a, b)
    }

    fn cmp(&self, a: &Vec<N>, b: &Vec<N>) -> Ordering {
        a.cmp(b)
    }

    fn reach_exponent(&self, a: &Vec<N>, b: &Vec<N>) -> Option<u64> {
        if a.iter().all(Zero::is_zero) {
            return b.iter().all(Zero::is_zero).then_some(1);
        }
        lex_reach(a, b)
    }

    fn contains(&self, a: &Vec<N>) -> bool {
        a.len() == self.k && a.iter().all(|x| *x >= N::zero())
    }

    fn parse_element(&self, s: &str) -> Result<Vec<N>> {
        let v = parse_vector(s, self.k, self.name())?;
        if self.contains(&v) {
            Ok(v)
        } else {
            Err(parse_error(s, self.name(), "negative coordinate"))
        }
    }

    fn format_element(&self, a: &Vec<N>) -> String {
        format_vector(a)
    }

    fn pow(&self, a: &Vec<N>, n: u64) -> Result<Vec<N>> {
        if n == 0 {
            return Err(crate::Error::ZeroExponent);
        }
        Ok(scale(a, n))
    }
}

impl<N: Scalar> SampleElements for LexNaturals<N> {
    fn sample_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<N> {
        (0..self.k)
            .map(|_| from_exponent(rng.random_range(0..=4)))
            .collect()
    }
}

impl<N: SignedScalar> OrderedGroup for LexGroup<N> {
    type Element = Vec<N>;

    fn name(&self) -> String {
        format!("lex_integers_k{}", self.k)
    }

    fn zero(&self) -> Vec<N> {
        vec![N::zero(); self.k]
    }

    fn add(&self, a: &Vec<N>, b: &Vec<N>) -> Vec<N> {
        add(a, b)
    }

    fn neg(&self, a: &Vec<N>) -> Vec<N> {
        a.iter().map(|x| -x.clone()).collect()
    }

    fn cmp(&self, a: &Vec<N>, b: &Vec<N>) -> Ordering {
        a.cmp(b)
    }

    fn times(&self, a: &Vec<N>, n: u64) -> Vec<N> {
        scale(a, n)
    }

    fn reach_exponent(&self, a: &Vec<N>, b: &Vec<N>) -> Option<u64> {
        debug_assert!(self.is_positive(a));
        lex_reach(a, b)
    }

    fn contains(&self, a: &Vec<N>) -> bool {
        a.len() == self.k
    }

    fn parse_element(&self, s: &str) -> Result<Vec<N>> {
        parse_vector(s, self.k, self.name())
    }

    fn format_element(&self, a: &Vec<N>) -> String {
        format_vector(a)
    }
}
