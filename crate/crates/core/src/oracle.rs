//! Brute-force oracles: evaluate every tuple up to a length and sort.
//!
//! These deliberately share nothing with the enumeration engine beyond the
//! instance operations, so agreement between the two is evidence.

use std::cmp::Ordering;

use crate::engine::ProductString;
use crate::error::{Error, Result};
use crate::order::OrderedSemigroup;

/// Product values with their representatives, ascending by value.
pub type FiberTable<E> = Vec<(E, Vec<ProductString<E>>)>;

/// Default cap on the number of tuples an oracle call may evaluate.
pub const DEFAULT_TUPLE_LIMIT: u128 = 1_000_000;

/// `sum_{q=1..=max_len} n^q`.
pub fn tuple_count(n: usize, max_len: usize) -> u128 {
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..max_len {
        power = power.saturating_mul(n as u128);
        total = total.saturating_add(power);
    }
    total
}

fn check_size(n: usize, max_len: usize, limit: u128) -> Result<()> {
    let tuples = tuple_count(n, max_len);
    if tuples > limit {
        return Err(Error::OracleTooLarge { tuples, limit });
    }
    Ok(())
}

/// Calls `visit` with every tuple of indices into `0..n` of length
/// `1..=max_len`, in lexicographic order by length class.
fn for_each_tuple(n: usize, max_len: usize, mut visit: impl FnMut(&[usize])) {
    if n == 0 {
        return;
    }
    for len in 1..=max_len {
        let mut t = vec![0; len];
        'odometer: loop {
            visit(&t);
            for pos in (0..len).rev() {
                t[pos] += 1;
                if t[pos] < n {
                    continue 'odometer;
                }
                t[pos] = 0;
            }
            break;
        }
    }
}

fn product<S: OrderedSemigroup>(inst: &S, gens: &[S::Element], t: &[usize]) -> S::Element {
    let mut acc = gens[t[0]].clone();
    for &i in &t[1..] {
        acc = inst.mul(&acc, &gens[i]);
    }
    acc
}

/// Distinct products of all tuples of length at most `max_len`, ascending.
pub fn brute_force_products<S: OrderedSemigroup>(
    inst: &S,
    gens: &[S::Element],
    max_len: usize,
    limit: u128,
) -> Result<Vec<S::Element>> {
    check_size(gens.len(), max_len, limit)?;
    let mut all = Vec::new();
    for_each_tuple(gens.len(), max_len, |t| all.push(product(inst, gens, t)));
    all.sort_by(|a, b| inst.cmp(a, b));
    all.dedup_by(|a, b| inst.cmp(a, b) == Ordering::Equal);
    Ok(all)
}

/// All tuples of length at most `max_len` whose product is `target`,
/// sorted lexicographically.
pub fn brute_force_fiber<S: OrderedSemigroup>(
    inst: &S,
    gens: &[S::Element],
    max_len: usize,
    target: &S::Element,
    limit: u128,
) -> Result<Vec<ProductString<S::Element>>> {
    check_size(gens.len(), max_len, limit)?;
    let mut hits: Vec<Vec<usize>> = Vec::new();
    for_each_tuple(gens.len(), max_len, |t| {
        if inst.cmp(&product(inst, gens, t), target) == Ordering::Equal {
            hits.push(t.to_vec());
        }
    });
    Ok(to_sorted_strings(gens, hits))
}

/// Every distinct product with its full list of representatives, in one
/// pass over the tuples. Products ascending, representatives sorted
/// lexicographically.
pub fn brute_force_fibers<S: OrderedSemigroup>(
    inst: &S,
    gens: &[S::Element],
    max_len: usize,
    limit: u128,
) -> Result<FiberTable<S::Element>> {
    check_size(gens.len(), max_len, limit)?;
    let mut all: Vec<(S::Element, Vec<usize>)> = Vec::new();
    for_each_tuple(gens.len(), max_len, |t| {
        all.push((product(inst, gens, t), t.to_vec()))
    });
    all.sort_by(|a, b| inst.cmp(&a.0, &b.0));
    let mut out: Vec<(S::Element, Vec<Vec<usize>>)> = Vec::new();
    for (v, t) in all {
        match out.last_mut() {
            Some((w, ts)) if inst.cmp(w, &v) == Ordering::Equal => ts.push(t),
            _ => out.push((v, vec![t])),
        }
    }
    Ok(out
        .into_iter()
        .map(|(v, ts)| (v, to_sorted_strings(gens, ts)))
        .collect())
}

/// Generators are sorted, so index order is factor order.
fn to_sorted_strings<E: Clone>(gens: &[E], mut tuples: Vec<Vec<usize>>) -> Vec<ProductString<E>> {
    tuples.sort();
    tuples
        .into_iter()
        .map(|t| {
            ProductString::new(t.into_iter().map(|i| gens[i].clone()).collect()).expect("nonempty")
        })
        .collect()
}
