//! Verification suite.
//!
//! Runs every executable consequence of the theory against one instance
//! and one generator set: the axiom checks, ascending enumeration against
//! the brute-force oracle, fibers against brute-force fibers, the
//! max-factor class remark on random strings, and the greedy
//! increasing-subsequence contract. Deterministic for a given seed.

use std::cmp::Ordering;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::archimedean::{max_factor, same_class};
use crate::engine::{
    eval_string, fiber, k_smallest_products, products_up_to, Budget, Emission, ProductStream,
    ProductString,
};
use crate::error::Error;
use crate::oracle::{brute_force_fibers, DEFAULT_TUPLE_LIMIT};
use crate::order::{check_axioms, OrderedSemigroup, SampleElements};
use crate::report::{CheckOutcome, VerificationReport};
use crate::wo_set::{extract_increasing_subsequence, WoSet};

/// Faults that can be injected to confirm the checks catch them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Enumerate one entry per string, without merging equal products.
    SkipDedup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteParams {
    /// Number of products enumerated for the ascent and soundness checks.
    pub k: usize,
    /// Maximum string length for the oracle and for sampled strings.
    pub max_len: usize,
    /// Number of random cases per randomized check.
    pub trials: u64,
    pub seed: u64,
    pub tuple_limit: u128,
    pub fault: Option<Fault>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            k: 20,
            max_len: 4,
            trials: 10_000,
            seed: 0,
            tuple_limit: DEFAULT_TUPLE_LIMIT,
            fault: None,
        }
    }
}

struct Suite<'a, S: OrderedSemigroup> {
    inst: &'a S,
    params: &'a SuiteParams,
    rng: ChaCha8Rng,
}

impl<'a, S: SampleElements> Suite<'a, S> {
    fn fmt(&self, x: &S::Element) -> String {
        self.inst.format_element(x)
    }

    fn fmt_string(&self, s: &ProductString<S::Element>) -> String {
        s.format_with(self.inst)
    }

    fn sample(&mut self, gens: &mut WoSet<S::Element>) -> Vec<S::Element> {
        let mut pulls = 8;
        let _ = gens.ensure(self.inst, 7, &mut pulls);
        let mut sample: Vec<S::Element> = gens.known().iter().take(8).cloned().collect();
        sample.push(self.inst.unit());
        for _ in 0..8 {
            sample.push(self.inst.sample_element(&mut self.rng));
        }
        sample
    }

    /// Consecutive values must strictly increase.
    fn strict_ascent(&self, items: &[Emission<S::Element>]) -> CheckOutcome {
        let found = items.windows(2).enumerate().find_map(|(i, w)| {
            match self.inst.cmp(&w[0].value, &w[1].value) {
                Ordering::Less => None,
                Ordering::Equal => Some(format!(
                    "positions {i} and {}: value {} emitted twice, witnesses {} and {}",
                    i + 1,
                    self.fmt(&w[0].value),
                    self.fmt_string(&w[0].witness),
                    self.fmt_string(&w[1].witness)
                )),
                Ordering::Greater => Some(format!(
                    "positions {i} and {}: {} then {}",
                    i + 1,
                    self.fmt(&w[0].value),
                    self.fmt(&w[1].value)
                )),
            }
        });
        CheckOutcome::from_search("enumeration.strict_ascent", items.len() as u64, found)
    }

    fn first_emissions(
        &self,
        gens: &WoSet<S::Element>,
    ) -> Result<Vec<Emission<S::Element>>, Error> {
        let mut stream = ProductStream::new(self.inst, gens.clone())?;
        if self.params.fault == Some(Fault::SkipDedup) {
            stream = stream.without_coalescing();
        }
        let mut budget = Budget::default();
        let mut items = Vec::new();
        while items.len() < self.params.k {
            match stream.next_emission(&mut budget) {
                Ok(e) => items.push(e),
                Err(Error::BudgetExhausted) => break,
                Err(e) => return Err(e),
            }
        }
        Ok(items)
    }

    fn soundness(&self, items: &[Emission<S::Element>]) -> CheckOutcome {
        let found = items.iter().find_map(|e| {
            let v = eval_string(self.inst, &e.witness);
            (v != e.value).then(|| {
                format!(
                    "witness {} evaluates to {}, emitted as {}",
                    self.fmt_string(&e.witness),
                    self.fmt(&v),
                    self.fmt(&e.value)
                )
            })
        });
        CheckOutcome::from_search("enumeration.soundness", items.len() as u64, found)
    }

    /// Oracle comparisons below `t = min(A)^L`, whose strings all have
    /// length at most `L`.
    fn oracle_checks(&self, gens: &[S::Element]) -> Vec<CheckOutcome> {
        const NAMES: [&str; 3] = [
            "enumeration.oracle_equivalence",
            "fiber.exactness",
            "fiber.representative_count",
        ];
        let inst = self.inst;
        let l = self.params.max_len.max(1);
        let t = inst.pow(&gens[0], l as u64).expect("l >= 1");
        let grouped = match brute_force_fibers(inst, gens, l, self.params.tuple_limit) {
            Ok(g) => g,
            Err(e) => {
                return NAMES
                    .iter()
                    .map(|n| CheckOutcome::skipped(*n, e.to_string()))
                    .collect();
            }
        };
        let below: Vec<_> = grouped
            .into_iter()
            .filter(|(v, _)| inst.le(v, &t))
            .collect();
        let expected: Vec<S::Element> = below.iter().map(|(v, _)| v.clone()).collect();
        let gens_set = WoSet::finite(inst, gens.to_vec(), true).expect("validated generators");

        let mut equivalence = None;
        let mut counts = None;
        match k_smallest_products(inst, gens_set.clone(), expected.len(), Budget::unlimited()) {
            Err(e) => equivalence = Some(format!("enumeration failed: {e}")),
            Ok(en) => {
                let got = en.values();
                if got != expected {
                    let pos = got.iter().zip(&expected).position(|(a, b)| a != b);
                    equivalence = Some(match pos {
                        Some(i) => format!(
                            "t={}: position {i}: enumerated {} but oracle has {}",
                            self.fmt(&t),
                            self.fmt(&got[i]),
                            self.fmt(&expected[i])
                        ),
                        None => format!(
                            "t={}: enumerated {} values, oracle has {}",
                            self.fmt(&t),
                            got.len(),
                            expected.len()
                        ),
                    });
                }
                counts = en.items.iter().zip(&below).find_map(|(e, (_, ws))| {
                    (e.representatives != ws.len() || e.witness != ws[0]).then(|| {
                        format!(
                            "value {}: {} representatives with least {}, oracle has {} with least {}",
                            self.fmt(&e.value),
                            e.representatives,
                            self.fmt_string(&e.witness),
                            ws.len(),
                            self.fmt_string(&ws[0])
                        )
                    })
                });
            }
        }
        if equivalence.is_none() {
            equivalence = match products_up_to(inst, gens_set.clone(), &t, Budget::unlimited()) {
                Ok(en) if en.values() == expected => None,
                Ok(en) => Some(format!(
                    "products_up_to({}) has {} values, oracle has {}",
                    self.fmt(&t),
                    en.items.len(),
                    expected.len()
                )),
                Err(e) => Some(format!("products_up_to failed: {e}")),
            };
        }

        let exact = below
            .iter()
            .find_map(|(v, ws)| match fiber(inst, &gens_set, v, None) {
                Err(e) => Some(format!("fiber({}) failed: {e}", self.fmt(v))),
                Ok(f) if f.is_empty() || f.witnesses != *ws => Some(format!(
                    "fiber({}) has {} strings, oracle has {}",
                    self.fmt(v),
                    f.len(),
                    ws.len()
                )),
                Ok(_) => None,
            });

        let n = below.len() as u64;
        vec![
            CheckOutcome::from_search(NAMES[0], n, equivalence),
            CheckOutcome::from_search(NAMES[1], n, exact),
            CheckOutcome::from_search(NAMES[2], n, counts),
        ]
    }

    /// `max <= |s| <= max^len`, and `|s|` in the class of `max`.
    fn max_factor_remark(&mut self, gens: &[S::Element]) -> CheckOutcome {
        let inst = self.inst;
        let mut found = None;
        for _ in 0..self.params.trials {
            let len = self.rng.random_range(1..=self.params.max_len.max(1));
            let factors = (0..len)
                .map(|_| gens[self.rng.random_range(0..gens.len())].clone())
                .collect();
            let s = ProductString::new(factors).expect("len >= 1");
            let p = eval_string(inst, &s);
            let m = max_factor(inst, &s);
            let top = inst.pow(m, len as u64).expect("len >= 1");
            if !same_class(inst, &p, m) || !inst.le(m, &p) || !inst.le(&p, &top) {
                found = Some(format!(
                    "string {}: product {}, max factor {}, max^len {}",
                    self.fmt_string(&s),
                    self.fmt(&p),
                    self.fmt(m),
                    self.fmt(&top)
                ));
                break;
            }
        }
        CheckOutcome::from_search("remark.max_factor", self.params.trials, found)
    }

    fn greedy(&mut self, sample: &[S::Element]) -> CheckOutcome {
        let inst = self.inst;
        let cases = (self.params.trials / 10).max(1);
        let mut found = None;
        for _ in 0..cases {
            let n = self.rng.random_range(0..=16);
            let xs: Vec<S::Element> = (0..n)
                .map(|_| sample[self.rng.random_range(0..sample.len())].clone())
                .collect();
            if let Some(bad) = greedy_violation(inst, &xs) {
                let shown: Vec<String> = xs.iter().map(|x| self.fmt(x)).collect();
                found = Some(format!("[{}]: {bad}", shown.join(", ")));
                break;
            }
        }
        CheckOutcome::from_search("greedy.increasing_subsequence", cases, found)
    }
}

/// Checks the greedy extractor on `xs` against a direct scan, plus the
/// sorted and strictly decreasing special cases built from `xs`.
pub fn greedy_violation<S: OrderedSemigroup>(inst: &S, xs: &[S::Element]) -> Option<String> {
    let got = extract_increasing_subsequence(inst, xs).indices;
    let mut expected = Vec::new();
    let mut start = 0;
    while start < xs.len() {
        let mut pick = start;
        for i in start + 1..xs.len() {
            if inst.lt(&xs[i], &xs[pick]) {
                pick = i;
            }
        }
        expected.push(pick);
        start = pick + 1;
    }
    if got != expected {
        return Some(format!("indices {got:?}, direct scan gives {expected:?}"));
    }
    if !got.windows(2).all(|w| w[0] < w[1]) {
        return Some(format!("indices {got:?} not strictly increasing"));
    }
    if !got.windows(2).all(|w| inst.le(&xs[w[0]], &xs[w[1]])) {
        return Some(format!("values at {got:?} decrease"));
    }
    let mut sorted = xs.to_vec();
    sorted.sort_by(|a, b| inst.cmp(a, b));
    let all: Vec<usize> = (0..sorted.len()).collect();
    if extract_increasing_subsequence(inst, &sorted).indices != all {
        return Some("sorted input did not return every index".into());
    }
    let mut decreasing = sorted;
    decreasing.dedup_by(|a, b| inst.cmp(a, b) == Ordering::Equal);
    decreasing.reverse();
    if !decreasing.is_empty() {
        let last = vec![decreasing.len() - 1];
        if extract_increasing_subsequence(inst, &decreasing).indices != last {
            return Some("strictly decreasing input did not return only the last index".into());
        }
    }
    None
}

/// Runs the full suite. `generators` is the descriptor text recorded in
/// the report. Oracle and fiber checks need a finite generator set and are
/// reported as skipped for streams.
pub fn verify_lemma_suite<S: SampleElements>(
    inst: &S,
    gens: &WoSet<S::Element>,
    generators: &str,
    params: &SuiteParams,
) -> VerificationReport {
    let start = Instant::now();
    let mut suite = Suite {
        inst,
        params,
        rng: ChaCha8Rng::seed_from_u64(params.seed),
    };
    let mut gens = gens.clone();
    let sample = suite.sample(&mut gens);
    let mut checks = check_axioms(inst, &sample, params.trials, params.seed);

    match suite.first_emissions(&gens) {
        Ok(items) => {
            checks.push(suite.strict_ascent(&items));
            checks.push(suite.soundness(&items));
        }
        Err(e) => {
            checks.push(CheckOutcome::fail(
                "enumeration.strict_ascent",
                0,
                e.to_string(),
            ));
            checks.push(CheckOutcome::fail(
                "enumeration.soundness",
                0,
                e.to_string(),
            ));
        }
    }

    let known: Vec<S::Element> = gens.known().to_vec();
    match gens.as_finite() {
        Some(finite) => checks.extend(suite.oracle_checks(finite)),
        None => {
            for name in [
                "enumeration.oracle_equivalence",
                "fiber.exactness",
                "fiber.representative_count",
            ] {
                checks.push(CheckOutcome::skipped(name, "stream presentation"));
            }
        }
    }
    if known.is_empty() {
        checks.push(CheckOutcome::skipped(
            "remark.max_factor",
            "no generators pulled",
        ));
    } else {
        checks.push(suite.max_factor_remark(&known));
    }
    checks.push(suite.greedy(&sample));

    checks.sort_by(|a, b| a.name.cmp(&b.name));
    VerificationReport {
        instance: inst.name(),
        generators: generators.to_string(),
        seed: params.seed,
        checks,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{Naturals, Shortlex};
    use crate::report::Status;

    fn params(k: usize, max_len: usize) -> SuiteParams {
        SuiteParams {
            k,
            max_len,
            trials: 2_000,
            seed: 11,
            ..SuiteParams::default()
        }
    }

    #[test]
    fn naturals_pass() {
        let n = Naturals::<u64>::new();
        let a = WoSet::finite(&n, vec![2, 3], true).unwrap();
        let r = verify_lemma_suite(&n, &a, "{2,3}", &params(20, 6));
        assert!(r.all_passed(), "{}", r.to_text());
        assert!(r.checks.windows(2).all(|w| w[0].name < w[1].name));
    }

    #[test]
    fn shortlex_pass() {
        let s = Shortlex::new("ab");
        let a = WoSet::finite(&s, vec!["a".into(), "b".into()], true).unwrap();
        let r = verify_lemma_suite(&s, &a, "{a,b}", &params(15, 4));
        assert!(r.all_passed(), "{}", r.to_text());
    }

    #[test]
    fn skipping_dedup_is_caught() {
        let n = Naturals::<u64>::new();
        let a = WoSet::finite(&n, vec![2, 3], true).unwrap();
        let p = SuiteParams {
            fault: Some(Fault::SkipDedup),
            ..params(20, 4)
        };
        let r = verify_lemma_suite(&n, &a, "{2,3}", &p);
        let c = r.check("enumeration.strict_ascent").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(
            c.counterexample.as_deref(),
            Some("positions 3 and 4: value 5 emitted twice, witnesses (2, 3) and (3, 2)")
        );
    }

    #[test]
    fn reports_are_deterministic() {
        let n = Naturals::<u64>::new();
        let a = WoSet::finite(&n, vec![3, 5, 7], true).unwrap();
        let r1 = verify_lemma_suite(&n, &a, "x", &params(10, 3));
        let r2 = verify_lemma_suite(&n, &a, "x", &params(10, 3));
        assert_eq!(r1.checks, r2.checks);
    }
}
