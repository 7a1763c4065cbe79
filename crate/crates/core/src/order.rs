//! Totally ordered semigroups and ordered groups.
//!
//! An [`OrderedSemigroup`] is a carrier with an associative product and a
//! total order such that `a < b` implies `ac < bc` and `ca < cb` for every
//! `c`, and whose minimum element is a two-sided unit. Cancellation on both
//! sides and `a > 1 <=> aa > a` follow from these axioms; [`check_axioms`]
//! tests all of them on a sample.

use std::cmp::Ordering;
use std::fmt::Debug;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::CheckOutcome;

/// A totally ordered semigroup whose minimum is a unit.
///
/// Elements are plain values; the instance supplies the operations. All
/// arithmetic is exact.
pub trait OrderedSemigroup {
    type Element: Clone + Eq + Debug + Send + Sync + 'static;

    fn name(&self) -> String;

    /// The unit, which is also the minimum of the carrier.
    fn unit(&self) -> Self::Element;

    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn cmp(&self, a: &Self::Element, b: &Self::Element) -> Ordering;

    /// Least `n >= 1` with `a^n >= b`, or `None` when `a^n < b` for every `n`.
    ///
    /// Instances answer from a closed form; "for every n" cannot be decided
    /// by search. For `a = unit` the answer is `Some(1)` if `b` is the unit
    /// and `None` otherwise.
    fn reach_exponent(&self, a: &Self::Element, b: &Self::Element) -> Option<u64>;

    /// Whether `a` is a well-formed element of this instance.
    fn contains(&self, a: &Self::Element) -> bool;

    fn parse_element(&self, s: &str) -> Result<Self::Element>;

    fn format_element(&self, a: &Self::Element) -> String;

    /// `n`-fold product of `a`, computed by repeated squaring.
    fn pow(&self, a: &Self::Element, n: u64) -> Result<Self::Element> {
        if n == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut base = a.clone();
        let mut acc: Option<Self::Element> = None;
        let mut n = n;
        loop {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(x) => self.mul(&x, &base),
                });
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = self.mul(&base, &base);
        }
        Ok(acc.expect("n >= 1"))
    }

    /// Product that first rejects elements foreign to this instance.
    fn checked_mul(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element> {
        self.ensure_contains(a)?;
        self.ensure_contains(b)?;
        Ok(self.mul(a, b))
    }

    /// Comparison that first rejects elements foreign to this instance.
    fn checked_cmp(&self, a: &Self::Element, b: &Self::Element) -> Result<Ordering> {
        self.ensure_contains(a)?;
        self.ensure_contains(b)?;
        Ok(self.cmp(a, b))
    }

    fn ensure_contains(&self, a: &Self::Element) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ForeignElement {
                element: format!("{a:?}"),
                instance: self.name(),
            })
        }
    }

    fn is_unit(&self, a: &Self::Element) -> bool {
        self.cmp(a, &self.unit()) == Ordering::Equal
    }

    fn lt(&self, a: &Self::Element, b: &Self::Element) -> bool {
        self.cmp(a, b) == Ordering::Less
    }

    fn le(&self, a: &Self::Element, b: &Self::Element) -> bool {
        self.cmp(a, b) != Ordering::Greater
    }

    fn max_of<'a>(&self, a: &'a Self::Element, b: &'a Self::Element) -> &'a Self::Element {
        if self.lt(a, b) {
            b
        } else {
            a
        }
    }
}

/// Instances that can draw random elements from a small grid, for
/// randomized law checking.
pub trait SampleElements: OrderedSemigroup {
    fn sample_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Element;
}

/// A totally ordered commutative group, written additively.
pub trait OrderedGroup {
    type Element: Clone + Eq + Debug + Send + Sync + 'static;

    fn name(&self) -> String;

    fn zero(&self) -> Self::Element;

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn neg(&self, a: &Self::Element) -> Self::Element;

    fn cmp(&self, a: &Self::Element, b: &Self::Element) -> Ordering;

    /// `n·a` for `n >= 0`.
    fn times(&self, a: &Self::Element, n: u64) -> Self::Element;

    /// For `a > 0`: least `n >= 1` with `n·a >= b`, or `None` when `b`
    /// lies above every multiple of `a`.
    fn reach_exponent(&self, a: &Self::Element, b: &Self::Element) -> Option<u64>;

    fn contains(&self, a: &Self::Element) -> bool;

    fn parse_element(&self, s: &str) -> Result<Self::Element>;

    fn format_element(&self, a: &Self::Element) -> String;

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }

    fn is_positive(&self, a: &Self::Element) -> bool {
        self.cmp(a, &self.zero()) == Ordering::Greater
    }

    fn is_zero(&self, a: &Self::Element) -> bool {
        self.cmp(a, &self.zero()) == Ordering::Equal
    }

    fn le(&self, a: &Self::Element, b: &Self::Element) -> bool {
        self.cmp(a, b) != Ordering::Greater
    }

    fn min_of<'a>(&self, a: &'a Self::Element, b: &'a Self::Element) -> &'a Self::Element {
        if self.le(a, b) {
            a
        } else {
            b
        }
    }
}

/// Randomized check of the ordered semigroup axioms and their consequences.
///
/// Draws `trials` tuples from `sample` with a generator seeded by `seed`.
/// One outcome per law; failing outcomes carry a concrete counterexample.
pub fn check_axioms<S: OrderedSemigroup>(
    inst: &S,
    sample: &[S::Element],
    trials: u64,
    seed: u64,
) -> Vec<CheckOutcome> {
    assert!(!sample.is_empty(), "axiom checks need a nonempty sample");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = |x: &S::Element| inst.format_element(x);
    let pick = |rng: &mut ChaCha8Rng| &sample[rng.random_range(0..sample.len())];

    let mut assoc = None;
    let mut compat = None;
    let mut cancel = None;
    let mut strict = None;
    let mut reach = None;
    let mut compat_cases = 0;

    for _ in 0..trials {
        let a = pick(&mut rng);
        let b = pick(&mut rng);
        let c = pick(&mut rng);

        if assoc.is_none() {
            let left = inst.mul(a, &inst.mul(b, c));
            let right = inst.mul(&inst.mul(a, b), c);
            if left != right {
                assoc = Some(format!(
                    "a={}, b={}, c={}: a(bc)={} but (ab)c={}",
                    f(a),
                    f(b),
                    f(c),
                    f(&left),
                    f(&right)
                ));
            }
        }

        if compat.is_none() {
            let (lo, hi) = match inst.cmp(a, b) {
                Ordering::Less => (a, b),
                Ordering::Greater => (b, a),
                Ordering::Equal => (a, a),
            };
            compat_cases += 1;
            // strict for distinct pairs, which also covers the weak form
            let holds = |x: &S::Element, y: &S::Element| {
                if lo == hi {
                    inst.le(x, y)
                } else {
                    inst.lt(x, y)
                }
            };
            if !holds(&inst.mul(lo, c), &inst.mul(hi, c))
                || !holds(&inst.mul(c, lo), &inst.mul(c, hi))
            {
                compat = Some(format!(
                    "a={} <= b={} but with c={}: ac={}, bc={}, ca={}, cb={}",
                    f(lo),
                    f(hi),
                    f(c),
                    f(&inst.mul(lo, c)),
                    f(&inst.mul(hi, c)),
                    f(&inst.mul(c, lo)),
                    f(&inst.mul(c, hi))
                ));
            }
        }

        if cancel.is_none() && a != b {
            let (ac, bc) = (inst.mul(a, c), inst.mul(b, c));
            let (ca, cb) = (inst.mul(c, a), inst.mul(c, b));
            if ac == bc {
                cancel = Some(format!(
                    "a={}, b={}, c={}: ac = bc = {} with a != b",
                    f(a),
                    f(b),
                    f(c),
                    f(&ac)
                ));
            } else if ca == cb {
                cancel = Some(format!(
                    "a={}, b={}, c={}: ca = cb = {} with a != b",
                    f(a),
                    f(b),
                    f(c),
                    f(&ca)
                ));
            }
        }

        if strict.is_none() {
            let above_unit = inst.lt(&inst.unit(), a);
            let square_above = inst.lt(a, &inst.mul(a, a));
            if above_unit != square_above {
                strict = Some(format!(
                    "a={}: a > 1 is {above_unit} but aa > a is {square_above}",
                    f(a)
                ));
            }
        }

        if reach.is_none() && !inst.is_unit(a) {
            reach = reach_violation(inst, a, b);
        }
    }

    let mut unit = None;
    let one = inst.unit();
    if !inst.contains(&one) {
        unit = Some(format!("unit {} is not in the carrier", f(&one)));
    }
    for a in sample {
        if unit.is_some() {
            break;
        }
        if !inst.le(&one, a) {
            unit = Some(format!("unit {} is above a={}", f(&one), f(a)));
        } else if inst.mul(&one, a) != *a || inst.mul(a, &one) != *a {
            unit = Some(format!("unit {} is not neutral for a={}", f(&one), f(a)));
        }
    }

    vec![
        CheckOutcome::from_search("axioms.associativity", trials, assoc),
        CheckOutcome::from_search("axioms.cancellation", trials, cancel),
        CheckOutcome::from_search("axioms.order_compatibility", compat_cases, compat),
        CheckOutcome::from_search("axioms.reach_exponent", trials, reach),
        CheckOutcome::from_search("axioms.strictness", trials, strict),
        CheckOutcome::from_search("axioms.unit", sample.len() as u64, unit),
    ]
}

/// Powers probed when an instance claims `a^n < b` for every `n`.
const NEVER_PROBES: [u64; 6] = [1, 2, 3, 10, 100, 1000];

fn reach_violation<S: OrderedSemigroup>(
    inst: &S,
    a: &S::Element,
    b: &S::Element,
) -> Option<String> {
    let f = |x: &S::Element| inst.format_element(x);
    let pow = |n| inst.pow(a, n).expect("n >= 1");
    match inst.reach_exponent(a, b) {
        Some(0) => Some(format!("reach({}, {}) returned 0", f(a), f(b))),
        Some(n) => {
            if inst.lt(&pow(n), b) {
                Some(format!("reach({}, {}) = {n} but a^{n} < b", f(a), f(b)))
            } else if n > 1 && !inst.lt(&pow(n - 1), b) {
                Some(format!("reach({}, {}) = {n} is not minimal", f(a), f(b)))
            } else {
                None
            }
        }
        None => NEVER_PROBES
            .iter()
            .find(|&&n| !inst.lt(&pow(n), b))
            .map(|n| format!("reach({}, {}) absent but a^{n} >= b", f(a), f(b))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{MaxNaturals, Naturals};
    use crate::report::Status;

    #[test]
    fn pow_zero_is_rejected() {
        let n = Naturals::<u64>::new();
        assert_eq!(n.pow(&3, 0), Err(Error::ZeroExponent));
        assert_eq!(n.pow(&3, 1), Ok(3));
    }

    #[test]
    fn broken_instance_fails_cancellation() {
        let inst = MaxNaturals;
        let sample = [0u64, 1, 2, 5];
        let report = check_axioms(&inst, &sample, 2_000, 7);
        let cancel = report
            .iter()
            .find(|c| c.name == "axioms.cancellation")
            .unwrap();
        assert_eq!(cancel.status, Status::Fail);
        assert!(cancel
            .counterexample
            .as_ref()
            .unwrap()
            .contains("with a != b"));
    }

    #[test]
    fn checks_are_deterministic() {
        let inst = Naturals::<u64>::new();
        let sample = [0u64, 1, 2, 3, 9];
        assert_eq!(
            check_axioms(&inst, &sample, 500, 3),
            check_axioms(&inst, &sample, 500, 3)
        );
    }
}
