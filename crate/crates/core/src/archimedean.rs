//! Archimedean classes.
//!
//! `a ~ b` when `b <= a^m` and `a <= b^n` for some `m, n >= 1`. Classes are
//! intervals and are totally ordered by `cl(a) < cl(b) <=> a^n < b` for all
//! `n`. The unit forms a class of its own, below every other class.

use std::cmp::Ordering;

use crate::engine::ProductString;
use crate::order::OrderedSemigroup;

/// Whether `a` and `b` lie in the same Archimedean class.
pub fn same_class<S: OrderedSemigroup>(inst: &S, a: &S::Element, b: &S::Element) -> bool {
    class_cmp(inst, a, b) == Ordering::Equal
}

/// Compares the classes of `a` and `b`.
pub fn class_cmp<S: OrderedSemigroup>(inst: &S, a: &S::Element, b: &S::Element) -> Ordering {
    match (inst.is_unit(a), inst.is_unit(b)) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => {
            if inst.reach_exponent(a, b).is_none() {
                Ordering::Less
            } else if inst.reach_exponent(b, a).is_none() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        }
    }
}

/// Handle for the class `cl(representative)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArchClass<E> {
    pub representative: E,
}

impl<E> ArchClass<E> {
    pub fn of(representative: E) -> Self {
        ArchClass { representative }
    }

    pub fn cmp_in<S>(&self, inst: &S, other: &Self) -> Ordering
    where
        S: OrderedSemigroup<Element = E>,
    {
        class_cmp(inst, &self.representative, &other.representative)
    }
}

/// The largest factor of `s`. The class of `|s|` is the class of this
/// factor, with `max <= |s| <= max^len`.
pub fn max_factor<'a, S: OrderedSemigroup>(
    inst: &S,
    s: &'a ProductString<S::Element>,
) -> &'a S::Element {
    s.factors()
        .iter()
        .reduce(|m, x| inst.max_of(m, x))
        .expect("product strings are nonempty")
}

/// Class comparison matrix as CSV: header row of elements, then one row per
/// element with `<`, `=` or `>` entries comparing the row class to the
/// column class.
pub fn class_matrix_csv<S: OrderedSemigroup>(inst: &S, elements: &[S::Element]) -> String {
    let names: Vec<String> = elements
        .iter()
        .map(|e| csv_field(&inst.format_element(e)))
        .collect();
    let mut out = String::from("element");
    for n in &names {
        out.push(',');
        out.push_str(n);
    }
    out.push('\n');
    for (a, name) in elements.iter().zip(&names) {
        out.push_str(name);
        for b in elements {
            out.push(',');
            out.push(match class_cmp(inst, a, b) {
                Ordering::Less => '<',
                Ordering::Equal => '=',
                Ordering::Greater => '>',
            });
        }
        out.push('\n');
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{LexNaturals, Naturals, PositiveCone, RationalGroup, Shortlex};
    use num_rational::Ratio;

    #[test]
    fn lex_classes() {
        let l = LexNaturals::<u64>::new(2);
        assert!(same_class(&l, &vec![1, 0], &vec![2, 3]));
        assert!(!same_class(&l, &vec![0, 1], &vec![1, 0]));
        assert_eq!(class_cmp(&l, &vec![0, 1], &vec![1, 0]), Ordering::Less);
        assert_eq!(class_cmp(&l, &vec![1, 0], &vec![0, 7]), Ordering::Greater);
        assert!(same_class(&l, &vec![0, 0], &vec![0, 0]));
        assert!(!same_class(&l, &vec![0, 0], &vec![0, 1]));
    }

    #[test]
    fn rationals_are_archimedean() {
        let r = PositiveCone::<RationalGroup<i64>>::rationals();
        let half = Ratio::new(1, 2);
        let big = Ratio::from_integer(1000);
        assert_eq!(class_cmp(&r, &half, &big), Ordering::Equal);
        assert_eq!(
            class_cmp(&r, &Ratio::from_integer(0), &half),
            Ordering::Less
        );
    }

    #[test]
    fn max_factor_examples() {
        let r = PositiveCone::<RationalGroup<i64>>::rationals();
        let s =
            ProductString::new(vec![Ratio::new(1, 2), Ratio::new(2, 3), Ratio::new(1, 2)]).unwrap();
        assert_eq!(*max_factor(&r, &s), Ratio::new(2, 3));
        let w = Shortlex::new("ab");
        let s = ProductString::new(vec!["ba".to_string(), "a".to_string()]).unwrap();
        assert_eq!(max_factor(&w, &s), "ba");
        let n = Naturals::<u64>::new();
        assert_eq!(*max_factor(&n, &ProductString::new(vec![5]).unwrap()), 5);
    }

    #[test]
    fn matrix_csv() {
        let l = LexNaturals::<u64>::new(2);
        let csv = class_matrix_csv(&l, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            csv,
            "element,\"(0,1)\",\"(1,0)\"\n\"(0,1)\",=,<\n\"(1,0)\",>,=\n"
        );
    }
}
