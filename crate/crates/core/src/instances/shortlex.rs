use std::cmp::Ordering;

use rand::Rng;

use super::parse_error;
use crate::error::Result;
use crate::order::{OrderedSemigroup, SampleElements};

/// The free monoid over a finite alphabet under concatenation, ordered by
/// length first and then lexicographically by alphabet position.
///
/// The empty word is the unit. This is the noncommutative instance:
/// `"a"·"ba" = "aba"` while `"ba"·"a" = "baa"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shortlex {
    alphabet: Vec<char>,
}

impl Shortlex {
    /// Letters are ordered as they appear in `alphabet`.
    ///
    /// # Panics
    /// On an empty alphabet or a repeated letter.
    pub fn new(alphabet: &str) -> Self {
        let letters: Vec<char> = alphabet.chars().collect();
        assert!(!letters.is_empty(), "alphabet must be nonempty");
        for (i, c) in letters.iter().enumerate() {
            assert!(
                !letters[..i].contains(c),
                "letter {c:?} repeated in alphabet"
            );
        }
        Shortlex { alphabet: letters }
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    fn rank(&self, c: char) -> usize {
        self.alphabet
            .iter()
            .position(|&x| x == c)
            .expect("letter outside the alphabet")
    }

    fn len(w: &str) -> usize {
        w.chars().count()
    }
}

impl OrderedSemigroup for Shortlex {
    type Element = String;

    fn name(&self) -> String {
        format!("shortlex_{}", self.alphabet.iter().collect::<String>())
    }

    fn unit(&self) -> String {
        String::new()
    }

    fn mul(&self, a: &String, b: &String) -> String {
        let mut w = String::with_capacity(a.len() + b.len());
        w.push_str(a);
        w.push_str(b);
        w
    }

    fn cmp(&self, a: &String, b: &String) -> Ordering {
        Self::len(a).cmp(&Self::len(b)).then_with(|| {
            a.chars()
                .map(|c| self.rank(c))
                .cmp(b.chars().map(|c| self.rank(c)))
        })
    }

    /// Powers of `a` have length `n|a|`, so only `n = ceil(|b|/|a|)` and the
    /// next exponent can be the answer.
    fn reach_exponent(&self, a: &String, b: &String) -> Option<u64> {
        let (la, lb) = (Self::len(a), Self::len(b));
        if la == 0 {
            return (lb == 0).then_some(1);
        }
        let n = lb.div_ceil(la).max(1) as u64;
        let an = self.pow(a, n).expect("n >= 1");
        if self.cmp(&an, b) != Ordering::Less {
            Some(n)
        } else {
            Some(n + 1)
        }
    }

    fn contains(&self, a: &String) -> bool {
        a.chars().all(|c| self.alphabet.contains(&c))
    }

    fn parse_element(&self, s: &str) -> Result<String> {
        let w = s.to_string();
        if self.contains(&w) {
            Ok(w)
        } else {
            Err(parse_error(s, self.name(), "letter outside the alphabet"))
        }
    }

    fn format_element(&self, a: &String) -> String {
        a.clone()
    }

    fn pow(&self, a: &String, n: u64) -> Result<String> {
        if n == 0 {
            return Err(crate::Error::ZeroExponent);
        }
        Ok(a.repeat(n as usize))
    }
}

impl SampleElements for Shortlex {
    /// Words of length at most 4.
    fn sample_element<R: Rng + ?Sized>(&self, rng: &mut R) -> String {
        let len = rng.random_range(0..=4);
        (0..len)
            .map(|_| self.alphabet[rng.random_range(0..self.alphabet.len())])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> String {
        s.to_string()
    }

    #[test]
    fn concatenation_and_order() {
        let s = Shortlex::new("ab");
        assert_eq!(s.mul(&w("ab"), &w("ba")), "abba");
        assert_eq!(s.cmp(&w("b"), &w("aa")), Ordering::Less);
        assert_eq!(s.pow(&w("ab"), 2).unwrap(), "abab");
        assert_eq!(s.pow(&w(""), 7).unwrap(), "");
        assert_eq!(s.reach_exponent(&w("a"), &w("bb")), Some(3));
        assert_eq!(s.reach_exponent(&w("b"), &w("aa")), Some(2));
        assert_eq!(s.reach_exponent(&w("ab"), &w("a")), Some(1));
    }

    #[test]
    fn alphabet_order_is_configurable() {
        let s = Shortlex::new("ba");
        assert_eq!(s.cmp(&w("b"), &w("a")), Ordering::Less);
        assert!(s.parse_element("abc").is_err());
        assert!(s.checked_mul(&w("c"), &w("a")).is_err());
    }
}
