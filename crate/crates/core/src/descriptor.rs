//! JSON descriptors for instances and generator sets.
//!
//! Instances: `{"instance": "additive_rationals"}`, `{"instance":
//! "additive_naturals"}`, `{"instance": "lex_vectors", "k": 2}`,
//! `{"instance": "shortlex", "alphabet": "ab"}`.
//!
//! Generator sets: `{"kind": "finite", "elements": ["1/2", "2/3"]}` or
//! `{"kind": "stream", "family": "n_over_n_plus_1" | "geometric",
//! "params": {...}}`. Elements are written as the instance formats them:
//! rationals `p/q`, vectors `(n1,...,nk)`, words as-is.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances::Shortlex;
use crate::order::SampleElements;
use crate::wo_set::WoSet;
use crate::{AdditiveNaturals, AdditiveRationals, LexVectors};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "instance", rename_all = "snake_case", deny_unknown_fields)]
pub enum InstanceDescriptor {
    AdditiveRationals,
    AdditiveNaturals,
    LexVectors { k: usize },
    Shortlex { alphabet: String },
}

/// Code that runs against whichever instance a descriptor selects.
pub trait InstanceVisitor {
    type Output;

    fn visit<S>(self, inst: &S) -> Self::Output
    where
        S: SampleElements + Clone + Send + Sync + 'static;
}

impl InstanceDescriptor {
    /// Builds the instance and hands it to `visitor`.
    pub fn visit<V: InstanceVisitor>(&self, visitor: V) -> Result<V::Output> {
        Ok(match self {
            InstanceDescriptor::AdditiveRationals => visitor.visit(&AdditiveRationals::rationals()),
            InstanceDescriptor::AdditiveNaturals => visitor.visit(&AdditiveNaturals::new()),
            InstanceDescriptor::LexVectors { k } => {
                if *k == 0 {
                    return Err(Error::Descriptor("lex_vectors needs k >= 1".into()));
                }
                visitor.visit(&LexVectors::new(*k))
            }
            InstanceDescriptor::Shortlex { alphabet } => {
                let letters: Vec<char> = alphabet.chars().collect();
                let distinct = letters
                    .iter()
                    .enumerate()
                    .all(|(i, c)| !letters[..i].contains(c));
                if letters.is_empty() || !distinct {
                    return Err(Error::Descriptor(
                        "shortlex needs a nonempty alphabet of distinct letters".into(),
                    ));
                }
                visitor.visit(&Shortlex::new(alphabet))
            }
        })
    }
}

impl FromStr for InstanceDescriptor {
    type Err = Error;

    /// Accepts JSON, or the shorthands `additive_rationals`,
    /// `additive_naturals`, `lex_vectors:K` and `shortlex:ALPHABET`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::Descriptor(e.to_string()));
        }
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        match (name, arg) {
            ("additive_rationals", None) => Ok(InstanceDescriptor::AdditiveRationals),
            ("additive_naturals", None) => Ok(InstanceDescriptor::AdditiveNaturals),
            ("lex_vectors", arg) => {
                let k = arg
                    .unwrap_or("2")
                    .parse()
                    .map_err(|_| Error::Descriptor(format!("bad dimension in {s:?}")))?;
                Ok(InstanceDescriptor::LexVectors { k })
            }
            ("shortlex", arg) => Ok(InstanceDescriptor::Shortlex {
                alphabet: arg.unwrap_or("ab").to_string(),
            }),
            _ => Err(Error::Descriptor(format!("unknown instance {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StreamFamily {
    /// `n/(n+1)` for `n >= start` (default 1).
    #[serde(rename = "n_over_n_plus_1")]
    NOverNPlusOne,
    /// `first * ratio^i` for `i >= 0`; needs `first > 0` and `ratio > 1`.
    #[serde(rename = "geometric")]
    Geometric,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorDescriptor {
    Finite {
        elements: Vec<String>,
    },
    Stream {
        family: StreamFamily,
        #[serde(default)]
        params: serde_json::Map<String, serde_json::Value>,
    },
}

impl FromStr for GeneratorDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Descriptor(e.to_string()))
    }
}

fn param_rational(
    params: &serde_json::Map<String, serde_json::Value>,
    key: &str,
    default: &str,
) -> Result<BigRational> {
    let text = match params.get(key) {
        None => default.to_string(),
        Some(serde_json::Value::String(s)) => s.clone(),
        Some(serde_json::Value::Number(n)) => n.to_string(),
        Some(other) => {
            return Err(Error::Descriptor(format!(
                "parameter {key} must be a number, got {other}"
            )))
        }
    };
    let (p, q) = text.split_once('/').unwrap_or((&text, "1"));
    let p: BigInt = p
        .trim()
        .parse()
        .map_err(|_| Error::Descriptor(format!("parameter {key}: bad value {text:?}")))?;
    let q: BigInt = q
        .trim()
        .parse()
        .map_err(|_| Error::Descriptor(format!("parameter {key}: bad value {text:?}")))?;
    if q.is_zero() {
        return Err(Error::Descriptor(format!(
            "parameter {key}: zero denominator"
        )));
    }
    Ok(BigRational::new(p, q))
}

impl GeneratorDescriptor {
    /// Builds the generator set for `inst`. Generator sets never contain
    /// the unit.
    ///
    /// Stream families produce rational values that are handed to the
    /// instance parser, so a family only applies to instances that can
    /// represent its terms. The first terms are parsed eagerly to surface
    /// mismatches; a later term that fails to parse ends the stream.
    pub fn build<S>(&self, inst: &S) -> Result<WoSet<S::Element>>
    where
        S: SampleElements + Clone + Send + Sync + 'static,
    {
        match self {
            GeneratorDescriptor::Finite { elements } => {
                let parsed = elements
                    .iter()
                    .map(|e| inst.parse_element(e))
                    .collect::<Result<Vec<_>>>()?;
                WoSet::finite(inst, parsed, true)
            }
            GeneratorDescriptor::Stream { family, params } => {
                let term: Box<dyn Fn(usize) -> BigRational + Send + Sync> = match family {
                    StreamFamily::NOverNPlusOne => {
                        let start = param_rational(params, "start", "1")?;
                        if !start.is_integer() || start < BigRational::one() {
                            return Err(Error::Descriptor("start must be an integer >= 1".into()));
                        }
                        let start = start.to_integer();
                        Box::new(move |i| {
                            let n = &start + BigInt::from(i);
                            BigRational::new(n.clone(), n + 1)
                        })
                    }
                    StreamFamily::Geometric => {
                        let first = param_rational(params, "first", "1")?;
                        let ratio = param_rational(params, "ratio", "2")?;
                        if first <= BigRational::zero() || ratio <= BigRational::one() {
                            return Err(Error::Descriptor(
                                "geometric needs first > 0 and ratio > 1".into(),
                            ));
                        }
                        Box::new(move |i| {
                            &first * ratio.pow(i32::try_from(i).expect("index fits i32"))
                        })
                    }
                };
                for i in 0..3 {
                    inst.parse_element(&term(i).to_string())?;
                }
                let owned = inst.clone();
                Ok(WoSet::stream(
                    move |i| owned.parse_element(&term(i).to_string()).ok(),
                    true,
                ))
            }
        }
    }

    /// Compact one-line form for reports.
    pub fn describe(&self) -> String {
        serde_json::to_string(self).expect("descriptors serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{k_smallest_products, Budget};
    use crate::OrderedSemigroup;

    struct MinName(GeneratorDescriptor);

    impl InstanceVisitor for MinName {
        type Output = Result<String>;

        fn visit<S>(self, inst: &S) -> Result<String>
        where
            S: SampleElements + Clone + Send + Sync + 'static,
        {
            let mut g = self.0.build(inst)?;
            let m = g.wo_min(inst)?;
            Ok(format!("{}:{}", inst.name(), inst.format_element(&m)))
        }
    }

    fn run(inst: &str, gens: &str) -> Result<String> {
        let d: InstanceDescriptor = inst.parse()?;
        d.visit(MinName(gens.parse()?))?
    }

    #[test]
    fn instance_descriptors() {
        assert_eq!(
            r#"{"instance":"lex_vectors","k":3}"#.parse::<InstanceDescriptor>().unwrap(),
            InstanceDescriptor::LexVectors { k: 3 }
        );
        assert_eq!(
            r#"{"instance":"shortlex","alphabet":"xyz"}"#.parse::<InstanceDescriptor>().unwrap(),
            InstanceDescriptor::Shortlex {
                alphabet: "xyz".into()
            }
        );
        assert_eq!(
            "shortlex".parse::<InstanceDescriptor>().unwrap(),
            InstanceDescriptor::Shortlex {
                alphabet: "ab".into()
            }
        );
        assert!("nope".parse::<InstanceDescriptor>().is_err());
        assert!(r#"{"instance":"shortlex","alphabet":"aa"}"#
            .parse::<InstanceDescriptor>()
            .unwrap()
            .visit(MinName(GeneratorDescriptor::Finite {
                elements: vec!["a".into()]
            }))
            .is_err());
    }

    #[test]
    fn generator_descriptors() {
        assert_eq!(
            run(
                "additive_rationals",
                r#"{"kind":"finite","elements":["2/3","1/2"]}"#
            )
            .unwrap(),
            "additive_rationals:1/2"
        );
        assert_eq!(
            run(
                "lex_vectors:2",
                r#"{"kind":"finite","elements":["(1,0)","(0,3)"]}"#
            )
            .unwrap(),
            "lex_vectors_k2:(0,3)"
        );
        assert_eq!(
            run(
                "additive_rationals",
                r#"{"kind":"stream","family":"n_over_n_plus_1"}"#
            )
            .unwrap(),
            "additive_rationals:1/2"
        );
        assert_eq!(
            run(
                "additive_naturals",
                r#"{"kind":"stream","family":"geometric","params":{"first":3,"ratio":"2"}}"#
            )
            .unwrap(),
            "additive_naturals:3"
        );
        assert!(run(
            "additive_naturals",
            r#"{"kind":"stream","family":"n_over_n_plus_1"}"#
        )
        .is_err());
        assert!(run(
            "additive_naturals",
            r#"{"kind":"finite","elements":["0","1"]}"#
        )
        .is_err());
        assert!(run("additive_naturals", r#"{"kind":"finite","elements":[]}"#).is_err());
    }

    #[test]
    fn geometric_stream_enumerates() {
        let inst = AdditiveRationals::rationals();
        let d: GeneratorDescriptor =
            r#"{"kind":"stream","family":"geometric","params":{"first":"1/2","ratio":3}}"#
                .parse()
                .unwrap();
        let gens = d.build(&inst).unwrap();
        let e = k_smallest_products(&inst, gens, 4, Budget::default()).unwrap();
        let shown: Vec<String> = e.values().iter().map(|v| inst.format_element(v)).collect();
        assert_eq!(shown, vec!["1/2", "1", "3/2", "2"]);
    }
}
