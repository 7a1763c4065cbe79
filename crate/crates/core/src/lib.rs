//! Exact computation in totally ordered semigroups.
//!
//! Given a well-ordered generator set `A` not containing the unit, the set
//! `C` of all finite products over `A` is itself well-ordered and every
//! product has finitely many representing strings. This crate makes both
//! facts executable:
//!
//! * [`engine::k_smallest_products`] and [`engine::ProductStream`] list `C`
//!   in strictly ascending order, each value with its least witness;
//! * [`engine::fiber`] lists every string representing a given product;
//! * [`hahn`] uses the same finiteness to multiply and invert generalized
//!   power series with well-ordered support.
//!
//! Instances are generic over an exact integer scalar (see [`scalar`]); the
//! aliases below fix arbitrary precision, with `*64` variants on machine
//! words for fast randomized checks. Machine-word instances panic on
//! overflow rather than wrap, so keep their values small.

pub mod archimedean;
pub mod descriptor;
pub mod engine;
pub mod error;
pub mod hahn;
pub mod instances;
pub mod oracle;
pub mod order;
pub mod report;
pub mod scalar;
pub mod verify;
pub mod wo_set;

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};

pub use error::{Error, Result};
pub use order::{OrderedGroup, OrderedSemigroup, SampleElements};

pub type Rational = BigRational;

pub type AdditiveNaturals = instances::Naturals<BigUint>;
pub type AdditiveRationals = instances::PositiveCone<instances::RationalGroup<BigInt>>;
pub type LexVectors = instances::LexNaturals<BigUint>;
pub type RationalExponents = instances::RationalGroup<BigInt>;
pub type LexExponents = instances::LexGroup<BigInt>;

pub type AdditiveNaturals64 = instances::Naturals<u64>;
pub type AdditiveRationals64 = instances::PositiveCone<instances::RationalGroup<i64>>;
pub type LexVectors64 = instances::LexNaturals<u64>;
pub type Rational64 = Ratio<i64>;

/// Series with rational exponents and rational coefficients.
pub type RationalSeries = hahn::HahnSeries<BigRational, BigRational>;
pub type RationalSeriesRing = hahn::SeriesRing<RationalExponents, BigRational>;
