//! Shipped semigroup and group instances.
//!
//! | instance | carrier | commutative | archimedean |
//! |---|---|---|---|
//! | [`Naturals`] | `N` under `+` | yes | yes |
//! | [`PositiveCone`] of [`RationalGroup`] | `Q>=0` under `+` | yes | yes |
//! | [`LexNaturals`] | `N^k` under `+`, lexicographic | yes | no |
//! | [`Shortlex`] | words over an alphabet, concatenation | no | yes |
//! | [`MaxNaturals`] | `N` under `max` | not cancellative | - |

mod broken;
mod cone;
mod lex;
mod naturals;
mod rationals;
mod shortlex;

pub use broken::MaxNaturals;
pub use cone::PositiveCone;
pub use lex::{LexGroup, LexNaturals};
pub use naturals::Naturals;
pub use rationals::RationalGroup;
pub use shortlex::Shortlex;

use crate::error::Error;

pub(crate) fn parse_error(input: &str, instance: String, reason: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        instance,
        reason: reason.into(),
    }
}
