//! ω-powers of finitary languages: words, lassos, the pair enumeration, the
//! Büchi transition system derived from a regular tree, and the languages
//! whose ω-powers land at prescribed levels of the Borel hierarchy.

pub mod error;
pub mod evidence;
pub mod knj;
pub mod pairs;
pub mod regular;
pub mod rtree;
pub mod sigma2;
pub mod theorem2;
pub mod word;

pub use error::{Error, Result};

/// Outcome of a bounded semi-decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    Inconclusive,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    pub fn is_conclusive(self) -> bool {
        self != Decision::Inconclusive
    }
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Inconclusive => "inconclusive",
        })
    }
}
