//! Finite (2,n)-semigroups and Menger (2,n)-semigroups of partial n-place
//! functions.
//!
//! The crate covers concrete function algebras ([`func`]), abstract algebras
//! given by operation tables ([`algebra`], [`frames`]), the relations on them
//! and their closure operators ([`lab`]), the canonical representations by
//! partial functions ([`represent`]), end-to-end verification of the
//! projection-representability characterizations ([`theorem`]), seeded
//! instance generation ([`forge`]) and the JSON file formats ([`format`]).
//!
//! Slots are numbered `1..=n` throughout the public API.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub mod algebra;
pub mod error;
pub mod forge;
pub mod format;
pub mod frames;
pub mod func;
pub mod lab;
pub mod outcome;
pub mod relation;
pub mod represent;
pub mod theorem;
pub mod word;

pub use algebra::AbstractAlgebra;
pub use error::{Error, Result};
pub use frames::{FrameSet, MuFrame};
pub use func::{ConcreteAlgebra, PartialFunctionTable};
pub use outcome::{Law, Outcome, Witness};
pub use relation::{BinRelation, RelationFlags};
pub use represent::{PointUniverse, Representation};
pub use word::{CompositionWord, Coord};

/// Whether an algebra carries a superposition operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Mann compositions plus superposition.
    Menger,
    /// Mann compositions only.
    Plain,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Menger => "menger",
            Flavor::Plain => "plain",
        })
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "menger" => Ok(Flavor::Menger),
            "plain" => Ok(Flavor::Plain),
            other => Err(Error::Input(format!(
                "unknown flavor `{other}` (expected menger or plain)"
            ))),
        }
    }
}
