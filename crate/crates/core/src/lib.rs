//! Near-sunflowers and focal families in families of binary and q-ary vectors.
//!
//! The crate is organised around a small data model ([`bitfam`]) and four
//! groups of algorithms built on it:
//!
//! - [`detect`]: predicates and witness finders (sunflower, near-sunflower,
//!   focal, one-sided focal, three disjoint symmetric differences).
//! - [`construct`]: finite fields, Reed-Solomon families and random choice
//!   with alterations.
//! - [`bounds`]: every closed-form bound, exact where the value is an integer
//!   or a rational.
//! - [`search`]: exact extremal values for tiny lengths, used as an oracle.
//!
//! [`cli`] wires these together behind the `sunforge` binary.

pub mod bitfam;
pub mod bounds;
pub mod cli;
pub mod construct;
pub mod detect;
mod error;
pub mod search;

pub use bitfam::{BitVector, ColumnProfile, Family, Params, QFamily, QVector};
pub use error::{Error, Result};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Which forbidden configuration a construction or search is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Near-sunflowers.
    Ns,
    /// Focal families.
    Ff,
    /// 0-focal families.
    Bff0,
    /// 1-focal families.
    Bff1,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Ns => "ns",
            Kind::Ff => "ff",
            Kind::Bff0 => "bff0",
            Kind::Bff1 => "bff1",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ns" => Ok(Kind::Ns),
            "ff" => Ok(Kind::Ff),
            "bff0" => Ok(Kind::Bff0),
            "bff1" => Ok(Kind::Bff1),
            other => Err(Error::InvalidParams(format!("unknown kind `{other}`"))),
        }
    }
}
