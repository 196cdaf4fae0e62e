//! The RO(G)-graded cohomology of the point, of EG₊ and of ẼG with Burnside
//! ring coefficients, together with the R Z and ⟨Z⟩ coefficient variants of
//! the point.
//!
//! Classes live in a single grading and level and are stored as coordinates
//! on the canonical basis of [`cell::Cell`]. Multiplication goes through
//! detection coordinates (see [`cell`]); the relation ledgers of the
//! structure theorems are checked against it in the tests.

pub mod cell;
pub mod class;
pub mod gens;
pub mod ledger;
pub mod les;
pub mod names;
pub mod variants;

pub use cell::{Cell, CellKind, Det};
pub use class::PointClass;
pub use ledger::{les_exactness, point_relations};
pub use les::{les_exact, les_maps, LesTriple};
pub use variants::{coeff_variant, include_conc, quotient_map, CoeffSystem};

use crate::burnside_mackey::MackeyFunctor;
use crate::error::{Error, Result};
use crate::gradings::GradingROG;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Which cohomology ring a class belongs to. `S0RZ` and `S0Conc` are the
/// point with R Z and ⟨Z⟩ coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    S0,
    S0RZ,
    S0Conc,
    EG,
    TEG,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Level {
    GG,
    Ge,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::S0 => "S0",
            Ring::S0RZ => "S0[RZ]",
            Ring::S0Conc => "S0[<Z>]",
            Ring::EG => "EG",
            Ring::TEG => "TEG",
        })
    }
}

impl FromStr for Ring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "S0" | "s0" => Ring::S0,
            "EG" | "eg" => Ring::EG,
            "TEG" | "teg" => Ring::TEG,
            "S0RZ" | "S0[RZ]" => Ring::S0RZ,
            "S0Conc" | "S0[<Z>]" | "S0concZ" => Ring::S0Conc,
            _ => return Err(Error::InvalidParam(format!("unknown ring `{s}`"))),
        })
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::GG => "G/G",
            Level::Ge => "G/e",
        })
    }
}

/// The Mackey functor in one grading with its canonical basis names.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupInfo {
    pub ring: Ring,
    pub grading: GradingROG,
    pub functor: MackeyFunctor,
    pub gg_basis: Vec<String>,
    pub ge_basis: Vec<String>,
}

pub fn group_at(ring: Ring, x: GradingROG) -> GroupInfo {
    let c = Cell::new(ring, x);
    GroupInfo {
        ring,
        grading: x,
        functor: c.mackey(),
        gg_basis: names::basis_names(&c, Level::GG),
        ge_basis: names::basis_names(&c, Level::Ge),
    }
}
