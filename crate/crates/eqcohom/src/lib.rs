//! Exact computation of the RO(Z/p)-graded, Mackey-functor-valued ordinary
//! cohomology of the point, EG₊, ẼG and B_GU(1)₊.
//!
//! The crate is layered: [`gradings`] and [`burnside_mackey`] supply the
//! grading groups and the coefficient algebra, [`point_rings`] the three
//! point-level rings, [`fixed_ring`] the ring of the fixed points of B_GU(1)
//! used as an oracle, and [`bgu1`] the cohomology of B_GU(1) itself.

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod bgu1;
pub mod burnside_mackey;
pub mod error;
pub mod fixed_ring;
pub mod gradings;
pub mod grid;
pub mod parse;
pub mod point_rings;
pub mod suites;

pub use error::{Error, Result};
