//! Burnside ring arithmetic, finitely generated abelian groups and Mackey
//! functors for G = Z/p.

pub mod burnside;
pub mod ext;
pub mod fgab;
pub mod mackey;
pub mod snf;

pub use burnside::{burnside_eps, burnside_mul, BurnsideElement};
pub use fgab::FgAbGroup;
pub use mackey::{catalog, verify_pairing, Catalog, MackeyFunctor, MackeyMap, Report};
pub use snf::{snf, Matrix};
