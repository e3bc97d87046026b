//! Exact computational group theory for Pauli groups over prime-power
//! qudits, Heisenberg groups and lifted Pauli groups.

pub mod algebra;
pub mod census;
pub mod error;
pub mod group;
pub mod heisenberg;
pub mod lifted;
pub mod pauli;
pub mod products;
pub mod spec;
pub mod suite;
pub mod verdict;

pub use error::{Error, Result};
