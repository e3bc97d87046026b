//! The finite-group engine: materialized groups, subgroups, lattices and
//! isomorphism testing. Elements are opaque to everything here.

mod bitset;
pub mod fingerprint;
pub mod finite;
pub mod iso;
pub mod lattice;

pub use bitset::BitSet;
pub use fingerprint::{abelian_invariants, GroupFingerprint};
pub use finite::{group_close, ConcreteGroup, FiniteGroup, Limits, Quotient, Subgroup};
pub use iso::{is_isomorphic, isomorphism, Isomorphism};
pub use lattice::{abelian_subgroups, frattini, maximal_subgroups, normal_subgroups, semidirect_witness, subgroups_all, Frattini};
