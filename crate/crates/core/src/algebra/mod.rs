//! Exact arithmetic: prime and extension fields, residue rings, cyclotomic
//! integer matrices and a few arithmetic functions.

pub mod arith;
pub mod cyclotomic;
pub mod field;
pub mod ring;

pub use arith::sigma_tau;
pub use cyclotomic::{CyclotomicMatrix, CyclotomicRing};
pub use field::{FieldElement, FieldSpec, GaloisField};
pub use ring::{Carrier, ResidueRing, RingElement};
