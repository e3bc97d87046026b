//! Residue rings Z/p^k and the carrier abstraction shared by Heisenberg groups.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::arith::prime_power;
use super::field::{FieldElement, GaloisField};
use crate::error::{Error, Result};

/// Element of Z/modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingElement {
    pub modulus: u32,
    pub value: u32,
}

impl RingElement {
    pub fn new(modulus: u32, value: u32) -> Self {
        RingElement { modulus, value: value % modulus }
    }

    pub fn add(self, other: Self) -> Result<Self> {
        self.same(other)?;
        Ok(Self::new(self.modulus, self.value + other.value))
    }

    pub fn mul(self, other: Self) -> Result<Self> {
        self.same(other)?;
        Ok(Self::new(self.modulus, ((self.value as u64 * other.value as u64) % self.modulus as u64) as u32))
    }

    pub fn neg(self) -> Self {
        Self::new(self.modulus, self.modulus - self.value)
    }

    fn same(self, other: Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::Mismatch(format!("Z/{} vs Z/{}", self.modulus, other.modulus)))
        }
    }
}

/// The ring Z/p^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResidueRing {
    p: u32,
    k: u32,
    modulus: u32,
}

impl ResidueRing {
    pub fn new(modulus: u32) -> Result<Self> {
        let (p, k) = prime_power(modulus as u64)
            .ok_or_else(|| Error::InvalidArgument(format!("{modulus} is not a prime power")))?;
        Ok(ResidueRing { p: p as u32, k, modulus })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }

    pub fn element(&self, value: u32) -> RingElement {
        RingElement::new(self.modulus, value)
    }
}

/// A finite commutative ring whose elements are coded as `0..size`.
///
/// Heisenberg groups are built over either a Galois field or a residue ring.
#[derive(Clone, PartialEq, Eq)]
pub enum Carrier {
    Field(GaloisField),
    Residue(ResidueRing),
}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::Field(gf) => write!(f, "gf({})", gf.order()),
            Carrier::Residue(r) => write!(f, "z({})", r.modulus()),
        }
    }
}

impl Carrier {
    pub fn size(&self) -> u32 {
        match self {
            Carrier::Field(f) => f.order(),
            Carrier::Residue(r) => r.modulus,
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Carrier::Field(f) => f.characteristic(),
            Carrier::Residue(r) => r.p,
        }
    }

    /// Additive order of 1.
    pub fn additive_exponent(&self) -> u32 {
        match self {
            Carrier::Field(f) => f.characteristic(),
            Carrier::Residue(r) => r.modulus,
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            Carrier::Field(_) => true,
            Carrier::Residue(r) => r.k == 1,
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match self {
            Carrier::Field(f) => f.add(FieldElement(a), FieldElement(b)).0,
            Carrier::Residue(r) => (a + b) % r.modulus,
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        match self {
            Carrier::Field(f) => f.neg(FieldElement(a)).0,
            Carrier::Residue(r) => (r.modulus - a) % r.modulus,
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            Carrier::Field(f) => f.mul(FieldElement(a), FieldElement(b)).0,
            Carrier::Residue(r) => ((a as u64 * b as u64) % r.modulus as u64) as u32,
        }
    }

    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Multiplicative inverse of a unit, if it is one.
    pub fn unit_inverse(&self, a: u32) -> Option<u32> {
        (1..self.size()).find(|&b| self.mul(a, b) == 1)
    }

    /// Absolute trace to the prime field. The identity on Z/p; undefined on
    /// Z/p^k for k > 1.
    pub fn trace(&self, a: u32) -> Result<u32> {
        match self {
            Carrier::Field(f) => Ok(f.trace(FieldElement(a))),
            Carrier::Residue(r) if r.k == 1 => Ok(a),
            Carrier::Residue(r) => Err(Error::Domain(format!(
                "no trace form to the prime field on Z/{}",
                r.modulus
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_arithmetic() {
        let r = ResidueRing::new(9).unwrap();
        assert_eq!((r.prime(), r.exponent()), (3, 2));
        let a = r.element(7);
        let b = r.element(5);
        assert_eq!(a.add(b).unwrap().value, 3);
        assert_eq!(a.mul(b).unwrap().value, 8);
        assert_eq!(a.neg().value, 2);
        assert!(a.add(RingElement::new(3, 1)).is_err());
        assert!(ResidueRing::new(12).is_err());
    }

    #[test]
    fn carrier_units() {
        let c = Carrier::Residue(ResidueRing::new(9).unwrap());
        assert_eq!(c.unit_inverse(2), Some(5));
        assert_eq!(c.unit_inverse(3), None);
        assert!(!c.is_field());
        assert!(c.trace(1).is_err());
        let g = Carrier::Field(GaloisField::new(3, 2).unwrap());
        assert_eq!(g.size(), 9);
        assert_eq!(g.characteristic(), 3);
    }
}
