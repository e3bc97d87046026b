//! Finite fields GF(p^m) in a polynomial basis.
//!
//! An element is identified with its coordinate vector `(c_0, ..., c_{m-1})`
//! over GF(p) and stored as the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`.
//! Constants of the prime subfield therefore keep their usual residues.
//! All operations go through lookup tables built once per field from exact
//! polynomial arithmetic modulo the defining polynomial.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::arith::is_prime;
use crate::error::{Error, Result};

/// Parameters of GF(p^m): characteristic, degree, and the monic irreducible
/// modulus as coefficients from the constant term upwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    /// GF(p^m) with the lexicographically least monic irreducible modulus,
    /// ordering candidates by their lower coefficients read as a base-p number.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        check_params(p, m)?;
        let q = (p as u64).pow(m);
        for code in 0..q {
            let mut f = digits(code, p, m as usize);
            f.push(1);
            if is_irreducible(&f, p) {
                return Ok(FieldSpec { p, m, modulus: f });
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over GF(p)")
    }

    /// GF(p^m) with a caller-chosen modulus, checked for irreducibility.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidArgument("modulus must have degree >= 1".into()));
        }
        let m = (modulus.len() - 1) as u32;
        check_params(p, m)?;
        if modulus.iter().any(|&c| c >= p) || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidArgument(format!(
                "modulus {modulus:?} is not a monic polynomial over GF({p})"
            )));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidArgument(format!(
                "modulus {modulus:?} is reducible over GF({p})"
            )));
        }
        Ok(FieldSpec { p, m, modulus })
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.m)
    }
}

fn check_params(p: u32, m: u32) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("extension degree must be >= 1".into()));
    }
    if (p as u64).pow(m) > 1 << 12 {
        return Err(Error::InvalidArgument(format!("GF({p}^{m}) is too large for table arithmetic")));
    }
    Ok(())
}

fn digits(mut code: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((code % p as u64) as u32);
        code /= p as u64;
    }
    out
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo the monic polynomial `b` over GF(p).
pub(crate) fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1);
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    let deg = f.len().saturating_sub(1);
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for code in 0..(p as u64).pow(d as u32) {
            let mut g = digits(code, p, d);
            g.push(1);
            if poly_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Element of a [`GaloisField`], stored as its polynomial-basis code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    spec: FieldSpec,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    trace: Vec<u32>,
}

/// GF(p^m) with precomputed arithmetic tables. Cheap to clone.
#[derive(Clone)]
pub struct GaloisField {
    t: Arc<Tables>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.t.spec.p, self.t.spec.m)
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t) || self.t.spec == other.t.spec
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    /// GF(p^m) with the default modulus.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        Ok(Self::from_spec(FieldSpec::new(p, m)?))
    }

    pub fn from_spec(spec: FieldSpec) -> Self {
        let p = spec.p;
        let m = spec.m as usize;
        let q = spec.order();
        let qs = q as usize;
        let coords: Vec<Vec<u32>> = (0..q as u64).map(|c| digits(c, p, m)).collect();
        let encode = |v: &[u32]| -> u32 {
            v.iter().rev().fold(0u32, |acc, &c| acc * p + c)
        };

        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                let sum: Vec<u32> = coords[a].iter().zip(&coords[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = encode(&sum);
                let prod = poly_rem(&poly_mul(&coords[a], &coords[b], p), &spec.modulus, p);
                let mut prod = prod;
                prod.resize(m, 0);
                mul[a * qs + b] = encode(&prod);
            }
        }
        let neg: Vec<u32> = (0..qs)
            .map(|a| (0..q).find(|&b| add[a * qs + b as usize] == 0).unwrap())
            .collect();
        let inv: Vec<u32> = (0..qs)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[a * qs + b as usize] == 1).unwrap() })
            .collect();

        // tr(a) = a + a^p + ... + a^(p^(m-1))
        let trace: Vec<u32> = (0..q)
            .map(|a| {
                let mut acc = 0u32;
                let mut frob = a;
                for _ in 0..m {
                    acc = add[acc as usize * qs + frob as usize];
                    let mut pw = 1u32;
                    for _ in 0..p {
                        pw = mul[pw as usize * qs + frob as usize];
                    }
                    frob = pw;
                }
                acc
            })
            .collect();

        let f = GaloisField { t: Arc::new(Tables { spec, q, add, mul, neg, inv, trace }) };
        debug_assert!(f.trace_is_prime_valued());
        f
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.t.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.t.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.t.spec.m
    }

    pub fn order(&self) -> u32 {
        self.t.q
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The class of `x` modulo the defining polynomial. In GF(p) this is 0.
    pub fn generator(&self) -> FieldElement {
        if self.t.spec.m == 1 {
            // x mod x - c is the constant c
            FieldElement((self.t.spec.p - self.t.spec.modulus[0]) % self.t.spec.p)
        } else {
            FieldElement(self.t.spec.p)
        }
    }

    /// Embeds a prime-field residue.
    pub fn from_prime(&self, r: u32) -> FieldElement {
        FieldElement(r % self.t.spec.p)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        let spec = &self.t.spec;
        if coeffs.len() != spec.m as usize || coeffs.iter().any(|&c| c >= spec.p) {
            return Err(Error::InvalidArgument(format!(
                "{coeffs:?} is not a coordinate vector of GF({}^{})",
                spec.p, spec.m
            )));
        }
        Ok(FieldElement(coeffs.iter().rev().fold(0, |acc, &c| acc * spec.p + c)))
    }

    pub fn element(&self, code: u32) -> Result<FieldElement> {
        if code < self.t.q {
            Ok(FieldElement(code))
        } else {
            Err(Error::InvalidArgument(format!("{code} is not an element code of GF({})", self.t.q)))
        }
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        digits(a.0 as u64, self.t.spec.p, self.t.spec.m as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.t.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.t.add[(a.0 * self.t.q + b.0) as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.t.mul[(a.0 * self.t.q + b.0) as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.t.neg[a.0 as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            Err(Error::Domain("zero has no multiplicative inverse".into()))
        } else {
            Ok(FieldElement(self.t.inv[a.0 as usize]))
        }
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a -> a^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.t.spec.p as u64)
    }

    /// Absolute trace onto the prime field, returned as a residue mod p.
    #[inline]
    pub fn trace(&self, a: FieldElement) -> u32 {
        self.t.trace[a.0 as usize]
    }

    /// Euclidean dot product of two equal-length vectors.
    pub fn dot(&self, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).fold(self.zero(), |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Whether the trace table only lands in the prime subfield. Part of the
    /// construction checks; a failure means the modulus or tables are wrong.
    pub(crate) fn trace_is_prime_valued(&self) -> bool {
        self.t.trace.iter().all(|&t| t < self.t.spec.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli() {
        assert_eq!(FieldSpec::new(2, 1).unwrap().modulus, vec![0, 1]);
        assert_eq!(FieldSpec::new(2, 2).unwrap().modulus, vec![1, 1, 1]);
        assert_eq!(FieldSpec::new(3, 2).unwrap().modulus, vec![1, 0, 1]);
        assert_eq!(FieldSpec::new(2, 3).unwrap().modulus, vec![1, 1, 0, 1]);
        assert_eq!(FieldSpec::new(5, 2).unwrap().modulus, vec![2, 0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldSpec::new(4, 1), Err(Error::NotPrime(4)));
        assert!(FieldSpec::new(3, 0).is_err());
        assert!(FieldSpec::with_modulus(3, vec![2, 0, 1]).is_err()); // x^2 - 1
        assert!(FieldSpec::with_modulus(2, vec![1, 1, 1]).is_ok());
    }

    #[test]
    fn gf4_generator_squares_to_g_plus_one() {
        let f = GaloisField::new(2, 2).unwrap();
        let g = f.generator();
        // Independent reduction: x^2 = x + 1 mod x^2 + x + 1.
        let reduced = poly_rem(&[0, 0, 1], &[1, 1, 1], 2);
        assert_eq!(reduced, vec![1, 1]);
        assert_eq!(f.mul(g, g), f.from_coeffs(&[1, 1]).unwrap());
        assert_eq!(f.mul(g, g), f.add(g, f.one()));
        assert_eq!(f.trace(g), 1);
    }

    #[test]
    fn small_examples() {
        let f3 = GaloisField::new(3, 1).unwrap();
        assert_eq!(f3.add(FieldElement(2), FieldElement(2)), FieldElement(1));
        assert_eq!(f3.trace(FieldElement(2)), 2);
        assert!(f3.inv(f3.zero()).is_err());

        let f9 = GaloisField::new(3, 2).unwrap();
        assert_eq!(f9.order(), 9);
        for a in f9.elements().filter(|a| !a.is_zero()) {
            assert_eq!(f9.mul(f9.inv(a).unwrap(), a), f9.one());
        }
        assert_eq!(f9.elements().filter(|&a| f9.trace(a) == 0).count(), 3);
        assert!(f9.trace_is_prime_valued());
    }

    #[test]
    fn serializes_spec() {
        let spec = FieldSpec::new(3, 2).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"p":3,"m":2,"modulus":[1,0,1]}"#);
        assert_eq!(serde_json::from_str::<FieldSpec>(&json).unwrap(), spec);
    }
}
