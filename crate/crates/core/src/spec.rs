//! Group spec strings and the summary report printed for a built group.
//!
//! ```text
//! spec       = "trivial" | pauli | lifted | heis | reference | params ;
//! pauli      = "pauli:" params ;
//! lifted     = "lifted:" params ;
//! params     = param { "," param } ;
//! param      = ( "p" | "m" | "n" ) "=" integer ;
//! heis       = "heis:" heis-param { "," heis-param } ;
//! heis-param = "R=" ring | "n=" integer
//!            | "cocycle=" ( "symplectic" | "polarized" )
//!            | "reduced=" ( "true" | "false" ) ;
//! ring       = ( "gf" | "z" ) "(" integer ")" ;
//! reference  = "d8" | "q8" | ( "e1" | "e2" | "dihedral" ) "(" integer ")" ;
//! ```
//!
//! `m` and `n` default to 1; `heis` defaults to `n=1,cocycle=polarized,reduced=false`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::arith::prime_power;
use crate::algebra::{Carrier, GaloisField, ResidueRing};
use crate::census::dihedral_group;
use crate::error::{Error, Result};
use crate::group::{frattini, group_close, FiniteGroup, GroupFingerprint, Limits};
use crate::heisenberg::{Cocycle, HeisenbergSpec};
use crate::lifted::LiftedSpec;
use crate::pauli::PauliSpec;
use crate::products::{reference_group, ReferenceGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Trivial,
    Pauli(PauliSpec),
    Lifted(LiftedSpec),
    Heisenberg(HeisenbergSpec),
    Reference(ReferenceGroup),
    Dihedral(u32),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Trivial => write!(f, "trivial"),
            GroupSpec::Pauli(s) => write!(f, "pauli:p={},m={},n={}", s.p(), s.m(), s.n()),
            GroupSpec::Lifted(s) => write!(f, "lifted:p={},m={},n={}", s.p(), s.m(), s.n()),
            GroupSpec::Heisenberg(h) => write!(
                f,
                "heis:R={},n={},cocycle={},reduced={}",
                h.carrier(),
                h.n(),
                h.cocycle(),
                h.reduced()
            ),
            GroupSpec::Reference(ReferenceGroup::D8) => write!(f, "d8"),
            GroupSpec::Reference(ReferenceGroup::Q8) => write!(f, "q8"),
            GroupSpec::Reference(ReferenceGroup::E1(p)) => write!(f, "e1({p})"),
            GroupSpec::Reference(ReferenceGroup::E2(p)) => write!(f, "e2({p})"),
            GroupSpec::Dihedral(r) => write!(f, "dihedral({r})"),
        }
    }
}

fn parse_int(key: &str, v: &str) -> Result<u32> {
    v.trim().parse().map_err(|_| Error::Parse(format!("{key} expects a nonnegative integer, got {v:?}")))
}

fn split_pairs(body: &str) -> Result<Vec<(&str, &str)>> {
    body.split(',')
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {kv:?}")))
        })
        .collect()
}

fn parse_params(body: &str) -> Result<(u32, u32, usize)> {
    let (mut p, mut m, mut n) = (None, 1, 1);
    for (k, v) in split_pairs(body)? {
        match k {
            "p" => p = Some(parse_int(k, v)?),
            "m" => m = parse_int(k, v)?,
            "n" => n = parse_int(k, v)? as usize,
            _ => return Err(Error::Parse(format!("unknown parameter {k:?}"))),
        }
    }
    let p = p.ok_or_else(|| Error::Parse("missing p=".into()))?;
    Ok((p, m, n))
}

/// `name(k)` with a single integer argument.
fn call<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')
}

fn parse_ring(s: &str) -> Result<Carrier> {
    if let Some(q) = call(s, "gf") {
        let q = parse_int("gf", q)?;
        let (p, m) = prime_power(q as u64).ok_or_else(|| Error::Parse(format!("gf({q}): not a prime power")))?;
        Ok(Carrier::Field(GaloisField::new(p as u32, m)?))
    } else if let Some(n) = call(s, "z") {
        Ok(Carrier::Residue(ResidueRing::new(parse_int("z", n)?)?))
    } else {
        Err(Error::Parse(format!("unknown ring {s:?}; expected gf(q) or z(N)")))
    }
}

fn parse_heis(body: &str) -> Result<HeisenbergSpec> {
    let (mut ring, mut n, mut cocycle, mut reduced) = (None, 1, Cocycle::Polarized, false);
    for (k, v) in split_pairs(body)? {
        match k {
            "R" => ring = Some(parse_ring(v)?),
            "n" => n = parse_int(k, v)? as usize,
            "cocycle" => {
                cocycle = match v {
                    "symplectic" => Cocycle::Symplectic,
                    "polarized" => Cocycle::Polarized,
                    _ => return Err(Error::Parse(format!("unknown cocycle {v:?}"))),
                }
            }
            "reduced" => {
                reduced = v.parse().map_err(|_| Error::Parse(format!("reduced expects true or false, got {v:?}")))?
            }
            _ => return Err(Error::Parse(format!("unknown parameter {k:?}"))),
        }
    }
    let ring = ring.ok_or_else(|| Error::Parse("missing R=".into()))?;
    HeisenbergSpec::new(ring, n, cocycle, reduced)
}

/// Construction failures inside a spec string surface as parse errors.
impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s.trim()).map_err(|e| match e {
            Error::Parse(_) => e,
            other => Error::Parse(format!("{s:?}: {other}")),
        })
    }
}

fn parse_spec(s: &str) -> Result<GroupSpec> {
    let lower = s.to_ascii_lowercase();
    if let Some(body) = s.strip_prefix("pauli:") {
        let (p, m, n) = parse_params(body)?;
        return Ok(GroupSpec::Pauli(PauliSpec::new(p, m, n)?));
    }
    if let Some(body) = s.strip_prefix("lifted:") {
        let (p, m, n) = parse_params(body)?;
        return Ok(GroupSpec::Lifted(LiftedSpec::new(p, m, n)?));
    }
    if let Some(body) = s.strip_prefix("heis:") {
        return Ok(GroupSpec::Heisenberg(parse_heis(body)?));
    }
    match lower.as_str() {
        "trivial" => return Ok(GroupSpec::Trivial),
        "d8" => return Ok(GroupSpec::Reference(ReferenceGroup::D8)),
        "q8" => return Ok(GroupSpec::Reference(ReferenceGroup::Q8)),
        _ => {}
    }
    for (name, make) in [("e1", ReferenceGroup::E1 as fn(u32) -> ReferenceGroup), ("e2", ReferenceGroup::E2)] {
        if let Some(p) = call(&lower, name) {
            let p = parse_int(name, p)?;
            if p == 2 || !crate::algebra::arith::is_prime(p as u64) {
                return Err(Error::Parse(format!("{name}({p}) needs an odd prime")));
            }
            return Ok(GroupSpec::Reference(make(p)));
        }
    }
    if let Some(r) = call(&lower, "dihedral") {
        let r = parse_int("dihedral", r)?;
        if r == 0 {
            return Err(Error::Parse("dihedral(r) needs r >= 1".into()));
        }
        return Ok(GroupSpec::Dihedral(r));
    }
    if s.contains('=') && !s.contains(':') {
        let (p, m, n) = parse_params(s)?;
        return Ok(GroupSpec::Pauli(PauliSpec::new(p, m, n)?));
    }
    Err(Error::Parse(format!("unrecognized group spec {s:?}")))
}

impl GroupSpec {
    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Trivial => Ok(group_close("1", &[0u8], 0, |_, _| 0, limits)?.group),
            GroupSpec::Pauli(s) => Ok(s.group(limits)?.group),
            GroupSpec::Lifted(s) => Ok(s.group(limits)?.group),
            GroupSpec::Heisenberg(h) => {
                if h.predicted_order() > limits.closure as u128 {
                    return Err(Error::CapExceeded { what: "group closure", cap: limits.closure });
                }
                Ok(h.group(limits)?.group)
            }
            GroupSpec::Reference(r) => reference_group(*r),
            GroupSpec::Dihedral(r) => dihedral_group(*r),
        }
    }
}

/// Summary of a built group.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupReport {
    pub spec: String,
    pub name: String,
    pub order: usize,
    pub exponent: u64,
    pub center_order: usize,
    pub derived_order: usize,
    /// Absent when the subgroup lattice is over the cap.
    pub frattini_order: Option<usize>,
    pub fingerprint: GroupFingerprint,
    pub order_sequence: Vec<(u32, usize)>,
    pub generators: Vec<String>,
}

impl GroupReport {
    pub fn of(spec: &GroupSpec, g: &FiniteGroup, limits: &Limits) -> Result<Self> {
        let frattini_order = match frattini(g, limits) {
            Ok(f) => Some(f.subgroup.order()),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let fingerprint = GroupFingerprint::of(g);
        Ok(GroupReport {
            spec: spec.to_string(),
            name: g.name().into(),
            order: g.order(),
            exponent: g.exponent(),
            center_order: g.center().order(),
            derived_order: g.derived_subgroup().order(),
            frattini_order,
            order_sequence: fingerprint.order_sequence.iter().map(|(&o, &c)| (o, c)).collect(),
            fingerprint,
            generators: g.small_generating_set(&g.whole()).iter().map(|&x| g.label(x).to_string()).collect(),
        })
    }
}
