//! Pauli groups on `n` qudits of prime-power dimension `q = p^m`, in
//! phase-space form `w^c X^alpha Z^beta`.
//!
//! For odd `p` the phase `w` is a primitive `p`-th root of unity and the
//! product picks up `tr(beta_g . alpha_h)`. For `p = 2` the phase is `i`
//! (mod 4) and the product picks up `2 tr(beta_g . alpha_h)`, so `Y` is
//! `(1, 1, 1) = iXZ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{CyclotomicMatrix, FieldElement, FieldSpec, GaloisField};
use crate::error::{Error, Result};
use crate::group::{frattini, group_close, is_isomorphic, ConcreteGroup, FiniteGroup, Limits};
use crate::products::{reference_group, ReferenceGroup};
use crate::verdict::{Status, VerdictReport};

/// Largest Hilbert-space dimension `q^n` the matrix oracle handles.
pub const MATRIX_ORACLE_MAX_DIM: u32 = 9;

/// `w^phase X^alpha Z^beta`, with field entries as element codes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PauliElement {
    pub phase: u32,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl fmt::Display for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "w^{} X[{}] Z[{}]", self.phase, list(&self.alpha), list(&self.beta))
    }
}

impl fmt::Debug for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PauliElement {
    pub fn identity(n: usize) -> Self {
        PauliElement { phase: 0, alpha: vec![0; n], beta: vec![0; n] }
    }

    pub fn is_identity(&self) -> bool {
        self.phase == 0 && self.alpha.iter().chain(&self.beta).all(|&x| x == 0)
    }
}

/// Parses `w^c X[a1,...] Z[b1,...]` for `n` registers. Each part may be
/// omitted and defaults to zero; `I` alone is the identity.
impl FromStr for PauliElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut phase = 0;
        let mut alpha = None;
        let mut beta = None;
        if s != "I" {
            for tok in s.split_whitespace() {
                if let Some(c) = tok.strip_prefix("w^") {
                    phase = c.parse().map_err(|_| Error::Parse(format!("bad phase exponent in {tok:?}")))?;
                } else if let Some(v) = tok.strip_prefix('X') {
                    alpha = Some(parse_vector(v)?);
                } else if let Some(v) = tok.strip_prefix('Z') {
                    beta = Some(parse_vector(v)?);
                } else {
                    return Err(Error::Parse(format!("unexpected token {tok:?} in Pauli literal")));
                }
            }
        }
        let n = alpha.as_ref().or(beta.as_ref()).map_or(0, Vec::len);
        let alpha = alpha.unwrap_or_else(|| vec![0; n]);
        let beta = beta.unwrap_or_else(|| vec![0; n]);
        if alpha.len() != beta.len() {
            return Err(Error::Parse("X and Z vectors differ in length".into()));
        }
        Ok(PauliElement { phase, alpha, beta })
    }
}

fn parse_vector(v: &str) -> Result<Vec<u32>> {
    let inner = v
        .strip_prefix('[')
        .and_then(|v| v.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [..] vector, got {v:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad field code {x:?}"))))
        .collect()
}

/// Parameters of `P(n, p^m)` together with the coefficient field.
#[derive(Clone, PartialEq, Eq)]
pub struct PauliSpec {
    n: usize,
    field: GaloisField,
}

impl fmt::Debug for PauliSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PauliSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{})", self.n, self.q())
    }
}

impl PauliSpec {
    pub fn new(p: u32, m: u32, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("need at least one register".into()));
        }
        Ok(PauliSpec { n, field: GaloisField::new(p, m)? })
    }

    pub fn qubits(n: usize) -> Result<Self> {
        Self::new(2, 1, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn m(&self) -> u32 {
        self.field.degree()
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn field_spec(&self) -> &FieldSpec {
        self.field.spec()
    }

    /// 4 for qubit-type groups, `p` otherwise.
    pub fn phase_modulus(&self) -> u32 {
        if self.p() == 2 {
            4
        } else {
            self.p()
        }
    }

    /// `phase_modulus * q^(2n)`.
    pub fn predicted_order(&self) -> u128 {
        self.phase_modulus() as u128 * (self.q() as u128).pow(2 * self.n as u32)
    }

    pub fn identity(&self) -> PauliElement {
        PauliElement::identity(self.n)
    }

    pub fn phase(&self, c: u32) -> PauliElement {
        PauliElement { phase: c % self.phase_modulus(), ..self.identity() }
    }

    /// `X^a` on register `k`.
    pub fn x(&self, k: usize, a: u32) -> PauliElement {
        let mut e = self.identity();
        e.alpha[k] = a;
        e
    }

    /// `Z^b` on register `k`.
    pub fn z(&self, k: usize, b: u32) -> PauliElement {
        let mut e = self.identity();
        e.beta[k] = b;
        e
    }

    /// `Y = iXZ` on qubit register `k`.
    pub fn y(&self, k: usize) -> Result<PauliElement> {
        if self.q() != 2 {
            return Err(Error::Domain("Y is only defined for qubits".into()));
        }
        let mut e = self.identity();
        e.phase = 1;
        e.alpha[k] = 1;
        e.beta[k] = 1;
        Ok(e)
    }

    /// The phase generator plus `X` and `Z` on every register and every
    /// polynomial-basis element of the field.
    pub fn generators(&self) -> Vec<PauliElement> {
        let mut gens = vec![self.phase(1)];
        for k in 0..self.n {
            for i in 0..self.m() {
                let basis = self.p().pow(i);
                gens.push(self.x(k, basis));
                gens.push(self.z(k, basis));
            }
        }
        gens
    }

    /// Phase contribution of moving `Z^beta` past `X^alpha`.
    #[inline]
    fn cross(&self, beta: &[u32], alpha: &[u32]) -> u32 {
        let f = &self.field;
        let d = beta.iter().zip(alpha).fold(FieldElement::ZERO, |acc, (&b, &a)| {
            f.add(acc, f.mul(FieldElement(b), FieldElement(a)))
        });
        let t = f.trace(d);
        if self.p() == 2 {
            2 * t
        } else {
            t
        }
    }

    /// Parses an element literal, padding omitted parts to this spec's length.
    pub fn parse_element(&self, s: &str) -> Result<PauliElement> {
        let mut e: PauliElement = s.parse()?;
        if e.alpha.is_empty() {
            e.alpha = vec![0; self.n];
            e.beta = vec![0; self.n];
        }
        self.validate(&e).map_err(|err| Error::Parse(err.to_string()))?;
        Ok(e)
    }

    pub fn validate(&self, g: &PauliElement) -> Result<()> {
        let q = self.q();
        if g.alpha.len() != self.n || g.beta.len() != self.n {
            return Err(Error::Mismatch(format!("element {g} has the wrong length for {self}")));
        }
        if g.phase >= self.phase_modulus() || g.alpha.iter().chain(&g.beta).any(|&x| x >= q) {
            return Err(Error::Mismatch(format!("element {g} is out of range for {self}")));
        }
        Ok(())
    }

    pub fn mul(&self, g: &PauliElement, h: &PauliElement) -> Result<PauliElement> {
        self.validate(g)?;
        self.validate(h)?;
        Ok(self.mul_unchecked(g, h))
    }

    pub(crate) fn mul_unchecked(&self, g: &PauliElement, h: &PauliElement) -> PauliElement {
        let f = &self.field;
        let add = |a: &[u32], b: &[u32]| -> Vec<u32> {
            a.iter().zip(b).map(|(&x, &y)| f.add(FieldElement(x), FieldElement(y)).0).collect()
        };
        let phase = (g.phase + h.phase + self.cross(&g.beta, &h.alpha)) % self.phase_modulus();
        PauliElement { phase, alpha: add(&g.alpha, &h.alpha), beta: add(&g.beta, &h.beta) }
    }

    pub fn inverse(&self, g: &PauliElement) -> PauliElement {
        let f = &self.field;
        let neg = |a: &[u32]| -> Vec<u32> { a.iter().map(|&x| f.neg(FieldElement(x)).0).collect() };
        let (alpha, beta) = (neg(&g.alpha), neg(&g.beta));
        let pm = self.phase_modulus();
        // g * (c', -alpha, -beta) has phase c + c' + cross(beta, -alpha).
        let phase = (2 * pm - g.phase - self.cross(&g.beta, &alpha) % pm) % pm;
        PauliElement { phase, alpha, beta }
    }

    pub fn pow(&self, g: &PauliElement, k: u64) -> PauliElement {
        (0..k).fold(self.identity(), |acc, _| self.mul_unchecked(&acc, g))
    }

    pub fn order_of(&self, g: &PauliElement) -> u32 {
        let mut acc = g.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = self.mul_unchecked(&acc, g);
            k += 1;
        }
        k
    }

    /// `g^-1 h^-1 g h`.
    pub fn commutator(&self, g: &PauliElement, h: &PauliElement) -> PauliElement {
        let a = self.mul_unchecked(&self.inverse(g), &self.inverse(h));
        self.mul_unchecked(&a, &self.mul_unchecked(g, h))
    }

    /// The element of the concatenated register set acting as `g` on this
    /// spec's registers and `h` on `other`'s.
    pub fn tensor(&self, other: &PauliSpec, g: &PauliElement, h: &PauliElement) -> Result<(PauliSpec, PauliElement)> {
        if self.field != other.field {
            return Err(Error::Mismatch(format!("cannot tensor {self} with {other}")));
        }
        let spec = PauliSpec { n: self.n + other.n, field: self.field.clone() };
        let cat = |a: &[u32], b: &[u32]| [a, b].concat();
        let e = PauliElement {
            phase: (g.phase + h.phase) % self.phase_modulus(),
            alpha: cat(&g.alpha, &h.alpha),
            beta: cat(&g.beta, &h.beta),
        };
        Ok((spec, e))
    }

    /// Materializes the group by closing the generators.
    pub fn group(&self, limits: &Limits) -> Result<ConcreteGroup<PauliElement>> {
        if self.predicted_order() > limits.closure as u128 {
            return Err(Error::CapExceeded { what: "group closure", cap: limits.closure });
        }
        group_close(self.to_string(), &self.generators(), self.identity(), |a, b| self.mul_unchecked(a, b), limits)
    }

    /// Exact `q^n x q^n` matrix of `g`, with basis `|j>` indexed by the
    /// base-`q` digits of `j` (register 0 most significant).
    ///
    /// `X^alpha Z^beta |j> = w^{cross(beta, j)} |j + alpha>`, over the
    /// cyclotomic integers of order `phase_modulus`.
    pub fn matrix(&self, g: &PauliElement) -> Result<CyclotomicMatrix> {
        self.validate(g)?;
        let q = self.q();
        let dim = q.checked_pow(self.n as u32).filter(|&d| d <= MATRIX_ORACLE_MAX_DIM).ok_or_else(|| {
            Error::CapExceeded { what: "matrix oracle dimension", cap: MATRIX_ORACLE_MAX_DIM as usize }
        })? as usize;
        let f = &self.field;
        let digits = |mut j: usize| -> Vec<u32> {
            let mut d = vec![0; self.n];
            for k in (0..self.n).rev() {
                d[k] = (j % q as usize) as u32;
                j /= q as usize;
            }
            d
        };
        let index = |d: &[u32]| d.iter().fold(0usize, |acc, &x| acc * q as usize + x as usize);
        let mut rows = vec![0usize; dim];
        let mut powers = vec![0i64; dim];
        for j in 0..dim {
            let dj = digits(j);
            let shifted: Vec<u32> =
                dj.iter().zip(&g.alpha).map(|(&x, &a)| f.add(FieldElement(x), FieldElement(a)).0).collect();
            rows[j] = index(&shifted);
            powers[j] = (g.phase + self.cross(&g.beta, &dj)) as i64;
        }
        Ok(CyclotomicMatrix::monomial(self.phase_modulus(), &rows, &powers))
    }
}

/// The 16-element single-qubit group with `X`, `Y`, `Z` located.
struct QubitFrame {
    g: FiniteGroup,
    x: u32,
    y: u32,
    z: u32,
}

fn qubit_frame() -> Result<QubitFrame> {
    let spec = PauliSpec::qubits(1)?;
    let cg = spec.group(&Limits::default())?;
    let at = |e: &PauliElement| cg.index_of(e).expect("generator lies in the group");
    Ok(QubitFrame { x: at(&spec.x(0, 1)), y: at(&spec.y(0)?), z: at(&spec.z(0, 1)), g: cg.group })
}

/// Evaluates both presentations of the single-qubit Pauli group and the
/// structural facts that accompany them.
pub fn lemma31_presentation_check() -> Result<VerdictReport> {
    let QubitFrame { g, x, y, z } = qubit_frame()?;
    let limits = Limits::default();
    let mut r = VerdictReport::new(
        "lemma3.1",
        "Lemma 3.1",
        "P(1,2) is presented by <X,Y,Z> and by <u,a,b> with u=XY, a=Y, b=XYZ; it has exponent 4, cyclic center of order 4, Frattini subgroup equal to the derived subgroup, and G/Z elementary abelian of rank 2",
    );
    let e = g.identity();
    let m = |a: u32, b: u32| g.mul(a, b);
    r.expect("|G|", 16, g.order());
    r.expect("X^2", e, g.pow(x, 2));
    r.expect("Y^2", e, g.pow(y, 2));
    r.expect("Z^2", e, g.pow(z, 2));
    r.expect("(YZ)^4", e, g.pow(m(y, z), 4));
    r.expect("(ZX)^4", e, g.pow(m(z, x), 4));
    r.expect("(XY)^4", e, g.pow(m(x, y), 4));
    r.expect("<X,Y,Z> = G", 16, g.generate(&[x, y, z]).order());

    let u = m(x, y);
    let a = y;
    let b = m(m(x, y), z);
    r.expect("u^4", e, g.pow(u, 4));
    r.expect("a^2", e, g.pow(a, 2));
    r.expect("u^2 = b^2", g.pow(u, 2), g.pow(b, 2));
    r.expect("a^-1 u a = u^-1", g.inv(u), g.conjugate(u, a));
    r.expect("ub = bu", m(u, b), m(b, u));
    r.expect("ab = ba", m(a, b), m(b, a));
    r.expect("<u,a,b> = G", 16, g.generate(&[u, a, b]).order());

    let max_order = g.element_orders().iter().copied().max().unwrap_or(1);
    r.expect("largest element order", 4, max_order);
    r.expect("exponent", 4, g.exponent());
    let center = g.center();
    r.expect("|Z(G)|", 4, center.order());
    r.expect("Z(G) = <XYZ>", center.members().to_vec(), g.generate(&[b]).members().to_vec());
    r.expect("|[G,G]|", 2, g.derived_subgroup().order());
    r.assert("[G,G] is contained in Z(G)", g.derived_subgroup().is_subgroup_of(center));
    let phi = frattini(&g, &limits)?;
    r.expect("Frattini subgroup = [G,G]", g.derived_subgroup().members().to_vec(), phi.subgroup.members().to_vec());
    let q = g.quotient(center, "G/Z")?;
    r.expect("|G/Z|", 4, q.group.order());
    r.assert("G/Z is elementary abelian", q.group.is_elementary_abelian());
    let (d8, _) = g.subgroup_as_group(&g.generate(&[u, a]), "<u,a>")?;
    r.assert("<u,a> is dihedral of order 8", is_isomorphic(&d8, &reference_group(ReferenceGroup::D8)?));
    r.info("<b> order", g.element_order(b));
    r.note("Relations are evaluated on a concrete model of order 16; no coset enumeration is performed.");
    Ok(r.conclude(Status::RefutedAtDeskScale).with_witness(serde_json::json!({
        "u": g.label(u), "a": g.label(a), "b": g.label(b),
        "center": center.members().iter().map(|&i| g.label(i)).collect::<Vec<_>>(),
    })))
}

/// The two-qubit generators `X⊗I, Y⊗I, Z⊗I, I⊗Z, I⊗X`.
pub fn two_qubit_generators() -> Result<(PauliSpec, [PauliElement; 5])> {
    let s = PauliSpec::qubits(2)?;
    Ok((s.clone(), [s.x(0, 1), s.y(0)?, s.z(0, 1), s.z(1, 1), s.x(1, 1)]))
}

/// Checks the relations of the five two-qubit generators: involutions, a
/// central product `ABC`, and the commutator table.
pub fn p22_relations_check() -> Result<VerdictReport> {
    let (spec, [a, b, c, d, e]) = two_qubit_generators()?;
    let cg = group_close(
        "P(2,2)",
        &[a.clone(), b.clone(), c.clone(), d.clone(), e.clone()],
        spec.identity(),
        |x, y| spec.mul_unchecked(x, y),
        &Limits::default(),
    )?;
    let g = &cg.group;
    let mut r = VerdictReport::new(
        "eq13-14",
        "Eq. (13)-(14)",
        "P(2,2) has 64 elements generated by A..E, each an involution; ABC is central; [A,B]=[D,E]=[B,C]=[C,A]=-I and [C,E]=[B,E]=[A,D]=[A,E]=[C,D]=I",
    );
    let ix = |x: &PauliElement| cg.index_of(x).expect("generator");
    let (ia, ib, ic, id, ie) = (ix(&a), ix(&b), ix(&c), ix(&d), ix(&e));
    let one = g.identity();
    let minus = cg.index_of(&spec.phase(2)).expect("-I lies in the group");
    r.expect("|<A,B,C,D,E>|", 64, g.order());
    for (name, x) in [("A", ia), ("B", ib), ("C", ic), ("D", id), ("E", ie)] {
        r.expect(&format!("{name}^2 = I"), one, g.pow(x, 2));
    }
    let abc = g.mul(g.mul(ia, ib), ic);
    r.assert("ABC is central", g.center().contains(abc));
    for (name, x, y) in [("[A,B]", ia, ib), ("[D,E]", id, ie), ("[B,C]", ib, ic), ("[C,A]", ic, ia)] {
        r.expect(&format!("{name} = -I"), g.label(minus), g.label(g.commutator(x, y)));
    }
    for (name, x, y) in [("[C,E]", ic, ie), ("[B,E]", ib, ie), ("[A,D]", ia, id), ("[A,E]", ia, ie), ("[C,D]", ic, id)] {
        r.expect(&format!("{name} = I"), g.label(one), g.label(g.commutator(x, y)));
    }
    r.expect("|Z(G)|", 4, g.center().order());
    let (z, _) = g.subgroup_as_group(g.center(), "Z")?;
    r.expect("Z(G) is cyclic", 4, z.exponent());
    Ok(r.conclude(Status::RefutedAtDeskScale).with_witness(serde_json::json!({
        "A": a.to_string(), "B": b.to_string(), "C": c.to_string(), "D": d.to_string(), "E": e.to_string(),
        "ABC": g.label(abc),
    })))
}
