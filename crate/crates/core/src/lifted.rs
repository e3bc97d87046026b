//! Lifted Pauli groups: unitriangular matrices over `GF(q)` in phase-space
//! form `(eta, alpha, beta)`, and the trace epimorphism onto `P(n,q)`.
//!
//! The stored element `(eta, alpha, beta)` is the matrix with top row
//! `(1, beta, eta)` and right column `alpha`. With that orientation the
//! matrix product gives `eta_gh = eta_g + eta_h + beta_g . alpha_h`, the
//! same side as the Pauli cross term.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::algebra::{FieldElement, GaloisField};
use crate::error::{Error, Result};
use crate::group::{group_close, isomorphism, ConcreteGroup, Limits, Subgroup};
use crate::pauli::{PauliElement, PauliSpec};
use crate::products::{decompose_pauli_chain, heisenberg_candidates, identify, SubgroupSummary};
use crate::verdict::{Status, VerdictReport};

/// Largest lifted group the first-isomorphism check accepts.
pub const LIFTED_CHECK_MAX_ORDER: usize = 1024;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LiftedElement {
    pub eta: u32,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl fmt::Display for LiftedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "w^{} X[{}] Z[{}]", self.eta, list(&self.alpha), list(&self.beta))
    }
}

impl fmt::Debug for LiftedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LiftedSpec {
    n: usize,
    field: GaloisField,
}

impl fmt::Debug for LiftedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LiftedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lifted({},{})", self.n, self.field.order())
    }
}

impl LiftedSpec {
    pub fn new(p: u32, m: u32, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("need at least one register".into()));
        }
        Ok(LiftedSpec { n, field: GaloisField::new(p, m)? })
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

    /// `q^(2n+1)`.
    pub fn predicted_order(&self) -> u128 {
        (self.q() as u128).pow(2 * self.n as u32 + 1)
    }

    /// The Pauli group `Π` maps onto.
    pub fn pauli_spec(&self) -> PauliSpec {
        PauliSpec::new(self.p(), self.m(), self.n).expect("lifted parameters are valid Pauli parameters")
    }

    pub fn identity(&self) -> LiftedElement {
        LiftedElement { eta: 0, alpha: vec![0; self.n], beta: vec![0; self.n] }
    }

    pub fn validate(&self, g: &LiftedElement) -> Result<()> {
        let q = self.q();
        if g.alpha.len() != self.n || g.beta.len() != self.n {
            return Err(Error::Mismatch(format!("element {g} has the wrong register count for {self}")));
        }
        if g.eta >= q || g.alpha.iter().chain(&g.beta).any(|&x| x >= q) {
            return Err(Error::Mismatch(format!("element {g} is out of range for {self}")));
        }
        Ok(())
    }

    /// Additive basis of `GF(q)` over `GF(p)` placed in `eta`, each `alpha_k`
    /// and each `beta_k`.
    pub fn generators(&self) -> Vec<LiftedElement> {
        let basis: Vec<u32> = (0..self.m()).map(|i| self.p().pow(i)).collect();
        let mut gens = Vec::new();
        for &b in &basis {
            gens.push(LiftedElement { eta: b, ..self.identity() });
            for k in 0..self.n {
                let mut x = self.identity();
                x.alpha[k] = b;
                gens.push(x);
                let mut z = self.identity();
                z.beta[k] = b;
                gens.push(z);
            }
        }
        gens
    }

    pub fn mul(&self, g: &LiftedElement, h: &LiftedElement) -> Result<LiftedElement> {
        self.validate(g)?;
        self.validate(h)?;
        Ok(self.mul_unchecked(g, h))
    }

    pub(crate) fn mul_unchecked(&self, g: &LiftedElement, h: &LiftedElement) -> LiftedElement {
        let f = &self.field;
        let fe = |v: &[u32]| v.iter().map(|&x| FieldElement(x)).collect::<Vec<_>>();
        let add = |a: &[u32], b: &[u32]| -> Vec<u32> {
            a.iter().zip(b).map(|(&x, &y)| f.add(FieldElement(x), FieldElement(y)).0).collect()
        };
        let cross = f.dot(&fe(&g.beta), &fe(&h.alpha));
        let eta = f.add(f.add(FieldElement(g.eta), FieldElement(h.eta)), cross).0;
        LiftedElement { eta, alpha: add(&g.alpha, &h.alpha), beta: add(&g.beta, &h.beta) }
    }

    pub fn inverse(&self, g: &LiftedElement) -> LiftedElement {
        let f = &self.field;
        let neg = |a: &[u32]| -> Vec<u32> { a.iter().map(|&x| f.neg(FieldElement(x)).0).collect() };
        let fe = |v: &[u32]| v.iter().map(|&x| FieldElement(x)).collect::<Vec<_>>();
        let alpha = neg(&g.alpha);
        // eta + eta' + beta . (-alpha) = 0
        let cross = f.dot(&fe(&g.beta), &fe(&alpha));
        let eta = f.neg(f.add(FieldElement(g.eta), cross)).0;
        LiftedElement { eta, alpha, beta: neg(&g.beta) }
    }

    pub fn group(&self, limits: &Limits) -> Result<ConcreteGroup<LiftedElement>> {
        if self.predicted_order() > limits.closure as u128 {
            return Err(Error::CapExceeded { what: "group closure", cap: limits.closure });
        }
        group_close(self.to_string(), &self.generators(), self.identity(), |a, b| self.mul_unchecked(a, b), limits)
    }

    /// The `(n+2) x (n+2)` unitriangular matrix of `g` as field codes.
    pub fn matrix(&self, g: &LiftedElement) -> Result<Vec<Vec<u32>>> {
        self.validate(g)?;
        let d = self.n + 2;
        let mut m = vec![vec![0u32; d]; d];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        m[0][1..=self.n].copy_from_slice(&g.beta);
        m[0][d - 1] = g.eta;
        for k in 0..self.n {
            m[k + 1][d - 1] = g.alpha[k];
        }
        Ok(m)
    }

    /// Reads an element back from its unitriangular matrix.
    pub fn from_matrix(&self, m: &[Vec<u32>]) -> Result<LiftedElement> {
        let d = self.n + 2;
        let unitriangular = m.len() == d
            && m.iter().enumerate().all(|(i, row)| {
                row.len() == d
                    && row.iter().enumerate().all(|(j, &x)| {
                        if i == j {
                            x == 1
                        } else {
                            // free entries: the top row and the last column, above the diagonal
                            (i < j && (i == 0 || j == d - 1)) || x == 0
                        }
                    })
            });
        if !unitriangular {
            return Err(Error::Mismatch(format!("not a lifted matrix for {self}")));
        }
        let g = LiftedElement {
            eta: m[0][d - 1],
            alpha: (0..self.n).map(|k| m[k + 1][d - 1]).collect(),
            beta: m[0][1..=self.n].to_vec(),
        };
        self.validate(&g)?;
        Ok(g)
    }
}

/// `Π(eta, alpha, beta) = (tr eta, alpha, beta)`. For `p = 2` the traced
/// phase is doubled into the order-4 phase group.
pub fn pi_map(spec: &LiftedSpec, g: &LiftedElement) -> PauliElement {
    let t = spec.field.trace(FieldElement(g.eta));
    let phase = if spec.p() == 2 { 2 * t } else { t };
    PauliElement { phase, alpha: g.alpha.clone(), beta: g.beta.clone() }
}

/// `ker Π` inside a materialized lifted group.
pub fn kernel(spec: &LiftedSpec, cg: &ConcreteGroup<LiftedElement>) -> Subgroup {
    let members: Vec<u32> = cg
        .group
        .elements()
        .filter(|&i| pi_map(spec, cg.element(i)).is_identity())
        .collect();
    cg.group.subgroup(&members).expect("a kernel is a subgroup")
}

/// Builds the lifted group, its kernel under `Π`, and checks the first
/// isomorphism theorem against `P(n,q)`. Odd `p` then compares the quotient
/// with the Heisenberg candidates; `p = 2` compares it with the chain of
/// single-qubit factors.
pub fn corollary52_53_check(p: u32, m: u32, n: usize, limits: &Limits) -> Result<VerdictReport> {
    let spec = LiftedSpec::new(p, m, n)?;
    if spec.predicted_order() > LIFTED_CHECK_MAX_ORDER as u128 {
        return Err(Error::CapExceeded { what: "lifted group order", cap: LIFTED_CHECK_MAX_ORDER });
    }
    let mut r = if p == 2 {
        VerdictReport::new(
            "cor5.3",
            "Corollary 5.3",
            "the lifted group for p = 2 is, up to a quotient, the weak central product of n copies of P(1,2)",
        )
    } else {
        VerdictReport::new(
            "cor5.2",
            "Corollary 5.2",
            "for odd p the lifted group is, up to a quotient, isomorphic to the Heisenberg group over Z(p^m)^n",
        )
    };
    let cg = spec.group(limits)?;
    let g = &cg.group;
    let pspec = spec.pauli_spec();
    let pcg = pspec.group(limits)?;
    let pg = &pcg.group;

    r.expect("|lifted|", spec.predicted_order() as usize, g.order());
    let image_of: Vec<u32> = g
        .elements()
        .map(|i| pcg.index_of(&pi_map(&spec, cg.element(i))).expect("Π lands in the Pauli group"))
        .collect();
    let homomorphism = g.elements().all(|a| {
        g.elements().all(|b| image_of[g.mul(a, b) as usize] == pg.mul(image_of[a as usize], image_of[b as usize]))
    });
    r.assert("Π is a homomorphism on all pairs", homomorphism);

    let ker = kernel(&spec, &cg);
    r.expect("|ker Π|", p.pow(m - 1) as usize, ker.order());
    r.assert("ker Π is central", ker.is_subgroup_of(g.center()));
    let mut image: Vec<u32> = image_of.clone();
    image.sort_unstable();
    image.dedup();
    let image = pg.subgroup(&image)?;
    r.expect("|image| * |ker| = |lifted|", g.order(), image.order() * ker.order());
    r.expect("Π is onto P(n,q)", pg.order(), image.order());

    let quotient = g.quotient(&ker, format!("{}/ker", g.name()))?;
    let (image_group, _) = pg.subgroup_as_group(&image, "image")?;
    r.assert("lifted/ker ≅ image (first isomorphism theorem)", isomorphism(&quotient.group, &image_group).is_some());
    let onto = isomorphism(&quotient.group, pg);
    r.assert("lifted/ker ≅ P(n,q)", onto.is_some());
    r.info("lifted/ker identified", identify(&quotient.group));

    let mut witness = serde_json::Map::new();
    witness.insert("kernel".into(), json!(ker.members().iter().map(|&i| g.label(i)).collect::<Vec<_>>()));
    witness.insert("quotient_order".into(), json!(quotient.group.order()));
    witness.insert(
        "matrix_orientation".into(),
        json!("(eta, alpha, beta) is the matrix with top row (1, beta, eta) and right column alpha"),
    );

    if p == 2 {
        let chain = decompose_pauli_chain(n, limits)?;
        r.info("P(n,2) chain is weak central", chain.weak_central);
        let z = pg.center();
        let mut factors = Vec::new();
        let mut all_p12 = true;
        for (j, f) in chain.factors.iter().enumerate() {
            let gens: Vec<u32> = f
                .generators
                .iter()
                .map(|s| pcg.index_of(&pspec.parse_element(s).expect("chain labels parse")).expect("in group"))
                .collect();
            let h = pg.generate(&gens);
            let part = pg.intersection(&h, &image);
            let summary = SubgroupSummary::of(pg, &part);
            all_p12 &= summary.identified == "P(1,2)";
            r.info(&format!("image ∩ H{}", j + 1), &summary.identified);
            factors.push(summary);
        }
        r.assert("image ∩ H_j ≅ P(1,2) for every j", all_p12);
        r.assert("lifted/ker is the chain of n copies of P(1,2)", onto.is_some() && chain.weak_central && all_p12);
        r.info("image ∩ Z(P) order", pg.intersection(&image, z).order());
        r.note(format!(
            "The doubled trace only reaches even phases, so the image has index {} in P(n,2).",
            pg.order() / image.order()
        ));
        witness.insert("image_factors".into(), json!(factors));
    } else {
        let mut matched = Vec::new();
        for (name, h) in heisenberg_candidates(p, m, n)? {
            if h.predicted_order() as usize != quotient.group.order() {
                r.info(&format!("{name} {h}: order"), h.predicted_order().to_string());
                continue;
            }
            let hg = h.group(limits)?;
            if isomorphism(&quotient.group, &hg.group).is_some() {
                matched.push(format!("{name} {h}"));
            }
        }
        r.assert("lifted/ker matches a Heisenberg candidate", !matched.is_empty());
        r.info("matching Heisenberg candidates", &matched);
        if let Some(iso) = &onto {
            let images: Vec<(String, String)> = iso
                .generator_images
                .iter()
                .map(|&(x, y)| (quotient.group.label(x).to_string(), pg.label(y).to_string()))
                .collect();
            witness.insert("quotient_to_pauli".into(), json!(images));
        }
    }
    Ok(r.conclude(Status::RefutedAtDeskScale).with_witness(serde_json::Value::Object(witness)))
}
