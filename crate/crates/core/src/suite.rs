//! The claim registry: every checked statement, runnable by id or all at once.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Carrier, CyclotomicMatrix, GaloisField, ResidueRing};
use crate::census::{bounds_check, dihedral_lattice_check};
use crate::error::{Error, Result};
use crate::group::{isomorphism, subgroups_all, FiniteGroup, Limits, Subgroup};
use crate::heisenberg::{heis_semidirect_report, Cocycle, HeisenbergSpec};
use crate::lifted::corollary52_53_check;
use crate::pauli::{lemma31_presentation_check, p22_relations_check, PauliSpec};
use crate::products::{
    classify_special, corollary43_check, decompose_pauli_chain, extraspecial_decompose, identify, reference_group,
    ReferenceGroup, SubgroupSummary,
};
use crate::verdict::{Check, Status, VerdictReport};

/// Claim ids accepted by [`run_claim`], in suite order.
pub const CLAIMS: &[&str] = &[
    "lemma3.1",
    "remark3.2",
    "remark3.9",
    "eq6",
    "eq13-14",
    "thm4.1",
    "thm4.1-subgroups",
    "thm4.2",
    "cor4.3",
    "cor4.4",
    "cor5.2",
    "cor5.3",
    "cor5.4",
    "cor5.6",
    "eq19",
];

/// Groups of at least this order use the pair search for minimality.
pub const MINIMAL_PAIR_SEARCH_FROM: usize = 243;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub limits: Limits,
    /// Exact census counts beyond two registers.
    pub exhaustive: bool,
    pub timings: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { limits: Limits::default(), exhaustive: false, timings: true }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub scope: String,
    pub claims: Vec<VerdictReport>,
    /// Claim count per status.
    pub summary: BTreeMap<String, usize>,
}

/// Runs `scope`, which is `all` or one id from [`CLAIMS`].
pub fn run(scope: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    let ids: Vec<&str> = if scope == "all" { CLAIMS.to_vec() } else { vec![scope] };
    let claims = ids.into_iter().map(|id| run_claim(id, opts)).collect::<Result<Vec<_>>>()?;
    let mut summary = BTreeMap::new();
    for c in &claims {
        *summary.entry(c.status.as_str().to_string()).or_insert(0) += 1;
    }
    Ok(SuiteReport { scope: scope.into(), claims, summary })
}

pub fn run_claim(id: &str, opts: &SuiteOptions) -> Result<VerdictReport> {
    if !CLAIMS.contains(&id) {
        return Err(Error::Parse(format!("unknown claim id {id:?}; expected all or one of {}", CLAIMS.join(", "))));
    }
    let start = Instant::now();
    let mut result = dispatch(id, opts);
    if let (true, Ok(r)) = (opts.timings, &mut result) {
        r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    match result {
        Err(Error::CapExceeded { what, cap }) => {
            let mut r = VerdictReport::new(id, "", "");
            r.note(format!("{what} exceeded the cap of {cap}"));
            r.status = Status::OutOfCap;
            Ok(r)
        }
        other => other,
    }
}

fn dispatch(id: &str, opts: &SuiteOptions) -> Result<VerdictReport> {
    let l = &opts.limits;
    match id {
        "lemma3.1" => lemma31_presentation_check(),
        "remark3.2" => qutrit_matrix_list_check(l),
        "remark3.9" => heisenberg_label_check(l),
        "eq6" => matrix_form_check(l),
        "eq13-14" => p22_relations_check(),
        "thm4.1" => single_register_classification_check(l),
        "thm4.1-subgroups" => p12_nonabelian_subgroups_check(l),
        "thm4.2" => qubit_chain_check(l),
        "cor4.3" => heisenberg_isomorphism_cases(l),
        "cor4.4" => just_nonabelian_check(l),
        "cor5.2" => cases("cor5.2", &[(3, 1, 1), (5, 1, 1), (3, 2, 1)], l),
        "cor5.3" => cases("cor5.3", &[(2, 1, 1), (2, 1, 2)], l),
        "cor5.4" => minimal_nonabelian_check(l),
        "cor5.6" => abelian_bound_cases(opts),
        "eq19" => dihedral_lattice_check(l),
        _ => unreachable!("claim ids are validated by run_claim"),
    }
}

const STATUS_SEVERITY: [Status; 4] =
    [Status::Confirmed, Status::OutOfCap, Status::RefutedAtDeskScale, Status::InconsistentInPaper];

fn severity(s: Status) -> usize {
    STATUS_SEVERITY.iter().position(|&t| t == s).expect("every status is ranked")
}

/// Folds per-case reports into one: check names gain a `[case]` prefix,
/// witnesses are keyed by case, and the most severe status wins.
fn merge(id: &str, parts: Vec<(String, VerdictReport)>) -> VerdictReport {
    let first = &parts[0].1;
    let mut out = VerdictReport::new(id, &first.locator, &first.claim);
    let mut witness = serde_json::Map::new();
    let mut status = Status::Confirmed;
    for (case, r) in parts {
        for mut c in r.checks {
            c.name = format!("[{case}] {}", c.name);
            out.checks.push(c);
        }
        out.notes.extend(r.notes.into_iter().map(|n| format!("[{case}] {n}")));
        witness.insert(case, json!({ "status": r.status, "witness": r.witness }));
        if severity(r.status) > severity(status) {
            status = r.status;
        }
    }
    out.status = status;
    out.witness = Value::Object(witness);
    out
}

fn cases(id: &str, params: &[(u32, u32, usize)], l: &Limits) -> Result<VerdictReport> {
    let parts = params
        .iter()
        .map(|&(p, m, n)| Ok((format!("p={p},m={m},n={n}"), corollary52_53_check(p, m, n, l)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge(id, parts))
}

fn pauli_group(p: u32, m: u32, n: usize, l: &Limits) -> Result<FiniteGroup> {
    Ok(PauliSpec::new(p, m, n)?.group(l)?.group)
}

fn heis(carrier: Carrier, n: usize) -> Result<HeisenbergSpec> {
    HeisenbergSpec::new(carrier, n, Cocycle::Polarized, false)
}

fn is_extraspecial(g: &FiniteGroup) -> bool {
    let z = g.center();
    z == g.derived_subgroup() && g.prime() == Some(z.order() as u64)
}

fn qutrit_matrix_list_check(l: &Limits) -> Result<VerdictReport> {
    let mut r = VerdictReport::new(
        "remark3.2",
        "Remark 3.2",
        "P(1,3) is the set {1,w,w^2} times nine listed 3x3 monomial matrices, and exactly one nonabelian group of order 27 has exponent 3",
    );
    let spec = PauliSpec::new(3, 1, 1)?;
    let cg = spec.group(l)?;
    let images: BTreeSet<Vec<i64>> =
        cg.elements().iter().map(|e| spec.matrix(e).map(|m| m.key())).collect::<Result<_>>()?;
    // Entries are exponents of w = e^(2 pi i / 3); None is zero.
    let (o, z) = (Some(0), None);
    let listed: [[[Option<i64>; 3]; 3]; 9] = [
        [[o, z, z], [z, o, z], [z, z, o]],
        [[o, z, z], [z, Some(1), z], [z, z, Some(2)]],
        [[o, z, z], [z, Some(2), z], [z, z, Some(4)]],
        [[z, o, z], [z, z, o], [o, z, z]],
        [[z, z, o], [o, z, z], [z, o, z]],
        [[z, Some(1), z], [z, z, Some(2)], [o, z, z]],
        [[z, Some(2), z], [z, z, Some(4)], [o, z, z]],
        [[z, z, Some(2)], [o, z, z], [z, Some(1), z]],
        [[z, z, Some(4)], [o, z, z], [z, Some(2), z]],
    ];
    let mut products = BTreeSet::new();
    for rows in &listed {
        let m = CyclotomicMatrix::from_root_powers(3, &rows.map(|row| row.to_vec()));
        for k in 0..3 {
            products.insert(CyclotomicMatrix::scalar_root(3, 3, k).mul(&m)?.key());
        }
    }
    r.expect("|P(1,3)|", 27, cg.group.order());
    r.expect("distinct listed products", 27, products.len());
    r.assert("listed products = matrices of P(1,3)", products == images);
    let e1 = reference_group(ReferenceGroup::E1(3))?;
    let e2 = reference_group(ReferenceGroup::E2(3))?;
    r.expect("exponent of E1(3)", 3, e1.exponent());
    r.expect("exponent of E2(3)", 9, e2.exponent());
    let exponent_three = [&e1, &e2].iter().filter(|g| g.exponent() == 3).count();
    r.expect("nonabelian order-27 types of exponent 3", 1, exponent_three);
    r.expect("exponent of P(1,3)", 3, cg.group.exponent());
    r.assert("P(1,3) ≅ E1(3)", isomorphism(&cg.group, &e1).is_some());
    Ok(r.conclude(Status::RefutedAtDeskScale).with_witness(json!({
        "exponents": { "E1(3)": e1.exponent(), "E2(3)": e2.exponent(), "P(1,3)": cg.group.exponent() },
    })))
}

fn heisenberg_label_check(l: &Limits) -> Result<VerdictReport> {
    let mut r = VerdictReport::new(
        "remark3.9",
        "Remark 3.9",
        "H(Z(p)) ≅ E2 for odd p, H(Z(2)) ≅ D8, H(Z(p^n)) is extraspecial of order p^(3n) with center of order p, H(Z(p)^n) is extraspecial of order p^(2n+1), and P(1,p) has exponent p with P(1,p) ≅ E2 ≅ H(Z(p))",
    );
    let p13 = pauli_group(3, 1, 1, l)?;
    let e1 = reference_group(ReferenceGroup::E1(3))?;
    let e2 = reference_group(ReferenceGroup::E2(3))?;
    let h3 = heis(Carrier::Field(GaloisField::new(3, 1)?), 1)?.group(l)?.group;
    r.expect("exponent of P(1,3)", 3, p13.exponent());
    r.assert("P(1,3) ≅ H(Z(3))", isomorphism(&p13, &h3).is_some());
    r.assert("H(Z(3)) ≅ E2(3)", isomorphism(&h3, &e2).is_some());
    r.info("H(Z(3)) ≅ E1(3)", isomorphism(&h3, &e1).is_some());
    r.info("identified type of P(1,3)", identify(&p13));

    let h2 = heis(Carrier::Field(GaloisField::new(2, 1)?), 1)?.group(l)?.group;
    r.assert("H(Z(2)) ≅ D8", isomorphism(&h2, &reference_group(ReferenceGroup::D8)?).is_some());
    r.assert("H(Z(2)) extraspecial", is_extraspecial(&h2));

    let h9 = heis(Carrier::Residue(ResidueRing::new(9)?), 1)?.group(l)?.group;
    r.expect("|H(Z(9))| = 3^(3*2)", 729, h9.order());
    r.expect("|Z(H(Z(9)))|", 3, h9.center().order());
    r.assert("H(Z(9)) extraspecial", is_extraspecial(&h9));

    let h33 = heis(Carrier::Field(GaloisField::new(3, 1)?), 2)?.group(l)?.group;
    r.expect("|H(Z(3)^2)| = 3^5", 243, h33.order());
    r.expect("|Z(H(Z(3)^2))|", 3, h33.center().order());
    r.assert("H(Z(3)^2) extraspecial", is_extraspecial(&h33));
    r.info("|Z(3)^2 ⋊ Z(3)|", 27);
    r.note("Exponent 3 together with the E2 label is self-contradictory: E2(3) has exponent 9.");
    r.note("A semidirect product Z(p)^n ⋊ Z(p) has order p^(n+1), not p^(2n+1).");

    let label_conflict = p13.exponent() == 3 && e2.exponent() == 9;
    let mut rep = r.conclude(Status::RefutedAtDeskScale);
    if label_conflict && rep.status != Status::Confirmed {
        rep.status = Status::InconsistentInPaper;
    }
    Ok(rep.with_witness(json!({
        "P(1,3)": { "exponent": p13.exponent(), "type": identify(&p13) },
        "H(Z(9))": { "order": h9.order(), "center_order": h9.center().order(), "derived_order": h9.derived_subgroup().order() },
    })))
}

fn matrix_form_check(l: &Limits) -> Result<VerdictReport> {
    let parts = [(3u32, 1u32), (5, 1), (3, 2)]
        .iter()
        .map(|&(p, m)| Ok((format!("GF({})", p.pow(m)), heis_semidirect_report(&HeisenbergSpec::matrix_form(p, m)?, l)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge("eq6", parts))
}

fn single_register_classification_check(l: &Limits) -> Result<VerdictReport> {
    let mut r = VerdictReport::new(
        "thm4.1",
        "Theorem 4.1",
        "P(1,2) is just nonabelian but not minimal nonabelian; P(1,p) for odd p is both",
    );
    let mut witness = serde_json::Map::new();
    for p in [2, 3, 5] {
        let g = pauli_group(p, 1, 1, l)?;
        let f = classify_special(&g, l)?;
        let name = format!("P(1,{p})");
        r.assert(&format!("{name} just nonabelian"), f.just_nonabelian.value);
        r.expect(&format!("{name} minimal nonabelian"), p != 2, f.minimal_nonabelian.value);
        r.info(&format!("{name} minimality mode"), &f.minimal_nonabelian_mode);
        witness.insert(name, serde_json::to_value(&f).expect("flags serialize"));
    }

    Ok(r.conclude(Status::RefutedAtDeskScale).with_witness(Value::Object(witness)))
}

fn p12_nonabelian_subgroups_check(l: &Limits) -> Result<VerdictReport> {
    let mut r = VerdictReport::new(
        "thm4.1-subgroups",
        "Section 4, after Theorem 4.1",
        "P(1,2) has exactly six nonabelian subgroups: three isomorphic to D8 and three to Q8",
    );
    let g = pauli_group(2, 1, 1, l)?;
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    let mut found = Vec::new();
    for h in subgroups_all(&g, l)? {
        if h.order() < g.order() && !g.is_abelian_subgroup(&h) {
            let s = SubgroupSummary::of(&g, &h);
            *tally.entry(s.identified.clone()).or_insert(0) += 1;
            found.push(s);
        }
    }
    r.expect("proper nonabelian subgroups", 6, found.len());
    r.expect("isomorphic to D8", 3, tally.get("D8").copied().unwrap_or(0));
    r.expect("isomorphic to Q8", 3, tally.get("Q8").copied().unwrap_or(0));
    Ok(r.conclude(Status::RefutedAtDeskScale).with_witness(json!({ "subgroups": found })))
}

fn qubit_chain_check(l: &Limits) -> Result<VerdictReport> {
    let mut r = VerdictReport::new(
        "thm4.2",
        "Theorem 4.2",
        "P(n,2) = ((H_1 • H_2) • H_3) ... with normal H_j ≅ P(1,2) and abelian normal links; for n = 2 the link is [H_1,H_2] = <U> with [X_1,X_2] = [Z_1,Z_2] = U^2",
    );
    let mut witness = serde_json::Map::new();
    for n in [2, 3] {
        let d = decompose_pauli_chain(n, l)?;
        for c in &d.checks {
            r.checks.push(Check { name: format!("[n={n}] {}", c.name), ..c.clone() });
        }
        r.assert(&format!("[n={n}] weak central at every step"), d.weak_central);
        for link in &d.links {
            let j = link.step;
            r.expect(&format!("[n={n}] |L{j}|"), 4, link.link.order);
            r.info(&format!("[n={n}] L{j} type"), &link.link.identified);
            r.info(&format!("[n={n}] |[P{j}, H{}]|", j + 1), link.commutator.order);
        }
        witness.insert(format!("n={n}"), serde_json::to_value(&d).expect("report serializes"));
    }

    // The two-register equalities stated in the construction.
    let spec = PauliSpec::qubits(2)?;
    let cg = spec.group(l)?;
    let g = &cg.group;
    let at = |e| cg.index_of(&e).expect("element lies in the group");
    let u = at(spec.phase(1));
    let u2 = g.mul(u, u);
    let h1 = g.generate(&[u, at(spec.x(0, 1)), at(spec.z(0, 1))]);
    let h2 = g.generate(&[u, at(spec.x(1, 1)), at(spec.z(1, 1))]);
    let comm = g.commutator_subgroup(&h1, &h2);
    let u_sub = g.generate(&[u]);
    r.expect("[n=2] [H1,H2] = <U>", u_sub.members().to_vec(), comm.members().to_vec());
    r.expect("[n=2] H1 ∩ H2 = <U>", u_sub.members().to_vec(), g.intersection(&h1, &h2).members().to_vec());
    let x12 = g.commutator(at(spec.x(0, 1)), at(spec.x(1, 1)));
    let z12 = g.commutator(at(spec.z(0, 1)), at(spec.z(1, 1)));
    r.expect("[n=2] [X1,X2] = U^2", g.label(u2).to_string(), g.label(x12).to_string());
    r.expect("[n=2] [Z1,Z2] = U^2", g.label(u2).to_string(), g.label(z12).to_string());
    let whole = g.whole();
    let gp = g.commutator_subgroup(&whole, &h1);
    r.info("[n=2] |[P(2,2), H1]|", gp.order());
    r.note("Registers act on disjoint tensor factors, so [H1,H2] is trivial; the link <U> is the intersection.");
    Ok(r.conclude(Status::RefutedAtDeskScale).with_witness(Value::Object(witness)))
}

fn heisenberg_isomorphism_cases(l: &Limits) -> Result<VerdictReport> {
    let parts = [(3, 1, 1), (3, 1, 2), (3, 2, 1)]
        .iter()
        .map(|&(p, m, n)| Ok((format!("p={p},m={m},n={n}"), corollary43_check(p, m, n, l)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut r = merge("cor4.3", parts);
    let p23 = pauli_group(3, 1, 2, l)?;
    let d = extraspecial_decompose(&p23, l)?;
    let types: Vec<String> = d.factors.iter().map(|f| f.identified.clone()).collect();
    r.info("central factors of P(2,3)", &types);
    if let Value::Object(w) = &mut r.witness {
        w.insert("P(2,3) central decomposition".into(), serde_json::to_value(&d).expect("report serializes"));
    }
    Ok(r)
}

fn just_nonabelian_check(l: &Limits) -> Result<VerdictReport> {
    let mut r = VerdictReport::new(
        "cor4.4",
        "Corollary 4.4",
        "P(n,2) is just nonabelian if and only if n = 1; P(n,p) for odd p is just nonabelian for every n",
    );
    // Only the just-nonabelian flag is used here, so skip the lattice.
    let pairs = Limits { subgroups: 0, ..*l };
    let mut witness = serde_json::Map::new();
    for (p, n) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)] {
        let g = pauli_group(p, 1, n, l)?;
        let f = classify_special(&g, &pairs)?;
        let name = format!("P({n},{p})");
        r.expect(&format!("{name} just nonabelian"), p != 2 || n == 1, f.just_nonabelian.value);
        r.info(&format!("{name} generalized extraspecial"), f.generalized_extraspecial.value);
        witness.insert(name, json!({ "just_nonabelian": f.just_nonabelian, "generalized_extraspecial": f.generalized_extraspecial }));
    }
    // The proposed obstruction: the first chain factor as a normal subgroup.
    let spec = PauliSpec::qubits(2)?;
    let cg = spec.group(l)?;
    let g = &cg.group;
    let at = |e| cg.index_of(&e).expect("element lies in the group");
    let h1 = g.generate(&[at(spec.phase(1)), at(spec.x(0, 1)), at(spec.z(0, 1))]);
    let q = g.quotient(&h1, "P(2,2)/H1")?;
    r.info("P(2,2)/H1 order", q.group.order());
    r.info("P(2,2)/H1 abelian", q.group.is_abelian());
    r.note("Every nontrivial normal subgroup of P(n,2) meets the cyclic center, so it contains -I, which generates the derived subgroup.");
    witness.insert("P(2,2)/H1".into(), json!({ "order": q.group.order(), "abelian": q.group.is_abelian() }));
    Ok(r.conclude(Status::RefutedAtDeskScale).with_witness(Value::Object(witness)))
}

/// `A = <phases, X>`, `B = <phases, Z>` and `H = <X_k^b Z_k^b>` over the
/// additive basis `b` of the field.
fn lifted_structure_checks(r: &mut VerdictReport, name: &str, spec: &PauliSpec, l: &Limits) -> Result<Value> {
    let cg = spec.group(l)?;
    let g = &cg.group;
    let at = |e| cg.index_of(&e).expect("element lies in the group");
    let basis: Vec<u32> = (0..spec.m()).map(|i| spec.p().pow(i)).collect();
    let w = at(spec.phase(1));
    let mut xs = vec![w];
    let mut zs = vec![w];
    let mut hs = Vec::new();
    for k in 0..spec.n() {
        for &b in &basis {
            xs.push(at(spec.x(k, b)));
            zs.push(at(spec.z(k, b)));
            hs.push(at(spec.mul(&spec.x(k, b), &spec.z(k, b))?));
        }
    }
    let (a, b, h) = (g.generate(&xs), g.generate(&zs), g.generate(&hs));
    let z = g.center();
    let qn = (spec.q() as usize).pow(spec.n() as u32);
    for (s_name, s) in [("A", &a), ("B", &b)] {
        r.assert(&format!("{name}: {s_name} abelian"), g.is_abelian_subgroup(s));
        r.assert(&format!("{name}: {s_name} normal"), g.is_normal(s)?);
        r.assert(&format!("{name}: {s_name} maximal abelian"), &g.centralizer(s) == s);
        r.assert(&format!("{name}: {s_name} ∩ H = 1"), g.intersection(s, &h).is_trivial());
        r.expect(&format!("{name}: |{s_name} H|"), g.order(), g.product_set(s, &h).len());
    }
    r.assert(&format!("{name}: A ≠ B"), a != b);
    r.expect(&format!("{name}: |H|"), qn, h.order());
    r.assert(&format!("{name}: H abelian"), g.is_abelian_subgroup(&h));
    r.assert(&format!("{name}: H not normal"), !g.is_normal(&h)?);
    r.expect(&format!("{name}: A ∩ B = Z"), z.members().to_vec(), g.intersection(&a, &b).members().to_vec());
    r.expect(&format!("{name}: [A,B] = Z"), z.members().to_vec(), g.commutator_subgroup(&a, &b).members().to_vec());
    let (ag, _) = g.subgroup_as_group(&a, "A")?;
    let (bg, _) = g.subgroup_as_group(&b, "B")?;
    r.assert(&format!("{name}: A ≅ B"), isomorphism(&ag, &bg).is_some());
    let labels = |s: &Subgroup| g.small_generating_set(s).iter().map(|&x| g.label(x).to_string()).collect::<Vec<_>>();
    Ok(json!({ "A": labels(&a), "B": labels(&b), "H": labels(&h), "order_A": a.order(), "order_H": h.order() }))
}

fn minimal_nonabelian_check(l: &Limits) -> Result<VerdictReport> {
    let mut r = VerdictReport::new(
        "cor5.4",
        "Corollary 5.4",
        "for odd p, P(n,p^m) is minimal nonabelian and equals A ⋊ H = B ⋊ H with A, B maximal abelian normal, H abelian nonnormal, [A,B] = A ∩ B = Z and A ≅ B",
    );
    let mut witness = serde_json::Map::new();
    for (p, m, n) in [(3, 1, 1), (5, 1, 1), (3, 2, 1), (3, 1, 2)] {
        let spec = PauliSpec::new(p, m, n)?;
        let g = spec.group(l)?.group;
        let name = format!("P({n},{})", spec.q());
        let mode_limits =
            if g.order() >= MINIMAL_PAIR_SEARCH_FROM { Limits { subgroups: 0, ..*l } } else { *l };
        let f = classify_special(&g, &mode_limits)?;
        r.assert(&format!("{name}: minimal nonabelian"), f.minimal_nonabelian.value);
        r.info(&format!("{name}: minimality mode"), &f.minimal_nonabelian_mode);
        let structure = lifted_structure_checks(&mut r, &name, &spec, l)?;
        witness.insert(
            name,
            json!({ "minimal_nonabelian": f.minimal_nonabelian, "mode": f.minimal_nonabelian_mode, "structure": structure }),
        );
    }
    Ok(r.conclude(Status::RefutedAtDeskScale).with_witness(Value::Object(witness)))
}

fn abelian_bound_cases(opts: &SuiteOptions) -> Result<VerdictReport> {
    let parts = (1..=3)
        .map(|n| Ok((format!("n={n}"), bounds_check(n, opts.exhaustive, &opts.limits)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge("cor5.6", parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteOptions {
        SuiteOptions { timings: false, ..SuiteOptions::default() }
    }

    #[test]
    fn unknown_claim_is_a_parse_error() {
        assert!(matches!(run_claim("thm9.9", &quick()), Err(Error::Parse(_))));
    }

    #[test]
    fn merge_takes_the_most_severe_status() {
        let mut a = VerdictReport::new("x", "L", "c");
        a.expect("k", 1, 1);
        let mut b = a.clone();
        b.status = Status::RefutedAtDeskScale;
        let m = merge("x", vec![("a".into(), a), ("b".into(), b)]);
        assert_eq!(m.status, Status::RefutedAtDeskScale);
        assert_eq!(m.checks[0].name, "[a] k");
        assert_eq!(m.witness["b"]["status"], "refuted_at_desk_scale");
    }

    #[test]
    fn timings_are_optional() {
        let r = run_claim("lemma3.1", &quick()).unwrap();
        assert!(r.wall_time_ms.is_none());
        let r = run_claim("lemma3.1", &SuiteOptions::default()).unwrap();
        assert!(r.wall_time_ms.is_some());
    }
}
