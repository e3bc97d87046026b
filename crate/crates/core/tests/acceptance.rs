//! One test per acceptance criterion. Each prints a `PASS`/`FAIL` line
//! straight to stdout, so the lines show even under output capture.

use std::io::Write;
use std::time::{Duration, Instant};

use paulidecomp::algebra::{sigma_tau, Carrier, CyclotomicMatrix, FieldElement, GaloisField};
use paulidecomp::census::{abelian_census, bounds_check, dihedral_group, hasse, LatticeFilter};
use paulidecomp::group::{abelian_invariants, frattini, isomorphism, subgroups_all, Limits};
use paulidecomp::heisenberg::{Cocycle, HeisenbergElement, HeisenbergSpec};
use paulidecomp::lifted::{corollary52_53_check, pi_map, LiftedSpec};
use paulidecomp::pauli::{lemma31_presentation_check, p22_relations_check, PauliSpec};
use paulidecomp::products::{corollary43_check, decompose_pauli_chain, reference_group, ReferenceGroup};
use paulidecomp::suite::{run_claim, SuiteOptions};
use paulidecomp::verdict::{Status, VerdictReport};

type Outcome = Result<(), String>;

fn criterion(label: &str, title: &str, budget: Duration, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let outcome = outcome.and_then(|()| {
        if elapsed <= budget {
            Ok(())
        } else {
            Err(format!("took {elapsed:?}, budget {budget:?}"))
        }
    });
    let line = match &outcome {
        Ok(()) => format!("PASS [{label}] {title} ({} ms)\n", elapsed.as_millis()),
        Err(why) => format!("FAIL [{label}] {title} ({} ms): {why}\n", elapsed.as_millis()),
    };
    std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
    if let Err(why) = outcome {
        panic!("[{label}] {title}: {why}");
    }
}

fn ensure(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, expected: T, observed: T) -> Outcome {
    ensure(expected == observed, format!("{what}: expected {expected:?}, observed {observed:?}"))
}

fn all_hold(r: &VerdictReport) -> Outcome {
    let failed: Vec<String> = r.failed().iter().map(|c| format!("{} (observed {})", c.name, c.observed)).collect();
    ensure(failed.is_empty(), format!("{}: {}", r.claim_id, failed.join("; ")))
}

fn check_holds(r: &VerdictReport, name: &str) -> Outcome {
    let c = r.checks.iter().find(|c| c.name == name).ok_or(format!("{}: no check named {name:?}", r.claim_id))?;
    ensure(c.holds == Some(true), format!("{name}: expected {}, observed {}", c.expected, c.observed))
}

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn single_qubit_structure_and_presentations() {
    criterion("1", "single-qubit Pauli group: order, center, exponent, Frattini, presentations", Duration::from_secs(1), || {
        let r = lemma31_presentation_check().map_err(|e| e.to_string())?;
        all_hold(&r)?;
        eq("status", Status::Confirmed, r.status)?;
        let g = PauliSpec::qubits(1).unwrap().group(&limits()).unwrap().group;
        eq("|G|", 16, g.order())?;
        let (z, _) = g.subgroup_as_group(g.center(), "Z").unwrap();
        eq("Z(G) invariants", vec![4], abelian_invariants(&z))?;
        eq("exponent", 4, g.exponent())?;
        ensure(!g.element_orders().contains(&8), "an element of order 8 exists")?;
        let phi = frattini(&g, &limits()).unwrap();
        eq("Φ = [G,G]", g.derived_subgroup(), &phi.subgroup)?;
        eq("|Φ|", 2, phi.subgroup.order())?;
        let q = g.quotient(g.center(), "G/Z").unwrap();
        eq("G/Z invariants", vec![2, 2], abelian_invariants(&q.group))
    });
}

#[test]
fn two_qubit_commutator_table() {
    criterion("2", "two-qubit Pauli group: order 64, cyclic center of order 4, nine commutator relations", Duration::from_secs(1), || {
        let r = p22_relations_check().map_err(|e| e.to_string())?;
        all_hold(&r)?;
        eq("status", Status::Confirmed, r.status)?;
        let relations = r.checks.iter().filter(|c| c.name.starts_with('[')).count();
        eq("commutator relations checked", 9, relations)?;
        let g = PauliSpec::qubits(2).unwrap().group(&limits()).unwrap().group;
        eq("|G|", 64, g.order())?;
        let (z, _) = g.subgroup_as_group(g.center(), "Z").unwrap();
        eq("Z(G) invariants", vec![4], abelian_invariants(&z))
    });
}

#[test]
fn qubit_chain_structure() {
    criterion("3a", "qubit chain: factors ≅ P(1,2), G = H1 H2, link ≅ Z4 central; three registers with |L2| = 4", Duration::from_secs(30), || {
        let d = decompose_pauli_chain(2, &limits()).map_err(|e| e.to_string())?;
        for c in &d.checks {
            ensure(c.holds != Some(false), format!("n=2 {}: observed {}", c.name, c.observed))?;
        }
        ensure(d.weak_central, "n=2 chain is not weak central")?;
        eq("n=2 factor types", vec!["P(1,2)", "P(1,2)"], d.factors.iter().map(|f| f.identified.as_str()).collect())?;
        let l1 = &d.links[0];
        eq("n=2 |H1 H2|", 64, l1.product_order)?;
        eq("n=2 L1 type", "Z4", l1.link.identified.as_str())?;
        ensure(l1.link_in_center, "L1 not central")?;
        eq("|Z(P(2,2))|", 4, d.center_order)?;
        let d3 = decompose_pauli_chain(3, &limits()).map_err(|e| e.to_string())?;
        ensure(d3.weak_central, "n=3 chain is not weak central")?;
        let l2 = &d3.links[1];
        eq("n=3 |L2|", 4, l2.link.order)?;
        ensure(l2.link_in_center, "L2 not central")?;
        eq("n=3 product order", 256, l2.product_order)
    });
}

#[test]
fn qubit_chain_link_is_the_factor_commutator() {
    criterion("3b", "qubit chain: L1 = [H1,H2] = <U>", Duration::from_secs(30), || {
        let spec = PauliSpec::qubits(2).unwrap();
        let cg = spec.group(&limits()).unwrap();
        let g = &cg.group;
        let at = |e| cg.index_of(&e).unwrap();
        let u = at(spec.phase(1));
        let h1 = g.generate(&[u, at(spec.x(0, 1)), at(spec.z(0, 1))]);
        let h2 = g.generate(&[u, at(spec.x(1, 1)), at(spec.z(1, 1))]);
        let u_sub = g.generate(&[u]);
        eq("H1 ∩ H2 = <U>", &u_sub, &g.intersection(&h1, &h2))?;
        eq("|[H1,H2]|", u_sub.order(), g.commutator_subgroup(&h1, &h2).order())
    });
}

#[test]
fn odd_qudit_heisenberg_isomorphisms() {
    criterion("4", "P(1,3) ≅ H(GF(3)) and P(2,3) ≅ reduced H(GF(3)^2) with witness maps", Duration::from_secs(60), || {
        for n in [1, 2] {
            let r = corollary43_check(3, 1, n, &limits()).map_err(|e| e.to_string())?;
            all_hold(&r)?;
            eq("status", Status::Confirmed, r.status)?;
            let images = &r.witness["reduced"]["generator_images"];
            ensure(images.as_array().is_some_and(|a| !a.is_empty()), format!("n={n}: no witness map for the reduced candidate"))?;
        }
        Ok(())
    });
}

#[test]
fn lifted_quotient_at_q9() {
    criterion("5a", "lifted group at (3,2,1): order 729, |ker Π| = 3, quotient ≅ P(1,9) of order 243", Duration::from_secs(60), || {
        let r = corollary52_53_check(3, 2, 1, &limits()).map_err(|e| e.to_string())?;
        all_hold(&r)?;
        eq("status", Status::Confirmed, r.status)?;
        for name in ["|lifted|", "|ker Π|", "Π is onto P(n,q)", "lifted/ker ≅ P(n,q)"] {
            check_holds(&r, name)?;
        }
        eq("|lifted|", serde_json::json!(729), r.checks.iter().find(|c| c.name == "|lifted|").unwrap().observed.clone())?;
        eq("|ker|", serde_json::json!(3), r.checks.iter().find(|c| c.name == "|ker Π|").unwrap().observed.clone())?;
        eq("quotient order", serde_json::json!(243), r.witness["quotient_order"].clone())
    });
}

#[test]
fn lifted_quotient_for_two_qubits() {
    criterion("5b", "lifted group at (2,1,2): quotient is the chain of two copies of P(1,2)", Duration::from_secs(60), || {
        let r = corollary52_53_check(2, 1, 2, &limits()).map_err(|e| e.to_string())?;
        check_holds(&r, "Π is a homomorphism on all pairs")?;
        check_holds(&r, "ker Π is central")?;
        check_holds(&r, "lifted/ker is the chain of n copies of P(1,2)")
    });
}

#[test]
fn census_of_small_groups() {
    criterion("6", "c_ab(D8) = 8, |L(D8)| = 10 = σ(4)+τ(4), c_ab(P(1,2)) = 17 = 1+6+4+3+3", Duration::from_secs(5), || {
        let l = limits();
        let d8 = reference_group(ReferenceGroup::D8).unwrap();
        eq("c_ab(D8)", 8, abelian_census(&d8, &l).unwrap().c_ab)?;
        let (s, t) = sigma_tau(4);
        let lattice = subgroups_all(&d8, &l).unwrap().len();
        eq("|L(D8)|", 10, lattice)?;
        eq("σ(4)+τ(4)", 10, (s + t) as usize)?;
        eq("|L(dihedral(4))|", lattice, subgroups_all(&dihedral_group(4).unwrap(), &l).unwrap().len())?;
        eq("Hasse nodes", 10, hasse(&d8, LatticeFilter::All, &l).unwrap().nodes.len())?;
        let p12 = PauliSpec::qubits(1).unwrap().group(&l).unwrap().group;
        let c = abelian_census(&p12, &l).unwrap();
        eq("c_ab(P(1,2))", 17, c.c_ab)?;
        eq("breakdown", vec![1, 6, 4, 3, 3], c.breakdown_counts())
    });
}

#[test]
fn abelian_subgroup_bounds() {
    criterion("7", "lower bound 10n constructive for n = 1,2,3; exact c_ab(P(2,2)) with both inequalities adjudicated", Duration::from_secs(300), || {
        let l = limits();
        for n in 1..=3 {
            let r = bounds_check(n, false, &l).map_err(|e| e.to_string())?;
            eq(&format!("n={n} lower bound status"), "confirmed", r.witness["lower_bound_status"].as_str().unwrap_or(""))?;
            ensure(r.witness["constructive_count"].as_u64().unwrap_or(0) >= 10 * n as u64, format!("n={n}: constructive count below 10n"))?;
        }
        let r = bounds_check(2, false, &l).map_err(|e| e.to_string())?;
        let exact = r.witness["exact_count"].as_u64().ok_or("no exact count for n=2")?;
        let brute = PauliSpec::qubits(2).unwrap().group(&l).unwrap().group;
        eq("exact count = brute-force count", abelian_census(&brute, &l).unwrap().c_ab as u64, exact)?;
        let upper = r.witness["upper_bound_status"].as_str().unwrap_or("");
        ensure(upper == "confirmed" || upper == "refuted_at_desk_scale", format!("upper bound not adjudicated: {upper:?}"))
    });
}

#[test]
fn property_suites() {
    criterion("8", "field axioms, trace kernels, cocycle identity, matrix oracle, Π homomorphism", Duration::from_secs(120), || {
        for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4), (17, 1), (19, 1), (23, 1), (5, 2)] {
            let f = GaloisField::new(p, m).unwrap();
            let els: Vec<FieldElement> = f.elements().collect();
            for &a in &els {
                if !a.is_zero() {
                    ensure(f.mul(a, f.inv(a).unwrap()) == f.one(), format!("GF({p}^{m}) inverse"))?;
                }
                for &b in &els {
                    for &c in &els {
                        ensure(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)), format!("GF({p}^{m}) associativity"))?;
                        ensure(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)), format!("GF({p}^{m}) distributivity"))?;
                        ensure(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)), format!("GF({p}^{m}) additive associativity"))?;
                    }
                }
            }
        }
        for (p, m) in [(2, 2), (3, 2)] {
            let f = GaloisField::new(p, m).unwrap();
            eq(&format!("trace kernel in GF({p}^{m})"), p.pow(m - 1) as usize, f.elements().filter(|&a| f.trace(a) == 0).count())?;
        }
        for spec in [
            HeisenbergSpec::matrix_form(3, 1).unwrap(),
            HeisenbergSpec::new(Carrier::Field(GaloisField::new(5, 1).unwrap()), 1, Cocycle::Symplectic, false).unwrap(),
            HeisenbergSpec::new(Carrier::Field(GaloisField::new(3, 2).unwrap()), 1, Cocycle::Polarized, true).unwrap(),
        ] {
            let r = spec.carrier().size();
            let c = |x: (u32, u32), y: (u32, u32)| {
                let g = HeisenbergElement { a: vec![x.0], b: vec![x.1], t: 0 };
                let h = HeisenbergElement { a: vec![y.0], b: vec![y.1], t: 0 };
                spec.mul(&g, &h).unwrap().t
            };
            let add = |x: (u32, u32), y: (u32, u32)| (spec.carrier().add(x.0, y.0), spec.carrier().add(x.1, y.1));
            let z = spec.center_carrier();
            let pts: Vec<(u32, u32)> = (0..r).flat_map(|a| (0..r).map(move |b| (a, b))).collect();
            for &x in &pts {
                for &y in &pts {
                    for &w in &pts {
                        let lhs = z.add(c(x, y), c(add(x, y), w));
                        let rhs = z.add(c(y, w), c(x, add(y, w)));
                        ensure(lhs == rhs, format!("cocycle identity fails for {spec:?}"))?;
                    }
                }
            }
        }
        for p in [2, 3] {
            let spec = PauliSpec::new(p, 1, 1).unwrap();
            let cg = spec.group(&limits()).unwrap();
            let mats: Vec<CyclotomicMatrix> = cg.elements().iter().map(|e| spec.matrix(e).unwrap()).collect();
            for (i, g) in cg.elements().iter().enumerate() {
                for (j, h) in cg.elements().iter().enumerate() {
                    let lhs = spec.matrix(&spec.mul(g, h).unwrap()).unwrap();
                    ensure(lhs == mats[i].mul(&mats[j]).unwrap(), format!("matrix oracle disagrees in P(1,{p})"))?;
                }
            }
        }
        let spec = LiftedSpec::new(3, 2, 1).unwrap();
        let pauli = spec.pauli_spec();
        let cg = spec.group(&limits()).unwrap();
        let images: Vec<_> = cg.elements().iter().map(|g| pi_map(&spec, g)).collect();
        for (i, g) in cg.elements().iter().enumerate() {
            for (j, h) in cg.elements().iter().enumerate() {
                let lhs = pi_map(&spec, &spec.mul(g, h).unwrap());
                ensure(lhs == pauli.mul(&images[i], &images[j]).unwrap(), "Π is not a homomorphism at q = 9")?;
            }
        }
        Ok(())
    });
}

#[test]
fn inconsistency_reports() {
    criterion("9", "reports with status and witness: E1/E2 label of P(1,3), minimality of P(2,3), the c_ab upper bound", Duration::from_secs(600), || {
        let opts = SuiteOptions { timings: false, ..SuiteOptions::default() };
        let labels = run_claim("remark3.9", &opts).map_err(|e| e.to_string())?;
        eq("label report status", Status::InconsistentInPaper, labels.status)?;
        eq("exponent of P(1,3)", serde_json::json!(3), labels.witness["P(1,3)"]["exponent"].clone())?;
        let p13 = PauliSpec::new(3, 1, 1).unwrap().group(&limits()).unwrap().group;
        ensure(isomorphism(&p13, &reference_group(ReferenceGroup::E1(3)).unwrap()).is_some(), "P(1,3) is not E1(3)")?;

        let minimal = run_claim("cor5.4", &opts).map_err(|e| e.to_string())?;
        ensure(minimal.status != Status::OutOfCap, "minimality verdict out of cap")?;
        let evidence = &minimal.witness["P(2,3)"]["minimal_nonabelian"]["evidence"];
        ensure(evidence.is_object(), "no minimality witness for P(2,3)")?;

        let bounds = run_claim("cor5.6", &opts).map_err(|e| e.to_string())?;
        let upper = bounds.witness["n=2"]["witness"]["upper_bound_status"].as_str().unwrap_or("");
        ensure(upper == "confirmed" || upper == "refuted_at_desk_scale", format!("upper bound verdict missing: {upper:?}"))
    });
}
