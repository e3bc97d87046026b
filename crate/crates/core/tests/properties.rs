use std::collections::BTreeSet;

use paulidecomp::algebra::{Carrier, FieldElement, GaloisField, ResidueRing};
use paulidecomp::census::{abelian_census, hasse, LatticeFilter};
use paulidecomp::group::{abelian_subgroups, subgroups_all, FiniteGroup, Limits};
use paulidecomp::heisenberg::{Cocycle, HeisenbergElement, HeisenbergSpec};
use paulidecomp::lifted::{pi_map, LiftedElement, LiftedSpec};
use paulidecomp::pauli::{PauliElement, PauliSpec};
use paulidecomp::spec::GroupSpec;
use proptest::prelude::*;

const SMALL_FIELDS: [(u32, u32); 14] =
    [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4), (17, 1), (19, 1), (23, 1), (5, 2)];

fn limits() -> Limits {
    Limits::default()
}

/// Schoolbook product of coefficient vectors reduced by the monic modulus.
fn poly_mul_oracle(f: &GaloisField, a: FieldElement, b: FieldElement) -> Vec<u32> {
    let p = f.characteristic() as u64;
    let modulus = &f.spec().modulus;
    let m = f.degree() as usize;
    let (ca, cb) = (f.coeffs(a), f.coeffs(b));
    let mut prod = vec![0u64; 2 * m];
    for (i, &x) in ca.iter().enumerate() {
        for (j, &y) in cb.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
        }
    }
    for k in (m..2 * m).rev() {
        let c = prod[k];
        if c != 0 {
            for (i, &mc) in modulus.iter().enumerate() {
                prod[k - m + i] = (prod[k - m + i] + (p - c) * mc as u64) % p;
            }
        }
    }
    prod.truncate(m);
    prod.into_iter().map(|c| c as u32).collect()
}

#[test]
fn field_axioms_exhaustive_up_to_25() {
    for (p, m) in SMALL_FIELDS {
        let f = GaloisField::new(p, m).unwrap();
        let els: Vec<FieldElement> = f.elements().collect();
        assert_eq!(els.len() as u32, p.pow(m));
        for &a in &els {
            assert_eq!(f.add(a, f.zero()), a);
            assert_eq!(f.mul(a, f.one()), a);
            assert_eq!(f.add(a, f.neg(a)), f.zero());
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one(), "GF({p}^{m}) inverse of {a:?}");
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.coeffs(f.mul(a, b)), poly_mul_oracle(&f, a, b), "GF({p}^{m}) {a:?}*{b:?}");
                for &c in &els {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        assert!(f.inv(f.zero()).is_err());
    }
}

#[test]
fn trace_kernel_has_index_p() {
    for (p, m) in [(2, 2), (3, 2), (2, 3), (5, 2), (3, 3)] {
        let f = GaloisField::new(p, m).unwrap();
        let kernel = f.elements().filter(|&a| f.trace(a) == 0).count();
        assert_eq!(kernel as u32, p.pow(m - 1), "GF({p}^{m})");
        for a in f.elements() {
            // independent sum of Frobenius conjugates
            let mut sum = f.zero();
            for i in 0..m {
                sum = f.add(sum, f.pow(a, (p as u64).pow(i)));
            }
            assert_eq!(sum.code(), f.trace(a), "trace of {a:?} in GF({p}^{m})");
            assert!(f.trace(a) < p);
        }
    }
}

/// Center coordinate of `(a,b,0)(a',b',0)`, i.e. the cocycle value.
fn cocycle(spec: &HeisenbergSpec, x: (u32, u32), y: (u32, u32)) -> u32 {
    let g = HeisenbergElement { a: vec![x.0], b: vec![x.1], t: 0 };
    let h = HeisenbergElement { a: vec![y.0], b: vec![y.1], t: 0 };
    spec.mul(&g, &h).unwrap().t
}

#[test]
fn cocycle_identity_exhaustive_single_register() {
    let carriers = || {
        vec![
            Carrier::Field(GaloisField::new(3, 1).unwrap()),
            Carrier::Field(GaloisField::new(2, 2).unwrap()),
            Carrier::Field(GaloisField::new(5, 1).unwrap()),
            Carrier::Field(GaloisField::new(3, 2).unwrap()),
            Carrier::Residue(ResidueRing::new(9).unwrap()),
            Carrier::Residue(ResidueRing::new(4).unwrap()),
        ]
    };
    let mut specs = Vec::new();
    for c in carriers() {
        let odd = c.characteristic() != 2;
        let field = c.is_field();
        specs.push(HeisenbergSpec::new(c.clone(), 1, Cocycle::Polarized, false).unwrap());
        if odd {
            specs.push(HeisenbergSpec::new(c.clone(), 1, Cocycle::Symplectic, false).unwrap());
        }
        if field {
            specs.push(HeisenbergSpec::new(c, 1, Cocycle::Polarized, true).unwrap());
        }
    }
    for spec in &specs {
        let r = spec.carrier().size();
        let pts: Vec<(u32, u32)> = (0..r).flat_map(|a| (0..r).map(move |b| (a, b))).collect();
        let z = spec.center_carrier();
        let add = |x: (u32, u32), y: (u32, u32)| (spec.carrier().add(x.0, y.0), spec.carrier().add(x.1, y.1));
        for &x in &pts {
            for &y in &pts {
                for &w in &pts {
                    let lhs = z.add(cocycle(spec, x, y), cocycle(spec, add(x, y), w));
                    let rhs = z.add(cocycle(spec, y, w), cocycle(spec, x, add(y, w)));
                    assert_eq!(lhs, rhs, "{spec:?} at {x:?} {y:?} {w:?}");
                }
            }
        }
    }
}

#[test]
fn phase_space_matches_matrix_oracle_on_all_pairs() {
    for (p, m, n) in [(2, 1, 1), (3, 1, 1), (2, 1, 2), (2, 2, 1), (3, 2, 1)] {
        let spec = PauliSpec::new(p, m, n).unwrap();
        let cg = spec.group(&limits()).unwrap();
        let mats: Vec<_> = cg.elements().iter().map(|e| spec.matrix(e).unwrap()).collect();
        let keys: BTreeSet<Vec<i64>> = mats.iter().map(|m| m.key()).collect();
        assert_eq!(keys.len(), cg.elements().len(), "matrix representation of {spec} is faithful");
        if cg.elements().len() > 64 {
            continue;
        }
        for (i, g) in cg.elements().iter().enumerate() {
            for (j, h) in cg.elements().iter().enumerate() {
                let gh = spec.mul(g, h).unwrap();
                assert_eq!(spec.matrix(&gh).unwrap(), mats[i].mul(&mats[j]).unwrap(), "{spec}: {g} * {h}");
            }
        }
    }
}

/// Product of upper unitriangular matrices with field-code entries.
fn field_matmul(f: &GaloisField, a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let d = a.len();
    let mut out = vec![vec![0; d]; d];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut acc = f.zero();
            for k in 0..d {
                acc = f.add(acc, f.mul(FieldElement(a[i][k]), FieldElement(b[k][j])));
            }
            *cell = acc.code();
        }
    }
    out
}

#[test]
fn lifted_product_matches_matrices_exhaustively_at_27() {
    let spec = LiftedSpec::new(3, 1, 1).unwrap();
    let cg = spec.group(&limits()).unwrap();
    for g in cg.elements() {
        for h in cg.elements() {
            let lhs = spec.matrix(&spec.mul(g, h).unwrap()).unwrap();
            let rhs = field_matmul(spec.field(), &spec.matrix(g).unwrap(), &spec.matrix(h).unwrap());
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn pi_is_a_homomorphism_exhaustively_at_q9() {
    let spec = LiftedSpec::new(3, 2, 1).unwrap();
    let pauli = spec.pauli_spec();
    let cg = spec.group(&limits()).unwrap();
    assert_eq!(cg.elements().len(), 729);
    let images: Vec<PauliElement> = cg.elements().iter().map(|g| pi_map(&spec, g)).collect();
    for (i, g) in cg.elements().iter().enumerate() {
        for (j, h) in cg.elements().iter().enumerate() {
            let gh = spec.mul(g, h).unwrap();
            assert_eq!(pi_map(&spec, &gh), pauli.mul(&images[i], &images[j]).unwrap());
        }
    }
}

fn lifted_cases() -> impl Strategy<Value = (u32, u32, usize)> {
    // q^(2n+1) <= 729
    prop::sample::select(vec![(2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 1, 4), (3, 1, 1), (3, 1, 2), (2, 2, 1), (5, 1, 1), (7, 1, 1), (2, 3, 1), (3, 2, 1)])
}

fn lifted_element(spec: &LiftedSpec, seed: &[u32]) -> LiftedElement {
    let q = spec.q();
    let n = spec.n();
    LiftedElement {
        eta: seed[0] % q,
        alpha: (0..n).map(|k| seed[1 + k] % q).collect(),
        beta: (0..n).map(|k| seed[1 + n + k] % q).collect(),
    }
}

fn pauli_element(spec: &PauliSpec, seed: &[u32]) -> PauliElement {
    let q = spec.q();
    let n = spec.n();
    PauliElement {
        phase: seed[0] % spec.phase_modulus(),
        alpha: (0..n).map(|k| seed[1 + k] % q).collect(),
        beta: (0..n).map(|k| seed[1 + n + k] % q).collect(),
    }
}

proptest! {
    #[test]
    fn lifted_product_matches_matrices((p, m, n) in lifted_cases(), s in prop::collection::vec(any::<u32>(), 18)) {
        let spec = LiftedSpec::new(p, m, n).unwrap();
        let g = lifted_element(&spec, &s[..9]);
        let h = lifted_element(&spec, &s[9..]);
        let lhs = spec.matrix(&spec.mul(&g, &h).unwrap()).unwrap();
        let rhs = field_matmul(spec.field(), &spec.matrix(&g).unwrap(), &spec.matrix(&h).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(spec.from_matrix(&spec.matrix(&g).unwrap()).unwrap(), g.clone());
        prop_assert_eq!(spec.mul(&g, &spec.inverse(&g)).unwrap(), spec.identity());
    }

    #[test]
    fn pauli_multiplication_is_a_group_law(
        (p, m, n) in prop::sample::select(vec![(2, 1, 3), (3, 1, 2), (5, 1, 2), (2, 3, 2), (3, 2, 2), (7, 1, 1)]),
        s in prop::collection::vec(any::<u32>(), 21),
    ) {
        let spec = PauliSpec::new(p, m, n).unwrap();
        let (a, b, c) = (pauli_element(&spec, &s[..7]), pauli_element(&spec, &s[7..14]), pauli_element(&spec, &s[14..]));
        let ab_c = spec.mul(&spec.mul(&a, &b).unwrap(), &c).unwrap();
        let a_bc = spec.mul(&a, &spec.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert!(spec.mul(&a, &spec.inverse(&a)).unwrap().is_identity());
        // commutators are central phases
        let comm = spec.commutator(&a, &b);
        prop_assert!(comm.alpha.iter().chain(&comm.beta).all(|&x| x == 0));
    }

    #[test]
    fn pi_is_a_homomorphism((p, m, n) in lifted_cases(), s in prop::collection::vec(any::<u32>(), 18)) {
        let spec = LiftedSpec::new(p, m, n).unwrap();
        let pauli = spec.pauli_spec();
        let g = lifted_element(&spec, &s[..9]);
        let h = lifted_element(&spec, &s[9..]);
        let lhs = pi_map(&spec, &spec.mul(&g, &h).unwrap());
        let rhs = pauli.mul(&pi_map(&spec, &g), &pi_map(&spec, &h)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn field_axioms_sampled((p, m) in prop::sample::select(vec![(2, 8), (3, 5), (5, 3), (7, 2), (31, 1)]), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = GaloisField::new(p, m).unwrap();
        let q = f.order();
        let (a, b, c) = (FieldElement(a % q), FieldElement(b % q), FieldElement(c % q));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.coeffs(f.mul(a, b)), poly_mul_oracle(&f, a, b));
        prop_assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
    }
}

fn test_groups() -> Vec<FiniteGroup> {
    let l = limits();
    ["d8", "q8", "pauli:p=2,n=1", "pauli:p=3,n=1", "e2(3)", "dihedral(6)", "heis:R=gf(2)", "heis:R=z(4)", "lifted:p=2,n=2"]
        .iter()
        .map(|s| s.parse::<GroupSpec>().unwrap().build(&l).unwrap())
        .collect()
}

#[test]
fn census_counts_agree_with_brute_force() {
    let l = limits();
    for g in test_groups() {
        let brute = subgroups_all(&g, &l).unwrap().iter().filter(|h| h.order() > 1 && g.is_abelian_subgroup(h)).count();
        assert_eq!(abelian_census(&g, &l).unwrap().c_ab, brute, "{}", g.name());
    }
}

#[test]
fn census_count_is_an_isomorphism_invariant() {
    let l = limits();
    let c = |s: &str| abelian_census(&s.parse::<GroupSpec>().unwrap().build(&l).unwrap(), &l).unwrap().c_ab;
    assert_eq!(c("d8"), c("heis:R=gf(2)"));
    assert_eq!(c("d8"), c("dihedral(4)"));
    assert_eq!(c("e1(3)"), c("pauli:p=3,n=1"));
    assert_eq!(c("e1(3)"), c("heis:R=gf(3),cocycle=symplectic"));
    assert_eq!(c("pauli:p=3,m=2,n=1"), c("heis:R=gf(9),reduced=true"));
    assert_eq!(c("e1(5)"), c("lifted:p=5,n=1"));
}

#[test]
fn maximal_abelian_subgroups_contain_the_center() {
    let mut groups = test_groups();
    groups.push(PauliSpec::qubits(2).unwrap().group(&limits()).unwrap().group);
    groups.push(PauliSpec::new(3, 1, 2).unwrap().group(&limits()).unwrap().group);
    for g in groups {
        let abelian = abelian_subgroups(&g);
        let z = g.center();
        for h in &abelian {
            let maximal = !abelian.iter().any(|k| k.order() > h.order() && h.is_subgroup_of(k));
            if maximal {
                assert!(z.is_subgroup_of(h), "{}: maximal abelian subgroup of order {} misses the center", g.name(), h.order());
            }
        }
    }
}

#[test]
fn lattice_edges_are_covering_pairs() {
    let l = limits();
    for g in test_groups() {
        let graph = hasse(&g, LatticeFilter::All, &l).unwrap();
        let subs = subgroups_all(&g, &l).unwrap();
        assert_eq!(graph.nodes.len(), subs.len());
        let order = |id: usize| graph.nodes[id].order;
        for &[lo, hi] in &graph.edges {
            assert!(order(lo) < order(hi) && order(hi) % order(lo) == 0);
        }
        let bottoms = graph.nodes.iter().filter(|n| !graph.edges.iter().any(|e| e[1] == n.id)).count();
        let tops = graph.nodes.iter().filter(|n| !graph.edges.iter().any(|e| e[0] == n.id)).count();
        assert_eq!((bottoms, tops), (1, 1), "{}", g.name());
        // no subgroup strictly between the ends of an edge
        let id_of = |name_gens: &[String]| subs_by_name(&g, &subs, name_gens).to_vec();
        for &[lo, hi] in &graph.edges {
            let a = id_of(&graph.nodes[lo].generators);
            let b = id_of(&graph.nodes[hi].generators);
            let a_set: BTreeSet<u32> = a.iter().copied().collect();
            let b_set: BTreeSet<u32> = b.iter().copied().collect();
            assert!(a_set.is_subset(&b_set));
            let between = subs.iter().filter(|s| {
                let s_set: BTreeSet<u32> = s.members().iter().copied().collect();
                s.order() > a.len() && s.order() < b.len() && a_set.is_subset(&s_set) && s_set.is_subset(&b_set)
            });
            assert_eq!(between.count(), 0, "{}: edge {lo}->{hi} is not a cover", g.name());
        }
    }
}

/// Members of the subgroup generated by the labelled elements.
fn subs_by_name<'a>(g: &FiniteGroup, subs: &'a [paulidecomp::group::Subgroup], gens: &[String]) -> &'a [u32] {
    let idx: Vec<u32> = gens.iter().map(|l| g.elements().find(|&x| g.label(x) == l).unwrap()).collect();
    let h = g.generate(&idx);
    subs.iter().find(|s| **s == h).unwrap().members()
}
