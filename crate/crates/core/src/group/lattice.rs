//! Subgroup enumeration and the lattice-derived subgroups.

use std::collections::HashSet;

use super::bitset::BitSet;
use super::finite::{FiniteGroup, Limits, Subgroup};
use crate::error::{Error, Result};

/// Every subgroup of `g` exactly once, in canonical order.
///
/// Breadth-first over single-element extensions: each subgroup is reached
/// from a smaller one by adjoining a representative of a cyclic subgroup.
pub fn subgroups_all(g: &FiniteGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    if g.order() > limits.subgroups {
        return Err(Error::CapExceeded { what: "subgroup enumeration", cap: limits.subgroups });
    }
    Ok(enumerate(g, |_, _| true))
}

/// Every abelian subgroup of `g` (including the trivial one), in canonical
/// order. Extends only by centralizing elements, so it never visits a
/// nonabelian subgroup and scales past the full-lattice cap.
pub fn abelian_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    enumerate(g, |s, x| s.members().iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

fn enumerate(g: &FiniteGroup, admissible: impl Fn(&Subgroup, u32) -> bool) -> Vec<Subgroup> {
    let reps: Vec<u32> = g.cyclic_subgroups().into_iter().map(|(x, _)| x).collect();
    let trivial = g.trivial();
    let mut seen: HashSet<BitSet> = HashSet::new();
    seen.insert(trivial.mask().clone());
    let mut all = vec![trivial.clone()];
    let mut frontier: Vec<(Subgroup, Vec<u32>)> = vec![(trivial, Vec::new())];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (s, gens) in &frontier {
            for &x in &reps {
                if s.contains(x) || !admissible(s, x) {
                    continue;
                }
                let t = g.extend_with_gens(s, gens, x);
                if seen.insert(t.mask().clone()) {
                    let mut tg = gens.clone();
                    tg.push(x);
                    all.push(t.clone());
                    next.push((t, tg));
                }
            }
        }
        frontier = next;
    }
    all.sort();
    all
}

/// Subgroups of `g` not properly contained in any proper subgroup.
pub fn maximal_subgroups(g: &FiniteGroup, all: &[Subgroup]) -> Vec<Subgroup> {
    let n = g.order();
    all.iter()
        .filter(|h| h.order() < n)
        .filter(|h| !all.iter().any(|k| k.order() < n && k.order() > h.order() && h.is_subgroup_of(k)))
        .cloned()
        .collect()
}

/// How the Frattini subgroup was obtained.
#[derive(Debug, Clone)]
pub struct Frattini {
    pub subgroup: Subgroup,
    /// `G^p [G,G]`, present when `g` is a p-group.
    pub power_commutator: Option<Subgroup>,
}

/// Intersection of all maximal subgroups. For p-groups it is compared with
/// `G^p [G,G]`, and a disagreement is an internal inconsistency.
pub fn frattini(g: &FiniteGroup, limits: &Limits) -> Result<Frattini> {
    let all = subgroups_all(g, limits)?;
    let max = maximal_subgroups(g, &all);
    let subgroup = max.iter().fold(g.whole(), |acc, m| g.intersection(&acc, m));
    let power_commutator = match g.prime() {
        Some(p) => {
            let gp = g.power_subgroup(p);
            let pc = g.extend(&gp, g.derived_subgroup().members());
            if pc != subgroup {
                return Err(Error::Inconsistency(format!(
                    "Frattini of {}: maximal-subgroup intersection has order {} but G^p[G,G] has order {}",
                    g.name(),
                    subgroup.order(),
                    pc.order()
                )));
            }
            Some(pc)
        }
        None => None,
    };
    Ok(Frattini { subgroup, power_commutator })
}

/// Normal subgroups in canonical order.
pub fn normal_subgroups(g: &FiniteGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    Ok(subgroups_all(g, limits)?.into_iter().filter(|h| g.is_normal_unchecked(h)).collect())
}

/// A complement to the normal subgroup `a`: the first subgroup `h` in
/// canonical order with `a ∩ h = 1` and `a h = G`.
pub fn semidirect_witness(g: &FiniteGroup, a: &Subgroup, limits: &Limits) -> Result<Option<Subgroup>> {
    if !g.is_normal(a)? {
        return Err(Error::NotNormal(format!("order-{} subgroup of {}", a.order(), g.name())));
    }
    let want = g.order() / a.order();
    Ok(subgroups_all(g, limits)?
        .into_iter()
        .filter(|h| h.order() == want)
        .find(|h| g.intersection(a, h).is_trivial()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::finite::group_close;

    fn cyclic(n: u32) -> FiniteGroup {
        group_close(format!("Z{n}"), &[1u32], 0, |a, b| (a + b) % n, &Limits::default()).unwrap().group
    }

    #[test]
    fn cyclic_lattice_matches_divisors() {
        for n in [1u32, 4, 6, 12, 16] {
            let g = cyclic(n);
            let subs = subgroups_all(&g, &Limits::default()).unwrap();
            let divisors = (1..=n).filter(|d| n % d == 0).count();
            assert_eq!(subs.len(), divisors, "Z{n}");
            assert_eq!(abelian_subgroups(&g).len(), divisors);
        }
    }

    #[test]
    fn z4_has_no_complement_to_z2() {
        let g = cyclic(4);
        let a = g.generate(&[2]);
        assert_eq!(semidirect_witness(&g, &a, &Limits::default()).unwrap(), None);
    }

    #[test]
    fn frattini_of_cyclic_p_group() {
        let g = cyclic(8);
        let f = frattini(&g, &Limits::default()).unwrap();
        assert_eq!(f.subgroup.order(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let g = cyclic(16);
        let limits = Limits { subgroups: 8, ..Limits::default() };
        assert!(matches!(subgroups_all(&g, &limits), Err(Error::CapExceeded { .. })));
    }
}
