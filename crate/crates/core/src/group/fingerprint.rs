//! Isomorphism invariants.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::finite::FiniteGroup;
use crate::algebra::arith::factorize;

/// Invariants shared by isomorphic groups. Equality is necessary, not
/// sufficient, for isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub exponent: u64,
    /// Element order to number of elements of that order.
    pub order_sequence: BTreeMap<u32, usize>,
    pub center_order: usize,
    pub derived_order: usize,
    /// Invariant factors of `G/[G,G]`, each dividing the next.
    pub abelianization: Vec<u64>,
    /// `None` when the group is not nilpotent.
    pub nilpotency_class: Option<u32>,
}

impl GroupFingerprint {
    pub fn of(g: &FiniteGroup) -> Self {
        let mut order_sequence = BTreeMap::new();
        for &o in g.element_orders() {
            *order_sequence.entry(o).or_insert(0) += 1;
        }
        let abelianization = if g.is_abelian() {
            abelian_invariants(g)
        } else {
            let q = g.quotient(g.derived_subgroup(), "ab").expect("derived subgroup is normal");
            abelian_invariants(&q.group)
        };
        GroupFingerprint {
            order: g.order(),
            exponent: g.exponent(),
            order_sequence,
            center_order: g.center().order(),
            derived_order: g.derived_subgroup().order(),
            abelianization,
            nilpotency_class: g.nilpotency_class(),
        }
    }
}

/// Invariant factors of an abelian group, read off from the sizes of its
/// `p^k`-torsion subgroups.
pub fn abelian_invariants(g: &FiniteGroup) -> Vec<u64> {
    debug_assert!(g.is_abelian());
    // For each prime, the number of cyclic factors of order at least p^k is
    // log_p(|G[p^k]| / |G[p^(k-1)]|).
    let mut per_prime: Vec<Vec<u64>> = Vec::new();
    for (p, e) in factorize(g.order() as u64) {
        let torsion = |k: u32| g.element_orders().iter().filter(|&&o| (p.pow(k)) % o as u64 == 0).count() as u64;
        let mut at_least = Vec::new();
        let mut prev = 1u64;
        for k in 1..=e {
            let t = torsion(k);
            let mut r = 0;
            let mut x = t / prev;
            while x > 1 {
                x /= p;
                r += 1;
            }
            at_least.push(r);
            prev = t;
        }
        // at_least[k-1] = number of factors of order >= p^k
        let mut factors = Vec::new();
        for k in 1..=e as usize {
            let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            factors.extend(std::iter::repeat(p.pow(k as u32)).take(exact as usize));
        }
        factors.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(factors);
    }
    let len = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut inv: Vec<u64> = (0..len)
        .map(|i| per_prime.iter().map(|f| f.get(i).copied().unwrap_or(1)).product())
        .collect();
    inv.reverse();
    inv
}
