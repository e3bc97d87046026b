//! Materialized finite groups: a Cayley table over element indices plus the
//! invariants every downstream computation needs.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bitset::BitSet;
use crate::algebra::arith::{factorize, lcm};
use crate::error::{Error, Result};

/// Size limits and the seed used by sampled checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group [`group_close`] will materialize.
    pub closure: usize,
    /// Largest group whose full subgroup lattice may be enumerated.
    pub subgroups: usize,
    /// Seed for sampled associativity checks above [`EXHAUSTIVE_ASSOCIATIVITY_MAX`].
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { closure: 4096, subgroups: 256, seed: 0x5eed }
    }
}

/// Groups up to this order have associativity checked on every triple.
pub const EXHAUSTIVE_ASSOCIATIVITY_MAX: usize = 256;
const SAMPLED_TRIPLES: usize = 100_000;

/// A subgroup of some [`FiniteGroup`], as a sorted set of element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<u32>,
    mask: BitSet,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}: {:?})", self.members.len(), self.members)
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by size, then lexicographically by member list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.len().cmp(&other.members.len()).then_with(|| self.members.cmp(&other.members))
    }
}

impl Subgroup {
    pub(crate) fn from_mask(mask: BitSet) -> Self {
        let members = mask.iter().collect();
        Subgroup { members, mask }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn mask(&self) -> &BitSet {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.mask.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

struct GroupData {
    name: String,
    n: usize,
    table: Vec<u32>,
    identity: u32,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    labels: Vec<String>,
    exponent: u64,
    center: Subgroup,
    derived: Subgroup,
    generators: Vec<u32>,
}

/// A finite group given by its full multiplication table.
///
/// Immutable and cheap to clone. Construction checks the Latin-square
/// property, the identity, inverses and associativity.
#[derive(Clone)]
pub struct FiniteGroup {
    d: Arc<GroupData>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.d.name, self.d.n)
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table over `0..n`.
    pub fn from_table(name: impl Into<String>, table: Vec<u32>, labels: Vec<String>, limits: &Limits) -> Result<Self> {
        let n = labels.len();
        if n == 0 || table.len() != n * n {
            return Err(Error::InvalidArgument("table must be n x n with n >= 1".into()));
        }
        check_latin(&table, n)?;
        let identity = (0..n as u32)
            .find(|&e| (0..n as u32).all(|x| table[e as usize * n + x as usize] == x && table[x as usize * n + e as usize] == x))
            .ok_or_else(|| Error::InvalidArgument("table has no two-sided identity".into()))?;
        check_associative(&table, n, limits.seed)?;

        let inverse: Vec<u32> = (0..n)
            .map(|x| (0..n as u32).find(|&y| table[x * n + y as usize] == identity).unwrap())
            .collect();
        let orders: Vec<u32> = (0..n as u32)
            .map(|x| {
                let mut k = 1;
                let mut acc = x;
                while acc != identity {
                    acc = table[acc as usize * n + x as usize];
                    k += 1;
                }
                k
            })
            .collect();
        let exponent = orders.iter().fold(1u64, |acc, &o| lcm(acc, o as u64));

        let mut g = FiniteGroup {
            d: Arc::new(GroupData {
                name: name.into(),
                n,
                table,
                identity,
                inverse,
                orders,
                labels,
                exponent,
                center: Subgroup::from_mask(BitSet::new(n)),
                derived: Subgroup::from_mask(BitSet::new(n)),
                generators: Vec::new(),
            }),
        };
        let generators = g.small_generating_set(&g.whole());
        Arc::get_mut(&mut g.d).expect("freshly created").generators = generators;
        let center = g.compute_center();
        let derived = g.commutator_subgroup(&g.whole(), &g.whole());
        let data = Arc::get_mut(&mut g.d).expect("freshly created");
        data.center = center;
        data.derived = derived;
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.d.name
    }

    pub fn renamed(&self, name: impl Into<String>) -> FiniteGroup {
        let d = &self.d;
        FiniteGroup {
            d: Arc::new(GroupData {
                name: name.into(),
                n: d.n,
                table: d.table.clone(),
                identity: d.identity,
                inverse: d.inverse.clone(),
                orders: d.orders.clone(),
                labels: d.labels.clone(),
                exponent: d.exponent,
                center: d.center.clone(),
                derived: d.derived.clone(),
                generators: d.generators.clone(),
            }),
        }
    }

    pub fn order(&self) -> usize {
        self.d.n
    }

    pub fn identity(&self) -> u32 {
        self.d.identity
    }

    pub fn label(&self, x: u32) -> &str {
        &self.d.labels[x as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.d.labels
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.d.n as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.d.table[a as usize * self.d.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.d.inverse[a as usize]
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        let k = k % self.d.orders[a as usize] as u64;
        (0..k).fold(self.d.identity, |acc, _| self.mul(acc, a))
    }

    /// `a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `g^-1 a g`.
    #[inline]
    pub fn conjugate(&self, a: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn element_order(&self, a: u32) -> u32 {
        self.d.orders[a as usize]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.d.orders
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.d.exponent
    }

    pub fn is_abelian(&self) -> bool {
        self.d.derived.is_trivial()
    }

    /// Prime `p` when the order is a power of `p`.
    pub fn prime(&self) -> Option<u64> {
        match factorize(self.d.n as u64).as_slice() {
            [(p, _)] => Some(*p),
            _ => None,
        }
    }

    /// Abelian of prime exponent.
    pub fn is_elementary_abelian(&self) -> bool {
        self.is_abelian() && self.d.n > 1 && factorize(self.d.exponent).len() == 1 && factorize(self.d.exponent)[0].1 == 1
    }

    /// A fixed generating set of the whole group.
    pub fn generators(&self) -> &[u32] {
        &self.d.generators
    }

    pub fn center(&self) -> &Subgroup {
        &self.d.center
    }

    pub fn derived_subgroup(&self) -> &Subgroup {
        &self.d.derived
    }

    pub fn whole(&self) -> Subgroup {
        let mut m = BitSet::new(self.d.n);
        for x in 0..self.d.n as u32 {
            m.insert(x);
        }
        Subgroup::from_mask(m)
    }

    pub fn trivial(&self) -> Subgroup {
        let mut m = BitSet::new(self.d.n);
        m.insert(self.d.identity);
        Subgroup::from_mask(m)
    }

    fn compute_center(&self) -> Subgroup {
        let mut m = BitSet::new(self.d.n);
        for a in self.elements() {
            if self.d.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)) {
                m.insert(a);
            }
        }
        Subgroup::from_mask(m)
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[u32]) -> Subgroup {
        let mut mask = BitSet::new(self.d.n);
        mask.insert(self.d.identity);
        self.close(mask, gens)
    }

    /// Subgroup generated by `base` together with `extra`.
    pub fn extend(&self, base: &Subgroup, extra: &[u32]) -> Subgroup {
        if extra.iter().all(|&g| base.contains(g)) {
            return base.clone();
        }
        let mut gens = self.small_generating_set(base);
        gens.extend_from_slice(extra);
        self.close(base.mask.clone(), &gens)
    }

    /// `⟨base, extra⟩` when `base_gens` generates `base`.
    pub(crate) fn extend_with_gens(&self, base: &Subgroup, base_gens: &[u32], x: u32) -> Subgroup {
        let mut gens = base_gens.to_vec();
        gens.push(x);
        self.close(base.mask.clone(), &gens)
    }

    /// Closes `mask` under right multiplication by `gens`. The result is
    /// `mask * ⟨gens⟩`, a subgroup whenever `mask` is contained in `⟨gens⟩`.
    fn close(&self, mut mask: BitSet, gens: &[u32]) -> Subgroup {
        let mut queue: VecDeque<u32> = mask.iter().collect();
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if mask.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_mask(mask)
    }

    /// A generating set for `h` chosen greedily, largest element orders
    /// first (not necessarily minimal).
    pub fn small_generating_set(&self, h: &Subgroup) -> Vec<u32> {
        let mut order: Vec<u32> = h.members.clone();
        order.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut gens = Vec::new();
        let mut cur = self.trivial();
        for x in order {
            if cur.order() == h.order() {
                break;
            }
            if !cur.contains(x) {
                gens.push(x);
                cur = self.close(cur.mask.clone(), &gens);
            }
        }
        gens
    }

    /// Validates that `members` is a subgroup and wraps it.
    pub fn subgroup(&self, members: &[u32]) -> Result<Subgroup> {
        let mut mask = BitSet::new(self.d.n);
        for &x in members {
            if x as usize >= self.d.n {
                return Err(Error::NotSubgroup(format!("index {x} out of range")));
            }
            mask.insert(x);
        }
        let s = Subgroup::from_mask(mask);
        if !s.contains(self.d.identity) {
            return Err(Error::NotSubgroup("missing identity".into()));
        }
        for &a in &s.members {
            if !s.contains(self.inv(a)) {
                return Err(Error::NotSubgroup(format!("not closed under inverse at {}", self.label(a))));
            }
            for &b in &s.members {
                if !s.contains(self.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!(
                        "not closed: {} * {}",
                        self.label(a),
                        self.label(b)
                    )));
                }
            }
        }
        Ok(s)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup::from_mask(a.mask.intersection(&b.mask))
    }

    /// The set `HK`.
    pub fn product_set(&self, h: &Subgroup, k: &Subgroup) -> BitSet {
        let mut m = BitSet::new(self.d.n);
        for &x in &h.members {
            for &y in &k.members {
                m.insert(self.mul(x, y));
            }
        }
        m
    }

    /// `[H, K]`, the subgroup generated by all commutators `[h, k]`.
    pub fn commutator_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let mut comms = BitSet::new(self.d.n);
        for &x in &h.members {
            for &y in &k.members {
                comms.insert(self.commutator(x, y));
            }
        }
        let gens: Vec<u32> = comms.iter().collect();
        self.generate(&gens)
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let mut m = BitSet::new(self.d.n);
        let gens = self.small_generating_set(h);
        for g in self.elements() {
            if gens.iter().all(|&x| self.mul(g, x) == self.mul(x, g)) {
                m.insert(g);
            }
        }
        Subgroup::from_mask(m)
    }

    pub fn centralizer_order(&self, a: u32) -> usize {
        self.elements().filter(|&b| self.mul(a, b) == self.mul(b, a)).count()
    }

    pub fn is_abelian_subgroup(&self, h: &Subgroup) -> bool {
        let gens = self.small_generating_set(h);
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugation-closure test. Fails if `h` is not a subgroup.
    pub fn is_normal(&self, h: &Subgroup) -> Result<bool> {
        if h.mask.len() != h.members.len() {
            return Err(Error::NotSubgroup("inconsistent handle".into()));
        }
        self.subgroup(&h.members)?;
        Ok(self.is_normal_unchecked(h))
    }

    pub(crate) fn is_normal_unchecked(&self, h: &Subgroup) -> bool {
        let gens = self.small_generating_set(h);
        gens.iter().all(|&x| self.d.generators.iter().all(|&g| h.contains(self.conjugate(x, g))))
    }

    /// Smallest normal subgroup containing `xs`.
    pub fn normal_closure(&self, xs: &[u32]) -> Subgroup {
        let mut cur = self.generate(xs);
        loop {
            let gens = self.small_generating_set(&cur);
            let conj: Vec<u32> = gens
                .iter()
                .flat_map(|&x| self.d.generators.iter().map(move |&g| (x, g)))
                .map(|(x, g)| self.conjugate(x, g))
                .filter(|&y| !cur.contains(y))
                .collect();
            if conj.is_empty() {
                return cur;
            }
            cur = self.extend(&cur, &conj);
        }
    }

    /// The subgroup generated by all `p`-th powers.
    pub fn power_subgroup(&self, p: u64) -> Subgroup {
        let pows: Vec<u32> = self.elements().map(|x| self.pow(x, p)).collect();
        self.generate(&pows)
    }

    /// Terms of the lower central series, starting with `G`, until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let whole = self.whole();
        let mut series = vec![whole.clone()];
        loop {
            let next = self.commutator_subgroup(series.last().unwrap(), &whole);
            if &next == series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    /// Nilpotency class, or `None` if the group is not nilpotent.
    pub fn nilpotency_class(&self) -> Option<u32> {
        let series = self.lower_central_series();
        if series.last().unwrap().is_trivial() {
            Some(series.len() as u32 - 1)
        } else {
            None
        }
    }

    /// Materializes a subgroup as a group in its own right, returning the
    /// group and the embedding (new index to parent index).
    pub fn subgroup_as_group(&self, h: &Subgroup, name: impl Into<String>) -> Result<(FiniteGroup, Vec<u32>)> {
        let pos: HashMap<u32, u32> = h.members.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
        let k = h.order();
        let mut table = vec![0u32; k * k];
        for (i, &a) in h.members.iter().enumerate() {
            for (j, &b) in h.members.iter().enumerate() {
                table[i * k + j] = *pos
                    .get(&self.mul(a, b))
                    .ok_or_else(|| Error::NotSubgroup("not closed under multiplication".into()))?;
            }
        }
        let labels = h.members.iter().map(|&x| self.label(x).to_string()).collect();
        let g = FiniteGroup::from_table(name, table, labels, &Limits::default())?;
        Ok((g, h.members.clone()))
    }

    /// `G/N` with the projection from `G`.
    pub fn quotient(&self, n: &Subgroup, name: impl Into<String>) -> Result<Quotient> {
        if !self.is_normal(n)? {
            return Err(Error::NotNormal(format!("order-{} subgroup of {}", n.order(), self.name())));
        }
        let mut coset_of = vec![u32::MAX; self.d.n];
        let mut reps = Vec::new();
        for x in self.elements() {
            if coset_of[x as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &y in &n.members {
                coset_of[self.mul(x, y) as usize] = id;
            }
        }
        let k = reps.len();
        let mut table = vec![0u32; k * k];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * k + j] = coset_of[self.mul(a, b) as usize];
            }
        }
        let labels = reps.iter().map(|&r| format!("{}N", self.label(r))).collect();
        let group = FiniteGroup::from_table(name, table, labels, &Limits::default())?;
        Ok(Quotient { group, projection: coset_of, representatives: reps })
    }

    /// Subgroups generated by a single element, each listed once, with the
    /// smallest-index generator as representative.
    pub fn cyclic_subgroups(&self) -> Vec<(u32, Subgroup)> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for x in self.elements() {
            let c = self.generate(&[x]);
            if seen.insert(c.mask.clone()) {
                out.push((x, c));
            }
        }
        out
    }
}

/// Result of [`FiniteGroup::quotient`].
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Parent element index to coset index.
    pub projection: Vec<u32>,
    /// Smallest-index representative of each coset.
    pub representatives: Vec<u32>,
}

fn check_latin(table: &[u32], n: usize) -> Result<()> {
    let mut seen = vec![0usize; n];
    for r in 0..n {
        for c in 0..n {
            let v = table[r * n + c] as usize;
            if v >= n {
                return Err(Error::InvalidArgument(format!("table entry {v} out of range")));
            }
            if seen[v] == r + 1 {
                return Err(Error::InvalidArgument(format!("row {r} repeats element {v}")));
            }
            seen[v] = r + 1;
        }
    }
    seen.iter_mut().for_each(|s| *s = 0);
    for c in 0..n {
        for r in 0..n {
            let v = table[r * n + c] as usize;
            if seen[v] == c + 1 {
                return Err(Error::InvalidArgument(format!("column {c} repeats element {v}")));
            }
            seen[v] = c + 1;
        }
    }
    Ok(())
}

fn check_associative(table: &[u32], n: usize, seed: u64) -> Result<()> {
    let m = |a: u32, b: u32| table[a as usize * n + b as usize];
    let bad = |a: u32, b: u32, c: u32| {
        Err(Error::InvalidArgument(format!("multiplication is not associative at ({a}, {b}, {c})")))
    };
    if n <= EXHAUSTIVE_ASSOCIATIVITY_MAX {
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                let ab = m(a, b);
                for c in 0..n as u32 {
                    if m(ab, c) != m(a, m(b, c)) {
                        return bad(a, b, c);
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLED_TRIPLES {
            let (a, b, c) = (rng.gen_range(0..n as u32), rng.gen_range(0..n as u32), rng.gen_range(0..n as u32));
            if m(m(a, b), c) != m(a, m(b, c)) {
                return bad(a, b, c);
            }
        }
    }
    Ok(())
}

/// A group materialized from concrete elements, keeping the element list
/// and a reverse index alongside the abstract table.
#[derive(Debug, Clone)]
pub struct ConcreteGroup<T> {
    pub group: FiniteGroup,
    elements: Vec<T>,
    index: HashMap<T, u32>,
}

impl<T: Clone + Eq + Hash> ConcreteGroup<T> {
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &T {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, x: &T) -> Option<u32> {
        self.index.get(x).copied()
    }

    /// Subgroup generated by concrete elements, which must all lie in the group.
    pub fn generate(&self, xs: &[T]) -> Result<Subgroup> {
        let idx = xs
            .iter()
            .map(|x| self.index_of(x).ok_or_else(|| Error::InvalidArgument("element not in group".into())))
            .collect::<Result<Vec<u32>>>()?;
        Ok(self.group.generate(&idx))
    }
}

/// Closes `generators` under `mul` and materializes the resulting group.
///
/// Elements are indexed in increasing `Ord` order of their keys, so the
/// result does not depend on generator order. Labels come from `Debug`.
pub fn group_close<T, F>(
    name: impl Into<String>,
    generators: &[T],
    identity: T,
    mul: F,
    limits: &Limits,
) -> Result<ConcreteGroup<T>>
where
    T: Clone + Eq + Hash + Ord + fmt::Debug,
    F: Fn(&T, &T) -> T,
{
    let mut seen: HashMap<T, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone(), ());
    queue.push_back(identity.clone());
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = mul(&x, g);
            if !seen.contains_key(&y) {
                if seen.len() >= limits.closure {
                    return Err(Error::CapExceeded { what: "group closure", cap: limits.closure });
                }
                seen.insert(y.clone(), ());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<T> = seen.into_keys().collect();
    elements.sort();
    let index: HashMap<T, u32> = elements.iter().enumerate().map(|(i, x)| (x.clone(), i as u32)).collect();
    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            let c = mul(a, b);
            table[i * n + j] = *index
                .get(&c)
                .ok_or_else(|| Error::Inconsistency("closure is not closed under the oracle".into()))?;
        }
    }
    if index[&identity] as usize >= n || table[index[&identity] as usize * n..][..n].iter().enumerate().any(|(j, &v)| v as usize != j) {
        return Err(Error::InvalidArgument("supplied identity is not a left identity".into()));
    }
    let labels = elements.iter().map(|x| format!("{x:?}")).collect();
    let group = FiniteGroup::from_table(name, table, labels, limits)?;
    Ok(ConcreteGroup { group, elements, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: u32) -> ConcreteGroup<u32> {
        group_close(format!("Z{n}"), &[1u32], 0, |a, b| (a + b) % n, &Limits::default()).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = group_close("1", &[0u32], 0, |a, b| a + b, &Limits::default()).unwrap();
        assert_eq!(g.group.order(), 1);
        assert_eq!(g.group.exponent(), 1);
        assert!(g.group.is_abelian());
        assert_eq!(g.group.nilpotency_class(), Some(0));
    }

    #[test]
    fn cyclic_basics() {
        let z4 = cyclic(4);
        let g = &z4.group;
        assert_eq!(g.order(), 4);
        assert_eq!(g.center().order(), 4);
        assert!(g.derived_subgroup().is_trivial());
        assert_eq!(g.exponent(), 4);
        assert!(!g.is_elementary_abelian());
        assert_eq!(g.cyclic_subgroups().len(), 3);
        let two = g.generate(&[2]);
        let q = g.quotient(&two, "Z4/Z2").unwrap();
        assert_eq!(q.group.order(), 2);
        let whole = g.quotient(&g.whole(), "1").unwrap();
        assert_eq!(whole.group.order(), 1);
    }

    #[test]
    fn closure_cap_is_reported() {
        let limits = Limits { closure: 10, ..Limits::default() };
        let err = group_close("Z12", &[1u32], 0, |a, b| (a + b) % 12, &limits).unwrap_err();
        assert_eq!(err, Error::CapExceeded { what: "group closure", cap: 10 });
    }

    #[test]
    fn rejects_non_groups() {
        // x * y = x is not a Latin square.
        let table = vec![0, 0, 1, 1];
        let labels = vec!["a".into(), "b".into()];
        assert!(FiniteGroup::from_table("bad", table, labels, &Limits::default()).is_err());
    }

    #[test]
    fn subgroup_validation() {
        let z6 = cyclic(6);
        let g = &z6.group;
        assert!(g.subgroup(&[0, 2, 4]).is_ok());
        assert!(g.subgroup(&[0, 1]).is_err());
        assert!(g.subgroup(&[1, 2]).is_err());
    }
}
