//! Isomorphism testing by backtracking over generator images.

use std::collections::VecDeque;

use super::fingerprint::GroupFingerprint;
use super::finite::FiniteGroup;

/// Largest order the isomorphism search accepts.
pub const ISOMORPHISM_MAX_ORDER: usize = 1024;

/// Per-element data preserved by every isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Signature {
    order: u32,
    centralizer: u32,
    square_roots: u32,
    cube_roots: u32,
}

fn signatures(g: &FiniteGroup) -> Vec<Signature> {
    let n = g.order();
    let mut sq = vec![0u32; n];
    let mut cb = vec![0u32; n];
    for x in g.elements() {
        let x2 = g.mul(x, x);
        sq[x2 as usize] += 1;
        cb[g.mul(x2, x) as usize] += 1;
    }
    g.elements()
        .map(|x| Signature {
            order: g.element_order(x),
            centralizer: g.centralizer_order(x) as u32,
            square_roots: sq[x as usize],
            cube_roots: cb[x as usize],
        })
        .collect()
}

/// An isomorphism `G -> H` as an index map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: Vec<u32>,
    /// Generators of `G` and their images, the compact form of the witness.
    pub generator_images: Vec<(u32, u32)>,
}

/// Decides `G ≅ H`, returning a witness map when they are isomorphic.
/// Complete for any order; sized for groups up to [`ISOMORPHISM_MAX_ORDER`].
pub fn isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Isomorphism> {
    if g.order() != h.order() || GroupFingerprint::of(g) != GroupFingerprint::of(h) {
        return None;
    }
    let sg = signatures(g);
    let sh = signatures(h);
    let mut a = sg.clone();
    let mut b = sh.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let gens = generating_set_by_rarity(g, &sg);
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&x| h.elements().filter(|&y| sh[y as usize] == sg[x as usize]).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    if search(g, h, &gens, &candidates, &mut images) {
        let map = build_map(g, h, &gens, &images).expect("search verified the map");
        let generator_images = gens.iter().copied().zip(images).collect();
        Some(Isomorphism { map, generator_images })
    } else {
        None
    }
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    isomorphism(g, h).is_some()
}

/// Greedy generating set preferring elements whose signature class is small,
/// which keeps the candidate lists short.
fn generating_set_by_rarity(g: &FiniteGroup, sig: &[Signature]) -> Vec<u32> {
    let mut class_size = std::collections::HashMap::new();
    for s in sig {
        *class_size.entry(*s).or_insert(0usize) += 1;
    }
    let mut order: Vec<u32> = g.elements().collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), class_size[&sig[x as usize]], x));
    let mut gens = Vec::new();
    let mut cur = g.trivial();
    for x in order {
        if cur.order() == g.order() {
            break;
        }
        if !cur.contains(x) {
            gens.push(x);
            cur = g.generate(&gens);
        }
    }
    // Drop generators made redundant by later ones.
    let mut i = 0;
    while i < gens.len() {
        let mut rest = gens.clone();
        rest.remove(i);
        if g.generate(&rest).order() == g.order() {
            gens = rest;
        } else {
            i += 1;
        }
    }
    gens
}

fn search(g: &FiniteGroup, h: &FiniteGroup, gens: &[u32], cands: &[Vec<u32>], images: &mut Vec<u32>) -> bool {
    let depth = images.len();
    if depth == gens.len() {
        return build_map(g, h, gens, images).is_some();
    }
    for &y in &cands[depth] {
        images.push(y);
        if build_map(g, h, &gens[..=depth], images).is_some() && search(g, h, gens, cands, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Extends `gens[i] -> images[i]` along the right Cayley graph of
/// `⟨gens⟩`. Succeeds when the extension is well defined and injective,
/// which makes it an injective homomorphism on `⟨gens⟩`.
fn build_map(g: &FiniteGroup, h: &FiniteGroup, gens: &[u32], images: &[u32]) -> Option<Vec<u32>> {
    let mut map = vec![u32::MAX; g.order()];
    let mut used = vec![false; h.order()];
    map[g.identity() as usize] = h.identity();
    used[h.identity() as usize] = true;
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x as usize];
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(fx, t);
            match map[y as usize] {
                u32::MAX => {
                    if used[fy as usize] {
                        return None;
                    }
                    used[fy as usize] = true;
                    map[y as usize] = fy;
                    queue.push_back(y);
                }
                prev if prev != fy => return None,
                _ => {}
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::finite::{group_close, Limits};

    fn z(n: u32) -> FiniteGroup {
        group_close("Z", &[1u32], 0, |a, b| (a + b) % n, &Limits::default()).unwrap().group
    }

    fn z2xz(n: u32) -> FiniteGroup {
        group_close("Z2xZ", &[(1u32, 0u32), (0, 1)], (0, 0), |a, b| ((a.0 + b.0) % 2, (a.1 + b.1) % n), &Limits::default())
            .unwrap()
            .group
    }

    #[test]
    fn cyclic_product_recognized() {
        let iso = isomorphism(&z2xz(3), &z(6)).expect("Z2 x Z3 is cyclic");
        let g = z2xz(3);
        let h = z(6);
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(iso.map[g.mul(a, b) as usize], h.mul(iso.map[a as usize], iso.map[b as usize]));
            }
        }
        assert!(!is_isomorphic(&z2xz(4), &z(8)));
        assert!(is_isomorphic(&z(8), &z(8)));
    }
}
