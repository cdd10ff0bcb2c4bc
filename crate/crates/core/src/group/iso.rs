//! Isomorphism search by backtracking over images of a generating set.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use super::{abelian_invariants, minimal_generating_set, Elem, FiniteGroup, Homomorphism};

const UNSET: usize = usize::MAX;

/// Cheap isomorphism invariants: order, element-order statistics, center
/// and derived-subgroup orders, abelian invariants of abelian groups.
pub fn same_invariants(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let histogram = |x: &FiniteGroup| {
        let mut m = BTreeMap::new();
        for &o in x.element_orders() {
            *m.entry(o).or_insert(0usize) += 1;
        }
        m
    };
    if histogram(g) != histogram(h) {
        return false;
    }
    if g.is_abelian() != h.is_abelian() {
        return false;
    }
    if g.is_abelian() {
        return abelian_invariants(g).ok() == abelian_invariants(h).ok();
    }
    g.center().order() == h.center().order()
        && g.derived_subgroup().order() == h.derived_subgroup().order()
}

fn search_generators(g: &FiniteGroup) -> Vec<Elem> {
    let mut gens = if g.order() <= 256 {
        minimal_generating_set(g)
    } else {
        g.generators().to_vec()
    };
    // most constrained first: higher orders have fewer candidate images
    let orders = g.element_orders();
    gens.sort_by_key(|&x| (orders[x], x));
    gens
}

/// Calls `visit` with every isomorphism `G -> H` in a deterministic order
/// until it returns `ControlFlow::Break`.
pub fn for_each_isomorphism<F>(g: &FiniteGroup, h: &FiniteGroup, mut visit: F)
where
    F: FnMut(&Homomorphism) -> ControlFlow<()>,
{
    if !same_invariants(g, h) {
        return;
    }
    if g.is_trivial() {
        let _ = visit(&Homomorphism::identity(1));
        return;
    }
    let gens = search_generators(g);
    let g_orders = g.element_orders();
    let h_orders = h.element_orders();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&x| {
            h.elements()
                .filter(|&y| h_orders[y] == g_orders[x])
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    let _ = backtrack(g, h, &gens, &candidates, &mut images, &mut visit);
}

fn backtrack<F>(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    images: &mut Vec<Elem>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Homomorphism) -> ControlFlow<()>,
{
    let depth = images.len();
    if depth == gens.len() {
        let map = partial_map(g, h, gens, images).expect("checked at previous level");
        return visit(&Homomorphism::from_images(map, h.order()));
    }
    for &y in &candidates[depth] {
        images.push(y);
        if partial_map(g, h, &gens[..=depth], images).is_some() {
            backtrack(g, h, gens, candidates, images, visit)?;
        }
        images.pop();
    }
    ControlFlow::Continue(())
}

/// The map on `⟨gens⟩` induced by `images`, if it is a well-defined
/// injective homomorphism there.
fn partial_map(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[Elem],
    images: &[Elem],
) -> Option<Vec<Elem>> {
    let mut map = vec![UNSET; g.order()];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(map[x], t);
            if map[y] == UNSET {
                if std::mem::replace(&mut used[fy], true) {
                    return None;
                }
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// An isomorphism `G -> H`, or `None`.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Homomorphism> {
    let mut found = None;
    for_each_isomorphism(g, h, |f| {
        found = Some(f.clone());
        ControlFlow::Break(())
    });
    found
}
