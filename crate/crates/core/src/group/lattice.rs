//! Subgroup lattices, the Frattini subgroup and minimal generating sets.

use std::collections::HashSet;

use super::{abelian_invariants, Elem, FiniteGroup, Subgroup};

/// One generator per nontrivial cyclic subgroup (the least element index).
fn cyclic_representatives(g: &FiniteGroup) -> Vec<Elem> {
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in 1..g.order() {
        if covered[x] {
            continue;
        }
        let c = g.closure(&[x]);
        // the least element is a generator only if it generates; mark all
        // generators of ⟨x⟩ as covered
        for &y in c.elements() {
            if g.element_order(y) == c.order() {
                covered[y] = true;
            }
        }
        reps.push(x);
    }
    reps
}

/// Every subgroup, sorted by order then elements. Subgroups are built as
/// joins of cyclic subgroups.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let cyclic = cyclic_representatives(g);
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let trivial = Subgroup::trivial(g.order());
    seen.insert(trivial.elements().to_vec());
    let mut list = vec![(trivial, Vec::<Elem>::new())];
    let mut i = 0;
    while i < list.len() {
        let (h, gens) = list[i].clone();
        for &c in &cyclic {
            if h.contains(c) {
                continue;
            }
            let mut new_gens = gens.clone();
            new_gens.push(c);
            let j = g.closure_extend(&h, &new_gens, c);
            if seen.insert(j.elements().to_vec()) {
                list.push((j, new_gens));
            }
        }
        i += 1;
    }
    let mut out: Vec<Subgroup> = list.into_iter().map(|(h, _)| h).collect();
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    out
}

/// Subgroups of `sub`, as subgroups of `g`.
pub fn subgroups_of(g: &FiniteGroup, sub: &Subgroup) -> Vec<Subgroup> {
    let h = g.subgroup_as_group(sub, "sub");
    all_subgroups(&h)
        .into_iter()
        .map(|k| {
            let elems: Vec<Elem> = k.elements().iter().map(|&i| sub.elements()[i]).collect();
            Subgroup::from_elements(g, &elems).expect("image of a subgroup")
        })
        .collect()
}

pub fn maximal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let proper: Vec<Subgroup> = all_subgroups(g)
        .into_iter()
        .filter(|h| !h.is_whole())
        .collect();
    proper
        .iter()
        .filter(|m| {
            !proper
                .iter()
                .any(|k| k.order() > m.order() && m.is_subset_of(k))
        })
        .cloned()
        .collect()
}

/// Intersection of all maximal subgroups; the whole group when there are
/// none.
pub fn frattini_subgroup(g: &FiniteGroup) -> Subgroup {
    maximal_subgroups(g)
        .iter()
        .fold(Subgroup::whole(g.order()), |acc, m| acc.intersection(m))
}

/// A generating set of least size, searched in ascending element order over
/// cyclic-subgroup representatives. The search starts at the rank of the
/// abelianization, which is a lower bound (and exact for p-groups).
pub fn minimal_generating_set(g: &FiniteGroup) -> Vec<Elem> {
    if g.is_trivial() {
        return Vec::new();
    }
    let reps = cyclic_representatives(g);
    let (ab, _) = g
        .quotient(&g.derived_subgroup())
        .expect("derived subgroup is normal");
    let lower = abelian_invariants(&ab)
        .map(|a| a.rank())
        .unwrap_or(1)
        .max(1);
    for k in lower..=reps.len() {
        let mut chosen = Vec::with_capacity(k);
        if search(g, &reps, 0, k, &mut chosen, &Subgroup::trivial(g.order())) {
            return chosen;
        }
    }
    unreachable!("the set of all cyclic representatives generates")
}

fn search(
    g: &FiniteGroup,
    reps: &[Elem],
    start: usize,
    k: usize,
    chosen: &mut Vec<Elem>,
    current: &Subgroup,
) -> bool {
    if current.is_whole() {
        return chosen.len() == k;
    }
    if chosen.len() == k {
        return false;
    }
    for i in start..reps.len() {
        let x = reps[i];
        if current.contains(x) {
            continue;
        }
        chosen.push(x);
        let next = g.closure_extend(current, chosen, x);
        if search(g, reps, i + 1, k, chosen, &next) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// `d(G)`; `d(1) = 0`.
pub fn minimal_generator_count(g: &FiniteGroup) -> usize {
    minimal_generating_set(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin;

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&builtin("S3").unwrap()).len(), 6);
        assert_eq!(all_subgroups(&builtin("D4").unwrap()).len(), 10);
        assert_eq!(all_subgroups(&builtin("Q8").unwrap()).len(), 6);
        assert_eq!(all_subgroups(&builtin("E2^3").unwrap()).len(), 16);
        assert_eq!(all_subgroups(&FiniteGroup::trivial()).len(), 1);
    }

    #[test]
    fn frattini_examples() {
        assert_eq!(frattini_subgroup(&builtin("C2").unwrap()).order(), 1);
        assert_eq!(frattini_subgroup(&builtin("C4").unwrap()).order(), 2);
        let d4 = builtin("D4").unwrap();
        let phi = frattini_subgroup(&d4);
        assert_eq!(phi.order(), 2);
        assert_eq!(phi, d4.center());
        assert_eq!(frattini_subgroup(&FiniteGroup::trivial()).order(), 1);
        assert_eq!(frattini_subgroup(&builtin("S3").unwrap()).order(), 1);
    }

    #[test]
    fn generator_counts() {
        assert_eq!(minimal_generator_count(&FiniteGroup::trivial()), 0);
        assert_eq!(minimal_generator_count(&builtin("C6").unwrap()), 1);
        assert_eq!(minimal_generator_count(&builtin("D4").unwrap()), 2);
        assert_eq!(minimal_generator_count(&builtin("E2^3").unwrap()), 3);
        assert_eq!(minimal_generator_count(&builtin("S4").unwrap()), 2);
        assert_eq!(minimal_generator_count(&builtin("Q8").unwrap()), 2);
    }

    #[test]
    fn d4_generated_by_reflection_and_rotation() {
        let d4 = builtin("D4").unwrap();
        let gens = minimal_generating_set(&d4);
        assert_eq!(d4.closure(&gens).order(), 8);
    }
}
