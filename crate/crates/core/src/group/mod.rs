//! Finite groups given by multiplication tables (or, for large realized
//! groups, by a regular permutation representation), together with the
//! subgroup, quotient and homomorphism machinery used everywhere else.

mod abelian;
mod catalog;
mod hom;
mod iso;
mod lattice;
mod product;
mod subgroup;

use std::collections::VecDeque;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub use abelian::{abelian_invariants, AbelianInvariants};
pub use catalog::{builtin, builtin_names, load_group, GroupSpec, DEFAULT_MAX_ORDER};
pub use hom::Homomorphism;
pub use iso::{find_isomorphism, for_each_isomorphism, same_invariants};
pub use lattice::{
    all_subgroups, frattini_subgroup, maximal_subgroups, minimal_generating_set,
    minimal_generator_count, subgroups_of,
};
pub use product::{central_product, direct_product, CentralAmalgam};
pub use subgroup::Subgroup;

/// Element index. The identity is always `0`.
pub type Elem = usize;

/// Realized groups up to this order are stored with a dense table.
pub(crate) const DENSE_LIMIT: usize = 2048;

#[derive(Clone)]
enum Repr {
    /// Row-major `order * order` table.
    Table(Vec<u32>),
    /// Regular action: `perms[c][x]` is `x · c` for generator column `c`,
    /// and `words[offsets[x]..offsets[x + 1]]` spells `x` in those columns.
    Regular {
        perms: Vec<Vec<u32>>,
        words: Vec<u32>,
        offsets: Vec<u32>,
    },
}

/// A finite group with elements `0..order`, identity `0`.
#[derive(Clone)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    repr: Repr,
    inverses: Vec<u32>,
    generators: OnceLock<Vec<Elem>>,
    element_orders: OnceLock<Vec<u32>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a Cayley table (Latin square, identity at `0`, associative).
    pub fn from_table(label: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {i} has length {}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidGroup(format!(
                        "entry {x} out of range in row {i}"
                    )));
                }
                flat.push(x as u32);
            }
        }
        let g = Self::from_flat_unchecked(label.into(), n, flat)?;
        g.check_associative()?;
        Ok(g)
    }

    /// Builds from a flat table, checking the Latin property and identity but
    /// not associativity.
    pub(crate) fn from_flat_unchecked(label: String, n: usize, flat: Vec<u32>) -> Result<Self> {
        for g in 0..n {
            if flat[g] as usize != g || flat[g * n] as usize != g {
                return Err(Error::InvalidGroup("element 0 is not the identity".into()));
            }
        }
        let mut seen = vec![0u32; n];
        let mut stamp = 0u32;
        for r in 0..n {
            stamp += 1;
            for c in 0..n {
                let v = flat[r * n + c] as usize;
                if seen[v] == stamp {
                    return Err(Error::InvalidGroup(format!("row {r} repeats element {v}")));
                }
                seen[v] = stamp;
            }
        }
        for c in 0..n {
            stamp += 1;
            for r in 0..n {
                let v = flat[r * n + c] as usize;
                if seen[v] == stamp {
                    return Err(Error::InvalidGroup(format!(
                        "column {c} repeats element {v}"
                    )));
                }
                seen[v] = stamp;
            }
        }
        let mut inverses = vec![0u32; n];
        for g in 0..n {
            let h = (0..n)
                .find(|&h| flat[g * n + h] == 0)
                .expect("latin row contains identity");
            inverses[g] = h as u32;
        }
        Ok(Self {
            label,
            order: n,
            repr: Repr::Table(flat),
            inverses,
            generators: OnceLock::new(),
            element_orders: OnceLock::new(),
        })
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds a group from the regular action of its generators: `perms[c]`
    /// is right multiplication by the `c`-th generator on elements `0..n`,
    /// where element `x` is reached from `0` along a breadth-first tree.
    /// Columns come in pairs (generator, inverse).
    pub(crate) fn from_regular_action(label: String, perms: Vec<Vec<u32>>) -> Self {
        let n = perms.first().map_or(1, |p| p.len());
        let mut parent: Vec<Option<(u32, u32)>> = vec![None; n];
        let mut depth = vec![0u32; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut bfs = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            bfs.push(x);
            for (c, p) in perms.iter().enumerate() {
                let y = p[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x as u32, c as u32));
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        assert_eq!(bfs.len(), n, "regular action must be transitive");
        let mut offsets = vec![0u32; n + 1];
        for x in 0..n {
            offsets[x + 1] = offsets[x] + depth[x];
        }
        let mut words = vec![0u32; offsets[n] as usize];
        for x in 0..n {
            let mut y = x;
            let mut pos = offsets[x + 1] as usize;
            while let Some((p, c)) = parent[y] {
                pos -= 1;
                words[pos] = c;
                y = p as usize;
            }
        }
        let mut generators: Vec<Elem> = Vec::new();
        for c in (0..perms.len()).step_by(2) {
            let x = perms[c][0] as usize;
            if x != 0 && !generators.contains(&x) {
                generators.push(x);
            }
        }
        let mut g = Self {
            label,
            order: n,
            repr: Repr::Regular {
                perms,
                words,
                offsets,
            },
            inverses: Vec::new(),
            generators: OnceLock::from(generators),
            element_orders: OnceLock::new(),
        };
        if let Repr::Regular {
            perms,
            words,
            offsets,
        } = &g.repr
        {
            let mut inverses = vec![0u32; n];
            for x in 0..n {
                let w = &words[offsets[x] as usize..offsets[x + 1] as usize];
                let mut y = 0u32;
                for &c in w.iter().rev() {
                    y = perms[(c ^ 1) as usize][y as usize];
                }
                inverses[x] = y;
            }
            g.inverses = inverses;
        }
        if n <= DENSE_LIMIT {
            g.densify();
        }
        g
    }

    /// Replaces a regular representation with a dense table.
    fn densify(&mut self) {
        let Repr::Regular { .. } = &self.repr else {
            return;
        };
        let n = self.order;
        let mut flat = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[a * n + b] = self.mul(a, b) as u32;
            }
        }
        self.repr = Repr::Table(flat);
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.repr, Repr::Table(_))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.repr {
            Repr::Table(t) => t[a * self.order + b] as usize,
            Repr::Regular {
                perms,
                words,
                offsets,
            } => {
                let mut x = a as u32;
                for &c in &words[offsets[b] as usize..offsets[b + 1] as usize] {
                    x = perms[c as usize][x as usize];
                }
                x as usize
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a] as usize
    }

    /// `a^e` for any integer exponent.
    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        let base = if e < 0 { self.inv(a) } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = 0;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    /// Left conjugation `^g h = g h g⁻¹`.
    pub fn conj(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// Commutator `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(0, |acc, x| self.mul(acc, x))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        if let Some(orders) = self.element_orders.get() {
            return orders[a] as usize;
        }
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Orders of all elements, cached.
    pub fn element_orders(&self) -> &[u32] {
        self.element_orders.get_or_init(|| {
            let n = self.order;
            let mut orders = vec![0u32; n];
            orders[0] = 1;
            for a in 1..n {
                if orders[a] != 0 {
                    continue;
                }
                // walk the cyclic subgroup once and fill every power
                let mut powers = vec![0usize];
                let mut x = a;
                while x != 0 {
                    powers.push(x);
                    x = self.mul(x, a);
                }
                let m = powers.len();
                for (k, &p) in powers.iter().enumerate().skip(1) {
                    if orders[p] == 0 {
                        orders[p] = (m / gcd(m, k)) as u32;
                    }
                }
            }
            orders
        })
    }

    pub fn exponent(&self) -> usize {
        self.element_orders()
            .iter()
            .fold(1usize, |acc, &o| lcm(acc, o as usize))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders()
            .iter()
            .any(|&o| o as usize == self.order)
    }

    /// A generating set. For regular representations these are the distinct
    /// nontrivial presentation generators; for tables a greedy set built from elements
    /// of largest order.
    pub fn generators(&self) -> &[Elem] {
        self.generators.get_or_init(|| {
            let orders = self.element_orders().to_vec();
            let mut by_order: Vec<Elem> = (1..self.order).collect();
            by_order.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
            let mut gens = Vec::new();
            let mut sub = Subgroup::trivial(self.order);
            for x in by_order {
                if sub.order() == self.order {
                    break;
                }
                if !sub.contains(x) {
                    gens.push(x);
                    sub = self.closure_extend(&sub, &gens, x);
                }
            }
            gens
        })
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[Elem]) -> Subgroup {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elements = vec![0];
        let gens: Vec<Elem> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i];
            for &g in &gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elements.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_members(member)
    }

    /// Extends `sub` (generated by `gens` minus `new`) by `new`.
    pub(crate) fn closure_extend(&self, sub: &Subgroup, gens: &[Elem], new: Elem) -> Subgroup {
        if sub.contains(new) {
            return sub.clone();
        }
        let mut member = sub.membership().to_vec();
        // every new element is h·w for a word w starting with `new`
        let mut frontier: Vec<Elem> = Vec::new();
        for &h in sub.elements() {
            let y = self.mul(h, new);
            if !member[y] {
                member[y] = true;
                frontier.push(y);
            }
        }
        let mut i = 0;
        while i < frontier.len() {
            let x = frontier[i];
            for &g in gens.iter().chain(std::iter::once(&new)) {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    frontier.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_members(member)
    }

    /// Normal closure of `gens`: the smallest normal subgroup containing them.
    pub fn normal_closure(&self, gens: &[Elem]) -> Subgroup {
        let group_gens = self.generators().to_vec();
        let mut sub_gens: Vec<Elem> = Vec::new();
        let mut sub = Subgroup::trivial(self.order);
        let mut pending: Vec<Elem> = gens.to_vec();
        while let Some(x) = pending.pop() {
            if sub.contains(x) {
                continue;
            }
            sub_gens.push(x);
            sub = self.closure_extend(&sub, &sub_gens, x);
            for &g in &group_gens {
                pending.push(self.conj(g, x));
                pending.push(self.conj(self.inv(g), x));
            }
            // conjugates of earlier generators by new generators are already
            // covered: conjugating by a generator of G suffices
        }
        sub
    }

    pub fn center(&self) -> Subgroup {
        let gens = self.generators();
        let member = (0..self.order)
            .map(|x| gens.iter().all(|&g| self.mul(x, g) == self.mul(g, x)))
            .collect();
        Subgroup::from_members(member)
    }

    /// Centralizer of a set of elements.
    pub fn centralizer(&self, set: &[Elem]) -> Subgroup {
        let member = (0..self.order)
            .map(|x| set.iter().all(|&g| self.mul(x, g) == self.mul(g, x)))
            .collect();
        Subgroup::from_members(member)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        self.power_commutator_subgroup(0)
    }

    /// `G^q[G,G]`: generated by all `q`-th powers and all commutators.
    /// For `q = 0` this is the derived subgroup.
    pub fn power_commutator_subgroup(&self, q: u32) -> Subgroup {
        let mut gens = Vec::new();
        let mut seen = vec![false; self.order];
        seen[0] = true;
        for a in self.elements() {
            let p = self.pow(a, q as i64);
            if !seen[p] {
                seen[p] = true;
                gens.push(p);
            }
            for b in self.elements() {
                let c = self.commutator(a, b);
                if !seen[c] {
                    seen[c] = true;
                    gens.push(c);
                }
            }
        }
        self.normal_closure(&gens)
    }

    /// The subgroup generated by all `n`-th powers.
    pub fn power_subgroup(&self, n: u32) -> Subgroup {
        let gens: Vec<Elem> = self.elements().map(|a| self.pow(a, n as i64)).collect();
        self.normal_closure(&gens)
    }

    pub fn is_normal(&self, n: &Subgroup) -> bool {
        self.generators()
            .iter()
            .all(|&g| n.elements().iter().all(|&x| n.contains(self.conj(g, x))))
    }

    /// Quotient by a normal subgroup, with the canonical projection. Cosets
    /// are numbered by their least element, so the identity coset is `0`.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, Homomorphism)> {
        if n.parent_order() != self.order || !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![u32::MAX; self.order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if coset_of[g] != u32::MAX {
                continue;
            }
            let idx = reps.len() as u32;
            reps.push(g);
            for &x in n.elements() {
                coset_of[self.mul(g, x)] = idx;
            }
        }
        let m = reps.len();
        let mut flat = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                flat[i * m + j] = coset_of[self.mul(a, b)];
            }
        }
        let label = format!("{}/N{}", self.label, n.order());
        let q = FiniteGroup::from_flat_unchecked(label, m, flat)?;
        let proj = Homomorphism::from_images(coset_of.iter().map(|&c| c as usize).collect(), m);
        Ok((q, proj))
    }

    /// The subgroup as a group of its own; element `i` of the result is
    /// `sub.elements()[i]`.
    pub fn subgroup_as_group(&self, sub: &Subgroup, label: impl Into<String>) -> FiniteGroup {
        let elems = sub.elements();
        let m = elems.len();
        let mut index = vec![u32::MAX; self.order];
        for (i, &x) in elems.iter().enumerate() {
            index[x] = i as u32;
        }
        let mut flat = vec![0u32; m * m];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                flat[i * m + j] = index[self.mul(a, b)];
            }
        }
        FiniteGroup::from_flat_unchecked(label.into(), m, flat).expect("subgroup table is a group")
    }

    /// Multiplication table as nested rows.
    pub fn table(&self) -> Vec<Vec<Elem>> {
        self.elements()
            .map(|a| self.elements().map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Stable 64-bit fingerprint of the multiplication table.
    pub fn fingerprint(&self) -> u64 {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.order.hash(&mut h);
        match &self.repr {
            Repr::Table(t) => t.hash(&mut h),
            Repr::Regular { .. } => {
                for a in self.elements() {
                    for b in self.elements() {
                        (self.mul(a, b) as u32).hash(&mut h);
                    }
                }
            }
        }
        h.finish()
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        Self::from_flat_unchecked("1".into(), 1, vec![0]).expect("trivial group")
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_from_table() {
        let g = FiniteGroup::from_table("C2", vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.is_abelian());
    }

    #[test]
    fn idempotent_non_identity_rejected() {
        let err = FiniteGroup::from_table("bad", vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::InvalidGroup(_)));
    }

    #[test]
    fn non_associative_latin_square_rejected() {
        // a loop of order 5 that is not a group
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table("loop", t),
            Err(Error::InvalidGroup(_))
        ));
    }

    #[test]
    fn center_and_derived_of_small_groups() {
        let s3 = builtin("S3").unwrap();
        assert_eq!(s3.center().order(), 1);
        assert_eq!(s3.derived_subgroup().order(), 3);
        let d4 = builtin("D4").unwrap();
        assert_eq!(d4.center().order(), 2);
        let q8 = builtin("Q8").unwrap();
        assert_eq!(q8.derived_subgroup().order(), 2);
        let c6 = builtin("C6").unwrap();
        assert_eq!(c6.center().order(), 6);
        assert_eq!(c6.derived_subgroup().order(), 1);
    }

    #[test]
    fn power_commutator_subgroups() {
        let c4 = builtin("C4").unwrap();
        assert_eq!(c4.power_commutator_subgroup(2).order(), 2);
        let s3 = builtin("S3").unwrap();
        assert_eq!(s3.power_commutator_subgroup(3).order(), 6);
        let d4 = builtin("D4").unwrap();
        assert_eq!(d4.power_commutator_subgroup(0), d4.derived_subgroup());
    }

    #[test]
    fn quotient_edge_cases() {
        let d4 = builtin("D4").unwrap();
        let whole = d4.closure(d4.generators());
        let (q, _) = d4.quotient(&whole).unwrap();
        assert_eq!(q.order(), 1);
        let (q, p) = d4.quotient(&Subgroup::trivial(8)).unwrap();
        assert_eq!(q.order(), 8);
        assert!(p.is_bijective());
        let (q, p) = d4.quotient(&d4.center()).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2);
        assert!(p.is_homomorphism(&d4, &q));
    }

    #[test]
    fn non_normal_quotient_rejected() {
        let s3 = builtin("S3").unwrap();
        let t = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let sub = s3.closure(&[t]);
        assert_eq!(s3.quotient(&sub).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let c5 = builtin("C5").unwrap();
        for a in c5.elements() {
            assert_eq!(c5.mul(c5.pow(a, -2), c5.pow(a, 2)), 0);
            assert_eq!(c5.pow(a, 5), 0);
        }
    }
}
