use super::{Elem, FiniteGroup};

/// A subgroup of a group of order `parent_order`, as a sorted element list
/// with a membership mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<Elem>,
    member: Vec<bool>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subgroup(order {} of {}: {:?})",
            self.order(),
            self.parent_order(),
            self.elements
        )
    }
}

impl Subgroup {
    pub fn trivial(parent_order: usize) -> Self {
        let mut member = vec![false; parent_order];
        member[0] = true;
        Self {
            elements: vec![0],
            member,
        }
    }

    pub fn whole(parent_order: usize) -> Self {
        Self {
            elements: (0..parent_order).collect(),
            member: vec![true; parent_order],
        }
    }

    pub(crate) fn from_members(member: Vec<bool>) -> Self {
        let elements = member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
            .collect();
        Self { elements, member }
    }

    /// Wraps an element set, checking closure in `g`.
    pub fn from_elements(g: &FiniteGroup, elements: &[Elem]) -> Option<Self> {
        let mut member = vec![false; g.order()];
        for &x in elements {
            member.get_mut(x).map(|m| *m = true)?;
        }
        if !member[0] {
            return None;
        }
        let s = Self::from_members(member);
        let closed = s
            .elements
            .iter()
            .all(|&a| s.elements.iter().all(|&b| s.member[g.mul(a, b)]));
        closed.then_some(s)
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn membership(&self) -> &[bool] {
        &self.member
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_order(&self) -> usize {
        self.member.len()
    }

    pub fn index(&self) -> usize {
        self.parent_order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.member.len()
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.member[x]
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let member = self
            .member
            .iter()
            .zip(&other.member)
            .map(|(a, b)| *a && *b)
            .collect();
        Self::from_members(member)
    }
}
