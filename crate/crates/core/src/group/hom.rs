use std::collections::VecDeque;

use super::{Elem, FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// A map between two finite groups, stored as the image of every source
/// element. The groups themselves are passed to the methods that need them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    images: Vec<Elem>,
    target_order: usize,
}

impl Homomorphism {
    pub fn from_images(images: Vec<Elem>, target_order: usize) -> Self {
        Self {
            images,
            target_order,
        }
    }

    pub fn identity(order: usize) -> Self {
        Self {
            images: (0..order).collect(),
            target_order: order,
        }
    }

    /// Extends generator images to the whole source group, checking the
    /// homomorphism property on every edge `x -> x·s` of the Cayley graph.
    /// Fails if the images do not define a homomorphism or the generators do
    /// not generate the source.
    pub fn from_generator_images(
        source: &FiniteGroup,
        target: &FiniteGroup,
        gens: &[Elem],
        images: &[Elem],
    ) -> Result<Self> {
        assert_eq!(gens.len(), images.len());
        const UNSET: usize = usize::MAX;
        let mut map = vec![UNSET; source.order()];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let fx = map[x];
            for (&s, &fs) in gens.iter().zip(images) {
                let y = source.mul(x, s);
                let fy = target.mul(fx, fs);
                if map[y] == UNSET {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return Err(Error::InternalInconsistency(format!(
                        "generator images do not define a homomorphism {} -> {}",
                        source.label(),
                        target.label()
                    )));
                }
            }
        }
        if map.contains(&UNSET) {
            return Err(Error::InternalInconsistency(format!(
                "given elements do not generate {}",
                source.label()
            )));
        }
        Ok(Self {
            images: map,
            target_order: target.order(),
        })
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn source_order(&self) -> usize {
        self.images.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    /// Exhaustive check of `f(ab) = f(a)f(b)`.
    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        if self.images.len() != source.order() || self.target_order != target.order() {
            return false;
        }
        source.elements().all(|a| {
            source
                .elements()
                .all(|b| self.apply(source.mul(a, b)) == target.mul(self.apply(a), self.apply(b)))
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target_order];
        self.images
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target_order];
        for &y in &self.images {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.images.len() == self.target_order && self.is_injective()
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup::from_members(self.images.iter().map(|&y| y == 0).collect())
    }

    pub fn image(&self) -> Subgroup {
        let mut member = vec![false; self.target_order];
        for &y in &self.images {
            member[y] = true;
        }
        Subgroup::from_members(member)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Homomorphism) -> Homomorphism {
        Homomorphism {
            images: self.images.iter().map(|&y| other.apply(y)).collect(),
            target_order: other.target_order,
        }
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<Homomorphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Some(Homomorphism {
            images: inv,
            target_order: self.images.len(),
        })
    }
}
