//! Finitely presented groups: presentations, coset enumeration, an
//! abelianization oracle through Smith normal form, and Tietze
//! simplification.

mod enumerate;
mod snf;
mod tietze;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{AbelianInvariants, Elem, FiniteGroup};

pub use enumerate::{coset_enumerate, CosetTable, EnumerationStatus, DEFAULT_MAX_COSETS};
pub use snf::{smith_diagonal, IntegerMatrix};
pub use tietze::{tietze_simplify, tietze_simplify_with_map};

/// A word in the generators: `k` stands for generator `k - 1`, `-k` for its
/// inverse.
pub type Word = Vec<i32>;

/// Free reduction: cancels adjacent `x x⁻¹` pairs.
pub fn free_reduce(word: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Free and cyclic reduction.
pub fn cyclic_reduce(word: &[i32]) -> Word {
    let mut w = free_reduce(word);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}

pub fn inverse_word(word: &[i32]) -> Word {
    word.iter().rev().map(|&x| -x).collect()
}

/// A finitely presented group `⟨generators | relators⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    #[serde(rename = "generators")]
    generator_labels: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Validates generator references and freely reduces every relator.
    /// Relators that reduce to the empty word are kept, so relator counts
    /// match the families they were generated from.
    pub fn new(generator_labels: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let n = generator_labels.len() as i32;
        for (i, r) in relators.iter().enumerate() {
            if let Some(&bad) = r.iter().find(|&&x| x == 0 || x.abs() > n) {
                return Err(Error::Parse(format!(
                    "relator {i} references generator {bad}"
                )));
            }
        }
        let relators = relators.iter().map(|r| free_reduce(r)).collect();
        Ok(Self {
            generator_labels,
            relators,
        })
    }

    /// Generators named `g1, g2, ...`.
    pub fn with_generator_count(count: usize, relators: Vec<Word>) -> Result<Self> {
        Self::new((1..=count).map(|i| format!("g{i}")).collect(), relators)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Presentation =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(raw.generator_labels, raw.relators)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("presentation serializes")
    }

    pub fn generator_count(&self) -> usize {
        self.generator_labels.len()
    }

    pub fn generator_labels(&self) -> &[String] {
        &self.generator_labels
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Adds relators (freely reduced).
    pub fn with_extra_relators(&self, extra: impl IntoIterator<Item = Word>) -> Self {
        let mut out = self.clone();
        out.relators
            .extend(extra.into_iter().map(|r| free_reduce(&r)));
        out
    }

    /// Evaluates a word in a group, given the image of each generator.
    pub fn evaluate(group: &FiniteGroup, images: &[Elem], word: &[i32]) -> Elem {
        word.iter().fold(0, |acc, &x| {
            let g = images[(x.unsigned_abs() - 1) as usize];
            group.mul(acc, if x > 0 { g } else { group.inv(g) })
        })
    }

    /// True when every relator evaluates to the identity under `images`.
    pub fn relators_hold(&self, group: &FiniteGroup, images: &[Elem]) -> bool {
        self.relators
            .iter()
            .all(|r| Self::evaluate(group, images, r) == 0)
    }

    /// Index of the first relator violated under `images`.
    pub fn first_violated(&self, group: &FiniteGroup, images: &[Elem]) -> Option<usize> {
        self.relators
            .iter()
            .position(|r| Self::evaluate(group, images, r) != 0)
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let cols = self.generator_count();
        let mut m = IntegerMatrix::zeros(self.relators.len(), cols);
        for (i, r) in self.relators.iter().enumerate() {
            for &x in r {
                let j = (x.unsigned_abs() - 1) as usize;
                m.add(i, j, x.signum() as i64);
            }
        }
        m
    }
}

/// The abelianization `Z^free_rank × torsion`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: AbelianInvariants,
}

impl Abelianization {
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }
}

/// Invariant factors of the abelianization, from the Smith normal form of
/// the exponent-sum matrix.
pub fn abelianized_invariants(p: &Presentation) -> Abelianization {
    abelianization_of_matrix(&p.relation_matrix())
}

/// Cokernel of an integer relation matrix (rows are relations).
pub fn abelianization_of_matrix(m: &IntegerMatrix) -> Abelianization {
    let diag = smith_diagonal(m);
    let nonzero: Vec<u64> = diag
        .iter()
        .filter(|d| !num_traits::Zero::is_zero(*d))
        .map(|d| u64::try_from(d.magnitude().clone()).expect("invariant factor fits in u64"))
        .collect();
    Abelianization {
        free_rank: m.cols() - nonzero.len(),
        torsion: AbelianInvariants::from_cyclic_orders(nonzero),
    }
}

/// Realizes a presentation of a finite group as the regular action on the
/// cosets of the trivial subgroup. Returns the group and the element that
/// each generator maps to.
pub fn realize(p: &Presentation, max_cosets: usize) -> Result<(FiniteGroup, Vec<Elem>)> {
    let table = coset_enumerate(p, &[], max_cosets);
    if table.status() != EnumerationStatus::Complete {
        return Err(Error::EnumerationLimit { max_cosets });
    }
    if !table.relators_hold(p) {
        return Err(Error::InternalInconsistency(
            "coset table violates a relator".into(),
        ));
    }
    Ok(realize_table(&table, "fp"))
}

/// Group of a complete coset table over the trivial subgroup.
pub(crate) fn realize_table(table: &CosetTable, label: &str) -> (FiniteGroup, Vec<Elem>) {
    let ncols = 2 * table.generator_count();
    let perms: Vec<Vec<u32>> = (0..ncols)
        .map(|c| {
            (0..table.cosets())
                .map(|k| table.act_column(k, c) as u32)
                .collect()
        })
        .collect();
    let images = (0..table.generator_count())
        .map(|g| table.act_column(0, 2 * g))
        .collect();
    if perms.is_empty() {
        return (FiniteGroup::trivial().with_label(label), images);
    }
    (
        FiniteGroup::from_regular_action(label.to_string(), perms),
        images,
    )
}
