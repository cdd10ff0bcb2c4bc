//! The q-tensor square `G ⊗^q G`, built literally from its defining
//! relations and realized by coset enumeration, together with everything
//! derived from it: the exterior square, the multipliers, the center-like
//! subgroups of `G` and the splitting retractions onto `∇^q(G)`.

mod report;
mod splitting;
mod wedge;

use crate::error::{Error, Result};
use crate::fp::{realize, tietze_simplify_with_map, Presentation, Word, DEFAULT_MAX_COSETS};
use crate::group::{Elem, FiniteGroup, Subgroup, DEFAULT_MAX_ORDER};

pub use report::{analyze, Analysis, InvariantReport};
pub use splitting::{conjugation_action, splitting_alpha, splitting_beta};
pub use wedge::{
    center_tower, exterior_center, is_capable, multipliers, realize_wedge, wedge, CenterTower,
    MultiplierData, QuotientStructure, WedgeSquare,
};

/// Limits and switches shared by every realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorOptions {
    pub max_cosets: usize,
    /// Largest base group accepted.
    pub max_order: usize,
    /// Tietze-simplify presentations before enumerating.
    pub simplify: bool,
}

impl Default for TensorOptions {
    fn default() -> Self {
        Self {
            max_cosets: DEFAULT_MAX_COSETS,
            max_order: DEFAULT_MAX_ORDER,
            simplify: false,
        }
    }
}

/// 1-based generator index of the symbol `g ⊗ h`.
#[inline]
pub fn tensor_generator(n: usize, g: Elem, h: Elem) -> i32 {
    (g * n + h + 1) as i32
}

/// 1-based generator index of the symbol `{(g,g)}`.
#[inline]
pub fn hat_generator(n: usize, g: Elem) -> i32 {
    (n * n + g + 1) as i32
}

fn binomial2(q: u32) -> i64 {
    let q = q as i64;
    q * (q - 1) / 2
}

/// The defining presentation of `G ⊗^q G`: generators `t_{g,h}` for every
/// pair and, when `q ≥ 1`, `y_g` for every element; every instance of every
/// defining relation becomes one relator `lhs · rhs⁻¹`.
pub fn build_presentation(g: &FiniteGroup, q: u32) -> Presentation {
    let n = g.order();
    let t = |a: Elem, b: Elem| tensor_generator(n, a, b);
    let y = |a: Elem| hat_generator(n, a);
    let mut labels: Vec<String> = Vec::with_capacity(n * n + n);
    for a in g.elements() {
        for b in g.elements() {
            labels.push(format!("t_{a}_{b}"));
        }
    }
    let mut relators: Vec<Word> = Vec::new();
    // gg₁ ⊗ h = (^g g₁ ⊗ ^g h)(g ⊗ h)
    for a in g.elements() {
        for a1 in g.elements() {
            for h in g.elements() {
                relators.push(vec![
                    t(g.mul(a, a1), h),
                    -t(a, h),
                    -t(g.conj(a, a1), g.conj(a, h)),
                ]);
            }
        }
    }
    // g ⊗ hh₁ = (g ⊗ h)(^h g ⊗ ^h h₁)
    for a in g.elements() {
        for h in g.elements() {
            for h1 in g.elements() {
                relators.push(vec![
                    t(a, g.mul(h, h1)),
                    -t(g.conj(h, a), g.conj(h, h1)),
                    -t(a, h),
                ]);
            }
        }
    }
    if q >= 1 {
        labels.extend(g.elements().map(|a| format!("y_{a}")));
        // {(g,g)} (g₁ ⊗ h₁) {(g,g)}⁻¹ = ^{g^q} g₁ ⊗ ^{g^q} h₁
        for a in g.elements() {
            let c = g.pow(a, q as i64);
            for a1 in g.elements() {
                for h1 in g.elements() {
                    relators.push(vec![
                        y(a),
                        t(a1, h1),
                        -y(a),
                        -t(g.conj(c, a1), g.conj(c, h1)),
                    ]);
                }
            }
        }
        // {(gg₁,gg₁)} = {(g,g)} Π_{i=1}^{q-1} (g⁻¹ ⊗ (^{g^{1-q+i}} g₁)^i) {(g₁,g₁)}
        for a in g.elements() {
            let a_inv = g.inv(a);
            for a1 in g.elements() {
                let mut rhs = vec![y(a)];
                for i in 1..q as i64 {
                    let conj = g.conj(g.pow(a, 1 - q as i64 + i), a1);
                    rhs.push(t(a_inv, g.pow(conj, i)));
                }
                rhs.push(y(a1));
                let mut r = vec![y(g.mul(a, a1))];
                r.extend(rhs.iter().rev().map(|&x| -x));
                relators.push(r);
            }
        }
        // [{(g,g)}, {(g₁,g₁)}] = g^q ⊗ g₁^q
        for a in g.elements() {
            for a1 in g.elements() {
                let (p, p1) = (g.pow(a, q as i64), g.pow(a1, q as i64));
                relators.push(vec![y(a), y(a1), -y(a), -y(a1), -t(p, p1)]);
            }
        }
        // {([g,h],[g,h])} = (g ⊗ h)^q
        for a in g.elements() {
            for h in g.elements() {
                let mut r = vec![y(g.commutator(a, h))];
                r.extend(std::iter::repeat_n(-t(a, h), q as usize));
                relators.push(r);
            }
        }
    }
    Presentation::new(labels, relators).expect("generated relators reference valid generators")
}

/// The presentation of `G ∧^q G`: the tensor presentation plus `t_{g,g}`.
pub fn build_wedge_presentation(g: &FiniteGroup, q: u32) -> Presentation {
    let n = g.order();
    build_presentation(g, q)
        .with_extra_relators(g.elements().map(|a| vec![tensor_generator(n, a, a)]))
}

pub(crate) fn check_order(g: &FiniteGroup, opts: &TensorOptions) -> Result<()> {
    if g.order() > opts.max_order {
        return Err(Error::OrderLimit {
            order: g.order(),
            limit: opts.max_order,
        });
    }
    Ok(())
}

/// Realizes `p`, optionally through a Tietze-simplified copy. Returns the
/// group and the image of every original generator. With simplification
/// the images are checked to satisfy every original relator and to generate
/// the realized group.
pub(crate) fn realize_presentation(
    p: &Presentation,
    opts: &TensorOptions,
    label: String,
) -> Result<(FiniteGroup, Vec<Elem>)> {
    if !opts.simplify {
        let (group, images) = realize(p, opts.max_cosets)?;
        return Ok((group.with_label(label), images));
    }
    let (simple, map) = tietze_simplify_with_map(p);
    let (group, images) = realize(&simple, opts.max_cosets)?;
    let symbols: Vec<Elem> = map
        .iter()
        .map(|w| Presentation::evaluate(&group, &images, w))
        .collect();
    if let Some(i) = p.first_violated(&group, &symbols) {
        return Err(Error::InternalInconsistency(format!(
            "simplified presentation violates relator {i}"
        )));
    }
    if group.closure(&symbols).order() != group.order() {
        return Err(Error::InternalInconsistency(
            "simplified presentation has extra generators".into(),
        ));
    }
    Ok((group.with_label(label), symbols))
}

/// `G ⊗^q G` realized as a finite group, with the element of every symbol.
#[derive(Clone, Debug)]
pub struct QTensorSquare {
    base: FiniteGroup,
    q: u32,
    presentation: Presentation,
    realized: FiniteGroup,
    tensor_symbol: Vec<Elem>,
    hat_symbol: Vec<Elem>,
    nabla: Subgroup,
    delta: Subgroup,
}

impl QTensorSquare {
    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn realized(&self) -> &FiniteGroup {
        &self.realized
    }

    /// The element `g ⊗ h`.
    #[inline]
    pub fn tensor(&self, g: Elem, h: Elem) -> Elem {
        self.tensor_symbol[g * self.base.order() + h]
    }

    /// The element `{(g,g)}`; `None` at `q = 0`.
    pub fn hat(&self, g: Elem) -> Option<Elem> {
        self.hat_symbol.get(g).copied()
    }

    /// Images of all presentation generators, in generator order.
    pub fn symbols(&self) -> Vec<Elem> {
        self.tensor_symbol
            .iter()
            .chain(&self.hat_symbol)
            .copied()
            .collect()
    }

    /// `∇^q(G)`: the normal closure of the diagonal symbols `g ⊗ g`.
    pub fn nabla(&self) -> &Subgroup {
        &self.nabla
    }

    /// `Δ^q(G)`: the normal closure of `(g ⊗ h)(h ⊗ g)`.
    pub fn delta(&self) -> &Subgroup {
        &self.delta
    }
}

/// Builds and realizes `G ⊗^q G`.
pub fn realize_tensor(g: &FiniteGroup, q: u32, opts: &TensorOptions) -> Result<QTensorSquare> {
    check_order(g, opts)?;
    let presentation = build_presentation(g, q);
    let label = format!("{} (x)^{q} {}", g.label(), g.label());
    let (realized, symbols) = realize_presentation(&presentation, opts, label)?;
    let n = g.order();
    let tensor_symbol = symbols[..n * n].to_vec();
    let hat_symbol = symbols[n * n..].to_vec();
    let diagonal: Vec<Elem> = g.elements().map(|a| tensor_symbol[a * n + a]).collect();
    let nabla = realized.normal_closure(&diagonal);
    let mut swapped = Vec::with_capacity(n * n);
    for a in g.elements() {
        for b in g.elements() {
            swapped.push(realized.mul(tensor_symbol[a * n + b], tensor_symbol[b * n + a]));
        }
    }
    let delta = realized.normal_closure(&swapped);
    Ok(QTensorSquare {
        base: g.clone(),
        q,
        presentation,
        realized,
        tensor_symbol,
        hat_symbol,
        nabla,
        delta,
    })
}
