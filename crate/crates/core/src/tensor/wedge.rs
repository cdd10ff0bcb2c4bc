use serde::{Deserialize, Serialize};

use super::{
    build_wedge_presentation, check_order, realize_presentation, QTensorSquare, TensorOptions,
};
use crate::error::{Error, Result};
use crate::group::{
    abelian_invariants, AbelianInvariants, Elem, FiniteGroup, Homomorphism, Subgroup,
};

/// `G ∧^q G = (G ⊗^q G) / ∇^q(G)`, realized from its own presentation.
#[derive(Clone, Debug)]
pub struct WedgeSquare {
    base_order: usize,
    q: u32,
    realized: FiniteGroup,
    wedge_symbol: Vec<Elem>,
    hat_symbol: Vec<Elem>,
    projection: Option<Homomorphism>,
}

impl WedgeSquare {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn realized(&self) -> &FiniteGroup {
        &self.realized
    }

    /// The element `g ∧ h`.
    #[inline]
    pub fn wedge(&self, g: Elem, h: Elem) -> Elem {
        self.wedge_symbol[g * self.base_order + h]
    }

    /// The image of `{(g,g)}`; `None` at `q = 0`.
    pub fn hat(&self, g: Elem) -> Option<Elem> {
        self.hat_symbol.get(g).copied()
    }

    pub fn symbols(&self) -> Vec<Elem> {
        self.wedge_symbol
            .iter()
            .chain(&self.hat_symbol)
            .copied()
            .collect()
    }

    /// The projection from the tensor square, when built from one.
    pub fn projection(&self) -> Option<&Homomorphism> {
        self.projection.as_ref()
    }
}

/// Realizes `G ∧^q G` directly, without the tensor square.
pub fn realize_wedge(g: &FiniteGroup, q: u32, opts: &TensorOptions) -> Result<WedgeSquare> {
    check_order(g, opts)?;
    let p = build_wedge_presentation(g, q);
    let label = format!("{} ^{q} {}", g.label(), g.label());
    let (realized, symbols) = realize_presentation(&p, opts, label)?;
    let n = g.order();
    Ok(WedgeSquare {
        base_order: n,
        q,
        realized,
        wedge_symbol: symbols[..n * n].to_vec(),
        hat_symbol: symbols[n * n..].to_vec(),
        projection: None,
    })
}

/// The exterior square of a realized tensor square, with the projection
/// `T → T/∇^q`. The projection is checked to be onto with kernel `∇^q`.
pub fn wedge(qt: &QTensorSquare, opts: &TensorOptions) -> Result<WedgeSquare> {
    let mut w = realize_wedge(qt.base(), qt.q(), opts)?;
    let proj = Homomorphism::from_generator_images(
        qt.realized(),
        &w.realized,
        &qt.symbols(),
        &w.symbols(),
    )?;
    if !proj.is_surjective() || proj.kernel() != *qt.nabla() {
        return Err(Error::InternalInconsistency(
            "exterior square is not the quotient by nabla".into(),
        ));
    }
    w.projection = Some(proj);
    Ok(w)
}

/// Structure of a quotient group: invariant factors when abelian, order
/// and exponent otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuotientStructure {
    Abelian(AbelianInvariants),
    NonAbelian { order: usize, exponent: usize },
}

impl QuotientStructure {
    pub fn of(group: &FiniteGroup) -> Self {
        match abelian_invariants(group) {
            Ok(inv) => Self::Abelian(inv),
            Err(_) => Self::NonAbelian {
                order: group.order(),
                exponent: group.exponent(),
            },
        }
    }
}

impl std::fmt::Display for QuotientStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Abelian(inv) => write!(f, "{inv}"),
            Self::NonAbelian { order, exponent } => {
                write!(f, "nonabelian of order {order}, exponent {exponent}")
            }
        }
    }
}

/// `η: G ∧^q G → G` and the multipliers cut out of its kernel.
#[derive(Clone, Debug)]
pub struct MultiplierData {
    pub eta: Homomorphism,
    /// `M^q(G) = ker η`.
    pub m: Subgroup,
    /// Generated by `x ∧ y` over commuting pairs.
    pub m0: Subgroup,
    /// `m0` together with `{(g,g)}` for `g^q = 1`.
    pub m0_hat: Subgroup,
    pub b0_group: FiniteGroup,
    pub b0_hat_group: FiniteGroup,
    pub b0: QuotientStructure,
    pub b0_hat: QuotientStructure,
}

fn eta_images(g: &FiniteGroup, q: u32) -> Vec<Elem> {
    let mut images: Vec<Elem> = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            images.push(g.commutator(a, b));
        }
    }
    if q >= 1 {
        images.extend(g.elements().map(|a| g.pow(a, q as i64)));
    }
    images
}

/// Builds `η` on the symbols, validates it against every relator of the
/// exterior-square presentation, and derives `M^q`, `M_0^q`, `M̂_0^q` and
/// both Bogomolov quotients.
pub fn multipliers(g: &FiniteGroup, w: &WedgeSquare) -> Result<MultiplierData> {
    let q = w.q;
    let images = eta_images(g, q);
    let p = build_wedge_presentation(g, q);
    if let Some(i) = p.first_violated(g, &images) {
        return Err(Error::InternalInconsistency(format!(
            "eta violates relator {i}: {:?}",
            p.relators()[i]
        )));
    }
    let eta = Homomorphism::from_generator_images(&w.realized, g, &w.symbols(), &images)?;
    let m = eta.kernel();
    let mut gens: Vec<Elem> = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            if g.mul(a, b) == g.mul(b, a) {
                gens.push(w.wedge(a, b));
            }
        }
    }
    let m0 = w.realized.closure(&gens);
    if q >= 1 {
        gens.extend(
            g.elements()
                .filter(|&a| g.pow(a, q as i64) == 0)
                .map(|a| w.hat_symbol[a]),
        );
    }
    let m0_hat = w.realized.closure(&gens);
    for (name, sub) in [("M0", &m0), ("M0_hat", &m0_hat)] {
        if !sub.is_subset_of(&m) || !w.realized.is_normal(sub) {
            return Err(Error::InternalInconsistency(format!(
                "{name} is not a normal subgroup of M"
            )));
        }
    }
    let b0_group = bogomolov_quotient(&w.realized, &m, &m0)?;
    let b0_hat_group = bogomolov_quotient(&w.realized, &m, &m0_hat)?;
    Ok(MultiplierData {
        eta,
        b0: QuotientStructure::of(&b0_group),
        b0_hat: QuotientStructure::of(&b0_hat_group),
        b0_group,
        b0_hat_group,
        m,
        m0,
        m0_hat,
    })
}

/// `M / N` for `N ≤ M ≤ W`.
fn bogomolov_quotient(w: &FiniteGroup, m: &Subgroup, n: &Subgroup) -> Result<FiniteGroup> {
    let mg = w.subgroup_as_group(m, "M");
    let inside: Vec<Elem> = m
        .elements()
        .iter()
        .enumerate()
        .filter(|&(_, &x)| n.contains(x))
        .map(|(i, _)| i)
        .collect();
    let sub = Subgroup::from_elements(&mg, &inside)
        .ok_or_else(|| Error::InternalInconsistency("M0 is not a subgroup".into()))?;
    Ok(mg.quotient(&sub)?.0)
}

/// `{g : g ∧ h = 1 for all h}` in the given exterior square.
fn annihilator(g: &FiniteGroup, w: &WedgeSquare) -> Result<Subgroup> {
    let elems: Vec<Elem> = g
        .elements()
        .filter(|&a| g.elements().all(|b| w.wedge(a, b) == 0))
        .collect();
    Subgroup::from_elements(g, &elems)
        .ok_or_else(|| Error::InternalInconsistency("exterior center is not a subgroup".into()))
}

/// The exterior center `Z^∧(G)`, from the classical (`q = 0`) exterior
/// square.
pub fn exterior_center(g: &FiniteGroup, opts: &TensorOptions) -> Result<Subgroup> {
    annihilator(g, &realize_wedge(g, 0, opts)?)
}

/// A group is capable exactly when its exterior center is trivial.
pub fn is_capable(g: &FiniteGroup, opts: &TensorOptions) -> Result<bool> {
    Ok(exterior_center(g, opts)?.is_trivial())
}

/// The five center-like subgroups of `G` attached to `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterTower {
    /// `Z^∧(G)`.
    pub z_wedge: Subgroup,
    /// `Z^∧_q(G)`.
    pub z_wedge_q: Subgroup,
    /// `E^∧_q(G)`; equal to `Z^∧(G)` at `q = 0`.
    pub e_wedge_q: Subgroup,
    /// `Z_q(G)`; equal to `Z(G)` at `q = 0`.
    pub z_q: Subgroup,
    /// `Ẑ_q(G) = {g ∈ Z(G) | g^q = 1}`.
    pub z_hat_q: Subgroup,
}

impl CenterTower {
    /// Assembles the tower from the classical exterior square and the
    /// q-exterior square with its multipliers.
    pub fn from_parts(
        g: &FiniteGroup,
        wedge0: &WedgeSquare,
        wedge_q: &WedgeSquare,
        mult: &MultiplierData,
    ) -> Result<Self> {
        let q = wedge_q.q;
        let z_wedge = annihilator(g, wedge0)?;
        let z_wedge_q = annihilator(g, wedge_q)?;
        let center = g.center();
        let subgroup = |elems: Vec<Elem>, what: &str| {
            Subgroup::from_elements(g, &elems)
                .ok_or_else(|| Error::InternalInconsistency(format!("{what} is not a subgroup")))
        };
        let (e_wedge_q, z_q) = if q == 0 {
            (z_wedge.clone(), center.clone())
        } else {
            let e = z_wedge_q
                .elements()
                .iter()
                .copied()
                .filter(|&a| wedge_q.hat_symbol[a] == 0)
                .collect();
            let z = center
                .elements()
                .iter()
                .copied()
                .filter(|&a| mult.m0.contains(wedge_q.hat_symbol[a]))
                .collect();
            (subgroup(e, "E^q")?, subgroup(z, "Z_q")?)
        };
        let z_hat = center
            .elements()
            .iter()
            .copied()
            .filter(|&a| g.pow(a, q as i64) == 0)
            .collect();
        let z_hat_q = subgroup(z_hat, "Z_hat_q")?;
        Ok(Self {
            z_wedge,
            z_wedge_q,
            e_wedge_q,
            z_q,
            z_hat_q,
        })
    }
}

/// Computes the center tower of `G` at `q` from scratch.
pub fn center_tower(g: &FiniteGroup, q: u32, opts: &TensorOptions) -> Result<CenterTower> {
    let wedge0 = realize_wedge(g, 0, opts)?;
    let wedge_q = if q == 0 {
        wedge0.clone()
    } else {
        realize_wedge(g, q, opts)?
    };
    let mult = multipliers(g, &wedge_q)?;
    CenterTower::from_parts(g, &wedge0, &wedge_q, &mult)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin, find_isomorphism};
    use crate::tensor::realize_tensor;

    fn opts() -> TensorOptions {
        TensorOptions::default()
    }

    #[test]
    fn cyclic_wedges_are_trivial() {
        for n in 1..=12 {
            let g = builtin(&format!("C{n}")).unwrap();
            assert!(
                realize_wedge(&g, 0, &opts())
                    .unwrap()
                    .realized()
                    .is_trivial(),
                "C{n}"
            );
        }
    }

    #[test]
    fn small_wedge_orders() {
        let order = |name: &str| {
            realize_wedge(&builtin(name).unwrap(), 0, &opts())
                .unwrap()
                .realized()
                .order()
        };
        assert_eq!(order("C2xC2"), 2);
        assert_eq!(order("S3"), 3);
        assert_eq!(order("D4"), 4);
        assert_eq!(order("Q8"), 2);
    }

    #[test]
    fn projection_from_tensor() {
        let s3 = builtin("S3").unwrap();
        for q in 0..4 {
            let t = realize_tensor(&s3, q, &opts()).unwrap();
            let w = wedge(&t, &opts()).unwrap();
            assert_eq!(
                t.realized().order(),
                t.nabla().order() * w.realized().order()
            );
        }
    }

    #[test]
    fn multipliers_classical() {
        let m = |name: &str| {
            let g = builtin(name).unwrap();
            multipliers(&g, &realize_wedge(&g, 0, &opts()).unwrap()).unwrap()
        };
        let d4 = m("D4");
        assert_eq!(d4.m.order(), 2);
        assert_eq!(
            d4.b0,
            QuotientStructure::Abelian(AbelianInvariants::trivial())
        );
        assert_eq!(m("Q8").m.order(), 1);
        assert_eq!(m("S3").m.order(), 1);
        assert_eq!(m("C2xC2").m.order(), 2);
        assert_eq!(m("C6").m.order(), 1);
        for name in ["C4", "C2xC2", "C2xC4", "E2^3"] {
            assert!(m(name).b0_group.is_trivial());
        }
    }

    #[test]
    fn eta_image_is_power_commutator_subgroup() {
        for name in ["S3", "D4", "Q8", "C4"] {
            let g = builtin(name).unwrap();
            for q in 0..4 {
                let w = realize_wedge(&g, q, &opts()).unwrap();
                let data = multipliers(&g, &w).unwrap();
                assert_eq!(
                    data.eta.image(),
                    g.power_commutator_subgroup(q),
                    "{name} q={q}"
                );
            }
        }
    }

    #[test]
    fn center_tower_examples() {
        let c5 = builtin("C5").unwrap();
        assert_eq!(center_tower(&c5, 0, &opts()).unwrap().z_wedge.order(), 5);
        let q8 = builtin("Q8").unwrap();
        let t = center_tower(&q8, 0, &opts()).unwrap();
        assert_eq!(t.z_wedge, q8.center());
        let d4 = builtin("D4").unwrap();
        assert!(center_tower(&d4, 0, &opts()).unwrap().z_wedge.is_trivial());
    }

    #[test]
    fn center_tower_containments() {
        for name in ["C2", "C4", "S3", "D4", "Q8", "C2xC2"] {
            let g = builtin(name).unwrap();
            for q in 0..4 {
                let t = center_tower(&g, q, &opts()).unwrap();
                assert!(t.e_wedge_q.is_subset_of(&t.z_wedge_q));
                assert!(t.e_wedge_q.is_subset_of(&t.z_q), "{name} q={q}");
                assert!(t.e_wedge_q.is_subset_of(&t.z_hat_q), "{name} q={q}");
            }
        }
    }

    #[test]
    fn capability() {
        assert!(is_capable(&builtin("C2xC2").unwrap(), &opts()).unwrap());
        assert!(!is_capable(&builtin("C3").unwrap(), &opts()).unwrap());
        assert!(!is_capable(&builtin("Q8").unwrap(), &opts()).unwrap());
        assert!(is_capable(&builtin("D4").unwrap(), &opts()).unwrap());
    }

    #[test]
    fn wedge_of_quotient_by_exterior_center() {
        let q8 = builtin("Q8").unwrap();
        let z = exterior_center(&q8, &opts()).unwrap();
        let (quot, _) = q8.quotient(&z).unwrap();
        let a = realize_wedge(&q8, 0, &opts()).unwrap();
        let b = realize_wedge(&quot, 0, &opts()).unwrap();
        assert!(find_isomorphism(a.realized(), b.realized()).is_some());
    }
}
