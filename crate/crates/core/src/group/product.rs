use super::{FiniteGroup, Homomorphism, Subgroup};
use crate::error::{Error, Result};

/// `G × H`; element `(g, h)` has index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (n, m) = (g.order(), h.order());
    let size = n * m;
    let mut flat = vec![0u32; size * size];
    for a in 0..size {
        let (ga, ha) = (a / m, a % m);
        for b in 0..size {
            let (gb, hb) = (b / m, b % m);
            flat[a * size + b] = (g.mul(ga, gb) * m + h.mul(ha, hb)) as u32;
        }
    }
    let label = format!("{}x{}", g.label(), h.label());
    FiniteGroup::from_flat_unchecked(label, size, flat).expect("direct product is a group")
}

/// A common central subgroup `D` together with its embeddings into the two
/// factors.
pub struct CentralAmalgam<'a> {
    pub shared: &'a FiniteGroup,
    pub into_left: &'a Homomorphism,
    pub into_right: &'a Homomorphism,
}

/// `(G × H) / {(φ(d), ψ(d)⁻¹)}`: the central product amalgamating `D`.
pub fn central_product(
    g: &FiniteGroup,
    h: &FiniteGroup,
    amalgam: &CentralAmalgam<'_>,
) -> Result<FiniteGroup> {
    let d = amalgam.shared;
    for (side, f, target) in [
        ("left", amalgam.into_left, g),
        ("right", amalgam.into_right, h),
    ] {
        if f.source_order() != d.order() || f.target_order() != target.order() {
            return Err(Error::InvalidAmalgam(format!(
                "{side} embedding has wrong shape"
            )));
        }
        if !f.is_homomorphism(d, target) || !f.is_injective() {
            return Err(Error::InvalidAmalgam(format!(
                "{side} embedding is not an injective homomorphism"
            )));
        }
        let center = target.center();
        if !f.images().iter().all(|&x| center.contains(x)) {
            return Err(Error::InvalidAmalgam(format!(
                "{side} image is not central"
            )));
        }
    }
    let prod = direct_product(g, h);
    let m = h.order();
    let diag: Vec<usize> = d
        .elements()
        .map(|x| amalgam.into_left.apply(x) * m + h.inv(amalgam.into_right.apply(x)))
        .collect();
    let n =
        Subgroup::from_elements(&prod, &diag).expect("diagonal of central images is a subgroup");
    let (q, _) = prod.quotient(&n)?;
    Ok(q.with_label(format!("{}o{}", g.label(), h.label())))
}
