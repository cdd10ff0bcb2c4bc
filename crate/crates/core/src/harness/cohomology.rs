//! The Schur multiplier from integral cochains, independent of any tensor
//! machinery.
//!
//! With trivial coefficients and `n = |G|`, the normalized cochain complex
//! gives `H^2(G; Z/n) ≅ H^2(G; Z)⊗Z/n ⊕ Tor(H^3(G; Z), Z/n)`, both read off
//! the Smith forms of `d^1` and `d^2`. The universal coefficient theorem in
//! homology splits the same group as `Hom(M(G), Z/n) ⊕ Ext(G^ab, Z/n)`, so
//! removing the cyclic factors of `G^ab` leaves `M(G)`.

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fp::{smith_diagonal, IntegerMatrix};
use crate::group::{abelian_invariants, gcd, AbelianInvariants, FiniteGroup};

/// Torsion coefficients (entries `> 1`) of a coboundary matrix.
fn torsion(m: &IntegerMatrix) -> Vec<u64> {
    smith_diagonal(m)
        .into_iter()
        .filter(|d| !d.is_zero())
        .map(|d| {
            d.magnitude()
                .to_u64()
                .expect("cohomology coefficient fits in u64")
        })
        .filter(|&d| d > 1)
        .collect()
}

/// `d^1`: rows `(g, h)`, columns `f(x)`, both over non-identity elements.
fn coboundary_1(g: &FiniteGroup) -> IntegerMatrix {
    let k = g.order() - 1;
    let mut m = IntegerMatrix::zeros(k * k, k);
    for a in 1..g.order() {
        for b in 1..g.order() {
            let row = (a - 1) * k + (b - 1);
            // (df)(a, b) = f(b) - f(ab) + f(a)
            m.add(row, b - 1, 1);
            let ab = g.mul(a, b);
            if ab != 0 {
                m.add(row, ab - 1, -1);
            }
            m.add(row, a - 1, 1);
        }
    }
    m
}

/// `d^2`: rows `(a, b, c)`, columns `f(x, y)`.
fn coboundary_2(g: &FiniteGroup) -> IntegerMatrix {
    let k = g.order() - 1;
    let col = |x: usize, y: usize| (x != 0 && y != 0).then(|| (x - 1) * k + (y - 1));
    let mut m = IntegerMatrix::zeros(k * k * k, k * k);
    for a in 1..g.order() {
        for b in 1..g.order() {
            for c in 1..g.order() {
                let row = ((a - 1) * k + (b - 1)) * k + (c - 1);
                // (df)(a, b, c) = f(b, c) - f(ab, c) + f(a, bc) - f(a, b)
                let terms = [
                    (b, c, 1),
                    (g.mul(a, b), c, -1),
                    (a, g.mul(b, c), 1),
                    (a, b, -1),
                ];
                for (x, y, s) in terms {
                    if let Some(j) = col(x, y) {
                        m.add(row, j, s);
                    }
                }
            }
        }
    }
    m
}

/// Removes each element of `sub` from `multiset` once; `None` if some
/// element is missing.
fn remove_all(mut multiset: Vec<u64>, sub: &[u64]) -> Option<Vec<u64>> {
    for x in sub {
        let i = multiset.iter().position(|y| y == x)?;
        multiset.swap_remove(i);
    }
    multiset.sort_unstable();
    Some(multiset)
}

/// `M(G)` from the second cohomology of `G` with coefficients `Z/|G|`.
pub fn schur_multiplier_by_cohomology(g: &FiniteGroup) -> Result<AbelianInvariants> {
    if g.order() == 1 {
        return Ok(AbelianInvariants::trivial());
    }
    let n = g.order() as u64;
    let h2_integral = torsion(&coboundary_1(g));
    let h3_integral = torsion(&coboundary_2(g));
    let cyclic = |orders: &[u64]| {
        AbelianInvariants::from_cyclic_orders(
            orders.iter().map(|&d| gcd(d as usize, n as usize) as u64),
        )
        .elementary_divisors()
    };
    let mut h2_mod_n = cyclic(&h2_integral);
    h2_mod_n.extend(cyclic(&h3_integral));
    let (ab, _) = g.quotient(&g.derived_subgroup())?;
    let ext = abelian_invariants(&ab)?.elementary_divisors();
    let m = remove_all(h2_mod_n, &ext).ok_or_else(|| {
        Error::InternalInconsistency("H^2(G; Z/n) does not contain Ext(G^ab, Z/n)".into())
    })?;
    Ok(AbelianInvariants::from_cyclic_orders(m))
}
