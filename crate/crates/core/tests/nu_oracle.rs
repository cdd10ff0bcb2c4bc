//! Independent check of |G ⊗ G| through the group ν(G): generated by two
//! copies x_g, y_g of G subject to the relations of both copies and
//! [x_a, y_b]^{x_c} = [x_{a^c}, y_{b^c}] = [x_a, y_b]^{y_c}. The subgroup
//! [G, G^φ] is isomorphic to the nonabelian tensor square.
//!
//! This uses the right-action conventions [u, v] = u⁻¹v⁻¹uv and
//! w^z = z⁻¹wz, unlike the library, so the two constructions share no code
//! beyond coset enumeration.

use qtensor_core::fp::{realize, Presentation, Word};
use qtensor_core::group::{builtin, FiniteGroup};
use qtensor_core::tensor::{realize_tensor, TensorOptions};

fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&c| -c).collect()
}

fn comm(u: &[i32], v: &[i32]) -> Word {
    [inverse(u), inverse(v), u.to_vec(), v.to_vec()].concat()
}

fn conj(w: &[i32], z: i32) -> Word {
    [vec![-z], w.to_vec(), vec![z]].concat()
}

fn nu_order_of_commutator_subgroup(g: &FiniteGroup) -> usize {
    let n = g.order();
    let x = |a: usize| (a + 1) as i32;
    let y = |a: usize| (n + a + 1) as i32;
    let mut rels: Vec<Word> = vec![vec![x(0)], vec![y(0)]];
    for a in g.elements() {
        for b in g.elements() {
            rels.push(vec![x(a), x(b), -x(g.mul(a, b))]);
            rels.push(vec![y(a), y(b), -y(g.mul(a, b))]);
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            let base = comm(&[x(a)], &[y(b)]);
            for c in g.elements() {
                let ci = g.inv(c);
                let (ac, bc) = (g.mul(g.mul(ci, a), c), g.mul(g.mul(ci, b), c));
                let mid = inverse(&comm(&[x(ac)], &[y(bc)]));
                rels.push([conj(&base, x(c)), mid.clone()].concat());
                rels.push([conj(&base, y(c)), mid].concat());
            }
        }
    }
    let p = Presentation::with_generator_count(2 * n, rels).unwrap();
    let (nu, images) = realize(&p, 2_000_000).unwrap();
    assert_eq!(nu.order() % (n * n), 0);
    let gens: Vec<usize> = g
        .elements()
        .flat_map(|a| g.elements().map(move |b| (a, b)))
        .map(|(a, b)| nu.commutator(nu.inv(images[a]), nu.inv(images[n + b])))
        .collect();
    nu.closure(&gens).order()
}

#[test]
fn tensor_square_orders_match_nu() {
    for name in ["C2", "C4", "C2xC2", "S3", "D4", "Q8", "C2xC4"] {
        let g = builtin(name).unwrap();
        let ours = realize_tensor(&g, 0, &TensorOptions::default())
            .unwrap()
            .realized()
            .order();
        assert_eq!(nu_order_of_commutator_subgroup(&g), ours, "{name}");
    }
}
