use proptest::prelude::*;

use qtensor_core::fp::{
    abelianized_invariants, coset_enumerate, realize, smith_diagonal, tietze_simplify,
    IntegerMatrix, Presentation,
};
use qtensor_core::group::{abelian_invariants, builtin, direct_product, FiniteGroup};
use qtensor_core::isoclinism::{check, Mode};
use qtensor_core::tensor::{realize_tensor, TensorOptions};

const SMALL: [&str; 8] = ["C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8", "C6"];

fn diagonal(rows: &[Vec<i64>]) -> Vec<u64> {
    smith_diagonal(&IntegerMatrix::from_rows(rows))
        .into_iter()
        .map(|d| u64::try_from(d.magnitude().clone()).unwrap())
        .collect()
}

fn det3(m: &[Vec<i64>]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn dihedral(n: usize) -> Presentation {
    Presentation::with_generator_count(2, vec![vec![1; n], vec![2, 2], vec![1, 2, 1, 2]]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_invariant_under_unimodular_operations(
        rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 4), 3),
        ops in prop::collection::vec((0usize..3, 0usize..3, -3i64..=3), 0..6),
        swap in 0usize..4,
    ) {
        let mut m = rows.clone();
        for &(i, j, k) in &ops {
            if i != j {
                let src = m[i].clone();
                for (c, v) in m[j].iter_mut().enumerate() {
                    *v += k * src[c];
                }
            }
        }
        for r in &mut m {
            r.swap(0, swap);
        }
        prop_assert_eq!(diagonal(&rows), diagonal(&m));
    }

    #[test]
    fn smith_form_divides_and_multiplies_to_determinant(
        rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 3),
    ) {
        let d = diagonal(&rows);
        let nonzero: Vec<u64> = d.iter().copied().filter(|&x| x != 0).collect();
        prop_assert!(nonzero.windows(2).all(|w| w[1] % w[0] == 0));
        let det = det3(&rows).unsigned_abs();
        if det != 0 {
            prop_assert_eq!(nonzero.iter().product::<u64>(), det);
        } else {
            prop_assert!(nonzero.len() < 3);
        }
    }

    #[test]
    fn dihedral_presentations_enumerate(n in 2usize..40) {
        let table = coset_enumerate(&dihedral(n), &[], 100_000);
        prop_assert!(table.is_complete());
        prop_assert_eq!(table.cosets(), 2 * n);
        // the cyclic subgroup <a> has index 2
        let index = coset_enumerate(&dihedral(n), &[vec![1]], 100_000);
        prop_assert_eq!(index.cosets(), 2);
    }

    #[test]
    fn tietze_eliminates_chained_definitions(n in 2usize..20, extra in 1usize..5) {
        // c_1 = a, c_{i+1} = c_i^-1
        let mut relators = dihedral(n).relators().to_vec();
        for i in 1..=extra {
            let c = (2 + i) as i32;
            let prev = if i == 1 { 1 } else { -(c - 1) };
            relators.push(vec![-c, prev]);
        }
        let p = Presentation::with_generator_count(2 + extra, relators).unwrap();
        let s = tietze_simplify(&p);
        prop_assert!(s.generator_count() <= 2);
        prop_assert_eq!(realize(&s, 100_000).unwrap().0.order(), 2 * n);
    }

    #[test]
    fn tietze_preserves_the_group(n in 2usize..20, extra in 1usize..4) {
        // redundant generators c_i = a^i
        let mut relators = dihedral(n).relators().to_vec();
        for i in 1..=extra {
            let mut r = vec![-((2 + i) as i32)];
            r.extend(std::iter::repeat_n(1, i));
            relators.push(r);
        }
        let p = Presentation::with_generator_count(2 + extra, relators).unwrap();
        let s = tietze_simplify(&p);
        prop_assert!(s.generator_count() <= p.generator_count());
        prop_assert_eq!(realize(&s, 100_000).unwrap().0.order(), 2 * n);
    }

    #[test]
    fn quotients_and_closures(idx in 0usize..SMALL.len(), picks in prop::collection::vec(0usize..8, 1..3)) {
        let g = builtin(SMALL[idx]).unwrap();
        let gens: Vec<usize> = picks.iter().map(|&p| p % g.order()).collect();
        let sub = g.closure(&gens);
        prop_assert_eq!(g.order() % sub.order(), 0);
        prop_assert!(gens.iter().all(|&x| sub.contains(x)));
        let z = g.center();
        let (quot, proj) = g.quotient(&z).unwrap();
        prop_assert_eq!(quot.order() * z.order(), g.order());
        prop_assert!(proj.is_homomorphism(&g, &quot));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn abelian_tensor_squares_match_smith_form(
        orders in prop::collection::vec(2usize..=6, 1..=2),
        q in 0u32..=4,
    ) {
        prop_assume!(orders.iter().product::<usize>() <= 12);
        let g = orders
            .iter()
            .map(|n| builtin(&format!("C{n}")).unwrap())
            .reduce(|a, b| direct_product(&a, &b))
            .unwrap();
        let qt = realize_tensor(&g, q, &TensorOptions::default()).unwrap();
        let smith = abelianized_invariants(qt.presentation());
        prop_assert_eq!(smith.free_rank, 0);
        prop_assert_eq!(abelian_invariants(qt.realized()).unwrap(), smith.torsion);
    }

    #[test]
    fn sampled_tensor_identities_hold_for_any_q(
        idx in 0usize..SMALL.len(),
        q in 0u32..=6,
        picks in prop::collection::vec(0usize..8, 4),
    ) {
        let g: FiniteGroup = builtin(SMALL[idx]).unwrap();
        let qt = realize_tensor(&g, q, &TensorOptions::default()).unwrap();
        let t = qt.realized();
        let [a, b, c, d] = [0, 1, 2, 3].map(|i| picks[i] % g.order());
        // [a⊗b, c⊗d] = [a,b]⊗[c,d]
        prop_assert_eq!(
            t.commutator(qt.tensor(a, b), qt.tensor(c, d)),
            qt.tensor(g.commutator(a, b), g.commutator(c, d))
        );
        // conjugation by a symbol acts through [a,b]
        let k = g.commutator(a, b);
        prop_assert_eq!(t.conj(qt.tensor(a, b), qt.tensor(c, d)), qt.tensor(g.conj(k, c), g.conj(k, d)));
        if q > 0 {
            let nabla = qt.nabla();
            prop_assert!(nabla.elements().iter().all(|&x| t.pow(x, q as i64) == 0));
        }
    }

    #[test]
    fn every_relation_is_reflexive(idx in 0usize..SMALL.len(), mode in 0usize..5, q in 0u32..=3) {
        let g = builtin(SMALL[idx]).unwrap();
        let mode = Mode::ALL[mode];
        let w = check(&g, &g, mode, q, &TensorOptions::default()).unwrap();
        prop_assert!(w.is_some_and(|w| w.validate(&g, &g)));
    }
}
