use crate::fp::{realize, Presentation, DEFAULT_MAX_COSETS};
use crate::group::{builtin, central_product, CentralAmalgam, FiniteGroup, Homomorphism};

const DEFAULT: [&str; 12] = [
    "1", "C2", "C3", "C4", "C2xC2", "C6", "S3", "D4", "Q8", "C2xC4", "E2^3", "D6",
];

/// The groups every suite runs over.
pub fn default_corpus() -> Vec<FiniteGroup> {
    DEFAULT
        .iter()
        .map(|name| builtin(name).expect("corpus builtin").with_label(*name))
        .collect()
}

fn from_relators(label: &str, gens: &[&str], relators: &[&[i32]]) -> FiniteGroup {
    let p = Presentation::new(
        gens.iter().map(|s| s.to_string()).collect(),
        relators.iter().map(|r| r.to_vec()).collect(),
    )
    .expect("corpus presentation");
    realize(&p, DEFAULT_MAX_COSETS)
        .expect("corpus presentation is finite")
        .0
        .with_label(label)
}

/// `D4 ∘ C4`, amalgamating the centers.
fn pauli() -> FiniteGroup {
    let d4 = builtin("D4").expect("D4");
    let c4 = builtin("C4").expect("C4");
    let c2 = builtin("C2").expect("C2");
    let center = d4.center().elements()[1];
    let into_left =
        Homomorphism::from_generator_images(&c2, &d4, &[1], &[center]).expect("center embedding");
    let involution = c4
        .elements()
        .find(|&x| c4.element_order(x) == 2)
        .expect("C4 involution");
    let into_right =
        Homomorphism::from_generator_images(&c2, &c4, &[1], &[involution]).expect("C4 embedding");
    let amalgam = CentralAmalgam {
        shared: &c2,
        into_left: &into_left,
        into_right: &into_right,
    };
    central_product(&d4, &c4, &amalgam)
        .expect("central product")
        .with_label("D4oC4")
}

/// Every group of prime-power order at most 16, one per isomorphism type.
pub fn extended_p_groups() -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = [
        "C2", "C3", "C4", "C2xC2", "C5", "C7", "C8", "C2xC4", "E2^3", "D4", "Q8", "C9", "E3^2",
        "C11", "C13", "C16", "C8xC2", "C4xC4", "C4xC2xC2", "E2^4", "D8", "D4xC2", "Q8xC2",
    ]
    .iter()
    .map(|name| builtin(name).expect("corpus builtin").with_label(*name))
    .collect();
    // a = 1, b = 2, c = 3; negative for inverses
    out.push(from_relators(
        "Q16",
        &["a", "b"],
        &[&[1; 8], &[2, 2, -1, -1, -1, -1], &[-2, 1, 2, 1]],
    ));
    out.push(from_relators(
        "M16",
        &["a", "b"],
        &[&[1; 8], &[2, 2], &[2, 1, -2, -1, -1, -1, -1, -1]],
    ));
    out.push(from_relators(
        "SD16",
        &["a", "b"],
        &[&[1; 8], &[2, 2], &[2, 1, 2, -1, -1, -1]],
    ));
    out.push(from_relators(
        "C4:C4",
        &["a", "b"],
        &[&[1; 4], &[2; 4], &[-2, 1, 2, 1]],
    ));
    out.push(from_relators(
        "(C2xC2):C4",
        &["a", "b", "c"],
        &[
            &[1; 4],
            &[2, 2],
            &[3, 3],
            &[2, 3, 2, 3],
            &[-1, 2, 1, 3],
            &[-1, 3, 1, 2],
        ],
    ));
    out.push(pauli());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::find_isomorphism;

    #[test]
    fn default_corpus_orders() {
        let orders: Vec<usize> = default_corpus().iter().map(FiniteGroup::order).collect();
        assert_eq!(orders, [1, 2, 3, 4, 4, 6, 6, 8, 8, 8, 8, 12]);
    }

    #[test]
    fn extended_groups_are_distinct_p_groups() {
        let groups = extended_p_groups();
        assert_eq!(groups.len(), 29);
        assert_eq!(groups.iter().filter(|g| g.order() == 16).count(), 14);
        assert_eq!(groups.iter().filter(|g| g.order() == 8).count(), 5);
        for (i, g) in groups.iter().enumerate() {
            for h in &groups[i + 1..] {
                if g.order() == h.order() {
                    assert!(
                        find_isomorphism(g, h).is_none(),
                        "{} ~ {}",
                        g.label(),
                        h.label()
                    );
                }
            }
        }
    }
}
