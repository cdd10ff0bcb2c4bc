use super::Suite;

/// A statement exercised by the harness. `text` is the claim as checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Statement {
    pub id: &'static str,
    pub suite: Suite,
    pub text: &'static str,
}

const fn lemma(id: &'static str, text: &'static str) -> Statement {
    Statement {
        id,
        suite: Suite::Lemma,
        text,
    }
}

const fn theorem(id: &'static str, text: &'static str) -> Statement {
    Statement {
        id,
        suite: Suite::Theorem,
        text,
    }
}

const fn oracle(id: &'static str, text: &'static str) -> Statement {
    Statement {
        id,
        suite: Suite::Oracle,
        text,
    }
}

/// Every statement id the suites may emit, in report order.
pub const REGISTRY: &[Statement] = &[
    lemma(
        "tensor.nabla-delta-central",
        "[g⊗g, a⊗b] = 1 and [(g⊗h)(h⊗g), a⊗b] = 1; in particular nabla and delta are abelian",
    ),
    lemma("tensor.nabla-exponent", "exp(nabla^q(G)) divides q for q > 0"),
    lemma("tensor.action-trivial-on-nabla", "G acts trivially on nabla^q(G), hence on delta^q(G)"),
    lemma("tensor.commutator-of-symbols", "[g⊗h, g1⊗h1] = [g,h]⊗[g1,h1]"),
    lemma("tensor.swap-inverse", "((g^-1⊗g1)(g1⊗g^-1))^-1 = (g1⊗g)(g⊗g1)"),
    lemma(
        "tensor.diagonal-expansion",
        "gg1⊗gg1 = (g⊗g)(g1⊗g)(g⊗g1)(g1⊗g1); in particular delta^q(G) is contained in nabla^q(G)",
    ),
    lemma("tensor.commuting-powers", "if [g,h] = 1 then g⊗h^n = (g⊗h)^n = g^n⊗h"),
    lemma("tensor.conjugation-by-symbol", "(g⊗h)(g1⊗h1)(g⊗h)^-1 = ^[g,h](g1⊗h1)"),
    lemma("tensor.hat-multiplicative", "if q is odd and [g,h] = 1 then {(gh,gh)} = {(g,g)}{(h,h)}"),
    lemma("tensor.symmetric-powers", "(g⊗h^n)(h^n⊗g) = ((g⊗h)(h⊗g))^n = (g⊗h)^n(h⊗g)^n"),
    lemma("tensor.derived-diagonal", "if x is in [G,G] then x⊗x = 1 and (x⊗g)(g⊗x) = 1"),
    lemma("tensor.inverse-diagonal", "g^-1⊗g = (g⊗g)^-1 = g⊗g^-1 and g^-1⊗g^-1 = g⊗g"),
    lemma("tensor.hat-identity", "{(1,1)} = 1"),
    theorem(
        "wedge.exterior-center-quotient",
        "if A ≤ E^∧_q(G), B ≤ E^∧_q(H) and G/A ≅ H/B then G∧^qG ≅ H∧^qH (instance H = G/A, B = 1)",
    ),
    theorem(
        "multiplier.weak-q-exterior-isoclinism",
        "if G and H are weak q-exterior isoclinic then M^q(G) ≅ M^q(H)",
    ),
    theorem(
        "multiplier.q-exterior-isoclinism",
        "M^q(G) is invariant under q-exterior isoclinism; at q = 0, exterior isoclinic groups have isomorphic Schur multipliers",
    ),
    theorem(
        "multiplier.hk-factorization",
        "if H ≤ G, K ≤ Z^∧(G), G = HK and H∩K ≤ Z^∧(H) then M(G) ≅ M(H), and G, H are weak exterior isoclinic",
    ),
    theorem(
        "multiplier.central-product",
        "if G is the internal central product of H and K amalgamating D, K is cyclic, (|H/D|, |K/D|) = 1 and D ≤ Z^∧(H), then M(G) ≅ M(H)",
    ),
    theorem(
        "multiplier.coprime-cyclic-factor",
        "if K is cyclic, G = H × K and (|H|, |K|) = 1 then M(G) ≅ M(H)",
    ),
    theorem("exterior-center.capable-quotient", "if G/N is capable then Z^∧(G) ≤ N"),
    theorem("exterior-center.frattini", "for a finite non-cyclic p-group G, Z^∧(G) ≤ Φ(G)"),
    theorem(
        "exterior-center.abelianization",
        "for finite non-cyclic G with G/[G,G] ≅ Z_n1 × ... × Z_nk × Z_nk+1, Z^∧(G) ≤ [G,G]G^nk; if G/[G,G] is capable then Z^∧(G) ≤ [G,G]",
    ),
    theorem(
        "generators.exterior-center-quotient",
        "for finite p-groups G, H with G/Z^∧(G) ≅ H/Z^∧(H), d(G) = d(H)",
    ),
    theorem(
        "generators.exterior-isoclinism",
        "exterior isoclinic finite p-groups have the same minimal number of generators",
    ),
    theorem("bogomolov.q-isoclinism", "B_0^q is invariant under q-isoclinism"),
    theorem("bogomolov.hat-q-isoclinism", "the hatted B_0^q is invariant under hat-q-isoclinism"),
    theorem(
        "bogomolov.z-q-subgroups",
        "if A ⊂ Z_q(G), B ⊂ Z_q(H) carry compatible isomorphisms G/A → H/B and G^q[G,G] → H^q[H,H] then B_0^q(G) ≅ B_0^q(H)",
    ),
    theorem(
        "bogomolov.hat-z-q-subgroups",
        "if A ⊂ hat Z_q(G), B ⊂ hat Z_q(H) carry compatible isomorphisms G/A → H/B and G^q[G,G] → H^q[H,H] then the hatted B_0^q agree",
    ),
    theorem("center.e-wedge-containments", "E^∧_q(G) ≤ Z_q(G) and E^∧_q(G) ≤ hat Z_q(G)"),
    theorem(
        "bogomolov.q-exterior-isoclinism",
        "if G and H are q-exterior isoclinic then B_0^q(G) ≅ B_0^q(H) and the hatted B_0^q agree",
    ),
    theorem("abelian.tensor-square-abelian", "if A is abelian then A⊗^qA is abelian"),
    theorem(
        "abelian.tensor-square-generation",
        "for abelian A generated by x_1..x_n, A⊗^qA is generated by the x_i⊗x_j and {(x_i,x_i)}",
    ),
    theorem(
        "splitting.alpha",
        "if k is odd and (g⊗g)^k = 1 for all g then G⊗^qG ≅ nabla^q(G) × G∧^qG",
    ),
    theorem("splitting.odd-q", "for odd q, G⊗^qG ≅ nabla^q(G) × G∧^qG"),
    theorem(
        "splitting.beta",
        "if nabla^q(G) has unique n-th roots for an even n then G⊗^qG ≅ nabla^q(G) × G∧^qG",
    ),
    oracle(
        "oracle.abelianization",
        "for abelian A, the realized A⊗^qA has the invariant factors of the abelianized presentation",
    ),
    oracle(
        "oracle.schur-multiplier",
        "ker(η: G∧G → G) agrees with the Schur multiplier computed from integral cochains",
    ),
];

/// Claims that are not exercised, with the reason.
pub const OUT_OF_SCOPE: &[(&str, &str)] = &[
    (
        "tensor products of general crossed modules",
        "only the identity crossed module G → G is built",
    ),
    (
        "the exact sequence A∧^qG → G∧^qG → (G/A)∧^q(G/A) → 1",
        "only its isomorphism consequence is checked, by wedge.exterior-center-quotient",
    ),
    (
        "capability of non-cyclic elementary abelian groups",
        "capability is computed from the exterior center, not classified",
    ),
    (
        "finite generation of A⊗^qA for infinite finitely generated A",
        "only finite groups are handled; the generating set is checked on finite instances",
    ),
];

pub fn statement(id: &str) -> Option<&'static Statement> {
    REGISTRY.iter().find(|s| s.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique() {
        let ids: HashSet<&str> = REGISTRY.iter().map(|s| s.id).collect();
        assert_eq!(ids.len(), REGISTRY.len());
    }

    #[test]
    fn thirteen_tensor_identities() {
        assert_eq!(
            REGISTRY.iter().filter(|s| s.suite == Suite::Lemma).count(),
            13
        );
    }
}
