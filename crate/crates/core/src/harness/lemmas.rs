//! The thirteen identity families in `G ⊗^q G`, checked exhaustively.

use super::{Harness, Item, Job, Outcome};
use crate::group::{Elem, FiniteGroup};
use crate::tensor::{conjugation_action, Analysis};

/// Exponents used for the identities quantified over `n ∈ Z`.
const EXPONENTS: [i64; 7] = [-3, -2, -1, 0, 1, 2, 3];

type Check = fn(&Analysis) -> Outcome;

const CHECKS: [(&str, Check); 13] = [
    ("tensor.nabla-delta-central", nabla_delta_central),
    ("tensor.nabla-exponent", nabla_exponent),
    ("tensor.action-trivial-on-nabla", action_trivial),
    ("tensor.commutator-of-symbols", commutator_of_symbols),
    ("tensor.swap-inverse", swap_inverse),
    ("tensor.diagonal-expansion", diagonal_expansion),
    ("tensor.commuting-powers", commuting_powers),
    ("tensor.conjugation-by-symbol", conjugation_by_symbol),
    ("tensor.hat-multiplicative", hat_multiplicative),
    ("tensor.symmetric-powers", symmetric_powers),
    ("tensor.derived-diagonal", derived_diagonal),
    ("tensor.inverse-diagonal", inverse_diagonal),
    ("tensor.hat-identity", hat_identity),
];

pub(super) fn jobs<'a>(corpus: &'a [FiniteGroup], qs: &'a [u32]) -> Vec<Job<'a>> {
    let mut jobs = Vec::new();
    for &(id, check) in &CHECKS {
        for g in corpus {
            for &q in qs {
                jobs.push(Job::new(move |h: &Harness| vec![run(h, id, check, g, q)]));
            }
        }
    }
    jobs
}

fn run(h: &Harness, id: &str, check: Check, g: &FiniteGroup, q: u32) -> Item {
    let outcome = match h.analysis(g, q) {
        Ok(a) => check(&a),
        Err(e) => Outcome::from_error(&e),
    };
    outcome.item(id, &[g], Some(q))
}

/// Pass with `count` checked instances, or the first counterexample.
fn exhaust(count: usize, first_failure: Option<String>) -> Outcome {
    match first_failure {
        None => Outcome::Pass(format!("{count} instances checked")),
        Some(c) => Outcome::Fail(format!("counterexample: {c}")),
    }
}

fn pairs(g: &FiniteGroup) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    g.elements()
        .flat_map(move |a| g.elements().map(move |b| (a, b)))
}

fn commuting_pairs(g: &FiniteGroup) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    pairs(g).filter(|&(a, b)| g.mul(a, b) == g.mul(b, a))
}

fn nabla_delta_central(a: &Analysis) -> Outcome {
    let (g, qt) = (&a.base, &a.tensor);
    let t = qt.realized();
    let mut count = 0;
    for (x, y) in pairs(g) {
        let target = qt.tensor(x, y);
        for (u, v) in pairs(g) {
            if u == v && t.commutator(qt.tensor(u, u), target) != 0 {
                return exhaust(count, Some(format!("[{u}⊗{u}, {x}⊗{y}] != 1")));
            }
            let d = t.mul(qt.tensor(u, v), qt.tensor(v, u));
            if t.commutator(d, target) != 0 {
                return exhaust(count, Some(format!("[({u}⊗{v})({v}⊗{u}), {x}⊗{y}] != 1")));
            }
            count += 1;
        }
    }
    for sub in [qt.nabla(), qt.delta()] {
        for &x in sub.elements() {
            if let Some(&y) = sub.elements().iter().find(|&&y| t.mul(x, y) != t.mul(y, x)) {
                return exhaust(
                    count,
                    Some(format!(
                        "elements {x}, {y} of a diagonal subgroup do not commute"
                    )),
                );
            }
        }
    }
    exhaust(count, None)
}

fn nabla_exponent(a: &Analysis) -> Outcome {
    let q = a.q;
    if q == 0 {
        return Outcome::Skipped("vacuous at q = 0".into());
    }
    let t = a.tensor.realized();
    let nabla = a.tensor.nabla();
    let bad = nabla.elements().iter().find(|&&x| t.pow(x, q as i64) != 0);
    exhaust(
        nabla.order(),
        bad.map(|x| format!("x = {x} in nabla has x^{q} != 1")),
    )
}

fn action_trivial(a: &Analysis) -> Outcome {
    let qt = &a.tensor;
    let mut count = 0;
    for g in a.base.elements() {
        let f = match conjugation_action(qt, g) {
            Ok(f) => f,
            Err(e) => return Outcome::from_error(&e),
        };
        for sub in [qt.nabla(), qt.delta()] {
            if let Some(&x) = sub.elements().iter().find(|&&x| f.apply(x) != x) {
                return exhaust(count, Some(format!("g = {g} moves x = {x}")));
            }
            count += sub.order();
        }
    }
    exhaust(count, None)
}

fn commutator_of_symbols(a: &Analysis) -> Outcome {
    let (g, qt) = (&a.base, &a.tensor);
    let t = qt.realized();
    let mut count = 0;
    for (x, y) in pairs(g) {
        for (u, v) in pairs(g) {
            let lhs = t.commutator(qt.tensor(x, y), qt.tensor(u, v));
            if lhs != qt.tensor(g.commutator(x, y), g.commutator(u, v)) {
                return exhaust(count, Some(format!("g = {x}, h = {y}, g1 = {u}, h1 = {v}")));
            }
            count += 1;
        }
    }
    exhaust(count, None)
}

fn swap_inverse(a: &Analysis) -> Outcome {
    let (g, qt) = (&a.base, &a.tensor);
    let t = qt.realized();
    let bad = pairs(g).find(|&(x, y)| {
        let xi = g.inv(x);
        t.inv(t.mul(qt.tensor(xi, y), qt.tensor(y, xi))) != t.mul(qt.tensor(y, x), qt.tensor(x, y))
    });
    exhaust(
        g.order().pow(2),
        bad.map(|(x, y)| format!("g = {x}, g1 = {y}")),
    )
}

fn diagonal_expansion(a: &Analysis) -> Outcome {
    let (g, qt) = (&a.base, &a.tensor);
    let t = qt.realized();
    let bad = pairs(g).find(|&(x, y)| {
        let xy = g.mul(x, y);
        let rhs = t.product([
            qt.tensor(x, x),
            qt.tensor(y, x),
            qt.tensor(x, y),
            qt.tensor(y, y),
        ]);
        qt.tensor(xy, xy) != rhs
    });
    if let Some((x, y)) = bad {
        return exhaust(0, Some(format!("g = {x}, g1 = {y}")));
    }
    if !qt.delta().is_subset_of(qt.nabla()) {
        return exhaust(0, Some("delta is not contained in nabla".into()));
    }
    exhaust(g.order().pow(2), None)
}

fn commuting_powers(a: &Analysis) -> Outcome {
    let (g, qt) = (&a.base, &a.tensor);
    let t = qt.realized();
    let mut count = 0;
    for (x, y) in commuting_pairs(g) {
        for n in EXPONENTS {
            let p = t.pow(qt.tensor(x, y), n);
            if qt.tensor(x, g.pow(y, n)) != p || qt.tensor(g.pow(x, n), y) != p {
                return exhaust(count, Some(format!("g = {x}, h = {y}, n = {n}")));
            }
            count += 1;
        }
    }
    exhaust(count, None)
}

fn conjugation_by_symbol(a: &Analysis) -> Outcome {
    let (g, qt) = (&a.base, &a.tensor);
    let t = qt.realized();
    let mut count = 0;
    for (x, y) in pairs(g) {
        let s = qt.tensor(x, y);
        let c = g.commutator(x, y);
        for (u, v) in pairs(g) {
            if t.conj(s, qt.tensor(u, v)) != qt.tensor(g.conj(c, u), g.conj(c, v)) {
                return exhaust(count, Some(format!("g = {x}, h = {y}, g1 = {u}, h1 = {v}")));
            }
            count += 1;
        }
    }
    exhaust(count, None)
}

fn hat_multiplicative(a: &Analysis) -> Outcome {
    let q = a.q;
    if q.is_multiple_of(2) {
        return Outcome::Skipped(format!("q = {q} is not odd"));
    }
    let (g, qt) = (&a.base, &a.tensor);
    let t = qt.realized();
    let hat = |x: Elem| qt.hat(x).expect("hat symbols exist for odd q");
    let mut count = 0;
    for (x, y) in commuting_pairs(g) {
        if hat(g.mul(x, y)) != t.mul(hat(x), hat(y)) {
            return exhaust(count, Some(format!("g = {x}, h = {y}")));
        }
        count += 1;
    }
    exhaust(count, None)
}

fn symmetric_powers(a: &Analysis) -> Outcome {
    let (g, qt) = (&a.base, &a.tensor);
    let t = qt.realized();
    let mut count = 0;
    for (x, y) in pairs(g) {
        let (xy, yx) = (qt.tensor(x, y), qt.tensor(y, x));
        for n in EXPONENTS {
            let yn = g.pow(y, n);
            let lhs = t.mul(qt.tensor(x, yn), qt.tensor(yn, x));
            let mid = t.pow(t.mul(xy, yx), n);
            let rhs = t.mul(t.pow(xy, n), t.pow(yx, n));
            if lhs != mid || mid != rhs {
                return exhaust(count, Some(format!("g = {x}, h = {y}, n = {n}")));
            }
            count += 1;
        }
    }
    exhaust(count, None)
}

fn derived_diagonal(a: &Analysis) -> Outcome {
    let (g, qt) = (&a.base, &a.tensor);
    let t = qt.realized();
    let derived = g.derived_subgroup();
    let mut count = 0;
    for &x in derived.elements() {
        if qt.tensor(x, x) != 0 {
            return exhaust(count, Some(format!("x = {x}: x⊗x != 1")));
        }
        for y in g.elements() {
            if t.mul(qt.tensor(x, y), qt.tensor(y, x)) != 0 {
                return exhaust(count, Some(format!("x = {x}, g = {y}")));
            }
            count += 1;
        }
    }
    exhaust(count, None)
}

fn inverse_diagonal(a: &Analysis) -> Outcome {
    let (g, qt) = (&a.base, &a.tensor);
    let t = qt.realized();
    let bad = g.elements().find(|&x| {
        let xi = g.inv(x);
        let d = qt.tensor(x, x);
        let lhs = qt.tensor(xi, x);
        lhs != t.inv(d) || lhs != qt.tensor(x, xi) || qt.tensor(xi, xi) != d
    });
    exhaust(g.order(), bad.map(|x| format!("g = {x}")))
}

fn hat_identity(a: &Analysis) -> Outcome {
    let (g, qt) = (&a.base, &a.tensor);
    if let Some(x) = g
        .elements()
        .find(|&x| qt.tensor(0, x) != 0 || qt.tensor(x, 0) != 0)
    {
        return exhaust(0, Some(format!("1⊗{x} or {x}⊗1 is nontrivial")));
    }
    match qt.hat(0) {
        Some(h) if h != 0 => exhaust(0, Some("{(1,1)} != 1".into())),
        Some(_) => Outcome::Pass("{(1,1)} = 1; 1⊗g = g⊗1 = 1 for all g".into()),
        None => Outcome::Pass("no hat symbols at q = 0; 1⊗g = g⊗1 = 1 for all g".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{HarnessConfig, Status};
    use super::*;
    use crate::group::builtin;

    fn suite(names: &[&str], qs: &[u32]) -> Vec<Item> {
        let groups: Vec<FiniteGroup> = names.iter().map(|n| builtin(n).unwrap()).collect();
        let h = Harness::new(HarnessConfig::default()).unwrap();
        h.lemma_suite(&groups, qs).items
    }

    #[test]
    fn c2_at_q2_passes_except_odd_q_identity() {
        let items = suite(&["C2"], &[2]);
        assert_eq!(items.len(), 13);
        for item in &items {
            let expected = if item.id == "tensor.hat-multiplicative" {
                Status::Skipped
            } else {
                Status::Pass
            };
            assert_eq!(item.status, expected, "{item:?}");
        }
    }

    #[test]
    fn trivial_group_passes() {
        let items = suite(&["1"], &[0, 1, 2, 3]);
        assert!(items.iter().all(|i| i.status != Status::Fail));
        assert!(items
            .iter()
            .filter(|i| i.q == Some(3))
            .all(|i| i.status == Status::Pass));
    }

    #[test]
    fn vacuous_exponent_at_q0() {
        let items = suite(&["S3"], &[0, 3]);
        let exp: Vec<Status> = items
            .iter()
            .filter(|i| i.id == "tensor.nabla-exponent")
            .map(|i| i.status)
            .collect();
        assert_eq!(exp, [Status::Skipped, Status::Pass]);
    }
}
