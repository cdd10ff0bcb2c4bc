//! Instances of the invariance, capability and splitting theorems.

use std::collections::HashSet;

use super::{Harness, Item, Job, Outcome};
use crate::error::Result;
use crate::group::{
    abelian_invariants, all_subgroups, builtin, direct_product, find_isomorphism,
    frattini_subgroup, gcd, minimal_generator_count, subgroups_of, FiniteGroup, Homomorphism,
    Subgroup,
};
use crate::isoclinism::{check_weak_with, check_with_kernels, Mode};
use crate::tensor::{is_capable, splitting_alpha, splitting_beta, Analysis};

pub(super) fn jobs<'a>(
    corpus: &'a [FiniteGroup],
    p_groups: &'a [FiniteGroup],
    qs: &'a [u32],
) -> Vec<Job<'a>> {
    let mut jobs = Vec::new();
    for g in corpus {
        for &q in qs {
            jobs.push(Job::new(move |h: &Harness| {
                vec![exterior_center_quotient(h, g, q)]
            }));
        }
    }
    for (i, g) in corpus.iter().enumerate() {
        for k in &corpus[i + 1..] {
            for &q in qs {
                jobs.push(Job::new(move |h: &Harness| isoclinism_pair(h, g, k, q)));
            }
        }
    }
    for g in corpus {
        jobs.push(Job::new(move |h: &Harness| hk_factorizations(h, g)));
        jobs.push(Job::new(move |h: &Harness| central_products(h, g)));
    }
    for k in corpus.iter().filter(|k| !k.is_trivial()) {
        for m in 2..=h_max_order(k) {
            if gcd(k.order(), m) == 1 {
                jobs.push(Job::new(move |h: &Harness| coprime_cyclic_factor(h, k, m)));
            }
        }
    }
    for g in corpus {
        jobs.push(Job::new(move |h: &Harness| vec![capable_quotients(h, g)]));
        jobs.push(Job::new(move |h: &Harness| abelianization_bound(h, g)));
    }
    let p_groups: Vec<&FiniteGroup> = p_groups
        .iter()
        .filter(|g| prime_of(g.order()).is_some())
        .collect();
    for &g in &p_groups {
        if !g.is_cyclic() {
            jobs.push(Job::new(move |h: &Harness| vec![frattini(h, g)]));
        }
    }
    for (i, &g) in p_groups.iter().enumerate() {
        for &k in &p_groups[i + 1..] {
            jobs.push(Job::new(move |h: &Harness| generator_counts(h, g, k)));
        }
    }
    for g in corpus {
        for &q in qs {
            jobs.push(Job::new(move |h: &Harness| per_group(h, g, q)));
        }
    }
    jobs
}

/// The direct products `H × C_m` considered are kept within the base-group
/// cap used by the corpus.
fn h_max_order(k: &FiniteGroup) -> usize {
    crate::group::DEFAULT_MAX_ORDER / k.order()
}

/// `Some(p)` when `n > 1` is a power of the prime `p`.
fn prime_of(n: usize) -> Option<usize> {
    let p = (2..=n).find(|p| n.is_multiple_of(*p))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

fn iso(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    a.order() == b.order() && find_isomorphism(a, b).is_some()
}

fn multiplier(a: &Analysis) -> FiniteGroup {
    a.wedge.realized().subgroup_as_group(&a.multipliers.m, "M")
}

/// `inner ≤ outer` re-indexed as a subgroup of `outer` viewed as a group.
fn restrict(outer: &Subgroup, inner: &Subgroup, outer_group: &FiniteGroup) -> Option<Subgroup> {
    let index: Vec<usize> = inner
        .elements()
        .iter()
        .map(|x| outer.elements().iter().position(|y| y == x))
        .collect::<Option<_>>()?;
    Subgroup::from_elements(outer_group, &index)
}

fn iso_outcome(what: &str, a: &FiniteGroup, b: &FiniteGroup) -> Outcome {
    if iso(a, b) {
        Outcome::Pass(format!("{what} isomorphic (order {})", a.order()))
    } else {
        Outcome::Fail(format!(
            "{what} not isomorphic: orders {} and {}",
            a.order(),
            b.order()
        ))
    }
}

fn exterior_center_quotient(h: &Harness, g: &FiniteGroup, q: u32) -> Item {
    let run = || -> Result<Outcome> {
        let a = h.analysis(g, q)?;
        let subs = subgroups_of(g, &a.tower.e_wedge_q);
        for sub in &subs {
            let (quot, _) = g.quotient(sub)?;
            let b = h.analysis(&quot, q)?;
            if !iso(a.wedge.realized(), b.wedge.realized()) {
                return Ok(Outcome::Fail(format!(
                    "A = {:?}: |G∧G| = {}, |(G/A)∧(G/A)| = {}",
                    sub.elements(),
                    a.wedge.realized().order(),
                    b.wedge.realized().order()
                )));
            }
        }
        Ok(Outcome::Pass(format!(
            "{} subgroups A of E^∧_q(G) (order {})",
            subs.len(),
            a.tower.e_wedge_q.order()
        )))
    };
    Outcome::from(run()).item("wedge.exterior-center-quotient", &[g], Some(q))
}

/// Every pairwise statement on `(G, H)` at `q`; items are emitted only for
/// pairs meeting the hypotheses.
fn isoclinism_pair(h: &Harness, g: &FiniteGroup, k: &FiniteGroup, q: u32) -> Vec<Item> {
    const IDS: [&str; 7] = [
        "multiplier.weak-q-exterior-isoclinism",
        "multiplier.q-exterior-isoclinism",
        "bogomolov.q-exterior-isoclinism",
        "bogomolov.q-isoclinism",
        "bogomolov.hat-q-isoclinism",
        "bogomolov.z-q-subgroups",
        "bogomolov.hat-z-q-subgroups",
    ];
    let (a, b) = match (h.analysis(g, q), h.analysis(k, q)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            return IDS
                .iter()
                .map(|id| Outcome::from_error(&e).item(id, &[g, k], Some(q)))
                .collect();
        }
    };
    let mut items = Vec::new();
    let mut emit = |id: &str, outcome: Outcome| items.push(outcome.item(id, &[g, k], Some(q)));
    let (ta, tb) = (&a.tower, &b.tower);
    let m = || iso_outcome("M^q", &multiplier(&a), &multiplier(&b));
    let b0 = || iso_outcome("B_0^q", &a.multipliers.b0_group, &b.multipliers.b0_group);
    let b0_hat = || {
        iso_outcome(
            "hatted B_0^q",
            &a.multipliers.b0_hat_group,
            &b.multipliers.b0_hat_group,
        )
    };

    match check_weak_with(g, k, q, &ta.e_wedge_q, &tb.e_wedge_q) {
        Ok(Some(_)) => emit(IDS[0], m()),
        Ok(None) => {}
        Err(e) => emit(IDS[0], Outcome::from_error(&e)),
    }
    match check_with_kernels(g, k, Mode::QExterior, q, &ta.e_wedge_q, &tb.e_wedge_q) {
        Ok(Some(_)) => {
            emit(IDS[1], m());
            emit(
                IDS[2],
                match (b0(), b0_hat()) {
                    (Outcome::Pass(_), Outcome::Pass(_)) => {
                        Outcome::Pass("B_0^q and hatted B_0^q isomorphic".into())
                    }
                    (Outcome::Pass(_), other) | (other, _) => other,
                },
            );
        }
        Ok(None) => {}
        Err(e) => emit(IDS[1], Outcome::from_error(&e)),
    }
    for (id, mode, kg, kh, check) in [
        (
            IDS[3],
            Mode::QIsoclinic,
            &ta.z_q,
            &tb.z_q,
            &b0 as &dyn Fn() -> Outcome,
        ),
        (
            IDS[4],
            Mode::HatQIsoclinic,
            &ta.z_hat_q,
            &tb.z_hat_q,
            &b0_hat,
        ),
    ] {
        match check_with_kernels(g, k, mode, q, kg, kh) {
            Ok(Some(_)) => emit(id, check()),
            Ok(None) => {}
            Err(e) => emit(id, Outcome::from_error(&e)),
        }
    }
    for (id, mode, kg, kh, check) in [
        (
            IDS[5],
            Mode::QIsoclinic,
            &ta.z_q,
            &tb.z_q,
            &b0 as &dyn Fn() -> Outcome,
        ),
        (IDS[6], Mode::QIsoclinic, &ta.z_hat_q, &tb.z_hat_q, &b0_hat),
    ] {
        match subgroup_witness(g, k, mode, q, kg, kh) {
            Ok(Some((sa, sb))) => emit(
                id,
                match check() {
                    Outcome::Pass(d) => {
                        Outcome::Pass(format!("witness with |A| = {sa}, |B| = {sb}; {d}"))
                    }
                    other => other,
                },
            ),
            Ok(None) => {}
            Err(e) => emit(id, Outcome::from_error(&e)),
        }
    }
    items
}

/// The first `A ≤ kernel_g`, `B ≤ kernel_h` admitting a compatible pair of
/// isomorphisms; returns `(|A|, |B|)`.
fn subgroup_witness(
    g: &FiniteGroup,
    k: &FiniteGroup,
    mode: Mode,
    q: u32,
    kernel_g: &Subgroup,
    kernel_h: &Subgroup,
) -> Result<Option<(usize, usize)>> {
    for a in subgroups_of(g, kernel_g).iter().rev() {
        for b in subgroups_of(k, kernel_h).iter().rev() {
            if g.order() / a.order() != k.order() / b.order() {
                continue;
            }
            if check_with_kernels(g, k, mode, q, a, b)?.is_some() {
                return Ok(Some((a.order(), b.order())));
            }
        }
    }
    Ok(None)
}

/// Proper subgroups of `G` as groups of their own, with stable labels.
fn proper_subgroups(g: &FiniteGroup) -> Vec<(Subgroup, FiniteGroup)> {
    all_subgroups(g)
        .into_iter()
        .filter(|s| !s.is_whole())
        .enumerate()
        .map(|(i, s)| {
            let hg = g.subgroup_as_group(&s, format!("{}.H{i}", g.label()));
            (s, hg)
        })
        .collect()
}

fn hk_factorizations(h: &Harness, g: &FiniteGroup) -> Vec<Item> {
    let id = "multiplier.hk-factorization";
    let run = || -> Result<Option<Outcome>> {
        let a = h.analysis(g, 0)?;
        let z = &a.tower.z_wedge;
        let m_g = multiplier(&a);
        let central = subgroups_of(g, z);
        let mut count = 0;
        for (hs, hg) in proper_subgroups(g) {
            for ks in &central {
                let meet = hs.intersection(ks);
                if hs.order() * ks.order() / meet.order() != g.order() {
                    continue;
                }
                let b = h.analysis(&hg, 0)?;
                let inside = restrict(&hs, &meet, &hg).expect("intersection lies in H");
                if !inside.is_subset_of(&b.tower.z_wedge) {
                    continue;
                }
                count += 1;
                let ctx = format!("|H| = {}, |K| = {}", hs.order(), ks.order());
                if !iso(&m_g, &multiplier(&b)) {
                    return Ok(Some(Outcome::Fail(format!(
                        "{ctx}: M(G) and M(H) not isomorphic"
                    ))));
                }
                if check_weak_with(g, &hg, 0, z, &b.tower.z_wedge)?.is_none() {
                    return Ok(Some(Outcome::Fail(format!(
                        "{ctx}: no weak exterior isoclinism found"
                    ))));
                }
            }
        }
        Ok((count > 0)
            .then(|| Outcome::Pass(format!("{count} factorizations G = HK with H proper"))))
    };
    match run() {
        Ok(Some(o)) => vec![o.item(id, &[g], Some(0))],
        Ok(None) => Vec::new(),
        Err(e) => vec![Outcome::from_error(&e).item(id, &[g], Some(0))],
    }
}

fn central_products(h: &Harness, g: &FiniteGroup) -> Vec<Item> {
    let id = "multiplier.central-product";
    let run = || -> Result<Option<Outcome>> {
        let a = h.analysis(g, 0)?;
        let m_g = multiplier(&a);
        let cyclic: Vec<Subgroup> = all_subgroups(g)
            .into_iter()
            .filter(|s| g.subgroup_as_group(s, "K").is_cyclic())
            .collect();
        let mut count = 0;
        for (hs, hg) in proper_subgroups(g) {
            for ks in &cyclic {
                let d = hs.intersection(ks);
                if hs.order() * ks.order() / d.order() != g.order() {
                    continue;
                }
                let commute = hs
                    .elements()
                    .iter()
                    .all(|&x| ks.elements().iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
                if !commute || gcd(hs.order() / d.order(), ks.order() / d.order()) != 1 {
                    continue;
                }
                let b = h.analysis(&hg, 0)?;
                let inside = restrict(&hs, &d, &hg).expect("D lies in H");
                if !inside.is_subset_of(&b.tower.z_wedge) {
                    continue;
                }
                count += 1;
                if !iso(&m_g, &multiplier(&b)) {
                    return Ok(Some(Outcome::Fail(format!(
                        "|H| = {}, |K| = {}, |D| = {}: M(G) and M(H) not isomorphic",
                        hs.order(),
                        ks.order(),
                        d.order()
                    ))));
                }
            }
        }
        Ok((count > 0).then(|| {
            Outcome::Pass(format!(
                "{count} central product decompositions with H proper"
            ))
        }))
    };
    match run() {
        Ok(Some(o)) => vec![o.item(id, &[g], Some(0))],
        Ok(None) => Vec::new(),
        Err(e) => vec![Outcome::from_error(&e).item(id, &[g], Some(0))],
    }
}

fn coprime_cyclic_factor(h: &Harness, k: &FiniteGroup, m: usize) -> Vec<Item> {
    let c = builtin(&format!("C{m}")).expect("cyclic builtin");
    let g = direct_product(k, &c);
    let run = || -> Result<Outcome> {
        let (a, b) = (h.analysis(&g, 0)?, h.analysis(k, 0)?);
        Ok(iso_outcome(
            "M(H × C_m) and M(H)",
            &multiplier(&a),
            &multiplier(&b),
        ))
    };
    vec![Outcome::from(run()).item("multiplier.coprime-cyclic-factor", &[&g, k], Some(0))]
}

fn capable_quotients(h: &Harness, g: &FiniteGroup) -> Item {
    let run = || -> Result<Outcome> {
        let z = h.exterior_center(g)?;
        let mut count = 0;
        for n in all_subgroups(g).into_iter().filter(|n| g.is_normal(n)) {
            let (quot, _) = g.quotient(&n)?;
            if !is_capable(&quot, h.opts())? {
                continue;
            }
            count += 1;
            if !z.is_subset_of(&n) {
                return Ok(Outcome::Fail(format!(
                    "N = {:?} has capable quotient but misses Z^∧(G)",
                    n.elements()
                )));
            }
        }
        Ok(Outcome::Pass(format!(
            "{count} normal subgroups with capable quotient"
        )))
    };
    Outcome::from(run()).item("exterior-center.capable-quotient", &[g], Some(0))
}

fn abelianization_bound(h: &Harness, g: &FiniteGroup) -> Vec<Item> {
    let id = "exterior-center.abelianization";
    if g.is_cyclic() {
        return Vec::new();
    }
    let run = || -> Result<Outcome> {
        let derived = g.derived_subgroup();
        let (ab, _) = g.quotient(&derived)?;
        let inv = abelian_invariants(&ab)?;
        let f = inv.factors();
        if f.len() < 2 {
            return Ok(Outcome::Skipped(format!(
                "G/[G,G] = {f:?} has fewer than two invariant factors"
            )));
        }
        let nk = f[f.len() - 2];
        let z = h.exterior_center(g)?;
        if !z.is_subset_of(&g.power_commutator_subgroup(nk as u32)) {
            return Ok(Outcome::Fail(format!(
                "Z^∧(G) = {:?} not in [G,G]G^{nk}",
                z.elements()
            )));
        }
        let capable = is_capable(&ab, h.opts())?;
        if capable && !z.is_subset_of(&derived) {
            return Ok(Outcome::Fail(format!(
                "G/[G,G] capable but Z^∧(G) = {:?} not in [G,G]",
                z.elements()
            )));
        }
        Ok(Outcome::Pass(format!(
            "n_k = {nk}; G/[G,G] {}capable",
            if capable { "" } else { "not " }
        )))
    };
    vec![Outcome::from(run()).item(id, &[g], Some(0))]
}

fn frattini(h: &Harness, g: &FiniteGroup) -> Item {
    let run = || -> Result<Outcome> {
        let z = h.exterior_center(g)?;
        let phi = frattini_subgroup(g);
        Ok(if z.is_subset_of(&phi) {
            Outcome::Pass(format!(
                "|Z^∧(G)| = {}, |Φ(G)| = {}",
                z.order(),
                phi.order()
            ))
        } else {
            Outcome::Fail(format!(
                "Z^∧(G) = {:?} not in Φ(G) = {:?}",
                z.elements(),
                phi.elements()
            ))
        })
    };
    Outcome::from(run()).item("exterior-center.frattini", &[g], Some(0))
}

fn generator_counts(h: &Harness, g: &FiniteGroup, k: &FiniteGroup) -> Vec<Item> {
    let run = || -> Result<Vec<(&'static str, Outcome)>> {
        let (zg, zk) = (h.exterior_center(g)?, h.exterior_center(k)?);
        let (dg, dk) = (minimal_generator_count(g), minimal_generator_count(k));
        let verdict = || {
            if dg == dk {
                Outcome::Pass(format!("d = {dg}"))
            } else {
                Outcome::Fail(format!("d(G) = {dg}, d(H) = {dk}"))
            }
        };
        let mut out = Vec::new();
        if g.order() / zg.order() == k.order() / zk.order()
            && iso(&g.quotient(&zg)?.0, &k.quotient(&zk)?.0)
        {
            out.push(("generators.exterior-center-quotient", verdict()));
        }
        if check_with_kernels(g, k, Mode::QExterior, 0, &zg, &zk)?.is_some() {
            out.push(("generators.exterior-isoclinism", verdict()));
        }
        Ok(out)
    };
    match run() {
        Ok(v) => v
            .into_iter()
            .map(|(id, o)| o.item(id, &[g, k], Some(0)))
            .collect(),
        Err(e) => vec![Outcome::from_error(&e).item(
            "generators.exterior-center-quotient",
            &[g, k],
            Some(0),
        )],
    }
}

/// Per-`(G, q)` statements that need only the analysis of `G`.
fn per_group(h: &Harness, g: &FiniteGroup, q: u32) -> Vec<Item> {
    let a = match h.analysis(g, q) {
        Ok(a) => a,
        Err(e) => {
            return vec![Outcome::from_error(&e).item("center.e-wedge-containments", &[g], Some(q))]
        }
    };
    let mut items = vec![containments(&a).item("center.e-wedge-containments", &[g], Some(q))];
    if g.is_abelian() {
        let t = a.tensor.realized();
        let abelian = if t.is_abelian() {
            Outcome::Pass(format!("|A⊗^qA| = {}", t.order()))
        } else {
            Outcome::Fail("A⊗^qA is not abelian".into())
        };
        items.push(abelian.item("abelian.tensor-square-abelian", &[g], Some(q)));
        items.push(generation(&a).item("abelian.tensor-square-generation", &[g], Some(q)));
    }
    items.push(split_alpha(&a).item("splitting.alpha", &[g], Some(q)));
    items.push(split_odd_q(&a).item("splitting.odd-q", &[g], Some(q)));
    items.push(split_beta(&a).item("splitting.beta", &[g], Some(q)));
    items
}

fn containments(a: &Analysis) -> Outcome {
    let t = &a.tower;
    match (
        t.e_wedge_q.is_subset_of(&t.z_q),
        t.e_wedge_q.is_subset_of(&t.z_hat_q),
    ) {
        (true, true) => Outcome::Pass(format!(
            "|E^∧_q| = {}, |Z_q| = {}, |hat Z_q| = {}",
            t.e_wedge_q.order(),
            t.z_q.order(),
            t.z_hat_q.order()
        )),
        (in_z, _) => Outcome::Fail(format!(
            "E^∧_q = {:?} not contained in {}",
            t.e_wedge_q.elements(),
            if in_z { "hat Z_q" } else { "Z_q" }
        )),
    }
}

fn generation(a: &Analysis) -> Outcome {
    let (g, qt) = (&a.base, &a.tensor);
    let xs = g.generators();
    let mut gens: Vec<usize> = xs
        .iter()
        .flat_map(|&x| xs.iter().map(move |&y| qt.tensor(x, y)))
        .collect();
    gens.extend(xs.iter().filter_map(|&x| qt.hat(x)));
    let span = qt.realized().closure(&gens);
    if span.is_whole() {
        Outcome::Pass(format!(
            "{} generators of A give {} symbols",
            xs.len(),
            gens.len()
        ))
    } else {
        Outcome::Fail(format!(
            "symbols on generators {xs:?} span {} of {} elements",
            span.order(),
            qt.realized().order()
        ))
    }
}

/// Certifies `T ≅ ∇ × W` through `x ↦ (r(x), π(x))` for a retraction `r`.
fn product_certificate(a: &Analysis, r: &Homomorphism) -> Outcome {
    let t = a.tensor.realized();
    let (nabla, w) = (a.tensor.nabla().order(), a.wedge.realized().order());
    if t.order() != nabla * w {
        return Outcome::Fail(format!("|T| = {} but |nabla|·|W| = {nabla}·{w}", t.order()));
    }
    let Some(pi) = a.wedge.projection() else {
        return Outcome::Fail("exterior square has no projection from the tensor square".into());
    };
    let mut seen = HashSet::with_capacity(t.order());
    if let Some(x) = t
        .elements()
        .find(|&x| !seen.insert((r.apply(x), pi.apply(x))))
    {
        return Outcome::Fail(format!("x ↦ (r(x), π(x)) is not injective at x = {x}"));
    }
    Outcome::Pass(format!(
        "|T| = {} = {nabla}·{w}; retraction and projection split T",
        t.order()
    ))
}

fn with_retraction(a: &Analysis, r: Result<Homomorphism>, what: String) -> Outcome {
    match r {
        Ok(r) => match product_certificate(a, &r) {
            Outcome::Pass(d) => Outcome::Pass(format!("{what}: {d}")),
            other => other,
        },
        Err(e) => Outcome::from_error(&e),
    }
}

fn split_alpha(a: &Analysis) -> Outcome {
    let (g, qt) = (&a.base, &a.tensor);
    let t = qt.realized();
    let k = g.elements().fold(1usize, |acc, x| {
        crate::group::lcm(acc, t.element_order(qt.tensor(x, x)))
    });
    if k % 2 == 0 {
        return Outcome::Skipped(format!(
            "lcm of the orders of g⊗g is {k}; no odd k kills every g⊗g"
        ));
    }
    with_retraction(a, splitting_alpha(qt, k as u32), format!("k = {k}"))
}

fn split_odd_q(a: &Analysis) -> Outcome {
    if a.q.is_multiple_of(2) {
        return Outcome::Skipped(format!("q = {} is not odd", a.q));
    }
    with_retraction(
        a,
        splitting_alpha(&a.tensor, a.q),
        format!("k = q = {}", a.q),
    )
}

fn split_beta(a: &Analysis) -> Outcome {
    with_retraction(a, splitting_beta(&a.tensor, 2), "n = 2".into())
}

#[cfg(test)]
mod tests {
    use super::super::{HarnessConfig, Status};
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_of(16), Some(2));
        assert_eq!(prime_of(9), Some(3));
        assert_eq!(prime_of(12), None);
        assert_eq!(prime_of(1), None);
    }

    fn suite(names: &[&str], qs: &[u32]) -> Vec<Item> {
        let groups: Vec<FiniteGroup> = names
            .iter()
            .map(|n| builtin(n).unwrap().with_label(*n))
            .collect();
        let h = Harness::new(HarnessConfig::default()).unwrap();
        h.theorem_suite(&groups, &groups, qs).items
    }

    #[test]
    fn cyclic_quotient_example() {
        let items = suite(&["C4"], &[0]);
        let item = items
            .iter()
            .find(|i| i.id == "wedge.exterior-center-quotient")
            .unwrap();
        assert_eq!(item.status, Status::Pass);
        assert!(item.detail.contains("order 4"), "{}", item.detail);
    }

    #[test]
    fn dihedral_quaternion_bogomolov() {
        let items = suite(&["D4", "Q8"], &[0]);
        let item = items
            .iter()
            .find(|i| i.id == "bogomolov.q-isoclinism")
            .unwrap();
        assert_eq!(item.groups, ["D4", "Q8"]);
        assert_eq!(item.status, Status::Pass);
        let phi = items
            .iter()
            .find(|i| i.id == "exterior-center.frattini" && i.groups == ["Q8"])
            .unwrap();
        assert_eq!(phi.status, Status::Pass);
        assert!(
            phi.detail.contains("|Z^∧(G)| = 2, |Φ(G)| = 2"),
            "{}",
            phi.detail
        );
    }

    #[test]
    fn no_failures_on_small_groups() {
        let items = suite(&["C2", "C3", "S3", "C6"], &[0, 1]);
        for item in &items {
            assert_ne!(item.status, Status::Fail, "{item:?}");
        }
        assert!(items
            .iter()
            .any(|i| i.id == "multiplier.central-product" && i.status == Status::Pass));
    }
}
