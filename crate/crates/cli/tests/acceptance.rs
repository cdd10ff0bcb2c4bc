//! Exit gate: one line per acceptance criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use qtensor_core::fp::abelianized_invariants;
use qtensor_core::group::{
    abelian_invariants, builtin, find_isomorphism, frattini_subgroup, minimal_generator_count,
    subgroups_of, FiniteGroup,
};
use qtensor_core::harness::{
    default_corpus, extended_p_groups, schur_multiplier_by_cohomology, Harness, HarnessConfig,
    Status, REGISTRY,
};
use qtensor_core::isoclinism::{check, Mode};
use qtensor_core::tensor::{
    analyze, exterior_center, realize_tensor, realize_wedge, splitting_alpha, splitting_beta,
};
use qtensor_core::tensor::{Analysis, TensorOptions};

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

const QS: [u32; 4] = [0, 1, 2, 3];

fn opts() -> TensorOptions {
    TensorOptions::default()
}

fn analysis(g: &FiniteGroup, q: u32) -> Result<Analysis, String> {
    analyze(g, q, &opts()).map_err(|e| format!("{} q={q}: {e}", g.label()))
}

fn iso(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    a.order() == b.order() && find_isomorphism(a, b).is_some()
}

fn abelian_oracle() -> Verdict {
    let mut n = 0;
    for g in default_corpus()
        .iter()
        .filter(|g| g.is_abelian() && g.order() <= 16)
    {
        for q in QS {
            let qt = realize_tensor(g, q, &opts()).map_err(|e| e.to_string())?;
            let smith = abelianized_invariants(qt.presentation());
            let realized = abelian_invariants(qt.realized()).map_err(|e| e.to_string())?;
            if smith.free_rank != 0 || smith.torsion != realized {
                return Err(format!(
                    "{} q={q}: SNF {:?} vs realized {realized}",
                    g.label(),
                    smith.torsion
                ));
            }
            n += 1;
        }
    }
    Ok(format!("{n} (group, q) instances agree"))
}

fn lemma_suite(h: &Harness) -> Verdict {
    let corpus = default_corpus();
    let report = h.lemma_suite(&corpus, &QS);
    let ids: Vec<&str> = REGISTRY
        .iter()
        .filter(|s| s.id.starts_with("tensor."))
        .map(|s| s.id)
        .collect();
    if ids.len() != 13 {
        return Err(format!("{} lemma families registered", ids.len()));
    }
    for id in &ids {
        for g in &corpus {
            for q in QS {
                let found: Vec<_> = report
                    .items_for(id)
                    .filter(|i| i.groups == [g.label()] && i.q == Some(q))
                    .collect();
                let [item] = found.as_slice() else {
                    return Err(format!("{id} {} q={q}: {} items", g.label(), found.len()));
                };
                let skip = (*id == "tensor.hat-multiplicative" && q % 2 == 0)
                    || (*id == "tensor.nabla-exponent" && q == 0);
                let want = if skip { Status::Skipped } else { Status::Pass };
                if item.status != want {
                    return Err(format!(
                        "{id} {} q={q}: {:?} ({})",
                        g.label(),
                        item.status,
                        item.detail
                    ));
                }
            }
        }
    }
    Ok(format!(
        "{} families x {} groups x {} q values",
        ids.len(),
        corpus.len(),
        QS.len()
    ))
}

fn nabla_exponent() -> Verdict {
    for g in default_corpus() {
        for q in 1..=4u32 {
            let qt = realize_tensor(&g, q, &opts()).map_err(|e| e.to_string())?;
            let t = qt.realized();
            if let Some(&x) = qt
                .nabla()
                .elements()
                .iter()
                .find(|&&x| !(q as usize).is_multiple_of(t.element_order(x)))
            {
                return Err(format!(
                    "{} q={q}: element of order {} in nabla",
                    g.label(),
                    t.element_order(x)
                ));
            }
        }
    }
    Ok("exp(nabla) divides q for q = 1..4".into())
}

fn cyclic_degeneracy() -> Verdict {
    for n in 1..=12 {
        let g = builtin(&format!("C{n}")).map_err(|e| e.to_string())?;
        let w = realize_wedge(&g, 0, &opts()).map_err(|e| e.to_string())?;
        if w.realized().order() != 1 {
            return Err(format!("|C{n} ∧ C{n}| = {}", w.realized().order()));
        }
    }
    let trivial = builtin("1").map_err(|e| e.to_string())?;
    let mut cyclic = Vec::new();
    for g in default_corpus().into_iter().filter(|g| g.is_cyclic()) {
        match check(&g, &trivial, Mode::QExterior, 0, &opts()) {
            Ok(Some(w)) if w.validate(&g, &trivial) => cyclic.push(g.label().to_string()),
            other => return Err(format!("{} vs 1: {other:?}", g.label())),
        }
    }
    Ok(format!(
        "C_n ∧ C_n = 1 for n <= 12; witnesses for {}",
        cyclic.join(", ")
    ))
}

fn exterior_center_quotients() -> Verdict {
    let mut checked = 0;
    for g in default_corpus() {
        for q in QS {
            let a = analysis(&g, q)?;
            for sub in subgroups_of(&g, &a.tower.e_wedge_q) {
                let (quot, _) = g.quotient(&sub).map_err(|e| e.to_string())?;
                let b = analysis(&quot, q)?;
                if !iso(a.wedge.realized(), b.wedge.realized()) {
                    return Err(format!("{} q={q}, |A| = {}", g.label(), sub.order()));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} quotients G/A certified"))
}

fn bogomolov() -> Verdict {
    let (d4, q8) = (builtin("D4").unwrap(), builtin("Q8").unwrap());
    match check(&d4, &q8, Mode::Classical, 0, &opts()) {
        Ok(Some(w)) if w.validate(&d4, &q8) => {}
        other => return Err(format!("D4 vs Q8: {other:?}")),
    }
    let (a, b) = (analysis(&d4, 0)?, analysis(&q8, 0)?);
    let (ma, mb) = (&a.multipliers, &b.multipliers);
    if !iso(&ma.b0_group, &mb.b0_group) || !iso(&ma.b0_hat_group, &mb.b0_hat_group) {
        return Err(format!(
            "D4/Q8: B0 {} vs {}, hat {} vs {}",
            ma.b0, mb.b0, ma.b0_hat, mb.b0_hat
        ));
    }
    let corpus = default_corpus();
    let mut pairs = 0;
    for q in 1..=3 {
        let an: Vec<Analysis> = corpus
            .iter()
            .map(|g| analysis(g, q))
            .collect::<Result<_, _>>()?;
        for i in 0..corpus.len() {
            for j in i + 1..corpus.len() {
                let (g, h) = (&corpus[i], &corpus[j]);
                let (mi, mj) = (&an[i].multipliers, &an[j].multipliers);
                for (mode, hat) in [(Mode::QIsoclinic, false), (Mode::HatQIsoclinic, true)] {
                    let found = check(g, h, mode, q, &opts()).map_err(|e| e.to_string())?;
                    if found.is_none() {
                        continue;
                    }
                    pairs += 1;
                    let (x, y) = if hat {
                        (&mi.b0_hat_group, &mj.b0_hat_group)
                    } else {
                        (&mi.b0_group, &mj.b0_group)
                    };
                    if !iso(x, y) {
                        return Err(format!(
                            "{} vs {} {mode} q={q}: Bogomolov structures differ",
                            g.label(),
                            h.label()
                        ));
                    }
                }
            }
        }
    }
    Ok(format!(
        "D4/Q8 B0 = {}, B̂0 = {}; {pairs} related pairs at q = 1..3 agree",
        ma.b0, ma.b0_hat
    ))
}

fn d_theorem(h: &Harness) -> Verdict {
    let groups = extended_p_groups();
    let report = h.theorem_suite(&[], &groups, &[]);
    if let Some(bad) = report.items.iter().find(|i| i.status == Status::Fail) {
        return Err(format!("{} {:?}: {}", bad.id, bad.groups, bad.detail));
    }
    let quotients: Vec<FiniteGroup> = groups
        .iter()
        .map(|g| {
            let z = exterior_center(g, &opts()).map_err(|e| e.to_string())?;
            if !g.is_cyclic() && !z.is_subset_of(&frattini_subgroup(g)) {
                return Err(format!(
                    "{}: exterior center not in the Frattini subgroup",
                    g.label()
                ));
            }
            g.quotient(&z).map(|(q, _)| q).map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()?;
    let mut pairs = 0;
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            if groups[i].order() == 1
                || groups[j].order() == 1
                || !iso(&quotients[i], &quotients[j])
            {
                continue;
            }
            pairs += 1;
            let (a, b) = (
                minimal_generator_count(&groups[i]),
                minimal_generator_count(&groups[j]),
            );
            if a != b {
                return Err(format!(
                    "{} vs {}: d = {a} vs {b}",
                    groups[i].label(),
                    groups[j].label()
                ));
            }
        }
    }
    let frattini = report.items_for("exterior-center.frattini").count();
    let noncyclic = groups.iter().filter(|g| !g.is_cyclic()).count();
    if frattini != noncyclic {
        return Err(format!(
            "{frattini} Frattini items for {noncyclic} non-cyclic p-groups"
        ));
    }
    Ok(format!(
        "{} p-groups, {pairs} pairs with isomorphic quotients, {noncyclic} Frattini checks",
        groups.len()
    ))
}

fn splitting() -> Verdict {
    let mut beta = 0;
    for g in default_corpus() {
        for q in [1, 3] {
            let a = analysis(&g, q)?;
            let qt = &a.tensor;
            let t = qt.realized();
            let (nabla, w) = (qt.nabla(), a.wedge.realized());
            if t.order() != nabla.order() * w.order() {
                return Err(format!(
                    "{} q={q}: |T| = {} vs {}·{}",
                    g.label(),
                    t.order(),
                    nabla.order(),
                    w.order()
                ));
            }
            let alpha = splitting_alpha(qt, q).map_err(|e| format!("{} q={q}: {e}", g.label()))?;
            let retraction = alpha.is_homomorphism(t, t)
                && nabla.elements().iter().all(|&x| alpha.apply(x) == x)
                && t.elements().all(|x| nabla.contains(alpha.apply(x)));
            if !retraction {
                return Err(format!(
                    "{} q={q}: alpha is not a retraction onto nabla",
                    g.label()
                ));
            }
            let odd = nabla
                .elements()
                .iter()
                .all(|&x| t.element_order(x) % 2 == 1);
            if odd {
                let b =
                    splitting_beta(qt, 2).map_err(|e| format!("{} q={q}: beta: {e}", g.label()))?;
                if !b.is_homomorphism(t, t) || !nabla.elements().iter().all(|&x| b.apply(x) == x) {
                    return Err(format!("{} q={q}: beta is not a retraction", g.label()));
                }
                beta += 1;
            }
        }
    }
    Ok(format!(
        "alpha on every corpus group at q = 1, 3; beta on {beta} instances with odd exp(nabla)"
    ))
}

fn schur_oracle() -> Verdict {
    let mut parts = Vec::new();
    for name in ["C2xC2", "S3", "D4", "Q8"] {
        let g = builtin(name).unwrap();
        let m = schur_multiplier_by_cohomology(&g).map_err(|e| e.to_string())?;
        let ker = analysis(&g, 0)?.multipliers.m.order();
        if m.order() != ker as u64 {
            return Err(format!("{name}: cohomology {m} vs |ker eta| = {ker}"));
        }
        parts.push(format!("{name} {m}"));
    }
    Ok(parts.join(", "))
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("run{i}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_qtensor"))
            .arg("verify")
            .arg("--out")
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        if !status.success() {
            return Err(format!("verify exited with {status}"));
        }
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    if outputs[0] != outputs[1] {
        return Err("reports differ".into());
    }
    Ok(format!(
        "two reports of {} bytes are identical",
        outputs[0].len()
    ))
}

fn main() -> ExitCode {
    let harness = Harness::new(HarnessConfig::default()).expect("harness");
    let criteria: [Criterion; 10] = [
        ("abelian tensor squares match SNF", Box::new(abelian_oracle)),
        (
            "lemma identity families",
            Box::new(|| lemma_suite(&harness)),
        ),
        ("exponent of nabla divides q", Box::new(nabla_exponent)),
        (
            "cyclic groups are exterior isoclinic to 1",
            Box::new(cyclic_degeneracy),
        ),
        (
            "exterior center quotients",
            Box::new(exterior_center_quotients),
        ),
        ("Bogomolov invariance", Box::new(bogomolov)),
        (
            "generator counts and Frattini containment",
            Box::new(|| d_theorem(&harness)),
        ),
        ("splitting retractions", Box::new(splitting)),
        ("Schur multiplier by cohomology", Box::new(schur_oracle)),
        ("deterministic verify reports", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {} {name}: pass ({detail}; {secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: fail ({detail}; {secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
