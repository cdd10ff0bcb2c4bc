//! The isoclinism relations: a witness is a pair of isomorphisms
//! `α: G/N → H/M` and `β: S(G) → S(H)` compatible with commutators (and
//! with `q`-th powers in the `q`-variants).

use std::collections::HashSet;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{for_each_isomorphism, subgroups_of, Elem, FiniteGroup, Homomorphism, Subgroup};
use crate::tensor::{center_tower, TensorOptions};

/// Cap on the number of `(A, B)` pairs examined by [`check_weak`].
pub const WEAK_PAIR_CAP: usize = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// `Z(·)` and `[·,·]`.
    Classical,
    /// `Z_q(·)` and `(·)^q[·,·]`.
    QIsoclinic,
    /// `Ẑ_q(·)` and `(·)^q[·,·]`.
    HatQIsoclinic,
    /// `E^∧_q(·)` and `(·)^q[·,·]`.
    QExterior,
    /// Subgroups `A ≤ E^∧_q(G)`, `B ≤ E^∧_q(H)` and `(·)^q[·,·]`.
    WeakQExterior,
}

impl Mode {
    pub const ALL: [Mode; 5] = [
        Mode::Classical,
        Mode::QIsoclinic,
        Mode::HatQIsoclinic,
        Mode::QExterior,
        Mode::WeakQExterior,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Classical => "classical",
            Mode::QIsoclinic => "q-isoclinic",
            Mode::HatQIsoclinic => "hat-q-isoclinic",
            Mode::QExterior => "q-exterior",
            Mode::WeakQExterior => "weak-q-exterior",
        }
    }

    /// Whether the power condition `β(g^q) = h^q` is part of the relation.
    fn uses_powers(self) -> bool {
        self != Mode::Classical
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" | "isoclinic" => Ok(Mode::Classical),
            "q-isoclinic" | "q" => Ok(Mode::QIsoclinic),
            "hat-q-isoclinic" | "hat-q" => Ok(Mode::HatQIsoclinic),
            "q-exterior" | "exterior" => Ok(Mode::QExterior),
            "weak-q-exterior" | "weak" => Ok(Mode::WeakQExterior),
            other => Err(Error::Parse(format!("unknown isoclinism mode `{other}`"))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A certificate for one of the relations. `alpha` acts on the quotients
/// `G/kernel_g → H/kernel_h` (cosets numbered as by
/// [`FiniteGroup::quotient`]); `beta` acts on positions in the sorted
/// element lists of `sub_g` and `sub_h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoclinismWitness {
    pub mode: Mode,
    pub q: u32,
    pub kernel_g: Subgroup,
    pub kernel_h: Subgroup,
    pub sub_g: Subgroup,
    pub sub_h: Subgroup,
    pub alpha: Homomorphism,
    pub beta: Homomorphism,
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    mode: Mode,
    q: u32,
    alpha: &'a [Elem],
    beta: &'a [Elem],
    beta_domain: &'a [Elem],
    beta_codomain: &'a [Elem],
    #[serde(rename = "A")]
    a: &'a [Elem],
    #[serde(rename = "B")]
    b: &'a [Elem],
}

impl IsoclinismWitness {
    /// Re-checks bijectivity and the compatibility conditions over every
    /// pair of elements of `G` and every choice of representatives in `H`.
    pub fn validate(&self, g: &FiniteGroup, h: &FiniteGroup) -> bool {
        let Ok((qg, pg)) = g.quotient(&self.kernel_g) else {
            return false;
        };
        let Ok((qh, ph)) = h.quotient(&self.kernel_h) else {
            return false;
        };
        if !self.alpha.is_bijective() || !self.alpha.is_homomorphism(&qg, &qh) {
            return false;
        }
        let sg = g.subgroup_as_group(&self.sub_g, "S");
        let sh = h.subgroup_as_group(&self.sub_h, "S");
        if !self.beta.is_bijective() || !self.beta.is_homomorphism(&sg, &sh) {
            return false;
        }
        let pos_g = positions(&self.sub_g, g.order());
        // the elements of H over each coset of H/kernel_h
        let mut fibers: Vec<Vec<Elem>> = vec![Vec::new(); qh.order()];
        for y in h.elements() {
            fibers[ph.apply(y)].push(y);
        }
        let map = |x: Elem| pos_g[x].map(|i| self.sub_h.elements()[self.beta.apply(i)]);
        for g1 in g.elements() {
            let f1 = &fibers[self.alpha.apply(pg.apply(g1))];
            if self.mode.uses_powers() {
                let Some(image) = map(g.pow(g1, self.q as i64)) else {
                    return false;
                };
                if f1.iter().any(|&h1| h.pow(h1, self.q as i64) != image) {
                    return false;
                }
            }
            for g2 in g.elements() {
                let f2 = &fibers[self.alpha.apply(pg.apply(g2))];
                let Some(image) = map(g.commutator(g1, g2)) else {
                    return false;
                };
                for &h1 in f1 {
                    for &h2 in f2 {
                        if h.commutator(h1, h2) != image {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        let empty: &[Elem] = &[];
        let weak = self.mode == Mode::WeakQExterior;
        serde_json::to_value(WitnessJson {
            mode: self.mode,
            q: self.q,
            alpha: self.alpha.images(),
            beta: self.beta.images(),
            beta_domain: self.sub_g.elements(),
            beta_codomain: self.sub_h.elements(),
            a: if weak {
                self.kernel_g.elements()
            } else {
                empty
            },
            b: if weak {
                self.kernel_h.elements()
            } else {
                empty
            },
        })
        .expect("witness serializes")
    }
}

fn positions(sub: &Subgroup, n: usize) -> Vec<Option<usize>> {
    let mut pos = vec![None; n];
    for (i, &x) in sub.elements().iter().enumerate() {
        pos[x] = Some(i);
    }
    pos
}

/// The quotient kernel and the compared subgroup of one group.
fn sides(
    g: &FiniteGroup,
    mode: Mode,
    q: u32,
    opts: &TensorOptions,
) -> Result<(Subgroup, Subgroup)> {
    let sub = if mode == Mode::Classical {
        g.derived_subgroup()
    } else {
        g.power_commutator_subgroup(q)
    };
    let kernel = match mode {
        Mode::Classical => g.center(),
        Mode::QIsoclinic => center_tower(g, q, opts)?.z_q,
        Mode::HatQIsoclinic => center_tower(g, q, opts)?.z_hat_q,
        Mode::QExterior | Mode::WeakQExterior => center_tower(g, q, opts)?.e_wedge_q,
    };
    Ok((kernel, sub))
}

/// Decides the relation `mode` between `G` and `H`, returning the first
/// witness in search order.
pub fn check(
    g: &FiniteGroup,
    h: &FiniteGroup,
    mode: Mode,
    q: u32,
    opts: &TensorOptions,
) -> Result<Option<IsoclinismWitness>> {
    if mode == Mode::WeakQExterior {
        return check_weak(g, h, q, opts);
    }
    let (kg, sg) = sides(g, mode, q, opts)?;
    let (kh, sh) = sides(h, mode, q, opts)?;
    search(g, h, mode, q, &kg, &kh, &sg, &sh)
}

/// [`check`] with the quotient kernels supplied by the caller, for callers
/// that already hold the center-like subgroups or want a variant with
/// other kernels. `mode` selects the compared subgroup and whether powers
/// are checked.
pub fn check_with_kernels(
    g: &FiniteGroup,
    h: &FiniteGroup,
    mode: Mode,
    q: u32,
    kernel_g: &Subgroup,
    kernel_h: &Subgroup,
) -> Result<Option<IsoclinismWitness>> {
    let (sg, sh) = if mode == Mode::Classical {
        (g.derived_subgroup(), h.derived_subgroup())
    } else {
        (
            g.power_commutator_subgroup(q),
            h.power_commutator_subgroup(q),
        )
    };
    search(g, h, mode, q, kernel_g, kernel_h, &sg, &sh)
}

/// Weak `q`-exterior isoclinism: searches every pair `A ≤ E^∧_q(G)`,
/// `B ≤ E^∧_q(H)`, starting with `A = E^∧_q(G)`, `B = E^∧_q(H)`.
pub fn check_weak(
    g: &FiniteGroup,
    h: &FiniteGroup,
    q: u32,
    opts: &TensorOptions,
) -> Result<Option<IsoclinismWitness>> {
    let eg = center_tower(g, q, opts)?.e_wedge_q;
    let eh = center_tower(h, q, opts)?.e_wedge_q;
    check_weak_with(g, h, q, &eg, &eh)
}

/// [`check_weak`] with `E^∧_q(G)` and `E^∧_q(H)` supplied.
pub fn check_weak_with(
    g: &FiniteGroup,
    h: &FiniteGroup,
    q: u32,
    eg: &Subgroup,
    eh: &Subgroup,
) -> Result<Option<IsoclinismWitness>> {
    let sg = g.power_commutator_subgroup(q);
    let sh = h.power_commutator_subgroup(q);
    if sg.order() != sh.order() {
        return Ok(None);
    }
    let mut subs_g = subgroups_of(g, eg);
    let mut subs_h = subgroups_of(h, eh);
    if subs_g.len() * subs_h.len() > WEAK_PAIR_CAP {
        return Err(Error::SearchCap(format!(
            "{} x {} subgroup pairs exceed the cap of {WEAK_PAIR_CAP}",
            subs_g.len(),
            subs_h.len()
        )));
    }
    // largest first, so the full exterior centers come first
    subs_g.reverse();
    subs_h.reverse();
    for a in &subs_g {
        for b in &subs_h {
            if g.order() / a.order() != h.order() / b.order() {
                continue;
            }
            if let Some(w) = search(g, h, Mode::WeakQExterior, q, a, b, &sg, &sh)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    mode: Mode,
    q: u32,
    kg: &Subgroup,
    kh: &Subgroup,
    sg: &Subgroup,
    sh: &Subgroup,
) -> Result<Option<IsoclinismWitness>> {
    if g.order() / kg.order() != h.order() / kh.order() || sg.order() != sh.order() {
        return Ok(None);
    }
    let (qg, pg) = g.quotient(kg)?;
    let (qh, ph) = h.quotient(kh)?;
    // least representative of each coset
    let reps = |n: usize, p: &Homomorphism| {
        let mut r = vec![usize::MAX; n];
        for (x, &c) in p.images().iter().enumerate() {
            if r[c] == usize::MAX {
                r[c] = x;
            }
        }
        r
    };
    let rep_g = reps(qg.order(), &pg);
    let rep_h = reps(qh.order(), &ph);
    let group_sg = g.subgroup_as_group(sg, "S");
    let group_sh = h.subgroup_as_group(sh, "S");
    let pos_g = positions(sg, g.order());
    let pos_h = positions(sh, h.order());
    let mut found = None;
    let mut failure = None;
    for_each_isomorphism(&qg, &qh, |alpha| {
        // β is forced on commutators (and q-th powers) of representatives
        let mut gens: Vec<Elem> = Vec::new();
        let mut images: Vec<Elem> = Vec::new();
        let mut assigned: Vec<Option<Elem>> = vec![None; sg.order()];
        let mut assign = |x: Elem, y: Elem| -> bool {
            let (Some(i), Some(j)) = (pos_g[x], pos_h[y]) else {
                return false;
            };
            match assigned[i] {
                Some(prev) => prev == j,
                None => {
                    assigned[i] = Some(j);
                    gens.push(i);
                    images.push(j);
                    true
                }
            }
        };
        for c1 in qg.elements() {
            let (g1, h1) = (rep_g[c1], rep_h[alpha.apply(c1)]);
            if mode.uses_powers() && !assign(g.pow(g1, q as i64), h.pow(h1, q as i64)) {
                return ControlFlow::Continue(());
            }
            for c2 in qg.elements() {
                let (g2, h2) = (rep_g[c2], rep_h[alpha.apply(c2)]);
                if !assign(g.commutator(g1, g2), h.commutator(h1, h2)) {
                    return ControlFlow::Continue(());
                }
            }
        }
        let Ok(beta) = Homomorphism::from_generator_images(&group_sg, &group_sh, &gens, &images)
        else {
            return ControlFlow::Continue(());
        };
        if !beta.is_bijective() {
            return ControlFlow::Continue(());
        }
        let witness = IsoclinismWitness {
            mode,
            q,
            kernel_g: kg.clone(),
            kernel_h: kh.clone(),
            sub_g: sg.clone(),
            sub_h: sh.clone(),
            alpha: alpha.clone(),
            beta,
        };
        if !witness.validate(g, h) {
            failure = Some(Error::InternalInconsistency(format!(
                "{mode} witness for {} and {} fails validation",
                g.label(),
                h.label()
            )));
            return ControlFlow::Break(());
        }
        found = Some(witness);
        ControlFlow::Break(())
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// Distinct classes of `groups` under the relation, by index.
pub fn classes(
    groups: &[FiniteGroup],
    mode: Mode,
    q: u32,
    opts: &TensorOptions,
) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut placed = HashSet::new();
    for i in 0..groups.len() {
        if !placed.insert(i) {
            continue;
        }
        let mut class = vec![i];
        for j in i + 1..groups.len() {
            if !placed.contains(&j) && check(&groups[i], &groups[j], mode, q, opts)?.is_some() {
                placed.insert(j);
                class.push(j);
            }
        }
        classes.push(class);
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin;

    fn opts() -> TensorOptions {
        TensorOptions::default()
    }

    fn related(a: &str, b: &str, mode: Mode, q: u32) -> bool {
        check(&builtin(a).unwrap(), &builtin(b).unwrap(), mode, q, &opts())
            .unwrap()
            .is_some()
    }

    #[test]
    fn self_isoclinic() {
        for name in ["S3", "D4", "Q8", "C4"] {
            let g = builtin(name).unwrap();
            let w = check(&g, &g, Mode::Classical, 0, &opts()).unwrap().unwrap();
            assert!(w.validate(&g, &g));
        }
    }

    #[test]
    fn abelian_groups_are_isoclinic() {
        assert!(related("C4", "C2xC2", Mode::Classical, 0));
        assert!(related("C6", "1", Mode::Classical, 0));
    }

    #[test]
    fn d4_q8_isoclinic() {
        assert!(related("D4", "Q8", Mode::Classical, 0));
        assert!(!related("D4", "S3", Mode::Classical, 0));
    }

    #[test]
    fn q_isoclinism_detects_power_subgroups() {
        assert!(!related("C2", "C4", Mode::QIsoclinic, 2));
    }

    #[test]
    fn cyclic_exterior_isoclinic_to_trivial() {
        for n in [2, 3, 5, 6] {
            assert!(related(&format!("C{n}"), "1", Mode::QExterior, 0));
        }
    }

    #[test]
    fn q_zero_matches_classical() {
        let names = ["1", "C2", "C4", "C2xC2", "S3", "D4", "Q8"];
        for a in names {
            for b in names {
                assert_eq!(
                    related(a, b, Mode::QIsoclinic, 0),
                    related(a, b, Mode::Classical, 0),
                    "{a} {b}"
                );
            }
        }
    }

    #[test]
    fn symmetric_outcomes() {
        let names = ["C2", "C4", "C2xC2", "S3", "D4", "Q8"];
        for mode in [Mode::Classical, Mode::QExterior, Mode::HatQIsoclinic] {
            for q in 0..3 {
                for a in names {
                    for b in names {
                        assert_eq!(
                            related(a, b, mode, q),
                            related(b, a, mode, q),
                            "{mode} q={q} {a} {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn weak_mode_reuses_full_exterior_center() {
        let g = builtin("C4").unwrap();
        let one = FiniteGroup::trivial();
        let w = check_weak(&g, &one, 0, &opts()).unwrap().unwrap();
        assert_eq!(w.kernel_g.order(), 4);
        assert!(w.validate(&g, &one));
    }

    #[test]
    fn witness_json_shape() {
        let w = check(
            &builtin("D4").unwrap(),
            &builtin("Q8").unwrap(),
            Mode::Classical,
            0,
            &opts(),
        )
        .unwrap()
        .unwrap();
        let v = w.to_json();
        assert_eq!(v["mode"], "classical");
        assert_eq!(v["alpha"].as_array().unwrap().len(), 4);
        assert_eq!(v["beta"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn mode_names_round_trip() {
        for m in Mode::ALL {
            assert_eq!(m.name().parse::<Mode>().unwrap(), m);
        }
        assert!("bogus".parse::<Mode>().is_err());
    }
}
