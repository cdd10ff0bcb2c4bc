use super::{schur_multiplier_by_cohomology, Harness, Item, Job, Outcome};
use crate::error::Result;
use crate::fp::abelianized_invariants;
use crate::group::{abelian_invariants, FiniteGroup};

pub(super) fn jobs<'a>(corpus: &'a [FiniteGroup], qs: &'a [u32]) -> Vec<Job<'a>> {
    let mut jobs = Vec::new();
    for g in corpus.iter().filter(|g| g.is_abelian()) {
        for &q in qs {
            jobs.push(Job::new(move |h: &Harness| vec![abelianization(h, g, q)]));
        }
    }
    for g in corpus {
        jobs.push(Job::new(move |h: &Harness| vec![schur_multiplier(h, g)]));
    }
    jobs
}

/// Realized tensor square against the Smith form of its own presentation.
fn abelianization(h: &Harness, g: &FiniteGroup, q: u32) -> Item {
    let run = || -> Result<Outcome> {
        let a = h.analysis(g, q)?;
        let realized = abelian_invariants(a.tensor.realized())?;
        let smith = abelianized_invariants(a.tensor.presentation());
        Ok(if smith.free_rank == 0 && smith.torsion == realized {
            Outcome::Pass(format!("invariant factors {:?}", realized.factors()))
        } else {
            Outcome::Fail(format!(
                "realized {:?}, abelianized presentation {:?} with free rank {}",
                realized.factors(),
                smith.torsion.factors(),
                smith.free_rank
            ))
        })
    };
    Outcome::from(run()).item("oracle.abelianization", &[g], Some(q))
}

fn schur_multiplier(h: &Harness, g: &FiniteGroup) -> Item {
    let run = || -> Result<Outcome> {
        let a = h.analysis(g, 0)?;
        let w = a.wedge.realized();
        let kernel = abelian_invariants(&w.subgroup_as_group(&a.multipliers.m, "M"))?;
        let oracle = schur_multiplier_by_cohomology(g)?;
        Ok(if kernel == oracle {
            Outcome::Pass(format!(
                "M(G) = {:?} (order {})",
                oracle.factors(),
                oracle.order()
            ))
        } else {
            Outcome::Fail(format!(
                "ker eta {:?}, cohomology {:?}",
                kernel.factors(),
                oracle.factors()
            ))
        })
    };
    Outcome::from(run()).item("oracle.schur-multiplier", &[g], Some(0))
}
