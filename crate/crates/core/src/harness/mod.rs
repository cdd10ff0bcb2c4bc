//! Corpus-driven verification of the tensor-square identities and of the
//! invariance, capability and splitting theorems, with machine-readable
//! pass/fail evidence.

mod cohomology;
mod corpus;
mod lemmas;
mod oracles;
mod registry;
mod theorems;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::tensor::{analyze, exterior_center, Analysis, TensorOptions};

pub use cohomology::schur_multiplier_by_cohomology;
pub use corpus::{default_corpus, extended_p_groups};
pub use registry::{statement, Statement, OUT_OF_SCOPE, REGISTRY};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lemma,
    Theorem,
    Oracle,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma => "lemma",
            Suite::Theorem => "theorem",
            Suite::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The instance does not satisfy the statement's hypotheses.
    Skipped,
    /// A coset or search cap was hit before the instance could be decided.
    Capped,
}

/// One instance of one statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub id: String,
    pub groups: Vec<String>,
    pub q: Option<u32>,
    pub status: Status,
    pub detail: String,
    /// Only recorded when timings are requested, so default reports stay
    /// byte-for-byte reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub capped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub counts: Counts,
    pub items: Vec<Item>,
}

impl VerificationReport {
    /// Orders items by statement id (stable within an id).
    pub fn new(suite: Suite, mut items: Vec<Item>) -> Self {
        items.sort_by_key(|i| {
            REGISTRY
                .iter()
                .position(|s| s.id == i.id)
                .unwrap_or(usize::MAX)
        });
        let mut counts = Counts::default();
        for item in &items {
            match item.status {
                Status::Pass => counts.pass += 1,
                Status::Fail => counts.fail += 1,
                Status::Skipped => counts.skipped += 1,
                Status::Capped => counts.capped += 1,
            }
        }
        Self {
            suite,
            counts,
            items,
        }
    }

    pub fn items_for<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Item> + 'a {
        self.items.iter().filter(move |i| i.id == id)
    }
}

/// The reports of one `verify` run together with what was run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRun {
    pub corpus: Vec<String>,
    pub extended_corpus: Vec<String>,
    pub qs: Vec<u32>,
    pub reports: Vec<VerificationReport>,
}

impl VerificationRun {
    pub fn has_failures(&self) -> bool {
        self.reports.iter().any(|r| r.counts.fail > 0)
    }

    pub fn has_caps(&self) -> bool {
        self.reports.iter().any(|r| r.counts.capped > 0)
    }

    pub fn items(&self) -> impl Iterator<Item = &Item> {
        self.reports.iter().flat_map(|r| r.items.iter())
    }

    /// Human-oriented summary; failed items are listed with the statement
    /// they contradict.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("corpus: {}\n", self.corpus.join(", ")));
        if !self.extended_corpus.is_empty() {
            out.push_str(&format!(
                "extended corpus: {}\n",
                self.extended_corpus.join(", ")
            ));
        }
        let qs: Vec<String> = self.qs.iter().map(u32::to_string).collect();
        out.push_str(&format!("q: {}\n", qs.join(", ")));
        for r in &self.reports {
            let c = r.counts;
            out.push_str(&format!(
                "{:<8} pass {:>5}  fail {:>3}  skipped {:>4}  capped {:>3}\n",
                r.suite.name(),
                c.pass,
                c.fail,
                c.skipped,
                c.capped
            ));
        }
        for item in self
            .items()
            .filter(|i| matches!(i.status, Status::Fail | Status::Capped))
        {
            let q = item.q.map(|q| format!(" q={q}")).unwrap_or_default();
            out.push_str(&format!(
                "\n{:?} {} [{}]{q}\n",
                item.status,
                item.id,
                item.groups.join(", ")
            ));
            if let Some(s) = statement(&item.id) {
                out.push_str(&format!("  statement: \"{}\"\n", s.text));
            }
            out.push_str(&format!("  {}\n", item.detail));
        }
        out
    }
}

/// Settings for a harness run.
#[derive(Clone, Debug)]
pub struct HarnessConfig {
    pub qs: Vec<u32>,
    pub opts: TensorOptions,
    /// Also run the statements about p-groups on every p-group of order
    /// at most 16.
    pub extended: bool,
    /// Worker threads; `None` uses one per core.
    pub jobs: Option<usize>,
    /// Record per-item wall time (makes reports non-reproducible).
    pub timings: bool,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self {
            qs: vec![0, 1, 2, 3],
            opts: TensorOptions::default(),
            extended: false,
            jobs: None,
            timings: false,
        }
    }
}

type CacheCell<T> = Arc<OnceLock<Result<T>>>;
type GroupKey = (u64, usize);

fn key(g: &FiniteGroup) -> GroupKey {
    (g.fingerprint(), g.order())
}

type Cache<K, T> = Mutex<HashMap<K, CacheCell<T>>>;

/// Runs the suites, sharing one analysis per `(G, q)`.
pub struct Harness {
    config: HarnessConfig,
    pool: rayon::ThreadPool,
    analyses: Cache<(GroupKey, u32), Arc<Analysis>>,
    exterior_centers: Cache<GroupKey, Subgroup>,
}

impl Harness {
    pub fn new(config: HarnessConfig) -> Result<Self> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = config.jobs {
            builder = builder.num_threads(n.max(1));
        }
        let pool = builder.build().map_err(|e| Error::Io(e.to_string()))?;
        Ok(Self {
            config,
            pool,
            analyses: Mutex::default(),
            exterior_centers: Mutex::default(),
        })
    }

    pub fn config(&self) -> &HarnessConfig {
        &self.config
    }

    pub(crate) fn opts(&self) -> &TensorOptions {
        &self.config.opts
    }

    /// The analysis of `(G, q)`, computed at most once.
    pub fn analysis(&self, g: &FiniteGroup, q: u32) -> Result<Arc<Analysis>> {
        let cell = {
            let mut cache = self.analyses.lock().expect("analysis cache poisoned");
            cache.entry((key(g), q)).or_default().clone()
        };
        cell.get_or_init(|| analyze(g, q, &self.config.opts).map(Arc::new))
            .clone()
    }

    /// `Z^∧(G)` from the exterior square alone, computed at most once.
    pub fn exterior_center(&self, g: &FiniteGroup) -> Result<Subgroup> {
        let cell = {
            let mut cache = self
                .exterior_centers
                .lock()
                .expect("exterior center cache poisoned");
            cache.entry(key(g)).or_default().clone()
        };
        cell.get_or_init(|| exterior_center(g, &self.config.opts))
            .clone()
    }

    /// Runs independent jobs on the pool; output order is job order.
    pub(crate) fn run_jobs(&self, jobs: Vec<Job<'_>>) -> Vec<Item> {
        let timings = self.config.timings;
        self.pool.install(|| {
            jobs.into_par_iter()
                .flat_map_iter(|job| {
                    let start = Instant::now();
                    let mut items = (job.run)(self);
                    if timings {
                        let ms = start.elapsed().as_millis() as u64;
                        for item in &mut items {
                            item.wall_time_ms = Some(ms);
                        }
                    }
                    items
                })
                .collect()
        })
    }

    pub fn lemma_suite(&self, corpus: &[FiniteGroup], qs: &[u32]) -> VerificationReport {
        VerificationReport::new(Suite::Lemma, self.run_jobs(lemmas::jobs(corpus, qs)))
    }

    /// `p_groups` feeds the statements about finite p-groups; pass the
    /// corpus itself or the extended set.
    pub fn theorem_suite(
        &self,
        corpus: &[FiniteGroup],
        p_groups: &[FiniteGroup],
        qs: &[u32],
    ) -> VerificationReport {
        VerificationReport::new(
            Suite::Theorem,
            self.run_jobs(theorems::jobs(corpus, p_groups, qs)),
        )
    }

    /// Non-abelian groups take part in the cohomology oracle only.
    pub fn oracle_suite(&self, corpus: &[FiniteGroup], qs: &[u32]) -> VerificationReport {
        VerificationReport::new(Suite::Oracle, self.run_jobs(oracles::jobs(corpus, qs)))
    }

    /// All three suites over the default corpus (and the extended p-groups
    /// when configured).
    pub fn run(&self) -> VerificationRun {
        let corpus = default_corpus();
        let extended = if self.config.extended {
            extended_p_groups()
        } else {
            Vec::new()
        };
        let qs = self.config.qs.clone();
        let p_groups = if self.config.extended {
            &extended
        } else {
            &corpus
        };
        let reports = vec![
            self.lemma_suite(&corpus, &qs),
            self.theorem_suite(&corpus, p_groups, &qs),
            self.oracle_suite(&corpus, &qs),
        ];
        let labels = |gs: &[FiniteGroup]| gs.iter().map(|g| g.label().to_string()).collect();
        VerificationRun {
            corpus: labels(&corpus),
            extended_corpus: labels(&extended),
            qs,
            reports,
        }
    }
}

type JobFn<'a> = dyn Fn(&Harness) -> Vec<Item> + Send + Sync + 'a;

/// A unit of work producing the items of one instance.
pub(crate) struct Job<'a> {
    run: Box<JobFn<'a>>,
}

impl<'a> Job<'a> {
    pub(crate) fn new(run: impl Fn(&Harness) -> Vec<Item> + Send + Sync + 'a) -> Self {
        Self { run: Box::new(run) }
    }
}

/// The result of checking one instance.
pub(crate) enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
    Capped(String),
}

impl Outcome {
    pub(crate) fn from_error(e: &Error) -> Self {
        if let Error::HypothesisNotMet(why) = e {
            Outcome::Skipped(why.clone())
        } else if e.is_cap() {
            Outcome::Capped(e.to_string())
        } else {
            Outcome::Fail(format!("error: {e}"))
        }
    }

    pub(crate) fn item(self, id: &str, groups: &[&FiniteGroup], q: Option<u32>) -> Item {
        debug_assert!(statement(id).is_some(), "unregistered statement id {id}");
        let (status, detail) = match self {
            Outcome::Pass(d) => (Status::Pass, d),
            Outcome::Fail(d) => (Status::Fail, d),
            Outcome::Skipped(d) => (Status::Skipped, d),
            Outcome::Capped(d) => (Status::Capped, d),
        };
        Item {
            id: id.to_string(),
            groups: groups.iter().map(|g| g.label().to_string()).collect(),
            q,
            status,
            detail,
            wall_time_ms: None,
        }
    }
}

impl From<Result<Outcome>> for Outcome {
    fn from(r: Result<Outcome>) -> Self {
        r.unwrap_or_else(|e| Outcome::from_error(&e))
    }
}

/// Runs the lemma suite with default options.
pub fn run_lemma_suite(corpus: &[FiniteGroup], qs: &[u32]) -> Result<VerificationReport> {
    Ok(Harness::new(HarnessConfig::default())?.lemma_suite(corpus, qs))
}

/// Runs the theorem suite with default options, using the corpus itself
/// for the p-group statements.
pub fn run_theorem_suite(corpus: &[FiniteGroup], qs: &[u32]) -> Result<VerificationReport> {
    Ok(Harness::new(HarnessConfig::default())?.theorem_suite(corpus, corpus, qs))
}

/// Runs the oracle suite with default options.
pub fn run_oracle_suite(corpus: &[FiniteGroup], qs: &[u32]) -> Result<VerificationReport> {
    Ok(Harness::new(HarnessConfig::default())?.oracle_suite(corpus, qs))
}
