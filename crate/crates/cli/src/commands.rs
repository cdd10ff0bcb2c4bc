use std::io::Write;

use serde::Serialize;
use serde_json::json;

use qtensor_core::group::{
    abelian_invariants, builtin_names, frattini_subgroup, load_group, minimal_generator_count,
    FiniteGroup, GroupSpec,
};
use qtensor_core::harness::{default_corpus, extended_p_groups, Harness, HarnessConfig};
use qtensor_core::isoclinism::check;
use qtensor_core::tensor::{analyze, TensorOptions};
use qtensor_core::Error;

use crate::{
    Command, CommandConfig, Common, Format, EXIT_CAPPED, EXIT_INVALID, EXIT_VERIFY_FAILED,
};

/// A command that could not produce its report.
pub struct Failure {
    pub status: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_cap() {
            EXIT_CAPPED
        } else {
            EXIT_INVALID
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

pub fn dispatch(config: &CommandConfig) -> Result<u8, Failure> {
    let common = &config.common;
    let opts = TensorOptions {
        max_cosets: common.max_cosets,
        max_order: common.max_order,
        simplify: common.simplify,
    };
    let result = match &config.command {
        Command::Catalog => catalog(common),
        Command::Info { group } => info(common, group),
        Command::Tensor { group, q, q_list } => {
            let qs = q_list.clone().unwrap_or_else(|| vec![*q]);
            tensor(common, &opts, group, &qs, q_list.is_some())
        }
        Command::Compare {
            left,
            right,
            mode,
            q,
        } => {
            let (g, h) = (load(common, left)?, load(common, right)?);
            let witness = check(&g, &h, *mode, *q, &opts)?;
            let text = match &witness {
                Some(w) => format!(
                    "{} and {} are {mode} (q = {q})\nwitness: {}\n",
                    g.label(),
                    h.label(),
                    w.to_json()
                ),
                None => format!("{} and {} are not {mode} (q = {q})\n", g.label(), h.label()),
            };
            let value = json!({
                "groups": [g.label(), h.label()],
                "mode": mode,
                "q": q,
                "verdict": witness.is_some(),
                "witness": witness.map(|w| w.to_json()),
            });
            emit(common, &value, &text).map(|()| 0)
        }
        Command::Verify {
            q_list,
            extended,
            jobs,
            timings,
        } => {
            let harness = Harness::new(HarnessConfig {
                qs: q_list.clone(),
                opts,
                extended: *extended,
                jobs: *jobs,
                timings: *timings,
            })?;
            let run = harness.run();
            emit(common, &run, &run.render_text())?;
            Ok(if run.has_failures() {
                EXIT_VERIFY_FAILED
            } else if run.has_caps() {
                EXIT_CAPPED
            } else {
                0
            })
        }
    };
    match result {
        Err(f) if f.status == EXIT_CAPPED => {
            let value = json!({ "status": "capped", "error": f.message });
            emit(common, &value, &format!("capped: {}\n", f.message))?;
            Ok(EXIT_CAPPED)
        }
        other => other,
    }
}

fn load(common: &Common, arg: &str) -> Result<FiniteGroup, Failure> {
    let spec = GroupSpec::from_arg(arg)?;
    let g = load_group(&spec, common.max_order)?;
    Ok(match spec {
        GroupSpec::Builtin { name } => g.with_label(name),
        _ => g,
    })
}

/// Writes JSON (pretty, fixed key order) or text to `--out` or stdout.
fn emit<T: Serialize>(common: &Common, value: &T, text: &str) -> Result<(), Failure> {
    let body = match common.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => text.to_string(),
    };
    let io = |e: std::io::Error| Failure {
        status: EXIT_INVALID,
        message: e.to_string(),
    };
    match &common.out {
        Some(path) => std::fs::write(path, body).map_err(|e| Failure {
            status: EXIT_INVALID,
            message: format!("{}: {e}", path.display()),
        }),
        None => std::io::stdout()
            .lock()
            .write_all(body.as_bytes())
            .map_err(io),
    }
}

fn catalog(common: &Common) -> Result<u8, Failure> {
    let labels =
        |gs: Vec<FiniteGroup>| gs.iter().map(|g| g.label().to_string()).collect::<Vec<_>>();
    let names = builtin_names();
    let corpus = labels(default_corpus());
    let extended = labels(extended_p_groups());
    let text = format!(
        "builtin names:\n  {}\ncorpus: {}\nextended p-groups: {}\n",
        names.join("\n  "),
        corpus.join(", "),
        extended.join(", ")
    );
    let value = json!({ "builtins": names, "corpus": corpus, "extended_p_groups": extended });
    emit(common, &value, &text).map(|()| 0)
}

/// Cayley-table record (reloadable with `file:`) plus invariants.
#[derive(Serialize)]
struct GroupInfo {
    kind: &'static str,
    label: String,
    order: usize,
    table: Vec<Vec<usize>>,
    invariants: Invariants,
}

#[derive(Serialize)]
struct Invariants {
    abelian: bool,
    cyclic: bool,
    exponent: usize,
    center_order: usize,
    derived_order: usize,
    abelianization: Vec<u64>,
    frattini_order: usize,
    minimal_generators: usize,
    element_orders: Vec<u32>,
}

fn info(common: &Common, arg: &str) -> Result<u8, Failure> {
    let g = load(common, arg)?;
    let derived = g.derived_subgroup();
    let (ab, _) = g.quotient(&derived)?;
    let invariants = Invariants {
        abelian: g.is_abelian(),
        cyclic: g.is_cyclic(),
        exponent: g.exponent(),
        center_order: g.center().order(),
        derived_order: derived.order(),
        abelianization: abelian_invariants(&ab)?.factors().to_vec(),
        frattini_order: frattini_subgroup(&g).order(),
        minimal_generators: minimal_generator_count(&g),
        element_orders: g.element_orders().to_vec(),
    };
    let text = format!(
        "group {} of order {}\n  abelian {}, cyclic {}, exponent {}\n  |Z(G)| = {}, |[G,G]| = {}, |Φ(G)| = {}\n  G/[G,G] = {:?}\n  d(G) = {}\n",
        g.label(),
        g.order(),
        invariants.abelian,
        invariants.cyclic,
        invariants.exponent,
        invariants.center_order,
        invariants.derived_order,
        invariants.frattini_order,
        invariants.abelianization,
        invariants.minimal_generators
    );
    let record = GroupInfo {
        kind: "cayley",
        label: g.label().to_string(),
        order: g.order(),
        table: g.table(),
        invariants,
    };
    emit(common, &record, &text).map(|()| 0)
}

fn tensor(
    common: &Common,
    opts: &TensorOptions,
    arg: &str,
    qs: &[u32],
    list: bool,
) -> Result<u8, Failure> {
    let g = load(common, arg)?;
    let reports = qs
        .iter()
        .map(|&q| analyze(&g, q, opts).map(|a| a.report()))
        .collect::<Result<Vec<_>, _>>()?;
    let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    if list {
        emit(common, &reports, &text)
    } else {
        emit(common, &reports[0], &text)
    }
    .map(|()| 0)
}
