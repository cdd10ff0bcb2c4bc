//! Group ingestion: Cayley tables, permutation generators and the builtin
//! catalog.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{direct_product, FiniteGroup};
use crate::error::{Error, Result};

/// Default cap on the base group order for tensor realizations.
pub const DEFAULT_MAX_ORDER: usize = 16;

/// Groups larger than this are never closed from permutation generators.
pub const MAX_LOAD_ORDER: usize = 5040;

/// A group description as accepted on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Cayley {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default)]
        label: String,
    },
    Perm {
        degree: usize,
        generators: Vec<Vec<usize>>,
        #[serde(default)]
        label: String,
    },
    Builtin {
        name: String,
    },
}

impl GroupSpec {
    pub fn builtin(name: impl Into<String>) -> Self {
        GroupSpec::Builtin { name: name.into() }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Parses a command-line group argument: `builtin:NAME` or `file:PATH`.
    pub fn from_arg(arg: &str) -> Result<Self> {
        if let Some(name) = arg.strip_prefix("builtin:") {
            Ok(Self::builtin(name))
        } else if let Some(path) = arg.strip_prefix("file:") {
            let text =
                std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            Self::from_json(&text)
        } else {
            Err(Error::Parse(format!(
                "group spec must be builtin:NAME or file:PATH, got {arg:?}"
            )))
        }
    }
}

/// Loads and validates a group. Permutation groups are closed breadth-first
/// from the identity, which becomes element `0`.
pub fn load_group(spec: &GroupSpec, max_order: usize) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Cayley {
            order,
            table,
            label,
        } => {
            if table.len() != *order {
                return Err(Error::InvalidGroup(format!(
                    "declared order {order} but table has {} rows",
                    table.len()
                )));
            }
            if *order > max_order {
                return Err(Error::OrderLimit {
                    order: *order,
                    limit: max_order,
                });
            }
            FiniteGroup::from_table(label_or(label, "cayley"), table.clone())
        }
        GroupSpec::Perm {
            degree,
            generators,
            label,
        } => perm_closure(label_or(label, "perm"), *degree, generators, max_order),
        GroupSpec::Builtin { name } => {
            let g = builtin(name)?;
            if g.order() > max_order {
                return Err(Error::OrderLimit {
                    order: g.order(),
                    limit: max_order,
                });
            }
            Ok(g)
        }
    }
}

fn label_or(label: &str, default: &str) -> String {
    if label.is_empty() {
        default.to_string()
    } else {
        label.to_string()
    }
}

/// Closes a set of permutations (one-line images on `0..degree`).
/// Products compose left to right: `(p·q)(x) = q(p(x))`.
fn perm_closure(
    label: String,
    degree: usize,
    generators: &[Vec<usize>],
    max_order: usize,
) -> Result<FiniteGroup> {
    for (i, p) in generators.iter().enumerate() {
        let mut seen = vec![false; degree];
        if p.len() != degree
            || p.iter()
                .any(|&x| x >= degree || std::mem::replace(&mut seen[x], true))
        {
            return Err(Error::InvalidGroup(format!(
                "generator {i} is not a permutation of degree {degree}"
            )));
        }
    }
    let compose = |p: &[u16], q: &[u16]| -> Vec<u16> { p.iter().map(|&x| q[x as usize]).collect() };
    let gens: Vec<Vec<u16>> = generators
        .iter()
        .map(|p| p.iter().map(|&x| x as u16).collect())
        .collect();
    let identity: Vec<u16> = (0..degree as u16).collect();
    let mut index: HashMap<Vec<u16>, usize> = HashMap::from([(identity.clone(), 0)]);
    let mut elements = vec![identity];
    let mut i = 0;
    while i < elements.len() {
        for g in &gens {
            let p = compose(&elements[i], g);
            if !index.contains_key(&p) {
                if elements.len() >= max_order {
                    return Err(Error::OrderLimit {
                        order: elements.len() + 1,
                        limit: max_order,
                    });
                }
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
        }
        i += 1;
    }
    let n = elements.len();
    let mut flat = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            flat[a * n + b] = index[&compose(&elements[a], &elements[b])] as u32;
        }
    }
    FiniteGroup::from_flat_unchecked(label, n, flat)
}

fn table_group(label: String, n: usize, mul: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let flat = (0..n * n).map(|k| mul(k / n, k % n) as u32).collect();
    FiniteGroup::from_flat_unchecked(label, n, flat).expect("builtin table is a group")
}

fn cyclic(n: usize) -> FiniteGroup {
    table_group(format!("C{n}"), n, |a, b| (a + b) % n)
}

/// Dihedral group of order `2n`; element `i + n·j` is `r^i s^j`.
fn dihedral(n: usize) -> FiniteGroup {
    table_group(format!("D{n}"), 2 * n, |a, b| {
        let (i, s) = (a % n, a / n);
        let (k, t) = (b % n, b / n);
        let rot = if s == 0 { (i + k) % n } else { (i + n - k) % n };
        rot + n * ((s + t) % 2)
    })
}

/// Quaternion group; element `u + 4·s` is `(-1)^s` times unit `u` of
/// `1, i, j, k`.
fn quaternion() -> FiniteGroup {
    // unit products as (sign, unit)
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    table_group("Q8".into(), 8, |a, b| {
        let (sign, unit) = UNITS[a % 4][b % 4];
        unit + 4 * ((sign + a / 4 + b / 4) % 2)
    })
}

fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n <= 1 {
        return Ok(FiniteGroup::trivial().with_label(format!("S{n}")));
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    perm_closure(format!("S{n}"), n, &[swap, cycle], MAX_LOAD_ORDER)
}

fn alternating(n: usize) -> Result<FiniteGroup> {
    if n <= 2 {
        return Ok(FiniteGroup::trivial().with_label(format!("A{n}")));
    }
    let gens: Vec<Vec<usize>> = (2..n)
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = i;
            p[i] = 0;
            p
        })
        .collect();
    perm_closure(format!("A{n}"), n, &gens, MAX_LOAD_ORDER)
}

fn elementary_abelian(p: usize, k: u32) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::Parse(format!("E{p}^{k}: {p} is not prime")));
    }
    let n = p.pow(k);
    let g = table_group(format!("E{p}^{k}"), n, |a, b| {
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..k {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    });
    Ok(g)
}

fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Names accepted by [`builtin`], as patterns.
pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "C{n}       cyclic group of order n",
        "D{n}       dihedral group of order 2n",
        "Q8         quaternion group",
        "S{n}       symmetric group, n <= 5",
        "A{n}       alternating group, n <= 5",
        "E{p}^{k}   elementary abelian group of order p^k",
        "AxB[x...]  direct product of builtin factors, e.g. C2xC4, D4xC2",
    ]
}

fn parse_num(s: &str, name: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::Parse(format!("unknown builtin group {name:?}")))
}

/// Looks up a builtin group by name.
pub fn builtin(name: &str) -> Result<FiniteGroup> {
    let unknown = || Error::Parse(format!("unknown builtin group {name:?}"));
    if name.contains('x') {
        let mut parts = name.split('x');
        let first = parts.next().ok_or_else(unknown)?;
        let mut g = builtin(first)?;
        for part in parts {
            let h = builtin(part)?;
            if g.order() * h.order() > MAX_LOAD_ORDER {
                return Err(Error::OrderLimit {
                    order: g.order() * h.order(),
                    limit: MAX_LOAD_ORDER,
                });
            }
            g = direct_product(&g, &h);
        }
        return Ok(g.with_label(name));
    }
    if name == "Q8" {
        return Ok(quaternion());
    }
    if name == "1" {
        return Ok(FiniteGroup::trivial());
    }
    let (head, rest) = name.split_at(name.chars().next().ok_or_else(unknown)?.len_utf8());
    match head {
        "C" => {
            let n = parse_num(rest, name)?;
            if n == 0 {
                return Err(unknown());
            }
            if n > MAX_LOAD_ORDER {
                return Err(Error::OrderLimit {
                    order: n,
                    limit: MAX_LOAD_ORDER,
                });
            }
            Ok(cyclic(n))
        }
        "D" => {
            let n = parse_num(rest, name)?;
            if n == 0 {
                return Err(unknown());
            }
            if 2 * n > MAX_LOAD_ORDER {
                return Err(Error::OrderLimit {
                    order: 2 * n,
                    limit: MAX_LOAD_ORDER,
                });
            }
            Ok(dihedral(n))
        }
        "S" | "A" => {
            let n = parse_num(rest, name)?;
            if n > 5 {
                return Err(Error::Parse(format!("{name}: only n <= 5 is builtin")));
            }
            if head == "S" {
                symmetric(n)
            } else {
                alternating(n)
            }
        }
        "E" => {
            let (p, k) = rest.split_once('^').ok_or_else(unknown)?;
            let p = parse_num(p, name)?;
            let k = parse_num(k, name)? as u32;
            if (p as f64).powi(k as i32) > MAX_LOAD_ORDER as f64 {
                return Err(Error::OrderLimit {
                    order: usize::MAX,
                    limit: MAX_LOAD_ORDER,
                });
            }
            elementary_abelian(p, k)
        }
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        for (name, order) in [
            ("C1", 1),
            ("C6", 6),
            ("D4", 8),
            ("D6", 12),
            ("Q8", 8),
            ("S3", 6),
            ("S4", 24),
            ("S5", 120),
            ("A4", 12),
            ("A5", 60),
            ("E2^3", 8),
            ("E3^2", 9),
            ("C2xC4", 8),
            ("D4xC2", 16),
            ("C2xC2xC4", 16),
            ("1", 1),
        ] {
            let g = builtin(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert!(g.check_associative().is_ok(), "{name}");
        }
    }

    #[test]
    fn nonabelian_builtins() {
        assert!(!builtin("S3").unwrap().is_abelian());
        assert!(!builtin("Q8").unwrap().is_abelian());
        assert!(builtin("E2^3").unwrap().is_abelian());
    }

    #[test]
    fn unknown_names() {
        for name in ["Z5", "S6", "E4^2", "", "Cx"] {
            assert!(builtin(name).is_err(), "{name}");
        }
    }

    #[test]
    fn perm_spec_closes_to_s3() {
        let spec = GroupSpec::from_json(
            r#"{"kind":"perm","degree":3,"generators":[[1,0,2],[1,2,0]],"label":"S3"}"#,
        )
        .unwrap();
        let g = load_group(&spec, 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let capped = load_group(&spec, 5).unwrap_err();
        assert!(matches!(capped, Error::OrderLimit { .. }));
    }

    #[test]
    fn cayley_spec_round_trip() {
        let spec = GroupSpec::from_json(
            r#"{"kind":"cayley","order":2,"table":[[0,1],[1,0]],"label":"C2"}"#,
        )
        .unwrap();
        let g = load_group(&spec, 16).unwrap();
        assert_eq!(g.order(), 2);
        let bad =
            GroupSpec::from_json(r#"{"kind":"cayley","order":2,"table":[[0,1],[1,1]]}"#).unwrap();
        assert!(matches!(load_group(&bad, 16), Err(Error::InvalidGroup(_))));
    }
}
