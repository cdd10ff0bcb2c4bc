//! Tietze simplification: generators defined by relators of length at most
//! two are substituted away.

use std::collections::BTreeSet;

use super::{cyclic_reduce, free_reduce, inverse_word, Presentation, Word};

pub fn tietze_simplify(p: &Presentation) -> Presentation {
    tietze_simplify_with_map(p).0
}

/// Simplifies `p` and returns, for every original generator, a word in the
/// generators of the simplified presentation that it equals.
pub fn tietze_simplify_with_map(p: &Presentation) -> (Presentation, Vec<Word>) {
    let n = p.generator_count();
    // substitution[i] is a word in the original generators over surviving
    // generators only
    let mut substitution: Vec<Word> = (1..=n as i32).map(|g| vec![g]).collect();
    let mut alive = vec![true; n];
    let mut relators: Vec<Word> = p.relators().to_vec();
    loop {
        relators = tidy(&relators);
        let Some((gen, replacement)) = find_elimination(&relators) else {
            break;
        };
        alive[gen] = false;
        let subst = |w: &[i32]| -> Word {
            let mut out = Vec::with_capacity(w.len());
            for &x in w {
                if x.unsigned_abs() as usize - 1 == gen {
                    if x > 0 {
                        out.extend_from_slice(&replacement);
                    } else {
                        out.extend(inverse_word(&replacement));
                    }
                } else {
                    out.push(x);
                }
            }
            free_reduce(&out)
        };
        for r in relators.iter_mut() {
            *r = subst(r);
        }
        for s in substitution.iter_mut() {
            *s = subst(s);
        }
    }
    // renumber survivors
    let mut new_index = vec![0i32; n];
    let mut labels = Vec::new();
    for g in 0..n {
        if alive[g] {
            labels.push(p.generator_labels()[g].clone());
            new_index[g] = labels.len() as i32;
        }
    }
    let renumber = |w: &Word| -> Word {
        w.iter()
            .map(|&x| {
                let k = new_index[x.unsigned_abs() as usize - 1];
                if x > 0 {
                    k
                } else {
                    -k
                }
            })
            .collect()
    };
    let relators = relators.iter().map(renumber).collect();
    let map = substitution.iter().map(renumber).collect();
    let out = Presentation::new(labels, relators).expect("renumbered words reference survivors");
    (out, map)
}

/// Cyclically reduces, then drops empty and repeated relators (up to
/// rotation and inversion).
fn tidy(relators: &[Word]) -> Vec<Word> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in relators {
        let r = cyclic_reduce(r);
        if r.is_empty() {
            continue;
        }
        if seen.insert(canonical(&r)) {
            out.push(r);
        }
    }
    out
}

fn canonical(r: &[i32]) -> Word {
    let inv = inverse_word(r);
    let mut best = r.to_vec();
    for w in [r, &inv[..]] {
        for k in 0..w.len() {
            let rot: Word = w[k..].iter().chain(&w[..k]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

/// A generator (0-based) and the word it equals, read off a relator of
/// length one or two. Prefers eliminating the highest-numbered generator.
fn find_elimination(relators: &[Word]) -> Option<(usize, Word)> {
    let mut best: Option<(usize, Word)> = None;
    for r in relators {
        let candidate = match *r.as_slice() {
            [x] => Some((x.unsigned_abs() as usize - 1, Vec::new())),
            [x, y] if x.abs() != y.abs() => {
                // x y = 1: eliminate the larger generator
                let (keep, drop) = if x.abs() > y.abs() { (y, x) } else { (x, y) };
                // drop = keep⁻¹ when adjacent in the cycle either way
                let word = if drop > 0 { vec![-keep] } else { vec![keep] };
                Some((drop.unsigned_abs() as usize - 1, word))
            }
            _ => None,
        };
        if let Some((g, w)) = candidate {
            if best.as_ref().is_none_or(|(bg, _)| g > *bg) {
                best = Some((g, w));
            }
        }
    }
    best
}
