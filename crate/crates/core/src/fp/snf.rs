//! Smith normal form over the integers, with arbitrary-precision entries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = BigInt::from(v);
    }

    pub fn add(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }

    fn at(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= f * row[src], from column `from` on.
    fn row_sub(&mut self, dst: usize, src: usize, f: &BigInt, from: usize) {
        for j in from..self.cols {
            let v = &self.data[src * self.cols + j] * f;
            if !v.is_zero() {
                *self.at(dst, j) -= v;
            }
        }
    }

    fn col_sub(&mut self, dst: usize, src: usize, f: &BigInt, from: usize) {
        for i in from..self.rows {
            let v = &self.data[i * self.cols + src] * f;
            if !v.is_zero() {
                *self.at(i, dst) -= v;
            }
        }
    }
}

/// Diagonal of the Smith normal form: `min(rows, cols)` non-negative
/// entries, each dividing the next, zeros last.
pub fn smith_diagonal(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let k = a.rows.min(a.cols);
    let mut diag = Vec::with_capacity(k);
    for t in 0..k {
        // pivot: least nonzero absolute value in the remaining block
        let Some((pi, pj)) = least_entry(&a, t) else {
            diag.extend(std::iter::repeat_n(BigInt::zero(), k - t));
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let p = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..a.rows {
                if !a.get(i, t).is_zero() {
                    let q = a.get(i, t).div_floor(&p);
                    a.row_sub(i, t, &q, t);
                    dirty |= !a.get(i, t).is_zero();
                }
            }
            for j in t + 1..a.cols {
                if !a.get(t, j).is_zero() {
                    let q = a.get(t, j).div_floor(&p);
                    a.col_sub(j, t, &q, t);
                    dirty |= !a.get(t, j).is_zero();
                }
            }
            if dirty {
                let (pi, pj) = least_in_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            // the pivot must divide the whole remaining block
            let bad = (t + 1..a.rows)
                .flat_map(|i| (t + 1..a.cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    // fold the offending row into row t and reduce again
                    let one = BigInt::from(-1);
                    a.row_sub(t, i, &one, t);
                }
                None => break,
            }
        }
        diag.push(a.get(t, t).abs());
    }
    diag
}

fn least_entry(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Least nonzero entry in row `t` and column `t` from the pivot on.
fn least_in_cross(a: &IntegerMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let better = |pos: (usize, usize), best: (usize, usize)| {
        let v = a.get(pos.0, pos.1);
        !v.is_zero() && (a.get(best.0, best.1).is_zero() || v.abs() < a.get(best.0, best.1).abs())
    };
    for i in t..a.rows {
        if better((i, t), best) {
            best = (i, t);
        }
    }
    for j in t..a.cols {
        if better((t, j), best) {
            best = (t, j);
        }
    }
    best
}
