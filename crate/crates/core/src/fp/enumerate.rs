//! Felsch-style coset enumeration: cosets are defined in order, and every
//! new table entry is pushed through all relator cycles starting with that
//! column before the next definition is made.

use std::collections::HashSet;

use super::{cyclic_reduce, Presentation, Word};

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationStatus {
    Complete,
    Exceeded,
}

/// The result of an enumeration. When complete, cosets are standardized:
/// coset `0` is the subgroup and the others are numbered in order of first
/// appearance scanning rows then columns.
#[derive(Clone, Debug)]
pub struct CosetTable {
    generator_count: usize,
    cosets: usize,
    action: Vec<u32>,
    status: EnumerationStatus,
}

impl CosetTable {
    pub fn status(&self) -> EnumerationStatus {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == EnumerationStatus::Complete
    }

    /// Number of cosets (the index when complete).
    pub fn cosets(&self) -> usize {
        self.cosets
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    /// Image of coset `c` under column `col` (`2g` is generator `g`,
    /// `2g + 1` its inverse).
    pub fn act_column(&self, c: usize, col: usize) -> usize {
        self.action[c * 2 * self.generator_count + col] as usize
    }

    /// Image of coset `c` under a signed 1-based letter.
    pub fn act(&self, c: usize, letter: i32) -> usize {
        self.act_column(c, letter_column(letter) as usize)
    }

    pub fn trace(&self, c: usize, word: &[i32]) -> usize {
        word.iter().fold(c, |k, &x| self.act(k, x))
    }

    /// Exhaustive check that every relator fixes every coset and every
    /// column acts as a permutation.
    pub fn relators_hold(&self, p: &Presentation) -> bool {
        if !self.is_complete() {
            return false;
        }
        let ncols = 2 * self.generator_count;
        for col in 0..ncols {
            for c in 0..self.cosets {
                let d = self.act_column(c, col);
                if d >= self.cosets || self.act_column(d, col ^ 1) != c {
                    return false;
                }
            }
        }
        p.relators()
            .iter()
            .all(|r| (0..self.cosets).all(|c| self.trace(c, r) == c))
    }
}

#[inline]
fn letter_column(x: i32) -> u32 {
    let g = (x.unsigned_abs() - 1) * 2;
    if x > 0 {
        g
    } else {
        g + 1
    }
}

/// Enumerates the cosets of `⟨subgroup⟩` in the group presented by `p`.
/// At most `max_cosets` cosets are held at once; when that is exceeded
/// even after discarding dead cosets, the table is returned with status
/// `Exceeded`.
pub fn coset_enumerate(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> CosetTable {
    let ngens = p.generator_count();
    if ngens == 0 {
        return CosetTable {
            generator_count: 0,
            cosets: 1,
            action: Vec::new(),
            status: EnumerationStatus::Complete,
        };
    }
    let mut e = Enumerator::new(p, max_cosets.max(1));
    let complete = e.run(subgroup);
    if !complete {
        return CosetTable {
            generator_count: ngens,
            cosets: e.live,
            action: Vec::new(),
            status: EnumerationStatus::Exceeded,
        };
    }
    let (cosets, action) = e.standardize();
    CosetTable {
        generator_count: ngens,
        cosets,
        action,
        status: EnumerationStatus::Complete,
    }
}

struct Enumerator {
    ncols: usize,
    max_cosets: usize,
    table: Vec<u32>,
    /// `parent[c] == c` for live cosets; otherwise points towards the
    /// coset `c` was merged into.
    parent: Vec<u32>,
    live: usize,
    /// Relator cycles: `letters[start..start + len]`, grouped by their first
    /// column.
    letters: Vec<u32>,
    cycles_by_column: Vec<Vec<(u32, u32)>>,
    relators: Vec<Vec<u32>>,
    deductions: Vec<(u32, u32)>,
    merge_queue: Vec<u32>,
}

impl Enumerator {
    fn new(p: &Presentation, max_cosets: usize) -> Self {
        let ncols = 2 * p.generator_count();
        let mut relators: Vec<Vec<u32>> = Vec::new();
        let mut seen_rel: HashSet<Vec<u32>> = HashSet::new();
        let mut cycles: HashSet<Vec<u32>> = HashSet::new();
        let mut letters = Vec::new();
        let mut cycles_by_column = vec![Vec::new(); ncols];
        for r in p.relators() {
            let r = cyclic_reduce(r);
            if r.is_empty() {
                continue;
            }
            let cols: Vec<u32> = r.iter().map(|&x| letter_column(x)).collect();
            if !seen_rel.insert(cols.clone()) {
                continue;
            }
            let inv: Vec<u32> = cols.iter().rev().map(|&c| c ^ 1).collect();
            for w in [&cols, &inv] {
                for k in 0..w.len() {
                    let rotated: Vec<u32> = w[k..].iter().chain(&w[..k]).copied().collect();
                    if cycles.insert(rotated.clone()) {
                        let start = letters.len() as u32;
                        cycles_by_column[rotated[0] as usize].push((start, rotated.len() as u32));
                        letters.extend(rotated);
                    }
                }
            }
            relators.push(cols);
        }
        let mut e = Self {
            ncols,
            max_cosets,
            table: Vec::new(),
            parent: Vec::new(),
            live: 0,
            letters,
            cycles_by_column,
            relators,
            deductions: Vec::new(),
            merge_queue: Vec::new(),
        };
        e.new_row();
        e
    }

    #[inline]
    fn get(&self, c: u32, col: u32) -> u32 {
        self.table[c as usize * self.ncols + col as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, col: u32, d: u32) {
        self.table[c as usize * self.ncols + col as usize] = d;
    }

    fn new_row(&mut self) -> u32 {
        let c = self.parent.len() as u32;
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.parent.push(c);
        self.live += 1;
        c
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    /// Makes room for a new coset, compacting dead rows if needed.
    fn reserve(&mut self) -> bool {
        if self.parent.len() < self.max_cosets {
            return true;
        }
        if self.live < self.parent.len() {
            self.compact();
        }
        self.parent.len() < self.max_cosets
    }

    fn define(&mut self, c: u32, col: u32) -> u32 {
        let d = self.new_row();
        self.set(c, col, d);
        self.set(d, col ^ 1, c);
        self.deductions.push((c, col));
        d
    }

    fn run(&mut self, subgroup: &[Word]) -> bool {
        for w in subgroup {
            let cols: Vec<u32> = super::free_reduce(w)
                .iter()
                .map(|&x| letter_column(x))
                .collect();
            if cols.is_empty() {
                continue;
            }
            if !self.scan_and_fill(0, &cols) {
                return false;
            }
            self.process_deductions();
        }
        let mut hole_from = 0u32;
        loop {
            self.process_deductions();
            match self.next_hole(hole_from) {
                Some((c, col)) => {
                    hole_from = c;
                    let rows = self.parent.len();
                    if !self.reserve() {
                        return false;
                    }
                    if self.parent.len() != rows {
                        // compaction renumbered the cosets
                        hole_from = 0;
                        continue;
                    }
                    self.define(c, col);
                }
                None => {
                    if hole_from != 0 {
                        hole_from = 0;
                        continue;
                    }
                    // complete: sweep every relator over every coset once;
                    // anything learned sends us back to the main loop
                    if self.lookahead() {
                        continue;
                    }
                    return true;
                }
            }
        }
    }

    fn next_hole(&self, from: u32) -> Option<(u32, u32)> {
        for c in from..self.parent.len() as u32 {
            if !self.is_live(c) {
                continue;
            }
            let row = &self.table[c as usize * self.ncols..(c as usize + 1) * self.ncols];
            if let Some(col) = row.iter().position(|&d| d == NONE) {
                return Some((c, col as u32));
            }
        }
        None
    }

    /// Scans every relator at every live coset. Returns true if the table
    /// changed.
    fn lookahead(&mut self) -> bool {
        let live_before = self.live;
        let mut changed = false;
        for c in 0..self.parent.len() as u32 {
            for r in 0..self.relators.len() {
                if !self.is_live(c) {
                    break;
                }
                let w = std::mem::take(&mut self.relators[r]);
                let before = self.deductions.len();
                self.scan(c, &w);
                changed |= self.deductions.len() != before;
                self.relators[r] = w;
            }
        }
        changed || self.live != live_before
    }

    fn process_deductions(&mut self) {
        while let Some((c, col)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            let d = self.get(c, col);
            if d == NONE {
                continue;
            }
            for k in 0..self.cycles_by_column[col as usize].len() {
                let (start, len) = self.cycles_by_column[col as usize][k];
                self.scan_cycle(c, start, len);
                if !self.is_live(c) {
                    break;
                }
            }
            if !self.is_live(d) {
                continue;
            }
            let inv = col ^ 1;
            for k in 0..self.cycles_by_column[inv as usize].len() {
                let (start, len) = self.cycles_by_column[inv as usize][k];
                self.scan_cycle(d, start, len);
                if !self.is_live(d) {
                    break;
                }
            }
        }
    }

    fn scan_cycle(&mut self, c: u32, start: u32, len: u32) {
        let (s, n) = (start as usize, len as usize);
        // forward
        let mut f = c;
        let mut i = 0;
        while i < n {
            let next = self.get(f, self.letters[s + i]);
            if next == NONE {
                break;
            }
            f = next;
            i += 1;
        }
        if i == n {
            if f != c {
                self.coincidence(f, c);
            }
            return;
        }
        // backward
        let mut b = c;
        let mut j = n;
        while j > i {
            let next = self.get(b, self.letters[s + j - 1] ^ 1);
            if next == NONE {
                break;
            }
            b = next;
            j -= 1;
        }
        if j == i {
            if f != b {
                self.coincidence(f, b);
            }
        } else if j == i + 1 {
            let col = self.letters[s + i];
            self.set(f, col, b);
            self.set(b, col ^ 1, f);
            self.deductions.push((f, col));
        }
    }

    fn scan(&mut self, c: u32, w: &[u32]) {
        let n = w.len();
        let mut f = c;
        let mut i = 0;
        while i < n {
            let next = self.get(f, w[i]);
            if next == NONE {
                break;
            }
            f = next;
            i += 1;
        }
        if i == n {
            if f != c {
                self.coincidence(f, c);
            }
            return;
        }
        let mut b = c;
        let mut j = n;
        while j > i {
            let next = self.get(b, w[j - 1] ^ 1);
            if next == NONE {
                break;
            }
            b = next;
            j -= 1;
        }
        if j == i {
            if f != b {
                self.coincidence(f, b);
            }
        } else if j == i + 1 {
            self.set(f, w[i], b);
            self.set(b, w[i] ^ 1, f);
            self.deductions.push((f, w[i]));
        }
    }

    /// Traces `w` from `c`, defining new cosets for every gap, and closes the
    /// loop. Returns false if the coset limit is hit.
    fn scan_and_fill(&mut self, c: u32, w: &[u32]) -> bool {
        loop {
            if !self.is_live(c) {
                return true;
            }
            let n = w.len();
            let mut f = c;
            let mut i = 0;
            while i < n && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if i == n {
                if f != c {
                    self.coincidence(f, c);
                }
                return true;
            }
            let mut b = c;
            let mut j = n;
            while j > i && self.get(b, w[j - 1] ^ 1) != NONE {
                b = self.get(b, w[j - 1] ^ 1);
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                self.deductions.push((f, w[i]));
                return true;
            }
            if !self.reserve() {
                return false;
            }
            if !self.is_live(f) {
                continue;
            }
            self.define(f, w[i]);
        }
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut k = c;
        while self.parent[k as usize] != k {
            let next = self.parent[k as usize];
            self.parent[k as usize] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi as usize] = lo;
            self.live -= 1;
            self.merge_queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge_queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.merge_queue.len() {
            let dead = self.merge_queue[i];
            i += 1;
            for col in 0..self.ncols as u32 {
                let d = self.get(dead, col);
                if d == NONE {
                    continue;
                }
                self.set(d, col ^ 1, NONE);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, col);
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                } else {
                    let nu_inv = self.get(nu, col ^ 1);
                    if nu_inv != NONE {
                        self.merge(mu, nu_inv);
                    } else {
                        self.set(mu, col, nu);
                        self.set(nu, col ^ 1, mu);
                        self.deductions.push((mu, col));
                    }
                }
            }
        }
    }

    /// Drops dead rows and renumbers live ones in order.
    fn compact(&mut self) {
        let n = self.parent.len();
        let mut new_index = vec![NONE; n];
        let mut k = 0u32;
        for c in 0..n as u32 {
            if self.is_live(c) {
                new_index[c as usize] = k;
                k += 1;
            }
        }
        let mut table = Vec::with_capacity(k as usize * self.ncols);
        for c in 0..n {
            if new_index[c] == NONE {
                continue;
            }
            for &d in &self.table[c * self.ncols..(c + 1) * self.ncols] {
                table.push(if d == NONE {
                    NONE
                } else {
                    new_index[d as usize]
                });
            }
        }
        self.table = table;
        self.parent = (0..k).collect();
        self.live = k as usize;
        self.deductions.clear();
    }

    /// Renumbers live cosets in order of first appearance from coset 0.
    fn standardize(&mut self) -> (usize, Vec<u32>) {
        let n = self.parent.len();
        let mut new_index = vec![NONE; n];
        let mut order = vec![0u32];
        new_index[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            for col in 0..self.ncols as u32 {
                let d = self.get(c, col);
                if new_index[d as usize] == NONE {
                    new_index[d as usize] = order.len() as u32;
                    order.push(d);
                }
            }
            i += 1;
        }
        let mut action = Vec::with_capacity(order.len() * self.ncols);
        for &c in &order {
            for col in 0..self.ncols as u32 {
                action.push(new_index[self.get(c, col) as usize]);
            }
        }
        (order.len(), action)
    }
}
