use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Invariant factors `d_1 | d_2 | ... | d_k`, each at least 2. The trivial
/// group has no factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianInvariants {
    factors: Vec<u64>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Normalizes an arbitrary list of cyclic orders (a diagonal matrix, or a
    /// list of prime powers) into invariant-factor form. Entries `0` and `1`
    /// are ignored here; callers deal with free factors separately.
    pub fn from_cyclic_orders<I: IntoIterator<Item = u64>>(orders: I) -> Self {
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for d in orders {
            if d <= 1 {
                continue;
            }
            for (p, e) in factorize(d) {
                by_prime.entry(p).or_default().push(e);
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            // largest powers go to the last (largest) invariant factor
            for (i, e) in exps.into_iter().enumerate() {
                factors[len - 1 - i] *= p.pow(e);
            }
        }
        Self { factors }
    }

    /// Checks the divisibility chain.
    pub fn from_factors(factors: Vec<u64>) -> Option<Self> {
        let ok = factors.iter().all(|&d| d >= 2) && factors.windows(2).all(|w| w[1] % w[0] == 0);
        ok.then_some(Self { factors })
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Rank (number of invariant factors), i.e. the minimal number of
    /// generators.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Elementary divisors as sorted prime powers.
    pub fn elementary_divisors(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .factors
            .iter()
            .flat_map(|&d| factorize(d).into_iter().map(|(p, e)| p.pow(e)))
            .collect();
        out.sort_unstable();
        out
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("C{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factors of an abelian group, read off from the element-order
/// statistics of each Sylow subgroup: the number of cyclic factors of
/// `p`-exponent at least `k` is `log_p |Ω_k| - log_p |Ω_{k-1}|`.
pub fn abelian_invariants(g: &FiniteGroup) -> Result<AbelianInvariants> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let orders = g.element_orders();
    let mut divisors = Vec::new();
    for (p, e) in factorize(g.order() as u64) {
        // log_p of the number of elements of order dividing p^k
        let mut prev = 0u32;
        let mut counts = Vec::new();
        for k in 1..=e {
            let pk = p.pow(k);
            let c = orders.iter().filter(|&&o| pk % o as u64 == 0).count() as u64;
            let logc = ilog(c, p);
            counts.push(logc - prev);
            prev = logc;
        }
        // counts[k-1] = number of factors with exponent >= k
        for k in 1..=e as usize {
            let at_least = counts[k - 1];
            let more = counts.get(k).copied().unwrap_or(0);
            for _ in 0..(at_least - more) {
                divisors.push(p.pow(k as u32));
            }
        }
    }
    Ok(AbelianInvariants::from_cyclic_orders(divisors))
}

fn ilog(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0);
        n /= p;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin;

    #[test]
    fn cyclic_and_products() {
        assert_eq!(
            abelian_invariants(&builtin("C6").unwrap())
                .unwrap()
                .factors(),
            &[6]
        );
        assert_eq!(
            abelian_invariants(&builtin("C2xC4").unwrap())
                .unwrap()
                .factors(),
            &[2, 4]
        );
        assert_eq!(
            abelian_invariants(&builtin("C4xC2").unwrap())
                .unwrap()
                .factors(),
            &[2, 4]
        );
        assert!(abelian_invariants(&FiniteGroup::trivial())
            .unwrap()
            .is_trivial());
        assert_eq!(
            abelian_invariants(&builtin("E2^3").unwrap())
                .unwrap()
                .factors(),
            &[2, 2, 2]
        );
        assert_eq!(
            abelian_invariants(&builtin("C6xC4").unwrap())
                .unwrap()
                .factors(),
            &[2, 12]
        );
    }

    #[test]
    fn nonabelian_rejected() {
        assert_eq!(
            abelian_invariants(&builtin("S3").unwrap()).unwrap_err(),
            Error::NotAbelian
        );
    }

    #[test]
    fn normalizes_diagonals() {
        let a = AbelianInvariants::from_cyclic_orders([1, 4, 2, 0, 3]);
        assert_eq!(a.factors(), &[2, 12]);
        assert_eq!(a.order(), 24);
        assert_eq!(a.elementary_divisors(), vec![2, 3, 4]);
    }
}
