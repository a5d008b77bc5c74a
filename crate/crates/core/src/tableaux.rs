//! Hook lengths, Specht-module dimensions, Kostka numbers and
//! Littlewood–Richardson coefficients.
//!
//! Kostka numbers and LR coefficients are memoized in process-wide concurrent
//! caches keyed by the partitions involved.

use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::domain(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// No two cells share a column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i - 1))
    }

    /// No two cells share a row.
    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.part(i) - self.inner.part(i) <= 1)
    }
}

/// Hook length of every cell, row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookProfile {
    rows: Vec<Vec<usize>>,
}

impl HookProfile {
    pub fn of(lambda: &Partition) -> Self {
        let conj = lambda.transpose();
        let rows = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &row_len)| {
                (0..row_len)
                    .map(|j| (row_len - j) + (conj.part(j) - i) - 1)
                    .collect()
            })
            .collect();
        HookProfile { rows }
    }

    /// Hook length of cell `(i, j)` (0-based), if it lies in the diagram.
    pub fn hook(&self, i: usize, j: usize) -> Option<usize> {
        self.rows.get(i).and_then(|r| r.get(j)).copied()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn product(&self) -> BigUint {
        self.rows
            .iter()
            .flatten()
            .fold(BigUint::one(), |acc, &h| acc * BigUint::from(h))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `n / d`, panicking if the division leaves a remainder.
fn exact_div(n: &BigUint, d: &BigUint) -> BigUint {
    let (q, r) = n.div_rem(d);
    assert!(r.is_zero(), "non-exact division {n} / {d}");
    q
}

/// Dimension of the Specht module, `k! / prod of hook lengths`.
pub fn specht_dim(lambda: &Partition) -> BigUint {
    exact_div(&factorial(lambda.weight()), &HookProfile::of(lambda).product())
}

/// Closed form `k! (mu1 - mu2 + 1) / ((mu1 + 1)! mu2!)` for partitions with at most two rows.
pub fn two_row_dim(mu: &Partition) -> Result<BigUint> {
    if mu.len() > 2 {
        return Err(Error::domain(format!("{mu} has more than two rows")));
    }
    let (a, b) = (mu.part(0), mu.part(1));
    let num = factorial(a + b) * BigUint::from(a - b + 1);
    Ok(exact_div(&num, &(factorial(a + 1) * factorial(b))))
}

type KostkaKey = (Partition, Partition);
type LrKey = (Partition, Partition, Partition);

fn kostka_cache() -> &'static DashMap<KostkaKey, BigUint> {
    static CACHE: OnceLock<DashMap<KostkaKey, BigUint>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

fn lr_cache() -> &'static DashMap<LrKey, BigUint> {
    static CACHE: OnceLock<DashMap<LrKey, BigUint>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

pub(crate) fn clear_caches() {
    kostka_cache().clear();
    lr_cache().clear();
}

/// Number of semistandard tableaux of shape `mu` and content `lambda`.
pub fn kostka(mu: &Partition, lambda: &Partition) -> Result<BigUint> {
    if mu.weight() != lambda.weight() {
        return Err(Error::domain(format!(
            "Kostka number needs equal weights, got |{mu}| = {} and |{lambda}| = {}",
            mu.weight(),
            lambda.weight()
        )));
    }
    Ok(kostka_inner(mu, lambda))
}

// Peels off the cells holding the largest entry; they form a horizontal strip
// of size `lambda.last()` along the outer rim of `mu`.
fn kostka_inner(mu: &Partition, lambda: &Partition) -> BigUint {
    if lambda.is_empty() {
        return if mu.is_empty() { BigUint::one() } else { BigUint::zero() };
    }
    if mu.len() > lambda.len() {
        return BigUint::zero();
    }
    let key = (mu.clone(), lambda.clone());
    if let Some(v) = kostka_cache().get(&key) {
        return v.clone();
    }
    let strip = lambda.part(lambda.len() - 1);
    let rest = Partition::new(lambda.parts()[..lambda.len() - 1].to_vec());
    let mut total = BigUint::zero();
    for inner in horizontal_strip_removals(mu, strip) {
        total += kostka_inner(&inner, &rest);
    }
    kostka_cache().insert(key, total.clone());
    total
}

/// All `nu` with `mu / nu` a horizontal strip of exactly `size` cells.
fn horizontal_strip_removals(mu: &Partition, size: usize) -> Vec<Partition> {
    let n = mu.len();
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn go(mu: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let n = mu.len();
        if i == n {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        let lo = mu.part(i + 1);
        let hi = mu.part(i);
        // capacity of the remaining rows bounds how much we may still remove
        let rest_cap: usize = (i + 1..n).map(|r| mu.part(r) - mu.part(r + 1)).sum();
        for keep in (lo..=hi).rev() {
            let removed = hi - keep;
            if removed > left {
                break;
            }
            if left - removed > rest_cap {
                continue;
            }
            cur[i] = keep;
            go(mu, i + 1, left - removed, cur, out);
        }
    }
    go(mu, 0, size, &mut cur, &mut out);
    out
}

/// Littlewood–Richardson coefficient `c^nu_{lambda, mu}`, counted as LR tableaux
/// of shape `nu / lambda` and content `mu`.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    if nu.weight() != lambda.weight() + mu.weight() {
        return Err(Error::domain(format!(
            "LR coefficient needs |nu| = |lambda| + |mu|, got {} != {} + {}",
            nu.weight(),
            lambda.weight(),
            mu.weight()
        )));
    }
    if !nu.contains(lambda) || !nu.contains(mu) {
        return Ok(BigUint::zero());
    }
    if mu.is_empty() {
        return Ok(BigUint::from((nu == lambda) as u32));
    }
    let key = (nu.clone(), lambda.clone(), mu.clone());
    if let Some(v) = lr_cache().get(&key) {
        return Ok(v.clone());
    }
    let mut filler = LrFiller::new(nu, lambda, mu);
    filler.fill(0, nu.part(0));
    let value = BigUint::from(filler.count);
    lr_cache().insert(key, value.clone());
    Ok(value)
}

/// Backtracking over skew fillings in reverse reading order (rows top to
/// bottom, each row right to left), pruning on the lattice condition as it goes.
struct LrFiller<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    content: &'a Partition,
    grid: Vec<Vec<usize>>,
    used: Vec<usize>,
    count: u64,
}

impl<'a> LrFiller<'a> {
    fn new(outer: &'a Partition, inner: &'a Partition, content: &'a Partition) -> Self {
        let grid = outer.parts().iter().map(|&r| vec![0usize; r]).collect();
        LrFiller {
            outer,
            inner,
            content,
            grid,
            used: vec![0; content.len() + 1],
            count: 0,
        }
    }

    /// Fill cell `(row, col - 1)`; `col` counts down from the row length.
    fn fill(&mut self, row: usize, col: usize) {
        if row == self.outer.len() {
            self.count += 1;
            return;
        }
        if col == self.inner.part(row) {
            let next = self.outer.part(row + 1);
            self.fill(row + 1, next);
            return;
        }
        let c = col - 1;
        // rows weakly increase left to right, so this cell is at most its right neighbour
        let mut hi = self.content.len();
        if c + 1 < self.outer.part(row) {
            hi = hi.min(self.grid[row][c + 1]);
        }
        // entries in row r of an LR tableau never exceed r + 1
        hi = hi.min(row + 1);
        let lo = if row > 0 && c >= self.inner.part(row - 1) {
            self.grid[row - 1][c] + 1
        } else {
            1
        };
        for v in lo..=hi {
            if self.used[v] >= self.content.part(v - 1) {
                continue;
            }
            if v > 1 && self.used[v] >= self.used[v - 1] {
                continue;
            }
            self.used[v] += 1;
            self.grid[row][c] = v;
            self.fill(row, c);
            self.used[v] -= 1;
        }
        self.grid[row][c] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_profile_of_staircase() {
        let h = HookProfile::of(&p(&[3, 2, 1]));
        assert_eq!(h.rows(), &[vec![5, 3, 1], vec![3, 1], vec![1]]);
        assert_eq!(h.hook(0, 0), Some(5));
        assert_eq!(h.hook(2, 1), None);
    }

    #[test]
    fn specht_dim_examples() {
        for k in 1..=9 {
            assert_eq!(specht_dim(&Partition::row(k)), BigUint::one());
            assert_eq!(specht_dim(&Partition::column(k)), BigUint::one());
        }
        assert_eq!(specht_dim(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(specht_dim(&p(&[2, 2])), BigUint::from(2u32));
        assert_eq!(specht_dim(&p(&[3, 2, 1])), BigUint::from(16u32));
        assert_eq!(specht_dim(&Partition::empty()), BigUint::one());
    }

    #[test]
    fn two_row_closed_form() {
        assert_eq!(two_row_dim(&p(&[3, 1])).unwrap(), BigUint::from(3u32));
        assert_eq!(two_row_dim(&p(&[6])).unwrap(), BigUint::one());
        assert_eq!(two_row_dim(&p(&[2, 2])).unwrap(), BigUint::from(2u32));
        assert!(matches!(two_row_dim(&p(&[1, 1, 1])), Err(Error::Domain(_))));
        for k in 0..=14 {
            for mu in enumerate_partitions(k, Some(2)) {
                assert_eq!(two_row_dim(&mu).unwrap(), specht_dim(&mu));
            }
        }
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for k in 0..=10 {
            let s: BigUint = enumerate_partitions(k, None)
                .iter()
                .map(|l| {
                    let d = specht_dim(l);
                    &d * &d
                })
                .sum();
            assert_eq!(s, factorial(k));
        }
    }

    #[test]
    fn transpose_preserves_dimension() {
        for k in 0..=12 {
            for l in enumerate_partitions(k, None) {
                assert_eq!(specht_dim(&l), specht_dim(&l.transpose()));
            }
        }
    }

    #[test]
    fn kostka_examples() {
        for k in 0..=7 {
            for mu in enumerate_partitions(k, None) {
                assert_eq!(kostka(&mu, &mu).unwrap(), BigUint::one());
                assert_eq!(kostka(&Partition::row(k), &mu).unwrap(), BigUint::one());
            }
        }
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), BigUint::from(2u32));
        assert!(matches!(kostka(&p(&[2]), &p(&[1])), Err(Error::Domain(_))));
    }

    #[test]
    fn kostka_vanishes_off_dominance() {
        for k in 0..=8 {
            let all = enumerate_partitions(k, None);
            for mu in &all {
                for lam in &all {
                    if !mu.dominates(lam).unwrap() {
                        assert!(kostka(mu, lam).unwrap().is_zero(), "K({mu},{lam})");
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_column_content_counts_syt() {
        for k in 0..=8 {
            for mu in enumerate_partitions(k, None) {
                assert_eq!(kostka(&mu, &Partition::column(k)).unwrap(), specht_dim(&mu));
            }
        }
    }

    #[test]
    fn lr_examples() {
        for k in 0..=5 {
            for nu in enumerate_partitions(k, None) {
                for lam in enumerate_partitions(k, None) {
                    let c = lr_coefficient(&nu, &lam, &Partition::empty()).unwrap();
                    assert_eq!(c, BigUint::from((nu == lam) as u32));
                }
            }
        }
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])).unwrap(), BigUint::one());
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[2]), &p(&[2])).unwrap(), BigUint::one());
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(), BigUint::from(2u32));
        assert!(lr_coefficient(&p(&[3]), &p(&[2, 1]), &Partition::empty()).unwrap().is_zero());
        assert!(lr_coefficient(&p(&[3]), &p(&[2]), &Partition::empty()).is_err());
        assert!(lr_coefficient(&p(&[2, 1]), &p(&[1, 1]), &p(&[1])).unwrap().is_one());
        assert!(lr_coefficient(&p(&[3]), &p(&[1, 1]), &p(&[1])).unwrap().is_zero());
    }

    #[test]
    fn lr_one_row_content_is_horizontal_strip_indicator() {
        for total in 0..=8 {
            for n in 0..=total {
                for lam in enumerate_partitions(total - n, None) {
                    for nu in enumerate_partitions(total, None) {
                        let c = lr_coefficient(&nu, &lam, &Partition::row(n)).unwrap();
                        let strip = nu.contains(&lam)
                            && SkewShape::new(nu.clone(), lam.clone()).unwrap().is_horizontal_strip();
                        assert_eq!(c, BigUint::from(strip as u32), "{nu}/{lam} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn lr_is_symmetric() {
        for total in 0..=7 {
            for a in 0..=total {
                for lam in enumerate_partitions(a, None) {
                    for mu in enumerate_partitions(total - a, None) {
                        for nu in enumerate_partitions(total, None) {
                            assert_eq!(
                                lr_coefficient(&nu, &lam, &mu).unwrap(),
                                lr_coefficient(&nu, &mu, &lam).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn induced_dimension_count() {
        for total in 0..=8 {
            for a in 0..=total {
                for lam in enumerate_partitions(a, None) {
                    for mu in enumerate_partitions(total - a, None) {
                        let lhs: BigUint = enumerate_partitions(total, None)
                            .iter()
                            .map(|nu| lr_coefficient(nu, &lam, &mu).unwrap() * specht_dim(nu))
                            .sum();
                        let rhs = specht_dim(&lam) * specht_dim(&mu) * binomial(total, a);
                        assert_eq!(lhs, rhs, "{lam} x {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn skew_shapes() {
        assert!(SkewShape::new(p(&[3, 1]), p(&[1])).unwrap().is_horizontal_strip());
        let s = SkewShape::new(p(&[3, 2]), p(&[1])).unwrap();
        assert_eq!(s.size(), 4);
        assert!(!s.is_horizontal_strip());
        assert!(!s.is_vertical_strip());
        assert!(SkewShape::new(p(&[3, 1]), p(&[2])).unwrap().is_horizontal_strip());
        assert!(SkewShape::new(p(&[2, 1, 1]), p(&[1, 1])).unwrap().is_vertical_strip());
        assert!(SkewShape::new(p(&[1]), p(&[2])).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }
}
