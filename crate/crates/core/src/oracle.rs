//! Brute-force counters used to cross-check the tableau routines.
//!
//! These share no code with [`crate::tableaux`]: they work on explicit cell
//! grids, enumerate fillings cell by cell in row-major order and test the
//! defining conditions directly. They refuse inputs above [`ORACLE_MAX_WEIGHT`].

use crate::error::{Error, Result};
use crate::partition::Partition;

pub const ORACLE_MAX_WEIGHT: usize = 10;

fn check_cap(weight: usize) -> Result<()> {
    if weight > ORACLE_MAX_WEIGHT {
        return Err(Error::domain(format!(
            "oracle refuses weight {weight} (cap {ORACLE_MAX_WEIGHT})"
        )));
    }
    Ok(())
}

/// Cells of `outer / inner` as `(row, col)`, in row-major order.
fn cells(outer: &[usize], inner: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (r, &len) in outer.iter().enumerate() {
        let start = inner.get(r).copied().unwrap_or(0);
        for c in start..len {
            out.push((r, c));
        }
    }
    out
}

/// Standard Young tableaux of shape `lambda`, counted by placing 1, 2, ..., k
/// one at a time into any cell whose left and upper neighbours are already filled.
pub fn oracle_count_syt(lambda: &Partition) -> Result<u64> {
    check_cap(lambda.weight())?;
    let rows = lambda.parts().to_vec();
    let mut filled = vec![0usize; rows.len()];
    fn go(rows: &[usize], filled: &mut [usize], left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for r in 0..rows.len() {
            let c = filled[r];
            if c >= rows[r] {
                continue;
            }
            if r > 0 && filled[r - 1] <= c {
                continue;
            }
            filled[r] += 1;
            total += go(rows, filled, left - 1);
            filled[r] -= 1;
        }
        total
    }
    Ok(go(&rows, &mut filled, lambda.weight()))
}

/// Fills every cell of `outer / inner` with a value from the multiset given by
/// `content` (value `v + 1` appears `content[v]` times), requiring rows to weakly
/// increase and columns to strictly increase. Calls `accept` on each complete filling.
fn semistandard_fillings(
    outer: &[usize],
    inner: &[usize],
    content: &[usize],
    accept: &mut dyn FnMut(&[Vec<usize>]) -> bool,
) -> u64 {
    let cells = cells(outer, inner);
    let mut grid: Vec<Vec<usize>> = outer.iter().map(|&r| vec![0; r]).collect();
    let mut remaining = content.to_vec();
    let mut count = 0;
    #[allow(clippy::too_many_arguments)]
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        inner: &[usize],
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut [usize],
        accept: &mut dyn FnMut(&[Vec<usize>]) -> bool,
        count: &mut u64,
    ) {
        if idx == cells.len() {
            if accept(grid) {
                *count += 1;
            }
            return;
        }
        let (r, c) = cells[idx];
        for v in 1..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            let left_ok = c == 0 || c <= inner.get(r).copied().unwrap_or(0) || grid[r][c - 1] <= v;
            let start_above = if r == 0 { usize::MAX } else { inner.get(r - 1).copied().unwrap_or(0) };
            let up_ok = r == 0 || c < start_above || grid[r - 1][c] < v;
            if !(left_ok && up_ok) {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[r][c] = v;
            go(idx + 1, cells, inner, grid, remaining, accept, count);
            grid[r][c] = 0;
            remaining[v - 1] += 1;
        }
    }
    go(0, &cells, inner, &mut grid, &mut remaining, accept, &mut count);
    count
}

/// Semistandard tableaux of shape `mu` and content `lambda`, by exhaustive filling.
pub fn oracle_count_ssyt(mu: &Partition, lambda: &Partition) -> Result<u64> {
    check_cap(mu.weight().max(lambda.weight()))?;
    if mu.weight() != lambda.weight() {
        return Ok(0);
    }
    Ok(semistandard_fillings(mu.parts(), &[], lambda.parts(), &mut |_| true))
}

/// LR tableaux of shape `nu / lambda` and content `mu`, by exhaustive semistandard
/// filling followed by a lattice-word test on the reverse reading word.
pub fn oracle_lr(nu: &Partition, lambda: &Partition, mu: &Partition) -> Result<u64> {
    check_cap(nu.weight())?;
    if nu.weight() != lambda.weight() + mu.weight() {
        return Ok(0);
    }
    let inner = lambda.parts();
    if inner.len() > nu.len() || inner.iter().zip(nu.parts()).any(|(a, b)| a > b) {
        return Ok(0);
    }
    let outer = nu.parts();
    let letters = mu.len();
    let mut lattice = |grid: &[Vec<usize>]| {
        let mut seen = vec![0usize; letters + 1];
        for (r, row) in grid.iter().enumerate() {
            let start = inner.get(r).copied().unwrap_or(0);
            for c in (start..outer[r]).rev() {
                let v = row[c];
                seen[v] += 1;
                if v > 1 && seen[v] > seen[v - 1] {
                    return false;
                }
            }
        }
        true
    };
    Ok(semistandard_fillings(outer, inner, mu.parts(), &mut lattice))
}
