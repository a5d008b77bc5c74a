//! Integer partitions, tuples of partitions, and their enumeration.
//!
//! Partitions are stored without zero parts. The empty partition is the unique
//! partition of 0. All enumerations return values in canonical order, which is
//! reverse-lexicographic on the part sequence: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Builds a partition from parts that must already be weakly decreasing and positive.
    pub fn from_parts(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain("partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(k)`; empty when `k == 0`.
    pub fn row(k: usize) -> Self {
        Partition::new(vec![k])
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition: `transpose[j] = #{ i : parts[i] > j }`.
    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order. Both partitions must have the same weight.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.weight() != other.weight() {
            return Err(Error::domain(format!(
                "dominance requires equal weights, got {} and {}",
                self.weight(),
                other.weight()
            )));
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cellwise containment of Young diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Multiset of part values as `(value, multiplicity)` pairs, largest value first.
    pub fn part_multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl Ord for Partition {
    /// Canonical order: reverse-lexicographic on parts.
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition_at(s, 0)
    }
}

fn parse_partition_at(s: &str, offset: usize) -> Result<Partition> {
    let bytes = s.as_bytes();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i >= bytes.len() || bytes[i] != b'[' {
        return Err(Error::parse(offset + i, "expected '['"));
    }
    i += 1;
    let mut parts = Vec::new();
    skip_ws(&mut i);
    if i < bytes.len() && bytes[i] == b']' {
        i += 1;
    } else {
        loop {
            skip_ws(&mut i);
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(Error::parse(offset + i, "expected a positive integer"));
            }
            let value: usize = s[start..i]
                .parse()
                .map_err(|_| Error::parse(offset + start, "integer out of range"))?;
            if value == 0 {
                return Err(Error::parse(offset + start, "parts must be positive"));
            }
            if let Some(&prev) = parts.last() {
                if value > prev {
                    return Err(Error::parse(
                        offset + start,
                        "parts must be weakly decreasing",
                    ));
                }
            }
            parts.push(value);
            skip_ws(&mut i);
            match bytes.get(i) {
                Some(b',') => i += 1,
                Some(b']') => {
                    i += 1;
                    break;
                }
                _ => return Err(Error::parse(offset + i, "expected ',' or ']'")),
            }
        }
    }
    skip_ws(&mut i);
    if i != bytes.len() {
        return Err(Error::parse(offset + i, "unexpected trailing input"));
    }
    Ok(Partition { parts })
}

/// One partition per factor of a product of symmetric groups.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PartitionTuple {
    components: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(components: Vec<Partition>) -> Self {
        PartitionTuple { components }
    }

    pub fn single(p: Partition) -> Self {
        PartitionTuple {
            components: vec![p],
        }
    }

    /// The tuple of one-row partitions, indexing the trivial representation.
    pub fn trivial(weights: &[usize]) -> Self {
        PartitionTuple::new(weights.iter().map(|&k| Partition::row(k)).collect())
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.components
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn weights(&self) -> Vec<usize> {
        self.components.iter().map(Partition::weight).collect()
    }

    /// Sum of the component lengths.
    pub fn len(&self) -> usize {
        self.components.iter().map(Partition::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn transpose(&self) -> Self {
        PartitionTuple::new(self.components.iter().map(Partition::transpose).collect())
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PartitionTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut components = Vec::new();
        let mut offset = 0;
        for piece in s.split(';') {
            components.push(parse_partition_at(piece, offset)?);
            offset += piece.len() + 1;
        }
        Ok(PartitionTuple { components })
    }
}

/// Prescribed lengths `p = (p_1, ..., p_l)`, one per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LengthProfile(pub Vec<usize>);

impl LengthProfile {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// All partitions of `k`, optionally with at most `max_length` parts, in canonical order.
pub fn enumerate_partitions(k: usize, max_length: Option<usize>) -> Vec<Partition> {
    let cap = max_length.unwrap_or(k);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(k, k, cap, &mut cur, &mut out);
    out
}

fn fill_partitions(
    remaining: usize,
    max_part: usize,
    slots: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = remaining.min(max_part);
    // the largest part must be at least ceil(remaining / slots)
    let lo = remaining.div_ceil(slots);
    for p in (lo..=hi).rev() {
        cur.push(p);
        fill_partitions(remaining - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

/// Number of partitions of `k` with at most `max_length` parts, without enumerating them.
pub fn count_partitions(k: usize, max_length: Option<usize>) -> BigUint {
    // conjugation: at most L parts <=> every part at most L
    let largest = max_length.unwrap_or(k).min(k);
    let mut table = vec![BigUint::zero(); k + 1];
    table[0] = BigUint::one();
    for part in 1..=largest {
        for n in part..=k {
            let prev = table[n - part].clone();
            table[n] += prev;
        }
    }
    table.swap_remove(k)
}

/// Number of partitions of exactly `k` with exactly `len` parts.
fn count_exact_length(k: usize, len: usize) -> BigUint {
    if len == 0 {
        return if k == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if len > k {
        return BigUint::zero();
    }
    // removing the first column: partitions of k - len with at most len parts
    count_partitions(k - len, Some(len))
}

/// `F(k, p)`: the number of partition tuples whose i-th component has exactly `p_i` parts.
pub fn count_by_length_profile(weights: &[usize], profile: &LengthProfile) -> Result<BigUint> {
    if weights.len() != profile.0.len() {
        return Err(Error::domain(format!(
            "weight tuple has arity {} but length profile has arity {}",
            weights.len(),
            profile.0.len()
        )));
    }
    Ok(weights
        .iter()
        .zip(&profile.0)
        .map(|(&k, &p)| count_exact_length(k, p))
        .product())
}

/// `Par(k, d)` for tuples: the Cartesian product of bounded enumerations, in canonical order.
pub fn enumerate_partition_tuples(weights: &[usize], max_lengths: &[usize]) -> Result<Vec<PartitionTuple>> {
    if weights.len() != max_lengths.len() {
        return Err(Error::domain(format!(
            "weight tuple has arity {} but length bound has arity {}",
            weights.len(),
            max_lengths.len()
        )));
    }
    let factors: Vec<Vec<Partition>> = weights
        .iter()
        .zip(max_lengths)
        .map(|(&k, &d)| enumerate_partitions(k, Some(d)))
        .collect();
    Ok(cartesian(&factors))
}

pub(crate) fn cartesian(factors: &[Vec<Partition>]) -> Vec<PartitionTuple> {
    let mut out = vec![Vec::<Partition>::new()];
    for factor in factors {
        let mut next = Vec::with_capacity(out.len() * factor.len());
        for prefix in &out {
            for p in factor {
                let mut t = prefix.clone();
                t.push(p.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out.into_iter().map(PartitionTuple::new).collect()
}

/// Every way to distribute the parts of `lambda` between two partitions `(lambda', lambda'')`.
///
/// Equal parts are interchangeable, so the result has `prod_v (m_v + 1)` entries where
/// `m_v` is the multiplicity of the part value `v`. The first entry is `(lambda, ())`,
/// the last is `((), lambda)`.
pub fn splits(lambda: &Partition) -> Vec<(Partition, Partition)> {
    let mults = lambda.part_multiplicities();
    let mut out = Vec::new();
    let mut chosen = vec![0usize; mults.len()];
    split_rec(&mults, 0, &mut chosen, &mut out);
    out
}

fn split_rec(
    mults: &[(usize, usize)],
    idx: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<(Partition, Partition)>,
) {
    if idx == mults.len() {
        let mut first = Vec::new();
        let mut second = Vec::new();
        for (&(v, m), &c) in mults.iter().zip(chosen.iter()) {
            first.extend(std::iter::repeat_n(v, c));
            second.extend(std::iter::repeat_n(v, m - c));
        }
        out.push((Partition { parts: first }, Partition { parts: second }));
        return;
    }
    for c in (0..=mults[idx].1).rev() {
        chosen[idx] = c;
        split_rec(mults, idx + 1, chosen, out);
    }
}
