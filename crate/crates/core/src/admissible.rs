//! The admissible sets `I(lambda)`, `I(k, d, m)` and their tuple versions.
//!
//! `I(k, d, m)` collects every `mu` occurring in some split module
//! `S_{lambda', lambda''}` with `lambda` running over partitions of `k` with at
//! most `t = (2d)^m` parts.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exec;
use crate::partition::{cartesian, enumerate_partitions, splits, Partition, PartitionTuple};
use crate::induction::split_module;

/// `(2d)^m`, or `None` on overflow.
pub fn threshold(d: usize, m: usize) -> Option<usize> {
    let base = d.checked_mul(2)?;
    base.checked_pow(u32::try_from(m).ok()?)
}

/// The row bound actually needed for partitions of `k`: `min(k, (2d)^m)`.
pub(crate) fn effective_threshold(k: usize, d: usize, m: usize) -> usize {
    threshold(d, m).map_or(k, |t| t.min(k))
}

/// `min(k, (2d)^m)` after checking that `d` and `m` are positive.
pub fn effective_threshold_for(k: usize, d: usize, m: usize) -> Result<usize> {
    check_positive(d, m)?;
    Ok(effective_threshold(k, d, m))
}

/// Members of a product of admissible sets, together with the parameters that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleSet {
    pub weights: Vec<usize>,
    pub degrees: Vec<usize>,
    pub widths: Vec<usize>,
    members: Vec<PartitionTuple>,
}

impl AdmissibleSet {
    /// Members in canonical order.
    pub fn members(&self) -> &[PartitionTuple] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mu: &PartitionTuple) -> bool {
        self.members.binary_search(mu).is_ok()
    }
}

fn support_cache() -> &'static DashMap<Partition, BTreeSet<Partition>> {
    static CACHE: OnceLock<DashMap<Partition, BTreeSet<Partition>>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

pub(crate) fn clear_cache() {
    support_cache().clear();
}

/// `I(lambda)` for a single partition: the union over all splits of the split-module supports.
pub fn admissible_for_partition(lambda: &Partition) -> BTreeSet<Partition> {
    if let Some(s) = support_cache().get(lambda) {
        return s.clone();
    }
    let mut out = BTreeSet::new();
    for (t, s) in splits(lambda) {
        for key in split_module(&t, &s).support() {
            out.insert(key.components()[0].clone());
        }
    }
    support_cache().insert(lambda.clone(), out.clone());
    out
}

/// `I(lambda)` for a tuple: Cartesian product of the per-component sets.
pub fn admissible_for(lambda: &PartitionTuple) -> Vec<PartitionTuple> {
    let factors: Vec<Vec<Partition>> = lambda
        .components()
        .iter()
        .map(|l| admissible_for_partition(l).into_iter().collect())
        .collect();
    cartesian(&factors)
}

/// `I(k, d, m)`.
pub fn admissible_set(k: usize, d: usize, m: usize) -> Result<AdmissibleSet> {
    let members = admissible_partitions(k, d, m)?
        .into_iter()
        .map(PartitionTuple::single)
        .collect();
    Ok(AdmissibleSet {
        weights: vec![k],
        degrees: vec![d],
        widths: vec![m],
        members,
    })
}

fn check_positive(d: usize, m: usize) -> Result<()> {
    if d == 0 || m == 0 {
        return Err(Error::domain("degree and block width must be positive"));
    }
    Ok(())
}

fn admissible_partitions(k: usize, d: usize, m: usize) -> Result<Vec<Partition>> {
    check_positive(d, m)?;
    let t = effective_threshold(k, d, m);
    let lambdas = enumerate_partitions(k, Some(t));
    let pieces = exec::map(&lambdas, admissible_for_partition);
    let mut union = BTreeSet::new();
    for piece in pieces {
        union.extend(piece);
    }
    Ok(union.into_iter().collect())
}

/// `I(k, d, m)` for tuples, with a uniform degree `d`.
pub fn admissible_set_tuple(weights: &[usize], d: usize, widths: &[usize]) -> Result<AdmissibleSet> {
    if weights.len() != widths.len() {
        return Err(Error::domain("weights and block widths must have equal arity"));
    }
    let factors = weights
        .iter()
        .zip(widths)
        .map(|(&k, &m)| admissible_partitions(k, d, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(AdmissibleSet {
        weights: weights.to_vec(),
        degrees: vec![d; weights.len()],
        widths: widths.to_vec(),
        members: cartesian(&factors),
    })
}

/// Size of `I(k, d, m)` for tuples, as the product of the factor sizes.
pub fn admissible_count(weights: &[usize], d: usize, widths: &[usize]) -> Result<BigUint> {
    let mut total = BigUint::from(1u32);
    for (&k, &m) in weights.iter().zip(widths) {
        total *= BigUint::from(admissible_partitions(k, d, m)?.len());
    }
    Ok(total)
}

/// `#{i : mu_i >= t} <= t` and `#{j : mu~_j >= t} <= t` with `t = (2d)^m`.
pub fn restriction_check(mu: &Partition, d: usize, m: usize) -> bool {
    let Some(t) = threshold(d, m) else {
        return true;
    };
    let long_rows = mu.parts().iter().filter(|&&p| p >= t).count();
    let long_cols = mu.transpose().parts().iter().filter(|&&p| p >= t).count();
    long_rows <= t && long_cols <= t
}

/// Whether the diagram of `mu` fits inside `a` full rows plus `b` full columns for
/// some `a + b <= t`, i.e. `mu_{a+1} <= t - a` for some `a` in `0..=t`.
///
/// Every constituent of a split module of a partition with at most `t` parts has
/// this shape, so failing it proves `mu` is not in `I(k, d, m)`.
pub fn fat_hook_check(mu: &Partition, t: usize) -> bool {
    (0..=t).any(|a| mu.part(a) <= t - a)
}

/// Exact membership `mu ∈ I(k, d, m)` with `k = |mu|`.
pub fn is_admissible(mu: &Partition, d: usize, m: usize) -> Result<bool> {
    check_positive(d, m)?;
    let k = mu.weight();
    let t = effective_threshold(k, d, m);
    if !fat_hook_check(mu, t) {
        return Ok(false);
    }
    let lambdas = enumerate_partitions(k, Some(t));
    Ok(exec::any(&lambdas, |lam| {
        splits(lam)
            .iter()
            .any(|(a, b)| !split_module(a, b).coefficient(mu).is_zero())
    }))
}

/// Componentwise membership in `I(k, d, m)` for tuples.
pub fn is_admissible_tuple(mu: &PartitionTuple, d: usize, widths: &[usize]) -> Result<bool> {
    if mu.arity() != widths.len() {
        return Err(Error::domain("tuple and block widths must have equal arity"));
    }
    for (p, &m) in mu.components().iter().zip(widths) {
        if !is_admissible(p, d, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.to_vec()).unwrap()
    }

    #[test]
    fn admissible_for_examples() {
        let k = 5;
        let got = admissible_for_partition(&Partition::row(k));
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![Partition::row(k), Partition::column(k)]);
        let one = admissible_for(&PartitionTuple::single(p(&[1])));
        assert_eq!(one, vec![PartitionTuple::single(p(&[1]))]);
        for k in 1..=7 {
            for lam in enumerate_partitions(k, None) {
                assert!(admissible_for_partition(&lam).contains(&Partition::row(k)));
            }
        }
    }

    #[test]
    fn staircase_excluded_at_threshold_two() {
        let set = admissible_set(7, 1, 1).unwrap();
        assert!(!set.contains(&PartitionTuple::single(p(&[4, 2, 1]))));
        assert!(!is_admissible(&p(&[4, 2, 1]), 1, 1).unwrap());
        assert!(set.contains(&PartitionTuple::single(Partition::row(7))));
        assert!(set.contains(&PartitionTuple::single(Partition::column(7))));
    }

    #[test]
    fn membership_matches_enumeration() {
        for k in 1..=9 {
            for (d, m) in [(1, 1), (1, 2), (2, 1)] {
                let set = admissible_set(k, d, m).unwrap();
                for mu in enumerate_partitions(k, None) {
                    assert_eq!(
                        set.contains(&PartitionTuple::single(mu.clone())),
                        is_admissible(&mu, d, m).unwrap(),
                        "{mu} d={d} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn restriction_check_examples() {
        for (d, m) in [(1, 1), (2, 1), (1, 3)] {
            assert!(restriction_check(&Partition::row(9), d, m));
            assert!(restriction_check(&Partition::column(9), d, m));
            let t = threshold(d, m).unwrap() + 1;
            let square = Partition::new(vec![t; t]);
            assert!(!restriction_check(&square, d, m));
        }
    }

    #[test]
    fn restriction_check_boundary_counterexample() {
        // (3,3) ∈ I(6,1,1) through the split ((3,3), ()), yet it has three columns of height 2.
        assert!(is_admissible(&p(&[3, 3]), 1, 1).unwrap());
        assert!(!restriction_check(&p(&[3, 3]), 1, 1));
        assert!(is_admissible(&p(&[2, 2, 2]), 1, 1).unwrap());
        assert!(!restriction_check(&p(&[2, 2, 2]), 1, 1));
        assert!(fat_hook_check(&p(&[3, 3]), 2));
    }

    #[test]
    fn members_fit_fat_hooks() {
        for k in 1..=12 {
            for (d, m) in [(1, 1), (1, 2), (2, 1)] {
                let t = effective_threshold(k, d, m);
                for mu in admissible_set(k, d, m).unwrap().members() {
                    assert!(fat_hook_check(&mu.components()[0], t), "{mu}");
                }
            }
        }
    }

    #[test]
    fn monotone_in_degree_and_width() {
        for k in 1..=10 {
            let base = admissible_set(k, 1, 1).unwrap();
            for bigger in [admissible_set(k, 2, 1).unwrap(), admissible_set(k, 1, 2).unwrap()] {
                for mu in base.members() {
                    assert!(bigger.contains(mu));
                }
            }
        }
    }

    #[test]
    fn tuple_sets_are_products() {
        let one = admissible_set(2, 1, 1).unwrap();
        let two = admissible_set_tuple(&[2, 2], 1, &[1, 1]).unwrap();
        assert_eq!(two.len(), one.len() * one.len());
        assert_eq!(admissible_set_tuple(&[5], 1, &[1]).unwrap().members(), admissible_set(5, 1, 1).unwrap().members());
        assert_eq!(admissible_count(&[4, 3], 1, &[1, 1]).unwrap(), BigUint::from(two_count(4, 3)));
        assert!(admissible_set_tuple(&[2, 2], 1, &[1]).is_err());
    }

    fn two_count(a: usize, b: usize) -> usize {
        admissible_set(a, 1, 1).unwrap().len() * admissible_set(b, 1, 1).unwrap().len()
    }

    #[test]
    fn threshold_overflow_is_handled() {
        assert_eq!(threshold(2, 1), Some(4));
        assert_eq!(threshold(usize::MAX, 1), None);
        assert_eq!(effective_threshold(5, 1000, 1000), 5);
        assert!(restriction_check(&p(&[3, 3]), 1000, 1000));
    }
}
