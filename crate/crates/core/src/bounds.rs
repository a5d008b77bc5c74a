//! Exact evaluation of the multiplicity bounds for symmetric varieties and
//! semi-algebraic sets.
//!
//! Every value here is the exact finite sum; the asymptotic forms are carried
//! as text in [`BoundReport::asymptotic_note`] and never evaluated.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::admissible::{effective_threshold, is_admissible_tuple};
use crate::error::{Error, Result};
use crate::exec;
use crate::induction::max_split_multiplicity;
use crate::partition::{count_partitions, enumerate_partitions, Partition, PartitionTuple};
use crate::tableaux::binomial;

pub const DEFAULT_TERM_CAP: u64 = 10_000_000;

/// Which bound a report came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// Real affine varieties, one defining polynomial.
    Affine,
    /// Closed semi-algebraic sets defined by `s` polynomials.
    SemiAlgebraic,
    /// Complex affine varieties, via the real and imaginary parts.
    Complex,
    /// Complex projective varieties, via the Hopf sphere over the cone.
    Projective,
    /// Dimension of the cohomology of the orbit space.
    Equivariant,
    /// Image of a projection, via symmetric fiber powers.
    ProjectionImage,
}

impl BoundKind {
    pub fn tag(self) -> &'static str {
        match self {
            BoundKind::Affine => "affine",
            BoundKind::SemiAlgebraic => "sa",
            BoundKind::Complex => "complex",
            BoundKind::Projective => "projective",
            BoundKind::Equivariant => "equivariant",
            BoundKind::ProjectionImage => "projection",
        }
    }

    fn asymptotic_note(self) -> &'static str {
        match self {
            BoundKind::Affine => "m_mu <= prod_i k_i^{O(d^{2 m_i})} d^{m_i d}",
            BoundKind::SemiAlgebraic => "m_mu <= O(s)^D prod_i k_i^{O(d^{2 m_i})} d^{m_i (2d)^{m_i}}",
            BoundKind::Complex => "m_mu <= prod_i k_i^{O(d^{4 m_i})} d^{2 m_i d}",
            BoundKind::Projective => "m_mu <= k^{O(d^4)} d^{2d}",
            BoundKind::Equivariant => "b(V/S_k) <= k^{(2d)^m} O(d)^{m (2d)^m + l}",
            BoundKind::ProjectionImage => "b(pi(V)) <= k^{(2d)^m} O(d)^{k + m (2d)^m + 1}",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for BoundKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Parameters `(k, m, d, s)` of a bound. `d` is uniform across blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundParams {
    #[serde(serialize_with = "decimal_vec")]
    pub k: Vec<usize>,
    #[serde(serialize_with = "decimal_vec")]
    pub m: Vec<usize>,
    #[serde(serialize_with = "decimal")]
    pub d: usize,
    #[serde(serialize_with = "decimal_opt", skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
}

fn decimal<S: Serializer>(v: &usize, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn decimal_vec<S: Serializer>(v: &[usize], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn decimal_opt<S: Serializer>(v: &Option<usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

impl BoundParams {
    pub fn new(k: Vec<usize>, m: Vec<usize>, d: usize) -> Result<Self> {
        let p = BoundParams { k, m, d, s: None };
        p.validate()?;
        Ok(p)
    }

    pub fn single(k: usize, m: usize, d: usize) -> Result<Self> {
        Self::new(vec![k], vec![m], d)
    }

    pub fn with_polynomials(mut self, s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::domain("number of polynomials must be at least 1"));
        }
        self.s = Some(s);
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        if self.k.len() != self.m.len() {
            return Err(Error::domain(format!(
                "k has arity {} but m has arity {}",
                self.k.len(),
                self.m.len()
            )));
        }
        if self.k.is_empty() {
            return Err(Error::domain("at least one block is required"));
        }
        if self.d == 0 || self.k.iter().chain(&self.m).any(|&x| x == 0) {
            return Err(Error::domain("all bound parameters must be at least 1"));
        }
        Ok(())
    }
}

/// An exact bound value plus the record of how it was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub theorem: BoundKind,
    pub params: BoundParams,
    #[serde(serialize_with = "decimal_big")]
    pub value: BigUint,
    pub excluded: bool,
    #[serde(serialize_with = "display_opt")]
    pub target: Option<PartitionTuple>,
    pub asymptotic_note: String,
}

fn decimal_big<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn display_opt<S: Serializer>(v: &Option<PartitionTuple>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(t) => s.serialize_str(&t.to_string()),
        None => s.serialize_none(),
    }
}

impl BoundReport {
    fn new(theorem: BoundKind, params: BoundParams, value: BigUint, target: Option<PartitionTuple>) -> Self {
        BoundReport {
            theorem,
            params,
            value,
            excluded: false,
            target,
            asymptotic_note: theorem.asymptotic_note().to_string(),
        }
    }

    fn excluded(theorem: BoundKind, params: BoundParams, target: PartitionTuple) -> Self {
        BoundReport {
            excluded: true,
            ..Self::new(theorem, params, BigUint::zero(), Some(target))
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `(2d)^{m * len}`.
fn block_weight(d: usize, m: usize, len: usize) -> BigUint {
    BigUint::from(2 * d).pow((m * len) as u32)
}

/// `G(mu, lambda, d, m) = prod_i (2d)^{m_i len(lambda_i)} max_splits m^{mu_i}_{lambda_i', lambda_i''}`.
pub fn g_factor(mu: &PartitionTuple, lambda: &PartitionTuple, d: usize, m: &[usize]) -> Result<BigUint> {
    if mu.arity() != lambda.arity() || mu.arity() != m.len() {
        return Err(Error::domain("mu, lambda and m must have equal arity"));
    }
    if mu.weights() != lambda.weights() {
        return Err(Error::domain(format!("weights of {mu} and {lambda} differ")));
    }
    let mut g = BigUint::one();
    for ((mu_i, lam_i), &m_i) in mu.components().iter().zip(lambda.components()).zip(m) {
        let best = max_split_multiplicity(mu_i, lam_i)?;
        if best.is_zero() {
            return Ok(BigUint::zero());
        }
        g *= block_weight(d, m_i, lam_i.len()) * best;
    }
    Ok(g)
}

/// `D(k, m, d) = sum_i min(m_i k_i, d^{m_i})`.
pub fn critical_dimension(k: &[usize], m: &[usize], d: usize) -> usize {
    k.iter()
        .zip(m)
        .map(|(&ki, &mi)| {
            let cap = mi * ki;
            match d.checked_pow(mi as u32) {
                Some(p) => p.min(cap),
                None => cap,
            }
        })
        .sum()
}

/// `sum_{i=0}^{D-1} sum_{j=1}^{D-i} C(2s+1, j) 6^j`.
pub fn sa_factor(dim: usize, s: usize) -> BigUint {
    let mut total = BigUint::zero();
    for i in 0..dim {
        for j in 1..=dim - i {
            total += binomial(2 * s + 1, j) * BigUint::from(6u32).pow(j as u32);
        }
    }
    total
}

/// Evaluates the bounds under a cap on the number of summed terms.
#[derive(Clone, Copy, Debug)]
pub struct BoundCalculator {
    cap: u64,
}

impl Default for BoundCalculator {
    fn default() -> Self {
        BoundCalculator { cap: DEFAULT_TERM_CAP }
    }
}

impl BoundCalculator {
    pub fn new(cap: u64) -> Self {
        BoundCalculator { cap: cap.max(1) }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// `card(Par(k, (2d)^m))`, refused when it exceeds the cap.
    pub fn term_count(&self, k: &[usize], m: &[usize], d: usize) -> Result<BigUint> {
        let count: BigUint = k
            .iter()
            .zip(m)
            .map(|(&ki, &mi)| count_partitions(ki, Some(effective_threshold(ki, d, mi))))
            .product();
        if count > BigUint::from(self.cap) {
            return Err(Error::CapExceeded { terms: count.to_string(), cap: self.cap });
        }
        Ok(count)
    }

    fn default_target(params: &BoundParams, mu: Option<&PartitionTuple>) -> Result<PartitionTuple> {
        let mu = mu.cloned().unwrap_or_else(|| PartitionTuple::trivial(&params.k));
        if mu.weights() != params.k {
            return Err(Error::domain(format!(
                "target {mu} has weights {:?}, expected {:?}",
                mu.weights(),
                params.k
            )));
        }
        Ok(mu)
    }

    /// `sum_{lambda in Par(k, (2d)^m)} G(mu, lambda, d, m)`.
    ///
    /// The sum over the product set factorizes into a product of per-block sums.
    pub fn g_sum(&self, mu: &PartitionTuple, k: &[usize], m: &[usize], d: usize) -> Result<BigUint> {
        self.term_count(k, m, d)?;
        let mut total = BigUint::one();
        for ((mu_i, &ki), &mi) in mu.components().iter().zip(k).zip(m) {
            let lambdas = enumerate_partitions(ki, Some(effective_threshold(ki, d, mi)));
            let terms = exec::map(&lambdas, |lam| {
                max_split_multiplicity(mu_i, lam).map(|best| block_weight(d, mi, lam.len()) * best)
            });
            let block: BigUint = terms.into_iter().sum::<Result<BigUint>>()?;
            total *= block;
        }
        Ok(total)
    }

    /// Multiplicity bound for real affine varieties; zero and `excluded` outside `I(k, d, m)`.
    pub fn affine(&self, mu: Option<&PartitionTuple>, params: &BoundParams) -> Result<BoundReport> {
        let mu = Self::default_target(params, mu)?;
        self.term_count(&params.k, &params.m, params.d)?;
        if !is_admissible_tuple(&mu, params.d, &params.m)? {
            return Ok(BoundReport::excluded(BoundKind::Affine, params.clone(), mu));
        }
        let value = self.g_sum(&mu, &params.k, &params.m, params.d)?;
        Ok(BoundReport::new(BoundKind::Affine, params.clone(), value, Some(mu)))
    }

    /// Multiplicity bound for `P`-closed semi-algebraic sets with `s = card(P)`.
    pub fn semi_algebraic(&self, mu: Option<&PartitionTuple>, params: &BoundParams) -> Result<BoundReport> {
        let s = params
            .s
            .ok_or_else(|| Error::domain("the semi-algebraic bound needs the number of polynomials s"))?;
        let mu = Self::default_target(params, mu)?;
        self.term_count(&params.k, &params.m, params.d)?;
        if !is_admissible_tuple(&mu, params.d, &params.m)? {
            return Ok(BoundReport::excluded(BoundKind::SemiAlgebraic, params.clone(), mu));
        }
        let dim = critical_dimension(&params.k, &params.m, params.d);
        let value = sa_factor(dim, s) * self.g_sum(&mu, &params.k, &params.m, params.d)?;
        Ok(BoundReport::new(BoundKind::SemiAlgebraic, params.clone(), value, Some(mu)))
    }

    /// Complex affine varieties: exclusion against `I(k, 2d, 2m)`; the value is the
    /// real affine sum at degree `d` and doubled block widths `2m`.
    pub fn complex(&self, mu: Option<&PartitionTuple>, params: &BoundParams) -> Result<BoundReport> {
        let mu = Self::default_target(params, mu)?;
        let doubled: Vec<usize> = params.m.iter().map(|&x| 2 * x).collect();
        self.term_count(&params.k, &doubled, params.d)?;
        if !is_admissible_tuple(&mu, 2 * params.d, &doubled)? {
            return Ok(BoundReport::excluded(BoundKind::Complex, params.clone(), mu));
        }
        let value = self.g_sum(&mu, &params.k, &doubled, params.d)?;
        Ok(BoundReport::new(BoundKind::Complex, params.clone(), value, Some(mu)))
    }

    /// Complex projective varieties in `P^k`, for representations of `S_letters`
    /// (the homogeneous coordinates number `k + 1`). Exclusion is tested against
    /// `I(letters, 2d, 2)`; the value is `(floor(k/2) + 1)` times the complex affine
    /// value on `letters` coordinates with block width 1.
    pub fn projective(&self, k: usize, d: usize, letters: usize, mu: Option<&Partition>) -> Result<BoundReport> {
        let params = BoundParams::single(letters, 1, d)?;
        let mu = Self::default_target(&params, mu.cloned().map(PartitionTuple::single).as_ref())?;
        let affine = self.complex(Some(&mu), &params)?;
        let params = BoundParams { k: vec![k], m: vec![1], d, s: None };
        if affine.excluded {
            return Ok(BoundReport::excluded(BoundKind::Projective, params, mu));
        }
        let value = affine.value * BigUint::from(k / 2 + 1);
        Ok(BoundReport::new(BoundKind::Projective, params, value, Some(mu)))
    }

    /// `sum_{lambda in Par(k, (2d)^m)} prod_i (2d)^{m_i len(lambda_i)}`.
    pub fn equivariant(&self, params: &BoundParams) -> Result<BoundReport> {
        self.term_count(&params.k, &params.m, params.d)?;
        let mut total = BigUint::one();
        for (&ki, &mi) in params.k.iter().zip(&params.m) {
            let lambdas = enumerate_partitions(ki, Some(effective_threshold(ki, params.d, mi)));
            let block: BigUint = exec::map(&lambdas, |lam| block_weight(params.d, mi, lam.len()))
                .into_iter()
                .sum();
            total *= block;
        }
        Ok(BoundReport::new(BoundKind::Equivariant, params.clone(), total, None))
    }

    /// `sum_{p=0}^{k-1}` of the equivariant bound with `k = (1, ..., 1, p + 1)` (k ones)
    /// and `m = (1, ..., 1, m)`.
    pub fn projection_image(&self, k: usize, m: usize, d: usize) -> Result<BoundReport> {
        let params = BoundParams::single(k, m, d)?;
        let mut total = BigUint::zero();
        for p in 0..k {
            let fiber = fiber_power_params(k, m, d, p);
            total += self.equivariant(&fiber)?.value;
        }
        Ok(BoundReport::new(BoundKind::ProjectionImage, params, total, None))
    }
}

fn fiber_power_params(k: usize, m: usize, d: usize, p: usize) -> BoundParams {
    let mut ks = vec![1; k];
    ks.push(p + 1);
    let mut ms = vec![1; k];
    ms.push(m);
    BoundParams { k: ks, m: ms, d, s: None }
}
