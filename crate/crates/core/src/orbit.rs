//! Zero-dimensional symmetric sets described by their orbit types, and the
//! worked example `V_k = {x : sum x_i^2 (x_i - 1)^2 <= eps}` whose components
//! sit around the points of `{0, 1}^k`.
//!
//! An orbit with stabilizer `S_lambda` contributes the permutation module `M^lambda`
//! to `H^0`. Only orbit types matter, so no coordinates are stored.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::exec;
use crate::induction::{sign_twist, young_module};
use crate::partition::Partition;
use crate::tableaux::factorial;

/// One orbit: an opaque label and the Young subgroup fixing a point of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub label: String,
    pub stabilizer: Partition,
}

/// A finite family of labelled orbits of `S_k`. Labels are unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSpec {
    k: usize,
    orbits: BTreeMap<String, Partition>,
}

#[derive(Serialize, Deserialize)]
struct RawOrbit {
    label: String,
    stabilizer: String,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    k: usize,
    orbits: Vec<RawOrbit>,
}

impl OrbitSpec {
    pub fn new(k: usize, orbits: impl IntoIterator<Item = Orbit>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for o in orbits {
            if o.stabilizer.weight() != k {
                return Err(Error::domain(format!(
                    "orbit {:?} has stabilizer {} of weight {}, expected {k}",
                    o.label,
                    o.stabilizer,
                    o.stabilizer.weight()
                )));
            }
            if map.insert(o.label.clone(), o.stabilizer).is_some() {
                return Err(Error::domain(format!("duplicate orbit label {:?}", o.label)));
            }
        }
        Ok(OrbitSpec { k, orbits: map })
    }

    pub fn empty(k: usize) -> Self {
        OrbitSpec { k, orbits: BTreeMap::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Orbits in label order.
    pub fn orbits(&self) -> impl Iterator<Item = Orbit> + '_ {
        self.orbits.iter().map(|(label, stabilizer)| Orbit {
            label: label.clone(),
            stabilizer: stabilizer.clone(),
        })
    }

    pub fn stabilizer(&self, label: &str) -> Option<&Partition> {
        self.orbits.get(label)
    }

    /// The sub-family with the given labels; unknown labels are an error.
    pub fn restrict<'a>(&self, labels: impl IntoIterator<Item = &'a str>) -> Result<OrbitSpec> {
        let mut out = OrbitSpec::empty(self.k);
        for l in labels {
            let stab = self
                .orbits
                .get(l)
                .ok_or_else(|| Error::domain(format!("unknown orbit label {l:?}")))?;
            out.orbits.insert(l.to_string(), stab.clone());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        let raw = RawSpec {
            k: self.k,
            orbits: self
                .orbits
                .iter()
                .map(|(l, s)| RawOrbit { label: l.clone(), stabilizer: s.to_string() })
                .collect(),
        };
        serde_json::to_string(&raw).expect("orbit spec serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawSpec =
            serde_json::from_str(s).map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))?;
        let orbits = raw
            .orbits
            .into_iter()
            .map(|o| {
                Ok(Orbit {
                    stabilizer: o.stabilizer.parse()?,
                    label: o.label,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        OrbitSpec::new(raw.k, orbits)
    }
}

/// `H^0` as a sum of permutation modules, one per orbit.
pub fn h0_decomposition(spec: &OrbitSpec) -> Decomposition {
    let stabs: Vec<&Partition> = spec.orbits.values().collect();
    exec::map(&stabs, |s| young_module(s))
        .into_iter()
        .fold(Decomposition::zero(vec![spec.k]), |acc, m| {
            acc.add(&m).expect("all orbits share the ambient group")
        })
}

/// The orbits of the example: orbit `i` holds the points with `i` zero
/// coordinates, fixed by `S_i x S_{k-i}`.
pub fn example_variety(k: usize) -> Result<OrbitSpec> {
    if k == 0 {
        return Err(Error::domain("the example needs k >= 1"));
    }
    OrbitSpec::new(
        k,
        (0..=k).map(|i| Orbit {
            label: i.to_string(),
            stabilizer: Partition::new(vec![i, k - i]),
        }),
    )
}

/// The projective variant has the same `H^0` as the affine example.
pub fn real_projective_example(k: usize) -> Result<OrbitSpec> {
    example_variety(k)
}

/// `2 mu_1 - k + 1` for a partition with at most two rows.
pub fn closed_form_multiplicity(mu: &Partition) -> Result<i64> {
    if mu.len() > 2 {
        return Err(Error::domain(format!("{mu} has more than two rows")));
    }
    let k = mu.weight() as i64;
    Ok(2 * mu.part(0) as i64 - k + 1)
}

/// Both sides of `k! * sum_{mu_1 + mu_2 = k} (mu_1 - mu_2 + 1)^2 / ((mu_1 + 1)! mu_2!) = 2^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerIdentity {
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl PowerIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn verify_power_identity(k: usize) -> Result<PowerIdentity> {
    if k == 0 {
        return Err(Error::domain("the identity is stated for k >= 1"));
    }
    let big = |n: BigUint| BigInt::from(n);
    let mut sum = BigRational::zero();
    for mu2 in 0..=k / 2 {
        let mu1 = k - mu2;
        let diff = BigInt::from(mu1 - mu2 + 1);
        let denom = big(factorial(mu1 + 1)) * big(factorial(mu2));
        sum += BigRational::new(&diff * &diff, denom);
    }
    let total = sum * BigRational::from_integer(big(factorial(k)));
    assert!(total.is_integer(), "the identity's left side is an integer");
    let lhs = total
        .to_integer()
        .to_biguint()
        .expect("a sum of positive terms is positive");
    Ok(PowerIdentity { lhs, rhs: BigUint::one() << k })
}

/// `H^{k-1}` of the example's boundary hypersurface: the sign twist of `H^0`.
pub fn top_cohomology(h0: &Decomposition) -> Decomposition {
    sign_twist(h0)
}

/// `m(S1) + m(S2) <= m(S1 ∪ S2) + m(S1 ∩ S2)` for every irreducible.
pub fn mv_check(s1: &Decomposition, s2: &Decomposition, union: &Decomposition, inter: &Decomposition) -> Result<bool> {
    s1.check_same_ambient(s2)?;
    s1.check_same_ambient(union)?;
    s1.check_same_ambient(inter)?;
    let mut keys: Vec<_> = s1.support().chain(s2.support()).collect();
    keys.sort();
    keys.dedup();
    Ok(keys.into_iter().all(|key| {
        s1.multiplicity(key) + s2.multiplicity(key) <= union.multiplicity(key) + inter.multiplicity(key)
    }))
}

fn merge(a: &OrbitSpec, b: &OrbitSpec, keep_all: bool) -> Result<OrbitSpec> {
    if a.k != b.k {
        return Err(Error::domain(format!("orbit families over S_{} and S_{}", a.k, b.k)));
    }
    let mut out = OrbitSpec::empty(a.k);
    for (label, stab) in &a.orbits {
        match b.orbits.get(label) {
            Some(other) if other != stab => {
                return Err(Error::domain(format!(
                    "orbit {label:?} has stabilizer {stab} in one family and {other} in the other"
                )))
            }
            Some(_) => {
                out.orbits.insert(label.clone(), stab.clone());
            }
            None if keep_all => {
                out.orbits.insert(label.clone(), stab.clone());
            }
            None => {}
        }
    }
    if keep_all {
        for (label, stab) in &b.orbits {
            out.orbits.entry(label.clone()).or_insert_with(|| stab.clone());
        }
    }
    Ok(out)
}

pub fn orbit_union(a: &OrbitSpec, b: &OrbitSpec) -> Result<OrbitSpec> {
    merge(a, b, true)
}

pub fn orbit_intersection(a: &OrbitSpec, b: &OrbitSpec) -> Result<OrbitSpec> {
    merge(a, b, false)
}

/// Degree-zero union bound: `m(S_1 ∪ ... ∪ S_n) <= sum_j m(S_j)` for every irreducible.
pub fn union_bound_check(family: &[OrbitSpec]) -> Result<bool> {
    let Some(first) = family.first() else {
        return Ok(true);
    };
    let mut union = first.clone();
    let mut sum = h0_decomposition(first);
    for s in &family[1..] {
        union = orbit_union(&union, s)?;
        sum = sum.add(&h0_decomposition(s))?;
    }
    let whole = h0_decomposition(&union);
    let holds = whole.iter().all(|(key, m)| *m <= sum.multiplicity(key));
    Ok(holds)
}
