//! Isotypic decompositions: finitely supported maps from partition tuples to
//! multiplicities.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, PartitionTuple};
use crate::tableaux::specht_dim;

/// A module for `S_{k_1} x ... x S_{k_l}` up to isomorphism.
///
/// Keys iterate in canonical partition order. Zero multiplicities are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    ambient: Vec<usize>,
    terms: BTreeMap<PartitionTuple, BigUint>,
}

impl Decomposition {
    /// The zero module over `S_k` for the given weight tuple.
    pub fn zero(ambient: Vec<usize>) -> Self {
        Decomposition {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    /// A single irreducible `S^lambda` of a single symmetric group.
    pub fn irreducible(lambda: Partition) -> Self {
        Self::irreducible_tuple(PartitionTuple::single(lambda))
    }

    pub fn irreducible_tuple(key: PartitionTuple) -> Self {
        let mut d = Decomposition::zero(key.weights());
        d.terms.insert(key, BigUint::one());
        d
    }

    pub fn from_terms<I>(ambient: Vec<usize>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PartitionTuple, BigUint)>,
    {
        let mut d = Decomposition::zero(ambient);
        for (k, m) in terms {
            d.add_term(k, m)?;
        }
        Ok(d)
    }

    /// Single-factor convenience: keys are lifted to one-component tuples.
    pub fn from_partition_terms<I>(k: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigUint)>,
    {
        Self::from_terms(
            vec![k],
            terms.into_iter().map(|(p, m)| (PartitionTuple::single(p), m)),
        )
    }

    pub fn ambient(&self) -> &[usize] {
        &self.ambient
    }

    pub fn add_term(&mut self, key: PartitionTuple, mult: BigUint) -> Result<()> {
        if key.weights() != self.ambient {
            return Err(Error::domain(format!(
                "key {key} does not match ambient {:?}",
                self.ambient
            )));
        }
        self.insert_unchecked(key, mult);
        Ok(())
    }

    pub(crate) fn insert_unchecked(&mut self, key: PartitionTuple, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.terms.entry(key).or_insert_with(BigUint::zero) += mult;
    }

    /// Multiplicity of `key`, zero when absent.
    pub fn multiplicity(&self, key: &PartitionTuple) -> BigUint {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// Multiplicity of `S^mu` in a single-factor decomposition.
    pub fn coefficient(&self, mu: &Partition) -> BigUint {
        self.terms
            .get(&PartitionTuple::single(mu.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PartitionTuple, &BigUint)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &PartitionTuple> {
        self.terms.keys()
    }

    /// Number of distinct irreducibles with nonzero multiplicity.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum mult(mu) * prod_i dim S^{mu_i}`.
    pub fn total_dim(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(k, m)| {
                k.components()
                    .iter()
                    .fold(m.clone(), |acc, p| acc * specht_dim(p))
            })
            .sum()
    }

    /// Direct sum.
    pub fn add(&self, other: &Decomposition) -> Result<Decomposition> {
        self.check_same_ambient(other)?;
        let mut out = self.clone();
        for (k, m) in &other.terms {
            out.insert_unchecked(k.clone(), m.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigUint) -> Decomposition {
        if factor.is_zero() {
            return Decomposition::zero(self.ambient.clone());
        }
        Decomposition {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(k, m)| (k.clone(), m * factor)).collect(),
        }
    }

    pub(crate) fn check_same_ambient(&self, other: &Decomposition) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::domain(format!(
                "ambient mismatch: {:?} vs {:?}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub(crate) fn single_factor(&self) -> Result<usize> {
        match self.ambient.as_slice() {
            [k] => Ok(*k),
            other => Err(Error::domain(format!(
                "operation needs a single symmetric group, ambient is {other:?}"
            ))),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decomposition serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))
    }
}

impl fmt::Display for Decomposition {
    /// `4*[3] + 2*[2,1]`; the zero module prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}*{k}")?;
        }
        Ok(())
    }
}

struct TermMap<'a>(&'a BTreeMap<PartitionTuple, BigUint>);

impl Serialize for TermMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, m) in self.0 {
            map.serialize_entry(&k.to_string(), &m.to_string())?;
        }
        map.end()
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        let ambient: Vec<String> = self.ambient.iter().map(|k| k.to_string()).collect();
        map.serialize_entry("ambient", &ambient)?;
        map.serialize_entry("terms", &TermMap(&self.terms))?;
        map.end()
    }
}

#[derive(Deserialize)]
struct RawDecomposition {
    ambient: Vec<String>,
    terms: BTreeMap<String, String>,
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawDecomposition::deserialize(deserializer)?;
        let ambient = raw
            .ambient
            .iter()
            .map(|s| s.parse::<usize>().map_err(de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let mut d = Decomposition::zero(ambient);
        for (k, m) in raw.terms {
            let key: PartitionTuple = k.parse().map_err(de::Error::custom)?;
            let mult: BigUint = m.parse().map_err(de::Error::custom)?;
            if mult.is_zero() {
                return Err(de::Error::custom(format!("zero multiplicity stored for {key}")));
            }
            d.add_term(key, mult).map_err(de::Error::custom)?;
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PartitionTuple {
        s.parse().unwrap()
    }

    #[test]
    fn display_and_json_are_canonical() {
        let d = Decomposition::from_terms(
            vec![3],
            [(t("[2,1]"), BigUint::from(2u32)), (t("[3]"), BigUint::from(4u32))],
        )
        .unwrap();
        assert_eq!(d.to_string(), "4*[3] + 2*[2,1]");
        assert_eq!(
            d.to_json(),
            r#"{"ambient":["3"],"terms":{"[3]":"4","[2,1]":"2"}}"#
        );
        assert_eq!(Decomposition::from_json(&d.to_json()).unwrap(), d);
        assert_eq!(Decomposition::zero(vec![2]).to_string(), "0");
    }

    #[test]
    fn rejects_mismatched_keys() {
        let mut d = Decomposition::zero(vec![3]);
        assert!(d.add_term(t("[2]"), BigUint::one()).is_err());
        assert!(Decomposition::from_json(r#"{"ambient":["2"],"terms":{"[3]":"1"}}"#).is_err());
        assert!(Decomposition::from_json(r#"{"ambient":["2"],"terms":{"[2]":"0"}}"#).is_err());
    }

    #[test]
    fn zero_multiplicities_are_dropped() {
        let mut d = Decomposition::zero(vec![2]);
        d.add_term(t("[2]"), BigUint::zero()).unwrap();
        assert!(d.is_zero());
        assert!(d.scale(&BigUint::zero()).is_zero());
    }

    #[test]
    fn total_dim_of_tuples() {
        let d = Decomposition::from_terms(vec![3, 2], [(t("[2,1];[1,1]"), BigUint::from(3u32))]).unwrap();
        assert_eq!(d.total_dim(), BigUint::from(6u32));
    }

    #[test]
    fn sum_requires_equal_ambient() {
        let a = Decomposition::irreducible(Partition::row(2));
        let b = Decomposition::irreducible(Partition::row(3));
        assert!(a.add(&b).is_err());
        assert_eq!(a.add(&a).unwrap().to_string(), "2*[2]");
    }
}
