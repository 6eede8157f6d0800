//! Finitely supported integer combinations of Schur classes.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;
use crate::poly::parse_coeff;

/// `Σ c_λ s_λ`, stored without zero coefficients and iterated in partition
/// order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SchurVector(BTreeMap<Partition, BigInt>);

impl SchurVector {
    pub fn zero() -> Self {
        SchurVector(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::unit(Partition::empty())
    }

    /// The single basis element `s_λ`.
    pub fn unit(lambda: Partition) -> Self {
        Self::term(lambda, BigInt::one())
    }

    pub fn term(lambda: Partition, c: BigInt) -> Self {
        let mut v = Self::zero();
        v.add_term(lambda, c);
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (Partition, BigInt)>>(pairs: I) -> Self {
        let mut v = Self::zero();
        for (p, c) in pairs {
            v.add_term(p, c);
        }
        v
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.0.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.0.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.0.keys()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SchurVector(self.0.iter().map(|(p, x)| (p.clone(), x * c)).collect())
    }

    /// Keeps only the Schur classes indexed by partitions in the `rows x cols`
    /// box.
    pub fn truncate_to_box(&self, rows: usize, cols: usize) -> Self {
        SchurVector(
            self.0
                .iter()
                .filter(|(p, _)| p.fits_in_box(rows, cols))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        )
    }

    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.0.keys().all(|p| p.fits_in_box(rows, cols))
    }

    /// Applies a coefficient-preserving relabelling of the basis, with a sign
    /// per basis element.
    pub fn map_basis<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Partition) -> (Partition, bool),
    {
        let mut out = Self::zero();
        for (p, c) in &self.0 {
            let (q, negate) = f(p);
            out.add_term(q, if negate { -c } else { c.clone() });
        }
        out
    }

    /// Homogeneous component of weight `w`.
    pub fn degree_part(&self, w: u32) -> Self {
        SchurVector(
            self.0
                .iter()
                .filter(|(p, _)| p.weight() == w)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        )
    }
}

impl Add for &SchurVector {
    type Output = SchurVector;
    fn add(self, rhs: &SchurVector) -> SchurVector {
        let mut out = self.clone();
        for (p, c) in &rhs.0 {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SchurVector {
    type Output = SchurVector;
    fn sub(self, rhs: &SchurVector) -> SchurVector {
        let mut out = self.clone();
        for (p, c) in &rhs.0 {
            out.add_term(p.clone(), -c);
        }
        out
    }
}

impl Neg for &SchurVector {
    type Output = SchurVector;
    fn neg(self) -> SchurVector {
        SchurVector(self.0.iter().map(|(p, c)| (p.clone(), -c)).collect())
    }
}

impl FromIterator<(Partition, BigInt)> for SchurVector {
    fn from_iter<I: IntoIterator<Item = (Partition, BigInt)>>(iter: I) -> Self {
        Self::from_pairs(iter)
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.0.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}·")?;
            }
            write!(f, "s{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryRepr {
    partition: Partition,
    coeff: String,
}

impl Serialize for SchurVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<EntryRepr> = self
            .0
            .iter()
            .map(|(p, c)| EntryRepr {
                partition: p.clone(),
                coeff: c.to_string(),
            })
            .collect();
        entries.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SchurVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<EntryRepr>::deserialize(deserializer)?;
        let mut v = SchurVector::zero();
        for e in entries {
            let c = parse_coeff(&e.coeff).map_err(serde::de::Error::custom)?;
            v.add_term(e.partition, c);
        }
        Ok(v)
    }
}
